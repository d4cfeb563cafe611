#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace fanostrat {

/// Determinant over a commutative ring without division, by Laplace
/// expansion along rows with memoized column subsets. `one` is the value of
/// the empty determinant. Requires T to provide +, binary and unary -, and *.
template <class T>
T cofactor_determinant(const std::vector<std::vector<T>>& m, const T& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    if (n > 20) throw std::invalid_argument("cofactor_determinant: matrix too large");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("cofactor_determinant: not square");

    // memo[mask] = determinant of rows [n - popcount(mask), n) restricted to the
    // columns in mask.
    std::map<std::uint32_t, T> memo;
    auto rec = [&](auto&& self, std::uint32_t mask, std::size_t row) -> T {
        if (row == n) return one;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        bool have = false;
        T acc = one;
        int sign_pos = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            T term = m[row][c] * self(self, mask & ~(1u << c), row + 1);
            if (!have) {
                acc = (sign_pos % 2 == 0) ? term : -term;
                have = true;
            } else {
                acc = (sign_pos % 2 == 0) ? acc + term : acc - term;
            }
            ++sign_pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (n == 32 ? 0xffffffffu : ((1u << n) - 1)), 0);
}

}  // namespace fanostrat
