#include <algorithm>
#include <set>

#include "doctest.h"
#include "fanostrat/errors.hpp"
#include "fanostrat/strata.hpp"

using namespace fanostrat;

namespace {

SplittingType T(int n, int d, std::vector<int> e) { return SplittingType(n, d, std::move(e)); }

// Brute force over all integer vectors in the box, independent of the
// recursive enumerator.
std::set<std::vector<int>> brute_types(int n, int d) {
    std::set<std::vector<int>> out;
    const int len = n - 2;
    std::vector<int> v(static_cast<std::size_t>(len), 2 - d);
    while (true) {
        int sum = 0;
        bool sorted = true;
        for (int k = 0; k < len; ++k) {
            sum += v[k];
            if (k && v[k] < v[k - 1]) sorted = false;
        }
        if (sorted && sum == n - d - 1) out.insert(v);
        int k = 0;
        while (k < len && v[k] == 1) v[k++] = 2 - d;
        if (k == len) break;
        ++v[k];
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_types examples") {
    auto t57 = enumerate_types(5, 7);
    std::vector<std::vector<int>> got;
    for (auto& t : t57) got.push_back(t.entries());
    std::vector<std::vector<int>> expect{{-1, -1, -1}, {-2, -1, 0}, {-2, -2, 1}, {-3, 0, 0},
                                         {-3, -1, 1},  {-4, 0, 1},  {-5, 1, 1}};
    CHECK(got == expect);

    auto t43 = enumerate_types(4, 3);
    REQUIRE(t43.size() == 2);
    CHECK(t43[0].entries() == std::vector<int>{0, 0});
    CHECK(t43[1].entries() == std::vector<int>{-1, 1});

    auto t31 = enumerate_types(3, 1);
    REQUIRE(t31.size() == 1);
    CHECK(t31[0].entries() == std::vector<int>{1});
}

TEST_CASE("enumeration agrees with brute force") {
    for (int n = 3; n <= 7; ++n)
        for (int d = 1; d <= 7; ++d) {
            std::set<std::vector<int>> got;
            for (auto& t : enumerate_types(n, d)) got.insert(t.entries());
            CHECK(got == brute_types(n, d));
        }
}

TEST_CASE("admissibility is enforced") {
    CHECK_THROWS_AS(T(5, 5, {-1, 0, 1}), DomainError);  // sum 0 != -1
    CHECK_THROWS_AS(T(5, 5, {-3, 0, 2}), DomainError);  // entry > 1
    CHECK_THROWS_AS(T(5, 5, {-1, 0}), DomainError);     // wrong length
    CHECK_THROWS_AS(enumerate_types(2, 3), DomainError);
    CHECK(T(5, 5, {1, -1, -1}).entries() == std::vector<int>{-1, -1, 1});
}

TEST_CASE("u values") {
    CHECK(expected_codimension(T(5, 7, {-5, 1, 1})) == 10);
    CHECK(expected_codimension(T(5, 7, {-1, -1, -1})) == 0);
    CHECK(expected_codimension(T(5, 5, {-1, -1, 1})) == 2);
    std::vector<int> us;
    for (auto& t : enumerate_types(5, 7)) us.push_back(expected_codimension(t));
    CHECK(us == std::vector<int>{0, 1, 4, 4, 5, 7, 10});
}

TEST_CASE("t_i and r_i") {
    for (int n = 4; n <= 8; ++n) {
        SplittingType a(n, 3, [&] {
            std::vector<int> e(static_cast<std::size_t>(n - 2), 1);
            e[0] = -1;
            return e;
        }());
        CHECK(twisted_sections(a, -1) == n - 3);
        CHECK(expected_rank(a, -1) == 2);
    }
    const auto a = T(5, 5, {-1, -1, 1});
    CHECK(twisted_sections(a, -1) == 1);
    CHECK(expected_rank(a, -1) == 3);
    for (int n = 3; n <= 7; ++n)
        for (int d = 1; d <= 7; ++d)
            for (auto& t : enumerate_types(n, d)) CHECK(twisted_sections(t, d - 1) == (n - 2) * d + (n - d - 1));
}

TEST_CASE("expected_dimension") {
    // The quintic-fourfold table prints 4 here; the defining sum gives 3 + 3.
    auto r = expected_dimension(T(5, 5, {-3, 1, 1}));
    CHECK(r.codim == 6);
    CHECK(r.generically_empty);
    CHECK(r.dimension_bound == 2);
    CHECK(r.bound_shape == "completely_unbalanced");

    auto bal = expected_dimension(balanced_type(6, 4));
    CHECK(bal.codim == 0);
    CHECK(bal.expected_dim == 2 * 6 - 4 - 3);
    CHECK_FALSE(bal.generically_empty);

    // Cubic shape (-1,1,...,1) with n = 6.
    auto cub = expected_dimension(T(6, 3, {-1, 1, 1, 1}));
    CHECK(cub.dimension_bound == 3);

    auto almost = expected_dimension(T(6, 5, {-2, 0, 1, 1}));
    CHECK(almost.dimension_bound == 5);
    CHECK(almost.bound_shape == "almost_completely_unbalanced");
    CHECK(expected_dimension(T(6, 5, {-1, -1, 1, 1})).dimension_bound == 5);
    CHECK_FALSE(expected_dimension(T(6, 5, {-1, 0, 0, 1})).dimension_bound);
}

TEST_CASE("poset for (5,7)") {
    auto p = build_poset(5, 7);
    auto idx = [&](std::vector<int> e) {
        auto it = std::find_if(p.nodes.begin(), p.nodes.end(), [&](auto& t) { return t.entries() == e; });
        REQUIRE(it != p.nodes.end());
        return static_cast<std::size_t>(it - p.nodes.begin());
    };
    const auto a300 = idx({-3, 0, 0}), a221 = idx({-2, -2, 1}), a210 = idx({-2, -1, 0}), a311 = idx({-3, -1, 1});
    CHECK_FALSE(is_specialization(p.nodes[a300], p.nodes[a221]));
    CHECK_FALSE(is_specialization(p.nodes[a221], p.nodes[a300]));
    std::set<std::size_t> lower;
    for (auto [lo, hi] : p.covers)
        if (hi == a210) lower.insert(lo);
    CHECK(lower == std::set<std::size_t>{a300, a221});
    CHECK(is_specialization(p.nodes[a311], p.nodes[a210]));

    const std::string dot = emit_hasse_dot(p);
    CHECK(dot.rfind("digraph strata {", 0) == 0);
    CHECK(dot.find("\"(-5,1,1)\" [label=\"(-5,1,1) | u=10\"]") != std::string::npos);
    CHECK(dot.find("\"(-3,0,0)\" -> \"(-2,-1,0)\";") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(p.covers.size()));
}

TEST_CASE("order properties on every small (n,d)") {
    for (int n = 3; n <= 8; ++n)
        for (int d = 1; d <= 9; ++d) {
            auto types = enumerate_types(n, d);
            const auto& top = types.front();
            for (auto& a : types) {
                CHECK((expected_codimension(a) == 0) == a.is_balanced());
                CHECK(is_specialization(a, top));
                CHECK(is_specialization(a, a));
                // Second difference of t_i recovers multiplicities.
                for (int i = -1; i <= d - 2; ++i) {
                    const int second = twisted_sections(a, i) - 2 * twisted_sections(a, i - 1) + twisted_sections(a, i - 2);
                    CHECK(second == a.count(-i));
                }
                for (int i = -1; i <= d; ++i) CHECK(twisted_sections(a, i + 1) >= twisted_sections(a, i));
            }
            CHECK(std::count_if(types.begin(), types.end(), [](auto& t) { return t.is_balanced(); }) == 1);
            for (auto& a : types)
                for (auto& b : types) {
                    if (is_specialization(a, b)) CHECK(expected_codimension(a) >= expected_codimension(b));
                    if (is_specialization(a, b) && is_specialization(b, a)) CHECK(a == b);
                    for (auto& c : types)
                        if (is_specialization(a, b) && is_specialization(b, c)) CHECK(is_specialization(a, c));
                }
        }
}

TEST_CASE("covers form the transitive reduction") {
    for (int n = 4; n <= 7; ++n)
        for (int d = 2; d <= 7; ++d) {
            auto p = build_poset(n, d);
            const std::size_t k = p.nodes.size();
            // Reachability through covers equals the order relation.
            std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
            for (std::size_t i = 0; i < k; ++i) reach[i][i] = true;
            for (auto [lo, hi] : p.covers) reach[lo][hi] = true;
            for (std::size_t m = 0; m < k; ++m)
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        if (reach[i][m] && reach[m][j]) reach[i][j] = true;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) CHECK(reach[i][j] == is_specialization(p.nodes[i], p.nodes[j]));
        }
}
