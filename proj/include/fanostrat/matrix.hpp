#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fanostrat/field.hpp"

namespace fanostrat {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(const Field& field, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(const Field& field, std::size_t n);
    static ExactMatrix from_ints(const Field& field, const std::vector<std::vector<long long>>& rows);
    /// Each vector becomes one column.
    static ExactMatrix from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec column(std::size_t c) const;
    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    Vec apply(const Vec& v) const;
    /// Horizontal concatenation.
    ExactMatrix hconcat(const ExactMatrix& rhs) const;
    ExactMatrix vconcat(const ExactMatrix& rhs) const;

    bool operator==(const ExactMatrix& rhs) const;
    std::string to_string() const;

   private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

enum class Elimination {
    Auto,          // fraction-free over Q, Gauss-Jordan over F_p
    FractionFree,  // Bareiss-style integer-preserving Gauss-Jordan (Q only)
    Naive,         // plain Gauss-Jordan in the field
};

struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    /// One vector per free column, in increasing column order. Each has a 1
    /// in its own free column and 0 in every other free column.
    std::vector<Vec> kernel;
};

/// Reduced row echelon form. Pivot search scans each column top to bottom.
ExactMatrix reduced_echelon(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr,
                            Elimination method = Elimination::Auto);
RankKernel rank_and_kernel(const ExactMatrix& m, Elimination method = Elimination::Auto);
/// Rank only; uses a packed machine-word kernel over F_p.
std::size_t rank(const ExactMatrix& m);
/// Row-major residues in [0, p); destroys the input.
std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t p);

struct SpanMembership {
    bool solvable = false;
    /// span * coefficients == target when solvable.
    Vec coefficients;
    /// When not solvable: y with y * span == 0 and y . target != 0.
    Vec certificate;
};

std::vector<SpanMembership> solve_in_span(const std::vector<Vec>& targets, const ExactMatrix& span);

Scalar dot(const Vec& a, const Vec& b);
bool is_zero_vector(const Vec& v);

}  // namespace fanostrat
