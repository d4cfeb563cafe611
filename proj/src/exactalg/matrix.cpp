#include "fanostrat/matrix.hpp"

#include <sstream>

#include "fanostrat/errors.hpp"

namespace fanostrat {

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

ExactMatrix ExactMatrix::from_ints(const Field& field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    ExactMatrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DomainError("ragged matrix literal");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& columns) {
    ExactMatrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DomainError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Vec ExactMatrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec ExactMatrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DomainError("matrix product dimension mismatch");
    if (!(field_ == rhs.field_)) throw FieldMismatch(field_.to_string(), rhs.field_.to_string());
    ExactMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

Vec ExactMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
    Vec out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw DomainError("hconcat row mismatch");
    ExactMatrix out(field_, rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
    }
    return out;
}

ExactMatrix ExactMatrix::vconcat(const ExactMatrix& rhs) const {
    if (cols_ != rhs.cols_) throw DomainError("vconcat column mismatch");
    ExactMatrix out(field_, rows_ + rhs.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < rhs.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(rows_ + r, c) = rhs(r, c);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).to_string();
        os << "]\n";
    }
    return os.str();
}

namespace {

ExactMatrix rref_naive(const ExactMatrix& m, std::vector<std::size_t>& pivots) {
    ExactMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        std::size_t pr = top;
        while (pr < rows && a(pr, c).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != top)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(pr, j), a(top, j));
        const Scalar inv = a(top, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a(top, j) = a(top, j) * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == top || a(r, c).is_zero()) continue;
            const Scalar factor = a(r, c);
            for (std::size_t j = c; j < cols; ++j) a(r, j) -= factor * a(top, j);
        }
        pivots.push_back(c);
        ++top;
    }
    return a;
}

// Integer-preserving Gauss-Jordan: rows are scaled to integers, every update
// is divided exactly by the previous pivot so entries stay minors of the input.
ExactMatrix rref_fraction_free(const ExactMatrix& m, std::vector<std::size_t>& pivots) {
    const Field& field = m.field();
    if (!field.is_rational()) throw DomainError("fraction-free elimination requires Q");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).rational().get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            const mpq_class& q = m(r, c).rational();
            a[r * cols + c] = q.get_num() * (l / q.get_den());
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

    mpz_class prev = 1;
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        std::size_t pr = top;
        while (pr < rows && at(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != top)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pr, j), at(top, j));
        const mpz_class piv = at(top, c);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == top) continue;
            const mpz_class factor = at(r, c);
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                mpz_class v = piv * at(r, j) - factor * at(top, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(r, j) = v;
            }
            at(r, c) = 0;
        }
        // Every earlier pivot diagonal entry now equals piv as well.
        prev = piv;
        pivots.push_back(c);
        ++top;
    }

    ExactMatrix out(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const bool is_pivot_row = r < pivots.size();
        for (std::size_t c = 0; c < cols; ++c) {
            if (is_pivot_row)
                out(r, c) = field.from_rational(mpq_class(at(r, c), at(r, pivots[r])));
            else
                out(r, c) = field.zero();
        }
    }
    return out;
}

}  // namespace

ExactMatrix reduced_echelon(const ExactMatrix& m, std::vector<std::size_t>* pivots, Elimination method) {
    std::vector<std::size_t> piv;
    ExactMatrix out;
    if (method == Elimination::Auto)
        method = m.field().is_rational() ? Elimination::FractionFree : Elimination::Naive;
    if (method == Elimination::FractionFree)
        out = rref_fraction_free(m, piv);
    else
        out = rref_naive(m, piv);
    if (pivots) *pivots = std::move(piv);
    return out;
}

RankKernel rank_and_kernel(const ExactMatrix& m, Elimination method) {
    RankKernel result;
    const ExactMatrix r = reduced_echelon(m, &result.pivot_columns, method);
    result.rank = result.pivot_columns.size();
    const Field& field = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : result.pivot_columns) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), field.zero());
        v[free] = field.one();
        for (std::size_t k = 0; k < result.pivot_columns.size(); ++k) v[result.pivot_columns[k]] = -r(k, free);
        result.kernel.push_back(std::move(v));
    }
    return result;
}

std::size_t rank(const ExactMatrix& m) {
    const Field& field = m.field();
    if (field.is_rational()) return rank_and_kernel(m).rank;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).residue();
    return rank_mod_p(a, rows, cols, field.characteristic());
}

std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t p) {
    const bool small = p < (1ULL << 32);
    auto mul = [&](std::uint64_t x, std::uint64_t y) { return small ? x * y % p : mulmod(x, y, p); };
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows; ++c) {
        std::size_t pr = top;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != top)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[pr * cols + j], a[top * cols + j]);
        const std::uint64_t inv = invmod(a[top * cols + c], p);
        for (std::size_t r = top + 1; r < rows; ++r) {
            const std::uint64_t x = a[r * cols + c];
            if (x == 0) continue;
            const std::uint64_t factor = mul(x, inv);
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t t = mul(factor, a[top * cols + j]);
                std::uint64_t& y = a[r * cols + j];
                y = y >= t ? y - t : y + (p - t);
            }
        }
        ++top;
    }
    return top;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("dot product length mismatch");
    if (a.empty()) return Field::rationals().zero();
    Scalar acc = a.front().field().zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

bool is_zero_vector(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<SpanMembership> solve_in_span(const std::vector<Vec>& targets, const ExactMatrix& span) {
    const Field& field = span.field();
    std::vector<SpanMembership> out;
    RankKernel left;
    bool have_left = false;
    for (const auto& t : targets) {
        if (t.size() != span.rows()) throw DomainError("solve_in_span: target length mismatch");
        SpanMembership res;
        ExactMatrix aug = span.hconcat(ExactMatrix::from_columns(field, span.rows(), {t}));
        std::vector<std::size_t> piv;
        ExactMatrix r = reduced_echelon(aug, &piv);
        if (piv.empty() || piv.back() != span.cols()) {
            res.solvable = true;
            res.coefficients.assign(span.cols(), field.zero());
            for (std::size_t k = 0; k < piv.size(); ++k) res.coefficients[piv[k]] = r(k, span.cols());
        } else {
            if (!have_left) {
                left = rank_and_kernel(span.transpose());
                have_left = true;
            }
            for (const auto& y : left.kernel) {
                if (!dot(y, t).is_zero()) {
                    res.certificate = y;
                    break;
                }
            }
            if (res.certificate.empty()) throw ConsistencyError("no certificate for an unsolvable target");
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace fanostrat
