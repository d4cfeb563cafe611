#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanostrat/binary_form.hpp"
#include "fanostrat/field.hpp"
#include "fanostrat/matrix.hpp"

namespace fanostrat {

using Exponent = std::vector<int>;

/// Graded-lex, largest first: higher total degree, then lexicographically
/// larger exponent vector (x0 > x1 > ...).
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in a fixed number of variables. No stored term has a
/// zero coefficient.
class MultiPoly {
   public:
    using Terms = std::map<Exponent, Scalar, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(const Field& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    static MultiPoly variable(const Field& field, std::size_t nvars, std::size_t index);
    static MultiPoly constant(const Field& field, std::size_t nvars, const Scalar& c);
    /// Text grammar: terms `c*x0^e0*...*xk^ek` joined by + or -, with
    /// coefficients `p` or `p/q`. Variables are x0, x1, ...; nvars defaults to
    /// one more than the largest index seen.
    static MultiPoly parse(std::string_view text, const Field& field, std::optional<std::size_t> nvars = std::nullopt);

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }

    void add_term(const Exponent& e, const Scalar& c);
    Scalar coefficient(const Exponent& e) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous(int degree) const;

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const Scalar& c) const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly pow(unsigned e) const;

    MultiPoly derivative(std::size_t var) const;
    Scalar evaluate(const Vec& point) const;
    /// f(images[0], ..., images[nvars-1]); all images share one ring.
    MultiPoly compose(const std::vector<MultiPoly>& images) const;
    /// g(y) = f(y T): x_j = sum_k y_k T(k, j).
    MultiPoly substitute_linear(const ExactMatrix& transform) const;
    /// Restriction to the line s*p0 + t*p1 as a form of the given degree in (s, t).
    BinaryForm restrict_to_line(const Vec& p0, const Vec& p1, int degree) const;

    bool operator==(const MultiPoly& rhs) const;
    std::string to_string() const;

   private:
    void check_ring(const MultiPoly& rhs) const;

    Field field_;
    std::size_t nvars_ = 0;
    Terms terms_;
};

}  // namespace fanostrat
