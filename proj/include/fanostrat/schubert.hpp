#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fanostrat/strata.hpp"

namespace fanostrat {

/// Two-row partition (a, b), a >= b >= 0, indexing sigma_{a,b}.
using Partition = std::pair<int, int>;

/// Integer combination of Schubert classes sigma_{a,b} in the Chow ring of
/// G(1, n), partitions inside the 2 x (n-1) box. Zero coefficients are never
/// stored.
class ChowClass {
   public:
    ChowClass() = default;
    explicit ChowClass(int n);

    static ChowClass one(int n) { return sigma(n, 0, 0); }
    /// sigma_{a,b}; zero when (a, b) leaves the box, DomainError if b > a.
    static ChowClass sigma(int n, int a, int b = 0);

    int n() const noexcept { return n_; }
    const std::map<Partition, mpz_class>& terms() const noexcept { return terms_; }
    mpz_class coefficient(int a, int b) const;
    void add_term(Partition p, const mpz_class& c);

    bool is_zero() const noexcept { return terms_.empty(); }
    /// All supported partitions have size k (vacuously true for zero).
    bool is_homogeneous_of(int k) const;
    ChowClass component(int k) const;
    /// Coefficient of the point class sigma_{n-1,n-1}.
    mpz_class degree() const { return coefficient(n_ - 1, n_ - 1); }
    bool has_negative_coefficient() const;

    ChowClass operator+(const ChowClass& rhs) const;
    ChowClass operator-(const ChowClass& rhs) const;
    ChowClass operator-() const;
    ChowClass operator*(const ChowClass& rhs) const;
    ChowClass operator*(const mpz_class& c) const;
    ChowClass& operator+=(const ChowClass& rhs);

    bool operator==(const ChowClass& rhs) const { return n_ == rhs.n_ && terms_ == rhs.terms_; }

    /// "3250*s[4,2] + 2425*s[3,3]"; "0" for zero.
    std::string to_string() const;

   private:
    void check_same(const ChowClass& rhs) const;

    int n_ = 1;
    std::map<Partition, mpz_class> terms_;
};

/// sigma_p * c by Pieri's rule.
ChowClass pieri(int p, const ChowClass& c);
/// Bilinear product using sigma_{a,b} = sigma_{1,1}^b sigma_{a-b}.
ChowClass multiply(const ChowClass& x, const ChowClass& y);

/// Total Chern class truncated to degrees 0 .. 2(n-1).
class ChernSeries {
   public:
    ChernSeries() = default;
    explicit ChernSeries(int n);
    static ChernSeries one(int n);

    int n() const noexcept { return n_; }
    int top() const noexcept { return 2 * (n_ - 1); }
    /// Degree-k part; zero outside 0 .. top().
    ChowClass operator[](int k) const;
    void set(int k, ChowClass c);
    ChernSeries operator*(const ChernSeries& rhs) const;
    bool operator==(const ChernSeries& rhs) const { return n_ == rhs.n_ && comps_ == rhs.comps_; }
    ChowClass total() const;

   private:
    int n_ = 1;
    std::vector<ChowClass> comps_;
};

/// c(Sym^k S*) with S the tautological subbundle of G(1, n).
ChernSeries chern_sym(int k, int n);
/// c(Q) = 1 + sigma_1 + ... + sigma_{n-1}.
ChernSeries chern_Q(int n);
/// Truncated inverse; DomainError unless the degree-0 part is 1.
ChernSeries series_invert(const ChernSeries& s);
/// e x e determinant with entry (r, c) = gamma_{f + c - r}.
ChowClass porteous_delta(int e, int f, const ChernSeries& gamma);

/// Symmetric polynomial in the roots (x, y) of S*, written in e1 = x + y and
/// e2 = xy: key (i, j) stands for e1^i e2^j.
std::map<std::pair<int, int>, mpz_class> sym_power_chern_in_elementary(int k, int degree);

struct StratumClass {
    int m = 0, b = 0;
    /// True when the type imposes no Porteous condition (m = 0 or b <= 0);
    /// both classes are then [F(X)].
    bool no_condition = false;
    ChowClass fano_class;      // c_{d+1}(Sym^d S*)
    ChowClass factor_prop24;   // Delta^m_b(c(Sym^{d-1} S*) / c(Q))
    ChowClass factor_printed;  // Delta^m_b(c(Q) / c(Sym^{d-1} S*))
    ChowClass class_prop24;
    ChowClass class_printed;
    /// Degrees when the classes are zero-dimensional.
    std::optional<mpz_class> degree_prop24, degree_printed;
};

/// Requires a = (s_1, ..., s_{n-2-m}, 1^m) with the s-part balanced.
StratumClass stratum_class(const SplittingType& a);
/// Whether a has that shape.
bool has_porteous_shape(const SplittingType& a);

}  // namespace fanostrat
