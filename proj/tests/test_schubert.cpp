#include <random>

#include "doctest.h"
#include "fanostrat/errors.hpp"
#include "fanostrat/schubert.hpp"

using namespace fanostrat;

namespace {

// Bivariate integer polynomials in the Chern roots x, y; key (i, j) = x^i y^j.
using Biv = std::map<std::pair<int, int>, mpz_class>;

void add(Biv& p, int i, int j, const mpz_class& c) {
    p[{i, j}] += c;
    if (p[{i, j}] == 0) p.erase({i, j});
}

Biv mul(const Biv& a, const Biv& b) {
    Biv out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) add(out, ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

// Schur polynomial s_{a,b}(x, y).
Biv schur(int a, int b) {
    Biv s;
    for (int i = 0; i <= a - b; ++i) add(s, b + i, a - i, 1);
    return s;
}

// Expand a symmetric polynomial in the Schur basis by antisymmetrising:
// the coefficient of s_{a,b} is that of x^{a+1} y^b in (x - y) f. Partitions
// leaving the 2 x (n-1) box vanish in the Chow ring.
ChowClass to_chow(const Biv& f, int n) {
    const Biv vandermonde{{{1, 0}, 1}, {{0, 1}, -1}};
    ChowClass out(n);
    for (auto& [e, c] : mul(f, vandermonde)) {
        const int a = e.first - 1, b = e.second;
        if (a < b) continue;
        if (a <= n - 1) out.add_term({a, b}, c);
    }
    return out;
}

ChowClass S(int n, int a, int b = 0) { return ChowClass::sigma(n, a, b); }

ChowClass random_class(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    ChowClass c(n);
    for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; b <= a; ++b)
            if (rng() % 3 == 0) c.add_term({a, b}, coeff(rng));
    return c;
}

mpz_class catalan(int k) {
    // Ballot-sequence count: lattice paths staying weakly above the diagonal.
    std::vector<mpz_class> row(static_cast<std::size_t>(k + 1), 0);
    row[0] = 1;
    for (int step = 0; step < 2 * k; ++step) {
        std::vector<mpz_class> next(row.size(), 0);
        for (int h = 0; h <= k; ++h) {
            if (row[h] == 0) continue;
            if (h + 1 <= k) next[h + 1] += row[h];
            if (h >= 1) next[h - 1] += row[h];
        }
        row = next;
    }
    return row[0];
}

}  // namespace

TEST_CASE("pieri examples") {
    CHECK(S(3, 1) * S(3, 1) == S(3, 2) + S(3, 1, 1));
    ChowClass p = ChowClass::one(3);
    for (int k = 0; k < 4; ++k) p = p * S(3, 1);
    CHECK(p == S(3, 2, 2) * mpz_class(2));
    CHECK(pieri(3, S(3, 0)).is_zero());
    CHECK_THROWS_AS(S(3, 1, 2), DomainError);
    CHECK_THROWS_AS(S(3, 1) * S(4, 1), DomainError);
    CHECK(S(5, 4, 4).to_string() == "1*s[4,4]");
    CHECK((S(5, 4, 2) * mpz_class(3250) + S(5, 3, 3) * mpz_class(2425)).to_string() == "3250*s[4,2] + 2425*s[3,3]");
    CHECK((-S(4, 1)).to_string() == "-1*s[1,0]");
}

TEST_CASE("product 761125") {
    const ChowClass factor = S(5, 2) * mpz_class(126) + S(5, 1, 1) * mpz_class(145);
    const ChowClass fano = S(5, 4, 2) * mpz_class(3250) + S(5, 3, 3) * mpz_class(2425);
    CHECK(factor * fano == S(5, 4, 4) * mpz_class(761125));
}

TEST_CASE("products agree with Schur polynomial multiplication") {
    for (int n = 2; n <= 6; ++n)
        for (int a = 0; a <= n - 1; ++a)
            for (int b = 0; b <= a; ++b)
                for (int c = 0; c <= n - 1; ++c)
                    for (int e = 0; e <= c; ++e) CHECK(S(n, a, b) * S(n, c, e) == to_chow(mul(schur(a, b), schur(c, e)), n));
}

TEST_CASE("giambelli consistency") {
    for (int n = 2; n <= 6; ++n) {
        auto sp = [&](int p) { return p < 0 ? ChowClass(n) : pieri(p, ChowClass::one(n)); };
        for (int a = 0; a <= n - 1; ++a)
            for (int b = 0; b <= a; ++b) CHECK(S(n, a, b) == sp(a) * sp(b) - sp(a + 1) * sp(b - 1));
    }
}

TEST_CASE("poincare duality") {
    for (int n = 2; n <= 6; ++n) {
        const int k = n - 1;
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= a; ++b)
                for (int c = 0; c <= k; ++c)
                    for (int e = 0; e <= c; ++e) {
                        if (a + b + c + e != 2 * k) continue;
                        const bool dual = (c == k - b && e == k - a);
                        CHECK(S(n, a, b) * S(n, c, e) == (dual ? S(n, k, k) : ChowClass(n)));
                    }
    }
}

TEST_CASE("ring axioms on random classes") {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 500; ++trial) {
            const auto x = random_class(n, rng), y = random_class(n, rng), z = random_class(n, rng);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
}

TEST_CASE("catalan degrees") {
    for (int n = 3; n <= 6; ++n) {
        ChowClass p = ChowClass::one(n);
        for (int k = 0; k < 2 * (n - 1); ++k) p = p * S(n, 1);
        CHECK(p.degree() == catalan(n - 1));
    }
    CHECK(catalan(2) == 2);
    CHECK(catalan(5) == 42);
}

TEST_CASE("chern_sym golden values") {
    const auto c4 = chern_sym(4, 5);
    CHECK(c4[1] == S(5, 1) * mpz_class(10));
    CHECK(c4[2] == S(5, 2) * mpz_class(35) + S(5, 1, 1) * mpz_class(55));
    // The same class written as 35 sigma_1^2 + 20 sigma_{1,1}.
    CHECK(c4[2] == S(5, 1) * S(5, 1) * mpz_class(35) + S(5, 1, 1) * mpz_class(20));
    // Exact value; the sigma_{3,3} coefficient is pinned by restriction to
    // G(1,4) below. Flipping the sign of the e2^3 term gives
    // 3250 s[4,2] + 2425 s[3,3] instead.
    CHECK(chern_sym(5, 5)[6] == S(5, 4, 2) * mpz_class(3250) + S(5, 3, 3) * mpz_class(2875));
    const auto elem = sym_power_chern_in_elementary(5, 6);
    CHECK(elem.size() == 3);
    CHECK(elem.at({4, 1}) == 600);
    CHECK(elem.at({2, 2}) == 1450);
    CHECK(elem.at({0, 3}) == 225);
    const ChowClass s1 = S(5, 1), s11 = S(5, 1, 1);
    const ChowClass minus = s11 * s1 * s1 * s1 * s1 * mpz_class(600) + s11 * s11 * s1 * s1 * mpz_class(1450) - s11 * s11 * s11 * mpz_class(225);
    CHECK(minus == S(5, 4, 2) * mpz_class(3250) + S(5, 3, 3) * mpz_class(2425));
    CHECK(chern_sym(4, 4)[5] == S(4, 3, 2) * mpz_class(320));
    CHECK(chern_sym(5, 4)[6].degree() == 2875);
    CHECK(chern_sym(2, 4)[1] == S(4, 1) * mpz_class(3));
}

TEST_CASE("chern_sym is compatible with restriction to smaller Grassmannians") {
    // G(1,n-1) in G(1,n) pulls sigma_{a,b} back to sigma_{a,b}, or to zero
    // outside the smaller box.
    for (int n = 3; n <= 7; ++n)
        for (int k = 0; k <= 6; ++k) {
            const auto big = chern_sym(k, n), small = chern_sym(k, n - 1);
            for (int deg = 0; deg <= 2 * (n - 2); ++deg) {
                ChowClass restricted(n - 1);
                const ChowClass component = big[deg];
                for (auto& [p, c] : component.terms())
                    if (p.first <= n - 2) restricted.add_term(p, c);
                CHECK(restricted == small[deg]);
            }
        }
}

TEST_CASE("chern_sym agrees with a direct root expansion") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= 7; ++k) {
            // prod_i (1 + r_i), graded by degree.
            std::vector<Biv> parts{Biv{{{0, 0}, 1}}};
            for (int i = 0; i <= k; ++i) {
                std::vector<Biv> next(parts.size() + 1);
                for (std::size_t deg = 0; deg < parts.size(); ++deg)
                    for (auto& [e, c] : parts[deg]) {
                        add(next[deg], e.first, e.second, c);
                        add(next[deg + 1], e.first + 1, e.second, c * (k - i));
                        add(next[deg + 1], e.first, e.second + 1, c * i);
                    }
                parts = next;
            }
            const auto series = chern_sym(k, n);
            for (int deg = 0; deg <= 2 * (n - 1); ++deg) {
                const ChowClass expect = deg < static_cast<int>(parts.size()) ? to_chow(parts[deg], n) : ChowClass(n);
                CHECK(series[deg] == expect);
            }
        }
}

TEST_CASE("series inversion") {
    for (int n = 2; n <= 6; ++n) {
        const auto inv = series_invert(chern_Q(n));
        ChernSeries expect = ChernSeries::one(n);
        expect.set(1, -S(n, 1));
        expect.set(2, S(n, 1, 1));
        CHECK(inv == expect);
        for (int k = 0; k <= 6; ++k) {
            const auto s = chern_sym(k, n);
            CHECK(series_invert(s) * s == ChernSeries::one(n));
        }
    }
    ChernSeries bad(4);
    bad.set(0, S(4, 0) * mpz_class(2));
    CHECK_THROWS_AS(series_invert(bad), DomainError);
    CHECK_THROWS_AS(bad.set(2, S(4, 1)), DomainError);
}

TEST_CASE("porteous_delta") {
    const auto c = chern_sym(4, 5);
    for (int f = 0; f <= 8; ++f) CHECK(porteous_delta(1, f, c) == c[f]);
    // 2x2: gamma_f^2 - gamma_{f+1} gamma_{f-1}.
    CHECK(porteous_delta(2, 2, c) == c[2] * c[2] - c[3] * c[1]);
    CHECK_THROWS_AS(porteous_delta(0, 1, c), DomainError);

    // Quotient in the printed orientation, expanded by hand.
    const auto q = chern_Q(5) * series_invert(c);
    const ChowClass s1 = S(5, 1);
    CHECK(porteous_delta(1, 2, q) == S(5, 2) - s1 * c[1] + c[1] * c[1] - c[2]);
}

TEST_CASE("stratum_class orientations") {
    const auto cubic = stratum_class(SplittingType(4, 3, {-1, 1}));
    CHECK(cubic.m == 1);
    CHECK(cubic.b == 1);
    CHECK(cubic.factor_prop24 == S(4, 1) * mpz_class(2));
    CHECK(cubic.factor_printed == S(4, 1) * mpz_class(-2));
    CHECK_FALSE(cubic.class_prop24.has_negative_coefficient());
    CHECK(cubic.class_printed.has_negative_coefficient());
    CHECK_FALSE(cubic.degree_prop24);

    const auto quintic = stratum_class(SplittingType(5, 5, {-1, -1, 1}));
    CHECK(quintic.m == 1);
    CHECK(quintic.b == 2);
    CHECK(quintic.fano_class == S(5, 4, 2) * mpz_class(3250) + S(5, 3, 3) * mpz_class(2875));
    CHECK(quintic.factor_prop24 == S(5, 2) * mpz_class(25) + S(5, 1, 1) * mpz_class(46));
    CHECK(quintic.factor_printed == S(5, 2) * mpz_class(56) + S(5, 1, 1) * mpz_class(35));
    REQUIRE(quintic.degree_prop24);
    // (x s2 + y s11)(3250 s42 + 2875 s33) = (3250 x + 2875 y) s44.
    CHECK(*quintic.degree_prop24 == 3250 * 25 + 2875 * 46);
    CHECK(*quintic.degree_printed == 3250 * 56 + 2875 * 35);
    const auto again = stratum_class(SplittingType(5, 5, {-1, -1, 1}));
    CHECK(again.class_prop24 == quintic.class_prop24);
    CHECK(again.class_printed == quintic.class_printed);

    const auto bal = stratum_class(SplittingType(4, 5, {-1, -1}));
    CHECK(bal.no_condition);
    REQUIRE(bal.degree_prop24);
    CHECK(*bal.degree_prop24 == 2875);
    CHECK(bal.class_printed == bal.class_prop24);

    CHECK_THROWS_AS(stratum_class(SplittingType(6, 5, {-2, 0, 1, 1})), DomainError);
}

TEST_CASE("prop24 orientation is effective") {
    int checked = 0;
    for (int n = 3; n <= 6; ++n)
        for (int d = 1; d <= 7; ++d)
            for (const auto& a : enumerate_types(n, d)) {
                if (!has_porteous_shape(a) || expected_codimension(a) > 2 * n - d - 3) continue;
                const auto sc = stratum_class(a);
                CHECK_MESSAGE(!sc.class_prop24.has_negative_coefficient(), a.to_string(), " n=", n, " d=", d);
                ++checked;
            }
    CHECK(checked > 20);
}
