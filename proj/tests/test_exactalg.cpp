#include <random>

#include "doctest.h"
#include "fanostrat/binary_form.hpp"
#include "fanostrat/determinant.hpp"
#include "fanostrat/errors.hpp"
#include "fanostrat/field.hpp"
#include "fanostrat/matrix.hpp"
#include "fanostrat/multipoly.hpp"

using namespace fanostrat;

namespace {

ExactMatrix random_int_matrix(const Field& F, std::size_t r, std::size_t c, int lo, int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ExactMatrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = F.from_int(dist(rng));
    return m;
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("field construction and scalar arithmetic") {
    CHECK_THROWS_AS(Field::prime(15), DomainError);
    CHECK_THROWS_AS(Field::parse("p:1"), DomainError);
    CHECK_THROWS_AS(Field::parse("r"), DomainError);
    const Field F = Field::parse("p:41");
    CHECK(F.characteristic() == 41);
    CHECK(F.from_int(-1).residue() == 40);
    CHECK((F.from_int(3) * F.from_int(3).inverse()).is_one());
    CHECK(F.parse_scalar("1/2") * F.from_int(2) == F.one());

    const Field Q = Field::rationals();
    const Scalar h = Q.parse_scalar("-6/4");
    CHECK(h.rational() == mpq_class(-3, 2));
    CHECK(h.to_string() == "-3/2");
    CHECK_THROWS_AS(F.one() + Q.one(), FieldMismatch);
    CHECK_THROWS_AS(Q.zero().inverse(), DomainError);
}

TEST_CASE("binary_form_multiply") {
    const Field Q = Field::rationals();
    const BinaryForm x0 = BinaryForm::from_ints(Q, {1, 0});
    const BinaryForm x1 = BinaryForm::from_ints(Q, {0, 1});
    const BinaryForm prod = binary_form_multiply(x0, x1);
    CHECK(prod == BinaryForm::from_ints(Q, {0, 1, 0}));

    const BinaryForm q = BinaryForm::from_ints(Q, {1, 0, 1});
    CHECK(binary_form_multiply(q, BinaryForm::constant(Q.one())) == q);

    // (x0 + x1)^k against binomial coefficients.
    const BinaryForm lin = BinaryForm::from_ints(Q, {1, 1});
    BinaryForm acc = BinaryForm::constant(Q.one());
    for (int k = 1; k <= 9; ++k) {
        acc = binary_form_multiply(acc, lin);
        REQUIRE(acc.degree() == k);
        for (int s = 0; s <= k; ++s) CHECK(acc[s] == Q.from_int(binom(k, s)));
    }

    CHECK_THROWS_AS(binary_form_multiply(x0, BinaryForm::from_ints(Field::prime(7), {1})), FieldMismatch);
}

TEST_CASE("rank_and_kernel examples") {
    const Field Q = Field::rationals();
    auto id = rank_and_kernel(ExactMatrix::identity(Q, 3));
    CHECK(id.rank == 3);
    CHECK(id.kernel.empty());

    auto zero = rank_and_kernel(ExactMatrix(Q, 2, 5));
    CHECK(zero.rank == 0);
    REQUIRE(zero.kernel.size() == 5);
    for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t j = 0; j < 5; ++j) CHECK(zero.kernel[k][j] == Q.from_int(k == j ? 1 : 0));

    // Columns (1,0,0), (0,0,1), (0,0,0).
    auto m = ExactMatrix::from_ints(Q, {{1, 0, 0}, {0, 0, 0}, {0, 1, 0}});
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 2);
    REQUIRE(rk.kernel.size() == 1);
    CHECK(rk.kernel[0] == Vec{Q.zero(), Q.zero(), Q.one()});
}

TEST_CASE("solve_in_span examples") {
    const Field Q = Field::rationals();
    auto span = ExactMatrix::from_ints(Q, {{1, 2}, {3, 4}, {5, 6}});
    auto res = solve_in_span({Vec(3, Q.zero()), span.column(0)}, span);
    CHECK(res[0].solvable);
    CHECK(is_zero_vector(res[0].coefficients));
    CHECK(res[1].solvable);
    CHECK(res[1].coefficients == Vec{Q.one(), Q.zero()});

    auto col = ExactMatrix::from_ints(Q, {{1}, {0}});
    auto bad = solve_in_span({Vec{Q.zero(), Q.one()}}, col);
    CHECK_FALSE(bad[0].solvable);
    CHECK(bad[0].certificate == Vec{Q.zero(), Q.one()});

    CHECK_THROWS_AS(solve_in_span({Vec{Q.one()}}, col), DomainError);
}

TEST_CASE("solve_in_span certificates are genuine") {
    std::mt19937_64 rng(11);
    const Field F = Field::prime(101);
    for (int trial = 0; trial < 50; ++trial) {
        auto span = random_int_matrix(F, 6, 3, 0, 100, rng);
        auto t = random_int_matrix(F, 6, 1, 0, 100, rng).column(0);
        auto res = solve_in_span({t}, span)[0];
        if (res.solvable) {
            CHECK(span.apply(res.coefficients) == t);
        } else {
            for (std::size_t c = 0; c < span.cols(); ++c) CHECK(dot(res.certificate, span.column(c)).is_zero());
            CHECK_FALSE(dot(res.certificate, t).is_zero());
        }
    }
}

TEST_CASE("rank over Q agrees with rank over a large prime") {
    std::mt19937_64 rng(2024);
    const Field Q = Field::rationals();
    const Field P = Field::prime(1000000007ULL);
    for (int trial = 0; trial < 60; ++trial) {
        // Force some rank deficiency by duplicating combinations of rows.
        std::uniform_int_distribution<int> dist(-9, 9);
        std::vector<std::vector<long long>> rows(8, std::vector<long long>(8));
        for (auto& r : rows)
            for (auto& x : r) x = dist(rng);
        const int dup = trial % 4;
        for (int k = 0; k < dup; ++k)
            for (int j = 0; j < 8; ++j) rows[7 - k][j] = rows[0][j] * (k + 1) - rows[1][j];
        const auto mq = ExactMatrix::from_ints(Q, rows);
        const auto mp = ExactMatrix::from_ints(P, rows);
        CHECK(rank(mq) == rank(mp));
        CHECK(rank_and_kernel(mp).rank == rank(mp));
    }
}

TEST_CASE("kernel vectors annihilate and rank-nullity holds") {
    std::mt19937_64 rng(5);
    for (const Field& F : {Field::rationals(), Field::prime(7), Field::prime(101)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> sz(1, 7);
            const std::size_t r = sz(rng), c = sz(rng);
            auto m = random_int_matrix(F, r, c, -2, 2, rng);
            auto rk = rank_and_kernel(m);
            CHECK(rk.rank + rk.kernel.size() == c);
            CHECK(rk.rank <= std::min(r, c));
            for (const auto& k : rk.kernel) CHECK(is_zero_vector(m.apply(k)));
        }
    }
}

TEST_CASE("fraction-free elimination matches naive rational elimination") {
    std::mt19937_64 rng(77);
    const Field Q = Field::rationals();
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        ExactMatrix m(Q, 6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) m(i, j) = Q.from_rational(mpq_class(num(rng), den(rng)));
        if (trial % 3 == 0)
            for (std::size_t j = 0; j < 6; ++j) m(5, j) = m(0, j) + m(2, j) * Q.from_int(trial);
        if (trial % 5 == 0)
            for (std::size_t i = 0; i < 6; ++i) m(i, 3) = Q.zero();
        std::vector<std::size_t> p1, p2;
        const auto a = reduced_echelon(m, &p1, Elimination::FractionFree);
        const auto b = reduced_echelon(m, &p2, Elimination::Naive);
        CHECK(a == b);
        CHECK(p1 == p2);
    }
}

TEST_CASE("cofactor determinant matches elimination") {
    std::mt19937_64 rng(9);
    const Field Q = Field::rationals();
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_int_matrix(Q, 5, 5, -5, 5, rng);
        std::vector<std::vector<Scalar>> g(5);
        for (std::size_t i = 0; i < 5; ++i) g[i] = m.row(i);
        const Scalar det = cofactor_determinant(g, Q.one());
        CHECK(det.is_zero() == (rank(m) < 5));
    }
    std::vector<std::vector<Scalar>> two{{Q.from_int(1), Q.from_int(2)}, {Q.from_int(3), Q.from_int(4)}};
    CHECK(cofactor_determinant(two, Q.one()) == Q.from_int(-2));
}

TEST_CASE("multipoly parse, print and calculus") {
    const Field Q = Field::rationals();
    auto f = MultiPoly::parse("x0^2*x2 + 1/2*x1^3 - 3*x2^3", Q, 3);
    CHECK(f.nvars() == 3);
    CHECK(f.is_homogeneous(3));
    CHECK(f.to_string() == "x0^2*x2 + 1/2*x1^3 - 3*x2^3");
    CHECK(MultiPoly::parse(f.to_string(), Q, 3) == f);
    CHECK(f.derivative(2) == MultiPoly::parse("x0^2 - 9*x2^2", Q, 3));
    CHECK(f.evaluate({Q.from_int(1), Q.from_int(2), Q.from_int(1)}) == Q.from_int(2));
    CHECK_THROWS_AS(MultiPoly::parse("x0*(x1)", Q), DomainError);
    CHECK_THROWS_AS(MultiPoly::parse("x0 x1", Q), DomainError);

    // Restriction to a line agrees with composition.
    auto line = f.restrict_to_line({Q.from_int(1), Q.from_int(0), Q.from_int(1)}, {Q.from_int(0), Q.from_int(1), Q.from_int(2)}, 3);
    CHECK(line.evaluate(Q.from_int(1), Q.from_int(1)) ==
          f.evaluate({Q.from_int(1), Q.from_int(1), Q.from_int(3)}));

    // Linear substitution with the identity is a no-op.
    CHECK(f.substitute_linear(ExactMatrix::identity(Q, 3)) == f);
}

TEST_CASE("polynomials over F_p reduce coefficients") {
    const Field F = Field::prime(5);
    auto f = MultiPoly::parse("6*x0 + 5*x1 - x2", F, 3);
    CHECK(f.terms().size() == 2);
    CHECK(f.coefficient({0, 0, 1}) == F.from_int(4));
    CHECK_THROWS_AS(f + MultiPoly::parse("x0", Field::rationals(), 3), FieldMismatch);
}
