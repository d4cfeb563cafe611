#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fanostrat/binary_form.hpp"
#include "fanostrat/field.hpp"
#include "fanostrat/matrix.hpp"
#include "fanostrat/multipoly.hpp"
#include "fanostrat/strata.hpp"

namespace fanostrat {

using FormVec = std::vector<BinaryForm>;
using FormGrid = std::vector<std::vector<BinaryForm>>;

/// The line [s, t] -> s*p0 + t*p1 in P^n.
struct LineParam {
    Vec p0, p1;

    int n() const { return static_cast<int>(p0.size()) - 1; }
    const Field& field() const { return p0.front().field(); }
    static LineParam from_ints(const Field& field, const std::vector<long long>& p0, const std::vector<long long>& p1);
    /// V(x2, ..., xn).
    static LineParam standard(const Field& field, int n);
};

struct RestrictedDerivatives {
    int n = 0, d = 0;
    /// f[i-2] = (df/dy_i)|_L for i = 2..n, degree d-1.
    FormVec f;
    /// H[i-2][j-2] = (d^2 f/dy_i dy_j)|_L, degree d-2 (empty when d < 2).
    FormGrid H;
    /// Old coordinates in terms of new ones: x = y * transform. Rows 0 and 1
    /// are the points spanning L, so L = V(y2, ..., yn).
    ExactMatrix transform;
};

/// Throws DomainError when L is not on V(f) (naming the offending
/// coefficient) or when the two points do not span a line.
RestrictedDerivatives adapt_coordinates(const MultiPoly& f, const LineParam& line);

/// Multiplication map (deg i+1 forms)^{n-1} -> deg d+i forms. Block j has
/// i+2 columns; column s holds x0^{i+1-s} x1^s f_j.
ExactMatrix build_C(const FormVec& fi, int i);

/// h_i = h^0(N(i)) and rank C(i) for i = -1 .. d-1; index with at().
struct RankProfile {
    std::vector<int> h;
    std::vector<int> ranks;
    int h_at(int i) const { return h.at(static_cast<std::size_t>(i + 1)); }
    int rank_at(int i) const { return ranks.at(static_cast<std::size_t>(i + 1)); }
};

struct SplitResult {
    SplittingType type;
    RankProfile profile;
};

RankProfile rank_profile(const FormVec& fi);
/// Inverts h_i = sum_j max(0, a_j + i + 1). Throws ConsistencyError when the
/// profile is not that of a rank n-2 bundle of degree n-d-1.
SplittingType type_from_profile(int n, int d, const RankProfile& profile);
SplitResult splitting_type(const FormVec& fi);

/// True when the f_i vanish simultaneously somewhere on P^1 (over the
/// algebraic closure): rank C(d-2) < 2d-1.
bool has_common_zero(const FormVec& fi);

/// Residue-level fast path for sampling: coeffs[j][s] is the x1^s
/// coefficient of f_j, all in [0, p).
RankProfile rank_profile_mod_p(const std::vector<std::vector<std::uint64_t>>& coeffs, std::uint64_t p);

enum class ComplementOrder { Forward, Reverse };

struct SyzygyGenerator {
    int degree = 0;  // 1 - a_k
    FormVec column;  // n-1 forms of this degree
};

/// Minimal generators of the relation module of (f_2, ..., f_n), ordered by
/// degree. Forward order gives the echelon complement with smallest free
/// columns first and leading coefficient 1; Reverse scans kernel vectors
/// backwards and leaves them unnormalized (an alternative basis).
std::vector<SyzygyGenerator> syzygy_generators(const FormVec& fi, const SplittingType& a,
                                               ComplementOrder order = ComplementOrder::Forward);

/// f_i = (-1)^i det(A without row i), rows numbered from 1. Throws
/// DomainError when every minor vanishes or column degrees are ragged.
FormVec witness_from_matrix(const FormGrid& A);

/// (n-1) x (n-2) matrix whose column k has uniform random coefficients and
/// degree 1 - a_k. Over Q coefficients are integers in [-100, 100].
FormGrid random_witness_matrix(const SplittingType& a, const Field& field, std::mt19937_64& rng);

struct WitnessResult {
    FormGrid A;
    FormVec f;
    SplitResult split;
    int attempts = 0;
};

/// Samples A until its minors realize exactly `a`. Requires |field| > 4d.
WitnessResult random_witness(const SplittingType& a, const Field& field, std::uint64_t seed, int max_attempts = 20);

/// f = sum_i x_i f_i(x0, x1) + sum_{i<j} x_i x_j H_ij + sum_i x_i^2 H_ii / 2
/// in n+1 variables. H may be empty. L = V(x2..xn) lies on it with the given
/// f_i and H_ij.
MultiPoly hypersurface_from_forms(const FormVec& fi, const FormGrid& H = {});

struct LocalEquationOptions {
    bool allow_large = false;  // lift the n <= 5, d <= 4 guard
};

/// Minors cutting out the closure of the stratum `a` in the chart
/// x_i = a_{i0} x0 + a_{i1} x1 around V(x2..xn). Variables are ordered
/// a_{20}, a_{21}, a_{30}, ..., a_{n1}. Zero minors and duplicates up to
/// sign are dropped.
std::vector<MultiPoly> local_equations(const MultiPoly& f, const SplittingType& a,
                                       const LocalEquationOptions& options = {});

/// The chart coefficients C[i-2][s] (coefficient of x0^{d-1-s} x1^s in
/// df/dx_i on the chart line) as polynomials in the a_{ij}.
std::vector<std::vector<MultiPoly>> chart_coefficients(const MultiPoly& f);

}  // namespace fanostrat
