#pragma once

#include <vector>

#include "fanostrat/matrix.hpp"
#include "fanostrat/multipoly.hpp"
#include "fanostrat/normal.hpp"
#include "fanostrat/strata.hpp"

namespace fanostrat {

struct TangentReport {
    SplittingType type;
    /// h^0(N_{L/X}) = 2(n-1) - rank C(0).
    int dim_TF = 0;
    int dim_TFa = 0;
    int codim() const { return dim_TF - dim_TFa; }
    /// Columns span ker C(0); entry 2j (2j+1) is the x0 (x1) coefficient of
    /// v_{j+2}.
    ExactMatrix tangent_basis;
    /// Block system [M_k K | -C(-a_k)] over (T_L F coordinates, auxiliary
    /// span coefficients), one row block per generator.
    ExactMatrix conditions_matrix;
    std::vector<SyzygyGenerator> generators;
    /// Codimension imposed by generator k alone.
    std::vector<int> generator_codims;
    /// Codimension after appending generators 0..k.
    std::vector<int> cumulative_codims;
};

/// Tangent spaces to F(X) and to the stratum of the line's own splitting type.
/// Throws DomainError when L is not on X, when d < 2, or when the f_i have a
/// common zero.
TangentReport tangent_dims(const MultiPoly& f, const LineParam& line,
                           ComplementOrder order = ComplementOrder::Forward);
TangentReport tangent_dims(const RestrictedDerivatives& rd, ComplementOrder order = ComplementOrder::Forward);
/// Same, with caller-supplied syzygy generators for the type `a`.
TangentReport tangent_dims(const RestrictedDerivatives& rd, const SplittingType& a,
                           const std::vector<SyzygyGenerator>& generators);

/// Cubic normal form f = x2 x0^2 + x3 x1^2 + ... around V(x2..xn): the
/// (n-3) x 2(n-3) matrix whose row i (i = 4..n) lists, for j = 4..n, the pair
/// (H_ij^(1), H_ij^(0)) with H_ij = H_ij^(0) x0 + H_ij^(1) x1. Its rank is the
/// codimension of the unbalanced stratum's tangent space. Throws DomainError
/// unless d = 3 and f2 = x0^2, f3 = x1^2, f_j = 0 (j >= 4).
ExactMatrix cubic_H_matrix(const MultiPoly& f, const LineParam& line);

/// Inclusion O(-1)^b + O^l + O(1)^m -> O(1)^{n-1} with n = b+l+m+2 used to
/// build lines of type (-1^b, 0^l, 1^m) on hypersurfaces of degree
/// d = 2b + l + 1.
FormGrid construction_matrix(int b, int l, int m, const Field& field);

/// Second derivatives along the line for the codimension construction above:
/// H_kk = x1^{d-2} + x0^3 x1^{d-5} for k >= b+l+2, and
/// H_kj = H_jk = x0^{2i} x1^{d-2i-2} when j - b = i + (k-l-b-2)(b-2),
/// 2 <= i <= b-1; terms with a negative exponent are dropped. Indices are the
/// variable numbers 2..n.
FormGrid construction_H(int b, int l, int m, const Field& field);

struct ConstructionReport {
    int b = 0, l = 0, m = 0, n = 0, d = 0;
    MultiPoly f;
    TangentReport tangent;
    int expected_codim() const { return b * m; }
};

/// Hypersurface f = sum x_i m_i + (H terms) built from the two pieces above,
/// with its tangent report at V(x2..xn). Requires characteristic != 2.
ConstructionReport balanced_plus_construction(int b, int l, int m, const Field& field);

}  // namespace fanostrat
