#include "fanostrat/tangent.hpp"

#include "fanostrat/errors.hpp"

namespace fanostrat {

namespace {

// Columns of the linear map w -> E(v) = sum_i c_i sum_j H_ij v_j, where
// v_j = w[2j] x0 + w[2j+1] x1. Rows are coefficients of the result.
ExactMatrix condition_map(const FormGrid& H, const FormVec& c, int out_degree) {
    const Field& field = c.front().field();
    const std::size_t m = c.size();
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m; ++j) {
        BinaryForm acc(field, out_degree - 1);
        for (std::size_t i = 0; i < m; ++i) acc = acc + c[i] * H[i][j];
        for (int t = 0; t < 2; ++t) {
            const BinaryForm e = acc * BinaryForm::monomial(field, 1, t, field.one());
            Vec col(static_cast<std::size_t>(out_degree + 1), field.zero());
            for (int s = 0; s <= e.degree(); ++s) col[static_cast<std::size_t>(s)] = e[s];
            cols.push_back(std::move(col));
        }
    }
    return ExactMatrix::from_columns(field, static_cast<std::size_t>(out_degree + 1), cols);
}

struct Block {
    ExactMatrix MK;   // condition map restricted to T_L F coordinates
    ExactMatrix C;    // C(-a_k)
    std::size_t nullity_C = 0;
};

// Block-diagonal assembly of [MK_k | -C_k] for the chosen blocks.
ExactMatrix assemble(const std::vector<Block>& blocks, const std::vector<std::size_t>& pick, std::size_t k, const Field& field) {
    std::size_t rows = 0, aux = 0;
    for (auto b : pick) {
        rows += blocks[b].MK.rows();
        aux += blocks[b].C.cols();
    }
    ExactMatrix out(field, rows, k + aux);
    std::size_t r0 = 0, c0 = k;
    for (auto b : pick) {
        const auto& blk = blocks[b];
        for (std::size_t r = 0; r < blk.MK.rows(); ++r) {
            for (std::size_t c = 0; c < k; ++c) out(r0 + r, c) = blk.MK(r, c);
            for (std::size_t c = 0; c < blk.C.cols(); ++c) out(r0 + r, c0 + c) = field.zero() - blk.C(r, c);
        }
        r0 += blk.MK.rows();
        c0 += blk.C.cols();
    }
    return out;
}

// Dimension of the v-projection of ker(assembled system).
int surviving_dim(const std::vector<Block>& blocks, const std::vector<std::size_t>& pick, std::size_t k, const Field& field) {
    if (pick.empty()) return static_cast<int>(k);
    const ExactMatrix sys = assemble(blocks, pick, k, field);
    long nullity = static_cast<long>(sys.cols()) - static_cast<long>(rank(sys));
    for (auto b : pick) nullity -= static_cast<long>(blocks[b].nullity_C);
    return static_cast<int>(nullity);
}

}  // namespace

TangentReport tangent_dims(const RestrictedDerivatives& rd, const SplittingType& a,
                           const std::vector<SyzygyGenerator>& generators) {
    if (rd.d < 2 || rd.H.empty()) throw DomainError("tangent computation needs d >= 2");
    if (has_common_zero(rd.f)) throw DomainError("the restricted partials have a common zero: X is singular along L");
    const Field& field = rd.f.front().field();
    const std::size_t m = rd.f.size();

    TangentReport rep{a, 0, 0, {}, {}, generators, {}, {}};
    const ExactMatrix C0 = build_C(rd.f, 0);
    RankKernel rk = rank_and_kernel(C0);
    rep.dim_TF = static_cast<int>(2 * m - rk.rank);
    const std::size_t k = rk.kernel.size();
    rep.tangent_basis = ExactMatrix::from_columns(field, 2 * m, rk.kernel);

    std::vector<Block> blocks;
    for (const auto& g : generators) {
        if (g.column.size() != m) throw DomainError("syzygy generator has the wrong length");
        const int ak = 1 - g.degree;
        const int out_degree = rd.d - ak;
        const ExactMatrix M = condition_map(rd.H, g.column, out_degree);
        Block blk;
        blk.MK = k ? M * rep.tangent_basis : ExactMatrix(field, M.rows(), 0);
        blk.C = build_C(rd.f, -ak);
        blk.nullity_C = blk.C.cols() - rank(blk.C);
        blocks.push_back(std::move(blk));
    }

    std::vector<std::size_t> all;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        rep.generator_codims.push_back(static_cast<int>(k) - surviving_dim(blocks, {b}, k, field));
        all.push_back(b);
        rep.cumulative_codims.push_back(static_cast<int>(k) - surviving_dim(blocks, all, k, field));
    }
    rep.dim_TFa = surviving_dim(blocks, all, k, field);
    rep.conditions_matrix = all.empty() ? ExactMatrix(field, 0, k) : assemble(blocks, all, k, field);
    return rep;
}

TangentReport tangent_dims(const RestrictedDerivatives& rd, ComplementOrder order) {
    if (rd.d < 2 || rd.H.empty()) throw DomainError("tangent computation needs d >= 2");
    if (has_common_zero(rd.f)) throw DomainError("the restricted partials have a common zero: X is singular along L");
    const SplitResult split = splitting_type(rd.f);
    return tangent_dims(rd, split.type, syzygy_generators(rd.f, split.type, order));
}

TangentReport tangent_dims(const MultiPoly& f, const LineParam& line, ComplementOrder order) {
    return tangent_dims(adapt_coordinates(f, line), order);
}

ExactMatrix cubic_H_matrix(const MultiPoly& f, const LineParam& line) {
    const RestrictedDerivatives rd = adapt_coordinates(f, line);
    const Field& field = line.field();
    if (rd.d != 3) throw DomainError("cubic_H_matrix needs a cubic");
    if (rd.n < 4) throw DomainError("cubic_H_matrix needs n >= 4");
    const BinaryForm x0sq = BinaryForm::monomial(field, 2, 0, field.one());
    const BinaryForm x1sq = BinaryForm::monomial(field, 2, 2, field.one());
    bool normal = rd.f[0] == x0sq && rd.f[1] == x1sq;
    for (std::size_t j = 2; j < rd.f.size(); ++j) normal = normal && rd.f[j].is_zero();
    if (!normal) throw DomainError("f is not in the cubic normal form f2 = x0^2, f3 = x1^2, f_j = 0 (j >= 4)");
    const std::size_t q = static_cast<std::size_t>(rd.n - 3);
    ExactMatrix out(field, q, 2 * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            const BinaryForm& h = rd.H[i + 2][j + 2];
            out(i, 2 * j) = h[1];
            out(i, 2 * j + 1) = h[0];
        }
    return out;
}

FormGrid construction_matrix(int b, int l, int m, const Field& field) {
    if (b < 0 || l < 0 || m < 0) throw DomainError("construction needs b, l, m >= 0");
    const int n = b + l + m + 2;
    const std::size_t rows = static_cast<std::size_t>(n - 1), cols = static_cast<std::size_t>(b + l + m);
    FormGrid A(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const int deg = c < static_cast<std::size_t>(b) ? 2 : c < static_cast<std::size_t>(b + l) ? 1 : 0;
            A[r].emplace_back(field, deg);
        }
    // 1-based row/column numbering as in the construction.
    auto put = [&](int row, int col, int deg, int x1exp) {
        A[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = BinaryForm::monomial(field, deg, x1exp, field.one());
    };
    for (int k = 1; k <= b; ++k) {
        put(k, k, 2, 0);
        put(k + 1, k, 2, 2);
    }
    for (int k = 1; k <= l; ++k) {
        put(b + k, b + k, 1, 0);
        put(b + k + 1, b + k, 1, 1);
    }
    for (int k = 1; k <= m; ++k) put(b + l + 1 + k, b + l + k, 0, 0);
    return A;
}

FormGrid construction_H(int b, int l, int m, const Field& field) {
    const int n = b + l + m + 2, d = 2 * b + l + 1;
    if (d < 2) throw DomainError("construction needs d = 2b + l + 1 >= 2");
    const std::size_t rows = static_cast<std::size_t>(n - 1);
    FormGrid H(rows, FormVec(rows, BinaryForm(field, d - 2)));
    auto mono = [&](int x1_exponent) { return BinaryForm::monomial(field, d - 2, x1_exponent, field.one()); };
    // Rows are numbered 1..n-1; row r belongs to the variable x_{r+1}.
    for (int k = b + l + 2; k <= n - 1; ++k) {
        const std::size_t kk = static_cast<std::size_t>(k - 1);
        H[kk][kk] = H[kk][kk] + mono(d - 2);
        if (d - 5 >= 0) H[kk][kk] = H[kk][kk] + mono(d - 5);
        for (int i = 2; i <= b - 1; ++i) {
            const int j = b + i + (k - l - b - 2) * (b - 2);
            if (j < 1 || j > n - 1 || d - 2 * i - 2 < 0) continue;
            const std::size_t jj = static_cast<std::size_t>(j - 1);
            const BinaryForm t = mono(d - 2 * i - 2);
            H[kk][jj] = H[kk][jj] + t;
            if (jj != kk) H[jj][kk] = H[jj][kk] + t;
        }
    }
    return H;
}

ConstructionReport balanced_plus_construction(int b, int l, int m, const Field& field) {
    if (field.characteristic() == 2) throw DomainError("construction needs characteristic != 2");
    ConstructionReport rep;
    rep.b = b;
    rep.l = l;
    rep.m = m;
    rep.n = b + l + m + 2;
    rep.d = 2 * b + l + 1;
    const FormGrid H = construction_H(b, l, m, field);
    const FormVec fi = witness_from_matrix(construction_matrix(b, l, m, field));
    rep.f = hypersurface_from_forms(fi, H);
    rep.tangent = tangent_dims(rep.f, LineParam::standard(field, rep.n));
    return rep;
}

}  // namespace fanostrat
