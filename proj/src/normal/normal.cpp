#include "fanostrat/normal.hpp"

#include <algorithm>
#include <numeric>

#include "fanostrat/determinant.hpp"
#include "fanostrat/errors.hpp"

namespace fanostrat {

namespace {

void check_forms(const FormVec& fi) {
    if (fi.size() < 2) throw DomainError("need at least two forms f_2, f_3 (n >= 3)");
    const int deg = fi.front().degree();
    for (const auto& g : fi) {
        if (g.degree() != deg) throw DomainError("forms f_i must share one degree");
        if (!(g.field() == fi.front().field())) throw FieldMismatch(fi.front().field().to_string(), g.field().to_string());
    }
}

std::string monomial_name(int deg, int s) {
    auto part = [](const char* v, int e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
    };
    std::string a = part("x0", deg - s), b = part("x1", s);
    if (a.empty() && b.empty()) return "1";
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

}  // namespace

LineParam LineParam::from_ints(const Field& field, const std::vector<long long>& p0, const std::vector<long long>& p1) {
    if (p0.size() != p1.size()) throw DomainError("line points have different lengths");
    LineParam L;
    for (auto v : p0) L.p0.push_back(field.from_int(v));
    for (auto v : p1) L.p1.push_back(field.from_int(v));
    return L;
}

LineParam LineParam::standard(const Field& field, int n) {
    LineParam L;
    L.p0.assign(static_cast<std::size_t>(n + 1), field.zero());
    L.p1 = L.p0;
    L.p0[0] = field.one();
    L.p1[1] = field.one();
    return L;
}

RestrictedDerivatives adapt_coordinates(const MultiPoly& f, const LineParam& line) {
    const std::size_t nv = f.nvars();
    if (line.p0.size() != nv || line.p1.size() != nv)
        throw DomainError("line lives in P^" + std::to_string(line.p0.size() - 1) + " but f has " + std::to_string(nv) +
                          " variables");
    if (nv < 4) throw DomainError("need n >= 3");
    if (f.is_zero()) throw DomainError("zero polynomial");
    const Field& field = f.field();
    if (!(line.field() == field)) throw FieldMismatch(field.to_string(), line.field().to_string());
    const int d = f.total_degree();
    if (!f.is_homogeneous(d)) throw DomainError("polynomial is not homogeneous");

    const BinaryForm restricted = f.restrict_to_line(line.p0, line.p1, d);
    for (int s = 0; s <= d; ++s)
        if (!restricted[s].is_zero())
            throw DomainError("line is not on the hypersurface: coefficient of " + monomial_name(d, s) +
                              " in f|_L is " + restricted[s].to_string());

    ExactMatrix P(field, 2, nv);
    for (std::size_t j = 0; j < nv; ++j) {
        P(0, j) = line.p0[j];
        P(1, j) = line.p1[j];
    }
    std::vector<std::size_t> piv;
    reduced_echelon(P, &piv);
    if (piv.size() != 2) throw DomainError("the two points do not span a line");
    ExactMatrix T(field, nv, nv);
    for (std::size_t j = 0; j < nv; ++j) {
        T(0, j) = line.p0[j];
        T(1, j) = line.p1[j];
    }
    std::size_t row = 2;
    for (std::size_t j = 0; j < nv; ++j)
        if (j != piv[0] && j != piv[1]) T(row++, j) = field.one();

    RestrictedDerivatives out;
    out.n = static_cast<int>(nv) - 1;
    out.d = d;
    out.transform = T;
    std::vector<MultiPoly> grad;
    FormVec D;
    for (std::size_t j = 0; j < nv; ++j) {
        grad.push_back(f.derivative(j));
        D.push_back(d >= 1 ? grad.back().restrict_to_line(line.p0, line.p1, d - 1) : BinaryForm(field, 0));
    }
    for (std::size_t i = 2; i < nv; ++i) {
        BinaryForm fi(field, d - 1);
        for (std::size_t j = 0; j < nv; ++j)
            if (!T(i, j).is_zero()) fi += D[j] * T(i, j);
        out.f.push_back(fi);
    }
    if (d >= 2) {
        std::vector<std::vector<BinaryForm>> DD(nv);
        for (std::size_t j = 0; j < nv; ++j)
            for (std::size_t l = 0; l < nv; ++l)
                DD[j].push_back(grad[j].derivative(l).restrict_to_line(line.p0, line.p1, d - 2));
        // Only the y-derivatives for i, k >= 2 are needed.
        std::vector<FormVec> half(nv);  // half[i][l] = sum_j T(i,j) DD[j][l]
        for (std::size_t i = 2; i < nv; ++i)
            for (std::size_t l = 0; l < nv; ++l) {
                BinaryForm acc(field, d - 2);
                for (std::size_t j = 0; j < nv; ++j)
                    if (!T(i, j).is_zero()) acc += DD[j][l] * T(i, j);
                half[i].push_back(acc);
            }
        out.H.assign(nv - 2, FormVec(nv - 2, BinaryForm(field, d - 2)));
        for (std::size_t i = 2; i < nv; ++i)
            for (std::size_t k = 2; k < nv; ++k) {
                BinaryForm acc(field, d - 2);
                for (std::size_t l = 0; l < nv; ++l)
                    if (!T(k, l).is_zero()) acc += half[i][l] * T(k, l);
                out.H[i - 2][k - 2] = acc;
            }
    }
    return out;
}

ExactMatrix build_C(const FormVec& fi, int i) {
    check_forms(fi);
    if (i < -1) throw DomainError("build_C needs i >= -1");
    const Field& field = fi.front().field();
    const int deg = fi.front().degree();  // d - 1
    const std::size_t width = static_cast<std::size_t>(i + 2);
    const std::size_t rows = static_cast<std::size_t>(deg + i + 2);
    ExactMatrix C(field, rows, width * fi.size());
    for (std::size_t j = 0; j < fi.size(); ++j)
        for (std::size_t s = 0; s < width; ++s)
            for (int r = 0; r <= deg; ++r) C(static_cast<std::size_t>(r) + s, j * width + s) = fi[j][r];
    return C;
}

RankProfile rank_profile(const FormVec& fi) {
    check_forms(fi);
    const int d = fi.front().degree() + 1;
    const int n = static_cast<int>(fi.size()) + 1;
    RankProfile prof;
    for (int i = -1; i <= d - 1; ++i) {
        const int r = static_cast<int>(rank(build_C(fi, i)));
        prof.ranks.push_back(r);
        prof.h.push_back((i + 2) * (n - 1) - r);
    }
    return prof;
}

RankProfile rank_profile_mod_p(const std::vector<std::vector<std::uint64_t>>& coeffs, std::uint64_t p) {
    const std::size_t m = coeffs.size();
    const int deg = static_cast<int>(coeffs.front().size()) - 1;
    const int d = deg + 1;
    const int n = static_cast<int>(m) + 1;
    RankProfile prof;
    std::vector<std::uint64_t> buf;
    for (int i = -1; i <= d - 1; ++i) {
        const std::size_t width = static_cast<std::size_t>(i + 2);
        const std::size_t rows = static_cast<std::size_t>(deg + i + 2), cols = width * m;
        buf.assign(rows * cols, 0);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t s = 0; s < width; ++s)
                for (int r = 0; r <= deg; ++r) buf[(static_cast<std::size_t>(r) + s) * cols + j * width + s] = coeffs[j][r];
        const int rk = static_cast<int>(rank_mod_p(buf, rows, cols, p));
        prof.ranks.push_back(rk);
        prof.h.push_back((i + 2) * (n - 1) - rk);
    }
    return prof;
}

SplittingType type_from_profile(int n, int d, const RankProfile& profile) {
    if (static_cast<int>(profile.h.size()) != d + 1) throw DomainError("rank profile must cover i = -1 .. d-1");
    // m[v] for v = 1, 0, -1, ..., 2-d, stored at index 1 - v.
    std::vector<long> mult(static_cast<std::size_t>(d));
    for (int k = -1; k <= d - 2; ++k) {
        long acc = profile.h_at(k);
        for (int v = 1; v > -k; --v) acc -= mult[static_cast<std::size_t>(1 - v)] * (v + k + 1);
        mult[static_cast<std::size_t>(1 + k)] = acc;
    }
    long count = 0, degree = 0;
    std::vector<int> entries;
    for (int idx = 0; idx < d; ++idx) {
        const int v = 1 - idx;
        if (mult[static_cast<std::size_t>(idx)] < 0)
            throw ConsistencyError("rank profile gives negative multiplicity for O(" + std::to_string(v) + ")");
        count += mult[static_cast<std::size_t>(idx)];
        degree += v * mult[static_cast<std::size_t>(idx)];
        for (long c = 0; c < mult[static_cast<std::size_t>(idx)] && c <= n; ++c) entries.push_back(v);
    }
    if (count != n - 2 || degree != n - d - 1)
        throw ConsistencyError("rank profile does not come from a rank " + std::to_string(n - 2) + " bundle of degree " +
                               std::to_string(n - d - 1) + " (got rank " + std::to_string(count) + ", degree " +
                               std::to_string(degree) + "); do the f_i have a common zero?");
    SplittingType a(n, d, entries);
    for (int i = -1; i <= d - 1; ++i)
        if (twisted_sections(a, i) != profile.h_at(i))
            throw ConsistencyError("recovered type " + a.to_string() + " disagrees with h_" + std::to_string(i));
    return a;
}

SplitResult splitting_type(const FormVec& fi) {
    check_forms(fi);
    if (std::all_of(fi.begin(), fi.end(), [](const BinaryForm& g) { return g.is_zero(); }))
        throw DomainError("all f_i vanish: X is singular along L");
    SplitResult res;
    res.profile = rank_profile(fi);
    res.type = type_from_profile(static_cast<int>(fi.size()) + 1, fi.front().degree() + 1, res.profile);
    return res;
}

bool has_common_zero(const FormVec& fi) {
    check_forms(fi);
    const int d = fi.front().degree() + 1;
    return static_cast<int>(rank(build_C(fi, d - 2))) < 2 * d - 1;
}

std::vector<SyzygyGenerator> syzygy_generators(const FormVec& fi, const SplittingType& a, ComplementOrder order) {
    check_forms(fi);
    const Field& field = fi.front().field();
    const std::size_t m = fi.size();
    if (a.n() != static_cast<int>(m) + 1 || a.d() != fi.front().degree() + 1)
        throw DomainError("splitting type " + a.to_string() + " does not match the forms");
    const int top = 1 - a.entries().front();
    std::vector<SyzygyGenerator> out;
    std::vector<Vec> prev;  // basis of V_{s-1}
    for (int s = 0; s <= top; ++s) {
        RankKernel rk = rank_and_kernel(build_C(fi, s - 1));
        std::vector<Vec> cur = rk.kernel;
        const std::size_t w = static_cast<std::size_t>(s + 1);
        // Image of x0 * V_{s-1} + x1 * V_{s-1}.
        std::vector<Vec> span;
        for (const auto& v : prev)
            for (int shift = 0; shift < 2; ++shift) {
                Vec u(m * w, field.zero());
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t t = 0; t + 1 < w; ++t) u[j * w + t + static_cast<std::size_t>(shift)] = v[j * (w - 1) + t];
                span.push_back(std::move(u));
            }
        std::size_t base_rank = span.empty() ? 0 : rank(ExactMatrix::from_columns(field, m * w, span));
        std::vector<Vec> order_list = cur;
        if (order == ComplementOrder::Reverse) std::reverse(order_list.begin(), order_list.end());
        int found = 0;
        for (auto& v : order_list) {
            span.push_back(v);
            const std::size_t r = rank(ExactMatrix::from_columns(field, m * w, span));
            if (r == base_rank) {
                span.pop_back();
                continue;
            }
            base_rank = r;
            ++found;
            Vec g = v;
            if (order == ComplementOrder::Forward) {
                auto lead = std::find_if(g.begin(), g.end(), [](const Scalar& x) { return !x.is_zero(); });
                const Scalar inv = lead->inverse();
                for (auto& x : g) x *= inv;
            }
            SyzygyGenerator gen;
            gen.degree = s;
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<Scalar> c(g.begin() + static_cast<long>(j * w), g.begin() + static_cast<long>((j + 1) * w));
                gen.column.emplace_back(std::move(c));
            }
            out.push_back(std::move(gen));
        }
        const int expected = a.count(1 - s);
        if (found != expected)
            throw ConsistencyError("found " + std::to_string(found) + " syzygy generators in degree " + std::to_string(s) +
                                   ", type " + a.to_string() + " predicts " + std::to_string(expected));
        prev = std::move(cur);
    }
    return out;
}

FormVec witness_from_matrix(const FormGrid& A) {
    const std::size_t rows = A.size();
    if (rows < 2) throw DomainError("witness matrix needs at least two rows");
    const std::size_t cols = rows - 1;
    for (const auto& row : A)
        if (row.size() != cols) throw DomainError("witness matrix must be (n-1) x (n-2)");
    const Field& field = A[0][0].field();
    int total = 0;
    for (std::size_t k = 0; k < cols; ++k) {
        const int deg = A[0][k].degree();
        for (std::size_t r = 0; r < rows; ++r)
            if (A[r][k].degree() != deg) throw DomainError("column " + std::to_string(k + 1) + " has mixed degrees");
        total += deg;
    }
    FormVec out;
    bool any = false;
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<FormVec> minor;
        for (std::size_t r = 0; r < rows; ++r)
            if (r != i) minor.push_back(A[r]);
        BinaryForm det = cofactor_determinant(minor, BinaryForm::constant(field.one()));
        if (det.degree() != total) throw ConsistencyError("minor has unexpected degree");
        if ((i + 1) % 2 == 1) det = -det;
        any = any || !det.is_zero();
        out.push_back(std::move(det));
    }
    if (!any) throw DomainError("all maximal minors vanish; resample A");
    return out;
}

FormGrid random_witness_matrix(const SplittingType& a, const Field& field, std::mt19937_64& rng) {
    const std::size_t rows = static_cast<std::size_t>(a.n() - 1);
    FormGrid A(rows);
    auto draw = [&]() {
        if (field.is_rational()) return field.from_int(std::uniform_int_distribution<long long>(-100, 100)(rng));
        const std::uint64_t p = field.characteristic();
        return field.from_int(static_cast<long long>(std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng)));
    };
    for (std::size_t r = 0; r < rows; ++r)
        for (int ak : a.entries()) {
            const int deg = 1 - ak;
            std::vector<Scalar> c;
            for (int s = 0; s <= deg; ++s) c.push_back(draw());
            A[r].emplace_back(std::move(c));
        }
    return A;
}

WitnessResult random_witness(const SplittingType& a, const Field& field, std::uint64_t seed, int max_attempts) {
    if (auto q = field.size(); q && *q <= static_cast<std::uint64_t>(4 * a.d()))
        throw DomainError("field " + field.to_string() + " is too small; need more than 4d = " + std::to_string(4 * a.d()) +
                          " elements");
    std::mt19937_64 rng(seed);
    std::string last = "none";
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        WitnessResult res;
        res.A = random_witness_matrix(a, field, rng);
        res.attempts = attempt;
        try {
            res.f = witness_from_matrix(res.A);
            if (has_common_zero(res.f)) {
                last = "minors with a common zero";
                continue;
            }
            res.split = splitting_type(res.f);
        } catch (const DomainError& e) {
            last = e.what();
            continue;
        }
        if (res.split.type == a) return res;
        last = "type " + res.split.type.to_string();
    }
    throw DomainError("random_witness: no sample of type " + a.to_string() + " in " + std::to_string(max_attempts) +
                      " attempts (last: " + last + ")");
}

MultiPoly hypersurface_from_forms(const FormVec& fi, const FormGrid& H) {
    check_forms(fi);
    const Field& field = fi.front().field();
    const std::size_t nv = fi.size() + 2;
    const int deg = fi.front().degree();
    MultiPoly f(field, nv);
    auto add_form = [&](const BinaryForm& g, std::size_t i, std::size_t j, const Scalar& scale) {
        for (int s = 0; s <= g.degree(); ++s) {
            if (g[s].is_zero()) continue;
            Exponent e(nv, 0);
            e[0] = g.degree() - s;
            e[1] = s;
            e[i] += 1;
            if (j < nv) e[j] += 1;
            f.add_term(e, g[s] * scale);
        }
    };
    for (std::size_t i = 0; i < fi.size(); ++i) add_form(fi[i], i + 2, nv, field.one());
    if (!H.empty()) {
        if (H.size() != fi.size()) throw DomainError("H must be (n-1) x (n-1)");
        if (field.characteristic() == 2) throw DomainError("cannot halve diagonal terms in characteristic 2");
        const Scalar half = field.from_int(2).inverse();
        for (std::size_t i = 0; i < H.size(); ++i) {
            if (H[i].size() != fi.size()) throw DomainError("H must be (n-1) x (n-1)");
            for (std::size_t j = i; j < H.size(); ++j) {
                if (!(H[i][j] == H[j][i])) throw DomainError("H must be symmetric");
                if (H[i][j].degree() != deg - 1) throw DomainError("H entries must have degree d-2");
                add_form(H[i][j], i + 2, j + 2, i == j ? half : field.one());
            }
        }
    }
    return f;
}

std::vector<std::vector<MultiPoly>> chart_coefficients(const MultiPoly& f) {
    const std::size_t nv = f.nvars();
    const Field& field = f.field();
    const int d = f.total_degree();
    const std::size_t na = 2 * (nv - 2);
    const std::size_t ring = 2 + na;  // x0, x1, a20, a21, ...
    std::vector<MultiPoly> images;
    images.push_back(MultiPoly::variable(field, ring, 0));
    images.push_back(MultiPoly::variable(field, ring, 1));
    for (std::size_t i = 2; i < nv; ++i) {
        const std::size_t base = 2 + 2 * (i - 2);
        images.push_back(MultiPoly::variable(field, ring, base) * MultiPoly::variable(field, ring, 0) +
                         MultiPoly::variable(field, ring, base + 1) * MultiPoly::variable(field, ring, 1));
    }
    std::vector<std::vector<MultiPoly>> C;
    for (std::size_t i = 2; i < nv; ++i) {
        const MultiPoly g = f.derivative(i).compose(images);
        std::vector<MultiPoly> row(static_cast<std::size_t>(d), MultiPoly(field, na));
        for (const auto& [e, c] : g.terms()) {
            const int s = e[1];
            if (e[0] + e[1] != d - 1) throw ConsistencyError("chart substitution lost homogeneity");
            Exponent ea(e.begin() + 2, e.end());
            row[static_cast<std::size_t>(s)].add_term(ea, c);
        }
        C.push_back(std::move(row));
    }
    return C;
}

std::vector<MultiPoly> local_equations(const MultiPoly& f, const SplittingType& a, const LocalEquationOptions& options) {
    const int n = static_cast<int>(f.nvars()) - 1;
    const int d = f.total_degree();
    if (!f.is_homogeneous(d)) throw DomainError("polynomial is not homogeneous");
    if (a.n() != n || a.d() != d) throw DomainError("splitting type " + a.to_string() + " is for different (n, d)");
    if (!options.allow_large && (n > 5 || d > 4))
        throw DomainError("local_equations is limited to n <= 5, d <= 4 (pass the override to go further)");
    const Field& field = f.field();
    const auto C = chart_coefficients(f);
    const std::size_t na = 2 * static_cast<std::size_t>(n - 1);
    const MultiPoly one = MultiPoly::constant(field, na, field.one());
    std::vector<MultiPoly> out;
    auto record = [&](MultiPoly p) {
        if (p.is_zero()) return;
        const MultiPoly neg = -p;
        for (const auto& q : out)
            if (q == p || q == neg) return;
        out.push_back(std::move(p));
    };
    for (int i = -1; i <= d - 2; ++i) {
        const std::size_t width = static_cast<std::size_t>(i + 2);
        const std::size_t rows = static_cast<std::size_t>(d + i + 1), cols = width * static_cast<std::size_t>(n - 1);
        const int r = expected_rank(a, i);
        const std::size_t k = static_cast<std::size_t>(r + 1);
        if (static_cast<std::size_t>(r) >= std::min(rows, cols)) continue;
        auto entry = [&](std::size_t row, std::size_t col) -> MultiPoly {
            const std::size_t j = col / width, s = col % width;
            if (row < s || row - s >= static_cast<std::size_t>(d)) return MultiPoly(field, na);
            return C[j][row - s];
        };
        std::vector<std::size_t> rsel(k), csel(k);
        auto next = [](std::vector<std::size_t>& sel, std::size_t limit) {
            std::size_t t = sel.size();
            while (t > 0) {
                --t;
                if (sel[t] < limit - (sel.size() - t)) {
                    ++sel[t];
                    for (std::size_t u = t + 1; u < sel.size(); ++u) sel[u] = sel[u - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        std::iota(rsel.begin(), rsel.end(), 0);
        do {
            std::iota(csel.begin(), csel.end(), 0);
            do {
                std::vector<std::vector<MultiPoly>> M(k);
                for (std::size_t x = 0; x < k; ++x)
                    for (std::size_t y = 0; y < k; ++y) M[x].push_back(entry(rsel[x], csel[y]));
                record(cofactor_determinant(M, one));
            } while (next(csel, cols));
        } while (next(rsel, rows));
    }
    return out;
}

}  // namespace fanostrat
