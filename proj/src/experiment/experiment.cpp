#include "fanostrat/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include <gmpxx.h>

#include "fanostrat/errors.hpp"
#include "fanostrat/field.hpp"
#include "fanostrat/normal.hpp"
#include "fanostrat/tangent.hpp"

namespace fanostrat {

std::uint64_t SamplingReport::count_of(const SplittingType& a) const {
    for (const auto& t : types)
        if (t.type == a) return t.count;
    return 0;
}

std::string SamplingReport::to_csv() const {
    std::string out = "type,count\n";
    for (const auto& t : types) out += "\"" + t.type.to_string() + "\"," + std::to_string(t.count) + "\n";
    out += "degenerate," + std::to_string(degenerate) + "\n";
    return out;
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t N, double z) {
    if (N == 0) throw DomainError("wilson_interval needs N >= 1");
    const double n = static_cast<double>(N), ph = static_cast<double>(k) / n, z2 = z * z;
    const double denom = 1 + z2 / n;
    const double centre = (ph + z2 / (2 * n)) / denom;
    const double half = z / denom * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n));
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::map<std::vector<int>, std::uint64_t> sample_block(int n, int d, std::uint64_t p, std::uint64_t seed,
                                                       std::uint64_t block_index, std::uint64_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block_index), static_cast<std::uint32_t>(block_index >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    std::vector<std::vector<std::uint64_t>> forms(static_cast<std::size_t>(n - 1), std::vector<std::uint64_t>(static_cast<std::size_t>(d)));
    std::map<std::vector<int>, std::uint64_t> tally;
    for (std::uint64_t t = 0; t < count; ++t) {
        for (auto& f : forms)
            for (auto& c : f) c = coeff(rng);
        ++tally[rank_profile_mod_p(forms, p).h];
    }
    return tally;
}

SamplingReport sample_types(int n, int d, std::uint64_t p, std::uint64_t trials, std::uint64_t seed,
                            const SamplingOptions& options) {
    if (trials < 1) throw DomainError("sampling needs at least one trial");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p <= static_cast<std::uint64_t>(d)) throw DomainError("sampling needs p > d");
    if (options.block_size < 1) throw DomainError("block size must be positive");
    enumerate_types(n, d);  // validates (n, d)

    const std::uint64_t bs = options.block_size;
    const std::uint64_t blocks = (trials + bs - 1) / bs;
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(std::min<std::uint64_t>(blocks, 256))));
    std::vector<std::map<std::vector<int>, std::uint64_t>> partial(workers);
    auto run = [&](unsigned w) {
        for (std::uint64_t k = w; k < blocks; k += workers) {
            const std::uint64_t count = std::min(bs, trials - k * bs);
            for (const auto& [h, c] : sample_block(n, d, p, seed, k, count)) partial[w][h] += c;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::map<std::vector<int>, std::uint64_t> merged;
    for (const auto& part : partial)
        for (const auto& [h, c] : part) merged[h] += c;

    SamplingReport rep;
    rep.n = n;
    rep.d = d;
    rep.p = p;
    rep.trials = trials;
    rep.seed = seed;
    rep.block_size = bs;
    std::map<SplittingType, std::uint64_t> by_type;
    for (const auto& [h, c] : merged) {
        RankProfile prof;
        prof.h = h;
        // Common zero iff C(d-2) is not surjective onto forms of degree 2d-2.
        const int rank_top = d * (n - 1) - prof.h_at(d - 2);
        if (rank_top < 2 * d - 1) {
            rep.degenerate += c;
            continue;
        }
        by_type[type_from_profile(n, d, prof)] += c;
    }
    const double lp = std::log(static_cast<double>(p));
    for (const auto& a : enumerate_types(n, d)) {
        auto it = by_type.find(a);
        if (it == by_type.end()) continue;
        TypeTally t{a, it->second, expected_codimension(a), {}, 0, 0, 0, 0, 0};
        t.frequency = mpq_class(mpz_class(std::to_string(t.count)), mpz_class(std::to_string(trials))).get_str();
        if (t.frequency.find('/') == std::string::npos) t.frequency += "/1";
        const auto [lo, hi] = wilson_interval(t.count, trials);
        t.freq_low = lo;
        t.freq_high = hi;
        const double freq = static_cast<double>(t.count) / static_cast<double>(trials);
        t.codim_estimate = -std::log(freq) / lp;
        t.codim_low = -std::log(hi) / lp;
        t.codim_high = -std::log(lo) / lp;
        rep.types.push_back(std::move(t));
    }
    return rep;
}

namespace {

std::vector<std::uint64_t> roots_of_minus_one(int d, const Field& F) {
    std::vector<std::uint64_t> out;
    const Scalar minus = F.from_int(-1);
    for (std::uint64_t z = 1; z < F.characteristic(); ++z)
        if (F.from_int(static_cast<long long>(z)).pow(static_cast<std::uint64_t>(d)) == minus) out.push_back(z);
    return out;
}

// Solutions of 1 + y^d + z^d = 0 over F_p.
std::vector<std::pair<std::uint64_t, std::uint64_t>> affine_points(int d, const Field& F) {
    const std::uint64_t p = F.characteristic();
    std::vector<Scalar> pw;
    for (std::uint64_t y = 0; y < p; ++y) pw.push_back(F.from_int(static_cast<long long>(y)).pow(static_cast<std::uint64_t>(d)));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t y = 0; y < p; ++y)
        for (std::uint64_t z = 0; z < p; ++z)
            if ((F.one() + pw[y] + pw[z]).is_zero()) out.emplace_back(y, z);
    return out;
}

MultiPoly fermat_polynomial(int n, int d, const Field& F) {
    MultiPoly f(F, n + 1);
    for (int i = 0; i <= n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
        e[static_cast<std::size_t>(i)] = d;
        f.add_term(e, F.one());
    }
    return f;
}

void check_fermat_args(int n, int d, std::uint64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p <= static_cast<std::uint64_t>(d)) throw DomainError("Fermat suite needs p > d");
    if (n < 4 || d < 3) throw DomainError("Fermat suite needs n >= 4 and d >= 3");
}

std::vector<long long> as_ll(const std::vector<std::uint64_t>& v) {
    return std::vector<long long>(v.begin(), v.end());
}

}  // namespace

FermatReport fermat_suite(int n, int d, std::uint64_t p, std::size_t max_lines) {
    check_fermat_args(n, d, p);
    const Field F = Field::prime(p);
    FermatReport rep;
    rep.n = n;
    rep.d = d;
    rep.p = p;
    rep.zetas = roots_of_minus_one(d, F);
    if (rep.zetas.empty()) throw DomainError("no root of z^" + std::to_string(d) + " = -1 in F_" + std::to_string(p));
    const auto points = affine_points(d, F);
    const MultiPoly f = fermat_polynomial(n, d, F);
    const bool quartic = (n == 4 && d == 4);
    std::vector<int> expect(static_cast<std::size_t>(n - 2), 1);
    expect[0] = 2 - d;
    rep.expected_type = SplittingType(n, d, expect);

    const std::size_t N = static_cast<std::size_t>(n + 1);
    for (auto z : rep.zetas) {
        for (auto [y, w] : points) {
            if (!quartic && rep.lines.size() >= max_lines) break;
            FermatLine line{{}, {}, {}, {}, rep.expected_type, 0, 0, false, false};
            if (quartic) {
                // [x0, x1, a x0, b x0, zeta x1]
                line.p0 = {1, 0, y, w, 0};
                line.p1 = {0, 1, 0, 0, z};
                line.a = y;
                line.b = w;
                line.generic = (y != 0 && w != 0);
            } else {
                line.p0.assign(N, 0);
                line.p0[N - 2] = 1;
                line.p0[N - 1] = z;
                line.p1.assign(N, 0);
                line.p1[0] = 1;
                line.p1[1] = y;
                line.p1[2] = w;
            }
            const auto rd = adapt_coordinates(f, LineParam::from_ints(F, as_ll(line.p0), as_ll(line.p1)));
            const auto t = tangent_dims(rd);
            line.type = t.type;
            line.dim_TF = t.dim_TF;
            line.dim_TFa = t.dim_TFa;
            bool ok = (t.type == rep.expected_type);
            if (quartic)
                ok = ok && t.dim_TF == 2 && t.dim_TFa == (line.generic ? 1 : 2);
            else
                ok = ok && t.dim_TF >= 2 * n - 6;
            line.ok = ok;
            (line.generic ? rep.generic_lines : rep.special_lines) += 1;
            rep.lines.push_back(std::move(line));
        }
    }
    if (rep.lines.empty()) throw DomainError("no cone lines found over F_" + std::to_string(p));
    rep.all_types_ok = std::all_of(rep.lines.begin(), rep.lines.end(), [&](const FermatLine& l) { return l.type == rep.expected_type; });
    rep.tangent_ok = std::all_of(rep.lines.begin(), rep.lines.end(), [](const FermatLine& l) { return l.ok; });
    return rep;
}

std::uint64_t find_fermat_prime(int n, int d, std::uint64_t start, bool need_generic) {
    for (std::uint64_t p = std::max<std::uint64_t>(start, static_cast<std::uint64_t>(d) + 1);; ++p) {
        if (!is_prime(p)) continue;
        check_fermat_args(n, d, p);
        const Field F = Field::prime(p);
        if (roots_of_minus_one(d, F).empty()) continue;
        const auto pts = affine_points(d, F);
        if (pts.empty()) continue;
        if (need_generic && std::none_of(pts.begin(), pts.end(), [](auto& q) { return q.first != 0 && q.second != 0; })) continue;
        return p;
    }
}

}  // namespace fanostrat
