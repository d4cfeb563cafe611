#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanostrat/strata.hpp"

namespace fanostrat {

struct TypeTally {
    SplittingType type;
    std::uint64_t count = 0;
    int u = 0;
    /// "count/trials" in lowest terms.
    std::string frequency;
    /// 95% Wilson interval for the frequency.
    double freq_low = 0, freq_high = 0;
    /// -ln(freq)/ln(p) and the same transform of the Wilson bounds. Only
    /// observed types are listed.
    double codim_estimate = 0, codim_low = 0, codim_high = 0;
};

struct SamplingReport {
    int n = 0, d = 0;
    std::uint64_t p = 0, trials = 0, seed = 0;
    std::uint64_t block_size = 0;
    /// Tallies by splitting type, in enumeration order (balanced first).
    std::vector<TypeTally> types;
    /// Tuples whose forms share a zero on P^1 (no splitting type of the
    /// expected degree); counts plus this sum to trials.
    std::uint64_t degenerate = 0;

    std::uint64_t count_of(const SplittingType& a) const;
    std::string to_csv() const;
};

struct SamplingOptions {
    unsigned workers = 1;
    /// Trials are cut into blocks of this size; block k draws from
    /// mt19937_64 seeded by seed_seq{seed_lo, seed_hi, k_lo, k_hi}, so the
    /// report does not depend on the worker count.
    std::uint64_t block_size = 1 << 16;
};

/// Uniform (n-1)-tuples of degree d-1 binary forms over F_p, tallied by
/// splitting type. Requires p prime, p > d, trials >= 1.
SamplingReport sample_types(int n, int d, std::uint64_t p, std::uint64_t trials, std::uint64_t seed,
                            const SamplingOptions& options = {});

/// Tally of a single block (the unit of sharding), keyed by the rank profile
/// h_{-1}, ..., h_{d-1}.
std::map<std::vector<int>, std::uint64_t> sample_block(int n, int d, std::uint64_t p, std::uint64_t seed,
                                                       std::uint64_t block_index, std::uint64_t count);

/// 95% Wilson score interval for k successes in N trials.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t N, double z = 1.959963984540054);

struct FermatLine {
    std::vector<std::uint64_t> p0, p1;  // residues
    std::optional<std::uint64_t> a, b;  // quartic parametrisation only
    SplittingType type;
    int dim_TF = 0, dim_TFa = 0;
    bool generic = false;  // a, b both nonzero (quartic case)
    bool ok = false;       // passed the checks for its family
};

struct FermatReport {
    int n = 0, d = 0;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> zetas;  // roots of z^d = -1
    std::vector<FermatLine> lines;
    SplittingType expected_type;
    bool all_types_ok = false;
    bool tangent_ok = false;
    int generic_lines = 0, special_lines = 0;
};

/// Lines on the Fermat hypersurface V(x0^d + ... + xn^d) over F_p that lie on
/// a cone section x_n = zeta x_{n-1}.
///  (4,4): every line [x0, x1, a x0, b x0, zeta x1] with a^4 + b^4 + 1 = 0,
///         all roots; checks type (-2,1), dim_TFa = 1 when ab != 0 and
///         dim_TFa = 2 otherwise.
///  other: lines joining the vertex (0,...,0,1,zeta) to points (1,y,z,0,..,0)
///         of V(x0^d + ... + x_{n-2}^d), at most max_lines of them; checks
///         type (2-d, 1, ..., 1) and dim_TF >= 2n-6.
/// Throws DomainError when p <= d, p | d, or no such line exists over F_p.
FermatReport fermat_suite(int n, int d, std::uint64_t p, std::size_t max_lines = 64);

/// Smallest prime >= start for which fermat_suite finds lines; with
/// need_generic (quartic case) the line family must include ab != 0.
std::uint64_t find_fermat_prime(int n, int d, std::uint64_t start = 17, bool need_generic = false);

}  // namespace fanostrat
