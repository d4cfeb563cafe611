#include "fanostrat/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fanostrat/errors.hpp"

namespace fanostrat {

SplittingType::SplittingType(int n, int d, std::vector<int> entries) : n_(n), d_(d), entries_(std::move(entries)) {
    if (n < 3) throw DomainError("splitting types need n >= 3, got n=" + std::to_string(n));
    if (d < 1) throw DomainError("degree must be >= 1, got d=" + std::to_string(d));
    std::sort(entries_.begin(), entries_.end());
    if (static_cast<int>(entries_.size()) != n - 2)
        throw DomainError("splitting type " + to_string() + " must have n-2=" + std::to_string(n - 2) + " entries");
    if (!entries_.empty() && entries_.back() > 1) throw DomainError("splitting type " + to_string() + " has an entry > 1");
    const int sum = std::accumulate(entries_.begin(), entries_.end(), 0);
    if (sum != n - d - 1)
        throw DomainError("splitting type " + to_string() + " must sum to n-d-1=" + std::to_string(n - d - 1));
}

bool SplittingType::is_balanced() const { return entries_.back() - entries_.front() <= 1; }

std::map<int, int> SplittingType::multiplicities() const {
    std::map<int, int> m;
    for (int a : entries_) ++m[a];
    return m;
}

int SplittingType::count(int value) const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), value));
}

std::vector<int> SplittingType::partial_sums() const {
    std::vector<int> s(entries_.size());
    std::partial_sum(entries_.begin(), entries_.end(), s.begin());
    return s;
}

std::string SplittingType::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) out += (i ? "," : "") + std::to_string(entries_[i]);
    return out + ")";
}

int expected_codimension(const SplittingType& a) {
    const auto& e = a.entries();
    int u = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) u += std::max(e[j] - e[i] - 1, 0);
    return u;
}

int twisted_sections(const SplittingType& a, int i) {
    int t = 0;
    for (int x : a.entries()) t += std::max(0, x + i + 1);
    return t;
}

int expected_rank(const SplittingType& a, int i) { return (i + 2) * (a.n() - 1) - twisted_sections(a, i); }

bool is_specialization(const SplittingType& lower, const SplittingType& upper) {
    if (lower.n() != upper.n() || lower.d() != upper.d()) throw DomainError("comparing splitting types of different (n, d)");
    const auto a = lower.partial_sums(), b = upper.partial_sums();
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

std::vector<SplittingType> enumerate_types(int n, int d) {
    if (n < 3) throw DomainError("n must be >= 3, got " + std::to_string(n));
    if (d < 1) throw DomainError("d must be >= 1, got " + std::to_string(d));
    const int len = n - 2, target = n - d - 1, lo = 2 - d;
    std::vector<std::vector<int>> found;
    std::vector<int> cur;
    // Weakly increasing sequences in [lo, 1]; remaining slots bound the sum.
    auto rec = [&](auto&& self, int min_val, int remaining_sum) -> void {
        const int slots = len - static_cast<int>(cur.size());
        if (slots == 0) {
            if (remaining_sum == 0) found.push_back(cur);
            return;
        }
        for (int v = min_val; v <= 1; ++v) {
            if (v * slots > remaining_sum) break;   // all later entries >= v
            if (1 * slots < remaining_sum) break;   // cannot reach the sum
            if (v + (slots - 1) * 1 < remaining_sum) continue;
            cur.push_back(v);
            self(self, v, remaining_sum - v);
            cur.pop_back();
        }
    };
    rec(rec, lo, target);
    std::vector<SplittingType> types;
    for (auto& e : found) types.emplace_back(n, d, e);
    std::sort(types.begin(), types.end(), [](const SplittingType& x, const SplittingType& y) {
        return x.partial_sums() > y.partial_sums();
    });
    return types;
}

SplittingType balanced_type(int n, int d) { return enumerate_types(n, d).front(); }

DimensionReport expected_dimension(const SplittingType& a) {
    DimensionReport r;
    const int n = a.n(), d = a.d();
    r.codim = expected_codimension(a);
    r.expected_dim = 2 * n - d - 3 - r.codim;
    r.generically_empty = r.codim > 2 * n - d - 3;
    const auto& e = a.entries();
    const int ones = a.count(1);
    if (d >= 3 && e.front() == 2 - d && ones == n - 3) {
        r.dimension_bound = n - 3;
        r.bound_shape = "completely_unbalanced";
    } else if (d >= 4 && n >= 4 && ones == n - 4 && e[0] <= 0 && e[1] <= 0) {
        r.dimension_bound = n - 1;
        r.bound_shape = "almost_completely_unbalanced";
    }
    return r;
}

StrataPoset build_poset(int n, int d) {
    StrataPoset p;
    p.n = n;
    p.d = d;
    p.nodes = enumerate_types(n, d);
    const std::size_t k = p.nodes.size();
    for (const auto& t : p.nodes) p.codims.push_back(expected_codimension(t));
    std::vector<std::vector<bool>> le(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) le[i][j] = is_specialization(p.nodes[i], p.nodes[j]);
    for (std::size_t lo = 0; lo < k; ++lo)
        for (std::size_t hi = 0; hi < k; ++hi) {
            if (lo == hi || !le[lo][hi]) continue;
            bool covered = true;
            for (std::size_t mid = 0; mid < k && covered; ++mid)
                if (mid != lo && mid != hi && le[lo][mid] && le[mid][hi]) covered = false;
            if (covered) p.covers.emplace_back(lo, hi);
        }
    return p;
}

std::string emit_hasse_dot(const StrataPoset& poset) {
    std::ostringstream os;
    os << "digraph strata {\n";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        const std::string name = poset.nodes[i].to_string();
        os << "  \"" << name << "\" [label=\"" << name << " | u=" << poset.codims[i] << "\"];\n";
    }
    for (auto [lo, hi] : poset.covers)
        os << "  \"" << poset.nodes[lo].to_string() << "\" -> \"" << poset.nodes[hi].to_string() << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace fanostrat
