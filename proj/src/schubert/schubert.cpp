#include "fanostrat/schubert.hpp"

#include "fanostrat/determinant.hpp"
#include "fanostrat/errors.hpp"

namespace fanostrat {

ChowClass::ChowClass(int n) : n_(n) {
    if (n < 1) throw DomainError("G(1, n) needs n >= 1");
}

ChowClass ChowClass::sigma(int n, int a, int b) {
    ChowClass c(n);
    if (b < 0 || b > a) throw DomainError("sigma_{" + std::to_string(a) + "," + std::to_string(b) + "} is not a partition");
    if (a <= n - 1) c.terms_.emplace(Partition{a, b}, 1);
    return c;
}

mpz_class ChowClass::coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void ChowClass::add_term(Partition p, const mpz_class& c) {
    if (p.second < 0 || p.second > p.first || p.first > n_ - 1)
        throw DomainError("partition (" + std::to_string(p.first) + "," + std::to_string(p.second) + ") outside the box");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ChowClass::is_homogeneous_of(int k) const {
    for (const auto& [p, c] : terms_)
        if (p.first + p.second != k) return false;
    return true;
}

ChowClass ChowClass::component(int k) const {
    ChowClass out(n_);
    for (const auto& [p, c] : terms_)
        if (p.first + p.second == k) out.terms_.emplace(p, c);
    return out;
}

bool ChowClass::has_negative_coefficient() const {
    for (const auto& [p, c] : terms_)
        if (c < 0) return true;
    return false;
}

void ChowClass::check_same(const ChowClass& rhs) const {
    if (n_ != rhs.n_) throw DomainError("classes live on different Grassmannians");
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
    check_same(rhs);
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

ChowClass ChowClass::operator+(const ChowClass& rhs) const {
    ChowClass r = *this;
    r += rhs;
    return r;
}

ChowClass ChowClass::operator-() const {
    ChowClass r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& rhs) const { return *this + (-rhs); }

ChowClass ChowClass::operator*(const mpz_class& k) const {
    ChowClass r(n_);
    if (k == 0) return r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, c * k);
    return r;
}

ChowClass ChowClass::operator*(const ChowClass& rhs) const { return multiply(*this, rhs); }

std::string ChowClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Largest partitions first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, c] = *it;
        mpz_class mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        out += mag.get_str() + "*s[" + std::to_string(p.first) + "," + std::to_string(p.second) + "]";
    }
    return out;
}

ChowClass pieri(int p, const ChowClass& x) {
    if (p < 0) throw DomainError("pieri needs p >= 0");
    const int top = x.n() - 1;
    ChowClass out(x.n());
    for (const auto& [part, coeff] : x.terms()) {
        const auto [a, b] = part;
        const int size = a + b + p;
        for (int c = a; c <= top; ++c) {
            const int e = size - c;
            if (e < b || e > a) continue;
            out.add_term({c, e}, coeff);
        }
    }
    return out;
}

ChowClass multiply(const ChowClass& x, const ChowClass& y) {
    if (x.n() != y.n()) throw DomainError("classes live on different Grassmannians");
    const int top = x.n() - 1;
    ChowClass out(x.n());
    for (const auto& [part, coeff] : x.terms()) {
        const auto [a, b] = part;
        const ChowClass special = pieri(a - b, y);
        for (const auto& [q, c] : special.terms()) {
            if (q.first + b > top) continue;
            out.add_term({q.first + b, q.second + b}, c * coeff);
        }
    }
    return out;
}

ChernSeries::ChernSeries(int n) : n_(n), comps_(static_cast<std::size_t>(2 * (n - 1) + 1), ChowClass(n)) {}

ChernSeries ChernSeries::one(int n) {
    ChernSeries s(n);
    s.comps_[0] = ChowClass::one(n);
    return s;
}

ChowClass ChernSeries::operator[](int k) const {
    if (k < 0 || k > top()) return ChowClass(n_);
    return comps_[static_cast<std::size_t>(k)];
}

void ChernSeries::set(int k, ChowClass c) {
    if (k < 0 || k > top()) return;
    if (c.n() != n_) throw DomainError("series component on the wrong Grassmannian");
    if (!c.is_homogeneous_of(k)) throw DomainError("series component of degree " + std::to_string(k) + " is not homogeneous");
    comps_[static_cast<std::size_t>(k)] = std::move(c);
}

ChernSeries ChernSeries::operator*(const ChernSeries& rhs) const {
    if (n_ != rhs.n_) throw DomainError("series on different Grassmannians");
    ChernSeries out(n_);
    for (int i = 0; i <= top(); ++i)
        for (int j = 0; i + j <= top(); ++j) {
            if (comps_[static_cast<std::size_t>(i)].is_zero() || rhs.comps_[static_cast<std::size_t>(j)].is_zero()) continue;
            out.comps_[static_cast<std::size_t>(i + j)] += comps_[static_cast<std::size_t>(i)] * rhs.comps_[static_cast<std::size_t>(j)];
        }
    return out;
}

ChowClass ChernSeries::total() const {
    ChowClass out(n_);
    for (const auto& c : comps_) out += c;
    return out;
}

namespace {

using Biv = std::map<std::pair<int, int>, mpz_class>;  // x^i y^j

void biv_add(Biv& p, std::pair<int, int> e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, ins] = p.try_emplace(e, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

Biv biv_mul(const Biv& a, const Biv& b) {
    Biv out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) biv_add(out, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

Biv biv_pow(const Biv& a, int e) {
    Biv out{{{0, 0}, 1}};
    for (int k = 0; k < e; ++k) out = biv_mul(out, a);
    return out;
}

// Degree-m part of prod_{i=0}^{k} (1 + ((k-i) x + i y)).
Biv sym_power_chern_xy(int k, int m) {
    // poly[deg] = homogeneous part of degree deg
    std::vector<Biv> parts{Biv{{{0, 0}, 1}}};
    for (int i = 0; i <= k; ++i) {
        Biv root;
        biv_add(root, {1, 0}, k - i);
        biv_add(root, {0, 1}, i);
        std::vector<Biv> next(parts.size() + 1);
        for (std::size_t deg = 0; deg < parts.size(); ++deg) {
            for (const auto& [e, c] : parts[deg]) biv_add(next[deg], e, c);
            for (const auto& [e, c] : biv_mul(parts[deg], root)) biv_add(next[deg + 1], e, c);
        }
        parts = std::move(next);
    }
    if (m < 0 || m >= static_cast<int>(parts.size())) return {};
    return parts[static_cast<std::size_t>(m)];
}

}  // namespace

std::map<std::pair<int, int>, mpz_class> sym_power_chern_in_elementary(int k, int degree) {
    Biv p = sym_power_chern_xy(k, degree);
    std::map<std::pair<int, int>, mpz_class> out;
    const Biv e1{{{1, 0}, 1}, {{0, 1}, 1}};
    const Biv e2{{{1, 1}, 1}};
    while (!p.empty()) {
        // Leading term in lex order (largest x-exponent).
        const auto [lead, c] = *p.rbegin();
        const auto [alpha, beta] = lead;
        if (alpha < beta) throw ConsistencyError("polynomial in the Chern roots is not symmetric");
        const mpz_class coeff = c;
        out[{alpha - beta, beta}] += coeff;
        for (const auto& [e, v] : biv_mul(biv_pow(e1, alpha - beta), biv_pow(e2, beta))) biv_add(p, e, -v * coeff);
    }
    return out;
}

ChernSeries chern_sym(int k, int n) {
    if (k < 0) throw DomainError("chern_sym needs k >= 0");
    ChernSeries s(n);
    const ChowClass s1 = ChowClass::sigma(n, 1), s11 = ChowClass::sigma(n, 1, 1);
    std::vector<ChowClass> p1{ChowClass::one(n)}, p11{ChowClass::one(n)};
    for (int deg = 0; deg <= std::min(k + 1, s.top()); ++deg) {
        ChowClass comp(n);
        for (const auto& [ij, c] : sym_power_chern_in_elementary(k, deg)) {
            const auto [i, j] = ij;
            while (static_cast<int>(p1.size()) <= i) p1.push_back(p1.back() * s1);
            while (static_cast<int>(p11.size()) <= j) p11.push_back(p11.back() * s11);
            comp += (p1[static_cast<std::size_t>(i)] * p11[static_cast<std::size_t>(j)]) * c;
        }
        s.set(deg, comp);
    }
    return s;
}

ChernSeries chern_Q(int n) {
    ChernSeries s(n);
    for (int k = 0; k <= n - 1; ++k) s.set(k, ChowClass::sigma(n, k));
    return s;
}

ChernSeries series_invert(const ChernSeries& s) {
    if (!(s[0] == ChowClass::one(s.n()))) throw DomainError("series is not invertible: degree-0 part is not 1");
    // 1/(1 + N) = sum_j (-N)^j; N is nilpotent past degree top().
    ChernSeries negN(s.n());
    for (int k = 1; k <= s.top(); ++k) negN.set(k, -s[k]);
    ChernSeries out = ChernSeries::one(s.n()), power = ChernSeries::one(s.n());
    for (int j = 1; j <= s.top(); ++j) {
        power = power * negN;
        for (int k = 0; k <= s.top(); ++k) out.set(k, out[k] + power[k]);
    }
    return out;
}

ChowClass porteous_delta(int e, int f, const ChernSeries& gamma) {
    if (e < 1) throw DomainError("Delta^e_f needs e >= 1");
    std::vector<std::vector<ChowClass>> m(static_cast<std::size_t>(e));
    for (int r = 0; r < e; ++r)
        for (int c = 0; c < e; ++c) m[static_cast<std::size_t>(r)].push_back(gamma[f + c - r]);
    return cofactor_determinant(m, ChowClass::one(gamma.n()));
}

bool has_porteous_shape(const SplittingType& a) {
    int lo = 1, hi = -1000000;
    for (int v : a.entries()) {
        if (v == 1) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi == -1000000 || hi - lo <= 1;
}

StratumClass stratum_class(const SplittingType& a) {
    if (!has_porteous_shape(a))
        throw DomainError("type " + a.to_string() + " is not of the form (s, 1^m) with balanced s");
    const int n = a.n(), d = a.d();
    StratumClass out;
    out.m = a.count(1);
    out.b = out.m - (n - d - 1);
    const ChernSeries sym_d = chern_sym(d, n);
    out.fano_class = sym_d[d + 1];
    if (out.m == 0 || out.b <= 0) {
        out.no_condition = true;
        out.factor_prop24 = out.factor_printed = ChowClass::one(n);
    } else {
        const ChernSeries sym = chern_sym(d - 1, n), q = chern_Q(n);
        out.factor_prop24 = porteous_delta(out.m, out.b, sym * series_invert(q));
        out.factor_printed = porteous_delta(out.m, out.b, q * series_invert(sym));
    }
    out.class_prop24 = out.fano_class * out.factor_prop24;
    out.class_printed = out.fano_class * out.factor_printed;
    const int top = 2 * (n - 1);
    const int dim = (d + 1) + (out.no_condition ? 0 : out.m * out.b);
    if (dim == top) {
        out.degree_prop24 = out.class_prop24.degree();
        out.degree_printed = out.class_printed.degree();
    }
    return out;
}

}  // namespace fanostrat
