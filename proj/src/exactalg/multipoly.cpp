#include "fanostrat/multipoly.hpp"

#include <cctype>
#include <numeric>

#include "fanostrat/errors.hpp"

namespace fanostrat {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly MultiPoly::variable(const Field& field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DomainError("variable index out of range");
    MultiPoly p(field, nvars);
    Exponent e(nvars, 0);
    e[index] = 1;
    p.add_term(e, field.one());
    return p;
}

MultiPoly MultiPoly::constant(const Field& field, std::size_t nvars, const Scalar& c) {
    MultiPoly p(field, nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != nvars_) throw DomainError("exponent length mismatch");
    if (!(c.field() == field_)) throw FieldMismatch(field_.to_string(), c.field().to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
    return true;
}

void MultiPoly::check_ring(const MultiPoly& rhs) const {
    if (!(field_ == rhs.field_)) throw FieldMismatch(field_.to_string(), rhs.field_.to_string());
    if (nvars_ != rhs.nvars_) throw DomainError("polynomials in different numbers of variables");
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly r = *this;
    r += rhs;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    check_ring(rhs);
    MultiPoly r(field_, nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    MultiPoly r(field_, nvars_);
    for (const auto& [e, a] : terms_) r.add_term(e, a * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(field_, nvars_, field_.one());
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars_) throw DomainError("derivative variable out of range");
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        f[var] -= 1;
        r.add_term(f, c * field_.from_int(e[var]));
    }
    return r;
}

Scalar MultiPoly::evaluate(const Vec& point) const {
    if (point.size() != nvars_) throw DomainError("evaluation point has wrong length");
    Scalar acc = field_.zero();
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t *= point[i].pow(static_cast<std::uint64_t>(e[i]));
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw DomainError("compose: need one image per variable");
    if (images.empty()) return *this;
    const MultiPoly& ref = images.front();
    for (const auto& im : images) ref.check_ring(im);
    // Cache powers per variable.
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(constant(ref.field_, ref.nvars_, ref.field_.one()));
    auto power = [&](std::size_t i, int e) -> const MultiPoly& {
        while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][static_cast<std::size_t>(e)];
    };
    MultiPoly out(ref.field_, ref.nvars_);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(ref.field_, ref.nvars_, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::substitute_linear(const ExactMatrix& transform) const {
    if (transform.rows() != nvars_ || transform.cols() != nvars_) throw DomainError("transform has wrong shape");
    std::vector<MultiPoly> images;
    for (std::size_t j = 0; j < nvars_; ++j) {
        MultiPoly x(field_, nvars_);
        for (std::size_t k = 0; k < nvars_; ++k) {
            Exponent e(nvars_, 0);
            e[k] = 1;
            x.add_term(e, transform(k, j));
        }
        images.push_back(std::move(x));
    }
    return compose(images);
}

BinaryForm MultiPoly::restrict_to_line(const Vec& p0, const Vec& p1, int degree) const {
    if (p0.size() != nvars_ || p1.size() != nvars_) throw DomainError("line points have wrong length");
    std::vector<std::vector<BinaryForm>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        powers[i].push_back(BinaryForm::constant(field_.one()));
        powers[i].push_back(BinaryForm(Vec{p0[i], p1[i]}));
    }
    auto power = [&](std::size_t i, int e) -> const BinaryForm& {
        while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
        return powers[i][static_cast<std::size_t>(e)];
    };
    BinaryForm out(field_, degree);
    for (const auto& [e, c] : terms_) {
        const int deg = std::accumulate(e.begin(), e.end(), 0);
        if (deg != degree) throw DomainError("restrict_to_line: polynomial is not homogeneous of degree " + std::to_string(degree));
        BinaryForm t = BinaryForm::constant(c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return field_ == rhs.field_ && nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs.front() == '-';
        if (neg) cs.erase(0, 1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip();
        return pos >= s.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }
    std::string digits() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return std::string(s.substr(start, pos - start));
    }
};

struct RawTerm {
    mpq_class coeff = 1;
    std::map<std::size_t, int> powers;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const Field& field, std::optional<std::size_t> nvars) {
    Parser ps{text};
    std::vector<RawTerm> raw;
    std::size_t max_var = 0;
    bool any_var = false;
    bool first = true;
    while (!ps.eof()) {
        RawTerm term;
        int sign = 1;
        ps.skip();
        if (ps.s[ps.pos] == '+' || ps.s[ps.pos] == '-') {
            sign = ps.s[ps.pos] == '-' ? -1 : 1;
            ++ps.pos;
        } else if (!first) {
            ps.fail("expected + or -");
        }
        first = false;
        bool need_factor = true;
        while (need_factor) {
            ps.skip();
            if (ps.pos >= ps.s.size()) ps.fail("unexpected end of input");
            char ch = ps.s[ps.pos];
            if (ch == 'x') {
                ++ps.pos;
                std::size_t idx = std::stoul(ps.digits());
                int e = 1;
                ps.skip();
                if (ps.pos < ps.s.size() && ps.s[ps.pos] == '^') {
                    ++ps.pos;
                    e = std::stoi(ps.digits());
                }
                term.powers[idx] += e;
                max_var = std::max(max_var, idx);
                any_var = true;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                mpq_class c(ps.digits());
                ps.skip();
                if (ps.pos < ps.s.size() && ps.s[ps.pos] == '/') {
                    ++ps.pos;
                    mpz_class den(ps.digits());
                    if (den == 0) ps.fail("zero denominator");
                    c = mpq_class(c.get_num(), den);
                    c.canonicalize();
                }
                term.coeff *= c;
            } else if (ch == '(') {
                ps.fail("parentheses are not part of the grammar");
            } else {
                ps.fail(std::string("unexpected character '") + ch + "'");
            }
            ps.skip();
            if (ps.pos < ps.s.size() && ps.s[ps.pos] == '*') {
                ++ps.pos;
            } else {
                need_factor = false;
            }
        }
        term.coeff *= sign;
        raw.push_back(std::move(term));
    }
    if (raw.empty()) ps.fail("empty polynomial");
    std::size_t n = nvars.value_or(any_var ? max_var + 1 : 1);
    if (any_var && max_var >= n) throw DomainError("variable x" + std::to_string(max_var) + " exceeds nvars");
    MultiPoly p(field, n);
    for (const auto& t : raw) {
        Exponent e(n, 0);
        for (auto [i, k] : t.powers) e[i] = k;
        p.add_term(e, field.from_rational(t.coeff));
    }
    return p;
}

}  // namespace fanostrat
