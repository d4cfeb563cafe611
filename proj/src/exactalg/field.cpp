#include "fanostrat/field.hpp"

#include <charconv>

#include "fanostrat/errors.hpp"

namespace fanostrat {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DomainError("division by zero in F_" + std::to_string(p));
    return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.size() > 2 && (spec.substr(0, 2) == "p:" || spec.substr(0, 2) == "P:")) {
        std::uint64_t p = 0;
        auto body = spec.substr(2);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc{} && ptr == body.data() + body.size()) return prime(p);
    }
    throw DomainError("bad field spec '" + std::string(spec) + "' (expected q or p:<prime>)");
}

std::optional<std::uint64_t> Field::size() const noexcept {
    if (is_rational()) return std::nullopt;
    return p_;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (is_rational()) return Scalar(*this, mpq_class(static_cast<long>(v)));
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return Scalar(*this, static_cast<std::uint64_t>(r));
}

Scalar Field::from_rational(const mpq_class& q) const {
    if (is_rational()) {
        mpq_class c = q;
        c.canonicalize();
        return Scalar(*this, c);
    }
    mpz_class pz(std::to_string(p_));
    mpz_class num = q.get_num() % pz;
    mpz_class den = q.get_den() % pz;
    if (num < 0) num += pz;
    if (den < 0) den += pz;
    if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p_));
    std::uint64_t n = std::stoull(num.get_str());
    std::uint64_t m = std::stoull(den.get_str());
    return Scalar(*this, mulmod(n, invmod(m, p_), p_));
}

Scalar Field::parse_scalar(std::string_view text) const {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0 || s.find_first_of(" \t") != std::string::npos)
        throw DomainError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();
    return from_rational(q);
}

std::string Field::to_string() const {
    return is_rational() ? std::string("q") : "p:" + std::to_string(p_);
}

// ---------------------------------------------------------------------------

void Scalar::check_same(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) throw FieldMismatch(field_.to_string(), rhs.field_.to_string());
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    check_same(rhs);
    if (field_.is_rational()) return Scalar(field_, mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(rhs.value_)));
    const std::uint64_t p = field_.characteristic();
    std::uint64_t s = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(rhs.value_);
    if (s >= p) s -= p;
    return Scalar(field_, s);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    check_same(rhs);
    if (field_.is_rational()) return Scalar(field_, mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(rhs.value_)));
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t a = std::get<std::uint64_t>(value_), b = std::get<std::uint64_t>(rhs.value_);
    return Scalar(field_, a >= b ? a - b : a + (p - b));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    check_same(rhs);
    if (field_.is_rational()) return Scalar(field_, mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(rhs.value_)));
    return Scalar(field_, mulmod(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(rhs.value_), field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    check_same(rhs);
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
    const std::uint64_t a = std::get<std::uint64_t>(value_);
    return Scalar(field_, a == 0 ? 0 : field_.characteristic() - a);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
    return Scalar(field_, invmod(std::get<std::uint64_t>(value_), field_.characteristic()));
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar r = field_.one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& rhs) const {
    return field_ == rhs.field_ && value_ == rhs.value_;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw DomainError("rational() on an F_p element");
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) throw DomainError("residue() on a rational element");
    return std::get<std::uint64_t>(value_);
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace fanostrat
