#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace fanostrat {

class Scalar;

/// Coefficient field descriptor: the rationals (characteristic 0) or a prime
/// field F_p. Primality is checked when the descriptor is built.
class Field {
   public:
    Field() = default;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);
    /// Accepts "q" or "p:<prime>".
    static Field parse(std::string_view spec);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t characteristic() const noexcept { return p_; }
    /// Number of elements, or nullopt for Q.
    std::optional<std::uint64_t> size() const noexcept;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rational(const mpq_class& q) const;
    /// Parses "a" or "a/b" (optionally signed) into this field.
    Scalar parse_scalar(std::string_view text) const;

    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

   private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Element of Q (lowest terms, positive denominator) or of F_p (canonical
/// residue in [0, p)). Binary operations on different fields throw
/// FieldMismatch.
class Scalar {
   public:
    Scalar() : value_(mpq_class(0)) {}

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& rhs) const;

    /// Only valid over Q.
    const mpq_class& rational() const;
    /// Only valid over F_p.
    std::uint64_t residue() const;

    /// "p/q", "p" when integral; residues print as integers.
    std::string to_string() const;

   private:
    friend class Field;
    Scalar(Field f, std::uint64_t r) : field_(f), value_(r) {}
    Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
    void check_same(const Scalar& rhs) const;

    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

}  // namespace fanostrat
