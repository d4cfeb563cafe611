#pragma once

#include <string>
#include <vector>

#include "fanostrat/field.hpp"

namespace fanostrat {

/// Homogeneous form of fixed degree in x0, x1. Coefficient of
/// x0^(deg-s) x1^s lives at index s; a zero form still remembers its degree.
class BinaryForm {
   public:
    BinaryForm() : BinaryForm(Field::rationals(), 0) {}
    BinaryForm(const Field& field, int degree);
    explicit BinaryForm(std::vector<Scalar> coeffs);

    static BinaryForm monomial(const Field& field, int degree, int x1_exponent, const Scalar& c);
    static BinaryForm constant(const Scalar& c) { return BinaryForm(std::vector<Scalar>{c}); }
    /// From small integers, index = x1 exponent.
    static BinaryForm from_ints(const Field& field, const std::vector<long long>& coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Field& field() const noexcept { return field_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    const Scalar& operator[](int s) const { return coeffs_.at(static_cast<std::size_t>(s)); }
    Scalar& operator[](int s) { return coeffs_.at(static_cast<std::size_t>(s)); }
    /// Zero outside [0, degree].
    Scalar coeff_or_zero(int s) const;

    bool is_zero() const;

    // Addition requires equal degrees; multiplication adds degrees.
    BinaryForm operator+(const BinaryForm& rhs) const;
    BinaryForm operator-(const BinaryForm& rhs) const;
    BinaryForm operator-() const;
    BinaryForm operator*(const BinaryForm& rhs) const;
    BinaryForm operator*(const Scalar& c) const;
    BinaryForm& operator+=(const BinaryForm& rhs) { return *this = *this + rhs; }

    /// x0^i x1^j * this.
    BinaryForm shifted(int x0_power, int x1_power) const;
    Scalar evaluate(const Scalar& x0, const Scalar& x1) const;

    bool operator==(const BinaryForm& rhs) const;

    std::string to_string() const;

   private:
    void check_compatible(const BinaryForm& rhs) const;

    Field field_;
    std::vector<Scalar> coeffs_;
};

BinaryForm binary_form_multiply(const BinaryForm& f, const BinaryForm& g);

}  // namespace fanostrat
