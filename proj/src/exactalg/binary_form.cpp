#include "fanostrat/binary_form.hpp"

#include "fanostrat/errors.hpp"

namespace fanostrat {

BinaryForm::BinaryForm(const Field& field, int degree) : field_(field) {
    if (degree < 0) throw DomainError("binary form of negative degree " + std::to_string(degree));
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, field.zero());
}

BinaryForm::BinaryForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("binary form needs at least one coefficient");
    field_ = coeffs_.front().field();
    for (const auto& c : coeffs_)
        if (!(c.field() == field_)) throw FieldMismatch(field_.to_string(), c.field().to_string());
}

BinaryForm BinaryForm::monomial(const Field& field, int degree, int x1_exponent, const Scalar& c) {
    BinaryForm f(field, degree);
    f[x1_exponent] = c;
    return f;
}

BinaryForm BinaryForm::from_ints(const Field& field, const std::vector<long long>& coeffs) {
    std::vector<Scalar> cs;
    cs.reserve(coeffs.size());
    for (long long c : coeffs) cs.push_back(field.from_int(c));
    return BinaryForm(std::move(cs));
}

Scalar BinaryForm::coeff_or_zero(int s) const {
    if (s < 0 || s > degree()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(s)];
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

void BinaryForm::check_compatible(const BinaryForm& rhs) const {
    if (!(field_ == rhs.field_)) throw FieldMismatch(field_.to_string(), rhs.field_.to_string());
}

BinaryForm BinaryForm::operator+(const BinaryForm& rhs) const {
    check_compatible(rhs);
    if (degree() != rhs.degree())
        throw DomainError("adding binary forms of degrees " + std::to_string(degree()) + " and " +
                          std::to_string(rhs.degree()));
    BinaryForm r = *this;
    for (std::size_t s = 0; s < coeffs_.size(); ++s) r.coeffs_[s] += rhs.coeffs_[s];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& rhs) const { return *this + (-rhs); }

BinaryForm BinaryForm::operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& rhs) const {
    check_compatible(rhs);
    BinaryForm r(field_, degree() + rhs.degree());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return r;
}

BinaryForm BinaryForm::operator*(const Scalar& c) const {
    BinaryForm r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
}

BinaryForm BinaryForm::shifted(int x0_power, int x1_power) const {
    BinaryForm r(field_, degree() + x0_power + x1_power);
    for (int s = 0; s <= degree(); ++s) r[s + x1_power] = coeffs_[static_cast<std::size_t>(s)];
    return r;
}

Scalar BinaryForm::evaluate(const Scalar& x0, const Scalar& x1) const {
    Scalar acc = field_.zero();
    const int deg = degree();
    for (int s = 0; s <= deg; ++s) {
        const auto& c = coeffs_[static_cast<std::size_t>(s)];
        if (c.is_zero()) continue;
        acc += c * x0.pow(static_cast<std::uint64_t>(deg - s)) * x1.pow(static_cast<std::uint64_t>(s));
    }
    return acc;
}

bool BinaryForm::operator==(const BinaryForm& rhs) const {
    return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

std::string BinaryForm::to_string() const {
    std::string out;
    const int deg = degree();
    for (int s = 0; s <= deg; ++s) {
        const auto& c = coeffs_[static_cast<std::size_t>(s)];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        if (!out.empty()) {
            if (cs.front() == '-') {
                out += " - ";
                cs.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        std::string mono;
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        var("x0", deg - s);
        var("x1", s);
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else if (cs == "-1")
            out += "-" + mono;
        else
            out += cs + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

BinaryForm binary_form_multiply(const BinaryForm& f, const BinaryForm& g) { return f * g; }

}  // namespace fanostrat
