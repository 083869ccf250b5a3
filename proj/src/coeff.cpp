#include "qbeta/coeff.hpp"

namespace qbeta {

namespace {
// Orders 1 and 2 have degree-one cyclotomic fields; keep those as plain rationals.
std::variant<Rational, CycloElement> normalize(CycloElement c) {
    if (c.order() <= 2 || c.is_rational()) return c.rational_part();
    return c;
}
} // namespace

Coeff::Coeff(CycloElement c) : v_(normalize(std::move(c))) {}

bool Coeff::is_zero() const {
    return is_rational() ? rational().is_zero() : cyclo().is_zero();
}

bool Coeff::is_one() const {
    return is_rational() && rational().is_one();
}

Coeff Coeff::operator-() const {
    if (is_rational()) return Coeff(-rational());
    return Coeff(-cyclo());
}

namespace {
template <typename Op>
Coeff combine(const Coeff& a, const Coeff& b, Op op) {
    if (a.is_rational() && b.is_rational()) return Coeff(op(a.rational(), b.rational()));
    CycloElement x = a.is_rational() ? CycloElement(a.rational()) : a.cyclo();
    CycloElement y = b.is_rational() ? CycloElement(b.rational()) : b.cyclo();
    return Coeff(op(x, y));
}
} // namespace

Coeff operator+(const Coeff& a, const Coeff& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Coeff operator-(const Coeff& a, const Coeff& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Coeff operator*(const Coeff& a, const Coeff& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Coeff operator/(const Coeff& a, const Coeff& b) { return a * b.inverse(); }

bool operator==(const Coeff& a, const Coeff& b) {
    if (a.is_rational() != b.is_rational()) {
        // One side rational, the other a genuine cyclotomic: never equal after
        // construction-time collapse of rational-valued elements.
        return false;
    }
    if (a.is_rational()) return a.rational() == b.rational();
    return a.cyclo() == b.cyclo();
}

Coeff Coeff::inverse() const {
    if (is_rational()) {
        if (rational().is_zero()) throw NotInvertible("inverse of zero coefficient");
        return Coeff(rational().inverse());
    }
    return Coeff(cyclo().inverse());
}

std::complex<double> Coeff::to_complex() const {
    return is_rational() ? rational().to_complex() : cyclo().to_complex();
}

std::string Coeff::str() const {
    return is_rational() ? rational().str() : cyclo().str();
}

} // namespace qbeta
