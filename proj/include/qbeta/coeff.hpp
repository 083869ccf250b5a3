#ifndef QBETA_COEFF_HPP
#define QBETA_COEFF_HPP

#include <complex>
#include <string>
#include <variant>

#include "qbeta/cyclotomic.hpp"
#include "qbeta/rational.hpp"

namespace qbeta {

/// Coefficient of the polynomial layer: either a plain rational or a cyclotomic
/// field element. Mixed arithmetic lifts both sides into Q(zeta_lcm).
/// Cyclotomic values of order <= 2 collapse to rationals on construction.
class Coeff {
public:
    Coeff() : v_(Rational(0)) {}
    Coeff(Rational r) : v_(std::move(r)) {}   // NOLINT: implicit by design
    Coeff(long n) : v_(Rational(n)) {}        // NOLINT
    Coeff(CycloElement c);                    // NOLINT

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    const CycloElement& cyclo() const { return std::get<CycloElement>(v_); }

    bool is_zero() const;
    bool is_one() const;

    Coeff operator-() const;
    friend Coeff operator+(const Coeff& a, const Coeff& b);
    friend Coeff operator-(const Coeff& a, const Coeff& b);
    friend Coeff operator*(const Coeff& a, const Coeff& b);
    friend Coeff operator/(const Coeff& a, const Coeff& b);
    Coeff& operator+=(const Coeff& o) { *this = *this + o; return *this; }
    Coeff& operator-=(const Coeff& o) { *this = *this - o; return *this; }
    Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }

    friend bool operator==(const Coeff& a, const Coeff& b);
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    Coeff inverse() const;

    std::complex<double> to_complex() const;
    std::string str() const;

private:
    std::variant<Rational, CycloElement> v_;
};

} // namespace qbeta

#endif
