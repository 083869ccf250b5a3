#ifndef QBETA_CYCLOTOMIC_HPP
#define QBETA_CYCLOTOMIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "qbeta/upoly.hpp"

namespace qbeta {

unsigned long euler_phi(unsigned long m);

/// The m-th cyclotomic polynomial, by dividing z^m - 1 by all lower-order factors.
UPoly cyclotomic_polynomial(unsigned long m);

/// Element of Q(zeta_m) as a residue mod the m-th cyclotomic polynomial.
/// Coefficients are in the power basis 1, z, ..., z^{phi(m)-1}.
class CycloElement {
public:
    CycloElement() : order_(1), c_(1, Rational(0)) {}
    explicit CycloElement(const Rational& r, unsigned long order = 1);
    CycloElement(unsigned long order, std::vector<Rational> coeffs);

    /// zeta_m^k.
    static CycloElement root_of_unity(unsigned long m, long k);

    unsigned long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const; // valid when is_rational()

    /// Image in Q(zeta_M); M must be a multiple of order().
    CycloElement lifted_to(unsigned long M) const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator/(const CycloElement& a, const CycloElement& b);
    friend bool operator==(const CycloElement& a, const CycloElement& b);
    friend bool operator!=(const CycloElement& a, const CycloElement& b) { return !(a == b); }

    /// Multiplicative inverse via extended Euclid mod Phi_m; throws NotInvertible on zero.
    CycloElement inverse() const;

    /// Value under zeta_m -> exp(2*pi*i/m).
    std::complex<double> to_complex() const;

    std::string str() const;

private:
    UPoly as_upoly() const;
    static CycloElement from_upoly(unsigned long m, const UPoly& p);

    unsigned long order_;
    std::vector<Rational> c_; // length phi(order_)
};

} // namespace qbeta

#endif
