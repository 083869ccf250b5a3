#ifndef QBETA_UPOLY_HPP
#define QBETA_UPOLY_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qbeta/rational.hpp"

namespace qbeta {

/// Dense univariate polynomial over Rational (ascending coefficients, no trailing zeros).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rational c) { c_.push_back(std::move(c)); trim(); }
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const Rational& c, std::size_t deg);
    static UPoly x() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const Rational& c) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);

    /// Exact division; throws DomainError when the remainder is nonzero.
    UPoly divided_by(const UPoly& b) const;

    /// Monic gcd via the Euclidean algorithm.
    static UPoly gcd(UPoly a, UPoly b);

    UPoly monic() const;

    Rational eval(const Rational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    std::string str(const std::string& var = "z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Extended Euclid: g = gcd(a,b) monic with g = s*a + t*b.
struct UPolyXgcd {
    UPoly g, s, t;
};
UPolyXgcd upoly_xgcd(const UPoly& a, const UPoly& b);

} // namespace qbeta

#endif
