#include "qbeta/cyclotomic.hpp"

#include <cmath>
#include <numeric>

namespace qbeta {

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    unsigned long n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

UPoly cyclotomic_polynomial(unsigned long m) {
    if (m == 0) throw DomainError("cyclotomic order must be positive");
    // z^m - 1
    std::vector<Rational> v(m + 1, Rational(0));
    v[0] = Rational(-1);
    v[m] = Rational(1);
    UPoly num{std::move(v)};
    if (m == 1) return num;
    UPoly den(Rational(1));
    for (unsigned long d = 1; d < m; ++d)
        if (m % d == 0) den = den * cyclotomic_polynomial(d);
    return num.divided_by(den);
}

CycloElement::CycloElement(const Rational& r, unsigned long order)
    : order_(order), c_(euler_phi(order), Rational(0)) {
    c_[0] = r;
}

CycloElement::CycloElement(unsigned long order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    if (c_.size() != euler_phi(order_)) throw DomainError("cyclotomic coefficient vector has wrong length");
}

CycloElement CycloElement::root_of_unity(unsigned long m, long k) {
    long r = k % static_cast<long>(m);
    if (r < 0) r += static_cast<long>(m);
    return from_upoly(m, UPoly::monomial(Rational(1), static_cast<std::size_t>(r)));
}

bool CycloElement::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycloElement::rational_part() const {
    if (!is_rational()) throw DomainError("cyclotomic element is not rational");
    return c_[0];
}

UPoly CycloElement::as_upoly() const { return UPoly(c_); }

CycloElement CycloElement::from_upoly(unsigned long m, const UPoly& p) {
    const UPoly phi = cyclotomic_polynomial(m);
    UPoly r = UPoly::divrem(p, phi).second;
    std::vector<Rational> v(euler_phi(m), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.coeff(i);
    return CycloElement(m, std::move(v));
}

CycloElement CycloElement::lifted_to(unsigned long M) const {
    if (M == order_) return *this;
    if (M % order_ != 0) throw DomainError("lift target is not a multiple of the order");
    const unsigned long s = M / order_; // zeta_m = zeta_M^s
    UPoly acc;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) acc = acc + UPoly::monomial(c_[i], i * s);
    return from_upoly(M, acc);
}

namespace {
unsigned long lcm_order(unsigned long a, unsigned long b) { return std::lcm(a, b); }
} // namespace

CycloElement CycloElement::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return CycloElement(order_, std::move(v));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    const unsigned long m = lcm_order(a.order_, b.order_);
    CycloElement x = a.lifted_to(m), y = b.lifted_to(m);
    std::vector<Rational> v(x.c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.c_[i] + y.c_[i];
    return CycloElement(m, std::move(v));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) { return a + (-b); }

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    const unsigned long m = lcm_order(a.order_, b.order_);
    CycloElement x = a.lifted_to(m), y = b.lifted_to(m);
    return CycloElement::from_upoly(m, x.as_upoly() * y.as_upoly());
}

CycloElement operator/(const CycloElement& a, const CycloElement& b) { return a * b.inverse(); }

bool operator==(const CycloElement& a, const CycloElement& b) {
    const unsigned long m = lcm_order(a.order_, b.order_);
    return a.lifted_to(m).c_ == b.lifted_to(m).c_;
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw NotInvertible("inverse of zero cyclotomic element");
    // Phi_m is irreducible over Q, so gcd(a, Phi_m) = 1 for nonzero a.
    const UPoly phi = cyclotomic_polynomial(order_);
    auto x = upoly_xgcd(as_upoly(), phi);
    if (x.g.degree() != 0) throw NotInvertible("unexpected common factor with the cyclotomic modulus");
    return from_upoly(order_, x.s);
}

std::complex<double> CycloElement::to_complex() const {
    const double theta = 2.0 * M_PI / static_cast<double>(order_);
    return as_upoly().eval(std::complex<double>(std::cos(theta), std::sin(theta)));
}

std::string CycloElement::str() const {
    if (is_rational()) return c_[0].str();
    return "(" + as_upoly().str("zeta" + std::to_string(order_)) + ")";
}

} // namespace qbeta
