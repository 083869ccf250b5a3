#ifndef QBETA_RATIONAL_HPP
#define QBETA_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <string>

#include "qbeta/errors.hpp"

namespace qbeta {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1, den >= 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}        // NOLINT
    Rational(long n, long d) : v_(n, d) { requireNonzeroDen(); v_.canonicalize(); }
    Rational(const BigInt& n, const BigInt& d) : v_(n, d) { requireNonzeroDen(); v_.canonicalize(); }

    /// Parses "a/b" or "a" (decimal digits, optional leading '-').
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    /// Integer power; negative exponents invert (zero base rejected).
    Rational pow(long e) const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const;
    double to_double() const { return v_.get_d(); }
    std::complex<double> to_complex() const { return {v_.get_d(), 0.0}; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    void requireNonzeroDen() const {
        if (sgn(v_.get_den()) == 0) throw DivisionByZero("zero denominator");
    }

    mpq_class v_;
};

/// Binomial coefficient C(n, k), k out of range gives 0.
BigInt binomial(unsigned long n, long k);

/// C(m, r) for arbitrary integer upper argument, via the falling-factorial form.
Rational binomial_general(long m, unsigned long r);

} // namespace qbeta

#endif
