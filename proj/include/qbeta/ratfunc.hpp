#ifndef QBETA_RATFUNC_HPP
#define QBETA_RATFUNC_HPP

#include <complex>
#include <map>
#include <string>

#include "qbeta/poly.hpp"

namespace qbeta {

/// Rational function num/den over the q, L, X, Y polynomial ring.
///
/// Representations are not reduced to lowest terms; equality is decided by
/// cross-multiplication. Normalization keeps the denominator monic (leading
/// coefficient 1 under the monomial order) and applies two cheap size
/// controls: common-monomial cancellation and a univariate-in-q GCD on the
/// q-only content of num and den.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(Coeff(Rational(1)))) {}
    RatFunc(long n) : RatFunc(Coeff(Rational(n))) {}            // NOLINT
    RatFunc(const Rational& r) : RatFunc(Coeff(r)) {}           // NOLINT
    explicit RatFunc(const Coeff& c);
    explicit RatFunc(Poly num);
    RatFunc(Poly num, Poly den);

    static RatFunc variable(Var v, std::uint32_t power = 1) { return RatFunc(Poly::variable(v, power)); }
    /// q^e for any sign of e.
    static RatFunc q_power(long e);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    /// Equality by cross-multiplication, independent of reduction state.
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Substitutes `repl` for every occurrence of `v` (simultaneous, homomorphic).
    RatFunc substitute(Var v, const RatFunc& repl) const;
    /// Fast path for v -> 1/v.
    RatFunc substitute_reciprocal(Var v) const;

    std::complex<double> eval_complex(const std::map<Var, std::complex<double>>& point) const;
    /// Exact evaluation; all coefficients must be rational.
    Rational eval_rational(const std::map<Var, Rational>& point) const;

    unsigned vars_used() const { return num_.vars_used() | den_.vars_used(); }

    std::string str() const;

private:
    void reduce();

    Poly num_, den_;
};

} // namespace qbeta

#endif
