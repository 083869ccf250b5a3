#ifndef QBETA_PADIC_HPP
#define QBETA_PADIC_HPP

#include <map>
#include <string>

#include "qbeta/ratfunc.hpp"

namespace qbeta {

/// Approximate p-adic number p^v * u with u a unit known mod p^prec
/// (relative precision prec digits). Addition tracks cancellation loss;
/// multiplication and division preserve relative precision.
///
/// A value indistinguishable from zero is stored with is_zero() true and
/// valuation() giving the certified lower bound v_p(value) >= valuation().
class PadicApprox {
public:
    PadicApprox(unsigned long p, const BigInt& value, unsigned prec);
    static PadicApprox zero(unsigned long p, long valuation_bound);
    static PadicApprox from_rational(const Rational& r, unsigned long p, unsigned prec);
    /// Value known only as a residue mod p^abs_digits (absolute precision).
    static PadicApprox from_residue(unsigned long p, const BigInt& value, unsigned abs_digits);

    unsigned long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long valuation() const { return val_; }
    unsigned precision() const { return prec_; }
    /// Unit part reduced mod p^digits (digits <= precision()).
    BigInt unit_mod(unsigned digits) const;

    PadicApprox operator-() const;
    friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator/(const PadicApprox& a, const PadicApprox& b);

    PadicApprox inverse() const;
    PadicApprox pow(long e) const;

    /// b-th root with p not dividing b, by Hensel lifting from an initial
    /// residue r0 mod p satisfying r0^b = unit mod p.
    PadicApprox nth_root(unsigned long b, const BigInt& r0) const;

    /// |a|_p as a convenience for reports: p^{-valuation}.
    double abs() const;

    std::string str() const;

private:
    PadicApprox() = default;

    unsigned long p_ = 0;
    bool zero_ = true;
    long val_ = 0;       // valuation (exact), or lower bound when zero_
    unsigned prec_ = 0;  // relative digits of unit_
    BigInt unit_ = 0;    // in [0, p^prec_), not divisible by p
};

/// p-adic logarithm of a with v_p(a - 1) >= 1, truncating the alternating
/// series once the term valuation exceeds the requested absolute precision.
PadicApprox padic_log(const PadicApprox& a, unsigned target_digits);

/// Root of unity of order m in Z_p (requires m | p-1): the Hensel lift of
/// g^{(p-1)/m} for a primitive root g mod p, raised to the k-th power.
PadicApprox padic_root_of_unity(unsigned long p, unsigned long m, long k, unsigned prec);

/// Exact evaluation of a rational function at a p-adic point. Cyclotomic
/// coefficients are embedded through `zeta`, a root of unity whose order is a
/// multiple of every coefficient order (pass nullptr when all coefficients
/// are rational).
PadicApprox eval_padic(const RatFunc& f, const std::map<Var, PadicApprox>& point,
                       const PadicApprox* zeta = nullptr, unsigned long zeta_order = 0);

} // namespace qbeta

#endif
