#ifndef QBETA_QCOMBINATORICS_HPP
#define QBETA_QCOMBINATORICS_HPP

#include "qbeta/ratfunc.hpp"

namespace qbeta {

/// [n]_q = (1 - q^n)/(1 - q). Polynomial 1 + q + ... + q^{n-1} for n >= 0;
/// negative n routes q^n through the denominator.
RatFunc q_int(long n);

/// [n]_q! = [n][n-1]...[1], empty product for n = 0.
RatFunc q_factorial(unsigned long n);

/// Gaussian binomial for n >= 0; 0 outside 0 <= k <= n. Computed by exact
/// polynomial division of [n]_q! by [n-k]_q![k]_q! and asserted polynomial.
RatFunc q_binom(unsigned long n, long k);

/// Product-form Gaussian binomial [m][m-1]...[m-r+1]/[r]! for any integer m;
/// a rational function in general (and zero when 0 <= m < r).
RatFunc q_binom_general(long m, unsigned long r);

/// Bernoulli number B_n from the recurrence sum_{k<=n} C(n+1,k) B_k = 0, B_0 = 1.
Rational classical_bernoulli(unsigned long n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Rational classical_bernoulli_poly(unsigned long n, const Rational& x);

} // namespace qbeta

#endif
