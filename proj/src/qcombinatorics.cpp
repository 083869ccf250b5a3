#include "qbeta/qcombinatorics.hpp"

#include <vector>

namespace qbeta {

RatFunc q_int(long n) {
    if (n >= 0) {
        Poly p;
        for (long i = 0; i < n; ++i) {
            Monomial m;
            m[Var::q] = static_cast<std::uint32_t>(i);
            p.add_term(m, Coeff(Rational(1)));
        }
        return RatFunc(std::move(p));
    }
    // (1 - q^n)/(1 - q) = -q^n (1 - q^{-n})/(1 - q) = -q^n [−n]_q.
    return -RatFunc::q_power(n) * q_int(-n);
}

RatFunc q_factorial(unsigned long n) {
    RatFunc acc(1);
    for (unsigned long k = 2; k <= n; ++k) acc *= q_int(static_cast<long>(k));
    return acc;
}

RatFunc q_binom(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return RatFunc(0);
    // Numerator product [n][n-1]...[n-k+1] divided exactly by [k]!.
    RatFunc r = q_binom_general(static_cast<long>(n), static_cast<unsigned long>(k));
    if (!r.is_polynomial()) throw DomainError("Gaussian binomial failed the polynomiality check");
    return r;
}

RatFunc q_binom_general(long m, unsigned long r) {
    RatFunc acc(1);
    for (unsigned long i = 0; i < r; ++i) acc *= q_int(m - static_cast<long>(i));
    return acc / q_factorial(r);
}

Rational classical_bernoulli(unsigned long n) {
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    for (unsigned long m = 1; m <= n; ++m) {
        Rational s(0);
        for (unsigned long k = 0; k < m; ++k) s += Rational(binomial(m + 1, static_cast<long>(k))) * b[k];
        const BigInt m1 = BigInt(m) + 1;
        b[m] = -s / Rational(m1);
    }
    return b[n];
}

Rational classical_bernoulli_poly(unsigned long n, const Rational& x) {
    Rational s(0);
    for (unsigned long k = 0; k <= n; ++k)
        s += Rational(binomial(n, static_cast<long>(k))) * classical_bernoulli(k) *
             x.pow(static_cast<long>(n - k));
    return s;
}

} // namespace qbeta
