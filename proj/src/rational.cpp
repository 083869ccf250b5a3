#include "qbeta/rational.hpp"

namespace qbeta {

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw DomainError("cannot parse rational: '" + s + "'");
    if (sgn(q.get_den()) == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), k);
    Rational r;
    r.v_ = mpq_class(n, d); // base canonical => powers canonical
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigInt binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Rational binomial_general(long m, unsigned long r) {
    Rational acc(1);
    for (unsigned long i = 0; i < r; ++i) {
        const BigInt factor = BigInt(m) - BigInt(i);
        acc *= Rational(factor);
    }
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), r);
    return acc / Rational(fact);
}

} // namespace qbeta
