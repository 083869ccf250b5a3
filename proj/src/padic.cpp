#include "qbeta/padic.hpp"

#include <algorithm>

namespace qbeta {

namespace {
BigInt pow_p(unsigned long p, unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertible("no modular inverse");
    return r;
}
} // namespace

PadicApprox::PadicApprox(unsigned long p, const BigInt& value, unsigned prec) : p_(p), prec_(prec) {
    if (prec == 0) throw DomainError("precision must be positive");
    BigInt v = value;
    if (sgn(v) == 0) {
        zero_ = true;
        val_ = static_cast<long>(prec);
        return;
    }
    long val = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++val;
    }
    zero_ = false;
    val_ = val;
    const BigInt m = pow_p(p, prec);
    mpz_mod(unit_.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
}

PadicApprox PadicApprox::zero(unsigned long p, long valuation_bound) {
    PadicApprox z;
    z.p_ = p;
    z.zero_ = true;
    z.val_ = valuation_bound;
    z.prec_ = 1;
    return z;
}

PadicApprox PadicApprox::from_rational(const Rational& r, unsigned long p, unsigned prec) {
    PadicApprox n(p, r.num(), prec);
    if (r.is_integer()) return n;
    return n / PadicApprox(p, r.den(), prec);
}

PadicApprox PadicApprox::from_residue(unsigned long p, const BigInt& value, unsigned abs_digits) {
    BigInt m = pow_p(p, abs_digits), v;
    mpz_mod(v.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
    if (sgn(v) == 0) return zero(p, static_cast<long>(abs_digits));
    long val = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++val;
    }
    PadicApprox r;
    r.p_ = p;
    r.zero_ = false;
    r.val_ = val;
    r.prec_ = abs_digits - static_cast<unsigned>(val);
    r.unit_ = std::move(v);
    return r;
}

BigInt PadicApprox::unit_mod(unsigned digits) const {
    if (zero_) return 0;
    if (digits > prec_) throw PrecisionExhausted("requested more digits than are known");
    BigInt m = pow_p(p_, digits), r;
    mpz_mod(r.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
    return r;
}

PadicApprox PadicApprox::operator-() const {
    if (zero_) return *this;
    PadicApprox r = *this;
    const BigInt m = pow_p(p_, prec_);
    r.unit_ = m - unit_;
    return r;
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
    if (a.p_ != b.p_) throw DomainError("mixed primes");
    if (a.zero_ && b.zero_) {
        return PadicApprox::zero(a.p_, std::min(a.val_, b.val_));
    }
    if (a.zero_ || b.zero_) {
        const PadicApprox& x = a.zero_ ? b : a;
        const PadicApprox& z = a.zero_ ? a : b;
        // x known to absolute precision val(x)+prec(x); the zero bound caps it.
        const long abs_known = std::min(x.val_ + static_cast<long>(x.prec_), z.val_);
        if (abs_known <= x.val_) return PadicApprox::zero(a.p_, abs_known);
        PadicApprox r = x;
        r.prec_ = static_cast<unsigned>(abs_known - x.val_);
        r.unit_ = x.unit_mod(r.prec_);
        return r;
    }
    const long v = std::min(a.val_, b.val_);
    const long abs_known =
        std::min(a.val_ + static_cast<long>(a.prec_), b.val_ + static_cast<long>(b.prec_));
    const unsigned m = static_cast<unsigned>(abs_known - v);
    const BigInt mod = pow_p(a.p_, m);
    BigInt s = a.unit_ * pow_p(a.p_, static_cast<unsigned>(a.val_ - v)) +
               b.unit_ * pow_p(a.p_, static_cast<unsigned>(b.val_ - v));
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
    if (sgn(s) == 0) return PadicApprox::zero(a.p_, abs_known);
    long k = 0;
    while (mpz_divisible_ui_p(s.get_mpz_t(), a.p_)) {
        mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), a.p_);
        ++k;
    }
    PadicApprox r;
    r.p_ = a.p_;
    r.zero_ = false;
    r.val_ = v + k;
    r.prec_ = static_cast<unsigned>(m - k);
    r.unit_ = std::move(s);
    return r;
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
    if (a.p_ != b.p_) throw DomainError("mixed primes");
    if (a.zero_ || b.zero_) {
        // Worst case: the nonzero side has small valuation.
        const long bound = a.val_ + b.val_;
        return PadicApprox::zero(a.p_, bound);
    }
    PadicApprox r;
    r.p_ = a.p_;
    r.zero_ = false;
    r.val_ = a.val_ + b.val_;
    r.prec_ = std::min(a.prec_, b.prec_);
    const BigInt mod = pow_p(a.p_, r.prec_);
    r.unit_ = a.unit_ * b.unit_;
    mpz_mod(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), mod.get_mpz_t());
    return r;
}

PadicApprox operator/(const PadicApprox& a, const PadicApprox& b) { return a * b.inverse(); }

PadicApprox PadicApprox::inverse() const {
    if (zero_) throw DivisionByZero("inverse of a p-adic zero");
    PadicApprox r = *this;
    r.val_ = -val_;
    r.unit_ = mod_inverse(unit_, pow_p(p_, prec_));
    return r;
}

PadicApprox PadicApprox::pow(long e) const {
    if (e == 0) return PadicApprox(p_, 1, std::max(prec_, 1u));
    PadicApprox base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (base.zero_) return PadicApprox::zero(p_, base.val_ * static_cast<long>(k));
    PadicApprox r;
    r.p_ = p_;
    r.zero_ = false;
    r.val_ = base.val_ * static_cast<long>(k);
    r.prec_ = base.prec_;
    const BigInt mod = pow_p(p_, r.prec_);
    mpz_powm_ui(r.unit_.get_mpz_t(), base.unit_.get_mpz_t(), k, mod.get_mpz_t());
    return r;
}

PadicApprox PadicApprox::nth_root(unsigned long b, const BigInt& r0) const {
    if (zero_) throw DomainError("root of a p-adic zero");
    if (val_ != 0) throw DomainError("root extraction requires a unit");
    if (b % p_ == 0) throw DomainError("root exponent divisible by p");
    // Newton iteration y <- y - (y^b - u)/(b y^{b-1}), doubling precision.
    BigInt y = r0 % static_cast<long>(p_);
    unsigned have = 1;
    while (have < prec_) {
        const unsigned next = std::min(prec_, have * 2);
        const BigInt mod = pow_p(p_, next);
        BigInt yb1, yb;
        mpz_powm_ui(yb1.get_mpz_t(), y.get_mpz_t(), b - 1, mod.get_mpz_t());
        yb = yb1 * y % mod;
        const BigInt u = unit_mod(next);
        const BigInt d = mod_inverse(BigInt(b) * yb1 % mod, mod);
        y = (y - (yb - u) * d) % mod;
        if (sgn(y) < 0) y += mod;
        have = next;
    }
    // Verify.
    const BigInt mod = pow_p(p_, prec_);
    BigInt check;
    mpz_powm_ui(check.get_mpz_t(), y.get_mpz_t(), b, mod.get_mpz_t());
    if (check != unit_mod(prec_)) throw DomainError("Hensel lifting failed");
    PadicApprox r = *this;
    r.unit_ = std::move(y);
    return r;
}

double PadicApprox::abs() const {
    return std::pow(static_cast<double>(p_), -static_cast<double>(val_));
}

std::string PadicApprox::str() const {
    if (zero_) return "O(" + std::to_string(p_) + "^" + std::to_string(val_) + ")";
    return unit_.get_str() + "*" + std::to_string(p_) + "^" + std::to_string(val_) + " + O(" +
           std::to_string(p_) + "^" + std::to_string(val_ + static_cast<long>(prec_)) + ")";
}

PadicApprox padic_log(const PadicApprox& a, unsigned target_digits) {
    const unsigned long p = a.prime();
    const PadicApprox t = a - PadicApprox(p, 1, a.precision());
    if (t.is_zero()) {
        if (t.valuation() < 1) throw DomainError("padic_log requires v_p(a-1) >= 1");
        return PadicApprox::zero(p, t.valuation());
    }
    if (t.valuation() < 1) throw DomainError("padic_log requires v_p(a-1) >= 1");
    // Term k has valuation >= k*v(t) - floor(log_p k); stop when that bound
    // exceeds the target.
    PadicApprox sum = PadicApprox::zero(p, static_cast<long>(target_digits) + 1);
    PadicApprox tk = t;
    unsigned long k = 1;
    while (true) {
        long log_p_k = 0;
        unsigned long pk = p;
        while (pk <= k) {
            ++log_p_k;
            pk *= p;
        }
        if (static_cast<long>(k) * t.valuation() - log_p_k > static_cast<long>(target_digits)) break;
        PadicApprox term = tk / PadicApprox(p, BigInt(k), a.precision());
        sum = (k % 2) ? sum + term : sum - term;
        ++k;
        tk = tk * t;
    }
    return sum;
}

PadicApprox padic_root_of_unity(unsigned long p, unsigned long m, long k, unsigned prec) {
    if ((p - 1) % m != 0)
        throw CharacterNotEmbeddable("order " + std::to_string(m) + " does not divide p-1 = " +
                                     std::to_string(p - 1));
    // Primitive root mod p by brute force.
    unsigned long g = 2;
    for (;; ++g) {
        bool ok = true;
        for (unsigned long d = 2; d * d <= p - 1; ++d) {
            if ((p - 1) % d) continue;
            unsigned long e1 = d, e2 = (p - 1) / d;
            for (unsigned long e : {e1, e2}) {
                if (e == p - 1) continue;
                BigInt r;
                BigInt bp(static_cast<long>(p));
                mpz_powm_ui(r.get_mpz_t(), BigInt(static_cast<long>(g)).get_mpz_t(), e, bp.get_mpz_t());
                if (r == 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) break;
    }
    BigInt z0;
    BigInt bp(static_cast<long>(p));
    mpz_powm_ui(z0.get_mpz_t(), BigInt(static_cast<long>(g)).get_mpz_t(), (p - 1) / m, bp.get_mpz_t());
    // Lift the m-th root of 1.
    PadicApprox one(p, 1, prec);
    PadicApprox zeta = one.nth_root(m, z0);
    long kk = k % static_cast<long>(m);
    if (kk < 0) kk += static_cast<long>(m);
    return zeta.pow(kk);
}

PadicApprox eval_padic(const RatFunc& f, const std::map<Var, PadicApprox>& point,
                       const PadicApprox* zeta, unsigned long zeta_order) {
    if (point.empty()) throw DomainError("empty p-adic evaluation point");
    const unsigned long p = point.begin()->second.prime();
    const unsigned prec = point.begin()->second.precision();
    auto coeff_value = [&](const Coeff& c) {
        if (c.is_rational()) return PadicApprox::from_rational(c.rational(), p, prec);
        if (zeta == nullptr) throw CharacterNotEmbeddable("cyclotomic coefficient without an embedded root");
        const auto& cy = c.cyclo();
        if (zeta_order % cy.order() != 0) throw CharacterNotEmbeddable("root order mismatch");
        const PadicApprox z = zeta->pow(static_cast<long>(zeta_order / cy.order()));
        PadicApprox acc = PadicApprox::zero(p, static_cast<long>(prec));
        PadicApprox zp(p, 1, prec);
        for (std::size_t i = 0; i < cy.coeffs().size(); ++i) {
            if (!cy.coeffs()[i].is_zero())
                acc = acc + PadicApprox::from_rational(cy.coeffs()[i], p, prec) * zp;
            zp = zp * z;
        }
        return acc;
    };
    auto eval_poly = [&](const Poly& poly) {
        PadicApprox acc = PadicApprox::zero(p, static_cast<long>(prec));
        for (const auto& [m, c] : poly.terms()) {
            PadicApprox t = coeff_value(c);
            for (auto v : kAllVars) {
                const auto e = m[v];
                if (e == 0) continue;
                auto it = point.find(v);
                if (it == point.end()) throw DomainError(std::string("no p-adic value for ") + var_name(v));
                t = t * it->second.pow(static_cast<long>(e));
            }
            acc = acc + t;
        }
        return acc;
    };
    return eval_poly(f.num()) / eval_poly(f.den());
}

} // namespace qbeta
