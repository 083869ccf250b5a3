#include "qbeta/ratfunc.hpp"

#include <algorithm>

namespace qbeta {

namespace {

// Univariate helpers over Coeff vectors (ascending, possibly with zero tail).
void uni_trim(std::vector<Coeff>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Remainder of a by b (b nonzero); a is consumed.
std::vector<Coeff> uni_rem(std::vector<Coeff> a, const std::vector<Coeff>& b) {
    uni_trim(a);
    const Coeff lb_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const Coeff f = a.back() * lb_inv;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
    }
    return a;
}

// Exact quotient a / b; remainder must vanish.
std::vector<Coeff> uni_divexact(std::vector<Coeff> a, const std::vector<Coeff>& b) {
    uni_trim(a);
    if (a.empty()) return a;
    if (a.size() < b.size()) throw DomainError("inexact univariate division");
    const Coeff lb_inv = b.back().inverse();
    std::vector<Coeff> q(a.size() - b.size() + 1, Coeff(Rational(0)));
    while (a.size() >= b.size()) {
        const Coeff f = a.back() * lb_inv;
        const std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
        if (a.empty()) return q;
    }
    throw DomainError("inexact univariate division");
}

std::vector<Coeff> uni_gcd(std::vector<Coeff> a, std::vector<Coeff> b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        auto r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Coeff inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

} // namespace

RatFunc::RatFunc(const Coeff& c) : num_(Poly::constant(c)), den_(Poly::constant(Coeff(Rational(1)))) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(Coeff(Rational(1)))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

RatFunc RatFunc::q_power(long e) {
    if (e >= 0) return RatFunc(Poly::variable(Var::q, static_cast<std::uint32_t>(e)));
    return RatFunc(Poly::constant(Coeff(Rational(1))), Poly::variable(Var::q, static_cast<std::uint32_t>(-e)));
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Coeff(Rational(1)));
        return;
    }
    // 1. Cancel the common monomial factor.
    Monomial cn = num_.exponent_content();
    Monomial cd = den_.exponent_content();
    Monomial common;
    bool any = false;
    for (std::size_t i = 0; i < 4; ++i) {
        common.e[i] = std::min(cn.e[i], cd.e[i]);
        any = any || common.e[i] > 0;
    }
    if (any) {
        num_ = num_.shifted_down(common);
        den_ = den_.shifted_down(common);
    }
    // 2. Univariate-in-q GCD between den and the q-content of num.
    if (!den_.is_constant() && den_.uses_only(Var::q)) {
        auto g = den_.univariate_in(Var::q);
        // Slice num by its (L, X, Y) part; each slice is univariate in q.
        std::map<Monomial, std::vector<Coeff>> slices;
        for (const auto& [m, c] : num_.terms()) {
            Monomial key = m;
            const auto k = key[Var::q];
            key[Var::q] = 0;
            auto& v = slices[key];
            if (v.size() <= k) v.resize(k + 1, Coeff(Rational(0)));
            v[k] = c;
        }
        for (const auto& [key, v] : slices) {
            if (g.size() <= 1) break;
            g = uni_gcd(std::move(g), v);
        }
        if (g.size() > 1) {
            den_ = Poly::from_univariate(Var::q, uni_divexact(den_.univariate_in(Var::q), g));
            Poly reduced;
            for (auto& [key, v] : slices) {
                auto qv = uni_divexact(std::move(v), g);
                for (std::size_t k = 0; k < qv.size(); ++k) {
                    if (qv[k].is_zero()) continue;
                    Monomial m = key;
                    m[Var::q] = static_cast<std::uint32_t>(k);
                    reduced.add_term(m, qv[k]);
                }
            }
            num_ = std::move(reduced);
        }
    }
    // 3. Monic denominator.
    const Coeff lc = den_.leading().second;
    if (!lc.is_one()) {
        const Coeff inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(1);
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RatFunc acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::substitute(Var v, const RatFunc& repl) const {
    // Monomial fast path: repl = c * monomial with rational c.
    if (repl.is_polynomial() && repl.num_.term_count() == 1) {
        const auto& [mm, cc] = *repl.num_.terms().begin();
        if (cc.is_rational()) {
            auto apply = [&](const Poly& p) {
                Poly out;
                for (const auto& [m, c] : p.terms()) {
                    const auto k = m[v];
                    Monomial base = m;
                    base[v] = 0;
                    Coeff nc = c;
                    Monomial acc = base;
                    if (k > 0) {
                        nc = c * Coeff(cc.rational().pow(static_cast<long>(k)));
                        Monomial pw;
                        for (std::size_t i = 0; i < 4; ++i) pw.e[i] = mm.e[i] * k;
                        acc = base * pw;
                    }
                    out.add_term(acc, nc);
                }
                return out;
            };
            Poly n = apply(num_), d = apply(den_);
            if (d.is_zero()) throw DivisionByZero("substitution annihilates the denominator");
            return RatFunc(std::move(n), std::move(d));
        }
    }
    auto horner = [&](const Poly& p) {
        auto slices = p.collect(v);
        RatFunc acc;
        for (auto it = slices.rbegin(); it != slices.rend(); ++it) acc = acc * repl + RatFunc(*it);
        return acc;
    };
    RatFunc n = horner(num_);
    RatFunc d = horner(den_);
    if (d.is_zero()) throw DivisionByZero("substitution annihilates the denominator");
    return n / d;
}

RatFunc RatFunc::substitute_reciprocal(Var v) const {
    const std::uint32_t dn = num_.degree(v), dd = den_.degree(v);
    auto rev = [&](const Poly& p, std::uint32_t top) {
        Poly out;
        for (const auto& [m, c] : p.terms()) {
            Monomial nm = m;
            nm[v] = top - m[v];
            out.add_term(nm, c);
        }
        return out;
    };
    Poly n = rev(num_, dn), d = rev(den_, dd);
    if (dd > dn) {
        Monomial m;
        m[v] = dd - dn;
        n = n.shifted(m);
    } else if (dn > dd) {
        Monomial m;
        m[v] = dn - dd;
        d = d.shifted(m);
    }
    return RatFunc(std::move(n), std::move(d));
}

std::complex<double> RatFunc::eval_complex(const std::map<Var, std::complex<double>>& point) const {
    // Integer powers by squaring; std::pow NaNs on a zero complex base.
    auto cpow = [](std::complex<double> z, std::uint32_t k) {
        std::complex<double> acc(1.0, 0.0);
        while (k) {
            if (k & 1) acc *= z;
            z *= z;
            k >>= 1;
        }
        return acc;
    };
    auto eval_poly = [&](const Poly& p) {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [m, c] : p.terms()) {
            std::complex<double> t = c.to_complex();
            for (auto v : kAllVars) {
                const auto e = m[v];
                if (e == 0) continue;
                auto it = point.find(v);
                if (it == point.end()) throw DomainError(std::string("no value assigned to ") + var_name(v));
                t *= cpow(it->second, e);
            }
            acc += t;
        }
        return acc;
    };
    const std::complex<double> d = eval_poly(den_);
    if (std::abs(d) < 1e-300) throw PoleAtPoint();
    return eval_poly(num_) / d;
}

Rational RatFunc::eval_rational(const std::map<Var, Rational>& point) const {
    auto eval_poly = [&](const Poly& p) {
        Rational acc(0);
        for (const auto& [m, c] : p.terms()) {
            if (!c.is_rational()) throw DomainError("exact evaluation requires rational coefficients");
            Rational t = c.rational();
            for (auto v : kAllVars) {
                const auto e = m[v];
                if (e == 0) continue;
                auto it = point.find(v);
                if (it == point.end()) throw DomainError(std::string("no value assigned to ") + var_name(v));
                t *= it->second.pow(static_cast<long>(e));
            }
            acc += t;
        }
        return acc;
    };
    const Rational d = eval_poly(den_);
    if (d.is_zero()) throw PoleAtPoint("denominator vanishes at rational point");
    return eval_poly(num_) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace qbeta
