#include "qbeta/upoly.hpp"

#include <algorithm>

namespace qbeta {

UPoly UPoly::monomial(const Rational& c, std::size_t deg) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * c);
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    UPoly r = a;
    if (r.degree() < b.degree()) return {UPoly(), r};
    std::vector<Rational> q(static_cast<std::size_t>(r.degree() - b.degree()) + 1, Rational(0));
    const Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        Rational f = r.leading() / lb;
        q[shift] = f;
        r = r - (b * UPoly::monomial(f, shift));
    }
    return {UPoly(std::move(q)), r};
}

UPoly UPoly::divided_by(const UPoly& b) const {
    auto [q, r] = divrem(*this, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return scaled(leading().inverse());
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> UPoly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || !c_[i].is_one()) out += c_[i].str();
        if (i > 0) {
            if (!c_[i].is_one()) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UPolyXgcd upoly_xgcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly s0(Rational(1)), s1;
    UPoly t0, t1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = UPoly::divrem(r0, r1);
        UPoly s = s0 - q * s1;
        UPoly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

} // namespace qbeta
