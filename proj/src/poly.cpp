#include "qbeta/poly.hpp"

#include <algorithm>

namespace qbeta {

const char* var_name(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::L: return "L";
        case Var::X: return "X";
        case Var::Y: return "Y";
    }
    return "?";
}

std::string Monomial::str() const {
    std::string out;
    for (auto v : kAllVars) {
        const auto p = (*this)[v];
        if (p == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(v);
        if (p > 1) out += "^" + std::to_string(p);
    }
    return out.empty() ? "1" : out;
}

Poly::Poly(Coeff c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Poly Poly::variable(Var v, std::uint32_t power) {
    Monomial m;
    m[v] = power;
    return term(Coeff(Rational(1)), m);
}

Poly Poly::term(Coeff c, const Monomial& m) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() && terms_.begin()->second.is_one();
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

std::pair<Monomial, Coeff> Poly::leading() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return *terms_.rbegin();
}

std::uint32_t Poly::degree(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

unsigned Poly::vars_used() const {
    unsigned mask = 0;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < 4; ++i)
            if (m.e[i] > 0) mask |= 1u << i;
    return mask;
}

void Poly::add_term(const Monomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Coeff& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    Poly r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

Monomial Poly::exponent_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial m = terms_.begin()->first;
    for (const auto& [mm, c] : terms_)
        for (std::size_t i = 0; i < 4; ++i) m.e[i] = std::min(m.e[i], mm.e[i]);
    return m;
}

Poly Poly::shifted_down(const Monomial& m) const {
    Poly r;
    for (const auto& [mm, c] : terms_) {
        Monomial nm;
        for (std::size_t i = 0; i < 4; ++i) {
            if (mm.e[i] < m.e[i]) throw DomainError("monomial does not divide polynomial");
            nm.e[i] = mm.e[i] - m.e[i];
        }
        r.terms_.emplace(nm, c);
    }
    return r;
}

std::vector<Coeff> Poly::univariate_in(Var v) const {
    if (!uses_only(v)) throw DomainError("polynomial is not univariate");
    std::vector<Coeff> out(degree(v) + 1, Coeff(Rational(0)));
    for (const auto& [m, c] : terms_) out[m[v]] = c;
    return out;
}

Poly Poly::from_univariate(Var v, const std::vector<Coeff>& coeffs) {
    Poly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Monomial m;
        m[v] = static_cast<std::uint32_t>(i);
        r.add_term(m, coeffs[i]);
    }
    return r;
}

std::vector<Poly> Poly::collect(Var v) const {
    std::vector<Poly> out(degree(v) + 1);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        const auto k = rest[v];
        rest[v] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const bool unit = it->second.is_one();
        if (!unit || it->first.is_constant()) out += it->second.str();
        if (!it->first.is_constant()) {
            if (!unit) out += "*";
            out += it->first.str();
        }
    }
    return out;
}

} // namespace qbeta
