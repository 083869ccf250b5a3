#include "qbeta/characters.hpp"

#include <numeric>

namespace qbeta {

namespace {

unsigned long mul_order(unsigned long a, unsigned long m) {
    unsigned long r = a % m, k = 1;
    while (r != 1) {
        r = (r * a) % m;
        ++k;
    }
    return k;
}

// Smallest primitive root mod p^e for odd prime p.
unsigned long primitive_root(unsigned long p, unsigned long e) {
    const unsigned long pe = [&] {
        unsigned long x = 1;
        for (unsigned long i = 0; i < e; ++i) x *= p;
        return x;
    }();
    const unsigned long target = pe / p * (p - 1); // phi(p^e)
    for (unsigned long g = 2; g < pe; ++g) {
        if (std::gcd(g, pe) != 1) continue;
        if (mul_order(g, pe) == target) return g;
    }
    throw DomainError("no primitive root found");
}

} // namespace

UnitGroupStructure UnitGroupStructure::of(unsigned long f) {
    if (f == 0) throw DomainError("modulus must be positive");
    UnitGroupStructure g;
    g.modulus = f;
    unsigned long n = f;
    unsigned long two = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++two;
    }
    if (two == 2) {
        g.components.push_back({4, 3, 2});
    } else if (two >= 3) {
        const unsigned long pk = 1ul << two;
        g.components.push_back({pk, pk - 1, 2});
        g.components.push_back({pk, 5, 1ul << (two - 2)});
    }
    for (unsigned long p = 3; p * p <= n; p += 2) {
        if (n % p) continue;
        unsigned long e = 0, pe = 1;
        while (n % p == 0) {
            n /= p;
            ++e;
            pe *= p;
        }
        g.components.push_back({pe, primitive_root(p, e), pe / p * (p - 1)});
    }
    if (n > 1) g.components.push_back({n, primitive_root(n, 1), n - 1});
    return g;
}

unsigned long UnitGroupStructure::phi() const {
    unsigned long r = 1;
    for (const auto& c : components) r *= c.order;
    return r;
}

std::vector<unsigned long> UnitGroupStructure::dlog(unsigned long a) const {
    a %= modulus;
    if (std::gcd(a, modulus) != 1) throw DomainError("discrete log of a non-unit");
    std::vector<unsigned long> out;
    out.reserve(components.size());
    for (const auto& c : components) {
        const unsigned long target = a % c.prime_power;
        // For 2^k (k>=3) the <-1> component: solve (-1)^i * 5^j; the sign is
        // recovered by whether target is in the <5> coset (all of which are
        // 1 mod 4) or its negation.
        if (c.prime_power % 8 == 0 && c.generator == c.prime_power - 1) {
            out.push_back(target % 4 == 1 ? 0 : 1);
            continue;
        }
        unsigned long t = target;
        if (c.prime_power % 8 == 0 && c.generator == 5 && t % 4 != 1) t = c.prime_power - t;
        unsigned long x = 1;
        unsigned long k = 0;
        while (x != t) {
            x = (x * c.generator) % c.prime_power;
            if (++k > c.order) throw DomainError("discrete log failed");
        }
        out.push_back(k);
    }
    return out;
}

std::vector<unsigned long> UnitGroupStructure::units() const {
    std::vector<unsigned long> out;
    for (unsigned long a = 0; a < modulus; ++a)
        if (std::gcd(a, modulus) == 1) out.push_back(a == 0 ? modulus : a);
    if (modulus == 1) out = {1};
    return out;
}

DirichletCharacter::DirichletCharacter(UnitGroupStructure group, std::vector<unsigned long> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
    if (exps_.size() != group_.components.size()) throw DomainError("exponent tuple has wrong length");
    unsigned long ord = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const unsigned long d = group_.components[i].order;
        const unsigned long e = exps_[i] % d;
        if (e) ord = std::lcm(ord, d / std::gcd(d, e));
    }
    order_ = ord;
}

Coeff DirichletCharacter::operator()(long a) const {
    const unsigned long f = modulus();
    long r = a % static_cast<long>(f);
    if (r < 0) r += static_cast<long>(f);
    unsigned long u = static_cast<unsigned long>(r);
    if (f == 1) return Coeff(Rational(1));
    if (std::gcd(u, f) != 1) return Coeff(Rational(0));
    const auto logs = group_.dlog(u);
    // chi(a) = prod_i zeta_{d_i}^{e_i * log_i}; with g = gcd(e_i, d_i) this is
    // zeta_{d_i/g}^{(e_i/g) * log_i}, and d_i/g divides the value order m.
    unsigned long t = 0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        const unsigned long d = group_.components[i].order;
        const unsigned long e = exps_[i] % d;
        if (e == 0) continue;
        const unsigned long g = std::gcd(e, d);
        const unsigned long dr = d / g, er = e / g;
        t = (t + er % dr * (logs[i] % dr) % dr * (order_ / dr)) % order_;
    }
    return Coeff(CycloElement::root_of_unity(order_, static_cast<long>(t)));
}

unsigned long DirichletCharacter::conductor() const {
    const unsigned long f = modulus();
    for (unsigned long d = 1; d <= f; ++d) {
        if (f % d) continue;
        // chi factors through (Z/d)^* iff it is 1 on every unit a = 1 mod d.
        bool ok = true;
        for (unsigned long a = 1; a < f && ok; ++a) {
            if (std::gcd(a, f) != 1 || a % d != 1 % d) continue;
            ok = (*this)(static_cast<long>(a)).is_one();
        }
        if (ok) return d;
    }
    return f;
}

std::vector<DirichletCharacter> enumerate_characters(unsigned long f) {
    const auto g = UnitGroupStructure::of(f);
    std::vector<DirichletCharacter> out;
    const std::size_t k = g.components.size();
    std::vector<unsigned long> exps(k, 0);
    while (true) {
        out.emplace_back(g, exps);
        // Lexicographic increment, least significant component last.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++exps[i] < g.components[i].order) break;
            exps[i] = 0;
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

} // namespace qbeta
