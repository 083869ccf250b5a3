#ifndef QBETA_CHARACTERS_HPP
#define QBETA_CHARACTERS_HPP

#include <vector>

#include "qbeta/coeff.hpp"

namespace qbeta {

/// Multiplicative structure of (Z/f)^* via CRT: one cyclic component per odd
/// prime power, and for 2^k (k >= 3) the pair <-1> x <5>.
struct UnitGroupStructure {
    struct Component {
        unsigned long prime_power; // p^e
        unsigned long generator;   // generator mod p^e (or -1 / 5 for 2^k)
        unsigned long order;       // multiplicative order of the generator
    };

    unsigned long modulus = 1;
    std::vector<Component> components;

    static UnitGroupStructure of(unsigned long f);

    unsigned long phi() const;
    /// Discrete log of unit a in each component; a must be coprime to f.
    std::vector<unsigned long> dlog(unsigned long a) const;
    std::vector<unsigned long> units() const;
};

/// Character of (Z/f)^*, stored by its exponents against the group generators,
/// extended by zero off the units.
class DirichletCharacter {
public:
    DirichletCharacter(UnitGroupStructure group, std::vector<unsigned long> exponents);

    unsigned long modulus() const { return group_.modulus; }
    const std::vector<unsigned long>& exponents() const { return exps_; }
    /// Order of the character values (1 for the trivial character).
    unsigned long value_order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    /// chi(a): a root of unity of order dividing value_order(), or 0 off the units.
    Coeff operator()(long a) const;

    /// Smallest modulus the character factors through.
    unsigned long conductor() const;
    bool is_primitive() const { return conductor() == modulus(); }

private:
    UnitGroupStructure group_;
    std::vector<unsigned long> exps_;
    unsigned long order_;
};

/// All phi(f) characters mod f, trivial first, ordered lexicographically by
/// exponent tuple.
std::vector<DirichletCharacter> enumerate_characters(unsigned long f);

} // namespace qbeta

#endif
