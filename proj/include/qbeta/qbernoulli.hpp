#ifndef QBETA_QBERNOULLI_HPP
#define QBETA_QBERNOULLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "qbeta/characters.hpp"
#include "qbeta/ratfunc.hpp"

namespace qbeta {

/// One weight factor of a beta sum: at summation index l it contributes
/// weight(l * multiplier + shift).
struct WeightFactor {
    long multiplier = 1;
    long shift = 0;
};

/// The full weight profile; every beta family resolves to one of these.
using WeightSpec = std::vector<WeightFactor>;

/// The atom k/[k]_q as a rational function of q, extended to k = 0 by the
/// zero mode (q-1)/L. The marker L transforms as the logarithm of the base:
/// rebase scales it by f, base inversion flips its sign. This is the unique
/// extension under which the distribution relations hold term by term,
/// because sum_{a<f} q^{k a} * weight_f(k) = [f]_q * weight(k) for every
/// integer k including 0.
RatFunc weight(long k);

/// (1/(1-q)^n) sum_{l=0}^{n} C(n,l) (-1)^l arg^l prod_j weight(l*w_j + d_j).
/// `arg` plays the role of q^x: pass X for a symbolic argument, 1 for x = 0.
RatFunc gen_beta(unsigned n, const WeightSpec& spec, const RatFunc& arg);

/// Base change q -> q^f together with L -> f*L.
RatFunc rebase(const RatFunc& e, unsigned long f);

/// Base inversion q -> 1/q together with L -> -L.
RatFunc invert_base(const RatFunc& e);

enum class FamilyKind {
    carlitz,    // weights (1,1): integral of [x]^n
    twisted,    // weights (1,0): q^{-y}-twisted polynomials
    order_r,    // weights (1,0) x r
    hr,         // weights (1, h-j), j = 1..r
    barnes,     // arbitrary (w_j, d_j)
    chi,        // character-attached twisted
    chi_order_r,
    chi_hr,
};

const char* family_name(FamilyKind k);
std::optional<FamilyKind> family_from_name(const std::string& name);
bool family_has_character(FamilyKind k);

struct BetaFamily {
    FamilyKind kind = FamilyKind::carlitz;
    unsigned n = 0;
    unsigned r = 1;          // order (order_r, hr, barnes, chi_order_r, chi_hr)
    long h = 2;              // hr/chi_hr exponent parameter
    WeightSpec barnes;       // barnes only
    unsigned long f = 1;     // character modulus
    unsigned chi_index = 0;  // index into enumerate_characters(f)
};

/// Weight profile of a non-character family (InvalidFamily for character kinds).
WeightSpec family_weight_spec(const BetaFamily& fam);

/// Exact value of a non-character family at the given argument.
RatFunc family_beta(const BetaFamily& fam, const RatFunc& arg);

/// Character-attached family, defined through the distribution form:
/// [f]_q^{n-r} sum over residue tuples of character-and-power-weighted
/// rebased plain values, with the argument realized exactly as q^{sum a} * arg.
RatFunc chi_beta(const BetaFamily& fam, const DirichletCharacter& chi, const RatFunc& arg);

/// Convenience dispatcher: resolves the character (if any) and evaluates.
RatFunc beta_value(const BetaFamily& fam, const RatFunc& arg);

} // namespace qbeta

#endif
