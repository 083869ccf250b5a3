#ifndef QBETA_PADIC_ORACLE_HPP
#define QBETA_PADIC_ORACLE_HPP

#include <optional>
#include <vector>

#include "qbeta/padic.hpp"
#include "qbeta/qbernoulli.hpp"

namespace qbeta {

/// Integrand of an r-fold Volkenborn-type Riemann sum at level N:
///
///   (1/[R]_q^r) sum_{x_1..x_r < R}  prod_j chi(x_j) q^{shift_j x_j}
///                                   * [x0 + sum_j mult_j x_j]_q^n
///
/// with R = f p^N. The per-coordinate exponent shift_j already includes the
/// q^{x_j} of the measure.
struct IntegrandSpec {
    unsigned n = 0;
    std::vector<WeightFactor> factors;
    Rational x0;
    std::optional<DirichletCharacter> chi;
};

struct OracleConfig {
    unsigned long p = 3;
    long u0 = 1;            // q0 = 1 + p*u0; |1 - q0|_p < 1 is the standing assumption
    unsigned digits = 12;   // requested p-adic digits
    unsigned N_min = 2;
    unsigned N_max = 6;
    unsigned long term_budget = 10000000;
};

/// Integrand matching the defining multiple integral of a family. The
/// bracket offset is x0 (pass 0 for numbers).
IntegrandSpec integrand_for(const BetaFamily& fam, const Rational& x0);

/// Reference kernel: every power recomputed per term via modular
/// exponentiation. Slow and kept for testing the production kernel.
PadicApprox riemann_sum_reference(const IntegrandSpec& spec, const OracleConfig& cfg, unsigned N);

/// Production kernel: incremental power updates, parallelized over the first
/// coordinate. Bit-identical to the reference (exact modular arithmetic,
/// associative reduction).
PadicApprox riemann_sum(const IntegrandSpec& spec, const OracleConfig& cfg, unsigned N);

/// The exact engine value of the family at q = q0, X = q0^{x0}, L = log_p q0.
PadicApprox exact_value_padic(const BetaFamily& fam, const OracleConfig& cfg, const Rational& x0);

struct ConvergenceRow {
    unsigned N = 0;
    /// v_p(sum_N - exact); when `indistinguishable`, the working precision
    /// could not separate the two and this is a certified lower bound.
    long distance_valuation = 0;
    bool indistinguishable = false;
};

struct ConvergenceReport {
    BetaFamily family;
    unsigned long p = 0;
    Rational x0;
    std::vector<ConvergenceRow> rows;
    bool monotone_nonincreasing = false; // p-adic distances never grow with N
    long final_distance_valuation = 0;
};

ConvergenceReport validate_family(const BetaFamily& fam, const OracleConfig& cfg, const Rational& x0);

} // namespace qbeta

#endif
