#include "qbeta/padic_oracle.hpp"

#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbeta {

namespace {

BigInt pow_p(unsigned long p, unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

BigInt mod_pow(const BigInt& b, unsigned long e, const BigInt& m) {
    BigInt r;
    mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), e, m.get_mpz_t());
    return r;
}

BigInt mod_inv(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertible("no modular inverse");
    return r;
}

// q^e mod m for signed e.
BigInt mod_pow_signed(const BigInt& q, long e, const BigInt& m) {
    if (e >= 0) return mod_pow(q, static_cast<unsigned long>(e), m);
    return mod_inv(mod_pow(q, static_cast<unsigned long>(-e), m), m);
}

struct KernelSetup {
    unsigned long p;
    unsigned W;        // working digits; brackets are exact mod p^{W-1}
    BigInt P;          // p^W
    BigInt P1;         // p^{W-1}
    BigInt q;          // q0 mod P
    BigInt inv_u0;     // inverse of u0 mod P1
    BigInt U0;         // q^{x0} mod P
    unsigned long R;   // per-coordinate range f * p^N
    unsigned long f;   // character modulus (1 when no character)
    std::vector<BigInt> chi_table; // chi(residue) mod P1
    std::vector<BigInt> q_shift;   // q^{shift_j} mod P1
    std::vector<BigInt> q_mult;    // q^{mult_j} mod P
};

KernelSetup prepare(const IntegrandSpec& spec, const OracleConfig& cfg, unsigned N) {
    if (spec.factors.empty()) throw DomainError("integrand needs at least one coordinate");
    if (cfg.p < 3) throw DomainError("odd primes only");
    if (cfg.u0 % static_cast<long>(cfg.p) == 0) throw DomainError("q0 must satisfy v_p(q0 - 1) = 1");
    const auto r = spec.factors.size();

    KernelSetup s;
    s.p = cfg.p;
    s.f = spec.chi ? spec.chi->modulus() : 1;
    if (spec.chi && std::gcd(s.f, cfg.p) != 1) throw DomainError("character modulus must be coprime to p");

    double terms = 1.0;
    s.R = s.f;
    for (unsigned i = 0; i < N; ++i) s.R *= cfg.p;
    for (std::size_t j = 0; j < r; ++j) terms *= static_cast<double>(s.R);
    if (terms > static_cast<double>(cfg.term_budget))
        throw BudgetExceeded("Riemann sum would exceed the term budget");

    s.W = cfg.digits + static_cast<unsigned>(r) * N + 4;
    s.P = pow_p(cfg.p, s.W);
    s.P1 = pow_p(cfg.p, s.W - 1);
    s.q = (BigInt(1) + BigInt(static_cast<long>(cfg.p)) * cfg.u0) % s.P;
    if (sgn(s.q) < 0) s.q += s.P;
    BigInt u0(cfg.u0);
    mpz_mod(u0.get_mpz_t(), u0.get_mpz_t(), s.P1.get_mpz_t());
    s.inv_u0 = mod_inv(u0, s.P1);

    // q^{x0} for rational x0 = a/b with p not dividing b.
    const BigInt a = spec.x0.num();
    const BigInt b = spec.x0.den();
    if (mpz_divisible_ui_p(b.get_mpz_t(), cfg.p)) throw DomainError("x0 denominator must be coprime to p");
    BigInt qa;
    {
        BigInt e = a;
        const bool neg = sgn(e) < 0;
        if (neg) e = -e;
        mpz_powm(qa.get_mpz_t(), s.q.get_mpz_t(), e.get_mpz_t(), s.P.get_mpz_t());
        if (neg) qa = mod_inv(qa, s.P);
    }
    if (b == 1) {
        s.U0 = qa;
    } else {
        PadicApprox base(cfg.p, qa, s.W);
        s.U0 = base.nth_root(b.get_ui(), 1).unit_mod(s.W);
    }

    if (spec.chi) {
        const auto& chi = *spec.chi;
        const unsigned long m = chi.value_order();
        PadicApprox zeta = m <= 2 ? PadicApprox(cfg.p, 1, s.W) : padic_root_of_unity(cfg.p, m, 1, s.W);
        s.chi_table.resize(s.f);
        for (unsigned long a0 = 0; a0 < s.f; ++a0) {
            const Coeff v = chi(static_cast<long>(a0));
            if (v.is_zero()) {
                s.chi_table[a0] = 0;
            } else if (v.is_rational()) {
                BigInt t = v.rational().num(); // character values are algebraic integers
                if (!v.rational().is_integer()) throw DomainError("unexpected character value");
                mpz_mod(t.get_mpz_t(), t.get_mpz_t(), s.P1.get_mpz_t());
                s.chi_table[a0] = t;
            } else {
                const auto& cy = v.cyclo();
                PadicApprox acc = PadicApprox::zero(cfg.p, static_cast<long>(s.W));
                PadicApprox zp(cfg.p, 1, s.W);
                for (std::size_t i = 0; i < cy.coeffs().size(); ++i) {
                    if (!cy.coeffs()[i].is_zero())
                        acc = acc + PadicApprox::from_rational(cy.coeffs()[i], cfg.p, s.W) * zp;
                    zp = zp * zeta;
                }
                if (acc.valuation() != 0) throw DomainError("character value is not a unit");
                s.chi_table[a0] = acc.unit_mod(s.W - 1);
            }
        }
    }

    for (const auto& fct : spec.factors) {
        s.q_shift.push_back(mod_pow_signed(s.q, fct.shift, s.P1));
        s.q_mult.push_back(mod_pow_signed(s.q, fct.multiplier, s.P));
    }
    return s;
}

// [arg]_q^n from A = q^{arg} mod P: ((A - 1)/(p u0))^n mod P1.
BigInt bracket_pow(const KernelSetup& s, const BigInt& A, unsigned n) {
    if (n == 0) return BigInt(1);
    BigInt t = A - 1;
    if (sgn(t) < 0) t += s.P;
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), s.p);
    t = t * s.inv_u0 % s.P1;
    return mod_pow(t, n, s.P1);
}

PadicApprox finalize(const KernelSetup& s, const IntegrandSpec& spec, const OracleConfig& cfg,
                     BigInt acc) {
    const auto r = spec.factors.size();
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), s.P1.get_mpz_t());
    // [R]_q = (q^R - 1)/(p u0), valuation v_p(R) = N.
    BigInt qa = mod_pow(s.q, s.R, s.P);
    BigInt norm_int = qa - 1;
    if (sgn(norm_int) < 0) norm_int += s.P;
    mpz_divexact_ui(norm_int.get_mpz_t(), norm_int.get_mpz_t(), s.p);
    norm_int = norm_int * s.inv_u0 % s.P1;
    const PadicApprox norm = PadicApprox::from_residue(cfg.p, norm_int, s.W - 1);
    const PadicApprox sum = PadicApprox::from_residue(cfg.p, acc, s.W - 1);
    PadicApprox result = sum / norm.pow(static_cast<long>(r));
    // The budget promises `digits` absolute digits after the normalization.
    const long abs_known = result.is_zero()
                               ? result.valuation()
                               : result.valuation() + static_cast<long>(result.precision());
    if (abs_known < static_cast<long>(cfg.digits))
        throw PrecisionExhausted("p-adic Riemann sum lost too many digits");
    return result;
}

} // namespace

IntegrandSpec integrand_for(const BetaFamily& fam, const Rational& x0) {
    IntegrandSpec spec;
    spec.n = fam.n;
    spec.x0 = x0;
    if (family_has_character(fam.kind)) {
        BetaFamily plain = fam;
        plain.kind = fam.kind == FamilyKind::chi ? FamilyKind::twisted
                    : fam.kind == FamilyKind::chi_order_r ? FamilyKind::order_r
                                                          : FamilyKind::hr;
        spec.factors = family_weight_spec(plain);
        const auto chars = enumerate_characters(fam.f);
        if (fam.chi_index >= chars.size()) throw DomainError("character index out of range");
        spec.chi = chars[fam.chi_index];
    } else {
        spec.factors = family_weight_spec(fam);
    }
    return spec;
}

PadicApprox riemann_sum_reference(const IntegrandSpec& spec, const OracleConfig& cfg, unsigned N) {
    const KernelSetup s = prepare(spec, cfg, N);
    const auto r = spec.factors.size();
    std::vector<unsigned long> x(r, 0);
    BigInt acc = 0;
    while (true) {
        // Every power recomputed from scratch: the trusted-by-inspection path.
        BigInt weight_part(1);
        long arg_exponent = 0; // sum of mult_j * x_j
        bool zero_term = false;
        for (std::size_t j = 0; j < r && !zero_term; ++j) {
            weight_part =
                weight_part *
                mod_pow_signed(s.q, spec.factors[j].shift * static_cast<long>(x[j]), s.P1) % s.P1;
            arg_exponent += spec.factors[j].multiplier * static_cast<long>(x[j]);
            if (spec.chi) {
                const BigInt& cv = s.chi_table[x[j] % s.f];
                if (sgn(cv) == 0) zero_term = true;
                weight_part = weight_part * cv % s.P1;
            }
        }
        if (!zero_term) {
            BigInt A = s.U0 * mod_pow_signed(s.q, arg_exponent, s.P) % s.P;
            acc += weight_part * bracket_pow(s, A, spec.n) % s.P1;
        }
        std::size_t j = 0;
        for (; j < r; ++j) {
            if (++x[j] < s.R) break;
            x[j] = 0;
        }
        if (j == r) break;
    }
    return finalize(s, spec, cfg, std::move(acc));
}

PadicApprox riemann_sum(const IntegrandSpec& spec, const OracleConfig& cfg, unsigned N) {
    const KernelSetup s = prepare(spec, cfg, N);
    const auto r = spec.factors.size();
    const unsigned long R = s.R;
    BigInt total = 0;

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    const int want = R >= 64 ? max_threads : 1;

#pragma omp parallel num_threads(want)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nt = omp_get_num_threads();
#else
        const int tid = 0;
        const int nt = 1;
#endif
        const unsigned long lo = R * static_cast<unsigned long>(tid) / static_cast<unsigned long>(nt);
        const unsigned long hi = R * static_cast<unsigned long>(tid + 1) / static_cast<unsigned long>(nt);

        BigInt local = 0;
        if (lo < hi) {
            // First coordinate runs [lo, hi) with incremental updates; inner
            // coordinates run a full odometer per step.
            BigInt w0 = mod_pow_signed(s.q, spec.factors[0].shift * static_cast<long>(lo), s.P1);
            BigInt a0 = s.U0 * mod_pow_signed(s.q, spec.factors[0].multiplier * static_cast<long>(lo), s.P) % s.P;

            std::vector<BigInt> wj(r, BigInt(1)), aj(r, BigInt(1));
            for (unsigned long x0 = lo; x0 < hi; ++x0) {
                BigInt head_w = w0;
                if (spec.chi) head_w = head_w * s.chi_table[x0 % s.f] % s.P1;

                if (r == 1) {
                    if (!spec.chi || sgn(head_w) != 0)
                        local += head_w * bracket_pow(s, a0, spec.n) % s.P1;
                } else {
                    for (std::size_t j = 1; j < r; ++j) {
                        wj[j] = 1;
                        aj[j] = 1;
                    }
                    std::vector<unsigned long> x(r, 0);
                    while (true) {
                        BigInt w = head_w;
                        BigInt A = a0;
                        for (std::size_t j = 1; j < r; ++j) {
                            w = w * wj[j] % s.P1;
                            if (spec.chi) w = w * s.chi_table[x[j] % s.f] % s.P1;
                            A = A * aj[j] % s.P;
                        }
                        if (sgn(w) != 0) local += w * bracket_pow(s, A, spec.n) % s.P1;
                        std::size_t j = 1;
                        for (; j < r; ++j) {
                            wj[j] = wj[j] * s.q_shift[j] % s.P1;
                            aj[j] = aj[j] * s.q_mult[j] % s.P;
                            if (++x[j] < R) break;
                            x[j] = 0;
                            wj[j] = 1;
                            aj[j] = 1;
                        }
                        if (j == r) break;
                    }
                }
                w0 = w0 * s.q_shift[0] % s.P1;
                a0 = a0 * s.q_mult[0] % s.P;
            }
        }
#pragma omp critical
        { total += local; }
    }
    return finalize(s, spec, cfg, std::move(total));
}

PadicApprox exact_value_padic(const BetaFamily& fam, const OracleConfig& cfg, const Rational& x0) {
    const auto r = family_has_character(fam.kind) ? fam.r : family_weight_spec(fam).size();
    const unsigned W = cfg.digits + static_cast<unsigned>(r) * cfg.N_max + 8;
    const PadicApprox q0(cfg.p, BigInt(1) + BigInt(static_cast<long>(cfg.p)) * cfg.u0, W);
    std::map<Var, PadicApprox> point;
    point.emplace(Var::q, q0);
    point.emplace(Var::L, padic_log(q0, W));
    // X = q0^{x0}.
    PadicApprox X = q0;
    {
        const BigInt a = x0.num(), b = x0.den();
        if (mpz_divisible_ui_p(b.get_mpz_t(), cfg.p)) throw DomainError("x0 denominator must be coprime to p");
        long ai = static_cast<long>(mpz_get_si(a.get_mpz_t()));
        X = q0.pow(ai);
        if (b != 1) X = X.nth_root(b.get_ui(), 1);
    }
    point.emplace(Var::X, X);

    const RatFunc value = beta_value(fam, RatFunc::variable(Var::X));
    if (family_has_character(fam.kind)) {
        const auto chars = enumerate_characters(fam.f);
        const unsigned long m = chars[fam.chi_index].value_order();
        if (m > 2) {
            const PadicApprox zeta = padic_root_of_unity(cfg.p, m, 1, W);
            return eval_padic(value, point, &zeta, m);
        }
    }
    return eval_padic(value, point);
}

ConvergenceReport validate_family(const BetaFamily& fam, const OracleConfig& cfg, const Rational& x0) {
    if (family_has_character(fam.kind)) {
        const auto chars = enumerate_characters(fam.f);
        if (fam.chi_index >= chars.size()) throw DomainError("character index out of range");
        const unsigned long m = chars[fam.chi_index].value_order();
        if (m > 2 && (cfg.p - 1) % m != 0)
            throw CharacterNotEmbeddable("character order " + std::to_string(m) +
                                         " does not divide p-1 = " + std::to_string(cfg.p - 1));
    }
    ConvergenceReport rep;
    rep.family = fam;
    rep.p = cfg.p;
    rep.x0 = x0;
    const PadicApprox exact = exact_value_padic(fam, cfg, x0);
    const IntegrandSpec spec = integrand_for(fam, x0);
    bool monotone = true;
    long prev = std::numeric_limits<long>::min();
    for (unsigned N = cfg.N_min; N <= cfg.N_max; ++N) {
        const PadicApprox sum = riemann_sum(spec, cfg, N);
        const PadicApprox diff = sum - exact;
        ConvergenceRow row;
        row.N = N;
        row.distance_valuation = diff.valuation();
        row.indistinguishable = diff.is_zero();
        if (row.distance_valuation < prev) monotone = false;
        prev = row.distance_valuation;
        rep.rows.push_back(row);
    }
    rep.monotone_nonincreasing = monotone;
    rep.final_distance_valuation = rep.rows.empty() ? 0 : rep.rows.back().distance_valuation;
    return rep;
}

} // namespace qbeta
