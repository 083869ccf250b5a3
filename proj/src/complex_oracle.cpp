#include "qbeta/complex_oracle.hpp"

#include <cmath>
#include <limits>

#include "qbeta/qcombinatorics.hpp"

namespace qbeta {

Complex complex_q_power(Complex q, double x) { return std::exp(x * std::log(q)); }

Complex complex_zero_mode(Complex q) { return (q - 1.0) / std::log(q); }

namespace {

// Integer powers; std::pow on complex arguments NaNs at a zero base.
Complex cpow(Complex z, unsigned k) {
    Complex acc{1.0, 0.0};
    while (k) {
        if (k & 1) acc *= z;
        z *= z;
        k >>= 1;
    }
    return acc;
}

void require_contracting(Complex q) {
    if (std::abs(q) >= 1.0) throw DivergentSpec("series require |q| < 1");
}

Complex bracket(Complex q, Complex q_to_arg) { return (1.0 - q_to_arg) / (1.0 - q); }

// Truncation length for a series with per-term bound C * rho^m: smallest M
// with C * rho^M / (1 - rho) < tol.
unsigned truncation_length(double C, double rho, double tol) {
    if (C <= 0.0) return 1;
    const double lhs = tol * (1.0 - rho) / C;
    if (lhs >= 1.0) return 1;
    const double M = std::log(lhs) / std::log(rho);
    return static_cast<unsigned>(std::ceil(M)) + 2;
}

} // namespace

SeriesResult series_twisted(unsigned n, const SeriesPoint& pt, double tol, unsigned force_terms) {
    require_contracting(pt.q);
    SeriesResult res;
    if (n == 0) return res;
    const double aq = std::abs(pt.q);
    const double ax = std::pow(aq, pt.x);
    const double bracket_cap = (1.0 + ax) / std::abs(1.0 - pt.q);
    const double C = n * ax * std::pow(bracket_cap, static_cast<double>(n - 1));
    const unsigned M = force_terms ? force_terms : truncation_length(C, aq, tol);
    const Complex qx = complex_q_power(pt.q, pt.x);
    Complex qpow = qx; // q^{x+m}
    Complex sum{0.0, 0.0};
    for (unsigned m = 0; m < M; ++m) {
        sum += qpow * cpow(bracket(pt.q, qpow), n - 1);
        qpow *= pt.q;
    }
    res.value = -static_cast<double>(n) * sum;
    res.tail_bound = C * std::pow(aq, static_cast<double>(M)) / (1.0 - aq);
    res.terms = M;
    return res;
}

SeriesResult series_order_two_weights(unsigned n, long h, const SeriesPoint& pt, double tol,
                                      unsigned force_terms) {
    require_contracting(pt.q);
    if (h < 1) throw DivergentSpec("q^{hm} does not decay for h < 1 when |q| < 1");
    const double aq = std::abs(pt.q);
    const double ax = std::pow(aq, pt.x);
    const double bracket_cap = (1.0 + ax) / std::abs(1.0 - pt.q);
    const double C1 = n * ax * std::pow(bracket_cap, static_cast<double>(n) - 1.0);
    const double rho1 = std::pow(aq, static_cast<double>(h));
    const double C2 = std::abs(static_cast<double>(h - 1)) * std::abs(1.0 - pt.q) *
                      std::pow(bracket_cap, static_cast<double>(n));
    const double rho2 = h > 1 ? std::pow(aq, static_cast<double>(h - 1)) : 0.0;
    unsigned M = truncation_length(C1, rho1, tol);
    if (h > 1) M = std::max(M, truncation_length(C2, rho2, tol));
    if (force_terms) M = force_terms;

    const Complex qx = complex_q_power(pt.q, pt.x);
    const Complex qh = std::pow(pt.q, static_cast<double>(h));
    const Complex qh1 = std::pow(pt.q, static_cast<double>(h - 1));
    Complex qxm = qx;   // q^{x+m}
    Complex qhm{1.0};   // q^{hm}
    Complex qh1m{1.0};  // q^{(h-1)m}
    Complex sum1{0.0}, sum2{0.0};
    SeriesResult res;
    for (unsigned m = 0; m < M; ++m) {
        const Complex br = bracket(pt.q, qxm);
        if (n >= 1) sum1 += qhm * qx * cpow(br, n - 1);
        if (h != 1) sum2 += qh1m * cpow(br, n);
        qxm *= pt.q;
        qhm *= qh;
        qh1m *= qh1;
    }
    res.value = -static_cast<double>(n) * sum1 +
                static_cast<double>(h - 1) * (1.0 - pt.q) * sum2;
    res.tail_bound = C1 * std::pow(rho1, static_cast<double>(M)) / (1.0 - rho1);
    if (h > 1) res.tail_bound += C2 * std::pow(rho2, static_cast<double>(M)) / (1.0 - rho2);
    res.terms = M;
    return res;
}

SeriesResult series_chi(unsigned n, const DirichletCharacter& chi, const SeriesPoint& pt,
                        bool with_q_factor, double tol, unsigned force_terms) {
    require_contracting(pt.q);
    SeriesResult res;
    if (n == 0) return res;
    const double aq = std::abs(pt.q);
    const double ax = std::pow(aq, pt.x);
    const double bracket_cap = (1.0 + ax) / std::abs(1.0 - pt.q);
    const double C = n * ax * std::pow(bracket_cap, static_cast<double>(n - 1));
    unsigned M = force_terms ? force_terms
                             : (with_q_factor ? truncation_length(C, aq, tol) : 4096);
    const Complex qx = complex_q_power(pt.q, pt.x);
    Complex qpow = qx;
    Complex sum{0.0, 0.0};
    for (unsigned m = 0; m < M; ++m) {
        const Complex cv = chi(static_cast<long>(m)).to_complex();
        const Complex br = cpow(bracket(pt.q, qpow), n - 1);
        sum += cv * (with_q_factor ? qpow * br : br);
        qpow *= pt.q;
    }
    res.value = -static_cast<double>(n) * sum;
    res.tail_bound = with_q_factor ? C * std::pow(aq, static_cast<double>(M)) / (1.0 - aq)
                                   : std::numeric_limits<double>::infinity();
    res.terms = M;
    return res;
}

SeriesResult gf_coefficient_twisted(unsigned n, const SeriesPoint& pt, double tol,
                                    unsigned force_terms) {
    require_contracting(pt.q);
    SeriesResult res;
    if (n == 0) return res; // the generating function starts at t^1
    const double aq = std::abs(pt.q);
    const double ax = std::pow(aq, pt.x);
    const double bracket_cap = (1.0 + ax) / std::abs(1.0 - pt.q);
    const double C = n * ax * std::pow(bracket_cap, static_cast<double>(n - 1));
    const unsigned M = force_terms ? force_terms : truncation_length(C, aq, tol);
    // Coefficient of t^n in -t sum_m w_m e^{z_m t}: accumulate the exponential
    // expansions degree by degree rather than in closed form.
    std::vector<Complex> coef(n, Complex{0.0, 0.0}); // of e-part, degrees 0..n-1
    const Complex qx = complex_q_power(pt.q, pt.x);
    Complex qpow = qx;
    for (unsigned m = 0; m < M; ++m) {
        const Complex z = bracket(pt.q, qpow);
        Complex zk{1.0, 0.0};
        double fact = 1.0;
        for (unsigned k = 0; k < n; ++k) {
            coef[k] += qpow * zk / fact;
            zk *= z;
            fact *= static_cast<double>(k + 1);
        }
        qpow *= pt.q;
    }
    double nfact = 1.0;
    for (unsigned k = 2; k <= n; ++k) nfact *= static_cast<double>(k);
    res.value = -nfact * coef[n - 1];
    res.tail_bound = C * std::pow(aq, static_cast<double>(M)) / (1.0 - aq);
    res.terms = M;
    return res;
}

SeriesResult gf_coefficient_chi(unsigned n, const DirichletCharacter& chi, const SeriesPoint& pt,
                                bool with_q_factor, double tol, unsigned force_terms) {
    require_contracting(pt.q);
    SeriesResult res;
    if (n == 0) return res;
    const double aq = std::abs(pt.q);
    const double ax = std::pow(aq, pt.x);
    const double bracket_cap = (1.0 + ax) / std::abs(1.0 - pt.q);
    const double C = n * ax * std::pow(bracket_cap, static_cast<double>(n - 1));
    unsigned M = with_q_factor ? truncation_length(C, aq, tol) : 4096;
    if (force_terms) M = force_terms;
    std::vector<Complex> coef(n, Complex{0.0, 0.0});
    const Complex qx = complex_q_power(pt.q, pt.x);
    Complex qpow = qx;
    for (unsigned m = 0; m < M; ++m) {
        const Complex cv = chi(static_cast<long>(m)).to_complex();
        const Complex z = bracket(pt.q, qpow);
        const Complex w = with_q_factor ? cv * qpow : cv;
        Complex zk{1.0, 0.0};
        double fact = 1.0;
        for (unsigned k = 0; k < n; ++k) {
            coef[k] += w * zk / fact;
            zk *= z;
            fact *= static_cast<double>(k + 1);
        }
        qpow *= pt.q;
    }
    double nfact = 1.0;
    for (unsigned k = 2; k <= n; ++k) nfact *= static_cast<double>(k);
    res.value = -nfact * coef[n - 1];
    res.tail_bound = with_q_factor ? C * std::pow(aq, static_cast<double>(M)) / (1.0 - aq)
                                   : std::numeric_limits<double>::infinity();
    res.terms = M;
    return res;
}

RatFunc closed_form_without_zero_mode(unsigned n, const WeightSpec& spec, const RatFunc& arg) {
    RatFunc full = gen_beta(n, spec, arg);
    bool zero_mode_at_l0 = false;
    for (const auto& f : spec) zero_mode_at_l0 = zero_mode_at_l0 || f.shift == 0;
    if (!zero_mode_at_l0) return full;
    RatFunc term0(1);
    for (const auto& f : spec) term0 *= weight(f.shift);
    const RatFunc one_minus_q = RatFunc(1) - RatFunc::variable(Var::q);
    return full - term0 / one_minus_q.pow(static_cast<long>(n));
}

Complex eval_at(const RatFunc& f, const SeriesPoint& pt) {
    std::map<Var, Complex> point;
    point.emplace(Var::q, pt.q);
    point.emplace(Var::L, std::log(pt.q));
    point.emplace(Var::X, complex_q_power(pt.q, pt.x));
    point.emplace(Var::Y, Complex{1.0, 0.0});
    return f.eval_complex(point);
}

Complex eval_family_at(const BetaFamily& fam, const SeriesPoint& pt, bool drop_zero_mode) {
    const RatFunc X = RatFunc::variable(Var::X);
    if (family_has_character(fam.kind)) {
        if (!drop_zero_mode) return eval_at(beta_value(fam, X), pt);
        // The zero mode enters only through the rebased l = 0 term; dropping it
        // inside the base of the distribution sum matches the series reading.
        BetaFamily plain = fam;
        plain.kind = fam.kind == FamilyKind::chi ? FamilyKind::twisted
                    : fam.kind == FamilyKind::chi_order_r ? FamilyKind::order_r
                                                          : FamilyKind::hr;
        const auto chars = enumerate_characters(fam.f);
        const auto& chi = chars.at(fam.chi_index);
        const auto spec = family_weight_spec(plain);
        // Distribution sum with the series variant of the rebased base.
        RatFunc base = rebase(closed_form_without_zero_mode(fam.n, spec, X), fam.f);
        const unsigned r = static_cast<unsigned>(spec.size());
        RatFunc sum(0);
        std::vector<unsigned long> tuple(r, 0);
        while (true) {
            long twist = 0;
            unsigned long a_sum = 0;
            Coeff cp(Rational(1));
            for (unsigned j = 0; j < r; ++j) {
                a_sum += tuple[j];
                twist += spec[j].shift * static_cast<long>(tuple[j]);
                cp *= chi(static_cast<long>(tuple[j]));
            }
            if (!cp.is_zero())
                sum += RatFunc(Poly::constant(cp)) * RatFunc::q_power(twist) *
                       base.substitute(Var::X, RatFunc::q_power(static_cast<long>(a_sum)) * X);
            unsigned j = 0;
            for (; j < r; ++j) {
                if (++tuple[j] < fam.f) break;
                tuple[j] = 0;
            }
            if (j == r) break;
        }
        const long e = static_cast<long>(fam.n) - static_cast<long>(r);
        return eval_at(q_int(static_cast<long>(fam.f)).pow(e) * sum, pt);
    }
    const auto spec = family_weight_spec(fam);
    const RatFunc value = drop_zero_mode ? closed_form_without_zero_mode(fam.n, spec, X)
                                         : gen_beta(fam.n, spec, X);
    return eval_at(value, pt);
}

std::vector<LimitRow> carlitz_limit_rows(unsigned n, const std::vector<Rational>& eps_list) {
    std::vector<LimitRow> rows;
    BetaFamily fam;
    fam.kind = FamilyKind::carlitz;
    fam.n = n;
    const RatFunc beta = family_beta(fam, RatFunc(1));
    const Rational bn = classical_bernoulli(n);
    for (const auto& eps : eps_list) {
        std::map<Var, Rational> point;
        point.emplace(Var::q, Rational(1) - eps);
        const Rational v = beta.eval_rational(point);
        rows.push_back({eps, std::abs((v - bn).to_double())});
    }
    return rows;
}

double twisted_limit_err(unsigned n, double x0, double eps) {
    BetaFamily fam;
    fam.kind = FamilyKind::twisted;
    fam.n = n;
    const SeriesPoint pt{Complex{1.0 - eps, 0.0}, x0};
    const Complex v = eval_family_at(fam, pt, false);
    double bn = 0.0;
    for (unsigned k = 0; k <= n; ++k)
        bn += binomial(n, static_cast<long>(k)).get_d() * classical_bernoulli(k).to_double() *
              std::pow(x0, static_cast<double>(n - k));
    return std::abs(v - bn);
}

double reflection_residual(unsigned n, long h, double q, double x) {
    BetaFamily fam;
    fam.kind = FamilyKind::hr;
    fam.n = n;
    fam.r = 1;
    fam.h = h;
    const RatFunc F = family_beta(fam, RatFunc::variable(Var::X));
    const RatFunc lhs = invert_base(F).substitute(
        Var::X, RatFunc::variable(Var::X) / RatFunc::variable(Var::q));
    const RatFunc rhs = RatFunc::q_power(static_cast<long>(n) + h - 2) * F *
                        RatFunc(Rational(n % 2 == 0 ? 1 : -1));
    const SeriesPoint pt{Complex{q, 0.0}, x};
    return std::abs(eval_at(lhs, pt) - eval_at(rhs, pt));
}

} // namespace qbeta
