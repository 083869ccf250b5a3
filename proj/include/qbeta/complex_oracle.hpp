#ifndef QBETA_COMPLEX_ORACLE_HPP
#define QBETA_COMPLEX_ORACLE_HPP

#include <complex>
#include <vector>

#include "qbeta/qbernoulli.hpp"

namespace qbeta {

using Complex = std::complex<double>;

/// Principal-branch q^x for real x.
Complex complex_q_power(Complex q, double x);

/// (q - 1)/log q, the analytic value of the zero mode.
Complex complex_zero_mode(Complex q);

struct SeriesPoint {
    Complex q;  // |q| < 1 required by every series
    double x = 0.0;
};

struct SeriesResult {
    Complex value{0.0, 0.0};
    double tail_bound = 0.0;
    unsigned terms = 0;
};

/// -n sum_{m>=0} q^{x+m} [x+m]_q^{n-1}. The truncation length comes from the
/// geometric tail bound unless force_terms overrides it.
SeriesResult series_twisted(unsigned n, const SeriesPoint& pt, double tol = 1e-12,
                            unsigned force_terms = 0);

/// -n sum q^{hm+x}[x+m]^{n-1} + (h-1)(1-q) sum q^{(h-1)m}[x+m]^n.
/// Requires h >= 1: for h <= 0 the terms do not decay (DivergentSpec).
SeriesResult series_order_two_weights(unsigned n, long h, const SeriesPoint& pt, double tol = 1e-12,
                                      unsigned force_terms = 0);

/// -n sum chi(m) q^{x+m} [x+m]^{n-1} (with_q_factor), or the same sum without
/// the q^{x+m} factor — the two candidate character series.
SeriesResult series_chi(unsigned n, const DirichletCharacter& chi, const SeriesPoint& pt,
                        bool with_q_factor, double tol = 1e-12, unsigned force_terms = 0);

/// n! times the t^n coefficient of -t sum_m q^{x+m} e^{[x+m]t}, extracted from
/// the truncated double series.
SeriesResult gf_coefficient_twisted(unsigned n, const SeriesPoint& pt, double tol = 1e-12,
                                    unsigned force_terms = 0);

/// Same for the character generating function -t sum chi(m) e^{[x+m]t},
/// optionally with the q^{x+m} factor restored.
SeriesResult gf_coefficient_chi(unsigned n, const DirichletCharacter& chi, const SeriesPoint& pt,
                                bool with_q_factor, double tol = 1e-12, unsigned force_terms = 0);

/// Closed form with the l = 0 term dropped whenever it would carry a zero
/// mode; this is the form the convergent series represent for |q| < 1.
RatFunc closed_form_without_zero_mode(unsigned n, const WeightSpec& spec, const RatFunc& arg);

/// Exact closed form of a family evaluated at (q, L = log q, X = q^x).
Complex eval_family_at(const BetaFamily& fam, const SeriesPoint& pt, bool drop_zero_mode);
Complex eval_at(const RatFunc& f, const SeriesPoint& pt);

struct LimitRow {
    Rational eps;
    double abs_err = 0.0;
};

/// |beta_n at q = 1-eps  -  B_n| with the value computed in exact rational
/// arithmetic (the alternating sum cancels catastrophically in doubles).
std::vector<LimitRow> carlitz_limit_rows(unsigned n, const std::vector<Rational>& eps_list);

/// |beta_n(x0) at q = 1-eps - B_n(x0)| for the q^{-y}-twisted polynomials,
/// with L evaluated as log q.
double twisted_limit_err(unsigned n, double x0, double eps);

/// Residual of the reflection identity at a numeric point:
/// |beta^{(h,1)}_{n,1/q}(1-x) - (-1)^n q^{n+h-2} beta^{(h,1)}_{n,q}(x)|.
double reflection_residual(unsigned n, long h, double q, double x);

} // namespace qbeta

#endif
