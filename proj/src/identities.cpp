#include "qbeta/identities.hpp"

#include <chrono>
#include <sstream>

#include "qbeta/qcombinatorics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbeta {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::VariantPass: return "VARIANT-PASS";
        case Verdict::Fail: return "FAIL";
    }
    return "?";
}

namespace {

RatFunc X() { return RatFunc::variable(Var::X); }
RatFunc Yv() { return RatFunc::variable(Var::Y); }
RatFunc qv() { return RatFunc::variable(Var::q); }
RatFunc one_minus_q() { return RatFunc(1) - qv(); }
RatFunc q_minus_one() { return qv() - RatFunc(1); }
// [x]_q and [y]_q with X = q^x, Y = q^y.
RatFunc bracket_x() { return (RatFunc(1) - X()) / one_minus_q(); }
RatFunc bracket_y() { return (RatFunc(1) - Yv()) / one_minus_q(); }

RatFunc beta_hr(unsigned n, long h, unsigned r, const RatFunc& arg) {
    BetaFamily fam;
    fam.kind = FamilyKind::hr;
    fam.n = n;
    fam.h = h;
    fam.r = r;
    return family_beta(fam, arg);
}

RatFunc beta_order_r(unsigned n, unsigned r, const RatFunc& arg) {
    BetaFamily fam;
    fam.kind = FamilyKind::order_r;
    fam.n = n;
    fam.r = r;
    return family_beta(fam, arg);
}

RatFunc beta_carlitz(unsigned n) {
    BetaFamily fam;
    fam.kind = FamilyKind::carlitz;
    fam.n = n;
    return family_beta(fam, RatFunc(1));
}

// sum_{a=0}^{f-1} q^{k a} (equals f when k = 0).
RatFunc geometric_sum(long k, unsigned long f) {
    RatFunc s(0);
    for (unsigned long a = 0; a < f; ++a) s += RatFunc::q_power(k * static_cast<long>(a));
    return s;
}

// sum_{a=0}^{f-1} chi(a) q^{k a}.
RatFunc chi_geometric_sum(const DirichletCharacter& chi, long k, unsigned long f) {
    RatFunc s(0);
    for (unsigned long a = 0; a < f; ++a) {
        const Coeff c = chi(static_cast<long>(a));
        if (c.is_zero()) continue;
        s += RatFunc(Poly::constant(c)) * RatFunc::q_power(k * static_cast<long>(a));
    }
    return s;
}

// The printed per-l coefficient l/[lf]_q, resolved at l = 0 as weight(0)/f.
RatFunc lf_weight(long l, unsigned long f) {
    if (l == 0) return weight(0) / RatFunc(Rational(static_cast<long>(f)));
    return RatFunc(Rational(l)) / q_int(l * static_cast<long>(f));
}

// Distribution right-hand side for a multiplier-1 weight profile:
// [f]^{n-r} sum over residue tuples of q^{sum shift_j a_j} times the rebased
// value at argument q^{sum a} * arg.
RatFunc distribution_rhs(unsigned n, const WeightSpec& spec, unsigned long f, const RatFunc& arg) {
    const unsigned r = static_cast<unsigned>(spec.size());
    const RatFunc base = rebase(gen_beta(n, spec, X()), f);
    RatFunc sum(0);
    std::vector<unsigned long> tuple(r, 0);
    while (true) {
        unsigned long a_sum = 0;
        long twist = 0;
        for (unsigned j = 0; j < r; ++j) {
            a_sum += tuple[j];
            twist += spec[j].shift * static_cast<long>(tuple[j]);
        }
        sum += RatFunc::q_power(twist) *
               base.substitute(Var::X, RatFunc::q_power(static_cast<long>(a_sum)) * arg);
        unsigned j = 0;
        for (; j < r; ++j) {
            if (++tuple[j] < f) break;
            tuple[j] = 0;
        }
        if (j == r) break;
    }
    return q_int(static_cast<long>(f)).pow(static_cast<long>(n) - static_cast<long>(r)) * sum;
}

bool ratio_defined(long m, unsigned r) {
    for (unsigned i = 0; i < r; ++i)
        if (m - static_cast<long>(i) == 0) return false;
    return true;
}

// C(m,r)/qbinom(m,r) * r!/[r]_q! (callers must check ratio_defined).
RatFunc ratio_form(long m, unsigned r) {
    BigInt rf;
    mpz_fac_ui(rf.get_mpz_t(), r);
    return RatFunc(binomial_general(m, r)) * RatFunc(Rational(rf)) /
           (q_binom_general(m, r) * q_factorial(r));
}

RatFunc weight_product(long m, unsigned r) {
    RatFunc acc(1);
    for (unsigned i = 0; i < r; ++i) acc *= weight(m - static_cast<long>(i));
    return acc;
}

std::string point_label(std::initializer_list<std::pair<const char*, long>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty()) s += " ";
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}

// ---- case builders ------------------------------------------------------

std::vector<PointCheck> build_I1(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (unsigned n = 0; n <= g.max_n; ++n) {
        BetaFamily tw;
        tw.kind = FamilyKind::twisted;
        tw.n = n;
        const RatFunc lhs = family_beta(tw, X());
        RatFunc rhs(0);
        for (unsigned l = 0; l + 1 <= n; ++l) {
            RatFunc t = RatFunc(Rational(binomial(n - 1, static_cast<long>(l)))) *
                        RatFunc::variable(Var::X, l + 1) /
                        (RatFunc(1) - RatFunc::q_power(static_cast<long>(l) + 1));
            rhs += (l % 2 == 0) ? -t : t; // sign (-1)^{l+1}
        }
        rhs *= RatFunc(Rational(static_cast<long>(n))) *
               one_minus_q().pow(-(static_cast<long>(n) - 1));
        PointCheck pc;
        pc.point = point_label({{"n", n}});
        pc.printed.push_back({"l-sum = shifted (n-1)-sum", lhs, rhs});
        pc.variant.push_back(
            {"l >= 1 part of the l-sum = shifted (n-1)-sum",
             lhs - weight(0) / one_minus_q().pow(static_cast<long>(n)), rhs});
        pc.variant_note = "holds once the l = 0 limit term is removed from the l-sum";
        out.push_back(std::move(pc));
    }
    return out;
}

std::vector<PointCheck> build_I2(const GridRanges&) {
    std::vector<PointCheck> out;
    std::vector<RatFunc> beta;
    for (unsigned i = 0; i <= 8; ++i) beta.push_back(beta_carlitz(i));
    for (unsigned k = 1; k <= 8; ++k) {
        RatFunc lhs(0);
        for (unsigned i = 0; i <= k; ++i)
            lhs += RatFunc(Rational(binomial(k, static_cast<long>(i)))) *
                   RatFunc::q_power(static_cast<long>(i)) * beta[i];
        lhs = qv() * lhs - beta[k];
        PointCheck pc;
        pc.point = point_label({{"k", k}});
        pc.printed.push_back({"umbral recurrence", lhs, RatFunc(k == 1 ? 1 : 0)});
        out.push_back(std::move(pc));
    }
    return out;
}

std::vector<PointCheck> build_I3(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (unsigned n = 0; n <= g.max_n; ++n)
        for (unsigned r = 1; r <= g.max_r; ++r)
            for (unsigned long f = 1; f <= g.max_f; ++f) {
                const RatFunc lhs = beta_order_r(n, r, X());
                RatFunc line1(0);
                for (unsigned l = 0; l <= n; ++l) {
                    RatFunc t = RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                                RatFunc::variable(Var::X, l) *
                                geometric_sum(static_cast<long>(l), f).pow(r) *
                                lf_weight(static_cast<long>(l), f).pow(r);
                    line1 += (l % 2) ? -t : t;
                }
                line1 *= one_minus_q().pow(-static_cast<long>(n));
                const WeightSpec spec(r, WeightFactor{1, 0});
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"r", r}, {"f", f}});
                pc.printed.push_back({"residue-expanded l-sum", lhs, line1});
                pc.printed.push_back({"distribution over f", lhs, distribution_rhs(n, spec, f, X())});
                out.push_back(std::move(pc));
            }
    return out;
}

std::vector<PointCheck> build_I4(const GridRanges& g) {
    std::vector<PointCheck> out;
    const unsigned cap_n = std::min(g.max_n, 4u);
    for (unsigned long f = 1; f <= g.max_f; ++f) {
        const auto chars = enumerate_characters(f);
        for (std::size_t ci = 0; ci < chars.size(); ++ci)
            for (unsigned n = 0; n <= cap_n; ++n)
                for (unsigned r = 1; r <= g.max_r; ++r) {
                    BetaFamily fam;
                    fam.kind = FamilyKind::chi_order_r;
                    fam.n = n;
                    fam.r = r;
                    fam.f = f;
                    fam.chi_index = static_cast<unsigned>(ci);
                    const RatFunc lhs = chi_beta(fam, chars[ci], X());
                    RatFunc line1(0);
                    for (unsigned l = 0; l <= n; ++l) {
                        RatFunc t = RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                                    RatFunc::variable(Var::X, l) *
                                    chi_geometric_sum(chars[ci], static_cast<long>(l), f).pow(r) *
                                    lf_weight(static_cast<long>(l), f).pow(r);
                        line1 += (l % 2) ? -t : t;
                    }
                    line1 *= one_minus_q().pow(-static_cast<long>(n));
                    PointCheck pc;
                    pc.point = point_label({{"n", n}, {"r", r}, {"f", f}, {"chi", static_cast<long>(ci)}});
                    pc.printed.push_back({"character l-sum = distribution definition", lhs, line1});
                    out.push_back(std::move(pc));
                }
    }
    return out;
}

std::vector<PointCheck> build_I5(const GridRanges& g) {
    std::vector<PointCheck> out;
    // (a) pointwise: weight product = binomial ratio, wherever defined.
    for (long h : g.hs)
        for (unsigned r = 1; r <= g.max_r; ++r)
            for (unsigned l = 0; l <= g.max_n; ++l) {
                const long m = static_cast<long>(l) + h - 1;
                if (!ratio_defined(m, r)) continue;
                PointCheck pc;
                pc.point = point_label({{"l", l}, {"h", h}, {"r", r}});
                pc.printed.push_back({"weight product = binomial ratio", weight_product(m, r), ratio_form(m, r)});
                out.push_back(std::move(pc));
            }
    // (b) the full closed form on grids where every l-term is defined.
    for (long h : g.hs)
        for (unsigned r = 1; r <= g.max_r; ++r)
            for (unsigned n = 0; n <= g.max_n; ++n) {
                bool all_defined = true;
                for (unsigned l = 0; l <= n && all_defined; ++l)
                    all_defined = ratio_defined(static_cast<long>(l) + h - 1, r);
                if (!all_defined) continue;
                RatFunc rhs(0);
                for (unsigned l = 0; l <= n; ++l) {
                    RatFunc t = RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                                RatFunc::variable(Var::X, l) * ratio_form(static_cast<long>(l) + h - 1, r);
                    rhs += (l % 2) ? -t : t;
                }
                rhs *= one_minus_q().pow(-static_cast<long>(n));
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"h", h}, {"r", r}});
                pc.printed.push_back({"closed form via binomial ratios", beta_hr(n, h, r, X()), rhs});
                out.push_back(std::move(pc));
            }
    // (c) distribution line.
    const unsigned cap_n = std::min(g.max_n, 4u);
    for (long h : g.hs)
        for (unsigned r = 1; r <= g.max_r; ++r)
            for (unsigned n = 0; n <= cap_n; ++n)
                for (unsigned long f = 2; f <= g.max_f; ++f) {
                    WeightSpec spec;
                    for (unsigned j = 1; j <= r; ++j) spec.push_back({1, h - static_cast<long>(j)});
                    PointCheck pc;
                    pc.point = point_label({{"n", n}, {"h", h}, {"r", r}, {"f", f}});
                    pc.printed.push_back(
                        {"distribution over f", beta_hr(n, h, r, X()), distribution_rhs(n, spec, f, X())});
                    out.push_back(std::move(pc));
                }
    return out;
}

std::vector<PointCheck> build_I6(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (long h : g.hs)
        for (unsigned r = 1; r <= g.max_r; ++r)
            for (unsigned n = 0; n <= g.max_n; ++n) {
                const RatFunc lhs = beta_hr(n, h, r, RatFunc(1));
                const RatFunc rhs = q_minus_one() * beta_hr(n + 1, h - 1, r, RatFunc(1)) +
                                    beta_hr(n, h - 1, r, RatFunc(1));
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"h", h}, {"r", r}});
                pc.printed.push_back({"step-down recurrence in h", lhs, rhs});
                out.push_back(std::move(pc));
            }
    return out;
}

std::vector<PointCheck> build_I7(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (unsigned r = 1; r <= g.max_r; ++r)
        for (unsigned n = 0; n <= g.max_n; ++n) {
            RatFunc lhs(0);
            for (unsigned l = 0; l <= n; ++l)
                lhs += RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                       q_minus_one().pow(static_cast<long>(l)) * beta_hr(l, 0, r, RatFunc(1));
            PointCheck pc;
            pc.point = point_label({{"n", n}, {"r", r}});
            pc.printed.push_back(
                {"binomial transform = weight product", lhs, weight_product(static_cast<long>(n) - 1, r)});
            if (ratio_defined(static_cast<long>(n) - 1, r))
                pc.printed.push_back(
                    {"binomial transform = binomial ratio", lhs, ratio_form(static_cast<long>(n) - 1, r)});
            out.push_back(std::move(pc));
        }
    return out;
}

std::vector<PointCheck> build_I8(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (long h : g.hs)
        for (unsigned n = 0; n <= g.max_n; ++n) {
            RatFunc lhs(0);
            for (unsigned l = 0; l <= n; ++l)
                lhs += RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                       q_minus_one().pow(static_cast<long>(l)) * beta_hr(l, h, 1, RatFunc(1));
            PointCheck pc;
            pc.point = point_label({{"n", n}, {"h", h}});
            pc.printed.push_back({"binomial transform = single weight", lhs, weight(static_cast<long>(n) + h - 1)});
            out.push_back(std::move(pc));
        }
    return out;
}

std::vector<PointCheck> build_I9(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (unsigned r = 1; r <= g.max_r; ++r)
        for (unsigned n = 0; n <= g.max_n; ++n) {
            PointCheck pc;
            pc.point = point_label({{"n", n}, {"r", r}});
            {
                RatFunc rhs(0);
                for (unsigned l = 0; l <= n; ++l) {
                    RatFunc t = RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                                RatFunc::variable(Var::X, l) * weight_product(static_cast<long>(l) - 1, r);
                    rhs += (l % 2) ? -t : t;
                }
                pc.printed.push_back(
                    {"scaled polynomials as alternating weight sums",
                     one_minus_q().pow(static_cast<long>(n)) * beta_hr(n, 0, r, X()), rhs});
            }
            {
                RatFunc rhs(0);
                for (unsigned l = 0; l <= n; ++l)
                    rhs += RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                           q_minus_one().pow(static_cast<long>(l)) * beta_hr(l, 0, r, X());
                pc.printed.push_back({"inverse transform, weight product",
                                      RatFunc::variable(Var::X, n) * weight_product(static_cast<long>(n) - 1, r),
                                      rhs});
                if (ratio_defined(static_cast<long>(n) - 1, r))
                    pc.printed.push_back({"inverse transform, binomial ratio",
                                          RatFunc::variable(Var::X, n) * ratio_form(static_cast<long>(n) - 1, r),
                                          rhs});
            }
            out.push_back(std::move(pc));
        }
    return out;
}

std::vector<PointCheck> build_I10(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (unsigned r = 1; r <= g.max_r; ++r)
        for (unsigned n = 0; n <= g.max_n; ++n) {
            PointCheck pc;
            pc.point = point_label({{"n", n}, {"r", r}});
            {
                RatFunc rhs(0);
                for (unsigned l = 0; l <= n; ++l)
                    rhs += RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                           bracket_x().pow(static_cast<long>(n - l)) * RatFunc::variable(Var::X, l) *
                           beta_hr(l, 0, r, RatFunc(1));
                pc.printed.push_back({"addition theorem in x", beta_hr(n, 0, r, X()), rhs});
            }
            {
                RatFunc rhs(0);
                for (unsigned l = 0; l <= n; ++l)
                    rhs += RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                           bracket_y().pow(static_cast<long>(n - l)) * RatFunc::variable(Var::Y, l) *
                           beta_hr(l, 0, r, X());
                pc.printed.push_back({"addition theorem in x + y", beta_hr(n, 0, r, X() * Yv()), rhs});
            }
            out.push_back(std::move(pc));
        }
    return out;
}

std::vector<PointCheck> build_I12(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (long h : g.hs)
        for (unsigned n = 0; n <= g.max_n; ++n) {
            PointCheck pc;
            pc.point = point_label({{"n", n}, {"h", h}});
            const RatFunc bn_x = beta_hr(n, h, 1, X());
            const RatFunc bn_num = beta_hr(n, h, 1, RatFunc(1));
            {
                RatFunc rhs(0);
                for (unsigned l = 0; l <= n; ++l)
                    rhs += RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                           bracket_x().pow(static_cast<long>(n - l)) * RatFunc::variable(Var::X, l) *
                           beta_hr(l, h, 1, RatFunc(1));
                pc.printed.push_back({"addition theorem", bn_x, rhs});
                pc.variant.push_back({"addition theorem", bn_x, rhs});
            }
            {
                // Difference equation; the printed subtrahend carries no
                // argument, which only works at x = 0.
                const RatFunc shifted = beta_hr(n, h, 1, qv() * X());
                const RatFunc rhs =
                    RatFunc(Rational(static_cast<long>(n))) * X() *
                        bracket_x().pow(static_cast<long>(n) - 1) +
                    RatFunc(Rational(h)) * q_minus_one() * bracket_x().pow(static_cast<long>(n)) -
                    q_minus_one() * bracket_x().pow(static_cast<long>(n));
                pc.printed.push_back(
                    {"difference equation, argument-free subtrahend",
                     RatFunc::q_power(h - 1) * shifted - bn_num, rhs});
                pc.variant.push_back({"difference equation, subtrahend read at the same argument",
                                      RatFunc::q_power(h - 1) * shifted - bn_x, rhs});
                pc.variant_note = "the subtrahend must be evaluated at the same argument x";
            }
            if (n >= 1) {
                const RatFunc lhs =
                    RatFunc::q_power(h - 1) * beta_hr(n, h, 1, qv()) - bn_num;
                const RatFunc delta(n == 1 ? 1 : 0);
                pc.printed.push_back({"value-at-one recurrence", lhs, delta});
                pc.variant.push_back({"value-at-one recurrence", lhs, delta});
            }
            if (n >= 1) {
                const RatFunc lhs = RatFunc::q_power(h - 2) * q_minus_one() *
                                        beta_hr(n + 1, h - 1, 1, qv()) +
                                    RatFunc::q_power(h - 2) * beta_hr(n, h - 1, 1, qv()) - bn_num;
                const RatFunc delta(n == 1 ? 1 : 0);
                pc.printed.push_back({"step-down form of the value-at-one recurrence", lhs, delta});
                pc.variant.push_back({"step-down form of the value-at-one recurrence", lhs, delta});
            }
            {
                const RatFunc lhs = X() * bn_x;
                const RatFunc rhs =
                    q_minus_one() * beta_hr(n + 1, h - 1, 1, X()) + beta_hr(n, h - 1, 1, X());
                pc.printed.push_back({"argument-weighted step-down recurrence", lhs, rhs});
                pc.variant.push_back({"argument-weighted step-down recurrence", lhs, rhs});
            }
            out.push_back(std::move(pc));
        }
    return out;
}

std::vector<PointCheck> build_I13(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (long h : g.hs)
        for (unsigned n = 0; n <= g.max_n; ++n) {
            const RatFunc F = beta_hr(n, h, 1, X());
            const RatFunc lhs = invert_base(F).substitute(Var::X, X() / qv());
            const RatFunc sign(n % 2 == 0 ? 1 : -1);
            const RatFunc rhs = sign * RatFunc::q_power(static_cast<long>(n) + h - 2) * F;
            PointCheck pc;
            pc.point = point_label({{"n", n}, {"h", h}});
            pc.printed.push_back({"reflection under base inversion", lhs, rhs});
            if (n >= 2) {
                const RatFunc num = beta_hr(n, h, 1, RatFunc(1));
                const RatFunc lhs1 = invert_base(num);
                const RatFunc rhs1 = sign * RatFunc::q_power(static_cast<long>(n) - 1) * num;
                pc.printed.push_back({"value specialization at x = 1 (n > 1)", lhs1, rhs1});
            }
            out.push_back(std::move(pc));
        }
    return out;
}

std::vector<PointCheck> build_I14(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (long h : g.hs)
        for (unsigned n = 0; n <= g.max_n; ++n)
            for (unsigned long f = 1; f <= g.max_f; ++f) {
                const RatFunc B = beta_hr(n, h, 1, X());
                const RatFunc base = rebase(B, f);
                RatFunc lhs(0);
                for (unsigned long l = 0; l < f; ++l) {
                    // Argument x + l/f at base q^f: the X slot takes q^l X^f.
                    Poly repl = Poly::variable(Var::X, static_cast<std::uint32_t>(f));
                    Monomial m;
                    m[Var::q] = static_cast<std::uint32_t>(l);
                    lhs += RatFunc::q_power(static_cast<long>(l) * (h - 1)) *
                           base.substitute(Var::X, RatFunc(repl.shifted(m)));
                }
                lhs *= q_int(static_cast<long>(f)).pow(static_cast<long>(n) - 1);
                const RatFunc rhs = B.substitute(Var::X, RatFunc::variable(Var::X, static_cast<std::uint32_t>(f)));
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"h", h}, {"f", f}});
                pc.printed.push_back({"multiplication theorem", lhs, rhs});
                out.push_back(std::move(pc));
            }
    return out;
}

std::vector<PointCheck> build_I15(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (unsigned long f = 1; f <= g.max_f; ++f) {
        const auto chars = enumerate_characters(f);
        for (std::size_t ci = 0; ci < chars.size(); ++ci)
            for (unsigned n = 0; n <= g.max_n; ++n) {
                BetaFamily fam;
                fam.kind = FamilyKind::chi;
                fam.n = n;
                fam.f = f;
                fam.chi_index = static_cast<unsigned>(ci);
                const RatFunc lhs = chi_beta(fam, chars[ci], X());
                RatFunc rhs(0);
                for (unsigned long a = 0; a < f; ++a) {
                    const Coeff cv = chars[ci](static_cast<long>(a));
                    if (cv.is_zero()) continue;
                    RatFunc inner(0);
                    for (unsigned l = 0; l <= n; ++l) {
                        RatFunc t = RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                                    RatFunc::q_power(static_cast<long>(l) * static_cast<long>(a)) *
                                    RatFunc::variable(Var::X, l) * lf_weight(static_cast<long>(l), f);
                        inner += (l % 2) ? -t : t;
                    }
                    rhs += RatFunc(Poly::constant(cv)) * inner;
                }
                rhs *= one_minus_q().pow(-static_cast<long>(n));
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"f", f}, {"chi", static_cast<long>(ci)}});
                pc.printed.push_back({"character l-sum = distribution definition", lhs, rhs});
                out.push_back(std::move(pc));
            }
    }
    return out;
}

std::vector<PointCheck> build_I16(const GridRanges& g) {
    std::vector<PointCheck> out;
    const unsigned cap_n = std::min(g.max_n, 3u);
    for (unsigned long f = 1; f <= g.max_f; ++f) {
        const auto chars = enumerate_characters(f);
        for (std::size_t ci = 0; ci < chars.size(); ++ci)
            for (long h : g.hs)
                for (unsigned r = 1; r <= g.max_r; ++r)
                    for (unsigned n = 0; n <= cap_n; ++n) {
                        auto chi_value = [&](unsigned nn, long hh) {
                            BetaFamily fam;
                            fam.kind = FamilyKind::chi_hr;
                            fam.n = nn;
                            fam.h = hh;
                            fam.r = r;
                            fam.f = f;
                            fam.chi_index = static_cast<unsigned>(ci);
                            return chi_beta(fam, chars[ci], RatFunc(1));
                        };
                        const RatFunc lhs = chi_value(n, h);
                        const RatFunc rhs =
                            q_minus_one() * chi_value(n + 1, h - 1) + chi_value(n, h - 1);
                        PointCheck pc;
                        pc.point = point_label(
                            {{"n", n}, {"h", h}, {"r", r}, {"f", f}, {"chi", static_cast<long>(ci)}});
                        pc.printed.push_back({"character step-down recurrence in h", lhs, rhs});
                        out.push_back(std::move(pc));
                    }
    }
    return out;
}

std::vector<PointCheck> build_I17(const GridRanges& g) {
    std::vector<PointCheck> out;
    const std::vector<std::pair<long, long>> profiles = {{1, 1}, {1, 2}, {2, 1}, {-1, 8}, {1, -7}};
    for (const auto& [w1, d1] : profiles)
        for (unsigned r = 1; r <= g.max_r; ++r)
            for (unsigned n = 0; n <= g.max_n; ++n) {
                bool all_defined = true;
                for (unsigned l = 0; l <= n && all_defined; ++l)
                    all_defined =
                        ratio_defined(static_cast<long>(l) * w1 + d1 + static_cast<long>(r) - 1, r);
                if (!all_defined) continue;
                WeightSpec spec;
                for (unsigned j = 0; j < r; ++j) spec.push_back({w1, d1 + static_cast<long>(j)});
                BetaFamily fam;
                fam.kind = FamilyKind::barnes;
                fam.n = n;
                fam.r = r;
                fam.barnes = spec;
                const RatFunc lhs = family_beta(fam, X());
                RatFunc rhs(0);
                for (unsigned l = 0; l <= n; ++l) {
                    RatFunc t =
                        RatFunc(Rational(binomial(n, static_cast<long>(l)))) *
                        RatFunc::variable(Var::X, l) *
                        ratio_form(static_cast<long>(l) * w1 + d1 + static_cast<long>(r) - 1, r);
                    rhs += (l % 2) ? -t : t;
                }
                rhs *= one_minus_q().pow(-static_cast<long>(n));
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"r", r}, {"w1", w1}, {"d1", d1}});
                pc.printed.push_back({"consecutive-shift profile = binomial ratio form", lhs, rhs});
                out.push_back(std::move(pc));
            }
    return out;
}

std::vector<PointCheck> build_I18(const GridRanges& g) {
    std::vector<PointCheck> out;
    for (unsigned r = 1; r <= g.max_r; ++r)
        for (unsigned n = 0; n <= g.max_n; ++n)
            for (unsigned long f = 2; f <= g.max_f; ++f) {
                WeightSpec spec;
                for (unsigned j = 1; j <= r; ++j) spec.push_back({1, -static_cast<long>(j)});
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"r", r}, {"f", f}});
                pc.printed.push_back({"distribution with inverse-power twists", beta_hr(n, 0, r, X()),
                                      distribution_rhs(n, spec, f, X())});
                out.push_back(std::move(pc));
            }
    return out;
}

std::vector<PointCheck> build_I19(const GridRanges&) {
    std::vector<PointCheck> out;
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n + 1; ++k) {
            const RatFunc lhs = q_binom(n + 1, static_cast<long>(k));
            {
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"k", k}}) + " rule A";
                pc.printed.push_back(
                    {"first convolution rule",
                     lhs,
                     q_binom(n, static_cast<long>(k) - 1) +
                         RatFunc::q_power(static_cast<long>(k)) * q_binom(n, static_cast<long>(k))});
                out.push_back(std::move(pc));
            }
            {
                PointCheck pc;
                pc.point = point_label({{"n", n}, {"k", k}}) + " rule B";
                pc.printed.push_back(
                    {"second convolution rule, printed exponent n-k",
                     lhs,
                     RatFunc::q_power(static_cast<long>(n) - static_cast<long>(k)) *
                             q_binom(n, static_cast<long>(k) - 1) +
                         q_binom(n, static_cast<long>(k))});
                pc.variant.push_back(
                    {"second convolution rule, exponent n-k+1",
                     lhs,
                     RatFunc::q_power(static_cast<long>(n) - static_cast<long>(k) + 1) *
                             q_binom(n, static_cast<long>(k) - 1) +
                         q_binom(n, static_cast<long>(k))});
                pc.variant_note = "exponent on the first term must be n-k+1";
                out.push_back(std::move(pc));
            }
        }
    return out;
}

} // namespace

const std::vector<IdentityCase>& identity_catalog() {
    static const std::vector<IdentityCase> catalog = [] {
        std::vector<IdentityCase> cs;
        cs.push_back({"I1",
                      "first-order twisted values: l-sum vs the (n-1)-shifted sum",
                      {"lsum-twisted", "series-shift-twisted", "lemma-1"},
                      build_I1});
        cs.push_back({"I2", "umbral recurrence of the base q-Bernoulli numbers",
                      {"carlitz-recurrence", "carlitz-integral"}, build_I2});
        cs.push_back({"I3", "order-r distribution relation and its residue-expanded l-sum",
                      {"order-r-def", "order-r-lsum", "order-r-distribution"}, build_I3});
        cs.push_back({"I4", "character order-r values: l-sum form of the distribution definition",
                      {"chi-order-r-def", "chi-order-r-lsum"}, build_I4});
        cs.push_back({"I5",
                      "(h,r) closed form: weight products, binomial ratios, distribution",
                      {"hr-def", "hr-ratio-form", "hr-distribution"},
                      build_I5});
        cs.push_back({"I6", "(h,r) numbers: step-down recurrence in h",
                      {"hr-step-down"}, build_I6});
        cs.push_back({"I7", "binomial transform of h=0 numbers = r-fold weight product",
                      {"binomial-transform-h0", "ratio-integral"}, build_I7});
        cs.push_back({"I8", "binomial transform of (h,1) numbers = single weight",
                      {"binomial-transform-h1"}, build_I8});
        cs.push_back({"I9", "h=0 polynomials: inverse binomial-transform pair",
                      {"h0-poly-closed-form", "h0-inverse-transform"}, build_I9});
        cs.push_back({"I10", "h=0 polynomials: addition theorems in x and x+y",
                      {"addition-x", "addition-xy"}, build_I10});
        cs.push_back({"I12",
                      "(h,1) polynomials: addition theorem, difference equation, value-at-one recurrences",
                      {"hr1-poly-def", "hr1-x-recurrence", "hr1-addition", "hr1-difference", "hr1-delta"},
                      build_I12});
        cs.push_back({"I13", "reflection under base inversion",
                      {"reflection", "reflection-at-one"}, build_I13});
        cs.push_back({"I14", "multiplication theorem for (h,1) polynomials",
                      {"multiplication-theorem"}, build_I14});
        cs.push_back({"I15", "character first-order values: l-sum form of the distribution definition",
                      {"chi-def", "chi-lsum", "chi-distribution"}, build_I15});
        cs.push_back({"I16", "character (h,r) numbers: step-down recurrence in h",
                      {"chi-hr-def", "chi-hr-distribution", "chi-hr-step-down"}, build_I16});
        cs.push_back({"I17", "equal multipliers with consecutive shifts = binomial ratio form",
                      {"barnes-def", "barnes-ratio-form"}, build_I17});
        cs.push_back({"I18", "h=0 distribution with inverse-power twists",
                      {"h0-distribution"}, build_I18});
        cs.push_back({"I19", "the two convolution rules for Gaussian binomials",
                      {"qbinom-def", "pascal-rules"}, build_I19});
        return cs;
    }();
    return catalog;
}

const std::map<std::string, Verdict>& expected_verdicts() {
    static const std::map<std::string, Verdict> expected = {
        {"I1", Verdict::VariantPass}, {"I2", Verdict::Pass},  {"I3", Verdict::Pass},
        {"I4", Verdict::Pass},        {"I5", Verdict::Pass},  {"I6", Verdict::Pass},
        {"I7", Verdict::Pass},        {"I8", Verdict::Pass},  {"I9", Verdict::Pass},
        {"I10", Verdict::Pass},       {"I12", Verdict::VariantPass},
        {"I13", Verdict::Pass},       {"I14", Verdict::Pass}, {"I15", Verdict::Pass},
        {"I16", Verdict::Pass},       {"I17", Verdict::Pass}, {"I18", Verdict::Pass},
        {"I19", Verdict::VariantPass},
    };
    return expected;
}

const std::vector<ErrataNote>& errata_notes() {
    static const std::vector<ErrataNote> notes = {
        {"I1",
         "the (n-1)-shifted sum equals the l-sum only after the l = 0 limit term (q-1)/L / (1-q)^n "
         "is removed; the printed chain treats the l = 0 term of l/[l]_q as absent"},
        {"I12",
         "the difference equation's subtrahend is printed without an argument; it must be read at "
         "the same argument x, not as the x = 0 value"},
        {"I19", "the second convolution rule needs exponent n-k+1 on the shifted term, not n-k"},
        {"complex:series-chi",
         "the printed character series lacks the factor q^{x+m}; with the factor restored it "
         "matches the distribution-defined values (checked for nontrivial characters)"},
        {"complex:series-twisted",
         "for |q| < 1 the convergent series equals the closed form WITHOUT the l = 0 zero mode; "
         "the p-adic integral equals the closed form WITH it"},
        {"complex:series-hr",
         "the two-sum series for (h,1) values converges only for h >= 1 when |q| < 1; it is "
         "checked there and left unevaluated for h <= 0"},
    };
    return notes;
}

const std::vector<InventoryEntry>& formula_inventory() {
    static const std::vector<InventoryEntry> inv = {
        {"qbinom-def", "Gaussian binomial via q-factorials / product form", {"I19"}},
        {"pascal-rules", "the two convolution rules for Gaussian binomials", {"I19"}},
        {"qbinom-limit", "Gaussian binomial at q = 1 is the ordinary binomial", {"unit:qcombinatorics"}},
        {"volkenborn-limit", "measure-normalized Riemann sums converge to the integral", {"oracle:padic"}},
        {"carlitz-recurrence", "umbral recurrence of the base numbers", {"I2"}},
        {"carlitz-integral", "base numbers as integrals of [x]^n", {"I2", "oracle:padic"}},
        {"gf-twisted", "generating function of the twisted polynomials", {"oracle:complex-gf"}},
        {"lsum-twisted", "twisted polynomials as alternating l-sums", {"I1", "I15"}},
        {"series-shift-twisted", "the shifted (n-1)-sum form", {"I1"}},
        {"series-twisted", "convergent series of the twisted polynomials", {"oracle:complex-series"}},
        {"classical-limit-twisted", "twisted values tend to Bernoulli polynomials", {"oracle:complex-limits"}},
        {"lemma-1", "equality of the integral, series, and l-sum forms", {"I1", "oracle:padic", "oracle:complex-series"}},
        {"order-r-def", "order-r values as r-fold integrals", {"I3", "oracle:padic"}},
        {"order-r-lsum", "order-r closed form as an alternating l-sum", {"I3"}},
        {"order-r-distribution", "order-r distribution relation", {"I3"}},
        {"gf-chi", "generating function of the character polynomials", {"oracle:complex-gf"}},
        {"chi-def", "character values as integrals over the f-adic limit", {"I15", "oracle:padic"}},
        {"chi-lsum", "character values as residue-weighted l-sums", {"I15"}},
        {"chi-series", "character series (printed without the q-power factor)", {"oracle:complex-series"}},
        {"chi-distribution", "character distribution form", {"I15"}},
        {"chi-order-r-def", "character order-r values", {"I4"}},
        {"chi-order-r-lsum", "character order-r l-sum = distribution definition", {"I4"}},
        {"hr-def", "(h,r) values as twisted r-fold integrals", {"I5", "oracle:padic"}},
        {"hr-ratio-form", "(h,r) closed form via binomial ratios", {"I5"}},
        {"hr-distribution", "(h,r) distribution relation", {"I5"}},
        {"chi-hr-def", "character (h,r) values", {"I16"}},
        {"chi-hr-distribution", "character (h,r) distribution form", {"I16"}},
        {"chi-hr-step-down", "character (h,r) step-down recurrence", {"I16"}},
        {"hr-step-down", "(h,r) step-down recurrence in h", {"I6"}},
        {"binomial-transform-h0", "binomial transform of h=0 numbers", {"I7"}},
        {"ratio-integral", "r-fold integral of pure power twists as a binomial ratio", {"I7"}},
        {"binomial-transform-h1", "binomial transform of (h,1) numbers", {"I8"}},
        {"h0-poly-closed-form", "h=0 polynomials: scaled closed form", {"I9"}},
        {"h0-inverse-transform", "h=0 polynomials: inverse binomial transform", {"I9"}},
        {"h0-distribution", "h=0 distribution with inverse-power twists", {"I18"}},
        {"addition-x", "addition theorem in x", {"I10"}},
        {"addition-xy", "addition theorem in x + y", {"I10"}},
        {"hr1-poly-def", "(h,1) polynomials and their closed form", {"I12", "oracle:padic"}},
        {"series-hr1", "two-sum series for (h,1) polynomials", {"oracle:complex-series"}},
        {"hr1-x-recurrence", "argument-weighted step-down recurrence", {"I12"}},
        {"hr1-addition", "(h,1) addition theorem", {"I12"}},
        {"hr1-difference", "(h,1) difference equation", {"I12"}},
        {"hr1-delta", "value-at-one recurrences with Kronecker delta", {"I12"}},
        {"reflection", "reflection under base inversion", {"I13", "oracle:complex-limits"}},
        {"reflection-at-one", "base-inverted numbers vs values at one", {"I13"}},
        {"classical-reflection", "Bernoulli reflection as the q -> 1 shadow", {"oracle:complex-limits"}},
        {"multiplication-theorem", "multiplication theorem for (h,1) polynomials", {"I14"}},
        {"barnes-def", "multi-parameter values with multipliers and shifts", {"I17", "oracle:padic"}},
        {"barnes-ratio-form", "consecutive-shift profiles as binomial ratios", {"I17"}},
    };
    return inv;
}

namespace {

RatFunc perturbation() { return qv() / (RatFunc(1) + qv()); }

std::string residual_string(const RatFunc& lhs, const RatFunc& rhs) {
    std::string s = (lhs - rhs).str();
    if (s.size() > 160) s = s.substr(0, 160) + "...";
    return s;
}

PointReport check_point(const PointCheck& pc, bool perturb) {
    PointReport rep;
    rep.point = pc.point;
    auto holds = [&](const std::vector<Comparison>& cmps, std::string* why) {
        for (const auto& c : cmps) {
            const RatFunc lhs = perturb ? c.lhs + perturbation() : c.lhs;
            if (!(lhs == c.rhs)) {
                if (why) *why = c.label + "; residual " + residual_string(lhs, c.rhs);
                return false;
            }
        }
        return true;
    };
    std::string why;
    if (holds(pc.printed, &why)) {
        rep.verdict = Verdict::Pass;
        return rep;
    }
    if (!pc.variant.empty() && holds(pc.variant, nullptr)) {
        rep.verdict = Verdict::VariantPass;
        rep.detail = "printed form fails (" + why + "); " + pc.variant_note;
        return rep;
    }
    rep.verdict = Verdict::Fail;
    rep.detail = "fails: " + why;
    return rep;
}

} // namespace

CaseReport run_case(const IdentityCase& c, const SuiteOptions& opts,
                    std::vector<Comparison>* recorded) {
    const auto t0 = std::chrono::steady_clock::now();
    CaseReport rep;
    rep.id = c.id;
    rep.title = c.title;
    const auto points = c.build(opts.grid);
    rep.points_checked = points.size();
    for (const auto& pc : points) {
        if (recorded && recorded->size() < opts.record_pairs)
            for (const auto& cmp : pc.printed)
                if (recorded->size() < opts.record_pairs) recorded->push_back(cmp);
        PointReport pr = check_point(pc, opts.perturb);
        if (pr.verdict != Verdict::Pass) rep.notes.push_back(pr);
        if (pr.verdict == Verdict::Fail) rep.verdict = Verdict::Fail;
        else if (pr.verdict == Verdict::VariantPass && rep.verdict == Verdict::Pass)
            rep.verdict = Verdict::VariantPass;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CaseReport run_case(const std::string& id, const SuiteOptions& opts,
                    std::vector<Comparison>* recorded) {
    for (const auto& c : identity_catalog())
        if (c.id == id) return run_case(c, opts, recorded);
    throw UnknownCase("no identity case named '" + id + "'");
}

std::vector<CaseReport> run_suite(const std::vector<std::string>& filter, const SuiteOptions& opts) {
    std::vector<const IdentityCase*> selected;
    for (const auto& c : identity_catalog()) {
        if (filter.empty()) {
            selected.push_back(&c);
            continue;
        }
        for (const auto& f : filter)
            if (c.id == f) {
                selected.push_back(&c);
                break;
            }
    }
    if (!filter.empty() && selected.size() != filter.size())
        throw UnknownCase("unknown identity id in filter");
    std::vector<CaseReport> reports(selected.size());
#ifdef _OPENMP
    if (opts.threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
        for (long i = 0; i < static_cast<long>(selected.size()); ++i)
            reports[i] = run_case(*selected[i], opts, nullptr);
        return reports;
    }
#endif
    for (std::size_t i = 0; i < selected.size(); ++i) reports[i] = run_case(*selected[i], opts, nullptr);
    return reports;
}

bool suite_matches_expectations(const std::vector<CaseReport>& reports) {
    const auto& expected = expected_verdicts();
    for (const auto& r : reports) {
        auto it = expected.find(r.id);
        if (it == expected.end() || r.verdict != it->second) return false;
    }
    return true;
}

Json suite_report_json(const std::vector<CaseReport>& reports) {
    Json j;
    j["cases"] = Json::array();
    for (const auto& r : reports) {
        Json c;
        c["id"] = r.id;
        c["title"] = r.title;
        c["verdict"] = verdict_name(r.verdict);
        c["expected"] = verdict_name(expected_verdicts().at(r.id));
        c["points"] = r.points_checked;
        Json notes = Json::array();
        for (const auto& n : r.notes) {
            Json nn;
            nn["point"] = n.point;
            nn["verdict"] = verdict_name(n.verdict);
            nn["detail"] = n.detail;
            notes.push_back(nn);
        }
        c["notes"] = notes;
        j["cases"].push_back(c);
    }
    j["ok"] = suite_matches_expectations(reports);
    return j;
}

std::string suite_report_table(const std::vector<CaseReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << r.id;
        for (std::size_t i = r.id.size(); i < 5; ++i) os << ' ';
        std::string v = verdict_name(r.verdict);
        if (r.verdict == expected_verdicts().at(r.id) && r.verdict == Verdict::VariantPass)
            v += " (expected)";
        os << v;
        for (std::size_t i = v.size(); i < 24; ++i) os << ' ';
        os << r.points_checked << " points  " << r.title << "\n";
    }
    os << (suite_matches_expectations(reports) ? "suite: OK" : "suite: UNEXPECTED VERDICTS") << "\n";
    return os.str();
}

} // namespace qbeta
