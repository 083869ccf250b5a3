#include "qbeta/qbernoulli.hpp"

#include "qbeta/qcombinatorics.hpp"

namespace qbeta {

RatFunc weight(long k) {
    if (k == 0) {
        // (q - 1)/L
        Poly num = Poly::variable(Var::q) - Poly::constant(Coeff(Rational(1)));
        return RatFunc(std::move(num), Poly::variable(Var::L));
    }
    return RatFunc(Rational(k)) / q_int(k);
}

RatFunc gen_beta(unsigned n, const WeightSpec& spec, const RatFunc& arg) {
    if (spec.empty()) throw DomainError("weight profile must have at least one factor");
    if (arg.is_zero()) throw DomainError("beta argument must be nonzero (it stands for q^x)");
    RatFunc sum(0);
    RatFunc arg_power(1);
    for (unsigned l = 0; l <= n; ++l) {
        RatFunc term = RatFunc(Rational(binomial(n, static_cast<long>(l)))) * arg_power;
        if (l % 2) term = -term;
        for (const auto& fct : spec) term *= weight(static_cast<long>(l) * fct.multiplier + fct.shift);
        sum += term;
        if (l < n) arg_power *= arg;
    }
    const RatFunc one_minus_q = RatFunc(1) - RatFunc::variable(Var::q);
    return sum / one_minus_q.pow(static_cast<long>(n));
}

RatFunc rebase(const RatFunc& e, unsigned long f) {
    if (f == 0) throw DomainError("rebase exponent must be positive");
    if (f == 1) return e;
    RatFunc out = e.substitute(Var::q, RatFunc::variable(Var::q, static_cast<std::uint32_t>(f)));
    return out.substitute(Var::L, RatFunc(Rational(static_cast<long>(f))) * RatFunc::variable(Var::L));
}

RatFunc invert_base(const RatFunc& e) {
    RatFunc out = e.substitute_reciprocal(Var::q);
    return out.substitute(Var::L, -RatFunc::variable(Var::L));
}

const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::carlitz: return "carlitz";
        case FamilyKind::twisted: return "twisted";
        case FamilyKind::order_r: return "order_r";
        case FamilyKind::hr: return "hr";
        case FamilyKind::barnes: return "barnes";
        case FamilyKind::chi: return "chi";
        case FamilyKind::chi_order_r: return "chi_order_r";
        case FamilyKind::chi_hr: return "chi_hr";
    }
    return "?";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
    for (auto k : {FamilyKind::carlitz, FamilyKind::twisted, FamilyKind::order_r, FamilyKind::hr,
                   FamilyKind::barnes, FamilyKind::chi, FamilyKind::chi_order_r, FamilyKind::chi_hr})
        if (name == family_name(k)) return k;
    return std::nullopt;
}

bool family_has_character(FamilyKind k) {
    return k == FamilyKind::chi || k == FamilyKind::chi_order_r || k == FamilyKind::chi_hr;
}

namespace {

WeightSpec plain_spec(FamilyKind kind, unsigned r, long h, const WeightSpec& barnes) {
    switch (kind) {
        case FamilyKind::carlitz: return {{1, 1}};
        case FamilyKind::twisted:
        case FamilyKind::chi: return {{1, 0}};
        case FamilyKind::order_r:
        case FamilyKind::chi_order_r: return WeightSpec(r, WeightFactor{1, 0});
        case FamilyKind::hr:
        case FamilyKind::chi_hr: {
            WeightSpec s;
            for (unsigned j = 1; j <= r; ++j) s.push_back({1, h - static_cast<long>(j)});
            return s;
        }
        case FamilyKind::barnes: {
            if (barnes.empty()) throw DomainError("barnes family needs an explicit weight profile");
            for (const auto& fct : barnes)
                if (fct.multiplier == 0) throw DomainError("barnes multipliers must be nonzero");
            return barnes;
        }
    }
    throw InvalidFamily("unknown family kind");
}

} // namespace

WeightSpec family_weight_spec(const BetaFamily& fam) {
    if (family_has_character(fam.kind)) throw InvalidFamily("character families have no plain weight profile");
    if (fam.r == 0) throw DomainError("order must be at least 1");
    return plain_spec(fam.kind, fam.r, fam.h, fam.barnes);
}

RatFunc family_beta(const BetaFamily& fam, const RatFunc& arg) {
    if (family_has_character(fam.kind))
        throw InvalidFamily("character families are evaluated through chi_beta");
    return gen_beta(fam.n, family_weight_spec(fam), arg);
}

RatFunc chi_beta(const BetaFamily& fam, const DirichletCharacter& chi, const RatFunc& arg) {
    if (!family_has_character(fam.kind)) throw InvalidFamily("plain families are evaluated through family_beta");
    if (fam.r == 0) throw DomainError("order must be at least 1");
    const unsigned long f = chi.modulus();
    const WeightSpec spec = plain_spec(fam.kind, fam.r, fam.h, {});
    const unsigned r = static_cast<unsigned>(spec.size());

    // Plain value at base q^f with a symbolic argument slot.
    const RatFunc base = rebase(gen_beta(fam.n, spec, RatFunc::variable(Var::X)), f);

    RatFunc sum(0);
    std::vector<unsigned long> tuple(r, 0);
    while (true) {
        unsigned long a_sum = 0;
        long twist = 0;
        Coeff chi_prod(Rational(1));
        for (unsigned j = 0; j < r; ++j) {
            a_sum += tuple[j];
            twist += spec[j].shift * static_cast<long>(tuple[j]);
            chi_prod *= chi(static_cast<long>(tuple[j]));
        }
        if (!chi_prod.is_zero()) {
            // (q^f)^{(x + sum a)/f} = q^{sum a} * arg.
            RatFunc value = base.substitute(
                Var::X, RatFunc::q_power(static_cast<long>(a_sum)) * arg);
            sum += RatFunc(Poly::constant(chi_prod)) * RatFunc::q_power(twist) * value;
        }
        // Next residue tuple.
        unsigned j = 0;
        for (; j < r; ++j) {
            if (++tuple[j] < f) break;
            tuple[j] = 0;
        }
        if (j == r) break;
    }
    const long exp = static_cast<long>(fam.n) - static_cast<long>(r);
    return q_int(static_cast<long>(f)).pow(exp) * sum;
}

RatFunc beta_value(const BetaFamily& fam, const RatFunc& arg) {
    if (!family_has_character(fam.kind)) return family_beta(fam, arg);
    const auto chars = enumerate_characters(fam.f);
    if (fam.chi_index >= chars.size()) throw DomainError("character index out of range");
    return chi_beta(fam, chars[fam.chi_index], arg);
}

} // namespace qbeta
