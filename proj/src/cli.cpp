#include "qbeta/cli.hpp"

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qbeta/complex_oracle.hpp"
#include "qbeta/identities.hpp"
#include "qbeta/json_io.hpp"
#include "qbeta/padic_oracle.hpp"
#include "qbeta/qcombinatorics.hpp"

namespace qbeta {

namespace {

struct FamilyFlags {
    std::string family = "carlitz";
    unsigned n = 0;
    unsigned r = 1;
    long h = 2;
    unsigned long f = 1;
    unsigned chi = 0;
    std::string character; // combined "f.index" addressing
    std::vector<long> w, delta;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& ff) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--family", ff.family,
                    "carlitz|twisted|order_r|hr|barnes|chi|chi_order_r|chi_hr")
        ->capture_default_str();
    cmd->add_option("--n", ff.n, "index n")->capture_default_str();
    cmd->add_option("--r", ff.r, "order r");
    cmd->add_option("--h", ff.h, "exponent parameter h");
    cmd->add_option("--f", ff.f, "character modulus f");
    cmd->add_option("--chi", ff.chi, "character index within modulus f");
    cmd->add_option("--character", ff.character, "combined character address f.index");
    cmd->add_option("--w", ff.w, "multipliers (family barnes)");
    cmd->add_option("--delta", ff.delta, "shifts (family barnes)");
}

BetaFamily resolve_family(const FamilyFlags& ff) {
    const auto kind = family_from_name(ff.family);
    if (!kind) throw CLI::ValidationError("--family", "unknown family '" + ff.family + "'");
    BetaFamily fam;
    fam.kind = *kind;
    fam.n = ff.n;
    fam.r = ff.r;
    fam.h = ff.h;
    fam.f = ff.f;
    fam.chi_index = ff.chi;
    if (!ff.character.empty()) {
        const auto dot = ff.character.find('.');
        if (dot == std::string::npos)
            throw CLI::ValidationError("--character", "expected f.index, e.g. 5.1");
        fam.f = std::stoul(ff.character.substr(0, dot));
        fam.chi_index = static_cast<unsigned>(std::stoul(ff.character.substr(dot + 1)));
    }
    if (fam.kind == FamilyKind::barnes) {
        if (ff.w.size() != ff.delta.size() || ff.w.empty())
            throw CLI::ValidationError("--w/--delta", "need matching nonempty multiplier/shift lists");
        for (std::size_t i = 0; i < ff.w.size(); ++i) fam.barnes.push_back({ff.w[i], ff.delta[i]});
        fam.r = static_cast<unsigned>(fam.barnes.size());
    }
    return fam;
}

Rational parse_at_q(const std::string& s) {
    auto eq = s.find('=');
    std::string body = s;
    if (eq != std::string::npos) {
        if (s.substr(0, eq) != "q") throw CLI::ValidationError("--at", "only q=a/b is supported");
        body = s.substr(eq + 1);
    }
    return Rational::parse(body);
}

Complex parse_complex(const std::string& s) {
    // forms: "0.3", "0.5+0.2i", "0.5-0.2i"
    double re = 0, im = 0;
    std::string t = s;
    if (!t.empty() && t.back() == 'i') {
        t.pop_back();
        auto pos = t.find_last_of("+-");
        if (pos == std::string::npos || pos == 0)
            throw CLI::ValidationError("--q", "cannot parse complex number '" + s + "'");
        re = std::stod(t.substr(0, pos));
        im = std::stod(t.substr(pos));
    } else {
        re = std::stod(t);
    }
    return {re, im};
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot open output file '" + path + "'");
    f << text;
}

int cmd_compute(const FamilyFlags& ff, const std::string& arg_mode, const std::string& at,
                const std::string& json_path, std::ostream& out) {
    const BetaFamily fam = resolve_family(ff);
    const RatFunc arg = arg_mode == "symbolic" ? RatFunc::variable(Var::X) : RatFunc(1);
    const RatFunc value = beta_value(fam, arg);
    Json j;
    j["family"] = family_name(fam.kind);
    j["n"] = fam.n;
    if (fam.kind != FamilyKind::carlitz && fam.kind != FamilyKind::twisted && fam.kind != FamilyKind::chi)
        j["r"] = fam.r;
    if (fam.kind == FamilyKind::hr || fam.kind == FamilyKind::chi_hr) j["h"] = fam.h;
    if (family_has_character(fam.kind)) {
        j["f"] = fam.f;
        j["chi"] = fam.chi_index;
    }
    j["arg"] = arg_mode;
    if (!at.empty()) {
        const Rational q0 = parse_at_q(at);
        std::map<Var, Rational> pt;
        pt.emplace(Var::q, q0);
        if (arg_mode != "symbolic") pt.emplace(Var::X, Rational(1));
        j["at"] = "q=" + q0.str();
        try {
            j["value"] = value.eval_rational(pt).str();
        } catch (const DomainError& e) {
            // Values carrying L (or a symbolic X) have no exact rational
            // evaluation at a bare q.
            throw CLI::ValidationError("--at", e.what());
        }
    } else {
        j["value"] = ratfunc_to_json(value);
        j["pretty"] = value.str();
    }
    write_output(json_path, j.dump(2) + "\n", out);
    return 0;
}

int cmd_table(const FamilyFlags& ff, unsigned n_min, unsigned n_max, const std::string& at,
              const std::string& csv_path, std::ostream& out) {
    if (n_max > 12) throw CLI::ValidationError("--n-max", "table rows are limited to n <= 12");
    std::ostringstream csv;
    csv << "n,value";
    std::optional<Rational> q0;
    if (!at.empty()) {
        q0 = parse_at_q(at);
        csv << ",value_at_q=" << q0->str();
    }
    csv << "\r\n";
    if (n_min <= n_max)
        for (unsigned n = n_min; n <= n_max; ++n) {
            BetaFamily fam = resolve_family(ff);
            fam.n = n;
            const RatFunc value = beta_value(fam, RatFunc(1));
            csv << n << "," << csv_quote(value.str());
            if (q0) {
                std::map<Var, Rational> pt;
                pt.emplace(Var::q, *q0);
                csv << "," << csv_quote(value.eval_rational(pt).str());
            }
            csv << "\r\n";
        }
    write_output(csv_path, csv.str(), out);
    return 0;
}

int cmd_verify(const std::string& suite, unsigned max_n, unsigned max_r, unsigned long max_f,
               int threads, const std::string& json_path, std::ostream& out) {
    SuiteOptions opts;
    opts.grid.max_n = max_n;
    opts.grid.max_r = max_r;
    opts.grid.max_f = max_f;
    opts.threads = threads;
    std::vector<std::string> filter;
    if (suite != "all") {
        std::stringstream ss(suite);
        std::string id;
        while (std::getline(ss, id, ',')) filter.push_back(id);
    }
    const auto reports = run_suite(filter, opts);
    out << suite_report_table(reports);
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw Error("cannot open output file '" + json_path + "'");
        f << suite_report_json(reports).dump(2) << "\n";
    }
    return suite_matches_expectations(reports) ? 0 : 1;
}

int cmd_oracle_padic(const FamilyFlags& ff, unsigned long p, const std::string& q0,
                     unsigned N_min, unsigned N_max, unsigned digits, const std::string& x0,
                     bool zero_mode, const std::string& json_path, std::ostream& out) {
    OracleConfig cfg;
    cfg.p = p;
    cfg.N_min = N_min;
    cfg.N_max = N_max;
    cfg.digits = digits;
    // --q0 forms: "1+p" (u0 = 1) or "1+Kp" or a plain integer offset multiplier.
    if (q0 == "1+p") {
        cfg.u0 = 1;
    } else if (q0.size() > 3 && q0.substr(0, 2) == "1+" && q0.back() == 'p') {
        cfg.u0 = std::stol(q0.substr(2, q0.size() - 3));
    } else {
        cfg.u0 = std::stol(q0);
    }
    Json j;
    j["p"] = p;
    j["q0"] = "1+" + std::to_string(cfg.u0) + "*" + std::to_string(p);
    if (zero_mode) {
        // | p^N/[p^N]_q - (q-1)/log q |_p over the level range.
        const unsigned W = cfg.digits + cfg.N_max + 8;
        const PadicApprox q0p(cfg.p, BigInt(1) + BigInt(static_cast<long>(cfg.p)) * cfg.u0, W);
        const PadicApprox target =
            (q0p - PadicApprox(cfg.p, 1, W)) / padic_log(q0p, W);
        IntegrandSpec spec;
        spec.n = 0;
        spec.factors = {WeightFactor{1, 0}};
        spec.x0 = Rational(0);
        Json rows = Json::array();
        out << "zero-mode check: p^N/[p^N]_q vs (q-1)/log q, p=" << p << "\n";
        for (unsigned N = cfg.N_min; N <= cfg.N_max; ++N) {
            const PadicApprox s = riemann_sum(spec, cfg, N);
            const PadicApprox d = s - target;
            Json row;
            row["N"] = N;
            row["distance_valuation"] = d.valuation();
            row["indistinguishable"] = d.is_zero();
            rows.push_back(row);
            out << "  N=" << N << "  |sum - target|_p <= " << p << "^-" << d.valuation() << "\n";
        }
        j["zero_mode"] = rows;
        if (!json_path.empty()) write_output(json_path, j.dump(2) + "\n", out);
        return 0;
    }
    const BetaFamily fam = resolve_family(ff);
    const Rational x0r = x0.empty() ? Rational(0) : Rational::parse(x0);
    const auto rep = validate_family(fam, cfg, x0r);
    out << "family " << family_name(fam.kind) << " n=" << fam.n << " at p=" << p << ", x0=" << x0r.str()
        << "\n";
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        out << "  N=" << row.N << "  |sum - exact|_p <= " << p << "^-" << row.distance_valuation
            << (row.indistinguishable ? " (at working precision)" : "") << "\n";
        Json rj;
        rj["N"] = row.N;
        rj["distance_valuation"] = row.distance_valuation;
        rj["indistinguishable"] = row.indistinguishable;
        rows.push_back(rj);
    }
    out << "  monotone nonincreasing: " << (rep.monotone_nonincreasing ? "yes" : "NO") << "\n";
    j["family"] = family_name(fam.kind);
    j["n"] = fam.n;
    j["x0"] = x0r.str();
    j["rows"] = rows;
    j["monotone_nonincreasing"] = rep.monotone_nonincreasing;
    if (!json_path.empty()) write_output(json_path, j.dump(2) + "\n", out);
    return 0;
}

int cmd_oracle_complex(const std::string& identity, const std::string& q_str, double x,
                       const std::string& terms, const std::string& json_path, std::ostream& out) {
    if (identity != "I11")
        throw CLI::ValidationError("--identity", "the complex oracle bundle is addressed as I11");
    unsigned force_terms = 0;
    if (terms != "auto") {
        try {
            force_terms = static_cast<unsigned>(std::stoul(terms));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--terms", "expected auto or a term count");
        }
    }
    const Complex q0 = parse_complex(q_str);
    const SeriesPoint pt{q0, x};
    Json j;
    j["q"] = q_str;
    j["x"] = x;
    j["terms"] = terms;
    Json checks = Json::array();
    double worst = 0.0;
    auto record = [&](const std::string& name, double resid, double tail) {
        Json c;
        c["check"] = name;
        c["residual"] = resid;
        c["tail_bound"] = tail;
        checks.push_back(c);
        worst = std::max(worst, resid);
        out << "  " << name << ": residual " << resid << " (tail bound " << tail << ")\n";
    };
    out << "series and generating-function checks at q=" << q_str << ", x=" << x << "\n";
    for (unsigned n = 1; n <= 6; ++n) {
        BetaFamily tw;
        tw.kind = FamilyKind::twisted;
        tw.n = n;
        const auto s = series_twisted(n, pt, 1e-12, force_terms);
        const Complex exact = eval_family_at(tw, pt, /*drop_zero_mode=*/true);
        record("series n=" + std::to_string(n), std::abs(s.value - exact), s.tail_bound);
        const auto gf = gf_coefficient_twisted(n, pt, 1e-12, force_terms);
        record("gf coefficient n=" + std::to_string(n), std::abs(gf.value - exact), gf.tail_bound);
    }
    for (long h = 1; h <= 3; ++h)
        for (unsigned n = 1; n <= 4; ++n) {
            BetaFamily hr;
            hr.kind = FamilyKind::hr;
            hr.n = n;
            hr.h = h;
            hr.r = 1;
            const auto s = series_order_two_weights(n, h, pt, 1e-12, force_terms);
            const Complex exact = eval_family_at(hr, pt, /*drop_zero_mode=*/h == 1);
            record("two-sum series n=" + std::to_string(n) + " h=" + std::to_string(h),
                   std::abs(s.value - exact), s.tail_bound);
        }
    {
        const auto chars = enumerate_characters(4);
        BetaFamily cf;
        cf.kind = FamilyKind::chi;
        cf.f = 4;
        cf.chi_index = 1;
        for (unsigned n = 1; n <= 4; ++n) {
            cf.n = n;
            const auto s = series_chi(n, chars[1], pt, /*with_q_factor=*/true, 1e-12, force_terms);
            const Complex exact = eval_family_at(cf, pt, false);
            record("character series n=" + std::to_string(n), std::abs(s.value - exact), s.tail_bound);
            const auto gf = gf_coefficient_chi(n, chars[1], pt, /*with_q_factor=*/true, 1e-12, force_terms);
            record("character gf coefficient n=" + std::to_string(n), std::abs(gf.value - exact),
                   gf.tail_bound);
        }
    }
    j["checks"] = checks;
    j["worst_residual"] = worst;
    if (!json_path.empty()) write_output(json_path, j.dump(2) + "\n", out);
    return 0;
}

int cmd_list(bool identities, bool families, bool errata, std::ostream& out) {
    if (!identities && !families && !errata) identities = families = errata = true;
    if (identities) {
        out << "identity cases:\n";
        for (const auto& c : identity_catalog()) {
            out << "  " << c.id << "  [expected " << verdict_name(expected_verdicts().at(c.id)) << "]  "
                << c.title << "\n";
        }
        out << "formula inventory (" << formula_inventory().size() << " entries):\n";
        for (const auto& e : formula_inventory()) {
            out << "  " << e.slug << ": " << e.description << " <-";
            for (const auto& c : e.covered_by) out << " " << c;
            out << "\n";
        }
    }
    if (families) {
        out << "families:\n";
        out << "  carlitz      weights (1,1); numbers of the base recurrence\n";
        out << "  twisted      weights (1,0); first-order polynomials with the q^{-y} twist\n";
        out << "  order_r      weights (1,0) x r\n";
        out << "  hr           weights (1,h-j), j=1..r\n";
        out << "  barnes       explicit multipliers and shifts (--w, --delta)\n";
        out << "  chi          character-attached twisted (--f, --chi)\n";
        out << "  chi_order_r  character-attached order r\n";
        out << "  chi_hr       character-attached (h,r)\n";
    }
    if (errata) {
        out << "errata (printed forms that fail, with the reading that holds):\n";
        for (const auto& e : errata_notes()) out << "  " << e.id << ": " << e.note << "\n";
    }
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine and verifier for q-Bernoulli families"};
    app.set_config("--config", "", "key=value configuration file (flags win)");
    app.require_subcommand(1);

    FamilyFlags ff;
    std::string arg_mode = "0", at, json_path, csv_path;
    unsigned n_min = 0, n_max = 0;

    auto* compute = app.add_subcommand("compute", "exact value of one family member");
    add_family_flags(compute, ff);
    compute->add_option("--arg", arg_mode, "symbolic (keep X) or 0 (set x = 0)")->capture_default_str();
    compute->add_option("--at", at, "exact rational evaluation point, e.g. q=1/2");
    compute->add_option("--json", json_path, "output path (default stdout)");

    auto* table = app.add_subcommand("table", "CSV table of a family over a range of n");
    add_family_flags(table, ff);
    table->add_option("--n-min", n_min)->capture_default_str();
    table->add_option("--n-max", n_max)->capture_default_str();
    table->add_option("--at", at, "optional exact evaluation column, e.g. q=1/2");
    table->add_option("--csv", csv_path, "output path (default stdout)");

    std::string suite = "all";
    unsigned max_n = 5, max_r = 2;
    unsigned long max_f = 4;
    int threads = 1;
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--suite", suite, "all or a comma-separated list of ids")->capture_default_str();
    verify->add_option("--max-n", max_n)->capture_default_str();
    verify->add_option("--max-r", max_r)->capture_default_str();
    verify->add_option("--max-f", max_f)->capture_default_str();
    verify->add_option("--threads", threads)->capture_default_str();
    verify->add_option("--json", json_path, "write the machine-readable report here");

    auto* oracle = app.add_subcommand("oracle", "numerical validation oracles");
    oracle->require_subcommand(1);

    unsigned long p = 3;
    std::string q0 = "1+p", x0, n_range;
    unsigned N_min = 2, N_max = 6, digits = 12;
    bool zero_mode = false;
    auto* padic = oracle->add_subcommand("padic", "level-by-level Riemann-sum convergence");
    add_family_flags(padic, ff);
    padic->add_option("--p", p, "odd prime")->capture_default_str();
    padic->add_option("--q0", q0, "1+p, 1+Kp, or an integer u0")->capture_default_str();
    padic->add_option("--N", n_range, "level range A..B (default 2..6)");
    padic->add_option("--N-min", N_min)->capture_default_str();
    padic->add_option("--N-max", N_max)->capture_default_str();
    padic->add_option("--digits", digits)->capture_default_str();
    padic->add_option("--x0", x0, "rational argument offset (denominator coprime to p)");
    padic->add_flag("--zero-mode", zero_mode, "check p^N/[p^N]_q against (q-1)/log q instead");
    padic->add_option("--json", json_path);

    std::string identity = "I11", q_str = "0.3";
    double x = 0.0;
    std::string terms = "auto";
    auto* cplx = oracle->add_subcommand("complex", "truncated series and generating functions");
    cplx->add_option("--identity", identity)->capture_default_str();
    cplx->add_option("--q", q_str, "complex base, |q| < 1, e.g. 0.3 or 0.5+0.2i")->capture_default_str();
    cplx->add_option("--x", x)->capture_default_str();
    cplx->add_option("--terms", terms, "auto (from the tail bound)")->capture_default_str();
    cplx->add_option("--json", json_path);

    bool list_identities = false, list_families = false, list_errata = false;
    auto* list = app.add_subcommand("list", "catalogs and the errata manifest");
    list->add_flag("--identities", list_identities);
    list->add_flag("--families", list_families);
    list->add_flag("--errata", list_errata);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(ff, arg_mode, at, json_path, out);
        if (table->parsed()) return cmd_table(ff, n_min, n_max, at, csv_path, out);
        if (verify->parsed()) return cmd_verify(suite, max_n, max_r, max_f, threads, json_path, out);
        if (oracle->parsed()) {
            if (padic->parsed()) {
                if (!n_range.empty()) {
                    const auto dots = n_range.find("..");
                    if (dots == std::string::npos)
                        throw CLI::ValidationError("--N", "expected a range like 2..6");
                    N_min = static_cast<unsigned>(std::stoul(n_range.substr(0, dots)));
                    N_max = static_cast<unsigned>(std::stoul(n_range.substr(dots + 2)));
                }
                return cmd_oracle_padic(ff, p, q0, N_min, N_max, digits, x0, zero_mode, json_path, out);
            }
            if (cplx->parsed()) return cmd_oracle_complex(identity, q_str, x, terms, json_path, out);
        }
        if (list->parsed()) return cmd_list(list_identities, list_families, list_errata, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnknownCase& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace qbeta
