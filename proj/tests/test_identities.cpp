#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qbeta/complex_oracle.hpp"
#include "qbeta/identities.hpp"

using namespace qbeta;

namespace {
SuiteOptions small_grid_opts() {
    SuiteOptions opts;
    opts.grid.max_n = 3;
    opts.grid.max_r = 2;
    opts.grid.hs = {0, 1, 2};
    opts.grid.max_f = 3;
    return opts;
}
} // namespace

TEST_CASE("catalog shape") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() == 18); // I11 lives in the complex oracle
    std::set<std::string> ids;
    for (const auto& c : cat) {
        CHECK(ids.insert(c.id).second);
        CHECK(expected_verdicts().count(c.id) == 1);
        CHECK_FALSE(c.covers.empty());
    }
}

TEST_CASE("suite on a reduced grid matches the shipped expectations") {
    const auto reports = run_suite({}, small_grid_opts());
    REQUIRE(reports.size() == identity_catalog().size());
    for (const auto& r : reports) {
        INFO(r.id);
        CHECK(r.verdict == expected_verdicts().at(r.id));
        CHECK(r.points_checked > 0);
    }
    CHECK(suite_matches_expectations(reports));
}

TEST_CASE("every variant-pass case is documented in the errata") {
    std::set<std::string> errata_ids;
    for (const auto& e : errata_notes()) errata_ids.insert(e.id);
    for (const auto& [id, v] : expected_verdicts())
        if (v == Verdict::VariantPass) CHECK(errata_ids.count(id) == 1);
}

TEST_CASE("metamorphic non-vacuity: a perturbed side fails everywhere") {
    SuiteOptions opts = small_grid_opts();
    opts.grid.max_n = 2;
    opts.grid.max_r = 1;
    opts.perturb = true;
    const auto reports = run_suite({}, opts);
    for (const auto& r : reports) {
        INFO(r.id);
        CHECK(r.points_checked > 0);
        CHECK(r.verdict == Verdict::Fail);
    }
}

TEST_CASE("reports are reproducible") {
    SuiteOptions opts = small_grid_opts();
    opts.grid.max_n = 2;
    const auto a = run_suite({"I1", "I7", "I19"}, opts);
    const auto b = run_suite({"I1", "I7", "I19"}, opts);
    CHECK(suite_report_json(a).dump() == suite_report_json(b).dump());
}

TEST_CASE("parallel run produces the same report") {
    SuiteOptions opts = small_grid_opts();
    opts.grid.max_n = 2;
    auto serial = opts;
    serial.threads = 1;
    auto parallel = opts;
    parallel.threads = 4;
    CHECK(suite_report_json(run_suite({}, serial)).dump() ==
          suite_report_json(run_suite({}, parallel)).dump());
}

TEST_CASE("unknown ids are rejected") {
    SuiteOptions opts;
    CHECK_THROWS_AS(run_case("I99", opts), UnknownCase);
    CHECK_THROWS_AS(run_suite({"nope"}, opts), UnknownCase);
}

TEST_CASE("formula inventory is fully covered") {
    std::set<std::string> case_ids;
    for (const auto& c : identity_catalog()) case_ids.insert(c.id);
    const std::set<std::string> oracle_ids = {
        "oracle:padic", "oracle:complex-series", "oracle:complex-gf", "oracle:complex-limits",
        "unit:qcombinatorics", "unit:qbernoulli"};
    std::set<std::string> slugs;
    for (const auto& e : formula_inventory()) {
        CHECK(slugs.insert(e.slug).second);
        REQUIRE_FALSE(e.covered_by.empty());
        for (const auto& c : e.covered_by) {
            INFO(e.slug << " <- " << c);
            CHECK((case_ids.count(c) == 1 || oracle_ids.count(c) == 1));
        }
    }
    // Every slug referenced by a case exists in the inventory.
    for (const auto& c : identity_catalog())
        for (const auto& s : c.covers) {
            INFO(c.id << " covers " << s);
            CHECK(slugs.count(s) == 1);
        }
}

TEST_CASE("recorded comparison pairs agree numerically at random points") {
    // Guards the evaluation bridge: exact equality must survive the trip
    // through floating-point evaluation.
    SuiteOptions opts = small_grid_opts();
    opts.grid.max_n = 2;
    opts.record_pairs = 4;
    const std::vector<SeriesPoint> pts = {
        {{0.31, 0.0}, 0.0}, {{0.55, 0.2}, 0.6}, {{0.8, -0.1}, 1.3}, {{0.47, 0.0}, 2.0}, {{0.2, 0.3}, 0.9}};
    for (const auto& c : identity_catalog()) {
        if (expected_verdicts().at(c.id) != Verdict::Pass) continue;
        std::vector<Comparison> pairs;
        run_case(c, opts, &pairs);
        for (const auto& cmp : pairs) {
            for (const auto& pt : pts) {
                std::map<Var, Complex> point{{Var::q, pt.q},
                                             {Var::L, std::log(pt.q)},
                                             {Var::X, complex_q_power(pt.q, pt.x)},
                                             {Var::Y, complex_q_power(pt.q, 0.4)}};
                try {
                    const Complex lv = cmp.lhs.eval_complex(point);
                    const Complex rv = cmp.rhs.eval_complex(point);
                    const double scale = 1.0 + std::max(std::abs(lv), std::abs(rv));
                    INFO(c.id << " " << cmp.label);
                    CHECK(std::abs(lv - rv) <= 1e-9 * scale);
                } catch (const PoleAtPoint&) {
                    // A denominator may vanish at a sampled point.
                }
            }
        }
    }
}
