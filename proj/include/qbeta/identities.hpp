#ifndef QBETA_IDENTITIES_HPP
#define QBETA_IDENTITIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qbeta/json_io.hpp"
#include "qbeta/qbernoulli.hpp"

namespace qbeta {

enum class Verdict { Pass, VariantPass, Fail };
const char* verdict_name(Verdict v);

/// Parameter ranges for the identity grids.
struct GridRanges {
    unsigned max_n = 5;
    unsigned max_r = 2;
    std::vector<long> hs = {-1, 0, 1, 2, 3};
    unsigned long max_f = 4;
};

/// One exact equality to check at one grid point.
struct Comparison {
    std::string label;
    RatFunc lhs, rhs;
};

/// All checks at one grid point. When every printed comparison holds the
/// point passes; otherwise the variant comparisons (a corrected reading of
/// the same statement) decide between VariantPass and Fail.
struct PointCheck {
    std::string point;
    std::vector<Comparison> printed;
    std::vector<Comparison> variant;
    std::string variant_note;
};

struct PointReport {
    std::string point;
    Verdict verdict = Verdict::Pass;
    std::string detail;
};

struct CaseReport {
    std::string id;
    std::string title;
    Verdict verdict = Verdict::Pass;
    std::size_t points_checked = 0;
    std::vector<PointReport> notes; // every non-Pass point
    double seconds = 0.0;
};

struct SuiteOptions {
    GridRanges grid;
    bool perturb = false;  // metamorphic mode: every LHS gets + q/(1+q)
    int threads = 1;
    std::size_t record_pairs = 0; // keep up to this many comparisons per case
};

struct IdentityCase {
    std::string id;
    std::string title;
    std::vector<std::string> covers; // formula-inventory slugs
    std::function<std::vector<PointCheck>(const GridRanges&)> build;
};

const std::vector<IdentityCase>& identity_catalog();

/// Shipped expectations: which cases hold as printed and which hold only in
/// the corrected reading.
const std::map<std::string, Verdict>& expected_verdicts();

struct ErrataNote {
    std::string id;
    std::string note;
};
/// Every printed statement that fails as printed, with the reading that holds.
const std::vector<ErrataNote>& errata_notes();

/// Inventory of the formulas the project verifies, with the checks covering
/// each one. The coverage test asserts that no entry is left uncovered.
struct InventoryEntry {
    std::string slug;
    std::string description;
    std::vector<std::string> covered_by;
};
const std::vector<InventoryEntry>& formula_inventory();

CaseReport run_case(const IdentityCase& c, const SuiteOptions& opts,
                    std::vector<Comparison>* recorded = nullptr);
CaseReport run_case(const std::string& id, const SuiteOptions& opts,
                    std::vector<Comparison>* recorded = nullptr);

/// Runs the filtered catalog (empty filter = everything), optionally in
/// parallel; reports are returned in catalog order regardless of threads.
std::vector<CaseReport> run_suite(const std::vector<std::string>& filter, const SuiteOptions& opts);

/// True when every verdict matches the shipped expectation.
bool suite_matches_expectations(const std::vector<CaseReport>& reports);

Json suite_report_json(const std::vector<CaseReport>& reports);
std::string suite_report_table(const std::vector<CaseReport>& reports);

} // namespace qbeta

#endif
