#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pado {

/*
 * One verified check: a named claim over a parameter point, its verdict,
 * and the computed evidence. `cells` carries the table view aligned with
 * the owning suite's columns; params/values carry the structured view for
 * the JSON report. A counterexample may accompany a passing row when a
 * strictly stronger claim was probed and found false.
 */
struct ReportRow {
    std::string check;
    std::vector<std::pair<std::string, long>> params;
    long degree = -1;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::string> cells;
    bool pass = true;
    std::string counterexample;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> columns;  // table columns, status/note appended by renderers
    std::vector<ReportRow> rows;

    bool ok() const {
        for (const ReportRow& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

/*
 * Grid selection shared by all suites. Empty vectors mean "use the suite's
 * own default grid"; quick shrinks the defaults to a smoke grid. The
 * defaults of every suite reproduce the full verification grids.
 */
struct GridConfig {
    std::vector<long> ps;
    std::vector<long> ns;
    std::vector<long> ms;
    std::vector<long> ds;
    int deg = -1;
    bool quick = false;
    int jobs = 1;
};

inline constexpr int kDegreeCap = 12;
inline constexpr int kLevelCap = 8;

extern const std::vector<std::string> kSuiteNames;  // the twelve runnable suites
bool is_suite_name(const std::string& s);

/* runs one suite over the grid; throws std::invalid_argument on bad names */
SuiteReport run_suite(const std::string& name, const GridConfig& cfg);

/*
 * Runs the named suites in the given order with a deterministic ordered
 * reduce; fault >= 0 inverts the verdict of row (fault mod total rows)
 * after assembly, for exit-code plumbing tests.
 */
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const GridConfig& cfg,
                                    long fault = -1);

/* single JSON document with a schema-version field */
std::string render_json(const std::vector<SuiteReport>& reports);

/* RFC 4180: CRLF separators, quoting; one table per document */
std::string render_csv(const std::vector<SuiteReport>& reports);

std::string render_text(const std::vector<SuiteReport>& reports);

/* intersection tree of the n-th model's special fiber as a JSON document */
std::string render_tree_json(long p, unsigned n);

}  // namespace pado
