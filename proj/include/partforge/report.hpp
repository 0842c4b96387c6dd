#ifndef PARTFORGE_REPORT_HPP
#define PARTFORGE_REPORT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace partforge {

/// Counts keyed by x-vector for one weight.  Absent keys count zero.
using CountTable = std::map<std::vector<int>, std::uint64_t>;

/// Produces the count table of one side of an identity at weight m.
using CountSource = std::function<CountTable(int m)>;

struct CountRow {
    std::vector<int> x;
    int m = 0;
    std::vector<std::uint64_t> counts;

    bool equal() const;
};

/// Result of checking that several counting routes agree for every
/// (x, m) with m <= m_max.
struct IdentityReport {
    std::string theorem;
    nlohmann::json params = nlohmann::json::object();
    int m_max = 0;
    std::vector<std::string> labels;
    std::vector<CountRow> rows;
    /// Failed side checks that are not count rows.
    std::vector<std::string> issues;

    bool passed() const;
    std::optional<CountRow> counterexample() const;
    /// Rows with the given x (all weights).
    std::vector<CountRow> rows_for(const std::vector<int>& x) const;
    std::optional<CountRow> row(const std::vector<int>& x, int m) const;
};

/// Evaluates every source for m = 0..m_max and lines the tables up.
/// Rows where every count is zero are omitted.  Weights are spread over
/// `threads` workers; row order is (m, x) regardless.
IdentityReport tabulate(std::string theorem, nlohmann::json params, int m_max,
                        const std::vector<std::pair<std::string, CountSource>>& sources,
                        unsigned threads = 1);

/// Folds per-x tables into a single total per weight (x = {}).
CountTable collapse(const CountTable& table);

nlohmann::json to_json(const CountRow& row, const std::vector<std::string>& labels);
/// {theorem, params, m_max, status, labels, rows, counterexample?}
nlohmann::json to_json(const IdentityReport& report);
/// Header plus one line per row: x, m, one column per label, equal.
std::string to_tsv(const IdentityReport& report);

/// Worker count from PARTFORGE_THREADS (defaults to 1, capped at hardware
/// concurrency when that is known).
unsigned threads_from_env();

} // namespace partforge

#endif
