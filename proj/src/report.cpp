#include "partforge/report.hpp"

#include "partforge/text.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace partforge {

bool CountRow::equal() const
{
    return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
}

bool IdentityReport::passed() const
{
    return issues.empty() && std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.equal(); });
}

std::optional<CountRow> IdentityReport::counterexample() const
{
    for (const auto& r : rows)
        if (!r.equal())
            return r;
    return std::nullopt;
}

std::vector<CountRow> IdentityReport::rows_for(const std::vector<int>& x) const
{
    std::vector<CountRow> out;
    for (const auto& r : rows)
        if (r.x == x)
            out.push_back(r);
    return out;
}

std::optional<CountRow> IdentityReport::row(const std::vector<int>& x, int m) const
{
    for (const auto& r : rows)
        if (r.x == x && r.m == m)
            return r;
    return std::nullopt;
}

namespace {

std::vector<CountRow> rows_at(int m, const std::vector<std::pair<std::string, CountSource>>& sources)
{
    std::vector<CountTable> tables;
    tables.reserve(sources.size());
    std::set<std::vector<int>> keys;
    for (const auto& [label, source] : sources) {
        tables.push_back(source(m));
        for (const auto& [x, c] : tables.back())
            if (c != 0)
                keys.insert(x);
    }
    std::vector<CountRow> rows;
    for (const auto& x : keys) {
        CountRow row{x, m, {}};
        for (const auto& t : tables) {
            const auto it = t.find(x);
            row.counts.push_back(it == t.end() ? 0 : it->second);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

IdentityReport tabulate(std::string theorem, nlohmann::json params, int m_max,
                        const std::vector<std::pair<std::string, CountSource>>& sources,
                        unsigned threads)
{
    if (m_max < 0)
        throw std::invalid_argument("m_max must be >= 0");
    IdentityReport report;
    report.theorem = std::move(theorem);
    report.params = std::move(params);
    report.m_max = m_max;
    for (const auto& s : sources)
        report.labels.push_back(s.first);

    std::vector<std::vector<CountRow>> per_m(static_cast<std::size_t>(m_max) + 1);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m_max) + 1));
    if (threads == 1) {
        for (int m = 0; m <= m_max; ++m)
            per_m[static_cast<std::size_t>(m)] = rows_at(m, sources);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int m = static_cast<int>(w); m <= m_max; m += static_cast<int>(threads))
                        per_m[static_cast<std::size_t>(m)] = rows_at(m, sources);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool)
            t.join();
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    for (auto& rows : per_m)
        for (auto& r : rows)
            report.rows.push_back(std::move(r));
    return report;
}

CountTable collapse(const CountTable& table)
{
    std::uint64_t total = 0;
    for (const auto& [x, c] : table)
        total += c;
    CountTable out;
    if (total)
        out[{}] = total;
    return out;
}

nlohmann::json to_json(const CountRow& row, const std::vector<std::string>& labels)
{
    nlohmann::json j;
    j["x"] = row.x;
    j["m"] = row.m;
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t i = 0; i < row.counts.size() && i < labels.size(); ++i)
        counts[labels[i]] = row.counts[i];
    j["counts"] = std::move(counts);
    j["equal"] = row.equal();
    return j;
}

nlohmann::json to_json(const IdentityReport& report)
{
    nlohmann::json j;
    j["theorem"] = report.theorem;
    j["params"] = report.params;
    j["m_max"] = report.m_max;
    j["status"] = report.passed() ? "pass" : "fail";
    j["labels"] = report.labels;
    auto rows = nlohmann::json::array();
    for (const auto& r : report.rows)
        rows.push_back(to_json(r, report.labels));
    j["rows"] = std::move(rows);
    if (auto bad = report.counterexample())
        j["counterexample"] = to_json(*bad, report.labels);
    if (!report.issues.empty())
        j["issues"] = report.issues;
    return j;
}

std::string to_tsv(const IdentityReport& report)
{
    std::ostringstream out;
    out << "x\tm";
    for (const auto& l : report.labels)
        out << '\t' << l;
    out << "\tequal\n";
    for (const auto& r : report.rows) {
        out << format_int_list(r.x) << '\t' << r.m;
        for (auto c : r.counts)
            out << '\t' << c;
        out << '\t' << (r.equal() ? "yes" : "no") << '\n';
    }
    return out.str();
}

unsigned threads_from_env()
{
    const char* env = std::getenv("PARTFORGE_THREADS");
    if (!env || !*env)
        return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        return 1;
    unsigned t = static_cast<unsigned>(std::min(v, 256L));
    if (const unsigned hw = std::thread::hardware_concurrency(); hw > 0)
        t = std::min(t, hw);
    return t;
}

} // namespace partforge
