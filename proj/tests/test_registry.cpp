#include <doctest.h>

#include "partforge/registry.hpp"

#include <set>

using namespace partforge;

TEST_CASE("every entry has a unique name and runs with its defaults")
{
    std::set<std::string> names;
    for (const auto& e : theorem_registry()) {
        CAPTURE(e.name);
        CHECK(names.insert(e.name).second);
        const auto rep = run_theorem(e, {}, std::min(e.default_m_max, 10), 1);
        CHECK(rep.passed());
        CHECK(rep.m_max == std::min(e.default_m_max, 10));
    }
    CHECK(names.size() == 16);
}

TEST_CASE("lookup and parameters")
{
    CHECK(find_theorem("nosuch") == nullptr);
    const auto* e = find_theorem("bressoud");
    REQUIRE(e);
    CHECK_THROWS_AS(run_theorem(*e, {{"N", "3"}}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_theorem(*e, {{"k", "x"}}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_theorem(*e, {}, -1, 1), std::invalid_argument);
    const auto rep = run_theorem(*e, {{"r", "3"}, {"k", "2"}}, 12, 1);
    CHECK(rep.passed());
    CHECK(rep.params["r"] == 3);
}

TEST_CASE("sigma parameter forms")
{
    const auto* e = find_theorem("colored-difference");
    REQUIRE(e);
    CHECK(run_theorem(*e, {{"n", "3"}, {"sigma", "2,3,1"}}, 8, 1).passed());
    CHECK(run_theorem(*e, {{"n", "3"}, {"sigma", "rev"}}, 8, 1).passed());
    CHECK(run_theorem(*e, {{"n", "3"}, {"sigma", "id"}}, 8, 1).passed());
    CHECK_THROWS(run_theorem(*e, {{"n", "3"}, {"sigma", "2,1"}}, 8, 1));
    CHECK_THROWS(run_theorem(*e, {{"n", "9"}}, 8, 1));
}

TEST_CASE("colored identities, threaded")
{
    const auto r = verify_colored_difference(3, 12, {Permutation({3, 1, 2})}, 2);
    CHECK(r.passed());
    CHECK(r.labels == std::vector<std::string>{"A", "B", "B[3,1,2]", "C", "series", "forward"});
    CHECK(verify_colored_congruence(2, 1, 2, 14, 2).passed());
    CHECK(verify_colored_gap(2, 3, 14, 2).passed());
    CHECK(verify_colored_conjugate(3, 12, 2).passed());
}

TEST_CASE("report serialization")
{
    const auto r = verify_colored_gap(1, 2, 6);
    const auto j = to_json(r);
    CHECK(j["status"] == "pass");
    CHECK(j["rows"].size() == r.rows.size());
    const auto tsv = to_tsv(r);
    CHECK(tsv.rfind("x\tm\t", 0) == 0);
}
