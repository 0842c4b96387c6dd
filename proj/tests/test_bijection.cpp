#include <doctest.h>

#include "partforge/bijection.hpp"
#include "partforge/enumerate.hpp"
#include "partforge/text.hpp"

#include <random>

using namespace partforge;

namespace {

ColoredSequence P(const char* s) { return parse_partition(s); }

} // namespace

TEST_CASE("n=2 example")
{
    const auto t = parse_tuple("8,3,2,1|10,5,3,2");
    std::vector<StepTrace> traces;
    CHECK(format_partition(forward(t, traces)) == "12_1,9_2,6_3,4_3,2_2,1_1");
    REQUIRE(traces.size() == 1);
    CHECK(render_trace(traces[0], TraceMode::steps)
          == std::vector<std::string>{"((10_2,5_2),(10_1,5_3,3_3,1_1))", "((5_2,1_2),(7_1,3_3,2_3,1_1))",
                                      "(ε,(7_1,5_2,3_3,2_3,1_2,1_1))", "(12_1,9_2,6_3,4_3,2_2,1_1)"});
    CHECK(inverse(P("12_1,9_2,6_3,4_3,2_2,1_1"), 2) == t);
}

TEST_CASE("single step")
{
    const auto r = ag_step(P("12_1,9_2,6_3,4_3,2_2,1_1"), {17, 11, 8, 6, 3, 1}, 3);
    CHECK(format_partition(r.partition) == "18_5,16_4,13_2,10_5,8_6,6_5,4_2,3_2,2_5");
    const auto back = ag_step_inverse(r.partition, 3);
    CHECK(back.lambda == P("12_1,9_2,6_3,4_3,2_2,1_1"));
    CHECK(back.tau == DistinctPartition{17, 11, 8, 6, 3, 1});
    CHECK(format_tuple(inverse(r.partition, 3)) == "8,3,2,1|10,5,3,2|17,11,8,6,3,1");
}

TEST_CASE("step 1 and step 4 snapshots conserve weight and x")
{
    const auto t = parse_tuple("7,5,2|6,1|9,4,3,1");
    std::vector<StepTrace> traces;
    const auto b = forward(t, traces);
    REQUIRE(traces.size() == 2);
    const auto& tr = traces.back();
    const int total = weight(b);
    for (const auto& s : tr.snapshots) {
        if (s.stage != Stage::step1 && s.stage != Stage::step4)
            continue;
        CHECK(weight(s.working) + weight(s.tau) == total);
        auto x = bit_counts(s.working, 3);
        x[2] += static_cast<int>(s.tau.size());
        CHECK(x == t.x_vector());
    }
    CHECK(tr.snapshots.back().stage == Stage::step4);
    CHECK(tr.snapshots.back().working == b);
}

TEST_CASE("n=1 and empty input")
{
    CHECK(format_partition(forward(parse_tuple("5,2"))) == "5_1,2_1");
    CHECK(forward(parse_tuple("||")).empty());
    CHECK(inverse({}, 3) == parse_tuple("||"));
    CHECK(format_partition(forward(parse_tuple("|1"))) == "1_2");
}

TEST_CASE("inverse rejects partitions outside B")
{
    CHECK_THROWS_AS(inverse(P("3_3,2_1"), 2), RejectedInput);
    CHECK_THROWS_AS(inverse(P("1_3"), 2), RejectedInput);
    CHECK_THROWS_AS(inverse(P("3_4"), 2), RejectedInput);
    try {
        inverse(P("2_1,1_2"), 2);
        FAIL("expected RejectedInput");
    } catch (const RejectedInput& e) {
        CHECK(e.violation.index == 1);
    }
}

TEST_CASE("exhaustive round trip, small")
{
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 10; ++m)
            for (const auto& x : feasible_x_vectors(n, m)) {
                const CountQuery q{n, x, m, Variant::a()};
                for_each_tuple(q, [&](const MultiTuple& t) {
                    const auto b = forward(t);
                    REQUIRE_FALSE(check_B(b, n));
                    CHECK(bit_counts(b, n) == x);
                    CHECK(weight(b) == m);
                    CHECK(inverse(b, n) == t);
                });
            }
}

TEST_CASE("apply_sigma maps B onto B_sigma")
{
    const Permutation s({3, 1, 2});
    for (int m = 0; m <= 10; ++m)
        for_each_partition_any_x(3, m, Variant::b(), [&](const ColoredSequence& b) {
            CHECK_FALSE(check_B(apply_sigma(b, s), 3, s));
        });
}

TEST_CASE("staircase")
{
    const auto s = P("7_1,3_3,2_3,1_1");
    CHECK(format_partition(remove_staircase(s)) == "4_1,1_3,1_3,1_1");
    CHECK(add_staircase(remove_staircase(s)) == s);
}

TEST_CASE("full trace, n=3 step")
{
    const auto r = ag_step(P("12_1,9_2,6_3,4_3,2_2,1_1"), {17, 11, 8, 6, 3, 1}, 3);
    const auto lines = render_trace(r.trace, TraceMode::full);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "((17_4,11_4,8_4),(15_5,11_2,8_7,5_3,3_2,2_5))");
    CHECK(lines[4] == "((2_4),(10_5,9_4,7_2,5_5,4_6,3_3,2_2,2_5))");
    CHECK(lines[7] == "(18_5,16_4,13_2,10_5,8_6,6_5,4_2,3_2,2_5)");
}
