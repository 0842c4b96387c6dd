#include <doctest.h>

#include "partforge/text.hpp"

using namespace partforge;

TEST_CASE("parse partitions")
{
    const auto p = parse_partition("10_7,6_5,4_1,1_2");
    REQUIRE(p.size() == 4);
    CHECK(p[0] == ColoredPart{10, Color{7}});
    CHECK(p[3] == ColoredPart{1, Color{2}});

    const auto q = parse_partition("4_2,3,3,3_1");
    REQUIRE(q.size() == 4);
    CHECK_FALSE(q[1].color.is_colored());
    CHECK(q[3].color == Color{1});

    CHECK(parse_partition("").empty());
    CHECK(parse_partition("ε").empty());
    CHECK(parse_partition(" 3_1 , 1_1 ").size() == 2);
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_partition("3_"), ParseError);
    CHECK_THROWS_AS(parse_partition("a"), ParseError);
    CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
    CHECK_THROWS_AS(parse_partition("0_1"), ParseError);
    CHECK_THROWS_AS(parse_partition("3_4", 3u), ParseError);
    CHECK_THROWS_AS(parse_tuple("1,2|3"), ParseError);
    CHECK_THROWS_AS(parse_tuple("3_1"), ParseError);
    CHECK_THROWS_AS(parse_int_list("1,x"), ParseError);
}

TEST_CASE("tuples")
{
    const auto t = parse_tuple("6,1||1|1");
    REQUIRE(t.n() == 4);
    CHECK(t.mus[0] == DistinctPartition{6, 1});
    CHECK(t.mus[1].empty());
    CHECK(format_tuple(t) == "6,1||1|1");
    CHECK(parse_tuple("5|").n() == 2);
    CHECK(parse_tuple("").n() == 1);
}

TEST_CASE("round trips")
{
    for (const char* s : {"10_7,6_5,4_1,1_2", "4_2,3,3,3_1,2_3,2_1,1,1_3,1_2,1_1", "", "5_1"})
        CHECK(format_partition(parse_partition(s)) == s);
    CHECK(parenthesized({}) == "ε");
    CHECK(parenthesized(parse_partition("7_1,3_3")) == "(7_1,3_3)");
    CHECK(format_int_list({1, 2, 3}) == "1,2,3");
    CHECK(parse_int_list("3, 2,1") == std::vector<int>{3, 2, 1});
}

TEST_CASE("json")
{
    const auto p = parse_partition("10_7,6_5,4_1,1_2");
    CHECK(partition_from_json(to_json(p)) == p);
    const auto j = to_json(parse_tuple("2,1|3"));
    CHECK(j["mus"].size() == 2);
    CHECK(j["mus"][0] == nlohmann::json::array({2, 1}));
}
