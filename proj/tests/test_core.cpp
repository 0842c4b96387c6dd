#include <doctest.h>

#include "partforge/core.hpp"
#include "partforge/text.hpp"

using namespace partforge;

namespace {

ColoredSequence P(const char* s) { return parse_partition(s); }

} // namespace

TEST_CASE("omega and friends")
{
    CHECK(omega(Color{13}) == 3);
    CHECK(omega(Color{1}) == 1);
    CHECK(omega(Color{7}) == 3);
    CHECK(omega_e(Color{1}) == 0);
    CHECK(omega_e(Color{2}) == 1);
    CHECK(omega_e(Color{7}) == 2);
    CHECK(lowest_power(Color{12}) == 4);
    CHECK(highest_power(Color{12}) == 8);
    for (std::uint32_t c = 1; c < 64; ++c)
        CHECK(omega_e(Color{c}) + (c & 1u) == static_cast<std::uint32_t>(omega(Color{c})));
    CHECK_THROWS(omega(Color::uncolored()));
}

TEST_CASE("delta")
{
    CHECK(delta(Color{1}, Color{2}) == 1);
    CHECK(delta(Color{5}, Color{2}) == 0);
    CHECK(delta(Color{3}, Color{4}) == 1);
    CHECK(delta(Color{4}, Color{3}) == 0);
    for (std::uint32_t c = 1; c < 32; ++c)
        for (std::uint32_t d = 1; d < 32; ++d)
            if (delta(Color{c}, Color{d}))
                CHECK(c < lowest_power(Color{d}));
}

TEST_CASE("permutations act on bits")
{
    const Permutation swap({2, 1});
    CHECK(swap.apply(Color{1}) == Color{2});
    CHECK(swap.apply(Color{3}) == Color{3});
    CHECK(Permutation::reversal(3).apply(Color{5}) == Color{5});
    CHECK(Permutation::reversal(3).apply(Color{1}) == Color{4});
    const Permutation s({2, 3, 1});
    for (std::uint32_t c = 1; c < 8; ++c) {
        CHECK(omega(s.apply(Color{c})) == omega(Color{c}));
        CHECK(s.inverse().apply(s.apply(Color{c})) == Color{c});
    }
    CHECK(Permutation::identity(4).is_identity());
    CHECK_FALSE(s.is_identity());
    CHECK_THROWS(Permutation({1, 1}));
    CHECK_THROWS(Permutation({0, 1}));
}

TEST_CASE("check_B")
{
    CHECK_FALSE(check_B(P("8_13,1_1"), 4));
    CHECK(bit_counts(P("8_13,1_1"), 4) == std::vector<int>{2, 0, 1, 1});
    CHECK_FALSE(check_B(P("5_1,4_13"), 4));
    CHECK_FALSE(check_B(P("3_1,2_1"), 1));
    const auto bad = check_B(P("3_1,3_1"), 1);
    REQUIRE(bad);
    CHECK(bad->index == 1);
    // smallest part below omega
    CHECK(check_B(P("1_3"), 2));
    CHECK_FALSE(check_B(P("2_3"), 2));
    CHECK(check_B(P("3_3,2_1"), 2));
    CHECK_FALSE(check_B(P("3_3,1_1"), 2));
    // color out of range
    CHECK(check_B(P("5_4"), 2));
    // 3_2 over 1_1: gap 2 >= omega(2) + delta(2,1) = 1
    CHECK_FALSE(check_B(P("3_2,1_1"), 2));
    // 2_1 over 1_2: gap 1 < omega(1) + delta(1,2) = 2
    CHECK(check_B(P("2_1,1_2"), 2));
    // reversed sigma flips the lower-interval test
    CHECK_FALSE(check_B(P("2_1,1_2"), 2, Permutation::reversal(2)));
}

TEST_CASE("check_B_RM")
{
    CHECK_FALSE(check_B_RM(P("8_1,5_1,2_1"), 1, 2, 3));
    CHECK(check_B_RM(P("7_1,5_1"), 1, 2, 3));
    // image of ((3,1), empty): both odd parts, R=1 M=2
    CHECK_FALSE(check_B_RM(P("3_1,1_1"), 2, 1, 2));
    CHECK(check_B_RM(P("4_1,1_1"), 2, 1, 2));
}

TEST_CASE("check_B_M")
{
    CHECK_FALSE(check_B_M(P("9_1,6_1,1_1"), 1, 3));
    CHECK(check_B_M(P("9_1,7_1"), 1, 3));
    CHECK_FALSE(check_B_M(P("6_3,3_1"), 2, 2));
    CHECK(check_B_M(P("5_3,3_1"), 2, 2));
}

TEST_CASE("check_C")
{
    const auto c = P("4_2,3,3,3_1,2_3,2_1,1,1_3,1_2,1_1");
    CHECK_FALSE(check_C(c, 3));
    CHECK(ground_counts(c, 3) == std::vector<int>{3, 2, 2});
    CHECK(weight(c) == 21);
    CHECK_FALSE(check_C(P("2_1,1_1"), 1));
    CHECK(check_C(P("3_1,1_1"), 1));
    CHECK(check_C(P("2_1,1"), 1));
    CHECK(check_C(P("2_1"), 1));
    CHECK(check_C(P("1_1,1_1"), 1));
    CHECK(check_C(P("2,1_1"), 1));
    CHECK_FALSE(check_C(P("1,1_1"), 1));
    CHECK_FALSE(check_C({}, 2));
}

TEST_CASE("weights and tuples")
{
    const MultiTuple t{{{6, 1}, {}, {1}, {1}}};
    CHECK(t.weight() == 9);
    CHECK(t.x_vector() == std::vector<int>{2, 0, 1, 1});
    CHECK(is_distinct_partition({5, 3, 1}));
    CHECK_FALSE(is_distinct_partition({3, 3}));
    CHECK_FALSE(is_distinct_partition({2, 0}));
}
