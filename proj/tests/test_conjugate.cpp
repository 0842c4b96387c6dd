#include <doctest.h>

#include "partforge/bijection.hpp"
#include "partforge/conjugate.hpp"
#include "partforge/enumerate.hpp"
#include "partforge/text.hpp"

#include <set>

using namespace partforge;

TEST_CASE("the worked conjugation")
{
    const auto b = parse_partition("10_7,6_5,4_1,1_2");
    const auto c = conjugate(b, 3);
    CHECK(format_partition(c) == "4_2,3,3,3_1,2_3,2_1,1,1_3,1_2,1_1");
    CHECK(conjugate_inverse(c, 3) == b);
}

TEST_CASE("diagram")
{
    const auto d = to_diagram(parse_partition("3_5,1_2"));
    REQUIRE(d.rows.size() == 2);
    CHECK(d.rows[0] == std::vector<int>{0, 3, 1});
    CHECK(d.rows[1] == std::vector<int>{2});
    CHECK(d.columns() == 3);
    CHECK(render_diagram(d) == "[]  [3] [1]\n[2]\n");
}

TEST_CASE("rejections")
{
    CHECK_THROWS_AS(conjugate(parse_partition("3_3,2_1"), 2), RejectedInput);
    CHECK_THROWS_AS(conjugate_inverse(parse_partition("3_1,1_1"), 2), RejectedInput);
}

TEST_CASE("bijection B <-> C, n <= 3, m <= 12")
{
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 12; ++m) {
            std::set<std::string> images;
            std::uint64_t b_count = 0;
            for_each_partition_any_x(n, m, Variant::b(), [&](const ColoredSequence& b) {
                ++b_count;
                const auto c = conjugate(b, n);
                CHECK_FALSE(check_C(c, n));
                CHECK(weight(c) == m);
                CHECK(ground_counts(c, n) == bit_counts(b, n));
                CHECK(conjugate_inverse(c, n) == b);
                images.insert(format_partition(c));
            });
            std::uint64_t c_count = 0;
            for_each_partition_any_x(n, m, Variant::c(), [&](const ColoredSequence& c) {
                ++c_count;
                CHECK(images.count(format_partition(c)) == 1);
            });
            CHECK(images.size() == b_count);
            CHECK(c_count == b_count);
        }
}
