#include <doctest.h>

#include "partforge/enumerate.hpp"
#include "partforge/qseries.hpp"

#include <numeric>

using namespace partforge;

namespace {

std::uint64_t total(const CountTable& t)
{
    std::uint64_t s = 0;
    for (const auto& [x, c] : t)
        s += c;
    return s;
}

// Partitions into distinct parts drawn from `allowed`, by weight.
std::vector<std::uint64_t> distinct_from(const std::function<bool(int)>& allowed, int max_m)
{
    std::vector<std::uint64_t> d(static_cast<std::size_t>(max_m) + 1, 0);
    d[0] = 1;
    for (int p = 1; p <= max_m; ++p)
        if (allowed(p))
            for (int w = max_m; w >= p; --w)
                d[static_cast<std::size_t>(w)] += d[static_cast<std::size_t>(w - p)];
    return d;
}

} // namespace

TEST_CASE("one variable: distinct partitions")
{
    const auto s = product_plain(1, 10);
    const std::vector<std::uint64_t> q{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
    for (int m = 0; m <= 10; ++m)
        CHECK(total(s.at(m)) == q[static_cast<std::size_t>(m)]);
}

TEST_CASE("one variable, gap 2: parts 1 or 4 mod 5")
{
    const auto s = product_gap(1, 2, 30);
    std::vector<std::uint64_t> p(31, 0);
    p[0] = 1;
    for (int part = 1; part <= 30; ++part)
        if (part % 5 == 1 || part % 5 == 4)
            for (int w = part; w <= 30; ++w)
                p[static_cast<std::size_t>(w)] += p[static_cast<std::size_t>(w - part)];
    for (int m = 0; m <= 30; ++m)
        CHECK(total(s.at(m)) == p[static_cast<std::size_t>(m)]);
}

TEST_CASE("coefficients match the tuple enumerators")
{
    for (int n = 1; n <= 3; ++n) {
        const auto plain = product_plain(n, 14);
        const auto rm = product_RM(n, 2, 3, 14);
        const auto gap = product_gap(n, 3, 14);
        for (int m = 0; m <= 14; ++m) {
            CHECK(plain.at(m) == counts_by_x(Variant::a(), n, m));
            CHECK(rm.at(m) == counts_by_x(Variant::a_rm(2, 3), n, m));
            CHECK(gap.at(m) == counts_by_x(Variant::a_m(3), n, m));
        }
    }
}

TEST_CASE("coeff and bounds")
{
    const auto s = product_plain(2, 6);
    CHECK(s.coeff({1, 1}, 3) == 2);
    CHECK(s.coeff({0, 0}, 0) == 1);
    CHECK(s.coeff({5, 0}, 6) == 0);
    CHECK_THROWS(s.coeff({1, 1}, 7));
    CHECK_THROWS(s.coeff({1}, 3));
}

TEST_CASE("dilations")
{
    const auto s = product_plain(2, 40);
    const auto pos = substitute_dilation(s, {1, 2}, 3, DilationMode::pos);
    const auto want = distinct_from([](int p) { return p % 3 != 0; }, 40);
    for (int m = 0; m <= 40; ++m)
        CHECK(pos.total(m) == want[static_cast<std::size_t>(m)]);
    // x tracks residues: parts 1 mod 3 count in x_1
    CHECK(pos.coeff({1, 1}, 18) == 6);

    const auto neg = substitute_dilation(s, {1, 2}, 5, DilationMode::neg);
    const auto want_neg = distinct_from([](int p) { return p % 5 == 4 || p % 5 == 3; }, 40);
    for (int m = 0; m <= 40; ++m)
        CHECK(neg.total(m) == want_neg[static_cast<std::size_t>(m)]);

    CHECK_THROWS(substitute_dilation(s, {1, 3}, 3, DilationMode::neg));
}
