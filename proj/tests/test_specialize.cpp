#include <doctest.h>

#include "partforge/specialize.hpp"
#include "partforge/text.hpp"

#include <algorithm>
#include <set>

using namespace partforge;

namespace {

std::set<Partition> with_x(const ClassSpec& spec, int m, const std::vector<int>& x)
{
    std::set<Partition> out;
    for (const auto& p : enum_class(spec, m))
        if (class_x(p, spec) == x)
            out.insert(p);
    return out;
}

long long mod(long long a, long long b) { return ((a % b) + b) % b; }

// The congruence conditions with the halved residue term, stated for
// a = {1,2}, N = 3, R = 1, M = 2.
bool halved_form_ok(const Partition& p, const AndrewsSet& A)
{
    std::vector<std::size_t> uses;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (A.beta(p[i]) == 1 || A.beta(p[i]) == 3)
            uses.push_back(i);
    if (uses.empty())
        return true;
    auto tail = [&](std::size_t from, std::size_t to) {
        long long s = 0;
        for (std::size_t l = from; l < to; ++l)
            s += A.omega_A1(A.beta(p[l]));
        return s;
    };
    const std::size_t S = uses.back();
    const long long lead = A.beta(p[S]) == 1 ? 1 : 0;
    if (mod(p[S] - lead - 3 * tail(S, p.size()), 6) != 0)
        return false;
    for (std::size_t a = 0; a < uses.size(); ++a)
        for (std::size_t b = a + 1; b < uses.size(); ++b) {
            const auto i = uses[a];
            const auto j = uses[b];
            const long long want = (A.beta(p[i]) - A.beta(p[j])) / 2 + 3 * tail(i, j);
            if (mod(p[i] - p[j] - want, 6) != 0)
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("AndrewsSet")
{
    const AndrewsSet A({1, 2, 4}, 7);
    CHECK(A.primes() == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(A.alpha(Color{5}) == 5);
    CHECK(A.beta(14) == 7);
    CHECK(A.beta(15) == 1);
    CHECK(A.omega_A(7) == 3);
    CHECK(A.v_A(6) == 2);
    CHECK(A.z_A(6) == 4);
    CHECK(A.delta_A(3, 4) == 1);
    CHECK(A.omega_A1(3) == 1);
    CHECK(A.omega_A1(6) == 2);
    CHECK_THROWS(AndrewsSet({1, 1}, 3));
    CHECK_THROWS(AndrewsSet({1, 2}, 2));
    CHECK_THROWS(AndrewsSet({1, 2, 3}, 9));
    CHECK_THROWS(A.omega_A(8));
}

TEST_CASE("dilations are inverse to each other")
{
    const AndrewsSet A({1, 2}, 3);
    const MultiTuple t{{{4, 1}, {2}}};
    const auto d = dilate_pos(t, A);
    CHECK(d == DistinctPartition{10, 5, 1});
    CHECK(undilate_pos(d, A) == t);
    const AndrewsSet B({1, 2}, 5);
    const auto e = dilate_neg(t, B);
    CHECK(e == DistinctPartition{19, 8, 4});
    CHECK(undilate_neg(e, B) == t);
    CHECK_THROWS(undilate_pos({6}, A));
}

TEST_CASE("B-side dilation")
{
    const AndrewsSet A({1, 2}, 3);
    CHECK(dilate_pos_B(parse_partition("3_3,1_1"), A) == DistinctPartition{6, 1});
    CHECK(dilate_neg_B(parse_partition("3_3,1_1"), AndrewsSet({1, 2}, 5)) == DistinctPartition{12, 4});
}

TEST_CASE("residue-class examples for a = {1,2}, N = 3")
{
    const AndrewsSet A({1, 2}, 3);
    const ClassSpec d{ResidueClass::D, A, std::nullopt};
    const ClassSpec drm{ResidueClass::D_RM, A, std::nullopt, 1, 2};
    const ClassSpec e{ResidueClass::E, A, Permutation::identity(2)};
    const ClassSpec erm{ResidueClass::E_RM, A, std::nullopt, 1, 2};
    CHECK(with_x(d, 18, {1, 1}) == std::set<Partition>{{17, 1}, {14, 4}, {11, 7}, {10, 8}, {13, 5}, {16, 2}});
    CHECK(with_x(drm, 18, {1, 1}) == std::set<Partition>{{17, 1}, {11, 7}, {13, 5}});
    CHECK(with_x(e, 18, {1, 1}) == std::set<Partition>{{18}, {17, 1}, {16, 2}, {14, 4}, {13, 5}, {11, 7}});
    CHECK(with_x(erm, 18, {1, 1}) == std::set<Partition>{{17, 1}, {16, 2}, {11, 7}});
}

TEST_CASE("gap variant at m = 22: reference lists miss one member each")
{
    const AndrewsSet A({1, 2}, 3);
    const ClassSpec dm{ResidueClass::D_M, A, std::nullopt, 1, 2};
    const ClassSpec em{ResidueClass::E_M, A, std::nullopt, 1, 2};
    const std::set<Partition> d_listed{{16, 4, 2}, {16, 5, 1}, {13, 7, 2}, {13, 5, 4},
                                        {13, 8, 1}, {14, 7, 1}, {10, 8, 4}, {11, 10, 1}};
    const std::set<Partition> e_listed{{18, 4}, {19, 3}, {15, 7}, {16, 6}, {16, 5, 1}, {14, 7, 1}, {13, 7, 2}, {13, 8, 1}};
    auto d_all = with_x(dm, 22, {2, 1});
    auto e_all = with_x(em, 22, {2, 1});
    CHECK(d_all.size() == e_all.size());
    CHECK(std::includes(d_all.begin(), d_all.end(), d_listed.begin(), d_listed.end()));
    CHECK(std::includes(e_all.begin(), e_all.end(), e_listed.begin(), e_listed.end()));
    for (const auto& p : d_listed)
        d_all.erase(p);
    for (const auto& p : e_listed)
        e_all.erase(p);
    CHECK(d_all == std::set<Partition>{{19, 2, 1}});
    CHECK(e_all == std::set<Partition>{{21, 1}});
    // 19 and 1 are both 1 mod 3 and 18 apart; 2 is the lone part 2 mod 3
    CHECK_FALSE(check_class({19, 2, 1}, dm));
}

TEST_CASE("halved residue term disagrees with the general congruence")
{
    const AndrewsSet A({1, 2}, 3);
    const ClassSpec drm{ResidueClass::D_RM, A, std::nullopt, 1, 2};
    const ClassSpec erm{ResidueClass::E_RM, A, std::nullopt, 1, 2};
    const ClassSpec e{ResidueClass::E, A, Permutation::identity(2)};
    int first_gap = -1;
    for (int m = 0; m <= 40 && first_gap < 0; ++m) {
        std::uint64_t halved = 0;
        for (const auto& p : enum_class(e, m))
            if (halved_form_ok(p, A))
                ++halved;
        const auto general = enum_class(erm, m).size();
        CHECK(general == enum_class(drm, m).size());
        if (halved != general)
            first_gap = m;
    }
    CHECK(first_gap > 0);
}

TEST_CASE("class checks")
{
    const AndrewsSet A({1, 2}, 3);
    CHECK_FALSE(check_class({10, 5, 1}, {ResidueClass::D, A, std::nullopt}));
    CHECK(check_class({9, 1}, {ResidueClass::D, A, std::nullopt}));
    CHECK(check_class({5, 5}, {ResidueClass::D, A, std::nullopt}));
    CHECK(check_class({1, 1}, {ResidueClass::D_M, A, std::nullopt, 1, 2}));
    CHECK(check_class({4, 1}, {ResidueClass::D_M, A, std::nullopt, 1, 2}));
    CHECK_FALSE(check_class({7, 1}, {ResidueClass::D_M, A, std::nullopt, 1, 2}));
    CHECK(class_x({10, 5, 1}, {ResidueClass::D, A, std::nullopt}) == std::vector<int>{2, 1});
    CHECK(class_x({18}, {ResidueClass::E, A, Permutation::identity(2)}) == std::vector<int>{1, 1});
}

TEST_CASE("classical checks")
{
    CHECK_FALSE(check_schur({10, 7, 3}));
    CHECK(check_schur({9, 6}));
    CHECK_FALSE(check_schur({12, 6}));
    CHECK(check_schur({5, 3}));
    CHECK_FALSE(check_bressoud_H({5, 2}, 1, 2));
    CHECK(check_andrews_olsson_P2({3, 3, 2}, {1, 2}, 3) == std::nullopt);
    CHECK(check_andrews_olsson_P2({4}, {1, 2}, 3));
    CHECK(check_andrews_olsson_P2({5, 1}, {1, 2}, 3));
}

TEST_CASE("drop_color and the two-color specialization")
{
    const auto b = parse_partition("5_3,3_2,1_1");
    CHECK(format_partition(drop_color(b)) == "5_1,3,1_1");
    CHECK(bressoud_dilate(drop_color(b), 1, 2) == Partition{9, 6, 1});
}

TEST_CASE("tables")
{
    const auto t3 = mod3_table();
    const AndrewsSet A3({1, 2}, 3);
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
            CHECK(effective_bound(t3, j, k) == computed_bound(A3, Permutation({2, 1}), j, k));
    const auto t7 = mod7_table();
    const AndrewsSet A7({1, 2, 4}, 7);
    for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k)
            CHECK(effective_bound(t7, j, k) == computed_bound(A7, Permutation({3, 2, 1}), j, k));
    CHECK(t3.bound(2, 1) == 7);
    CHECK(effective_bound(t3, 1, 1) == 3);
    CHECK(effective_bound(t3, 2, 3) == 5);
    CHECK_FALSE(check_table({8, 1}, t3));
    CHECK(check_table({5, 1}, t3));
}

TEST_CASE("key inequality")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i)
        CHECK_FALSE(key_inequality_check(random_andrews_set(rng, 5)));
    CHECK_FALSE(key_inequality_check(AndrewsSet({1, 2, 4}, 7)));
}

TEST_CASE("verifiers pass at small weights")
{
    CHECK(verify_schur(30).passed());
    CHECK(verify_bressoud(1, 2, 20).passed());
    CHECK(verify_bressoud(5, 3, 20).passed());
    CHECK(verify_andrews_olsson({1, 3}, 4, 20).passed());
    const AndrewsSet A({1, 2}, 3);
    CHECK(verify_dilated_sigma(A, Permutation({2, 1}), 18).passed());
    CHECK(verify_dilated_negative(AndrewsSet({1, 2}, 4), Permutation::identity(2), 18).passed());
    CHECK(verify_dilated_congruence(A, 2, 3, 18).passed());
    CHECK(verify_dilated_gap(A, 3, 18).passed());
    CHECK(verify_andrews_distinct(AndrewsSet({1, 3}, 5), 18).passed());
    CHECK(verify_andrews_negative(AndrewsSet({1, 3}, 5), 18).passed());
    CHECK(verify_table_mod3(20).passed());
    CHECK(verify_key_inequality(20, 4, 3).passed());
}
