#include "partforge/specialize.hpp"

#include "partforge/bijection.hpp"
#include "partforge/conjugate.hpp"
#include "partforge/qseries.hpp"
#include "partforge/text.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace partforge {

namespace {

long long pmod(long long a, long long m)
{
    const long long r = a % m;
    return r < 0 ? r + m : r;
}

Violation violation(std::size_t index, std::string condition, std::string detail)
{
    return Violation{index, std::move(condition), std::move(detail)};
}

std::string pair_text(int a, int b)
{
    return std::to_string(a) + ", " + std::to_string(b);
}

CheckResult check_decreasing(const Partition& parts, bool strict)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            return violation(i + 1, "part", "part must be positive: " + std::to_string(parts[i]));
        if (i + 1 < parts.size() && (strict ? parts[i] <= parts[i + 1] : parts[i] < parts[i + 1]))
            return violation(i + 1, "order", pair_text(parts[i], parts[i + 1]) + " out of order");
    }
    return std::nullopt;
}

// Palette helper: at most one label per size.
using Labeler = std::function<std::optional<Color>(int size)>;

ChainRules labeled_rules(int n, Labeler label,
                         std::function<bool(const ColoredPart&, const ColoredPart&)> adjacent, int min_step,
                         std::function<bool(const ColoredPart&)> smallest = {})
{
    ChainRules rules;
    rules.n = n;
    rules.palette = [label = std::move(label)](int size, std::vector<Color>& out) {
        if (auto c = label(size))
            out.push_back(*c);
    };
    rules.usage = [](const ColoredPart& p) { return p.color.value(); };
    rules.adjacent_ok = std::move(adjacent);
    rules.smallest_ok = std::move(smallest);
    rules.min_step = min_step;
    return rules;
}

Partition sizes_of(const ColoredSequence& s)
{
    Partition out;
    out.reserve(s.size());
    for (const auto& p : s)
        out.push_back(p.size);
    return out;
}

// Counts of a plain (ungraded) class at weight m, keyed by x = {}.
CountTable plain_count(const ChainRules& rules, int m, const std::function<bool(const Partition&)>& keep = {})
{
    std::uint64_t c = 0;
    for_each_chain(rules, m, std::nullopt, [&](const ColoredSequence& s) {
        if (!keep || keep(sizes_of(s)))
            ++c;
    });
    CountTable t;
    if (c)
        t[{}] = c;
    return t;
}

bool uses_first(Color c)
{
    return c.is_odd();
}

} // namespace

// ---------------------------------------------------------------------------
// AndrewsSet

AndrewsSet::AndrewsSet(std::vector<int> a, int N) : a_(std::move(a)), N_(N)
{
    if (a_.empty() || a_.size() > 16)
        throw std::invalid_argument("need between 1 and 16 residues");
    long long sum = 0;
    for (std::size_t k = 0; k < a_.size(); ++k) {
        if (a_[k] < 1)
            throw std::invalid_argument("residues must be positive");
        if (a_[k] <= sum)
            throw std::invalid_argument("each residue must exceed the sum of the smaller ones");
        sum += a_[k];
    }
    if (N < sum)
        throw std::invalid_argument("N must be at least the sum of the residues");
    alpha_.assign(std::size_t{1} << a_.size(), 0);
    for (std::uint32_t c = 1; c < alpha_.size(); ++c)
        for (int r = 1; r <= n(); ++r)
            if (Color{c}.uses(r))
                alpha_[c] += a_[static_cast<std::size_t>(r - 1)];
    for (std::size_t c = 1; c + 1 < alpha_.size(); ++c)
        if (alpha_[c] >= alpha_[c + 1])
            throw std::logic_error("subset sums not increasing");
}

int AndrewsSet::alpha(Color c) const
{
    if (!c.is_colored() || c.value() >= alpha_.size())
        throw std::invalid_argument("color out of range for the set");
    return alpha_[c.value()];
}

std::vector<int> AndrewsSet::primes() const
{
    return {alpha_.begin() + 1, alpha_.end()};
}

std::optional<Color> AndrewsSet::color_of(long long x) const
{
    const auto it = std::lower_bound(alpha_.begin() + 1, alpha_.end(), x);
    if (it == alpha_.end() || *it != x)
        return std::nullopt;
    return Color{static_cast<std::uint32_t>(it - alpha_.begin())};
}

int AndrewsSet::beta(long long l) const
{
    return static_cast<int>(pmod(l - 1, N_)) + 1;
}

Color AndrewsSet::require_prime(long long x) const
{
    auto c = color_of(x);
    if (!c)
        throw std::invalid_argument(std::to_string(x) + " is not a subset sum");
    return *c;
}

int AndrewsSet::omega_A(int x) const
{
    return omega(require_prime(x));
}

int AndrewsSet::v_A(int x) const
{
    const auto c = require_prime(x);
    return a(std::countr_zero(c.value()) + 1);
}

int AndrewsSet::z_A(int x) const
{
    const auto c = require_prime(x);
    return a(std::bit_width(c.value()));
}

int AndrewsSet::delta_A(int x, int y) const
{
    return z_A(x) < v_A(y) ? 1 : 0;
}

int AndrewsSet::omega_A1(int x) const
{
    const auto c = require_prime(x);
    return omega(c) - (c.uses(1) ? 1 : 0);
}

AndrewsSet random_andrews_set(std::mt19937_64& rng, int n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("n_max must be >= 1");
    std::uniform_int_distribution<int> pick_n(1, n_max);
    std::uniform_int_distribution<int> slack(0, 3);
    std::uniform_int_distribution<int> extra(0, 5);
    const int n = pick_n(rng);
    std::vector<int> a;
    int sum = 0;
    for (int k = 0; k < n; ++k) {
        a.push_back(sum + 1 + slack(rng));
        sum += a.back();
    }
    return AndrewsSet(std::move(a), sum + extra(rng));
}

std::optional<std::pair<int, int>> key_inequality_check(const AndrewsSet& A)
{
    const auto xs = A.primes();
    const int N = A.N();
    for (int x : xs)
        for (int y : xs) {
            const int mid = N * A.delta_A(x, y) + x;
            if (!(N + A.v_A(y) > mid && mid >= A.v_A(y)))
                return std::pair{x, y};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// dilations

namespace {

DistinctPartition sorted_desc(DistinctPartition v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

void require_arity(const MultiTuple& t, const AndrewsSet& A)
{
    if (t.n() != A.n())
        throw std::invalid_argument("tuple arity differs from the residue count");
}

MultiTuple undilate(const DistinctPartition& parts, const AndrewsSet& A, bool neg)
{
    MultiTuple t;
    t.mus.resize(static_cast<std::size_t>(A.n()));
    for (int p : parts) {
        bool placed = false;
        for (int r = 1; r <= A.n() && !placed; ++r) {
            const long long shifted = neg ? p + A.a(r) : p - A.a(r);
            if (pmod(shifted, A.N()) != 0)
                continue;
            const long long k = neg ? shifted / A.N() : shifted / A.N() + 1;
            if (k < 1)
                continue;
            t.mus[static_cast<std::size_t>(r - 1)].push_back(static_cast<int>(k));
            placed = true;
        }
        if (!placed)
            throw std::invalid_argument("part " + std::to_string(p) + " is in no residue class");
    }
    for (auto& mu : t.mus) {
        std::sort(mu.begin(), mu.end(), std::greater<>());
        if (!is_distinct_partition(mu))
            throw std::invalid_argument("repeated part in a residue class");
    }
    return t;
}

} // namespace

DistinctPartition dilate_pos(const MultiTuple& t, const AndrewsSet& A)
{
    require_arity(t, A);
    DistinctPartition out;
    for (int j = 1; j <= t.n(); ++j)
        for (int k : t.mus[static_cast<std::size_t>(j - 1)])
            out.push_back(A.N() * (k - 1) + A.a(j));
    return sorted_desc(std::move(out));
}

DistinctPartition dilate_neg(const MultiTuple& t, const AndrewsSet& A)
{
    require_arity(t, A);
    DistinctPartition out;
    for (int j = 1; j <= t.n(); ++j)
        for (int k : t.mus[static_cast<std::size_t>(j - 1)])
            out.push_back(A.N() * k - A.a(j));
    return sorted_desc(std::move(out));
}

DistinctPartition dilate_pos_B(const ColoredSequence& b, const AndrewsSet& A)
{
    DistinctPartition out;
    for (const auto& p : b)
        out.push_back(A.N() * (p.size - omega(p.color)) + A.alpha(p.color));
    return sorted_desc(std::move(out));
}

DistinctPartition dilate_neg_B(const ColoredSequence& b, const AndrewsSet& A)
{
    DistinctPartition out;
    for (const auto& p : b)
        out.push_back(A.N() * p.size - A.alpha(p.color));
    return sorted_desc(std::move(out));
}

MultiTuple undilate_pos(const DistinctPartition& parts, const AndrewsSet& A)
{
    return undilate(parts, A, false);
}

MultiTuple undilate_neg(const DistinctPartition& parts, const AndrewsSet& A)
{
    return undilate(parts, A, true);
}

// ---------------------------------------------------------------------------
// residue classes

std::string ClassSpec::label() const
{
    std::string base;
    switch (kind) {
    case ResidueClass::D:
        base = "D";
        break;
    case ResidueClass::F:
        base = "F";
        break;
    case ResidueClass::E:
        base = "E";
        break;
    case ResidueClass::E_andrews:
        base = "E_v";
        break;
    case ResidueClass::G:
        base = "G";
        break;
    case ResidueClass::G_andrews:
        base = "G_v";
        break;
    case ResidueClass::D_RM:
        return "D_RM(" + std::to_string(R) + "," + std::to_string(M) + ")";
    case ResidueClass::D_M:
        return "D_M(" + std::to_string(M) + ")";
    case ResidueClass::E_RM:
        return "E_RM(" + std::to_string(R) + "," + std::to_string(M) + ")";
    case ResidueClass::E_M:
        return "E_M(" + std::to_string(M) + ")";
    }
    if ((kind == ResidueClass::E || kind == ResidueClass::G) && sigma && !sigma->is_identity())
        base += "[" + format_int_list(sigma->images()) + "]";
    return base;
}

namespace {

bool negative_kind(ResidueClass k)
{
    return k == ResidueClass::F || k == ResidueClass::G || k == ResidueClass::G_andrews;
}

bool single_kind(ResidueClass k)
{
    return k == ResidueClass::D || k == ResidueClass::F || k == ResidueClass::D_RM || k == ResidueClass::D_M;
}

// Color label of a part: a single ground color for D/F, a subset for E/G.
std::optional<Color> part_label(int p, const ClassSpec& s)
{
    const auto& A = s.A;
    if (single_kind(s.kind)) {
        const bool neg = negative_kind(s.kind);
        for (int r = 1; r <= A.n(); ++r)
            if (pmod(neg ? p + A.a(r) : p - A.a(r), A.N()) == 0)
                return Color{std::uint32_t{1} << (r - 1)};
        return std::nullopt;
    }
    return A.color_of(A.beta(negative_kind(s.kind) ? -static_cast<long long>(p) : p));
}

Permutation sigma_or_id(const ClassSpec& s)
{
    return s.sigma ? *s.sigma : Permutation::identity(s.A.n());
}

// Lower bound on larger - smaller for the E and G families.
long long local_bound(const ClassSpec& s, Color ci, Color cj)
{
    const auto& A = s.A;
    const int N = A.N();
    const int bi = A.alpha(ci);
    const int bj = A.alpha(cj);
    const auto sig = sigma_or_id(s);
    switch (s.kind) {
    case ResidueClass::E:
    case ResidueClass::E_RM:
    case ResidueClass::E_M:
        return static_cast<long long>(N) * omega(cj) + N * delta(sig.apply(ci), sig.apply(cj)) + bi - bj;
    case ResidueClass::E_andrews:
        return static_cast<long long>(N) * omega(cj) + A.v_A(bj) - bj;
    case ResidueClass::G:
        return static_cast<long long>(N) * omega(ci) + N * delta(sig.apply(ci), sig.apply(cj)) + bj - bi;
    case ResidueClass::G_andrews:
        return static_cast<long long>(N) * omega(ci) + A.v_A(bi) - bi;
    default:
        return 1;
    }
}

bool large_enough(const ClassSpec& s, int p, Color c)
{
    if (s.kind != ResidueClass::G && s.kind != ResidueClass::G_andrews)
        return true;
    return p >= s.A.N() * (omega(c) - 1);
}

bool locally_admissible(const ClassSpec& s, int p)
{
    if (s.kind != ResidueClass::D_RM)
        return true;
    const auto& A = s.A;
    if (pmod(p - A.a(1), A.N()) != 0)
        return true;
    const long long MN = static_cast<long long>(s.M) * A.N();
    return pmod(p - (static_cast<long long>(s.R - 1) * A.N() + A.a(1)), MN) == 0;
}

CheckResult check_nonlocal(const DistinctPartition& parts, const std::vector<Color>& colors, const ClassSpec& s)
{
    const auto& A = s.A;
    const int N = A.N();
    const long long MN = static_cast<long long>(s.M) * N;
    std::vector<std::size_t> firsts;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (uses_first(colors[i]))
            firsts.push_back(i);
    auto omega1_sum = [&](std::size_t from, std::size_t to) {
        long long t = 0;
        for (std::size_t l = from; l < to; ++l)
            t += A.omega_A1(A.alpha(colors[l]));
        return t;
    };
    if (s.kind == ResidueClass::D_M) {
        for (std::size_t k = 0; k + 1 < firsts.size(); ++k)
            if (parts[firsts[k]] - parts[firsts[k + 1]] < MN)
                return violation(firsts[k] + 1, "first-residue-gap",
                                 pair_text(parts[firsts[k]], parts[firsts[k + 1]]) + " closer than " + std::to_string(MN));
        return std::nullopt;
    }
    if (s.kind != ResidueClass::E_RM && s.kind != ResidueClass::E_M)
        return std::nullopt;
    for (std::size_t k = 0; k + 1 < firsts.size(); ++k) {
        const auto i = firsts[k];
        const auto j = firsts[k + 1];
        const int bi = A.alpha(colors[i]);
        const int bj = A.alpha(colors[j]);
        const long long rhs = static_cast<long long>(N) * (omega(colors[j]) - omega(colors[i])) + bi - bj
                              + N * omega1_sum(i, j);
        const long long lhs = parts[i] - parts[j];
        if (s.kind == ResidueClass::E_RM && pmod(lhs - rhs, MN) != 0)
            return violation(i + 1, "first-residue-congruence",
                             pair_text(parts[i], parts[j]) + " not congruent mod " + std::to_string(MN));
        if (s.kind == ResidueClass::E_M && lhs < MN + rhs)
            return violation(i + 1, "first-residue-gap",
                             pair_text(parts[i], parts[j]) + " below " + std::to_string(MN + rhs));
    }
    if (s.kind == ResidueClass::E_RM && !firsts.empty()) {
        const auto S = firsts.back();
        const int bS = A.alpha(colors[S]);
        const long long rhs = static_cast<long long>(N) * (s.R - omega(colors[S])) + bS
                              + N * omega1_sum(S, parts.size());
        if (pmod(parts[S] - rhs, MN) != 0)
            return violation(S + 1, "smallest-first-residue-congruence",
                             std::to_string(parts[S]) + " not congruent to " + std::to_string(pmod(rhs, MN)) + " mod "
                                 + std::to_string(MN));
    }
    return std::nullopt;
}

ChainRules class_rules(const ClassSpec& s)
{
    const ClassSpec spec = s;
    auto label = [spec](int p) -> std::optional<Color> {
        auto c = part_label(p, spec);
        if (!c || !large_enough(spec, p, *c) || !locally_admissible(spec, p))
            return std::nullopt;
        return c;
    };
    std::function<bool(const ColoredPart&, const ColoredPart&)> adjacent;
    if (!single_kind(s.kind))
        adjacent = [spec](const ColoredPart& larger, const ColoredPart& smaller) {
            return larger.size - smaller.size >= local_bound(spec, larger.color, smaller.color);
        };
    return labeled_rules(s.A.n(), label, adjacent, 1);
}

bool needs_filter(ResidueClass k)
{
    return k == ResidueClass::D_M || k == ResidueClass::E_RM || k == ResidueClass::E_M;
}

} // namespace

std::vector<int> class_x(const DistinctPartition& parts, const ClassSpec& spec)
{
    std::vector<int> x(static_cast<std::size_t>(spec.A.n()), 0);
    for (int p : parts) {
        const auto c = part_label(p, spec);
        if (!c)
            throw std::invalid_argument("part " + std::to_string(p) + " is outside the class residues");
        for (int r = 1; r <= spec.A.n(); ++r)
            if (c->uses(r))
                ++x[static_cast<std::size_t>(r - 1)];
    }
    return x;
}

CheckResult check_class(const DistinctPartition& parts, const ClassSpec& s)
{
    if (auto bad = check_decreasing(parts, true))
        return bad;
    std::vector<Color> colors;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto c = part_label(parts[i], s);
        if (!c)
            return violation(i + 1, "residue", std::to_string(parts[i]) + " has no admissible residue");
        if (!large_enough(s, parts[i], *c))
            return violation(i + 1, "part", std::to_string(parts[i]) + " too small for its residue");
        if (!locally_admissible(s, parts[i]))
            return violation(i + 1, "first-residue-congruence",
                             std::to_string(parts[i]) + " not in the restricted class");
        colors.push_back(*c);
    }
    if (!single_kind(s.kind)) {
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            const auto need = local_bound(s, colors[i], colors[i + 1]);
            if (parts[i] - parts[i + 1] < need)
                return violation(i + 1, "difference",
                                 pair_text(parts[i], parts[i + 1]) + " closer than " + std::to_string(need));
        }
    }
    return check_nonlocal(parts, colors, s);
}

void for_each_in_class(const ClassSpec& spec, int m, const std::function<void(const DistinctPartition&)>& visit)
{
    const auto rules = class_rules(spec);
    const bool filter = needs_filter(spec.kind);
    for_each_chain(rules, m, std::nullopt, [&](const ColoredSequence& s) {
        auto parts = sizes_of(s);
        if (filter && check_class(parts, spec))
            return;
        visit(parts);
    });
}

std::vector<DistinctPartition> enum_class(const ClassSpec& spec, int m)
{
    std::vector<DistinctPartition> out;
    for_each_in_class(spec, m, [&out](const DistinctPartition& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

CountTable class_counts_by_x(const ClassSpec& spec, int m)
{
    CountTable t;
    for_each_in_class(spec, m, [&](const DistinctPartition& p) { ++t[class_x(p, spec)]; });
    return t;
}

// ---------------------------------------------------------------------------
// classical classes

ColoredSequence drop_color(const ColoredSequence& b)
{
    ColoredSequence out;
    for (const auto& p : b) {
        if (p.color.value() < 1 || p.color.value() > 3)
            throw std::invalid_argument("drop_color needs colors in {1,2,3}");
        out.push_back({p.size, p.color.is_odd() ? Color{1} : Color::uncolored()});
    }
    return out;
}

Partition bressoud_dilate(const ColoredSequence& dropped, int r, int k)
{
    if (k < 1 || r < 1 || r >= 2 * k || r == k)
        throw std::invalid_argument("need 1 <= r < 2k and r != k");
    Partition out;
    for (const auto& p : dropped) {
        if (!p.color.is_colored())
            out.push_back(k * p.size);
        else if (r < k)
            out.push_back((p.size - 1) * k + r);
        else
            out.push_back(k * (p.size - 2) + r);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

CheckResult check_schur(const Partition& parts)
{
    if (auto bad = check_decreasing(parts, true))
        return bad;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const int gap = parts[i] - parts[i + 1];
        const bool both = parts[i] % 3 == 0 && parts[i + 1] % 3 == 0;
        if (gap < (both ? 6 : 3))
            return violation(i + 1, "difference", pair_text(parts[i], parts[i + 1]) + " too close");
    }
    return std::nullopt;
}

CheckResult check_bressoud_H(const Partition& parts, int r, int k)
{
    if (auto bad = check_decreasing(parts, false))
        return bad;
    const int rr = r % k;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int res = parts[i] % k;
        if (res != rr && res != 0)
            return violation(i + 1, "residue", std::to_string(parts[i]) + " is neither r nor 0 mod k");
        if (i + 1 < parts.size()) {
            const int gap = parts[i] - parts[i + 1];
            const bool both_r = res == rr && parts[i + 1] % k == rr;
            if (gap < (both_r ? 2 * k : k))
                return violation(i + 1, "difference", pair_text(parts[i], parts[i + 1]) + " too close");
        }
    }
    if (r > k && !parts.empty() && parts.back() < k)
        return violation(parts.size(), "smallest-part", "smallest part below k");
    return std::nullopt;
}

CheckResult check_andrews_olsson_P2(const Partition& parts, const std::vector<int>& a, int N)
{
    if (auto bad = check_decreasing(parts, false))
        return bad;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int p = parts[i];
        const bool mult = p % N == 0;
        if (!mult && std::none_of(a.begin(), a.end(), [&](int v) { return pmod(p - v, N) == 0; }))
            return violation(i + 1, "residue", std::to_string(p) + " has no admissible residue");
        if (i + 1 < parts.size()) {
            const int q = parts[i + 1];
            const int gap = p - q;
            const bool strict = mult || q % N == 0;
            if (gap == 0 && !mult)
                return violation(i + 1, "repeat", std::to_string(p) + " repeats but is not a multiple of N");
            if (strict ? gap >= N : gap > N)
                return violation(i + 1, "difference", pair_text(p, q) + " too far apart");
        }
    }
    if (!parts.empty() && parts.back() >= N)
        return violation(parts.size(), "smallest-part", "smallest part not below N");
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// difference tables

DifferenceTable mod3_table()
{
    return {3, [](int j, int k) {
                if (k == 1)
                    return j == 2 ? 7 : 3;
                if (k == 2)
                    return 2;
                return 4;
            }};
}

DifferenceTable mod7_table()
{
    return {7, [](int j, int k) {
                switch (k) {
                case 1:
                    return j % 2 == 1 ? 7 : 13;
                case 2:
                    return j == 4 ? 16 : 6;
                case 3:
                    return j == 4 ? 22 : 12;
                case 4:
                    return 4;
                case 5:
                    return 10;
                case 6:
                    return 9;
                default:
                    return 15;
                }
            }};
}

int effective_bound(const DifferenceTable& t, int j, int k)
{
    int d = t.bound(j, k);
    while (pmod(d - (j - k), t.N) != 0)
        ++d;
    return d;
}

int computed_bound(const AndrewsSet& A, const Permutation& sigma, int j, int k)
{
    const auto cj = A.color_of(j);
    const auto ck = A.color_of(k);
    if (!cj || !ck)
        throw std::invalid_argument("residue is not a subset sum");
    return A.N() * omega(*ck) + A.N() * delta(sigma.apply(*cj), sigma.apply(*ck)) + j - k;
}

CheckResult check_table(const Partition& parts, const DifferenceTable& t)
{
    if (auto bad = check_decreasing(parts, true))
        return bad;
    auto res = [&](int p) { return static_cast<int>(pmod(p - 1, t.N)) + 1; };
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const int need = t.bound(res(parts[i]), res(parts[i + 1]));
        if (parts[i] - parts[i + 1] < need)
            return violation(i + 1, "difference", pair_text(parts[i], parts[i + 1]) + " closer than " + std::to_string(need));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// verifiers

namespace {

using Sources = std::vector<std::pair<std::string, CountSource>>;

nlohmann::json set_params(const AndrewsSet& A)
{
    return {{"a", A.values()}, {"N", A.N()}};
}

CountSource class_source(const ClassSpec& spec)
{
    return [spec](int m) { return class_counts_by_x(spec, m); };
}

CountSource collapsed(CountSource s)
{
    return [s = std::move(s)](int m) { return collapse(s(m)); };
}

CountSource dilated_source(std::shared_ptr<const DilatedSeries> d)
{
    return [d = std::move(d)](int m) { return d->at(m); };
}

// Residue-class partitions of weight m pushed through the colored bijection
// and dilated back; each image is counted by its x when it lands in `target`.
CountSource bijection_source(ClassSpec from, ClassSpec target, bool neg)
{
    return [from, target, neg](int m) {
        CountTable t;
        const auto sigma = target.sigma ? *target.sigma : Permutation::identity(target.A.n());
        const auto inv = sigma.inverse();
        for_each_in_class(from, m, [&](const DistinctPartition& parts) {
            const auto tuple = neg ? undilate_neg(parts, from.A) : undilate_pos(parts, from.A);
            // Reorder so that after recoloring by sigma^-1 the x-vector is unchanged.
            MultiTuple perm;
            perm.mus.resize(tuple.mus.size());
            for (int r = 1; r <= tuple.n(); ++r)
                perm.mus[static_cast<std::size_t>(r - 1)] = tuple.mus[static_cast<std::size_t>(inv(r) - 1)];
            const auto b = apply_sigma(forward(perm), inv);
            const auto image = neg ? dilate_neg_B(b, target.A) : dilate_pos_B(b, target.A);
            if (!check_class(image, target) && weight(image) == m)
                ++t[class_x(image, target)];
        });
        return t;
    };
}

IdentityReport run(std::string name, nlohmann::json params, int m_max, const Sources& sources, unsigned threads)
{
    return tabulate(std::move(name), std::move(params), m_max, sources, threads);
}

} // namespace

IdentityReport verify_schur(int m_max, unsigned threads)
{
    const AndrewsSet A({1, 2}, 3);
    ChainRules schur = labeled_rules(1, [](int) { return std::optional<Color>{Color{1}}; },
                                     [](const ColoredPart& l, const ColoredPart& s) {
                                         const bool both = l.size % 3 == 0 && s.size % 3 == 0;
                                         return l.size - s.size >= (both ? 6 : 3);
                                     },
                                     3);
    schur.usage = [](const ColoredPart&) { return std::uint32_t{0}; };
    ChainRules not3 = labeled_rules(1, [](int p) { return p % 3 ? std::optional<Color>{Color{1}} : std::nullopt; }, {}, 1);
    not3.usage = schur.usage;
    Sources src{
        {"distinct-not-div-3", [not3](int m) { return plain_count(not3, m); }},
        {"gap-3-mult-6", [schur](int m) { return plain_count(schur, m); }},
        {"E", collapsed(class_source({ResidueClass::E, A, std::nullopt}))},
    };
    return run("schur", {{"m_max", m_max}}, m_max, src, threads);
}

IdentityReport verify_bressoud(int r, int k, int m_max, unsigned threads)
{
    if (k < 1 || r < 1 || r >= 2 * k || r == k)
        throw std::invalid_argument("need 1 <= r < 2k and r != k");
    auto g_rules = labeled_rules(1,
                                 [r, k](int p) {
                                     const int res = p % (2 * k);
                                     return res == r || res == k || res == 0 ? std::optional<Color>{Color{1}} : std::nullopt;
                                 },
                                 {}, 1);
    g_rules.usage = [](const ColoredPart&) { return std::uint32_t{0}; };
    const int rr = r % k;
    auto h_rules = labeled_rules(1,
                                 [rr, k](int p) {
                                     const int res = p % k;
                                     return res == rr || res == 0 ? std::optional<Color>{Color{1}} : std::nullopt;
                                 },
                                 [rr, k](const ColoredPart& l, const ColoredPart& s) {
                                     const bool both = l.size % k == rr && s.size % k == rr;
                                     return l.size - s.size >= (both ? 2 * k : k);
                                 },
                                 k, [r, k](const ColoredPart& s) { return r < k || s.size >= k; });
    h_rules.usage = g_rules.usage;

    // Drop-color route: every two-color partition of weight w maps to weight >= w.
    const int R = r < k ? 1 : 2;
    auto images = std::make_shared<std::vector<std::set<Partition>>>(static_cast<std::size_t>(m_max) + 1);
    auto stray = std::make_shared<std::vector<std::string>>();
    for (int w = 0; w <= m_max; ++w) {
        for_each_partition_any_x(2, w, Variant::b_rm(R, 2), [&](const ColoredSequence& b) {
            const auto image = bressoud_dilate(drop_color(b), r, k);
            const int W = weight(image);
            if (W > m_max)
                return;
            if (check_bressoud_H(image, r, k)) {
                if (stray->size() < 5)
                    stray->push_back("image of " + format_partition(b) + " is not in H");
                return;
            }
            if (!(*images)[static_cast<std::size_t>(W)].insert(image).second && stray->size() < 5)
                stray->push_back("two partitions map to the same image at weight " + std::to_string(W));
        });
    }
    Sources src{
        {"G", [g_rules](int m) { return plain_count(g_rules, m); }},
        {"H", [h_rules](int m) { return plain_count(h_rules, m); }},
        {"B_RM-dropped",
         [images](int m) {
             CountTable t;
             if (const auto c = (*images)[static_cast<std::size_t>(m)].size())
                 t[{}] = c;
             return t;
         }},
    };
    auto rep = run("bressoud", {{"r", r}, {"k", k}, {"m_max", m_max}}, m_max, src, threads);
    rep.issues = *stray;
    return rep;
}

IdentityReport verify_andrews_olsson(const std::vector<int>& a, int N, int m_max, unsigned threads)
{
    if (a.empty() || N < 2)
        throw std::invalid_argument("need residues and N >= 2");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 1 || a[i] >= N || (i && a[i] <= a[i - 1]))
            throw std::invalid_argument("residues must increase within [1, N)");
    const int n = static_cast<int>(a.size());
    auto p1 = labeled_rules(1,
                            [a, N](int p) {
                                return std::any_of(a.begin(), a.end(), [&](int v) { return pmod(p - v, N) == 0; })
                                           ? std::optional<Color>{Color{1}}
                                           : std::nullopt;
                            },
                            {}, 1);
    p1.usage = [](const ColoredPart&) { return std::uint32_t{0}; };
    auto p2 = labeled_rules(1,
                            [a, N](int p) {
                                return p % N == 0 || std::any_of(a.begin(), a.end(), [&](int v) { return pmod(p - v, N) == 0; })
                                           ? std::optional<Color>{Color{1}}
                                           : std::nullopt;
                            },
                            [N](const ColoredPart& l, const ColoredPart& s) {
                                const int gap = l.size - s.size;
                                const bool mult = l.size % N == 0 || s.size % N == 0;
                                if (gap == 0)
                                    return l.size % N == 0;
                                return mult ? gap < N : gap <= N;
                            },
                            0, [N](const ColoredPart& s) { return s.size < N; });
    p2.usage = p1.usage;

    // Conjugate-class route: colored j of color r -> N(j-1) + a_r, uncolored j -> Nj.
    auto images = std::make_shared<std::vector<std::uint64_t>>(static_cast<std::size_t>(m_max) + 1, 0);
    for (int w = 0; w <= m_max; ++w) {
        for_each_partition_any_x(n, w, Variant::c(), [&](const ColoredSequence& c) {
            Partition image;
            for (const auto& part : c)
                image.push_back(part.color.is_colored() ? N * (part.size - 1) + a[part.color.value() - 1] : N * part.size);
            std::sort(image.begin(), image.end(), std::greater<>());
            const int W = weight(image);
            if (W <= m_max)
                ++(*images)[static_cast<std::size_t>(W)];
        });
    }
    auto series = std::make_shared<const DilatedSeries>(substitute_dilation(product_plain(n, m_max), a, N, DilationMode::pos));
    Sources src{
        {"P1", [p1](int m) { return plain_count(p1, m); }},
        {"P2", [p2](int m) { return plain_count(p2, m); }},
        {"C-dilated",
         [images](int m) {
             CountTable t;
             if (const auto c = (*images)[static_cast<std::size_t>(m)])
                 t[{}] = c;
             return t;
         }},
        {"series", [series](int m) {
             CountTable t;
             if (const auto c = series->total(m))
                 t[{}] = c;
             return t;
         }},
    };
    return run("andrews-olsson", {{"a", a}, {"N", N}, {"m_max", m_max}}, m_max, src, threads);
}

IdentityReport verify_dilated_sigma(const AndrewsSet& A, const Permutation& sigma, int m_max, unsigned threads)
{
    if (sigma.size() != A.n())
        throw std::invalid_argument("sigma must permute 1..n");
    const ClassSpec d{ResidueClass::D, A, std::nullopt};
    const ClassSpec e{ResidueClass::E, A, sigma};
    auto series = std::make_shared<const DilatedSeries>(
        substitute_dilation(product_plain(A.n(), m_max), A.values(), A.N(), DilationMode::pos));
    Sources src{{"D", class_source(d)}, {e.label(), class_source(e)}, {"series", dilated_source(series)},
                {"bijection", bijection_source(d, e, false)}};
    auto params = set_params(A);
    params["sigma"] = sigma.images();
    return run("dilated-sigma", params, m_max, src, threads);
}

IdentityReport verify_dilated_negative(const AndrewsSet& A, const Permutation& sigma, int m_max, unsigned threads)
{
    if (sigma.size() != A.n())
        throw std::invalid_argument("sigma must permute 1..n");
    if (A.values().back() >= A.N())
        throw std::invalid_argument("negative residues need a_n < N");
    const ClassSpec f{ResidueClass::F, A, std::nullopt};
    const ClassSpec g{ResidueClass::G, A, sigma};
    auto series = std::make_shared<const DilatedSeries>(
        substitute_dilation(product_plain(A.n(), m_max), A.values(), A.N(), DilationMode::neg));
    Sources src{{"F", class_source(f)}, {g.label(), class_source(g)}, {"series", dilated_source(series)},
                {"bijection", bijection_source(f, g, true)}};
    auto params = set_params(A);
    params["sigma"] = sigma.images();
    return run("dilated-negative", params, m_max, src, threads);
}

IdentityReport verify_dilated_congruence(const AndrewsSet& A, int R, int M, int m_max, unsigned threads)
{
    if (R < 1 || M < 1)
        throw std::invalid_argument("need R >= 1 and M >= 1");
    const ClassSpec d{ResidueClass::D_RM, A, std::nullopt, R, M};
    const ClassSpec e{ResidueClass::E_RM, A, std::nullopt, R, M};
    auto series = std::make_shared<const DilatedSeries>(
        substitute_dilation(product_RM(A.n(), R, M, m_max), A.values(), A.N(), DilationMode::pos));
    Sources src{{d.label(), class_source(d)}, {e.label(), class_source(e)}, {"series", dilated_source(series)},
                {"bijection", bijection_source(d, e, false)}};
    auto params = set_params(A);
    params["R"] = R;
    params["M"] = M;
    return run("dilated-congruence", params, m_max, src, threads);
}

IdentityReport verify_dilated_gap(const AndrewsSet& A, int M, int m_max, unsigned threads)
{
    if (M < 1)
        throw std::invalid_argument("need M >= 1");
    const ClassSpec d{ResidueClass::D_M, A, std::nullopt, 1, M};
    const ClassSpec e{ResidueClass::E_M, A, std::nullopt, 1, M};
    auto series = std::make_shared<const DilatedSeries>(
        substitute_dilation(product_gap(A.n(), M, m_max), A.values(), A.N(), DilationMode::pos));
    Sources src{{d.label(), class_source(d)}, {e.label(), class_source(e)}, {"series", dilated_source(series)},
                {"bijection", bijection_source(d, e, false)}};
    auto params = set_params(A);
    params["M"] = M;
    return run("dilated-gap", params, m_max, src, threads);
}

IdentityReport verify_andrews_distinct(const AndrewsSet& A, int m_max, unsigned threads)
{
    const ClassSpec d{ResidueClass::D, A, std::nullopt};
    const ClassSpec ev{ResidueClass::E_andrews, A, std::nullopt};
    const ClassSpec e{ResidueClass::E, A, std::nullopt};
    Sources src{{"D", class_source(d)}, {"E_v", class_source(ev)}, {"E", class_source(e)}};
    auto rep = run("andrews-distinct", set_params(A), m_max, src, threads);
    // The v_A bound, rounded up to the forced residue, is the sigma = id bound.
    const auto id = Permutation::identity(A.n());
    for (int x : A.primes())
        for (int y : A.primes()) {
            const int N = A.N();
            int vform = N * A.omega_A(y) + A.v_A(y) - y;
            while (pmod(vform - (x - y), N) != 0)
                ++vform;
            if (vform != computed_bound(A, id, x, y))
                rep.issues.push_back("bounds differ at " + pair_text(x, y));
        }
    return rep;
}

IdentityReport verify_andrews_negative(const AndrewsSet& A, int m_max, unsigned threads)
{
    if (A.values().back() >= A.N())
        throw std::invalid_argument("negative residues need a_n < N");
    const auto rev = Permutation::reversal(A.n());
    const ClassSpec f{ResidueClass::F, A, std::nullopt};
    const ClassSpec gv{ResidueClass::G_andrews, A, std::nullopt};
    const ClassSpec g{ResidueClass::G, A, rev};
    Sources src{{"F", class_source(f)}, {"G_v", class_source(gv)}, {g.label(), class_source(g)}};
    auto rep = run("andrews-negative", set_params(A), m_max, src, threads);
    for (int x : A.primes())
        for (int y : A.primes()) {
            const int N = A.N();
            const auto cx = *A.color_of(x);
            const auto cy = *A.color_of(y);
            int vform = N * A.omega_A(x) + A.v_A(x) - x;
            while (pmod(vform - (y - x), N) != 0)
                ++vform;
            const int sform = N * omega(cx) + N * delta(rev.apply(cx), rev.apply(cy)) + y - x;
            if (vform != sform)
                rep.issues.push_back("bounds differ at " + pair_text(x, y));
        }
    return rep;
}

namespace {

IdentityReport verify_table(const std::string& name, const AndrewsSet& A, const Permutation& sigma,
                            const DifferenceTable& table, int m_max, unsigned threads)
{
    const ClassSpec d{ResidueClass::D, A, std::nullopt};
    const ClassSpec e{ResidueClass::E, A, sigma};
    const int N = A.N();
    auto label = [](int) { return std::optional<Color>{Color{1}}; };
    auto rules = labeled_rules(1, label,
                               [table](const ColoredPart& l, const ColoredPart& s) {
                                   const auto res = [&](int p) { return static_cast<int>(pmod(p - 1, table.N)) + 1; };
                                   return l.size - s.size >= table.bound(res(l.size), res(s.size));
                               },
                               1);
    rules.usage = [](const ColoredPart&) { return std::uint32_t{0}; };
    const ClassSpec any_e{ResidueClass::E, A, sigma};
    Sources src{{"D", class_source(d)},
                {"table",
                 [rules, any_e](int m) {
                     CountTable t;
                     for_each_chain(rules, m, std::nullopt,
                                    [&](const ColoredSequence& s) { ++t[class_x(sizes_of(s), any_e)]; });
                     return t;
                 }},
                {e.label(), class_source(e)}};
    auto params = set_params(A);
    params["sigma"] = sigma.images();
    auto rep = run(name, params, m_max, src, threads);
    for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k) {
            const int listed = effective_bound(table, j, k);
            const int computed = computed_bound(A, sigma, j, k);
            if (listed != computed)
                rep.issues.push_back("table entry (j=" + std::to_string(j) + ", k=" + std::to_string(k) + ") gives "
                                     + std::to_string(listed) + ", formula gives " + std::to_string(computed));
        }
    return rep;
}

} // namespace

IdentityReport verify_table_mod3(int m_max, unsigned threads)
{
    return verify_table("table-mod3", AndrewsSet({1, 2}, 3), Permutation({2, 1}), mod3_table(), m_max, threads);
}

IdentityReport verify_table_mod7(int m_max, unsigned threads)
{
    return verify_table("table-mod7", AndrewsSet({1, 2, 4}, 7), Permutation({3, 2, 1}), mod7_table(), m_max, threads);
}

IdentityReport verify_key_inequality(int sets, int n_max, std::uint64_t seed)
{
    IdentityReport rep;
    rep.theorem = "key-inequality";
    rep.params = {{"sets", sets}, {"n_max", n_max}, {"seed", seed}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < sets; ++i) {
        const auto A = random_andrews_set(rng, n_max);
        if (auto bad = key_inequality_check(A)) {
            rep.issues.push_back("a=" + format_int_list(A.values()) + " N=" + std::to_string(A.N()) + " fails at "
                                 + pair_text(bad->first, bad->second));
        }
        for (std::uint32_t c = 1; c <= max_color(A.n()); ++c)
            for (std::uint32_t d = 1; d <= max_color(A.n()); ++d)
                if (A.delta_A(A.alpha(Color{c}), A.alpha(Color{d})) != delta(Color{c}, Color{d}))
                    rep.issues.push_back("delta mismatch for a=" + format_int_list(A.values()));
    }
    return rep;
}

} // namespace partforge
