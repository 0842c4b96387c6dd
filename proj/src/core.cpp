#include "partforge/core.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace partforge {

namespace {

void require_colored(Color c)
{
    if (!c.is_colored())
        throw std::invalid_argument("color statistics need a color >= 1");
}

int mod(long long a, int m)
{
    const long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

Violation violation(std::size_t index, std::string condition, std::string detail)
{
    return Violation{index, std::move(condition), std::move(detail)};
}

std::string part_text(const ColoredPart& p)
{
    if (!p.color.is_colored())
        return std::to_string(p.size);
    return std::to_string(p.size) + "_" + std::to_string(p.color.value());
}

CheckResult check_parts(const ColoredSequence& parts, std::uint32_t max_value, bool allow_uncolored)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        if (p.size < 1)
            return violation(i + 1, "part", "part size must be positive: " + part_text(p));
        if (!p.color.is_colored() && !allow_uncolored)
            return violation(i + 1, "color", "uncolored part not allowed: " + part_text(p));
        if (p.color.value() > max_value)
            return violation(i + 1, "color", "color out of range: " + part_text(p));
    }
    return std::nullopt;
}

std::vector<std::size_t> odd_positions(const ColoredSequence& parts)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].color.is_odd())
            out.push_back(i);
    return out;
}

// Sum of omega_e over parts[from, to).
int omega_e_sum(const ColoredSequence& parts, std::size_t from, std::size_t to)
{
    int s = 0;
    for (std::size_t l = from; l < to; ++l)
        s += omega_e(parts[l].color);
    return s;
}

} // namespace

int omega(Color c)
{
    require_colored(c);
    return std::popcount(c.value());
}

int omega_e(Color c)
{
    require_colored(c);
    return std::popcount(c.value() & ~std::uint32_t{1});
}

std::uint32_t lowest_power(Color c)
{
    require_colored(c);
    return c.value() & (~c.value() + 1);
}

std::uint32_t highest_power(Color c)
{
    require_colored(c);
    return std::bit_floor(c.value());
}

int delta(Color c, Color d)
{
    return highest_power(c) < lowest_power(d) ? 1 : 0;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    const int n = size();
    if (n < 1 || n > 31)
        throw std::invalid_argument("permutation size must be in [1, 31]");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r)
        v[static_cast<std::size_t>(r - 1)] = n + 1 - r;
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const
{
    for (int r = 1; r <= size(); ++r)
        if ((*this)(r) != r)
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int r = 1; r <= size(); ++r)
        inv[static_cast<std::size_t>((*this)(r) - 1)] = r;
    return Permutation(std::move(inv));
}

Color Permutation::apply(Color c) const
{
    if (c.value() > max_color(size()))
        throw std::invalid_argument("color uses ground colors beyond the permutation size");
    std::uint32_t out = 0;
    for (int r = 1; r <= size(); ++r)
        if (c.uses(r))
            out |= std::uint32_t{1} << ((*this)(r) - 1);
    return Color{out};
}

int MultiTuple::weight() const
{
    int w = 0;
    for (const auto& mu : mus)
        w += partforge::weight(mu);
    return w;
}

std::vector<int> MultiTuple::x_vector() const
{
    std::vector<int> x;
    x.reserve(mus.size());
    for (const auto& mu : mus)
        x.push_back(static_cast<int>(mu.size()));
    return x;
}

int weight(const ColoredSequence& parts)
{
    int w = 0;
    for (const auto& p : parts)
        w += p.size;
    return w;
}

int weight(const DistinctPartition& parts)
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool is_distinct_partition(const DistinctPartition& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            return false;
        if (i + 1 < parts.size() && parts[i] <= parts[i + 1])
            return false;
    }
    return true;
}

std::vector<int> bit_counts(const ColoredSequence& parts, int n)
{
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (const auto& p : parts)
        for (int r = 1; r <= n; ++r)
            if (p.color.uses(r))
                ++x[static_cast<std::size_t>(r - 1)];
    return x;
}

std::vector<int> ground_counts(const ColoredSequence& parts, int n)
{
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (const auto& p : parts) {
        const auto r = p.color.value();
        if (r >= 1 && r <= static_cast<std::uint32_t>(n))
            ++x[r - 1];
    }
    return x;
}

CheckResult check_B(const ColoredSequence& parts, int n, const std::optional<Permutation>& sigma)
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (sigma && sigma->size() != n)
        throw std::invalid_argument("permutation size differs from n");
    if (auto bad = check_parts(parts, max_color(n), false))
        return bad;
    if (parts.empty())
        return std::nullopt;

    std::optional<Permutation> unpermute;
    if (sigma && !sigma->is_identity())
        unpermute = sigma->inverse();

    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const auto& a = parts[i];
        const auto& b = parts[i + 1];
        const Color ca = unpermute ? unpermute->apply(a.color) : a.color;
        const Color cb = unpermute ? unpermute->apply(b.color) : b.color;
        const int need = omega(a.color) + delta(ca, cb);
        if (a.size - b.size < need)
            return violation(i + 1, "difference",
                             part_text(a) + " - " + part_text(b) + " < " + std::to_string(need));
    }
    const auto& last = parts.back();
    if (last.size < omega(last.color))
        return violation(parts.size(), "smallest-part",
                         part_text(last) + " is below omega of its color");
    return std::nullopt;
}

CheckResult check_B_RM(const ColoredSequence& parts, int n, int R, int M)
{
    if (M < 1)
        throw std::invalid_argument("M must be >= 1");
    if (auto bad = check_B(parts, n))
        return bad;
    const auto odd = odd_positions(parts);
    if (odd.empty())
        return std::nullopt;

    // Congruences between odd parts telescope, so neighbouring odd parts suffice.
    for (std::size_t k = 0; k + 1 < odd.size(); ++k) {
        const auto i = odd[k];
        const auto j = odd[k + 1];
        const long long lhs = parts[i].size - parts[j].size - omega_e_sum(parts, i, j);
        if (mod(lhs, M) != 0)
            return violation(i + 1, "odd-congruence",
                             part_text(parts[i]) + " vs " + part_text(parts[j]) + " mod " + std::to_string(M));
    }
    const auto S = odd.back();
    const long long lhs = parts[S].size - R - omega_e_sum(parts, S, parts.size());
    if (mod(lhs, M) != 0)
        return violation(S + 1, "smallest-odd-congruence",
                         part_text(parts[S]) + " not congruent to R + sum omega_e mod " + std::to_string(M));
    return std::nullopt;
}

CheckResult check_B_M(const ColoredSequence& parts, int n, int M)
{
    if (M < 1)
        throw std::invalid_argument("M must be >= 1");
    if (auto bad = check_B(parts, n))
        return bad;
    const auto odd = odd_positions(parts);
    // Gaps between neighbouring odd parts imply the gaps between all odd pairs.
    for (std::size_t k = 0; k + 1 < odd.size(); ++k) {
        const auto i = odd[k];
        const auto j = odd[k + 1];
        const int need = M + omega_e_sum(parts, i, j);
        if (parts[i].size - parts[j].size < need)
            return violation(i + 1, "odd-gap",
                             part_text(parts[i]) + " - " + part_text(parts[j]) + " < " + std::to_string(need));
    }
    return std::nullopt;
}

std::uint32_t conjugate_rank(Color c)
{
    return c.is_colored() ? c.value() : std::numeric_limits<std::uint32_t>::max();
}

CheckResult check_C(const ColoredSequence& parts, int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (auto bad = check_parts(parts, static_cast<std::uint32_t>(n), true))
        return bad;
    if (parts.empty())
        return std::nullopt;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const auto& a = parts[i];
        const auto& b = parts[i + 1];
        const int gap = a.size - b.size;
        if (gap == 0) {
            const bool both_uncolored = !a.color.is_colored() && !b.color.is_colored();
            if (!both_uncolored && conjugate_rank(a.color) <= conjugate_rank(b.color))
                return violation(i + 1, "order",
                                 part_text(a) + ", " + part_text(b) + " out of order or repeated");
        } else if (gap == 1) {
            if (!a.color.is_colored() || conjugate_rank(b.color) < conjugate_rank(a.color))
                return violation(i + 1, "strict-difference",
                                 part_text(a) + " - " + part_text(b) + " must be 0");
        } else {
            return violation(i + 1, "difference", part_text(a) + " - " + part_text(b) + " not in {0,1}");
        }
    }
    if (!parts.back().color.is_colored())
        return violation(parts.size(), "smallest-part", "smallest part must be colored");
    if (parts.back().size != 1)
        return violation(parts.size(), "smallest-part", "smallest part must be 1");
    return std::nullopt;
}

} // namespace partforge
