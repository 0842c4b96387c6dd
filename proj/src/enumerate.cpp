#include "partforge/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace partforge {

namespace {

int positive_mod(int a, int m)
{
    const int r = a % m;
    return r < 0 ? r + m : r;
}

void distinct_rec(int remaining, int k, int upper, int min_gap, const std::function<bool(int)>& part_ok,
                  DistinctPartition& cur, const DistinctVisitor& visit)
{
    if (k == 0) {
        if (remaining == 0)
            visit(cur);
        return;
    }
    // k parts, each at most `upper`, gaps >= min_gap: sum lies in
    // [k + g*k(k-1)/2, k*upper - g*k(k-1)/2].
    const long long tri = static_cast<long long>(min_gap) * k * (k - 1) / 2;
    if (remaining < k + tri)
        return;
    for (int first = std::min(upper, remaining); first >= 1; --first) {
        if (static_cast<long long>(k) * first - tri < remaining)
            break;
        if (part_ok && !part_ok(first))
            continue;
        cur.push_back(first);
        distinct_rec(remaining - first, k - 1, first - min_gap, min_gap, part_ok, cur, visit);
        cur.pop_back();
    }
}

class ChainSearch {
public:
    ChainSearch(const ChainRules& rules, int weight, const std::optional<std::vector<int>>& x,
                const SequenceVisitor& visit)
        : rules_(rules), weight_(weight), fixed_x_(x.has_value()), visit_(visit)
    {
        if (fixed_x_) {
            if (static_cast<int>(x->size()) != rules.n)
                throw std::invalid_argument("x-vector length differs from n");
            budget_ = *x;
        }
        palettes_.resize(static_cast<std::size_t>(std::max(weight, 0)) + 1);
        for (int s = 1; s <= weight; ++s)
            rules.palette(s, palettes_[static_cast<std::size_t>(s)]);
    }

    void run()
    {
        if (weight_ < 0)
            return;
        if (weight_ == 0) {
            if (budget_done())
                visit_(ColoredSequence{});
            return;
        }
        for (int s = 1; s <= weight_; ++s) {
            for (Color c : palettes_[static_cast<std::size_t>(s)]) {
                const ColoredPart part{s, c};
                if (rules_.smallest_ok && !rules_.smallest_ok(part))
                    continue;
                if (!take(part))
                    continue;
                stack_.push_back(part);
                extend(weight_ - s);
                stack_.pop_back();
                give(part);
            }
        }
    }

private:
    bool budget_done() const
    {
        return !fixed_x_ || std::all_of(budget_.begin(), budget_.end(), [](int v) { return v == 0; });
    }

    bool take(const ColoredPart& part)
    {
        if (!fixed_x_)
            return true;
        const std::uint32_t mask = rules_.usage(part);
        for (int r = 0; r < rules_.n; ++r)
            if (((mask >> r) & 1u) && budget_[static_cast<std::size_t>(r)] == 0)
                return false;
        for (int r = 0; r < rules_.n; ++r)
            if ((mask >> r) & 1u)
                --budget_[static_cast<std::size_t>(r)];
        return true;
    }

    void give(const ColoredPart& part)
    {
        if (!fixed_x_)
            return;
        const std::uint32_t mask = rules_.usage(part);
        for (int r = 0; r < rules_.n; ++r)
            if ((mask >> r) & 1u)
                ++budget_[static_cast<std::size_t>(r)];
    }

    void extend(int remaining)
    {
        if (remaining == 0) {
            if (budget_done())
                visit_(ColoredSequence(stack_.rbegin(), stack_.rend()));
            return;
        }
        const ColoredPart top = stack_.back();
        const int from = std::max(1, top.size + rules_.min_step);
        for (int s = from; s <= remaining; ++s) {
            for (Color c : palettes_[static_cast<std::size_t>(s)]) {
                const ColoredPart part{s, c};
                if (rules_.adjacent_ok && !rules_.adjacent_ok(part, top))
                    continue;
                if (!take(part))
                    continue;
                stack_.push_back(part);
                extend(remaining - s);
                stack_.pop_back();
                give(part);
            }
        }
    }

    const ChainRules& rules_;
    int weight_;
    bool fixed_x_;
    std::vector<int> budget_;
    std::vector<std::vector<Color>> palettes_;
    ColoredSequence stack_;
    const SequenceVisitor& visit_;
};

ChainRules b_rules(int n, const std::optional<Permutation>& sigma)
{
    ChainRules rules;
    rules.n = n;
    const auto top = max_color(n);
    rules.palette = [top](int, std::vector<Color>& out) {
        for (std::uint32_t c = 1; c <= top; ++c)
            out.push_back(Color{c});
    };
    rules.usage = [](const ColoredPart& p) { return p.color.value(); };
    std::optional<Permutation> unpermute;
    if (sigma && !sigma->is_identity())
        unpermute = sigma->inverse();
    rules.adjacent_ok = [unpermute](const ColoredPart& larger, const ColoredPart& smaller) {
        const Color a = unpermute ? unpermute->apply(larger.color) : larger.color;
        const Color b = unpermute ? unpermute->apply(smaller.color) : smaller.color;
        return larger.size - smaller.size >= omega(larger.color) + delta(a, b);
    };
    rules.smallest_ok = [](const ColoredPart& p) { return p.size >= omega(p.color); };
    rules.min_step = 1;
    return rules;
}

ChainRules c_rules(int n)
{
    ChainRules rules;
    rules.n = n;
    rules.palette = [n](int, std::vector<Color>& out) {
        out.push_back(Color::uncolored());
        for (int r = 1; r <= n; ++r)
            out.push_back(Color{static_cast<std::uint32_t>(r)});
    };
    rules.usage = [](const ColoredPart& p) {
        return p.color.is_colored() ? std::uint32_t{1} << (p.color.value() - 1) : std::uint32_t{0};
    };
    rules.adjacent_ok = [](const ColoredPart& larger, const ColoredPart& smaller) {
        const int gap = larger.size - smaller.size;
        if (gap == 0)
            return (!larger.color.is_colored() && !smaller.color.is_colored())
                || conjugate_rank(larger.color) > conjugate_rank(smaller.color);
        if (gap == 1)
            return larger.color.is_colored() && conjugate_rank(smaller.color) >= conjugate_rank(larger.color);
        return false;
    };
    rules.smallest_ok = [](const ColoredPart& p) { return p.size == 1 && p.color.is_colored(); };
    rules.min_step = 0;
    return rules;
}

// Count of k-part partitions of w for the first component, per variant.
std::function<bool(int)> first_part_filter(const Variant& v)
{
    if (v.family == Family::A_RM) {
        const int R = v.R;
        const int M = v.M;
        return [R, M](int p) { return positive_mod(p - R, M) == 0; };
    }
    return {};
}

int first_min_gap(const Variant& v)
{
    return v.family == Family::A_M ? v.M : 1;
}

void tuple_rec(const CountQuery& q, std::size_t r, int remaining, MultiTuple& cur, const TupleVisitor& visit)
{
    const int n = q.n;
    if (static_cast<int>(r) == n) {
        if (remaining == 0)
            visit(cur);
        return;
    }
    const int k = q.x[r];
    const bool last = static_cast<int>(r) == n - 1;
    const int min_w = k * (k + 1) / 2;
    const int lo = last ? remaining : min_w;
    for (int w = lo; w <= remaining; ++w) {
        auto next = [&](const DistinctPartition& mu) {
            cur.mus[r] = mu;
            tuple_rec(q, r + 1, remaining - w, cur, visit);
        };
        if (r == 0)
            for_each_distinct(w, k, next, first_min_gap(q.variant), first_part_filter(q.variant));
        else
            for_each_distinct(w, k, next);
    }
    cur.mus[r].clear();
}

// table[k][w] = number of k-part partitions of w for a component.
std::vector<std::vector<std::uint64_t>> component_counts(int kmax, int m, int min_gap,
                                                         const std::function<bool(int)>& part_ok)
{
    std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(kmax) + 1,
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));
    for (int k = 0; k <= kmax; ++k)
        for (int w = 0; w <= m; ++w) {
            std::uint64_t c = 0;
            for_each_distinct(w, k, [&c](const DistinctPartition&) { ++c; }, min_gap, part_ok);
            table[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)] = c;
        }
    return table;
}

std::uint64_t tuple_count(const std::vector<int>& x, int m,
                          const std::vector<std::vector<std::uint64_t>>& first,
                          const std::vector<std::vector<std::uint64_t>>& rest)
{
    // Convolution over weight compositions.
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(m) + 1, 0);
    for (int w = 0; w <= m; ++w)
        acc[static_cast<std::size_t>(w)] = first[static_cast<std::size_t>(x[0])][static_cast<std::size_t>(w)];
    for (std::size_t r = 1; r < x.size(); ++r) {
        std::vector<std::uint64_t> next(acc.size(), 0);
        const auto& row = rest[static_cast<std::size_t>(x[r])];
        for (int a = 0; a <= m; ++a) {
            if (!acc[static_cast<std::size_t>(a)])
                continue;
            for (int b = 0; a + b <= m; ++b)
                next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * row[static_cast<std::size_t>(b)];
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(m)];
}

int max_parts(int m)
{
    int k = 0;
    while ((k + 1) * (k + 2) / 2 <= m)
        ++k;
    return k;
}

bool passes_extra(const ColoredSequence& s, int n, const Variant& v)
{
    switch (v.family) {
    case Family::B_RM:
        return !check_B_RM(s, n, v.R, v.M);
    case Family::B_M:
        return !check_B_M(s, n, v.M);
    default:
        return true;
    }
}

ChainRules partition_rules(int n, const Variant& v)
{
    switch (v.family) {
    case Family::B:
        return b_rules(n, v.sigma);
    case Family::B_RM:
    case Family::B_M:
        return b_rules(n, std::nullopt);
    case Family::C:
        return c_rules(n);
    default:
        throw std::invalid_argument("not a partition-side variant");
    }
}

} // namespace

void for_each_distinct(int m, int k, const DistinctVisitor& visit, int min_gap, const std::function<bool(int)>& part_ok)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("weight and part count must be >= 0");
    if (min_gap < 1)
        throw std::invalid_argument("min_gap must be >= 1");
    DistinctPartition cur;
    cur.reserve(static_cast<std::size_t>(k));
    distinct_rec(m, k, m, min_gap, part_ok, cur, visit);
}

std::vector<DistinctPartition> gen_distinct(int m, int k)
{
    std::vector<DistinctPartition> out;
    for_each_distinct(m, k, [&out](const DistinctPartition& p) { out.push_back(p); });
    return out;
}

bool Variant::is_tuple_side() const
{
    return family == Family::A || family == Family::A_RM || family == Family::A_M;
}

std::string Variant::label() const
{
    const auto rm = "(" + std::to_string(R) + "," + std::to_string(M) + ")";
    const auto m = "(" + std::to_string(M) + ")";
    switch (family) {
    case Family::A:
        return "A";
    case Family::A_RM:
        return "A_RM" + rm;
    case Family::A_M:
        return "A_M" + m;
    case Family::B: {
        if (!sigma || sigma->is_identity())
            return "B";
        std::string s = "B[";
        for (std::size_t i = 0; i < sigma->images().size(); ++i)
            s += (i ? "," : "") + std::to_string(sigma->images()[i]);
        return s + "]";
    }
    case Family::B_RM:
        return "B_RM" + rm;
    case Family::B_M:
        return "B_M" + m;
    case Family::C:
        return "C";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    std::string u;
    for (char ch : name)
        u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (u == "A")
        return Family::A;
    if (u == "A_RM")
        return Family::A_RM;
    if (u == "A_M")
        return Family::A_M;
    if (u == "B")
        return Family::B;
    if (u == "B_RM")
        return Family::B_RM;
    if (u == "B_M")
        return Family::B_M;
    if (u == "C")
        return Family::C;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

void CountQuery::validate() const
{
    if (n < 1 || n > 16)
        throw std::invalid_argument("n must be in [1, 16]");
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("x-vector must have n entries");
    if (std::any_of(x.begin(), x.end(), [](int v) { return v < 0; }))
        throw std::invalid_argument("x entries must be >= 0");
    if (m < 0)
        throw std::invalid_argument("m must be >= 0");
    if (variant.M < 1)
        throw std::invalid_argument("M must be >= 1");
    if (variant.sigma && variant.sigma->size() != n)
        throw std::invalid_argument("sigma must permute 1..n");
}

std::vector<std::vector<int>> feasible_x_vectors(int n, int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int r, int budget) {
        if (r == n) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k * (k + 1) / 2 <= budget; ++k) {
            cur[static_cast<std::size_t>(r)] = k;
            rec(r + 1, budget - k * (k + 1) / 2);
        }
        cur[static_cast<std::size_t>(r)] = 0;
    };
    rec(0, m);
    return out;
}

void for_each_tuple(const CountQuery& q, const TupleVisitor& visit)
{
    q.validate();
    if (!q.variant.is_tuple_side())
        throw std::invalid_argument("for_each_tuple needs a tuple-side variant");
    MultiTuple cur;
    cur.mus.resize(static_cast<std::size_t>(q.n));
    tuple_rec(q, 0, q.m, cur, visit);
}

void for_each_partition(const CountQuery& q, const SequenceVisitor& visit)
{
    q.validate();
    if (q.variant.is_tuple_side())
        throw std::invalid_argument("for_each_partition needs a partition-side variant");
    const auto rules = partition_rules(q.n, q.variant);
    for_each_chain(rules, q.m, q.x, [&](const ColoredSequence& s) {
        if (passes_extra(s, q.n, q.variant))
            visit(s);
    });
}

void for_each_partition_any_x(int n, int m, const Variant& variant, const SequenceVisitor& visit)
{
    CountQuery probe{n, std::vector<int>(static_cast<std::size_t>(n), 0), m, variant};
    probe.validate();
    if (variant.is_tuple_side())
        throw std::invalid_argument("for_each_partition_any_x needs a partition-side variant");
    const auto rules = partition_rules(n, variant);
    for_each_chain(rules, m, std::nullopt, [&](const ColoredSequence& s) {
        if (passes_extra(s, n, variant))
            visit(s);
    });
}

std::vector<MultiTuple> enum_A(const CountQuery& q)
{
    std::vector<MultiTuple> out;
    for_each_tuple(q, [&out](const MultiTuple& t) { out.push_back(t); });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool sequence_precedes(const ColoredSequence& a, const ColoredSequence& b)
{
    const auto len = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i].size != b[i].size)
            return a[i].size > b[i].size;
        const auto ra = conjugate_rank(a[i].color);
        const auto rb = conjugate_rank(b[i].color);
        if (ra != rb)
            return ra > rb;
    }
    return a.size() < b.size();
}

std::vector<ColoredSequence> enum_partitions(const CountQuery& q)
{
    std::vector<ColoredSequence> out;
    for_each_partition(q, [&out](const ColoredSequence& s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), sequence_precedes);
    return out;
}

std::uint64_t count(const CountQuery& q)
{
    q.validate();
    if (q.variant.is_tuple_side()) {
        const int kmax = *std::max_element(q.x.begin(), q.x.end());
        const auto first = component_counts(kmax, q.m, first_min_gap(q.variant), first_part_filter(q.variant));
        const auto rest = component_counts(kmax, q.m, 1, {});
        return tuple_count(q.x, q.m, first, rest);
    }
    std::uint64_t c = 0;
    for_each_partition(q, [&c](const ColoredSequence&) { ++c; });
    return c;
}

CountTable counts_by_x(const Variant& variant, int n, int m)
{
    CountTable table;
    if (variant.is_tuple_side()) {
        CountQuery probe{n, std::vector<int>(static_cast<std::size_t>(n), 0), m, variant};
        probe.validate();
        const int kmax = max_parts(m);
        const auto first = component_counts(kmax, m, first_min_gap(variant), first_part_filter(variant));
        const auto rest = component_counts(kmax, m, 1, {});
        for (const auto& x : feasible_x_vectors(n, m))
            if (const auto c = tuple_count(x, m, first, rest))
                table[x] = c;
        return table;
    }
    const bool conj = variant.family == Family::C;
    for_each_partition_any_x(n, m, variant, [&](const ColoredSequence& s) {
        ++table[conj ? ground_counts(s, n) : bit_counts(s, n)];
    });
    return table;
}

IdentityReport sweep_equal(const Variant& left, const Variant& right, int n, int m_max, unsigned threads)
{
    nlohmann::json params{{"n", n}, {"left", left.label()}, {"right", right.label()}};
    return tabulate(left.label() + " = " + right.label(), std::move(params), m_max,
                    {{left.label(), [left, n](int m) { return counts_by_x(left, n, m); }},
                     {right.label(), [right, n](int m) { return counts_by_x(right, n, m); }}},
                    threads);
}

void for_each_chain(const ChainRules& rules, int weight, const std::optional<std::vector<int>>& x,
                    const SequenceVisitor& visit)
{
    if (!rules.palette || !rules.usage)
        throw std::invalid_argument("chain rules need a palette and a usage map");
    ChainSearch search(rules, weight, x, visit);
    search.run();
}

} // namespace partforge
