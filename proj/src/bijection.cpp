#include "partforge/bijection.hpp"

#include "partforge/text.hpp"

#include <algorithm>
#include <bit>

namespace partforge {

namespace {

void reject_unless_B(const ColoredSequence& b, int n, const char* what)
{
    if (auto bad = check_B(b, n))
        throw RejectedInput(std::string(what) + ": " + bad->detail, *bad);
}

void require_tau(const DistinctPartition& tau)
{
    if (!is_distinct_partition(tau))
        throw RejectedInput("tau must be strictly decreasing positive integers",
                            Violation{0, "part", format_distinct(tau)});
}

ColoredSequence with_color(const DistinctPartition& parts, Color c)
{
    ColoredSequence out;
    out.reserve(parts.size());
    for (int k : parts)
        out.push_back({k, c});
    return out;
}

std::string snapshot_line(const Snapshot& s, std::uint32_t top)
{
    if (s.stage == Stage::step4)
        return parenthesized(s.working);
    return "(" + parenthesized(with_color(s.tau, Color{top})) + "," + parenthesized(s.working) + ")";
}

} // namespace

const char* stage_name(Stage s)
{
    switch (s) {
    case Stage::step1:
        return "step1";
    case Stage::step2:
        return "step2";
    case Stage::insert:
        return "step3-insert";
    case Stage::redistribute:
        return "step3-redistribute";
    case Stage::step4:
        return "step4";
    }
    return "?";
}

ColoredSequence remove_staircase(const ColoredSequence& seq)
{
    ColoredSequence out = seq;
    const int s = static_cast<int>(out.size());
    for (int i = 0; i < s; ++i)
        out[static_cast<std::size_t>(i)].size -= s - 1 - i;
    return out;
}

ColoredSequence add_staircase(const ColoredSequence& seq)
{
    ColoredSequence out = seq;
    const int s = static_cast<int>(out.size());
    for (int i = 0; i < s; ++i)
        out[static_cast<std::size_t>(i)].size += s - 1 - i;
    return out;
}

StepResult ag_step(const ColoredSequence& lambda, const DistinctPartition& tau, int n)
{
    if (n < 1 || n > 31)
        throw std::invalid_argument("n must be in [1, 31]");
    if (n == 1) {
        if (!lambda.empty())
            throw RejectedInput("lambda must be empty for n = 1", Violation{1, "color", "no colors below 1"});
    } else {
        reject_unless_B(lambda, n - 1, "lambda");
    }
    require_tau(tau);

    const std::uint32_t top = std::uint32_t{1} << (n - 1);
    StepResult res;
    res.trace.n = n;
    auto& snaps = res.trace.snapshots;

    // Step 1: small tau parts bump a prefix and tag its last part.
    ColoredSequence lam = lambda;
    const int p = static_cast<int>(lam.size());
    DistinctPartition unused;
    for (int k : tau) {
        if (k > p) {
            unused.push_back(k);
            continue;
        }
        for (int i = 0; i < k; ++i)
            ++lam[static_cast<std::size_t>(i)].size;
        lam[static_cast<std::size_t>(k - 1)].color = Color{lam[static_cast<std::size_t>(k - 1)].color.value() | top};
    }
    snaps.push_back({Stage::step1, unused, lam});

    // Step 2: staircase off the combined list (unused parts sit on the left).
    const int u = static_cast<int>(unused.size());
    const int s = u + p;
    DistinctPartition reduced;
    for (int j = 0; j < u; ++j)
        reduced.push_back(unused[static_cast<std::size_t>(j)] - (s - 1 - j));
    ColoredSequence work = lam;
    for (int a = 0; a < p; ++a)
        work[static_cast<std::size_t>(a)].size -= p - 1 - a;
    snaps.push_back({Stage::step2, reduced, work});

    // Step 3
    for (std::size_t t = 0; t < reduced.size(); ++t) {
        const int k = reduced[t];
        const DistinctPartition rest(reduced.begin() + static_cast<std::ptrdiff_t>(t) + 1, reduced.end());
        auto it = std::find_if(work.begin(), work.end(), [k](const ColoredPart& e) { return e.size <= k; });
        const auto i = static_cast<std::size_t>(it - work.begin());
        work.insert(it, ColoredPart{k, Color{top}});
        snaps.push_back({Stage::insert, rest, work});
        if (i == 0)
            continue;
        const Color old = work[i - 1].color;
        const int j = work[i - 1].size - k;
        if (omega(old) > 1 + j - delta(old, Color{top})) {
            std::uint32_t low = 0;
            std::uint32_t bits = old.value();
            for (int taken = 0; taken < j && bits; ++taken) {
                const std::uint32_t b = bits & (~bits + 1);
                low |= b;
                bits &= ~b;
            }
            work[i - 1].color = Color{top | low};
            work[i].color = Color{old.value() & ~low};
            snaps.push_back({Stage::redistribute, rest, work});
        }
    }

    // Step 4
    res.partition = add_staircase(work);
    snaps.push_back({Stage::step4, {}, res.partition});
    return res;
}

StepPreimage ag_step_inverse(const ColoredSequence& mu, int n)
{
    if (n < 1 || n > 31)
        throw std::invalid_argument("n must be in [1, 31]");
    reject_unless_B(mu, n, "input");
    const std::uint32_t top = std::uint32_t{1} << (n - 1);

    ColoredSequence work = remove_staircase(mu);
    const int s = static_cast<int>(work.size());
    std::vector<int> extracted;

    // Undo step 3 from the right: a pure top part was inserted untouched, a
    // top-carrying part directly above a matching residual was redistributed.
    for (bool found = true; found;) {
        found = false;
        for (std::size_t i = work.size(); i-- > 0;) {
            if (work[i].color.value() == top) {
                extracted.push_back(work[i].size);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                found = true;
                break;
            }
            if (i == 0)
                continue;
            const Color L = work[i - 1].color;
            const Color Rc = work[i].color;
            if ((L.value() & top) && L.value() != top && delta(Color{L.value() & ~top}, Rc) == 1
                && work[i - 1].size - work[i].size == omega(L) - 1) {
                work[i - 1].color = Color{(L.value() & ~top) | Rc.value()};
                extracted.push_back(work[i].size);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                found = true;
                break;
            }
        }
    }

    std::sort(extracted.begin(), extracted.end(), std::greater<>());
    const int u = static_cast<int>(extracted.size());
    const int p = static_cast<int>(work.size());
    DistinctPartition tau;
    for (int j = 0; j < u; ++j)
        tau.push_back(extracted[static_cast<std::size_t>(j)] + (s - 1 - j));
    for (int a = 0; a < p; ++a)
        work[static_cast<std::size_t>(a)].size += p - 1 - a;

    // Undo step 1, largest tagged position first.
    for (int k = p; k >= 1; --k) {
        auto& part = work[static_cast<std::size_t>(k - 1)];
        if (!(part.color.value() & top))
            continue;
        tau.push_back(k);
        for (int i = 0; i < k; ++i)
            --work[static_cast<std::size_t>(i)].size;
        part.color = Color{part.color.value() & ~top};
    }
    std::sort(tau.begin(), tau.end(), std::greater<>());

    StepPreimage out{std::move(work), std::move(tau)};
    if (!is_distinct_partition(out.tau))
        throw RejectedInput("input is not in the image of the step", Violation{0, "order", format_distinct(out.tau)});
    if (n == 1) {
        if (!out.lambda.empty())
            throw RejectedInput("input is not in the image of the step", Violation{1, "color", "leftover parts"});
    } else if (auto bad = check_B(out.lambda, n - 1)) {
        throw RejectedInput("input is not in the image of the step: " + bad->detail, *bad);
    }
    return out;
}

ColoredSequence forward(const MultiTuple& t, std::vector<StepTrace>& traces)
{
    if (t.mus.empty())
        throw std::invalid_argument("tuple needs at least one component");
    for (const auto& mu : t.mus)
        require_tau(mu);
    ColoredSequence lam = with_color(t.mus[0], Color{1});
    traces.clear();
    for (int r = 2; r <= t.n(); ++r) {
        auto step = ag_step(lam, t.mus[static_cast<std::size_t>(r - 1)], r);
        lam = std::move(step.partition);
        traces.push_back(std::move(step.trace));
    }
    return lam;
}

ColoredSequence forward(const MultiTuple& t)
{
    std::vector<StepTrace> ignored;
    return forward(t, ignored);
}

MultiTuple inverse(const ColoredSequence& b, int n)
{
    reject_unless_B(b, n, "input");
    MultiTuple t;
    t.mus.resize(static_cast<std::size_t>(n));
    ColoredSequence cur = b;
    for (int r = n; r >= 2; --r) {
        auto pre = ag_step_inverse(cur, r);
        t.mus[static_cast<std::size_t>(r - 1)] = std::move(pre.tau);
        cur = std::move(pre.lambda);
    }
    for (const auto& part : cur)
        t.mus[0].push_back(part.size);
    return t;
}

ColoredSequence apply_sigma(const ColoredSequence& b, const Permutation& sigma)
{
    ColoredSequence out = b;
    for (auto& part : out)
        part.color = sigma.apply(part.color);
    return out;
}

std::vector<std::string> render_trace(const StepTrace& trace, TraceMode mode)
{
    const std::uint32_t top = std::uint32_t{1} << (trace.n - 1);
    std::vector<std::string> lines;
    const auto& snaps = trace.snapshots;
    auto group = [](Stage s) { return s == Stage::redistribute ? Stage::insert : s; };
    for (std::size_t i = 0; i < snaps.size(); ++i) {
        if (mode == TraceMode::steps && i + 1 < snaps.size() && group(snaps[i + 1].stage) == group(snaps[i].stage))
            continue;
        lines.push_back(snapshot_line(snaps[i], top));
    }
    return lines;
}

} // namespace partforge
