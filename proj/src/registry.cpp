#include "partforge/registry.hpp"

#include "partforge/bijection.hpp"
#include "partforge/conjugate.hpp"
#include "partforge/enumerate.hpp"
#include "partforge/qseries.hpp"
#include "partforge/specialize.hpp"
#include "partforge/text.hpp"

#include <memory>
#include <stdexcept>

namespace partforge {

namespace {

using Sources = std::vector<std::pair<std::string, CountSource>>;

CountSource variant_source(const Variant& v, int n)
{
    return [v, n](int m) { return counts_by_x(v, n, m); };
}

CountSource series_source(std::shared_ptr<const Series> s)
{
    return [s = std::move(s)](int m) { return s->at(m); };
}

// Forward images of every tuple of the variant, counted when they pass `keep`.
CountSource forward_source(const Variant& tuple_side, int n, std::function<bool(const ColoredSequence&)> keep)
{
    return [tuple_side, n, keep = std::move(keep)](int m) {
        CountTable t;
        for (const auto& x : feasible_x_vectors(n, m)) {
            for_each_tuple(CountQuery{n, x, m, tuple_side}, [&](const MultiTuple& tuple) {
                const auto b = forward(tuple);
                if (keep(b) && bit_counts(b, n) == x && weight(b) == m)
                    ++t[x];
            });
        }
        return t;
    };
}

int to_int(const ParamMap& p, const std::string& key)
{
    const auto it = p.find(key);
    if (it == p.end())
        throw std::invalid_argument("missing parameter --" + key);
    const auto v = parse_int_list(it->second);
    if (v.size() != 1)
        throw std::invalid_argument("--" + key + " takes one integer");
    return v.front();
}

std::vector<int> to_list(const ParamMap& p, const std::string& key)
{
    const auto it = p.find(key);
    if (it == p.end())
        throw std::invalid_argument("missing parameter --" + key);
    return parse_int_list(it->second);
}

std::optional<Permutation> to_sigma(const ParamMap& p, int n)
{
    const auto it = p.find("sigma");
    if (it == p.end() || it->second.empty() || it->second == "id")
        return Permutation::identity(n);
    if (it->second == "rev")
        return Permutation::reversal(n);
    Permutation s(parse_int_list(it->second));
    if (s.size() != n)
        throw std::invalid_argument("--sigma must permute 1..n");
    return s;
}

void require_n(int n, int hi)
{
    if (n < 1 || n > hi)
        throw std::invalid_argument("n must be in [1, " + std::to_string(hi) + "]");
}

} // namespace

IdentityReport verify_colored_difference(int n, int m_max, const std::vector<Permutation>& sigmas, unsigned threads)
{
    require_n(n, 6);
    Sources src{{"A", variant_source(Variant::a(), n)}, {"B", variant_source(Variant::b(), n)}};
    for (const auto& s : sigmas) {
        if (s.size() != n)
            throw std::invalid_argument("sigma must permute 1..n");
        if (s.is_identity())
            continue;
        const auto v = Variant::b(s);
        src.emplace_back(v.label(), variant_source(v, n));
    }
    src.emplace_back("C", variant_source(Variant::c(), n));
    src.emplace_back("series", series_source(std::make_shared<const Series>(product_plain(n, m_max))));
    src.emplace_back("forward", forward_source(Variant::a(), n, [n](const ColoredSequence& b) { return !check_B(b, n); }));
    nlohmann::json sig = nlohmann::json::array();
    for (const auto& s : sigmas)
        sig.push_back(s.images());
    return tabulate("colored-difference", {{"n", n}, {"sigmas", sig}}, m_max, src, threads);
}

IdentityReport verify_colored_congruence(int n, int R, int M, int m_max, unsigned threads)
{
    require_n(n, 6);
    const auto a = Variant::a_rm(R, M);
    const auto b = Variant::b_rm(R, M);
    Sources src{{a.label(), variant_source(a, n)},
                {b.label(), variant_source(b, n)},
                {"series", series_source(std::make_shared<const Series>(product_RM(n, R, M, m_max)))},
                {"forward", forward_source(a, n, [n, R, M](const ColoredSequence& s) { return !check_B_RM(s, n, R, M); })}};
    return tabulate("colored-congruence", {{"n", n}, {"R", R}, {"M", M}}, m_max, src, threads);
}

IdentityReport verify_colored_gap(int n, int M, int m_max, unsigned threads)
{
    require_n(n, 6);
    const auto a = Variant::a_m(M);
    const auto b = Variant::b_m(M);
    Sources src{{a.label(), variant_source(a, n)},
                {b.label(), variant_source(b, n)},
                {"series", series_source(std::make_shared<const Series>(product_gap(n, M, m_max)))},
                {"forward", forward_source(a, n, [n, M](const ColoredSequence& s) { return !check_B_M(s, n, M); })}};
    return tabulate("colored-gap", {{"n", n}, {"M", M}}, m_max, src, threads);
}

IdentityReport verify_colored_conjugate(int n, int m_max, unsigned threads)
{
    require_n(n, 6);
    Sources src{{"A", variant_source(Variant::a(), n)},
                {"B", variant_source(Variant::b(), n)},
                {"C", variant_source(Variant::c(), n)},
                {"conjugate(B)", [n](int m) {
                     CountTable t;
                     for_each_partition_any_x(n, m, Variant::b(), [&](const ColoredSequence& b) {
                         const auto c = conjugate(b, n);
                         if (!check_C(c, n) && conjugate_inverse(c, n) == b)
                             ++t[ground_counts(c, n)];
                     });
                     return t;
                 }}};
    return tabulate("colored-conjugate", {{"n", n}}, m_max, src, threads);
}

const std::vector<TheoremEntry>& theorem_registry()
{
    static const std::vector<TheoremEntry> entries = [] {
        std::vector<TheoremEntry> e;
        e.push_back({"colored-difference", "A = B_sigma = C = product, per x", {{"n", "2"}, {"sigma", "rev"}}, 12,
                     [](const ParamMap& p, int m, unsigned t) {
                         const int n = to_int(p, "n");
                         require_n(n, 6);
                         return verify_colored_difference(n, m, {*to_sigma(p, n)}, t);
                     }});
        e.push_back({"colored-congruence", "A_RM = B_RM = product, per x", {{"n", "2"}, {"R", "1"}, {"M", "2"}}, 12,
                     [](const ParamMap& p, int m, unsigned t) {
                         return verify_colored_congruence(to_int(p, "n"), to_int(p, "R"), to_int(p, "M"), m, t);
                     }});
        e.push_back({"colored-gap", "A_M = B_M = product, per x", {{"n", "2"}, {"M", "2"}}, 12,
                     [](const ParamMap& p, int m, unsigned t) {
                         return verify_colored_gap(to_int(p, "n"), to_int(p, "M"), m, t);
                     }});
        e.push_back({"colored-conjugate", "A = B = C and conjugation maps B onto C", {{"n", "2"}}, 12,
                     [](const ParamMap& p, int m, unsigned t) { return verify_colored_conjugate(to_int(p, "n"), m, t); }});
        e.push_back({"schur", "distinct parts prime to 3 vs gap-3 partitions", {}, 40,
                     [](const ParamMap&, int m, unsigned t) { return verify_schur(m, t); }});
        e.push_back({"bressoud", "G_{r,k} = H_{r,k}", {{"r", "1"}, {"k", "2"}}, 30,
                     [](const ParamMap& p, int m, unsigned t) { return verify_bressoud(to_int(p, "r"), to_int(p, "k"), m, t); }});
        e.push_back({"andrews-olsson", "P_1 = P_2", {{"a", "1,2"}, {"N", "3"}}, 30,
                     [](const ParamMap& p, int m, unsigned t) {
                         return verify_andrews_olsson(to_list(p, "a"), to_int(p, "N"), m, t);
                     }});
        e.push_back({"andrews-distinct", "D = E with the v_A bounds", {{"a", "1,2"}, {"N", "3"}}, 24,
                     [](const ParamMap& p, int m, unsigned t) {
                         return verify_andrews_distinct(AndrewsSet(to_list(p, "a"), to_int(p, "N")), m, t);
                     }});
        e.push_back({"andrews-negative", "F = G with the v_A bounds", {{"a", "1,2"}, {"N", "3"}}, 24,
                     [](const ParamMap& p, int m, unsigned t) {
                         return verify_andrews_negative(AndrewsSet(to_list(p, "a"), to_int(p, "N")), m, t);
                     }});
        e.push_back({"dilated-sigma", "D = E_sigma", {{"a", "1,2"}, {"N", "3"}, {"sigma", "id"}}, 24,
                     [](const ParamMap& p, int m, unsigned t) {
                         const AndrewsSet A(to_list(p, "a"), to_int(p, "N"));
                         return verify_dilated_sigma(A, *to_sigma(p, A.n()), m, t);
                     }});
        e.push_back({"dilated-negative", "F = G_sigma", {{"a", "1,2"}, {"N", "3"}, {"sigma", "rev"}}, 24,
                     [](const ParamMap& p, int m, unsigned t) {
                         const AndrewsSet A(to_list(p, "a"), to_int(p, "N"));
                         return verify_dilated_negative(A, *to_sigma(p, A.n()), m, t);
                     }});
        e.push_back({"dilated-congruence", "D_RM = E_RM", {{"a", "1,2"}, {"N", "3"}, {"R", "1"}, {"M", "2"}}, 24,
                     [](const ParamMap& p, int m, unsigned t) {
                         return verify_dilated_congruence(AndrewsSet(to_list(p, "a"), to_int(p, "N")), to_int(p, "R"),
                                                          to_int(p, "M"), m, t);
                     }});
        e.push_back({"dilated-gap", "D_M = E_M", {{"a", "1,2"}, {"N", "3"}, {"M", "2"}}, 24,
                     [](const ParamMap& p, int m, unsigned t) {
                         return verify_dilated_gap(AndrewsSet(to_list(p, "a"), to_int(p, "N")), to_int(p, "M"), m, t);
                     }});
        e.push_back({"table-mod3", "residue-table class mod 3", {}, 30,
                     [](const ParamMap&, int m, unsigned t) { return verify_table_mod3(m, t); }});
        e.push_back({"table-mod7", "residue-table class mod 7", {}, 40,
                     [](const ParamMap&, int m, unsigned t) { return verify_table_mod7(m, t); }});
        e.push_back({"key-inequality", "N + v(y) > N delta(x,y) + x >= v(y) on random sets",
                     {{"sets", "100"}, {"n-max", "5"}, {"seed", "1"}}, 0,
                     [](const ParamMap& p, int, unsigned) {
                         return verify_key_inequality(to_int(p, "sets"), to_int(p, "n-max"),
                                                      static_cast<std::uint64_t>(to_int(p, "seed")));
                     }});
        return e;
    }();
    return entries;
}

const TheoremEntry* find_theorem(const std::string& name)
{
    for (const auto& e : theorem_registry())
        if (e.name == name)
            return &e;
    return nullptr;
}

IdentityReport run_theorem(const TheoremEntry& entry, const ParamMap& given, std::optional<int> m_max, unsigned threads)
{
    ParamMap p;
    for (const auto& [k, v] : entry.params)
        p[k] = v;
    for (const auto& [k, v] : given) {
        if (!p.count(k))
            throw std::invalid_argument(entry.name + " takes no --" + k);
        p[k] = v;
    }
    const int m = m_max.value_or(entry.default_m_max);
    if (m < 0)
        throw std::invalid_argument("--max-m must be >= 0");
    auto report = entry.run(p, m, threads);
    report.m_max = m;
    return report;
}

} // namespace partforge
