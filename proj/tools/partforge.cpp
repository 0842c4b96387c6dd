#include "partforge/bijection.hpp"
#include "partforge/conjugate.hpp"
#include "partforge/enumerate.hpp"
#include "partforge/qseries.hpp"
#include "partforge/registry.hpp"
#include "partforge/specialize.hpp"
#include "partforge/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace partforge;
using nlohmann::json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json violation_json(const Violation& v)
{
    return {{"index", v.index}, {"condition", v.condition}, {"detail", v.detail}};
}

Variant make_variant(const std::string& name, const std::string& sigma, int n, int R, int M)
{
    const auto family = parse_family(name);
    Variant v;
    switch (family) {
    case Family::A:
        v = Variant::a();
        break;
    case Family::A_RM:
        v = Variant::a_rm(R, M);
        break;
    case Family::A_M:
        v = Variant::a_m(M);
        break;
    case Family::B:
        if (sigma.empty() || sigma == "id")
            v = Variant::b();
        else if (sigma == "rev")
            v = Variant::b(Permutation::reversal(n));
        else
            v = Variant::b(Permutation(parse_int_list(sigma)));
        break;
    case Family::B_RM:
        v = Variant::b_rm(R, M);
        break;
    case Family::B_M:
        v = Variant::b_m(M);
        break;
    case Family::C:
        v = Variant::c();
        break;
    }
    return v;
}

// ---------------------------------------------------------------------------

struct EnumerateOpts {
    std::string variant = "A";
    int n = 1;
    std::string x;
    std::optional<int> m;
    std::optional<int> max_m;
    std::string sigma;
    int R = 1;
    int M = 1;
    std::string format = "tsv";
};

int run_enumerate(const EnumerateOpts& o)
{
    if (o.m.has_value() == o.max_m.has_value())
        throw Usage("give exactly one of --m and --max-m");
    const auto v = make_variant(o.variant, o.sigma, o.n, o.R, o.M);
    const auto x = parse_int_list(o.x);
    const int lo = o.m ? *o.m : 0;
    const int hi = o.m ? *o.m : *o.max_m;
    json items = json::array();
    std::uint64_t total = 0;
    for (int m = lo; m <= hi; ++m) {
        const CountQuery q{o.n, x, m, v};
        q.validate();
        auto emit = [&](const std::string& text, json j) {
            ++total;
            if (o.format == "json") {
                j["m"] = m;
                items.push_back(std::move(j));
            } else {
                std::cout << m << '\t' << text << '\n';
            }
        };
        if (v.is_tuple_side())
            for (const auto& t : enum_A(q))
                emit(format_tuple(t), to_json(t));
        else
            for (const auto& s : enum_partitions(q))
                emit(format_partition(s), to_json(s));
    }
    if (o.format == "json")
        std::cout << json{{"variant", v.label()}, {"n", o.n}, {"x", x}, {"m_min", lo}, {"m_max", hi},
                          {"count", total}, {"items", items}}
                         .dump(2)
                  << '\n';
    else
        std::cout << "count\t" << total << '\n';
    return exit_pass;
}

// ---------------------------------------------------------------------------

struct MapOpts {
    std::string direction = "forward";
    std::string input;
    std::optional<int> n;
    bool trace = false;
    bool trace_full = false;
    std::string format = "text";
};

void print_traces(const std::vector<StepTrace>& traces, TraceMode mode)
{
    for (const auto& t : traces) {
        if (traces.size() > 1)
            std::cout << "# n=" << t.n << '\n';
        for (const auto& line : render_trace(t, mode))
            std::cout << line << '\n';
    }
}

int run_map(const MapOpts& o)
{
    const bool tracing = o.trace || o.trace_full;
    const auto mode = o.trace_full ? TraceMode::full : TraceMode::steps;
    std::string out;
    json j;
    if (o.direction == "forward") {
        const auto t = parse_tuple(o.input);
        if (o.n && *o.n != t.n())
            throw Usage("--n disagrees with the number of tuple segments");
        std::vector<StepTrace> traces;
        const auto b = forward(t, traces);
        if (tracing && o.format == "text")
            print_traces(traces, mode);
        out = format_partition(b);
        j = {{"input", to_json(t)}, {"output", to_json(b)}};
    } else if (o.direction == "inverse") {
        if (!o.n)
            throw Usage("inverse needs --n");
        const auto b = parse_partition(o.input, max_color(*o.n));
        const auto t = inverse(b, *o.n);
        out = format_tuple(t);
        j = {{"input", to_json(b)}, {"output", to_json(t)}};
    } else if (o.direction == "step") {
        if (!o.n)
            throw Usage("step needs --n");
        const auto bar = o.input.find('|');
        if (bar == std::string::npos)
            throw Usage("step input is 'lambda|tau'");
        const auto lambda = parse_partition(o.input.substr(0, bar), max_color(*o.n - 1));
        const auto tau_t = parse_tuple(o.input.substr(bar + 1));
        if (tau_t.n() != 1)
            throw Usage("step input is 'lambda|tau'");
        const auto res = ag_step(lambda, tau_t.mus[0], *o.n);
        if (tracing && o.format == "text")
            print_traces({res.trace}, mode);
        out = format_partition(res.partition);
        j = {{"output", to_json(res.partition)}};
    } else {
        throw Usage("--direction is forward, inverse or step");
    }
    if (o.format == "json")
        std::cout << j.dump() << '\n';
    else
        std::cout << out << '\n';
    return exit_pass;
}

// ---------------------------------------------------------------------------

struct ConjugateOpts {
    std::string input;
    int n = 1;
    bool inverse = false;
    bool diagram = false;
};

int run_conjugate(const ConjugateOpts& o)
{
    if (o.inverse) {
        const auto c = parse_partition(o.input, static_cast<std::uint32_t>(o.n));
        const auto b = conjugate_inverse(c, o.n);
        if (o.diagram)
            std::cout << render_diagram(to_diagram(b));
        std::cout << format_partition(b) << '\n';
        return exit_pass;
    }
    const auto b = parse_partition(o.input, max_color(o.n));
    const auto c = conjugate(b, o.n);
    if (o.diagram)
        std::cout << render_diagram(to_diagram(b));
    std::cout << format_partition(c) << '\n';
    return exit_pass;
}

// ---------------------------------------------------------------------------

struct QseriesOpts {
    std::string product = "plain";
    int n = 1;
    int max_m = 10;
    int R = 1;
    int M = 1;
    std::string a;
    std::optional<int> N;
    std::string dilate;
};

int run_qseries(const QseriesOpts& o)
{
    std::optional<Series> s;
    if (o.product == "plain")
        s.emplace(product_plain(o.n, o.max_m));
    else if (o.product == "rm")
        s.emplace(product_RM(o.n, o.R, o.M, o.max_m));
    else if (o.product == "gap")
        s.emplace(product_gap(o.n, o.M, o.max_m));
    else
        throw Usage("--product is plain, rm or gap");
    std::cout << "x\tm\tcoeff\n";
    if (o.dilate.empty()) {
        for (int m = 0; m <= o.max_m; ++m)
            for (const auto& [x, c] : s->at(m))
                std::cout << format_int_list(x) << '\t' << m << '\t' << c << '\n';
        return exit_pass;
    }
    if (!o.N || o.a.empty())
        throw Usage("--dilate needs --a and --N");
    const auto mode = o.dilate == "pos" ? DilationMode::pos
                      : o.dilate == "neg" ? DilationMode::neg
                                          : throw Usage("--dilate is pos or neg");
    const auto d = substitute_dilation(*s, parse_int_list(o.a), *o.N, mode);
    for (int m = 0; m <= o.max_m; ++m)
        for (const auto& [x, c] : d.at(m))
            std::cout << format_int_list(x) << '\t' << m << '\t' << c << '\n';
    return exit_pass;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
    std::string name;
    std::optional<int> max_m;
    std::string format = "json";
    bool list = false;
    ParamMap params;
};

int run_verify(const VerifyOpts& o)
{
    if (o.list || o.name.empty()) {
        for (const auto& e : theorem_registry()) {
            std::cout << e.name << '\t' << e.summary;
            for (const auto& [k, v] : e.params)
                std::cout << " --" << k << ' ' << v;
            std::cout << '\n';
        }
        return o.name.empty() && !o.list ? exit_usage : exit_pass;
    }
    const auto* entry = find_theorem(o.name);
    if (!entry)
        throw Usage("unknown theorem '" + o.name + "' (see verify --list)");
    const auto report = run_theorem(*entry, o.params, o.max_m, threads_from_env());
    if (o.format == "tsv")
        std::cout << to_tsv(report);
    else
        std::cout << to_json(report).dump(2) << '\n';
    return report.passed() ? exit_pass : exit_violation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Colored partition bijections and identity checks"};
    app.require_subcommand(1);

    EnumerateOpts eo;
    auto* en = app.add_subcommand("enumerate", "list a partition class");
    en->add_option("--variant", eo.variant, "A, A_RM, A_M, B, B_RM, B_M or C");
    en->add_option("--n", eo.n, "number of ground colors")->required();
    en->add_option("--x", eo.x, "x-vector, comma separated")->required();
    en->add_option("--m", eo.m, "weight");
    en->add_option("--max-m", eo.max_m, "every weight up to this");
    en->add_option("--sigma", eo.sigma, "permutation for B: id, rev or images");
    en->add_option("--R", eo.R, "residue for the congruence variants");
    en->add_option("--M", eo.M, "modulus or gap for the refined variants");
    en->add_option("--format", eo.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    MapOpts mo;
    auto* mp = app.add_subcommand("map", "run the bijection");
    mp->add_option("--direction", mo.direction, "forward, inverse or step")
        ->check(CLI::IsMember({"forward", "inverse", "step"}));
    mp->add_option("input", mo.input, "tuple 'mu_1|...|mu_n', partition, or 'lambda|tau' for step")->required();
    mp->add_option("--n", mo.n, "number of ground colors");
    mp->add_flag("--trace", mo.trace, "print one snapshot per step");
    mp->add_flag("--trace-full", mo.trace_full, "print every snapshot");
    mp->add_option("--format", mo.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    ConjugateOpts co;
    auto* cj = app.add_subcommand("conjugate", "colored Ferrers conjugation");
    cj->add_option("input", co.input, "partition")->required();
    cj->add_option("--n", co.n, "number of ground colors")->required();
    cj->add_flag("--inverse", co.inverse, "map a conjugate-class partition back");
    cj->add_flag("--diagram", co.diagram, "print the subscripted diagram first");

    QseriesOpts qo;
    auto* qs = app.add_subcommand("qseries", "coefficients of the product generating functions");
    qs->add_option("--product", qo.product, "plain, rm or gap")->check(CLI::IsMember({"plain", "rm", "gap"}));
    qs->add_option("--n", qo.n, "number of y variables")->required();
    qs->add_option("--max-m", qo.max_m, "truncation order")->required();
    qs->add_option("--R", qo.R, "residue (rm)");
    qs->add_option("--M", qo.M, "modulus (rm) or gap (gap)");
    qs->add_option("--a", qo.a, "residues for a dilation");
    qs->add_option("--N", qo.N, "modulus for a dilation");
    qs->add_option("--dilate", qo.dilate, "pos or neg");

    VerifyOpts vo;
    auto* vf = app.add_subcommand("verify", "check a named identity up to a weight");
    vf->add_option("name", vo.name, "identity name");
    vf->add_option("--max-m", vo.max_m, "largest weight");
    vf->add_option("--format", vo.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    vf->add_flag("--list", vo.list, "list identities and their parameters");
    std::map<std::string, std::string> raw;
    for (const char* key : {"n", "r", "k", "a", "N", "R", "M", "sigma", "sets", "n-max", "seed"})
        vf->add_option(std::string("--") + key, raw[key], "identity parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (en->parsed())
            return run_enumerate(eo);
        if (mp->parsed())
            return run_map(mo);
        if (cj->parsed())
            return run_conjugate(co);
        if (qs->parsed())
            return run_qseries(qo);
        for (const auto& [k, v] : raw)
            if (vf->count("--" + k))
                vo.params[k] = v;
        return run_verify(vo);
    } catch (const RejectedInput& e) {
        std::cout << json{{"status", "violation"}, {"error", e.what()}, {"violation", violation_json(e.violation)}}.dump()
                  << '\n';
        return exit_violation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
