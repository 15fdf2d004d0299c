// Command-line front end: metrics, coloring, configuration search, discharging and
// desk-scale theorem verification. Every subcommand prints JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongedge/coloring.hpp"
#include "strongedge/configurations.hpp"
#include "strongedge/discharging.hpp"
#include "strongedge/graph.hpp"
#include "strongedge/metrics.hpp"
#include "strongedge/verify.hpp"

using namespace strongedge;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_config = 3;

/// Input or flag problem; reported on stderr with exit status 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format;
    std::string out;
    int jobs = 0;
    double budget = default_budget.count();
    std::string scheme = "theta7";
};

std::string slurp(const std::string& path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<Graph> read_graphs(const std::string& path, std::string format)
{
    if (format.empty()) {
        if (path.ends_with(".g6"))
            format = "graph6";
        else if (path.ends_with(".edges"))
            format = "edges";
        else
            throw UsageError("cannot infer the format of '" + path + "'; pass --format graph6|edges");
    }
    std::string text = slurp(path);
    std::vector<Graph> out;
    if (format == "edges") {
        out.push_back(parse_edge_list(text));
    } else if (format == "graph6") {
        std::istringstream lines(text);
        std::string line;
        int lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            try {
                out.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(path + " line " + std::to_string(lineno) + ": " + e.what(), e.offset());
            }
        }
    } else {
        throw UsageError("unknown format '" + format + "'");
    }
    return out;
}

json rational_json(const Rational& r) { return {{"num", r.num().str()}, {"den", r.den().str()}}; }

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

void emit(const json& j, const std::string& out)
{
    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text))
        throw std::runtime_error("cannot write '" + out + "'");
}

/// One graph gives an object, several give an array.
json collect(const std::vector<Graph>& graphs, const std::function<json(const Graph&)>& one)
{
    if (graphs.size() == 1)
        return one(graphs.front());
    json all = json::array();
    for (const auto& g : graphs)
        all.push_back(one(g));
    return all;
}

json classes_json(const Classification& c)
{
    json by_label = json::object();
    for (Vertex v = 0; v < static_cast<int>(c.labels.size()); ++v)
        by_label[std::string(label_name(c.labels[v]))].push_back(v);
    return {{"labels", by_label}, {"warnings", c.warnings}, {"side_assertion_failures", c.side_assertion_failures}};
}

json metrics_json(const Graph& g)
{
    json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["delta"] = g.max_degree();
    if (g.size() == 0) {
        j["theta"] = nullptr;
        j["mad"] = nullptr;
    } else {
        j["theta"] = ore_degree(g);
        auto mad = mad_exact(g);
        json m = rational_json(mad.value);
        m["witness"] = mad.witness;
        j["mad"] = m;
    }
    j["classes_theta7"] = classes_json(classify_theta7(g));
    j["classes_theta8"] = classes_json(classify_theta8(g));
    return j;
}

json coloring_json(const Graph& g, const PartialColoring& c)
{
    json arr = json::array();
    for (EdgeId e = 0; e < g.size(); ++e)
        arr.push_back({{"edge", edge_json(g.edge(e))}, {"color", c.assignment[e]}});
    return arr;
}

json stats_json(const SolveStats& s) { return {{"nodes", s.nodes}, {"time_ms", s.time_ms}}; }

PartialColoring read_coloring(const Graph& g, const std::string& path, int k_flag)
{
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("coloring file is not valid JSON: ") + e.what());
    }
    const json& list = j.is_object() ? j.at("coloring") : j;
    if (!list.is_array())
        throw UsageError("coloring must be an array of {edge:[u,v], color}");
    int k = k_flag;
    if (k <= 0 && j.is_object() && j.contains("k"))
        k = j.at("k").get<int>();
    PartialColoring c(0, g.size());
    int max_color = 0;
    for (const auto& item : list) {
        auto ends = item.at("edge");
        EdgeId e = g.edge_id(ends.at(0).get<int>(), ends.at(1).get<int>());
        if (e < 0)
            throw UsageError("coloring mentions non-edge " + ends.dump());
        c.assignment[e] = item.at("color").get<int>();
        max_color = std::max(max_color, c.assignment[e]);
    }
    c.k = k > 0 ? k : max_color;
    return c;
}

int cmd_metrics(const std::string& file, const Common& o)
{
    emit(collect(read_graphs(file, o.format), metrics_json), o.out);
    return 0;
}

int cmd_color(const std::string& file, const Common& o, int k, bool exact)
{
    Budget budget{o.budget};
    auto one = [&](const Graph& g) {
        ConflictGraph cg(g);
        json j;
        j["graph6"] = to_graph6(g);
        if (k > 0 && !exact) {
            auto r = k_colorable(cg, k, budget);
            j["k"] = k;
            j["status"] = status_name(r.status);
            if (r.status == SolveStatus::Timeout)
                j["sat"] = nullptr;
            else
                j["sat"] = r.status == SolveStatus::Sat;
            j["coloring"] = r.status == SolveStatus::Sat ? coloring_json(g, r.coloring) : json::array();
            j["stats"] = stats_json(r.stats);
        } else {
            auto r = chi_s_exact(cg, budget);
            j["status"] = status_name(r.status);
            if (r.status == SolveStatus::Sat)
                j["chi_s"] = r.chi;
            else
                j["chi_s"] = nullptr;
            j["lower"] = r.lower;
            j["upper"] = r.upper;
            j["coloring"] = coloring_json(g, r.certificate);
            j["stats"] = stats_json(r.stats);
        }
        return j;
    };
    emit(collect(read_graphs(file, o.format), one), o.out);
    return 0;
}

int cmd_check(const std::string& file, const Common& o, const std::string& coloring_path, int k)
{
    auto graphs = read_graphs(file, o.format);
    if (graphs.size() != 1)
        throw UsageError("check expects exactly one graph");
    const Graph& g = graphs.front();
    auto c = read_coloring(g, coloring_path, k);
    ConflictGraph cg(g);
    ValidityReport report;
    try {
        report = is_valid_strong_coloring(cg, c);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    json j;
    j["valid"] = report.valid;
    j["complete"] = c.total();
    j["k"] = c.k;
    j["violations"] = json::array();
    for (const auto& v : report.violations)
        j["violations"].push_back({{"first", edge_json(g.edge(v.first))},
                                   {"second", edge_json(g.edge(v.second))},
                                   {"color", v.color}});
    emit(j, o.out);
    return report.valid ? 0 : 1;
}

json reducibility_json(const Graph& g, const ReducibilityReport& r)
{
    json j;
    j["verdict"] = verdict_name(r.verdict);
    j["variant"] = r.variant;
    j["palette"] = r.palette;
    j["deleted"] = r.deleted;
    json erased = json::array();
    for (const auto& e : r.erased)
        erased.push_back(edge_json(e));
    j["erased"] = erased;
    j["strategy"] = strategy_name(r.strategy);
    j["bounds_respected"] = r.bounds_respected;
    j["observations"] = json::array();
    for (const auto& ob : r.observations) {
        json o;
        o["role"] = ob.role;
        o["edge"] = edge_json(ob.edge);
        o["sees_before"] = ob.sees_before;
        o["list_before"] = ob.list_before;
        o["sees_after"] = ob.sees_after;
        o["list_after"] = ob.list_after;
        o["bound_before"] = ob.bound_before < 0 ? json(nullptr) : json(ob.bound_before);
        o["bound_after"] = ob.bound_after < 0 ? json(nullptr) : json(ob.bound_after);
        o["within_bounds"] = ob.within_bounds;
        j["observations"].push_back(std::move(o));
    }
    j["notes"] = r.notes;
    if (r.verdict == ReducibilityVerdict::Extended)
        j["extension"] = coloring_json(g, r.extension);
    j["stats"] = stats_json(r.stats);
    return j;
}

int cmd_configs(const std::string& file, const Common& o, bool verify)
{
    Scheme s = parse_scheme(o.scheme);
    Budget budget{o.budget};
    auto one = [&](const Graph& g) {
        auto labels = classify(g, s).labels;
        json j;
        j["graph6"] = to_graph6(g);
        j["scheme"] = scheme_name(s);
        j["matches"] = json::array();
        for (const auto& m : find_configurations(g, s, labels)) {
            const Pattern& p = find_pattern(m.pattern_id);
            json mj;
            mj["pattern"] = p.id;
            mj["name"] = p.name;
            json roles = json::object();
            for (std::size_t i = 0; i < p.nodes.size(); ++i)
                roles[p.nodes[i].name] = m.assignment[i];
            mj["assignment"] = roles;
            if (verify)
                mj["reducibility"] = reducibility_json(g, verify_reducibility(g, m, budget));
            j["matches"].push_back(std::move(mj));
        }
        return j;
    };
    emit(collect(read_graphs(file, o.format), one), o.out);
    return 0;
}

int cmd_discharge(const std::string& file, const Common& o, const std::string& rules_path)
{
    RuleSet rules = rules_path.empty() ? builtin_ruleset(parse_scheme(o.scheme)) : parse_ruleset(slurp(rules_path));
    auto one = [&](const Graph& g) {
        auto labels = classify(g, rules.scheme).labels;
        auto ledger = apply_rules(g, labels, rules);
        json j;
        j["graph6"] = to_graph6(g);
        j["scheme"] = scheme_name(rules.scheme);
        j["target"] = rules.target.str();
        j["sum_initial"] = rational_json(ledger.sum_initial());
        j["sum_final"] = rational_json(ledger.sum_final());
        j["vertices"] = json::array();
        for (Vertex v = 0; v < g.order(); ++v)
            j["vertices"].push_back({{"v", v},
                                     {"label", label_name(labels[v])},
                                     {"initial", rational_json(ledger.initial[v])},
                                     {"final", rational_json(ledger.final[v])}});
        j["transfers"] = json::array();
        for (const auto& t : ledger.transfers)
            j["transfers"].push_back(
                {{"rule", t.rule}, {"from", t.sender}, {"to", t.receiver}, {"amount", rational_json(t.amount)}});
        j["negatives"] = json::array();
        for (const auto& n : audit_negative(ledger, g, labels, rules.scheme))
            j["negatives"].push_back({{"v", n.vertex}, {"final", rational_json(n.charge)}, {"diagnoses", n.diagnoses}});
        return j;
    };
    emit(collect(read_graphs(file, o.format), one), o.out);
    return 0;
}

int cmd_verify(const Common& o, int theorem, int max_n, const std::string& corpus_path)
{
    std::vector<Graph> corpus;
    std::string descriptor;
    if (!corpus_path.empty()) {
        corpus = read_graphs(corpus_path, o.format);
        descriptor = "file:" + corpus_path;
    } else {
        corpus = enumerated_corpus(max_n);
        descriptor = "connected graphs, 1 <= n <= " + std::to_string(max_n);
    }
    VerifyOptions options;
    options.budget = Budget{o.budget};
    options.jobs = o.jobs;
    auto report = verify_theorem(theorem, corpus, descriptor, options);
    if (o.out.empty())
        std::cout << report_to_json(report);
    else
        emit_report(report, o.out);
    const auto& s = report.summary;
    std::cerr << "theorem " << theorem << ": " << s.admitted << " admitted, " << s.filtered << " filtered, " << s.passed
              << " passed, " << s.failed << " failed, " << s.timeouts << " timeouts\n";
    return exit_status(report);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Strong edge-coloring toolkit: exact invariants, configurations, discharging, verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    Common o;
    std::string file, coloring_path, rules_path, corpus_path;
    int k = 0, theorem = 1, max_n = 7;
    bool exact = false, verify = false;

    auto common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file)
            sub->add_option("file", file, "Input graph file (graph6 lines or edge list; '-' for stdin)")->required();
        sub->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"graph6", "edges"}));
        sub->add_option("--out", o.out, "Write JSON here instead of stdout");
        sub->add_option("--budget", o.budget, "Per-search time budget in seconds")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", o.jobs, "Worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);
        sub->add_option("--scheme", o.scheme, "Classification scheme")->check(CLI::IsMember({"theta7", "theta8"}));
    };

    auto* metrics = app.add_subcommand("metrics", "Order, size, Ore-degree, exact mad, vertex classes");
    common(metrics, true);
    auto* color = app.add_subcommand("color", "Exact strong chromatic index, or a k-coloring with --k");
    common(color, true);
    color->add_option("--k", k, "Decide strong k-colorability")->check(CLI::PositiveNumber);
    color->add_flag("--exact", exact, "Compute the strong chromatic index even when --k is given");
    auto* check = app.add_subcommand("check", "Validate a strong edge-coloring");
    common(check, true);
    check->add_option("--coloring", coloring_path, "JSON coloring as written by 'color'")->required();
    check->add_option("--k", k, "Palette size (default: file's k or the largest color)");
    auto* configs = app.add_subcommand("configs", "Find catalog configurations");
    common(configs, true);
    configs->add_flag("--verify", verify, "Replay each match's reducibility recipe");
    auto* discharge = app.add_subcommand("discharge", "Run the discharging rules and audit negative charges");
    common(discharge, true);
    discharge->add_option("--rules", rules_path, "Custom rule set (JSON)");
    auto* verify_cmd = app.add_subcommand("verify", "Check a theorem over a corpus");
    common(verify_cmd, false);
    verify_cmd->add_option("--theorem", theorem, "1 (theta <= 7) or 2 (theta <= 8)")->check(CLI::IsMember({1, 2}));
    auto* max_n_opt = verify_cmd->add_option("--max-n", max_n, "Enumerate connected graphs up to this order")
                          ->check(CLI::Range(1, 9));
    verify_cmd->add_option("--corpus", corpus_path, "graph6 corpus file")->excludes(max_n_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try {
        if (*metrics)
            return cmd_metrics(file, o);
        if (*color)
            return cmd_color(file, o, k, exact);
        if (*check)
            return cmd_check(file, o, coloring_path, k);
        if (*configs)
            return cmd_configs(file, o, verify);
        if (*discharge)
            return cmd_discharge(file, o, rules_path);
        return cmd_verify(o, theorem, max_n, corpus_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_config;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
