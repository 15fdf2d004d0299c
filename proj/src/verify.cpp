#include "strongedge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "strongedge/configurations.hpp"
#include "strongedge/discharging.hpp"
#include "strongedge/enumerate.hpp"

namespace strongedge {

namespace {

nlohmann::ordered_json rational_json(const Rational& r)
{
    nlohmann::ordered_json j;
    j["num"] = r.num().str();
    j["den"] = r.den().str();
    return j;
}

} // namespace

Scheme theorem_scheme(int theorem)
{
    if (theorem == 1)
        return Scheme::Theta7;
    if (theorem == 2)
        return Scheme::Theta8;
    throw std::invalid_argument("theorem must be 1 or 2");
}

std::optional<std::string> hypothesis_rejection(const Graph& g, int theorem)
{
    Scheme s = theorem_scheme(theorem);
    if (g.order() == 0 || !g.connected())
        return "disconnected";
    if (g.size() == 0)
        return "no edges";
    int theta = ore_degree(g);
    if (theta > scheme_theta(s))
        return "theta " + std::to_string(theta) + " > " + std::to_string(scheme_theta(s));
    Rational mad = mad_exact(g).value;
    if (mad >= scheme_target(s))
        return "mad " + mad.str() + " >= " + scheme_target(s).str();
    return std::nullopt;
}

GraphRecord check_graph(const Graph& g, int theorem, Budget budget)
{
    Scheme s = theorem_scheme(theorem);
    GraphRecord r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.theta = ore_degree(g);
    r.mad = mad_exact(g).value;
    r.bound = scheme_palette(s);

    auto chi = chi_s_exact(ConflictGraph(g), budget);
    r.status = chi.status;
    r.chi_lower = chi.lower;
    r.chi_upper = chi.upper;
    if (chi.status == SolveStatus::Sat) {
        r.chi_s = chi.chi;
        r.pass = chi.chi <= r.bound;
    } else if (chi.upper <= r.bound) {
        // An explicit coloring within the bound settles the theorem even without the exact value.
        r.status = SolveStatus::Sat;
        r.chi_s = chi.upper;
        r.pass = true;
    }

    auto labels = classify(g, s).labels;
    for (const auto& m : find_configurations(g, s, labels))
        if (r.configurations_found.empty() || r.configurations_found.back() != m.pattern_id)
            r.configurations_found.push_back(m.pattern_id);
    auto ledger = apply_rules(g, labels, builtin_ruleset(s));
    r.discharge_negatives = static_cast<int>(audit_negative(ledger, g, labels, s).size());
    return r;
}

std::vector<Graph> enumerated_corpus(int max_n)
{
    if (max_n < 1 || max_n > max_enumeration_order)
        throw std::out_of_range("--max-n must lie in [1, " + std::to_string(max_enumeration_order) + "]");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = enumerate_connected(n);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

VerificationReport verify_theorem(int theorem, const std::vector<Graph>& corpus, std::string corpus_descriptor,
                                  const VerifyOptions& options)
{
    auto start = std::chrono::steady_clock::now();
    Scheme s = theorem_scheme(theorem);
    VerificationReport report;
    report.theorem = theorem;
    report.corpus = std::move(corpus_descriptor);
    report.target = scheme_target(s);
    report.bound = scheme_palette(s);
    report.max_theta = scheme_theta(s);

    std::vector<std::optional<GraphRecord>> records(corpus.size());
    std::vector<std::optional<FilteredGraph>> filtered(corpus.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            try {
                const Graph& g = corpus[i];
                if (auto reason = hypothesis_rejection(g, theorem))
                    filtered[i] = FilteredGraph{to_graph6(g), *reason};
                else
                    records[i] = check_graph(g, theorem, options.budget);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = static_cast<int>(std::min<std::size_t>(jobs, std::max<std::size_t>(corpus.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    for (auto& r : records)
        if (r)
            report.records.push_back(std::move(*r));
    for (auto& f : filtered)
        if (f)
            report.filtered.push_back(std::move(*f));
    std::sort(report.records.begin(), report.records.end(),
              [](const GraphRecord& a, const GraphRecord& b) { return a.graph6 < b.graph6; });
    std::sort(report.filtered.begin(), report.filtered.end(),
              [](const FilteredGraph& a, const FilteredGraph& b) { return a.graph6 < b.graph6; });

    auto& sum = report.summary;
    sum.corpus = static_cast<int>(corpus.size());
    sum.admitted = static_cast<int>(report.records.size());
    sum.filtered = static_cast<int>(report.filtered.size());
    for (const auto& r : report.records) {
        if (r.status == SolveStatus::Timeout) {
            ++sum.timeouts;
            report.timeouts.push_back(r.graph6);
        } else if (r.pass) {
            ++sum.passed;
        } else {
            ++sum.failed;
        }
        if (r.configurations_found.empty())
            ++sum.without_configuration;
    }
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_json(const VerificationReport& report, bool with_wall_time)
{
    nlohmann::ordered_json j;
    j["schema"] = report_schema;
    j["tool_version"] = tool_version;
    j["theorem"] = report.theorem;
    j["corpus"] = report.corpus;
    j["hypothesis"] = {{"max_theta", report.max_theta}, {"mad_below", rational_json(report.target)}};
    j["bound"] = report.bound;

    auto& s = j["summary"];
    s["corpus"] = report.summary.corpus;
    s["admitted"] = report.summary.admitted;
    s["filtered"] = report.summary.filtered;
    s["passed"] = report.summary.passed;
    s["failed"] = report.summary.failed;
    s["timeouts"] = report.summary.timeouts;
    s["without_configuration"] = report.summary.without_configuration;

    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json o;
        o["graph6"] = r.graph6;
        o["n"] = r.n;
        o["m"] = r.m;
        o["theta"] = r.theta;
        o["mad"] = rational_json(r.mad);
        o["status"] = status_name(r.status);
        if (r.status == SolveStatus::Sat)
            o["chi_s"] = r.chi_s;
        else
            o["chi_s"] = nullptr;
        o["chi_s_bounds"] = {r.chi_lower, r.chi_upper};
        o["bound"] = r.bound;
        if (r.status == SolveStatus::Sat)
            o["pass"] = r.pass;
        else
            o["pass"] = nullptr;
        o["configurations_found"] = r.configurations_found;
        o["discharge_negatives"] = r.discharge_negatives;
        j["records"].push_back(std::move(o));
    }
    j["filtered"] = nlohmann::ordered_json::array();
    for (const auto& f : report.filtered)
        j["filtered"].push_back({{"graph6", f.graph6}, {"reason", f.reason}});
    j["timeouts"] = report.timeouts;
    if (with_wall_time)
        j["wall_time_ms"] = report.wall_time_ms;
    return j.dump(2) + "\n";
}

void emit_report(const VerificationReport& report, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << report_to_json(report);
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

int exit_status(const VerificationReport& report) { return report.summary.failed > 0 ? 2 : 0; }

} // namespace strongedge
