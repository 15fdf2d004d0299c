#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"
#include "strongedge/metrics.hpp"
#include "strongedge/rational.hpp"

namespace strongedge {

inline constexpr std::string_view tool_version = "0.3.0";
inline constexpr std::string_view report_schema = "strongedge-report/1";

/// Theorem 1 is the theta <= 7 statement (palette 13), theorem 2 the theta <= 8 one (palette 20).
Scheme theorem_scheme(int theorem);

struct GraphRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int theta = 0;
    Rational mad;
    SolveStatus status = SolveStatus::Sat;
    int chi_s = 0;        // exact value when status is Sat
    int chi_lower = 0;
    int chi_upper = 0;
    int bound = 0;
    bool pass = false;    // chi_s <= bound; false for timeouts, which are not failures
    std::vector<std::string> configurations_found;   // distinct catalog ids present
    int discharge_negatives = 0;
};

struct FilteredGraph {
    std::string graph6;
    std::string reason;
};

struct VerifySummary {
    int corpus = 0;
    int admitted = 0;
    int filtered = 0;
    int passed = 0;
    int failed = 0;
    int timeouts = 0;
    /// Admitted graphs in which no catalog configuration was found.
    int without_configuration = 0;
};

struct VerificationReport {
    int theorem = 1;
    std::string corpus;
    Rational target;
    int bound = 0;
    int max_theta = 0;
    std::vector<GraphRecord> records;    // ascending graph6
    std::vector<FilteredGraph> filtered; // ascending graph6
    std::vector<std::string> timeouts;   // ascending graph6
    VerifySummary summary;
    std::int64_t wall_time_ms = 0;
};

struct VerifyOptions {
    Budget budget = default_budget;
    /// Worker threads; 0 means hardware concurrency.
    int jobs = 0;
};

/// The theorem's hypothesis for one graph: nullopt when admitted, otherwise the reason it is not.
std::optional<std::string> hypothesis_rejection(const Graph& g, int theorem);

/// Full pipeline for one admitted graph (metrics, exact strong chromatic index, configurations, discharging).
GraphRecord check_graph(const Graph& g, int theorem, Budget budget);

VerificationReport verify_theorem(int theorem, const std::vector<Graph>& corpus, std::string corpus_descriptor,
                                  const VerifyOptions& options = {});

/// Connected graphs on 1..max_n vertices from the built-in enumerator.
std::vector<Graph> enumerated_corpus(int max_n);

/// Deterministic JSON rendering; the wall-time field is omitted when `with_wall_time` is false.
std::string report_to_json(const VerificationReport& report, bool with_wall_time = true);

/// Writes report_to_json to `path`; throws std::runtime_error on I/O failure.
void emit_report(const VerificationReport& report, const std::string& path);

/// Process exit status for a report: 0 clean, 2 when any admitted graph fails its bound.
int exit_status(const VerificationReport& report);

} // namespace strongedge
