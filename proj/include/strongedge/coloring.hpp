#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongedge/graph.hpp"

namespace strongedge {

using Color = int;   // 1..k; 0 means uncolored

/// Palette {1..k} plus a per-edge optional color.
struct PartialColoring {
    int k = 0;
    std::vector<Color> assignment;

    PartialColoring() = default;
    PartialColoring(int palette, int edges) : k(palette), assignment(edges, 0) {}

    bool colored(EdgeId e) const { return assignment.at(e) != 0; }
    int colored_count() const;
    bool total() const { return colored_count() == static_cast<int>(assignment.size()); }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;
};

struct Violation {
    EdgeId first;
    EdgeId second;
    Color color;
};

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Throws std::out_of_range when a color lies outside [1,k] or the assignment has the wrong length.
ValidityReport is_valid_strong_coloring(const ConflictGraph& cg, const PartialColoring& c);

/// L_f(e): palette colors not used on any edge e sees. e's own color is ignored.
std::vector<Color> available_colors(const ConflictGraph& cg, const PartialColoring& c, EdgeId e);

struct GreedyResult {
    bool success = false;
    PartialColoring coloring;
    /// Edges in the order they were colored.
    std::vector<EdgeId> order;
    /// First edge found with an empty list, -1 on success.
    EdgeId stuck = -1;
};

/// Colors targets one at a time, always picking the target with the fewest available colors
/// (ties by edge id) and giving it its smallest available color.
GreedyResult greedy_extend(const ConflictGraph& cg, const PartialColoring& c, const std::vector<EdgeId>& targets);

/// Subsets of {1..universe}.
struct SetFamily {
    int universe = 0;
    std::vector<std::vector<int>> sets;
};

struct SdrResult {
    bool exists = false;
    /// representatives[i] in sets[i], pairwise distinct (when exists).
    std::vector<int> representatives;
    /// Indices I (0-based, ascending) with |union of sets[I]| < |I| (when not exists).
    std::vector<int> violator;
};

/// System of distinct representatives by bipartite matching, or a Hall violator.
SdrResult hall_sdr(const SetFamily& family);

enum class ExtendStrategy { None, SameColor, HallSdr, Greedy };

std::string_view strategy_name(ExtendStrategy s);

struct ExtendResult {
    bool success = false;
    ExtendStrategy strategy = ExtendStrategy::None;
    PartialColoring coloring;
    /// Lists of every edge to be colored, computed right after erasure.
    std::vector<std::pair<EdgeId, std::vector<Color>>> lists;
    /// For SameColor: the two mutually non-seeing edges that share a color.
    std::optional<std::pair<EdgeId, EdgeId>> shared_pair;
    std::vector<std::string> attempts;
};

/// Erases the colors on `erase`, then colors erase + targets by trying, in order: one color
/// shared by a mutually non-seeing pair followed by greedy, a system of distinct representatives
/// over the lists, and plain greedy. Throws std::invalid_argument when an erase edge is uncolored
/// or a target is already colored.
ExtendResult erase_and_extend(const ConflictGraph& cg, const PartialColoring& c, const std::vector<EdgeId>& erase,
                              const std::vector<EdgeId>& targets);

enum class SolveStatus { Sat, Unsat, Timeout };

std::string_view status_name(SolveStatus s);

struct SolveStats {
    std::uint64_t nodes = 0;
    std::int64_t time_ms = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unsat;
    PartialColoring coloring;
    SolveStats stats;
};

using Budget = std::chrono::duration<double>;
inline constexpr Budget default_budget{10.0};

/// Exact decision: total strong k-edge-coloring or proof that none exists. DSATUR-ordered
/// branching (largest saturation, then most uncolored conflicts, then smallest edge id),
/// colors ascending, new colors opened one at a time.
SolveResult k_colorable(const ConflictGraph& cg, int k, Budget budget = default_budget);

struct ChiResult {
    SolveStatus status = SolveStatus::Sat;   // Sat: exact value found; Timeout: only [lower, upper] known
    int chi = 0;
    int lower = 0;
    int upper = 0;
    PartialColoring certificate;
    SolveStats stats;
};

ChiResult chi_s_exact(const ConflictGraph& cg, Budget budget = default_budget);

/// Greedy clique in the conflict graph (a lower bound on the strong chromatic index).
std::vector<EdgeId> greedy_clique(const ConflictGraph& cg);

/// DSATUR greedy coloring (an upper bound).
PartialColoring dsatur_coloring(const ConflictGraph& cg);

} // namespace strongedge
