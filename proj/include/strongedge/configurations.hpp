#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"
#include "strongedge/metrics.hpp"

namespace strongedge {

/// Degree and class requirements on a single pattern node. Empty lists admit anything.
struct NodeConstraint {
    std::vector<int> degrees;
    bool exclude_degrees = false;
    std::vector<Label> labels;
    bool exclude_labels = false;

    bool admits(int degree, Label label) const;
    std::string describe() const;

    friend bool operator==(const NodeConstraint&, const NodeConstraint&) = default;
};

struct PatternNode {
    std::string name;
    NodeConstraint constraint;
};

struct ConfigurationMatch;

/// One edge the reducibility recipe makes a claim about: how many edges it may see in G - v
/// before the erase step and how many colored edges it may see after it (-1: no claim).
struct EdgeBound {
    std::string role;
    Edge edge;
    int sees_before = -1;
    int sees_after = -1;
};

/// A concrete deletion/erase/extend plan for one match.
struct RecipePlan {
    std::string variant;
    Vertex deleted = -1;
    std::vector<Edge> erase;
    std::vector<EdgeBound> bounds;
};

struct Recipe {
    int palette = 0;
    /// True for claims whose proof is not given here: delete, recolor, greedy-extend.
    bool generic = false;
    std::string summary;
    std::function<RecipePlan(const Graph&, const std::vector<Vertex>& assignment)> plan;
};

/// A catalog entry: the violation pattern of one structural claim about a minimal counterexample.
struct Pattern {
    std::string id;
    std::string name;
    Scheme scheme = Scheme::Theta7;
    std::string description;
    std::vector<PatternNode> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> nonedges;
    /// A match must satisfy at least one alternative (a set of extra node constraints), if any are given.
    std::vector<std::vector<std::pair<int, NodeConstraint>>> alternatives;
    std::optional<Recipe> recipe;
    /// Node permutations preserving all of the above; filled in by the catalog.
    std::vector<std::vector<int>> automorphisms;
};

struct ConfigurationMatch {
    std::string pattern_id;
    /// assignment[i] is the graph vertex playing pattern node i.
    std::vector<Vertex> assignment;
    /// Images of the pattern's required edges.
    std::vector<Edge> witnesses;

    friend bool operator==(const ConfigurationMatch&, const ConfigurationMatch&) = default;
};

/// The fixed catalog for a scheme (ten patterns each).
const std::vector<Pattern>& catalog(Scheme scheme);

const Pattern& find_pattern(const std::string& id);

/// Every automorphism-distinct match of every catalog pattern, sorted by (pattern id, assignment).
std::vector<ConfigurationMatch> find_configurations(const Graph& g, Scheme scheme, const std::vector<Label>& labels);

/// Matches of one pattern only.
std::vector<ConfigurationMatch> find_pattern_matches(const Graph& g, const Pattern& p, const std::vector<Label>& labels);

/// Independent re-check of every constraint of the pattern on a match.
bool validate_match(const Graph& g, const std::vector<Label>& labels, const Pattern& p, const ConfigurationMatch& m);

enum class ReducibilityVerdict { Extended, Vacuous, Timeout, Failed, NoRecipe };

std::string_view verdict_name(ReducibilityVerdict v);

struct EdgeObservation {
    std::string role;
    Edge edge;
    EdgeId id = -1;
    int sees_before = 0;      // edges of G - v it sees
    int list_before = 0;      // l_f
    int sees_after = 0;       // colored edges it sees after the erase step
    int list_after = 0;       // l_f'
    int bound_before = -1;
    int bound_after = -1;
    bool within_bounds = true;
};

struct ReducibilityReport {
    ReducibilityVerdict verdict = ReducibilityVerdict::NoRecipe;
    std::string pattern_id;
    std::string variant;
    int palette = 0;
    Vertex deleted = -1;
    std::vector<Edge> erased;
    ExtendStrategy strategy = ExtendStrategy::None;
    std::vector<EdgeObservation> observations;
    bool bounds_respected = true;
    std::vector<std::string> notes;
    PartialColoring extension;
    SolveStats stats;
};

/// Replays the match's recipe: color G - v exactly with the scheme palette, erase the recipe's
/// edges, and try to extend to all of G.
ReducibilityReport verify_reducibility(const Graph& g, const ConfigurationMatch& m, Budget budget = default_budget);

} // namespace strongedge
