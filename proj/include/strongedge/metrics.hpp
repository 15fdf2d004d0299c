#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strongedge/graph.hpp"
#include "strongedge/rational.hpp"

namespace strongedge {

/// Raised when an invariant is undefined for the input (edgeless graph, theta out of domain, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Maximum of d(u)+d(v) over edges uv. Throws DomainError on an edgeless graph.
int ore_degree(const Graph& g);

struct MadResult {
    /// Maximum average degree, i.e. twice the maximum subgraph density.
    Rational value;
    /// Vertex set of a densest induced subgraph, ascending.
    std::vector<Vertex> witness;
};

/// Exact maximum average degree via max-flow density tests. Throws DomainError when edgeless.
MadResult mad_exact(const Graph& g);

/// Exhaustive maximum over all vertex subsets; refuses graphs with more than 20 vertices.
MadResult mad_bruteforce(const Graph& g);

/// Conjectured upper bound on the strong chromatic index for Ore-degree theta >= 5.
int conjectured_bound(int theta);

/// Largest possible mad for a given Ore-degree (theta >= 2).
Rational mad_upper_bound(int theta);

enum class Scheme { Theta7, Theta8 };

std::string_view scheme_name(Scheme s);
Scheme parse_scheme(std::string_view text);

/// Palette size and charge target that belong to each scheme.
int scheme_palette(Scheme s);
int scheme_theta(Scheme s);
Rational scheme_target(Scheme s);

enum class Label {
    Unclassified,
    // theta = 7
    Deg2,
    Deg3A,
    Deg3B,
    Deg3CWeak,
    Deg3CModerate,
    Deg3CStrong,
    Deg3D,
    Deg4,
    // theta = 8 (Deg3A and Deg3D are shared)
    Deg3BStrong,
    Deg3BWeak,
    Deg3C,
    Deg4A,
    Deg4B,
    Deg4CStrong,
    Deg4CWeak,
    Deg4D,
    Deg5,
};

std::string_view label_name(Label l);
Label parse_label(std::string_view text);

/// Labels that are valid under the scheme (excluding Unclassified).
const std::vector<Label>& scheme_labels(Scheme s);

/// Degree a label implies; 0 for Unclassified.
int label_degree(Label l);

struct Classification {
    Scheme scheme;
    std::vector<Label> labels;
    std::vector<std::string> warnings;
    /// Vertices for which a documented consequence of the class definitions failed to hold,
    /// e.g. a 3(C_moderate)-vertex with no 3(C)-neighbor.
    std::vector<std::string> side_assertion_failures;
};

Classification classify_theta7(const Graph& g);
Classification classify_theta8(const Graph& g);
Classification classify(const Graph& g, Scheme s);

} // namespace strongedge
