#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strongedge/graph.hpp"
#include "strongedge/metrics.hpp"
#include "strongedge/rational.hpp"

namespace strongedge {

/// A rule set that cannot be applied as written (unknown class, bad amount, malformed file).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Arity { AllMatching, OneDesignated };

std::string_view arity_name(Arity a);

/// A sender of class `sender` passes `amount` to its neighbors whose class is in `receivers`.
/// With OneDesignated only one eligible neighbor receives: the unique one whose class is not
/// in `anchor` if there is exactly one such, else the smallest-id eligible neighbor.
struct DischargeRule {
    std::string id;
    std::vector<Label> sender;
    std::vector<Label> receivers;
    Arity arity = Arity::AllMatching;
    std::vector<Label> anchor;
    Rational amount;
};

struct RuleSet {
    Scheme scheme = Scheme::Theta7;
    Rational target;
    std::vector<DischargeRule> rules;
};

struct Transfer {
    std::string rule;
    Vertex sender = -1;
    Vertex receiver = -1;
    Rational amount;

    friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct ChargeLedger {
    Rational target;
    std::vector<Rational> initial;
    std::vector<Rational> final;
    /// Sorted by (rule id, sender, receiver).
    std::vector<Transfer> transfers;

    Rational sum_initial() const;
    Rational sum_final() const;
};

/// omega(v) = d(v) - target.
std::vector<Rational> initial_charges(const Graph& g, const Rational& target);

const RuleSet& builtin_ruleset(Scheme scheme);

/// Reads a rule set from JSON: {scheme, target, rules: [{id, sender, receivers, arity, anchor, amount}]}.
/// Classes are written as label names, rationals as "p/q". Throws ConfigError.
RuleSet parse_ruleset(std::string_view json_text);
std::string ruleset_to_json(const RuleSet& rules);

/// Throws ConfigError if a rule names a class outside the scheme or has a non-positive amount.
void validate_ruleset(const RuleSet& rules);

ChargeLedger apply_rules(const Graph& g, const std::vector<Label>& labels, const RuleSet& rules);

struct NegativeVertex {
    Vertex vertex = -1;
    Rational charge;
    /// Catalog configurations whose image meets the closed neighborhood, e.g. "T7.C2 (2v) violation".
    std::vector<std::string> diagnoses;
};

std::vector<NegativeVertex> audit_negative(const ChargeLedger& ledger, const Graph& g, const std::vector<Label>& labels,
                                           Scheme scheme);

} // namespace strongedge
