#include "strongedge/discharging.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <json.hpp>

#include "strongedge/configurations.hpp"

namespace strongedge {

namespace {

bool contains(const std::vector<Label>& list, Label l) { return std::find(list.begin(), list.end(), l) != list.end(); }

DischargeRule rule(std::string id, std::vector<Label> sender, std::vector<Label> receivers, Rational amount,
                   Arity arity = Arity::AllMatching, std::vector<Label> anchor = {})
{
    return {std::move(id), std::move(sender), std::move(receivers), arity, std::move(anchor), std::move(amount)};
}

RuleSet theta7_rules()
{
    const std::vector<Label> threes{Label::Deg3A, Label::Deg3B, Label::Deg3CWeak, Label::Deg3CModerate,
                                    Label::Deg3CStrong, Label::Deg3D};
    const std::vector<Label> c{Label::Deg3CWeak, Label::Deg3CModerate, Label::Deg3CStrong};
    RuleSet set{Scheme::Theta7, scheme_target(Scheme::Theta7), {}};
    set.rules.push_back(rule("T7.R1a", {Label::Deg4}, {Label::Deg2}, Rational(6, 11)));
    set.rules.push_back(rule("T7.R1b", {Label::Deg4}, threes, Rational(4, 33)));
    set.rules.push_back(rule("T7.R2", {Label::Deg3B}, threes, Rational(1, 22)));
    set.rules.push_back(rule("T7.R3", {Label::Deg3CStrong}, threes, Rational(5, 132), Arity::OneDesignated,
                             {Label::Deg3B}));
    set.rules.push_back(rule("T7.R4", {Label::Deg3CModerate}, threes, Rational(1, 33), Arity::OneDesignated, c));
    set.rules.push_back(rule("T7.R5", {Label::Deg3CWeak}, {Label::Deg3D}, Rational(1, 66)));
    return set;
}

RuleSet theta8_rules()
{
    const std::vector<Label> threes{Label::Deg3A, Label::Deg3BStrong, Label::Deg3BWeak, Label::Deg3C, Label::Deg3D};
    const std::vector<Label> fours{Label::Deg4A, Label::Deg4B, Label::Deg4CStrong, Label::Deg4CWeak, Label::Deg4D};
    RuleSet set{Scheme::Theta8, scheme_target(Scheme::Theta8), {}};
    set.rules.push_back(rule("T8.R1a", {Label::Deg5}, {Label::Deg3BWeak}, Rational(10, 31)));
    set.rules.push_back(rule("T8.R1b", {Label::Deg5}, {Label::Deg3A, Label::Deg3BStrong, Label::Deg3C, Label::Deg3D},
                             Rational(8, 31)));
    set.rules.push_back(rule("T8.R2", {Label::Deg4A}, fours, Rational(11, 124)));
    set.rules.push_back(rule("T8.R3a", {Label::Deg4B}, threes, Rational(8, 31)));
    set.rules.push_back(rule("T8.R3b", {Label::Deg4B}, fours, Rational(1, 31)));
    set.rules.push_back(rule("T8.R4a", {Label::Deg4CStrong}, {Label::Deg3C}, Rational(7, 31)));
    set.rules.push_back(rule("T8.R4b", {Label::Deg4CStrong}, {Label::Deg3BStrong}, Rational(4, 31)));
    set.rules.push_back(rule("T8.R5", {Label::Deg4CWeak}, {Label::Deg3C}, Rational(6, 31)));
    set.rules.push_back(rule("T8.R6", {Label::Deg4D}, {Label::Deg3BStrong}, Rational(4, 31)));
    return set;
}

std::vector<Label> labels_from_json(const nlohmann::json& j, const char* field, const std::string& rule_id)
{
    std::vector<Label> out;
    if (!j.contains(field))
        return out;
    if (!j.at(field).is_array())
        throw ConfigError("rule " + rule_id + ": field '" + field + "' must be an array of class names");
    for (const auto& name : j.at(field)) {
        try {
            out.push_back(parse_label(name.get<std::string>()));
        } catch (const std::exception&) {
            throw ConfigError("rule " + rule_id + ": unknown class " + name.dump());
        }
    }
    return out;
}

Rational rational_from_json(const nlohmann::json& j, const std::string& what)
{
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        throw ConfigError(what + ": expected a rational written as \"p/q\", got " + j.dump());
    }
}

} // namespace

std::string_view arity_name(Arity a) { return a == Arity::AllMatching ? "ALL_MATCHING" : "ONE_DESIGNATED"; }

Rational ChargeLedger::sum_initial() const
{
    Rational s;
    for (const auto& r : initial)
        s = s + r;
    return s;
}

Rational ChargeLedger::sum_final() const
{
    Rational s;
    for (const auto& r : final)
        s = s + r;
    return s;
}

std::vector<Rational> initial_charges(const Graph& g, const Rational& target)
{
    std::vector<Rational> out;
    out.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(Rational(g.degree(v)) - target);
    return out;
}

const RuleSet& builtin_ruleset(Scheme scheme)
{
    static const RuleSet theta7 = theta7_rules();
    static const RuleSet theta8 = theta8_rules();
    return scheme == Scheme::Theta7 ? theta7 : theta8;
}

void validate_ruleset(const RuleSet& rules)
{
    const auto allowed = scheme_labels(rules.scheme);
    std::set<std::string> ids;
    for (const auto& r : rules.rules) {
        if (r.id.empty())
            throw ConfigError("rule without an id");
        if (!ids.insert(r.id).second)
            throw ConfigError("duplicate rule id " + r.id);
        if (r.amount.sign() <= 0)
            throw ConfigError("rule " + r.id + ": amount must be positive");
        if (r.sender.empty() || r.receivers.empty())
            throw ConfigError("rule " + r.id + ": sender and receivers must be non-empty");
        for (const auto* list : {&r.sender, &r.receivers, &r.anchor})
            for (Label l : *list)
                if (!contains(allowed, l))
                    throw ConfigError("rule " + r.id + ": class " + std::string(label_name(l)) + " is not part of scheme "
                                      + std::string(scheme_name(rules.scheme)));
    }
}

RuleSet parse_ruleset(std::string_view json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("rule file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("scheme") || !j.contains("rules") || !j.at("rules").is_array())
        throw ConfigError("rule file needs 'scheme' and a 'rules' array");
    RuleSet set;
    try {
        set.scheme = parse_scheme(j.at("scheme").get<std::string>());
    } catch (const std::exception&) {
        throw ConfigError("unknown scheme " + j.at("scheme").dump());
    }
    set.target = j.contains("target") ? rational_from_json(j.at("target"), "target") : scheme_target(set.scheme);
    for (const auto& r : j.at("rules")) {
        if (!r.is_object() || !r.contains("id") || !r.at("id").is_string())
            throw ConfigError("every rule needs a string 'id'");
        DischargeRule dr;
        dr.id = r.at("id").get<std::string>();
        dr.sender = labels_from_json(r, "sender", dr.id);
        dr.receivers = labels_from_json(r, "receivers", dr.id);
        dr.anchor = labels_from_json(r, "anchor", dr.id);
        std::string arity = r.value("arity", std::string("ALL_MATCHING"));
        if (arity == "ALL_MATCHING")
            dr.arity = Arity::AllMatching;
        else if (arity == "ONE_DESIGNATED")
            dr.arity = Arity::OneDesignated;
        else
            throw ConfigError("rule " + dr.id + ": arity must be ALL_MATCHING or ONE_DESIGNATED");
        if (!r.contains("amount"))
            throw ConfigError("rule " + dr.id + ": missing amount");
        dr.amount = rational_from_json(r.at("amount"), "rule " + dr.id);
        set.rules.push_back(std::move(dr));
    }
    validate_ruleset(set);
    return set;
}

std::string ruleset_to_json(const RuleSet& rules)
{
    auto names = [](const std::vector<Label>& list) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (Label l : list)
            a.push_back(std::string(label_name(l)));
        return a;
    };
    nlohmann::ordered_json j;
    j["scheme"] = std::string(scheme_name(rules.scheme));
    j["target"] = rules.target.str();
    j["rules"] = nlohmann::ordered_json::array();
    for (const auto& r : rules.rules) {
        nlohmann::ordered_json o;
        o["id"] = r.id;
        o["sender"] = names(r.sender);
        o["receivers"] = names(r.receivers);
        o["arity"] = std::string(arity_name(r.arity));
        o["anchor"] = names(r.anchor);
        o["amount"] = r.amount.str();
        j["rules"].push_back(std::move(o));
    }
    return j.dump(2);
}

ChargeLedger apply_rules(const Graph& g, const std::vector<Label>& labels, const RuleSet& rules)
{
    if (static_cast<int>(labels.size()) != g.order())
        throw std::invalid_argument("label vector does not match the graph order");
    validate_ruleset(rules);
    ChargeLedger ledger;
    ledger.target = rules.target;
    ledger.initial = initial_charges(g, rules.target);
    ledger.final = ledger.initial;

    for (const auto& r : rules.rules) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (labels[v] == Label::Unclassified || !contains(r.sender, labels[v]))
                continue;
            std::vector<Vertex> eligible;
            for (Vertex w : g.neighbors(v))
                if (labels[w] != Label::Unclassified && contains(r.receivers, labels[w]))
                    eligible.push_back(w);
            if (eligible.empty())
                continue;
            std::sort(eligible.begin(), eligible.end());
            if (r.arity == Arity::OneDesignated) {
                std::vector<Vertex> outside;
                for (Vertex w : eligible)
                    if (!contains(r.anchor, labels[w]))
                        outside.push_back(w);
                eligible = {outside.size() == 1 ? outside.front() : eligible.front()};
            }
            for (Vertex w : eligible)
                ledger.transfers.push_back({r.id, v, w, r.amount});
        }
    }
    std::sort(ledger.transfers.begin(), ledger.transfers.end(), [](const Transfer& a, const Transfer& b) {
        return std::tie(a.rule, a.sender, a.receiver) < std::tie(b.rule, b.sender, b.receiver);
    });
    for (const auto& t : ledger.transfers) {
        ledger.final[t.sender] = ledger.final[t.sender] - t.amount;
        ledger.final[t.receiver] = ledger.final[t.receiver] + t.amount;
    }
    return ledger;
}

std::vector<NegativeVertex> audit_negative(const ChargeLedger& ledger, const Graph& g, const std::vector<Label>& labels,
                                           Scheme scheme)
{
    std::vector<NegativeVertex> out;
    std::vector<ConfigurationMatch> matches;
    bool searched = false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (ledger.final[v].sign() >= 0)
            continue;
        if (!searched) {
            matches = find_configurations(g, scheme, labels);
            searched = true;
        }
        NegativeVertex nv{v, ledger.final[v], {}};
        std::set<Vertex> closed{v};
        for (Vertex w : g.neighbors(v))
            closed.insert(w);
        for (const auto& m : matches) {
            bool meets = std::any_of(m.assignment.begin(), m.assignment.end(),
                                     [&](Vertex x) { return closed.count(x) > 0; });
            if (!meets)
                continue;
            std::string text = m.pattern_id + " (" + find_pattern(m.pattern_id).name + ") violation";
            if (std::find(nv.diagnoses.begin(), nv.diagnoses.end(), text) == nv.diagnoses.end())
                nv.diagnoses.push_back(std::move(text));
        }
        out.push_back(std::move(nv));
    }
    return out;
}

} // namespace strongedge
