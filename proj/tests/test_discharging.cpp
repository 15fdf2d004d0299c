#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "strongedge/discharging.hpp"

using namespace strongedge;

namespace {

/// Incremental graph construction with leaf padding.
struct Builder {
    int n = 0;
    std::vector<Edge> edges;

    Vertex add() { return n++; }
    void join(Vertex a, Vertex b) { edges.push_back({std::min(a, b), std::max(a, b)}); }
    void pad(Vertex v, int leaves)
    {
        for (int i = 0; i < leaves; ++i)
            join(v, add());
    }
    Graph build() const { return Graph(n, edges); }
};

ChargeLedger run(const Graph& g, Scheme s) { return apply_rules(g, classify(g, s).labels, builtin_ruleset(s)); }

const DischargeRule& rule(Scheme s, const std::string& id)
{
    for (const auto& r : builtin_ruleset(s).rules)
        if (r.id == id)
            return r;
    throw std::logic_error("no rule " + id);
}

} // namespace

TEST_CASE("initial charges")
{
    Graph p3 = named::path(3);
    auto w = initial_charges(p3, Rational(34, 11));
    CHECK(w[1] == Rational(-12, 11));
    Graph s4 = named::star(4);
    CHECK(initial_charges(s4, Rational(34, 11))[0] == Rational(10, 11));

    Graph k34 = named::complete_bipartite(3, 4);
    Rational sum;
    for (const auto& r : initial_charges(k34, Rational(34, 11)))
        sum = sum + r;
    CHECK(sum == Rational(26, 11));
}

TEST_CASE("built-in amounts")
{
    CHECK(builtin_ruleset(Scheme::Theta7).rules.size() == 6);
    CHECK(builtin_ruleset(Scheme::Theta8).rules.size() == 9);
    CHECK(rule(Scheme::Theta7, "T7.R1a").amount == Rational(6, 11));
    CHECK(rule(Scheme::Theta7, "T7.R1b").amount == Rational(4, 33));
    CHECK(rule(Scheme::Theta7, "T7.R5").amount == Rational(1, 66));
    CHECK(rule(Scheme::Theta7, "T7.R5").arity == Arity::AllMatching);
    CHECK(rule(Scheme::Theta7, "T7.R5").receivers == std::vector<Label>{Label::Deg3D});
    CHECK(rule(Scheme::Theta8, "T8.R4a").amount == Rational(7, 31));
    CHECK(rule(Scheme::Theta8, "T8.R4b").amount == Rational(4, 31));
    CHECK(rule(Scheme::Theta8, "T8.R2").amount == Rational(11, 124));
    // The ordering the theta = 7 case analysis relies on.
    CHECK(rule(Scheme::Theta7, "T7.R2").amount > rule(Scheme::Theta7, "T7.R3").amount);
    CHECK(rule(Scheme::Theta7, "T7.R3").amount > rule(Scheme::Theta7, "T7.R4").amount);
    CHECK(rule(Scheme::Theta7, "T7.R4").amount > rule(Scheme::Theta7, "T7.R5").amount);
    for (Scheme s : {Scheme::Theta7, Scheme::Theta8})
        CHECK_NOTHROW(validate_ruleset(builtin_ruleset(s)));
}

TEST_CASE("2-vertex between two 4-vertices ends at zero")
{
    Builder b;
    Vertex left = b.add(), mid = b.add(), right = b.add();
    b.join(left, mid);
    b.join(mid, right);
    b.pad(left, 3);
    b.pad(right, 3);
    auto ledger = run(b.build(), Scheme::Theta7);
    CHECK(ledger.final[mid] == Rational(0));
    CHECK(ledger.final[left] == Rational(4) - Rational(34, 11) - Rational(6, 11));
}

TEST_CASE("4(A)-vertex with four 4(D)-neighbors ends at zero")
{
    Builder b;
    Vertex x = b.add();
    for (int i = 0; i < 4; ++i) {
        Vertex y = b.add();
        b.join(x, y);
        for (int j = 0; j < 3; ++j) {
            Vertex t = b.add();
            b.join(y, t);
            b.pad(t, 2);
        }
    }
    Graph g = b.build();
    auto labels = classify_theta8(g).labels;
    REQUIRE(labels[x] == Label::Deg4A);
    REQUIRE(labels[1] == Label::Deg4D);
    auto ledger = apply_rules(g, labels, builtin_ruleset(Scheme::Theta8));
    CHECK(ledger.final[x] == Rational(0));
}

TEST_CASE("3(D)-vertex with a 3(C_weak) and two 3(C_strong) neighbors ends at zero")
{
    Builder b;
    Vertex v = b.add(), a = b.add(), s1 = b.add(), s2 = b.add();
    b.join(v, a);
    b.join(v, s1);
    b.join(v, s2);
    // a: another 3(D)-neighbor and a 4-neighbor.
    Vertex d = b.add(), f = b.add();
    b.join(a, d);
    b.join(a, f);
    b.pad(f, 3);
    for (int i = 0; i < 2; ++i) {
        Vertex t = b.add();
        b.join(d, t);
        b.pad(t, 2);
    }
    // s1, s2: a 3(B)-neighbor and a 4-neighbor.
    for (Vertex s : {s1, s2}) {
        Vertex bb = b.add(), four = b.add();
        b.join(s, bb);
        b.join(s, four);
        b.pad(four, 3);
        for (int i = 0; i < 2; ++i) {
            Vertex big = b.add();
            b.join(bb, big);
            b.pad(big, 3);
        }
    }
    Graph g = b.build();
    auto labels = classify_theta7(g).labels;
    REQUIRE(labels[v] == Label::Deg3D);
    REQUIRE(labels[a] == Label::Deg3CWeak);
    REQUIRE(labels[s1] == Label::Deg3CStrong);
    REQUIRE(labels[s2] == Label::Deg3CStrong);
    auto ledger = apply_rules(g, labels, builtin_ruleset(Scheme::Theta7));
    CHECK(ledger.final[v] == Rational(3) - Rational(34, 11) + Rational(1, 66) + Rational(2) * Rational(5, 132));
    CHECK(ledger.final[v] == Rational(0));
}

TEST_CASE("designated recipient")
{
    // A 3(C_strong)-vertex with two 3(B)-neighbors gives to the smaller id.
    Builder b;
    Vertex x = b.add(), p = b.add(), q = b.add(), four = b.add();
    b.join(x, p);
    b.join(x, q);
    b.join(x, four);
    b.pad(four, 3);
    for (Vertex y : {p, q})
        for (int i = 0; i < 2; ++i) {
            Vertex big = b.add();
            b.join(y, big);
            b.pad(big, 3);
        }
    Graph g = b.build();
    auto labels = classify_theta7(g).labels;
    REQUIRE(labels[x] == Label::Deg3CStrong);
    REQUIRE(labels[p] == Label::Deg3B);
    REQUIRE(labels[q] == Label::Deg3B);
    auto ledger = apply_rules(g, labels, builtin_ruleset(Scheme::Theta7));
    std::vector<Transfer> r3;
    for (const auto& t : ledger.transfers)
        if (t.rule == "T7.R3")
            r3.push_back(t);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].sender == x);
    CHECK(r3[0].receiver == p);
}

TEST_CASE("unclassified vertices are inert")
{
    Graph star = named::star(6);
    auto ledger = run(star, Scheme::Theta7);
    CHECK(ledger.transfers.empty());
    CHECK(ledger.final == ledger.initial);
}

TEST_CASE("conservation and determinism on random graphs")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + static_cast<int>(rng() % 14);
        Graph g = oracle::random_graph(rng, n, 0.3);
        for (Scheme s : {Scheme::Theta7, Scheme::Theta8}) {
            auto a = run(g, s), b = run(g, s);
            CHECK(a.sum_initial() == a.sum_final());
            CHECK(a.transfers == b.transfers);
            CHECK(a.final == b.final);
            for (std::size_t i = 1; i < a.transfers.size(); ++i) {
                const auto& p = a.transfers[i - 1];
                const auto& c = a.transfers[i];
                CHECK(std::tie(p.rule, p.sender, p.receiver) < std::tie(c.rule, c.sender, c.receiver));
            }
            Rational expected = Rational(2 * g.size()) - Rational(n) * scheme_target(s);
            CHECK(a.sum_initial() == expected);
        }
    }
}

TEST_CASE("audit names the configuration near a negative vertex")
{
    // A 2-vertex with a 3-neighbor and a 4-neighbor.
    Builder b;
    Vertex v = b.add(), three = b.add(), four = b.add();
    b.join(v, three);
    b.join(v, four);
    b.pad(four, 3);
    b.pad(three, 2);
    Graph g = b.build();
    auto labels = classify_theta7(g).labels;
    auto ledger = apply_rules(g, labels, builtin_ruleset(Scheme::Theta7));
    CHECK(ledger.final[v] == Rational(-6, 11));
    auto audit = audit_negative(ledger, g, labels, Scheme::Theta7);
    auto it = std::find_if(audit.begin(), audit.end(), [&](const NegativeVertex& n) { return n.vertex == v; });
    REQUIRE(it != audit.end());
    CHECK(std::find(it->diagnoses.begin(), it->diagnoses.end(), "T7.C2 (2v) violation") != it->diagnoses.end());

    // A 4-regular graph has only nonnegative charges under theta = 7.
    Graph k5 = named::complete(5);
    auto k5_ledger = run(k5, Scheme::Theta7);
    CHECK(audit_negative(k5_ledger, k5, classify_theta7(k5).labels, Scheme::Theta7).empty());

    // K(3,4) keeps exact conservation whatever the audit says.
    Graph k34 = named::complete_bipartite(3, 4);
    auto k34_ledger = run(k34, Scheme::Theta7);
    CHECK(k34_ledger.sum_final() == Rational(26, 11));
}

TEST_CASE("rule files")
{
    for (Scheme s : {Scheme::Theta7, Scheme::Theta8}) {
        RuleSet parsed = parse_ruleset(ruleset_to_json(builtin_ruleset(s)));
        CHECK(parsed.scheme == s);
        CHECK(parsed.target == scheme_target(s));
        REQUIRE(parsed.rules.size() == builtin_ruleset(s).rules.size());
        for (std::size_t i = 0; i < parsed.rules.size(); ++i) {
            CHECK(parsed.rules[i].id == builtin_ruleset(s).rules[i].id);
            CHECK(parsed.rules[i].amount == builtin_ruleset(s).rules[i].amount);
            CHECK(parsed.rules[i].arity == builtin_ruleset(s).rules[i].arity);
        }
    }
    const char* custom = R"({"scheme":"theta7","target":"3/1","rules":[
        {"id":"X1","sender":["DEG4"],"receivers":["DEG2"],"amount":"1/2"}]})";
    RuleSet r = parse_ruleset(custom);
    CHECK(r.target == Rational(3));
    CHECK(r.rules[0].arity == Arity::AllMatching);

    CHECK_THROWS_AS(parse_ruleset(R"({"scheme":"theta7","rules":[
        {"id":"X","sender":["DEG5"],"receivers":["DEG2"],"amount":"1/2"}]})"), ConfigError);
    CHECK_THROWS_AS(parse_ruleset(R"({"scheme":"theta7","rules":[
        {"id":"X","sender":["DEG4"],"receivers":["DEG2"],"amount":"-1/2"}]})"), ConfigError);
    CHECK_THROWS_AS(parse_ruleset(R"({"scheme":"theta7","rules":[
        {"id":"X","sender":["NOPE"],"receivers":["DEG2"],"amount":"1/2"}]})"), ConfigError);
    CHECK_THROWS_AS(parse_ruleset(R"({"scheme":"theta7","rules":[
        {"id":"X","sender":["DEG4"],"receivers":["DEG2"],"amount":0.5}]})"), ConfigError);
    CHECK_THROWS_AS(parse_ruleset("{"), ConfigError);
    CHECK_THROWS_AS(parse_ruleset(R"({"scheme":"theta9","rules":[]})"), ConfigError);
}
