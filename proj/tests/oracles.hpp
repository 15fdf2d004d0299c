#pragma once

// Brute-force reference implementations. They share no code with the library beyond the
// Graph container, so agreement with the fast paths is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "strongedge/configurations.hpp"
#include "strongedge/graph.hpp"

namespace oracle {

using strongedge::Edge;
using strongedge::Graph;
using strongedge::Vertex;

/// Line-graph distance 1 or 2, straight from the definition on endpoint pairs.
inline bool sees(const Graph& g, const Edge& e, const Edge& f)
{
    if (e == f)
        return false;
    Vertex a[2] = {e.u, e.v}, b[2] = {f.u, f.v};
    for (Vertex x : a)
        for (Vertex y : b)
            if (x == y || g.adjacent(x, y))
                return true;
    return false;
}

/// Strong chromatic index by exhaustive search over set partitions of the edges
/// (restricted growth strings), smallest block count wins. Practical up to ~10 edges.
inline int chi_s(const Graph& g)
{
    const int m = g.size();
    if (m == 0)
        return 0;
    std::vector<std::vector<bool>> conflict(m, std::vector<bool>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            conflict[i][j] = sees(g, g.edge(i), g.edge(j));
    std::vector<int> color(m, 0);
    int best = m;
    std::function<void(int, int)> go = [&](int i, int used) {
        if (used >= best)
            return;
        if (i == m) {
            best = used;
            return;
        }
        for (int c = 1; c <= used + 1; ++c) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = !(color[j] == c && conflict[i][j]);
            if (!ok)
                continue;
            color[i] = c;
            go(i + 1, std::max(used, c));
        }
        color[i] = 0;
    };
    go(0, 0);
    return best;
}

/// Is there a strong k-coloring? Plain k^m assignment search with early rejection.
inline bool k_colorable(const Graph& g, int k)
{
    const int m = g.size();
    std::vector<int> color(m, 0);
    std::function<bool(int)> go = [&](int i) {
        if (i == m)
            return true;
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = !(color[j] == c && sees(g, g.edge(i), g.edge(j)));
            if (ok) {
                color[i] = c;
                if (go(i + 1))
                    return true;
            }
        }
        return false;
    };
    return go(0);
}

/// Does the family have a system of distinct representatives? Tries every choice.
inline bool has_sdr(const std::vector<std::vector<int>>& sets)
{
    std::set<int> taken;
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == sets.size())
            return true;
        for (int x : sets[i]) {
            if (taken.count(x))
                continue;
            taken.insert(x);
            if (go(i + 1))
                return true;
            taken.erase(x);
        }
        return false;
    };
    return go(0);
}

/// 2|E(S)|/|S| maximized over all nonempty S, as a reduced (num, den) pair.
inline std::pair<std::int64_t, std::int64_t> mad(const Graph& g)
{
    const int n = g.order();
    std::int64_t bn = 0, bd = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::int64_t e = 0;
        for (const auto& [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1))
                ++e;
        std::int64_t s = __builtin_popcount(mask);
        if (2 * e * bd > bn * s) {
            bn = 2 * e;
            bd = s;
        }
    }
    std::int64_t d = std::gcd(bn, bd);
    return {bn / d, bd / d};
}

/// Minimum adjacency bit string over all n! relabelings: a certificate for isomorphism.
inline std::uint64_t slow_canonical(const Graph& g)
{
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t key = 0;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.adjacent(perm[i], perm[j]))
                    key |= std::uint64_t{1} << bit;
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Isomorphism classes of connected graphs on n vertices, by filtering all edge subsets.
inline std::size_t count_connected(int n)
{
    std::vector<Edge> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            slots.push_back({i, j});
    std::set<std::uint64_t> classes;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1)
                edges.push_back(slots[b]);
        if (edges.size() + 1 < static_cast<std::size_t>(n))
            continue;
        Graph g(n, edges);
        if (g.connected())
            classes.insert(slow_canonical(g));
    }
    return classes.size();
}

/// Every injective assignment of pattern nodes satisfying all constraints; no symmetry reduction.
inline std::vector<std::vector<Vertex>> all_matches(const Graph& g, const strongedge::Pattern& p,
                                                    const std::vector<strongedge::Label>& labels)
{
    const int k = static_cast<int>(p.nodes.size());
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> a(k, -1);
    std::vector<bool> used(g.order(), false);
    std::function<void(int)> go = [&](int i) {
        if (i == k) {
            for (auto [x, y] : p.edges)
                if (!g.adjacent(a[x], a[y]))
                    return;
            for (auto [x, y] : p.nonedges)
                if (g.adjacent(a[x], a[y]))
                    return;
            if (!p.alternatives.empty()) {
                bool any = false;
                for (const auto& alt : p.alternatives) {
                    bool all = true;
                    for (const auto& [node, c] : alt)
                        all = all && c.admits(g.degree(a[node]), labels[a[node]]);
                    any = any || all;
                }
                if (!any)
                    return;
            }
            out.push_back(a);
            return;
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            if (used[v] || !p.nodes[i].constraint.admits(g.degree(v), labels[v]))
                continue;
            used[v] = true;
            a[i] = v;
            go(i + 1);
            used[v] = false;
        }
    };
    go(0);
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.push_back({i, j});
    return Graph(n, edges);
}

/// Random graph whose degrees stay at most `cap` (edges added in random order while allowed).
inline Graph capped_random(std::mt19937_64& rng, int n, int cap)
{
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.push_back({i, j});
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> deg(n, 0);
    std::vector<Edge> chosen;
    for (auto e : slots)
        if (deg[e.u] < cap && deg[e.v] < cap && rng() % 3 != 0) {
            ++deg[e.u];
            ++deg[e.v];
            chosen.push_back(e);
        }
    return Graph(n, chosen);
}

} // namespace oracle
