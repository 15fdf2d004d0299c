#include "strongedge/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace strongedge {

namespace {

constexpr int max_canonical_order = 11;

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

struct SmallGraph {
    int n;
    std::vector<std::uint32_t> adj;

    explicit SmallGraph(const Graph& g) : n(g.order()), adj(g.order(), 0)
    {
        for (const auto& [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
    }
};

/// Splits cells by neighbor counts into every cell until stable. The result depends only on the
/// graph structure and the input ordered partition, never on vertex ids.
void refine(const SmallGraph& g, Partition& p)
{
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint32_t> masks;
        for (const auto& cell : p) {
            std::uint32_t m = 0;
            for (int v : cell)
                m |= 1u << v;
            masks.push_back(m);
        }
        Partition next;
        for (const auto& cell : p) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, Cell> groups;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(masks.size());
                for (auto m : masks)
                    sig.push_back(__builtin_popcount(g.adj[v] & m));
                groups[sig].push_back(v);
            }
            if (groups.size() > 1)
                changed = true;
            for (auto& [sig, group] : groups)
                next.push_back(std::move(group));
        }
        p = std::move(next);
    }
}

std::uint64_t leaf_key(const SmallGraph& g, const Partition& p)
{
    std::vector<int> position(g.n);
    for (int i = 0; i < g.n; ++i)
        position[p[i][0]] = i;
    std::vector<int> at(g.n);
    for (int v = 0; v < g.n; ++v)
        at[position[v]] = v;
    std::uint64_t key = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            key = (key << 1) | ((g.adj[at[i]] >> at[j]) & 1u);
    // At most 55 adjacency bits; the order goes above them so keys never collide across orders.
    return key | (static_cast<std::uint64_t>(g.n) << 56);
}

struct CanonicalSearch {
    const SmallGraph& g;
    std::uint64_t best = 0;
    Partition best_leaf;
    bool found = false;

    void run(Partition p)
    {
        refine(g, p);
        auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
        if (target == p.end()) {
            auto key = leaf_key(g, p);
            if (!found || key < best) {
                best = key;
                best_leaf = p;
                found = true;
            }
            return;
        }
        const Cell cell = *target;
        std::size_t idx = static_cast<std::size_t>(target - p.begin());
        std::vector<int> tried;
        for (int v : cell) {
            // Swapping twins is an automorphism fixing everything individualised so far.
            bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) {
                std::uint32_t mu = g.adj[u] & ~(1u << v), mv = g.adj[v] & ~(1u << u);
                return mu == mv;
            });
            if (twin)
                continue;
            tried.push_back(v);
            Partition child(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(idx));
            child.push_back({v});
            Cell rest;
            for (int w : cell)
                if (w != v)
                    rest.push_back(w);
            child.push_back(std::move(rest));
            child.insert(child.end(), p.begin() + static_cast<std::ptrdiff_t>(idx) + 1, p.end());
            run(std::move(child));
        }
    }
};

CanonicalSearch search_for(const SmallGraph& sg)
{
    CanonicalSearch search{sg, 0, {}, false};
    Partition initial;
    if (sg.n > 0) {
        Cell all(sg.n);
        for (int v = 0; v < sg.n; ++v)
            all[v] = v;
        initial.push_back(std::move(all));
    }
    search.run(std::move(initial));
    return search;
}

void check_order(const Graph& g)
{
    if (g.order() > max_canonical_order)
        throw std::out_of_range("canonical form supports at most 11 vertices");
}

} // namespace

std::uint64_t canonical_key(const Graph& g)
{
    check_order(g);
    SmallGraph sg(g);
    return search_for(sg).best;
}

Graph canonical_form(const Graph& g)
{
    check_order(g);
    SmallGraph sg(g);
    auto search = search_for(sg);
    std::vector<Vertex> perm(g.order());
    for (int i = 0; i < g.order(); ++i)
        perm[search.best_leaf[i][0]] = i;
    return relabel(g, perm);
}

std::vector<Graph> enumerate_connected(int n)
{
    if (n < 1 || n > max_enumeration_order)
        throw std::out_of_range("enumerate_connected supports 1 <= n <= 9");
    std::vector<Graph> level{Graph(1, {})};
    // Every connected graph on n vertices arises from one on n-1 vertices by adding a vertex
    // (a non-cut vertex always exists) joined to a nonempty subset.
    for (int order = 2; order <= n; ++order) {
        std::map<std::uint64_t, Graph> found;
        for (const auto& base : level) {
            const int prev = order - 1;
            for (std::uint32_t subset = 1; subset < (1u << prev); ++subset) {
                std::vector<Edge> edges = base.edges();
                for (int v = 0; v < prev; ++v)
                    if (subset & (1u << v))
                        edges.push_back({v, prev});
                Graph candidate(order, std::move(edges));
                auto key = canonical_key(candidate);
                if (!found.count(key))
                    found.emplace(key, canonical_form(candidate));
            }
        }
        level.clear();
        for (auto& [key, graph] : found)
            level.push_back(std::move(graph));
    }
    return level;
}

} // namespace strongedge
