#include "strongedge/metrics.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>

namespace strongedge {

int ore_degree(const Graph& g)
{
    if (g.size() == 0)
        throw DomainError("Ore-degree is undefined for an edgeless graph");
    int best = 0;
    for (const auto& [u, v] : g.edges())
        best = std::max(best, g.degree(u) + g.degree(v));
    return best;
}

namespace {

/// Dinic max-flow on a small dense-ish network.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : _adj(nodes), _level(nodes), _next(nodes) {}

    void add_arc(int from, int to, std::int64_t cap)
    {
        _adj[from].push_back(static_cast<int>(_arcs.size()));
        _arcs.push_back({to, cap});
        _adj[to].push_back(static_cast<int>(_arcs.size()));
        _arcs.push_back({from, 0});
    }

    std::int64_t max_flow(int s, int t)
    {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            std::fill(_next.begin(), _next.end(), 0);
            while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
                total += pushed;
        }
        return total;
    }

    /// Nodes reachable from s in the residual network (valid after max_flow).
    std::vector<bool> source_side(int s) const
    {
        std::vector<bool> seen(_adj.size(), false);
        std::queue<int> queue;
        queue.push(s);
        seen[s] = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int a : _adj[x])
                if (_arcs[a].cap > 0 && !seen[_arcs[a].to]) {
                    seen[_arcs[a].to] = true;
                    queue.push(_arcs[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };

    bool bfs(int s, int t)
    {
        std::fill(_level.begin(), _level.end(), -1);
        std::queue<int> queue;
        queue.push(s);
        _level[s] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int a : _adj[x])
                if (_arcs[a].cap > 0 && _level[_arcs[a].to] < 0) {
                    _level[_arcs[a].to] = _level[x] + 1;
                    queue.push(_arcs[a].to);
                }
        }
        return _level[t] >= 0;
    }

    std::int64_t dfs(int x, int t, std::int64_t limit)
    {
        if (x == t)
            return limit;
        for (int& i = _next[x]; i < static_cast<int>(_adj[x].size()); ++i) {
            int a = _adj[x][i];
            auto& arc = _arcs[a];
            if (arc.cap > 0 && _level[arc.to] == _level[x] + 1) {
                if (std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap))) {
                    arc.cap -= pushed;
                    _arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<Arc> _arcs;
    std::vector<std::vector<int>> _adj;
    std::vector<int> _level;
    std::vector<int> _next;
};

struct Fraction {
    std::int64_t p;
    std::int64_t q;
};

/// Goldberg's construction: returns a vertex set S with |E(S)| > (p/q)|S| if one exists, else empty.
std::vector<Vertex> denser_than(const Graph& g, Fraction density)
{
    const int n = g.order();
    const std::int64_t m = g.size();
    const std::int64_t q = density.q;
    const int s = n, t = n + 1;
    FlowNetwork net(n + 2);
    for (Vertex v = 0; v < n; ++v) {
        net.add_arc(s, v, m * q);
        net.add_arc(v, t, m * q + 2 * density.p - g.degree(v) * q);
    }
    for (const auto& [u, v] : g.edges()) {
        net.add_arc(u, v, q);
        net.add_arc(v, u, q);
    }
    // cut(S) = m*n*q + 2*(p*|S| - q*|E(S)|)
    std::int64_t flow = net.max_flow(s, t);
    if (flow >= m * n * q)
        return {};
    auto side = net.source_side(s);
    std::vector<Vertex> witness;
    for (Vertex v = 0; v < n; ++v)
        if (side[v])
            witness.push_back(v);
    return witness;
}

int induced_edges(const Graph& g, const std::vector<Vertex>& set)
{
    std::vector<bool> in(g.order(), false);
    for (Vertex v : set)
        in[v] = true;
    int count = 0;
    for (const auto& [u, v] : g.edges())
        if (in[u] && in[v])
            ++count;
    return count;
}

} // namespace

MadResult mad_exact(const Graph& g)
{
    if (g.size() == 0)
        throw DomainError("mad is undefined for an edgeless graph");
    const std::int64_t n = g.order();
    const std::int64_t m = g.size();
    // A subgraph density |E(S)|/|S| in lowest terms a/b has b <= n, a <= m and a/b <= (n-1)/2.
    std::vector<Fraction> candidates;
    for (std::int64_t b = 1; b <= n; ++b)
        for (std::int64_t a = 0; a <= std::min(m, b * (n - 1) / 2); ++a)
            if (std::gcd(a, b) == 1)
                candidates.push_back({a, b});
    std::sort(candidates.begin(), candidates.end(),
              [](const Fraction& x, const Fraction& y) { return x.p * y.q < y.p * x.q; });

    // First candidate that nothing is strictly denser than is the maximum density.
    std::size_t lo = 0, hi = candidates.size() - 1;   // denser_than(lo) nonempty, denser_than(hi) empty
    std::vector<Vertex> witness = denser_than(g, candidates[lo]);
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto set = denser_than(g, candidates[mid]);
        if (set.empty()) {
            hi = mid;
        } else {
            lo = mid;
            witness = std::move(set);
        }
    }
    const auto& best = candidates[hi];
    MadResult result{Rational(2 * best.p, best.q), std::move(witness)};
    if (Rational(2 * induced_edges(g, result.witness), static_cast<std::int64_t>(result.witness.size())) != result.value)
        throw std::logic_error("mad witness does not attain the computed density");
    return result;
}

MadResult mad_bruteforce(const Graph& g)
{
    if (g.size() == 0)
        throw DomainError("mad is undefined for an edgeless graph");
    const int n = g.order();
    if (n > 20)
        throw DomainError("mad_bruteforce is limited to 20 vertices");
    std::vector<std::uint32_t> nbr_mask(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbr_mask[u] |= 1u << v;
        nbr_mask[v] |= 1u << u;
    }
    std::int64_t best_e = 0, best_s = 1;
    std::uint32_t best_mask = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::int64_t twice_edges = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                twice_edges += __builtin_popcount(nbr_mask[v] & mask);
        std::int64_t size = __builtin_popcount(mask);
        if (twice_edges * best_s > best_e * size) {
            best_e = twice_edges;
            best_s = size;
            best_mask = mask;
        }
    }
    MadResult result{Rational(best_e, best_s), {}};
    for (int v = 0; v < n; ++v)
        if (best_mask & (1u << v))
            result.witness.push_back(v);
    return result;
}

int conjectured_bound(int theta)
{
    if (theta < 5)
        throw DomainError("conjectured bound is stated for Ore-degree >= 5");
    int c = (theta + 3) / 4;
    switch (theta % 4) {
    case 1: return 5 * c * c - 8 * c + 3;
    case 2: return 5 * c * c - 6 * c + 2;
    case 3: return 5 * c * c - 4 * c + 1;
    default: return 5 * c * c;
    }
}

Rational mad_upper_bound(int theta)
{
    if (theta < 2)
        throw DomainError("mad upper bound needs Ore-degree >= 2");
    std::int64_t k = theta / 2;
    if (theta % 2 == 1)
        return Rational(2 * k * (k + 1), 2 * k + 1);
    return Rational(k);
}

std::string_view scheme_name(Scheme s)
{
    return s == Scheme::Theta7 ? "theta7" : "theta8";
}

Scheme parse_scheme(std::string_view text)
{
    if (text == "theta7" || text == "7")
        return Scheme::Theta7;
    if (text == "theta8" || text == "8")
        return Scheme::Theta8;
    throw std::invalid_argument("unknown scheme '" + std::string(text) + "' (expected theta7 or theta8)");
}

int scheme_palette(Scheme s) { return s == Scheme::Theta7 ? 13 : 20; }
int scheme_theta(Scheme s) { return s == Scheme::Theta7 ? 7 : 8; }
Rational scheme_target(Scheme s) { return s == Scheme::Theta7 ? Rational(34, 11) : Rational(113, 31); }

namespace {

constexpr std::array label_table{
    std::pair{Label::Unclassified, std::string_view{"UNCLASSIFIED"}},
    std::pair{Label::Deg2, std::string_view{"DEG2"}},
    std::pair{Label::Deg3A, std::string_view{"DEG3A"}},
    std::pair{Label::Deg3B, std::string_view{"DEG3B"}},
    std::pair{Label::Deg3CWeak, std::string_view{"DEG3C_WEAK"}},
    std::pair{Label::Deg3CModerate, std::string_view{"DEG3C_MODERATE"}},
    std::pair{Label::Deg3CStrong, std::string_view{"DEG3C_STRONG"}},
    std::pair{Label::Deg3D, std::string_view{"DEG3D"}},
    std::pair{Label::Deg4, std::string_view{"DEG4"}},
    std::pair{Label::Deg3BStrong, std::string_view{"DEG3B_STRONG"}},
    std::pair{Label::Deg3BWeak, std::string_view{"DEG3B_WEAK"}},
    std::pair{Label::Deg3C, std::string_view{"DEG3C"}},
    std::pair{Label::Deg4A, std::string_view{"DEG4A"}},
    std::pair{Label::Deg4B, std::string_view{"DEG4B"}},
    std::pair{Label::Deg4CStrong, std::string_view{"DEG4C_STRONG"}},
    std::pair{Label::Deg4CWeak, std::string_view{"DEG4C_WEAK"}},
    std::pair{Label::Deg4D, std::string_view{"DEG4D"}},
    std::pair{Label::Deg5, std::string_view{"DEG5"}},
};

} // namespace

std::string_view label_name(Label l)
{
    for (const auto& [label, name] : label_table)
        if (label == l)
            return name;
    return "UNCLASSIFIED";
}

Label parse_label(std::string_view text)
{
    for (const auto& [label, name] : label_table)
        if (name == text)
            return label;
    throw std::invalid_argument("unknown class label '" + std::string(text) + "'");
}

const std::vector<Label>& scheme_labels(Scheme s)
{
    static const std::vector<Label> theta7{Label::Deg2, Label::Deg3A, Label::Deg3B, Label::Deg3CWeak,
                                           Label::Deg3CModerate, Label::Deg3CStrong, Label::Deg3D, Label::Deg4};
    static const std::vector<Label> theta8{Label::Deg3A, Label::Deg3BStrong, Label::Deg3BWeak, Label::Deg3C,
                                           Label::Deg3D, Label::Deg4A, Label::Deg4B, Label::Deg4CStrong,
                                           Label::Deg4CWeak, Label::Deg4D, Label::Deg5};
    return s == Scheme::Theta7 ? theta7 : theta8;
}

int label_degree(Label l)
{
    switch (l) {
    case Label::Unclassified: return 0;
    case Label::Deg2: return 2;
    case Label::Deg4:
    case Label::Deg4A:
    case Label::Deg4B:
    case Label::Deg4CStrong:
    case Label::Deg4CWeak:
    case Label::Deg4D: return 4;
    case Label::Deg5: return 5;
    default: return 3;
    }
}

namespace {

struct DegreeCounts {
    int d3 = 0, d4 = 0, d5 = 0, other = 0;
};

DegreeCounts count_neighbor_degrees(const Graph& g, Vertex v)
{
    DegreeCounts c;
    for (Vertex w : g.neighbors(v)) {
        switch (g.degree(w)) {
        case 3: ++c.d3; break;
        case 4: ++c.d4; break;
        case 5: ++c.d5; break;
        default: ++c.other;
        }
    }
    return c;
}

std::string vertex_warning(Vertex v, const std::string& why)
{
    return "vertex " + std::to_string(v) + ": " + why + "; labelled UNCLASSIFIED";
}

} // namespace

Classification classify_theta7(const Graph& g)
{
    Classification out{Scheme::Theta7, std::vector<Label>(g.order(), Label::Unclassified), {}, {}};
    // Base classes. 3(C) is provisionally moderate until the subclass pass.
    for (Vertex v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 2) {
            out.labels[v] = Label::Deg2;
        } else if (d == 4) {
            out.labels[v] = Label::Deg4;
        } else if (d == 3) {
            auto c = count_neighbor_degrees(g, v);
            if (c.d3 + c.d4 != 3) {
                out.warnings.push_back(vertex_warning(v, "3-vertex with a neighbor of degree other than 3 or 4"));
                continue;
            }
            static constexpr std::array by_fours{Label::Deg3D, Label::Deg3CModerate, Label::Deg3B, Label::Deg3A};
            out.labels[v] = by_fours[c.d4];
        } else {
            out.warnings.push_back(vertex_warning(v, "degree " + std::to_string(d) + " outside {2,3,4}"));
        }
    }
    // Subclasses of 3(C) read only base classes of neighbors, so one more pass suffices.
    std::vector<Label> base = out.labels;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (base[v] != Label::Deg3CModerate)
            continue;
        int d_count = 0, b_count = 0, c_count = 0;
        for (Vertex w : g.neighbors(v)) {
            d_count += base[w] == Label::Deg3D;
            b_count += base[w] == Label::Deg3B;
            c_count += base[w] == Label::Deg3CModerate;
        }
        if (d_count == 2)
            out.labels[v] = Label::Deg3CWeak;
        else if (b_count >= 1)
            out.labels[v] = Label::Deg3CStrong;
        else if (c_count == 0)
            out.side_assertion_failures.push_back("vertex " + std::to_string(v)
                                                  + ": 3(C_moderate) without a 3(C)-neighbor");
    }
    return out;
}

Classification classify_theta8(const Graph& g)
{
    Classification out{Scheme::Theta8, std::vector<Label>(g.order(), Label::Unclassified), {}, {}};
    for (Vertex v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        auto c = count_neighbor_degrees(g, v);
        if (d == 5) {
            out.labels[v] = Label::Deg5;
        } else if (d == 3) {
            if (c.other > 0) {
                out.warnings.push_back(vertex_warning(v, "3-vertex with a neighbor of degree outside {3,4,5}"));
                continue;
            }
            switch (c.d5) {
            case 3: out.labels[v] = Label::Deg3A; break;
            case 2: out.labels[v] = c.d4 == 1 ? Label::Deg3BStrong : Label::Deg3BWeak; break;
            case 1: out.labels[v] = Label::Deg3C; break;
            default: out.labels[v] = Label::Deg3D;
            }
        } else if (d == 4) {
            if (c.d3 + c.d4 != 4 || c.d4 == 0) {
                out.warnings.push_back(vertex_warning(v, c.d4 == 0 && c.d3 == 4
                                                             ? "4-vertex with four 3-neighbors"
                                                             : "4-vertex with a neighbor of degree outside {3,4}"));
                continue;
            }
            static constexpr std::array by_fours{Label::Unclassified, Label::Deg4D, Label::Deg4CStrong, Label::Deg4B,
                                                 Label::Deg4A};
            out.labels[v] = by_fours[c.d4];
        } else {
            out.warnings.push_back(vertex_warning(v, "degree " + std::to_string(d) + " outside {3,4,5}"));
        }
    }
    std::vector<Label> base = out.labels;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (base[v] != Label::Deg4CStrong)
            continue;
        int c_count = 0;
        for (Vertex w : g.neighbors(v))
            c_count += base[w] == Label::Deg3C;
        if (c_count == 2)
            out.labels[v] = Label::Deg4CWeak;
    }
    return out;
}

Classification classify(const Graph& g, Scheme s)
{
    return s == Scheme::Theta7 ? classify_theta7(g) : classify_theta8(g);
}

} // namespace strongedge
