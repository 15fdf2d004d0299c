#include "strongedge/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace strongedge {

Graph::Graph(int n, std::vector<Edge> edges)
    : _n(n), _adjacency(n), _incident(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    _edges = std::move(edges);
    for (EdgeId id = 0; id < size(); ++id) {
        auto [u, v] = _edges[id];
        _adjacency[u].push_back(v);
        _adjacency[v].push_back(u);
        _incident[u].push_back(id);
        _incident[v].push_back(id);
    }
    for (auto& adj : _adjacency)
        std::sort(adj.begin(), adj.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& adj = _adjacency.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const
{
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(_edges.begin(), _edges.end(), Edge{u, v});
    if (it == _edges.end() || *it != Edge{u, v})
        return -1;
    return static_cast<EdgeId>(it - _edges.begin());
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& adj : _adjacency)
        best = std::max(best, static_cast<int>(adj.size()));
    return best;
}

bool Graph::connected() const
{
    if (_n <= 1)
        return true;
    std::vector<bool> seen(_n, false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : _adjacency[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                queue.push(w);
            }
    }
    return count == _n;
}

bool edge_sees(const Graph& g, EdgeId e, EdgeId f)
{
    if (e < 0 || f < 0 || e >= g.size() || f >= g.size())
        throw std::out_of_range("invalid edge id");
    if (e == f)
        return false;
    auto [a, b] = g.edge(e);
    auto [c, d] = g.edge(f);
    if (a == c || a == d || b == c || b == d)
        return true;
    return g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d);
}

ConflictGraph::ConflictGraph(const Graph& g)
    : _base(g), _sees(g.size()), _matrix(g.size(), std::vector<bool>(g.size(), false))
{
    // Every edge seen by uv is incident to u, v, or a neighbor of either.
    for (EdgeId e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edge(e);
        std::set<EdgeId> seen;
        for (Vertex x : {u, v}) {
            for (EdgeId f : g.incident(x))
                seen.insert(f);
            for (Vertex w : g.neighbors(x))
                for (EdgeId f : g.incident(w))
                    seen.insert(f);
        }
        seen.erase(e);
        _sees[e].assign(seen.begin(), seen.end());
        for (EdgeId f : _sees[e])
            _matrix[e][f] = true;
    }
}

bool ConflictGraph::sees(EdgeId a, EdgeId b) const
{
    return _matrix.at(a).at(b);
}

VertexDeletion delete_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("invalid vertex id " + std::to_string(v));
    VertexDeletion out;
    out.vertex_map.assign(g.order(), -1);
    for (Vertex w = 0, next = 0; w < g.order(); ++w)
        if (w != v)
            out.vertex_map[w] = next++;
    std::vector<Edge> kept;
    for (const auto& [a, b] : g.edges())
        if (a != v && b != v)
            kept.push_back({out.vertex_map[a], out.vertex_map[b]});
    out.graph = Graph(g.order() - 1, kept);
    out.edge_map.assign(g.size(), -1);
    for (EdgeId e = 0; e < g.size(); ++e) {
        auto [a, b] = g.edge(e);
        if (a != v && b != v)
            out.edge_map[e] = out.graph.edge_id(out.vertex_map[a], out.vertex_map[b]);
    }
    return out;
}

Graph parse_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw ParseError("empty graph6 string", 0);
    int c0 = static_cast<unsigned char>(line[0]);
    if (c0 < 63 || c0 > 126)
        throw ParseError("graph6 length byte out of range", 0);
    if (c0 == 126)
        throw ParseError("graph6 long form (n > 62) not supported", 0);
    int n = c0 - 63;
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = 1 + (bits + 5) / 6;
    if (line.size() != expected)
        throw ParseError("graph6 length field says n=" + std::to_string(n) + " needing "
                             + std::to_string(expected) + " bytes, got " + std::to_string(line.size()),
                         std::min(line.size(), expected));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t pos = 1; pos < line.size(); ++pos) {
        int c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 character out of range", pos);
        int word = c - 63;
        for (int b = 5; b >= 0; --b, ++k) {
            bool bit = (word >> b) & 1;
            if (k >= bits) {
                if (bit)
                    throw ParseError("graph6 trailing padding bits are nonzero", pos);
                continue;
            }
            if (bit) {
                // Column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
                int j = 1;
                std::size_t start = 0;
                while (start + j <= k) {
                    start += j;
                    ++j;
                }
                edges.push_back({static_cast<Vertex>(k - start), j});
            }
        }
    }
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g)
{
    int n = g.order();
    if (n > 62)
        throw std::invalid_argument("graph6 short form supports at most 62 vertices");
    std::string out(1, static_cast<char>(n + 63));
    int word = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>((word << (6 - used)) + 63));
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

long parse_id(std::string_view token, std::size_t line_no)
{
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("malformed vertex id '" + std::string(token) + "'", line_no);
    if (value < 0)
        throw ParseError("negative vertex id", line_no);
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    long declared = -1;
    long max_id = -1;
    bool first = true;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (first && line.starts_with("n=")) {
            declared = parse_id(trim(line.substr(2)), line_no);
            first = false;
            continue;
        }
        first = false;
        auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos)
            throw ParseError("expected two vertex ids", line_no);
        long u = parse_id(trim(line.substr(0, space)), line_no);
        long v = parse_id(trim(line.substr(space + 1)), line_no);
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        auto key = std::minmax(u, v);
        if (!seen.insert({static_cast<int>(key.first), static_cast<int>(key.second)}).second)
            throw ParseError("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second), line_no);
        max_id = std::max({max_id, u, v});
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    long n = declared >= 0 ? declared : max_id + 1;
    if (max_id >= n)
        throw ParseError("vertex id " + std::to_string(max_id) + " exceeds declared n=" + std::to_string(n), 1);
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n=" << g.order() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.push_back({perm.at(u), perm.at(v)});
    return Graph(g.order(), std::move(edges));
}

namespace named {

Graph path(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph cycle(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph complete(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({i, a + j});
    return Graph(a + b, edges);
}

Graph star(int leaves)
{
    return complete_bipartite(1, leaves);
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph(10, edges);
}

} // namespace named

} // namespace strongedge
