#include "strongedge/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace strongedge {

int PartialColoring::colored_count() const
{
    return static_cast<int>(std::count_if(assignment.begin(), assignment.end(), [](Color c) { return c != 0; }));
}

ValidityReport is_valid_strong_coloring(const ConflictGraph& cg, const PartialColoring& c)
{
    if (static_cast<int>(c.assignment.size()) != cg.size())
        throw std::out_of_range("coloring length does not match the edge count");
    for (Color col : c.assignment)
        if (col < 0 || col > c.k)
            throw std::out_of_range("color " + std::to_string(col) + " outside [1," + std::to_string(c.k) + "]");
    ValidityReport report;
    for (EdgeId e = 0; e < cg.size(); ++e) {
        if (!c.colored(e))
            continue;
        for (EdgeId f : cg.sees(e))
            if (f > e && c.assignment[f] == c.assignment[e])
                report.violations.push_back({e, f, c.assignment[e]});
    }
    report.valid = report.violations.empty();
    return report;
}

std::vector<Color> available_colors(const ConflictGraph& cg, const PartialColoring& c, EdgeId e)
{
    if (e < 0 || e >= cg.size())
        throw std::out_of_range("invalid edge id " + std::to_string(e));
    std::vector<bool> used(c.k + 1, false);
    for (EdgeId f : cg.sees(e))
        used[c.assignment[f]] = true;
    std::vector<Color> out;
    for (Color col = 1; col <= c.k; ++col)
        if (!used[col])
            out.push_back(col);
    return out;
}

GreedyResult greedy_extend(const ConflictGraph& cg, const PartialColoring& c, const std::vector<EdgeId>& targets)
{
    GreedyResult result;
    result.coloring = c;
    std::vector<EdgeId> remaining = targets;
    std::sort(remaining.begin(), remaining.end());
    while (!remaining.empty()) {
        std::size_t pick = 0;
        std::vector<Color> pick_list = available_colors(cg, result.coloring, remaining[0]);
        for (std::size_t i = 1; i < remaining.size(); ++i) {
            auto list = available_colors(cg, result.coloring, remaining[i]);
            if (list.size() < pick_list.size()) {
                pick = i;
                pick_list = std::move(list);
            }
        }
        if (pick_list.empty()) {
            result.stuck = remaining[pick];
            return result;
        }
        result.coloring.assignment[remaining[pick]] = pick_list.front();
        result.order.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    result.success = true;
    return result;
}

namespace {

bool augment(const SetFamily& family, int set, std::vector<int>& owner, std::vector<bool>& visited)
{
    for (int x : family.sets[set]) {
        if (visited[x])
            continue;
        visited[x] = true;
        if (owner[x] < 0 || augment(family, owner[x], owner, visited)) {
            owner[x] = set;
            return true;
        }
    }
    return false;
}

} // namespace

SdrResult hall_sdr(const SetFamily& family)
{
    const int n = static_cast<int>(family.sets.size());
    for (const auto& s : family.sets)
        for (int x : s)
            if (x < 1 || x > family.universe)
                throw std::out_of_range("set element outside the universe");
    std::vector<int> owner(family.universe + 1, -1);
    for (int i = 0; i < n; ++i) {
        std::vector<bool> visited(family.universe + 1, false);
        if (augment(family, i, owner, visited))
            continue;
        // Sets reachable from i by alternating paths form a Hall violator: their union is exactly
        // the reached elements, all matched to reached sets other than i.
        std::vector<bool> set_reached(n, false), elem_reached(family.universe + 1, false);
        std::vector<int> stack{i};
        set_reached[i] = true;
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            for (int x : family.sets[s]) {
                if (elem_reached[x])
                    continue;
                elem_reached[x] = true;
                int t = owner[x];
                if (t >= 0 && !set_reached[t]) {
                    set_reached[t] = true;
                    stack.push_back(t);
                }
            }
        }
        SdrResult result;
        for (int s = 0; s < n; ++s)
            if (set_reached[s])
                result.violator.push_back(s);
        return result;
    }
    SdrResult result;
    result.exists = true;
    result.representatives.assign(n, 0);
    for (int x = 1; x <= family.universe; ++x)
        if (owner[x] >= 0)
            result.representatives[owner[x]] = x;
    return result;
}

std::string_view strategy_name(ExtendStrategy s)
{
    switch (s) {
    case ExtendStrategy::SameColor: return "same-color";
    case ExtendStrategy::HallSdr: return "hall-sdr";
    case ExtendStrategy::Greedy: return "greedy";
    default: return "none";
    }
}

ExtendResult erase_and_extend(const ConflictGraph& cg, const PartialColoring& c, const std::vector<EdgeId>& erase,
                              const std::vector<EdgeId>& targets)
{
    for (EdgeId e : erase)
        if (!c.colored(e))
            throw std::invalid_argument("erase edge " + std::to_string(e) + " is not colored");
    for (EdgeId e : targets)
        if (c.colored(e))
            throw std::invalid_argument("target edge " + std::to_string(e) + " is already colored");

    ExtendResult result;
    PartialColoring erased = c;
    for (EdgeId e : erase)
        erased.assignment[e] = 0;

    std::vector<EdgeId> open = targets;
    open.insert(open.end(), erase.begin(), erase.end());
    std::sort(open.begin(), open.end());
    open.erase(std::unique(open.begin(), open.end()), open.end());
    for (EdgeId e : open)
        result.lists.emplace_back(e, available_colors(cg, erased, e));
    result.coloring = erased;
    if (open.empty()) {
        result.success = true;
        return result;
    }

    // (a) one color on a mutually non-seeing pair, preferring pairs that involve an erased edge.
    std::set<EdgeId> erased_set(erase.begin(), erase.end());
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
    for (std::size_t i = 0; i < open.size(); ++i)
        for (std::size_t j = i + 1; j < open.size(); ++j)
            if (!cg.sees(open[i], open[j]))
                pairs.emplace_back(open[i], open[j]);
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
        int rx = erased_set.count(x.first) + erased_set.count(x.second);
        int ry = erased_set.count(y.first) + erased_set.count(y.second);
        return rx > ry;
    });
    auto list_of = [&](EdgeId e) -> const std::vector<Color>& {
        return std::find_if(result.lists.begin(), result.lists.end(), [e](const auto& p) { return p.first == e; })->second;
    };
    for (const auto& [a, b] : pairs) {
        std::vector<Color> common;
        std::set_intersection(list_of(a).begin(), list_of(a).end(), list_of(b).begin(), list_of(b).end(),
                              std::back_inserter(common));
        for (Color col : common) {
            PartialColoring trial = erased;
            trial.assignment[a] = trial.assignment[b] = col;
            std::vector<EdgeId> rest;
            for (EdgeId e : open)
                if (e != a && e != b)
                    rest.push_back(e);
            auto greedy = greedy_extend(cg, trial, rest);
            if (greedy.success) {
                result.success = true;
                result.strategy = ExtendStrategy::SameColor;
                result.coloring = std::move(greedy.coloring);
                result.shared_pair = std::pair{a, b};
                return result;
            }
        }
        result.attempts.push_back("same-color on edges " + std::to_string(a) + "," + std::to_string(b) + ": "
                                  + (common.empty() ? "no common color" : "greedy completion failed"));
    }
    if (pairs.empty())
        result.attempts.push_back("same-color: no mutually non-seeing pair");

    // (b) distinct representatives for all open edges.
    SetFamily family{c.k, {}};
    for (const auto& entry : result.lists)
        family.sets.push_back(entry.second);
    auto sdr = hall_sdr(family);
    if (sdr.exists) {
        for (std::size_t i = 0; i < open.size(); ++i)
            result.coloring.assignment[open[i]] = sdr.representatives[i];
        result.success = true;
        result.strategy = ExtendStrategy::HallSdr;
        return result;
    }
    result.attempts.push_back("hall-sdr: violator of size " + std::to_string(sdr.violator.size()));

    // (c) plain greedy.
    auto greedy = greedy_extend(cg, erased, open);
    if (greedy.success) {
        result.success = true;
        result.strategy = ExtendStrategy::Greedy;
        result.coloring = std::move(greedy.coloring);
        return result;
    }
    result.attempts.push_back("greedy: stuck at edge " + std::to_string(greedy.stuck));
    return result;
}

std::string_view status_name(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    default: return "TIMEOUT";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

class DsaturSearch {
public:
    DsaturSearch(const ConflictGraph& cg, int k, Budget budget)
        : _cg(cg), _n(cg.size()), _k(k), _deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)),
          _color(_n, 0), _forbidden(static_cast<std::size_t>(_n) * (k + 1), 0), _saturation(_n, 0),
          _free_degree(_n, 0)
    {
        for (EdgeId e = 0; e < _n; ++e)
            _free_degree[e] = static_cast<int>(cg.sees(e).size());
    }

    SolveStatus run()
    {
        if (_n == 0)
            return SolveStatus::Sat;
        if (_k <= 0)
            return SolveStatus::Unsat;
        return search(0, 0);
    }

    std::uint64_t nodes() const { return _nodes; }
    const std::vector<Color>& colors() const { return _color; }

private:
    SolveStatus search(int colored, int used)
    {
        if (colored == _n)
            return SolveStatus::Sat;
        if ((++_nodes & 1023) == 0 && Clock::now() > _deadline)
            return SolveStatus::Timeout;
        EdgeId pick = -1;
        for (EdgeId e = 0; e < _n; ++e) {
            if (_color[e] != 0)
                continue;
            if (pick < 0 || _saturation[e] > _saturation[pick]
                || (_saturation[e] == _saturation[pick] && _free_degree[e] > _free_degree[pick]))
                pick = e;
        }
        int limit = std::min(_k, used + 1);
        for (Color col = 1; col <= limit; ++col) {
            if (forbidden(pick, col) > 0)
                continue;
            bool dead = assign(pick, col);
            if (!dead) {
                auto status = search(colored + 1, std::max(used, col));
                if (status != SolveStatus::Unsat)
                    return status;
            }
            unassign(pick, col);
        }
        return SolveStatus::Unsat;
    }

    int& forbidden(EdgeId e, Color col) { return _forbidden[static_cast<std::size_t>(e) * (_k + 1) + col]; }

    /// Returns true when some uncolored edge is left without any color.
    bool assign(EdgeId e, Color col)
    {
        _color[e] = col;
        bool dead = false;
        for (EdgeId f : _cg.sees(e)) {
            --_free_degree[f];
            if (forbidden(f, col)++ == 0) {
                ++_saturation[f];
                if (_color[f] == 0 && _saturation[f] == _k)
                    dead = true;
            }
        }
        return dead;
    }

    void unassign(EdgeId e, Color col)
    {
        _color[e] = 0;
        for (EdgeId f : _cg.sees(e)) {
            ++_free_degree[f];
            if (--forbidden(f, col) == 0)
                --_saturation[f];
        }
    }

    const ConflictGraph& _cg;
    int _n;
    int _k;
    Clock::time_point _deadline;
    std::vector<Color> _color;
    std::vector<int> _forbidden;
    std::vector<int> _saturation;
    std::vector<int> _free_degree;
    std::uint64_t _nodes = 0;
};

} // namespace

SolveResult k_colorable(const ConflictGraph& cg, int k, Budget budget)
{
    auto start = Clock::now();
    DsaturSearch search(cg, k, budget);
    SolveResult result;
    result.status = search.run();
    result.stats.nodes = search.nodes();
    result.stats.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (result.status == SolveStatus::Sat) {
        result.coloring.k = k;
        result.coloring.assignment = search.colors();
    }
    return result;
}

std::vector<EdgeId> greedy_clique(const ConflictGraph& cg)
{
    std::vector<EdgeId> order(cg.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return cg.sees(a).size() > cg.sees(b).size(); });
    std::vector<EdgeId> best;
    for (EdgeId start : order) {
        std::vector<EdgeId> clique{start};
        for (EdgeId e : order) {
            if (e == start)
                continue;
            if (std::all_of(clique.begin(), clique.end(), [&](EdgeId f) { return cg.sees(e, f); }))
                clique.push_back(e);
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

PartialColoring dsatur_coloring(const ConflictGraph& cg)
{
    const int n = cg.size();
    PartialColoring c(n, n);
    std::vector<std::set<Color>> neighbor_colors(n);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        EdgeId pick = -1;
        for (EdgeId e = 0; e < n; ++e) {
            if (c.colored(e))
                continue;
            if (pick < 0 || neighbor_colors[e].size() > neighbor_colors[pick].size()
                || (neighbor_colors[e].size() == neighbor_colors[pick].size()
                    && cg.sees(e).size() > cg.sees(pick).size()))
                pick = e;
        }
        Color col = 1;
        while (neighbor_colors[pick].count(col))
            ++col;
        c.assignment[pick] = col;
        used = std::max(used, col);
        for (EdgeId f : cg.sees(pick))
            neighbor_colors[f].insert(col);
    }
    c.k = std::max(used, 1);
    return c;
}

ChiResult chi_s_exact(const ConflictGraph& cg, Budget budget)
{
    auto start = Clock::now();
    ChiResult result;
    if (cg.size() == 0) {
        result.certificate = PartialColoring(1, 0);
        return result;
    }
    result.lower = static_cast<int>(greedy_clique(cg).size());
    result.certificate = dsatur_coloring(cg);
    result.upper = result.certificate.k;
    auto deadline = start + std::chrono::duration_cast<Clock::duration>(budget);
    // Walk down from the greedy bound; the first UNSAT proves the previous SAT optimal.
    while (result.upper > result.lower) {
        auto remaining = std::chrono::duration<double>(deadline - Clock::now());
        if (remaining.count() <= 0) {
            result.status = SolveStatus::Timeout;
            break;
        }
        auto attempt = k_colorable(cg, result.upper - 1, remaining);
        result.stats.nodes += attempt.stats.nodes;
        if (attempt.status == SolveStatus::Sat) {
            result.upper -= 1;
            result.certificate = std::move(attempt.coloring);
        } else if (attempt.status == SolveStatus::Unsat) {
            result.lower = result.upper;
        } else {
            result.status = SolveStatus::Timeout;
            break;
        }
    }
    if (result.status == SolveStatus::Sat)
        result.chi = result.upper;
    result.stats.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return result;
}

} // namespace strongedge
