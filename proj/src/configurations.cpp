#include "strongedge/configurations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace strongedge {

bool NodeConstraint::admits(int degree, Label label) const
{
    if (!degrees.empty()) {
        bool listed = std::find(degrees.begin(), degrees.end(), degree) != degrees.end();
        if (listed == exclude_degrees)
            return false;
    }
    if (!labels.empty()) {
        bool listed = std::find(labels.begin(), labels.end(), label) != labels.end();
        if (listed == exclude_labels)
            return false;
    }
    return true;
}

std::string NodeConstraint::describe() const
{
    std::ostringstream out;
    const char* sep = "";
    if (!degrees.empty()) {
        out << (exclude_degrees ? "degree not in {" : "degree in {");
        for (std::size_t i = 0; i < degrees.size(); ++i)
            out << (i ? "," : "") << degrees[i];
        out << "}";
        sep = ", ";
    }
    if (!labels.empty()) {
        out << sep << (exclude_labels ? "class not in {" : "class in {");
        for (std::size_t i = 0; i < labels.size(); ++i)
            out << (i ? "," : "") << label_name(labels[i]);
        out << "}";
    }
    auto text = out.str();
    return text.empty() ? "any" : text;
}

namespace {

NodeConstraint any() { return {}; }
NodeConstraint deg(std::vector<int> d) { return {std::move(d), false, {}, false}; }
NodeConstraint not_deg(std::vector<int> d) { return {std::move(d), true, {}, false}; }
NodeConstraint cls(std::vector<Label> l) { return {{}, false, std::move(l), false}; }
NodeConstraint not_cls(std::vector<Label> l) { return {{}, false, std::move(l), true}; }

Edge edge_of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// The neighbor of v outside `known`; v must have exactly one.
Vertex other_neighbor(const Graph& g, Vertex v, std::initializer_list<Vertex> known)
{
    for (Vertex w : g.neighbors(v))
        if (std::find(known.begin(), known.end(), w) == known.end())
            return w;
    throw std::logic_error("recipe planning: expected another neighbor of vertex " + std::to_string(v));
}

Recipe generic_recipe(int palette, int designated)
{
    Recipe r;
    r.palette = palette;
    r.generic = true;
    r.summary = "delete the distinguished vertex, recolor exactly, greedy-extend its edges";
    r.plan = [designated](const Graph&, const std::vector<Vertex>& a) {
        return RecipePlan{"generic", a[designated], {}, {}};
    };
    return r;
}

/// Recipe deleting one node with fixed per-edge bounds and no erase step.
Recipe delete_recipe(int palette, std::string summary, int designated,
                     std::vector<std::tuple<std::string, int, int, int>> bounds)
{
    Recipe r;
    r.palette = palette;
    r.summary = std::move(summary);
    r.plan = [designated, bounds](const Graph&, const std::vector<Vertex>& a) {
        RecipePlan plan{"lemma", a[designated], {}, {}};
        for (const auto& [role, p, q, limit] : bounds)
            plan.bounds.push_back({role, edge_of(a[p], a[q]), limit, -1});
        return plan;
    };
    return r;
}

/// Recipe deleting one node and erasing some pattern edges, with before/after bounds.
Recipe erase_recipe(int palette, std::string summary, int designated, std::vector<std::pair<int, int>> erase,
                    std::vector<std::tuple<std::string, int, int, int, int>> bounds)
{
    Recipe r;
    r.palette = palette;
    r.summary = std::move(summary);
    r.plan = [designated, erase, bounds](const Graph&, const std::vector<Vertex>& a) {
        RecipePlan plan{"erase", a[designated], {}, {}};
        for (auto [p, q] : erase)
            plan.erase.push_back(edge_of(a[p], a[q]));
        for (const auto& [role, p, q, before, after] : bounds)
            plan.bounds.push_back({role, edge_of(a[p], a[q]), before, after});
        return plan;
    };
    return r;
}

bool constraint_maps(const Pattern& p, const std::vector<int>& perm)
{
    const int k = static_cast<int>(p.nodes.size());
    for (int i = 0; i < k; ++i)
        if (!(p.nodes[perm[i]].constraint == p.nodes[i].constraint))
            return false;
    auto pair_set = [](const std::vector<std::pair<int, int>>& list) {
        std::set<std::pair<int, int>> s;
        for (auto [a, b] : list)
            s.insert(std::minmax(a, b));
        return s;
    };
    auto mapped = [&](const std::vector<std::pair<int, int>>& list) {
        std::set<std::pair<int, int>> s;
        for (auto [a, b] : list)
            s.insert(std::minmax(perm[a], perm[b]));
        return s;
    };
    if (mapped(p.edges) != pair_set(p.edges) || mapped(p.nonedges) != pair_set(p.nonedges))
        return false;
    auto canon = [](std::vector<std::pair<int, NodeConstraint>> alt) {
        std::sort(alt.begin(), alt.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return alt;
    };
    for (const auto& alt : p.alternatives) {
        std::vector<std::pair<int, NodeConstraint>> image;
        for (const auto& [node, c] : alt)
            image.emplace_back(perm[node], c);
        image = canon(image);
        bool present = std::any_of(p.alternatives.begin(), p.alternatives.end(),
                                   [&](const auto& other) { return canon(other) == image; });
        if (!present)
            return false;
    }
    return true;
}

void compute_automorphisms(Pattern& p)
{
    std::vector<int> perm(p.nodes.size());
    std::iota(perm.begin(), perm.end(), 0);
    p.automorphisms.clear();
    do {
        if (constraint_maps(p, perm))
            p.automorphisms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

const std::vector<Label> three7{Label::Deg3A, Label::Deg3B, Label::Deg3CWeak, Label::Deg3CModerate,
                                Label::Deg3CStrong, Label::Deg3D};
const std::vector<Label> c7{Label::Deg3CWeak, Label::Deg3CModerate, Label::Deg3CStrong};
const std::vector<Label> c8_four{Label::Deg4CStrong, Label::Deg4CWeak};

std::vector<Pattern> build_theta7()
{
    constexpr int k = 13;
    std::vector<Pattern> out;

    out.push_back({"T7.C1", "no-1-5-6", Scheme::Theta7, "a 1-, 5- or 6-vertex",
                   {{"x", deg({1, 5, 6})}}, {}, {}, {}, generic_recipe(k, 0), {}});

    out.push_back({"T7.C2", "2v", Scheme::Theta7, "a 2-vertex with a neighbor that is not a 4-vertex",
                   {{"x", deg({2})}, {"y", not_deg({4})}}, {{0, 1}}, {}, {}, generic_recipe(k, 0), {}});

    out.push_back({"T7.C3", "3dv", Scheme::Theta7,
                   "a 3(D)-vertex adjacent to another 3(D)-vertex but not to two 3(B)-vertices",
                   {{"x", cls({Label::Deg3D})}, {"y", cls({Label::Deg3D})}, {"a", any()}, {"b", any()}},
                   {{0, 1}, {0, 2}, {0, 3}},
                   {},
                   {{{2, not_cls({Label::Deg3B})}}, {{3, not_cls({Label::Deg3B})}}},
                   generic_recipe(k, 0),
                   {}});

    out.push_back({"T7.C4", "4v", Scheme::Theta7, "a 4-vertex adjacent to two 2-vertices",
                   {{"x", deg({4})}, {"y", deg({2})}, {"z", deg({2})}}, {{0, 1}, {0, 2}}, {}, {},
                   generic_recipe(k, 0), {}});

    {
        Recipe r;
        r.palette = k;
        r.summary = "three 3-vertices: delete x1 and apply the ordering lemma; one 4-vertex: delete a 3-vertex, "
                    "erase the opposite edge, extend";
        r.plan = [](const Graph& g, const std::vector<Vertex>& a) {
            std::vector<Vertex> threes, fours;
            for (Vertex v : a) {
                if (g.degree(v) == 3)
                    threes.push_back(v);
                else if (g.degree(v) == 4)
                    fours.push_back(v);
            }
            if (threes.size() == 3) {
                Vertex x1 = a[0], x2 = a[1], x3 = a[2];
                Vertex y = other_neighbor(g, x1, {x2, x3});
                return RecipePlan{"case 1: three 3-vertices", x1, {},
                                  {{"x1y", edge_of(x1, y), 12, -1},
                                   {"x1x2", edge_of(x1, x2), 9, -1},
                                   {"x1x3", edge_of(x1, x3), 9, -1}}};
            }
            if (fours.size() == 1 && threes.size() == 2) {
                Vertex x1 = fours[0], x2 = threes[0], x3 = threes[1];
                Vertex z = other_neighbor(g, x2, {x1, x3});
                return RecipePlan{"case 2: one 4-vertex, two 3-vertices", x2, {edge_of(x1, x3)},
                                  {{"x2z", edge_of(x2, z), 13, 12},
                                   {"x2x1", edge_of(x2, x1), 11, 10},
                                   {"x2x3", edge_of(x2, x3), 10, 9},
                                   {"x1x3", edge_of(x1, x3), 10, 10}}};
            }
            return RecipePlan{"generic", a[0], {}, {}};
        };
        out.push_back({"T7.C5", "triangle", Scheme::Theta7, "a triangle",
                       {{"x1", any()}, {"x2", any()}, {"x3", any()}}, {{0, 1}, {1, 2}, {0, 2}}, {}, {}, r, {}});
    }

    out.push_back({"T7.C6", "4cycle", Scheme::Theta7,
                   "4-cycle x1~x2~x3~x4 with x1 a 3(D)-vertex and x2, x3, x4 3-vertices",
                   {{"x1", cls({Label::Deg3D})}, {"x2", deg({3})}, {"x3", deg({3})}, {"x4", deg({3})}, {"y", deg({3})}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}},
                   {{0, 2}},
                   {},
                   delete_recipe(k, "delete x1 and apply the ordering lemma", 0,
                                 {{"x1y", 0, 4, 12}, {"x1x2", 0, 1, 10}, {"x1x4", 0, 3, 10}}),
                   {}});

    out.push_back({"T7.C7", "5cycle", Scheme::Theta7,
                   "5-cycle x1~...~x5 with x1, x3, x4 3(D)-vertices and x2, x5 3-vertices",
                   {{"x1", cls({Label::Deg3D})}, {"x2", deg({3})}, {"x3", cls({Label::Deg3D})},
                    {"x4", cls({Label::Deg3D})}, {"x5", deg({3})}, {"y", deg({3})}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}},
                   {{5, 2}, {5, 3}},
                   {},
                   erase_recipe(k, "delete x1, erase x3x4, color x1y and x3x4 alike or by distinct representatives", 0,
                                {{2, 3}},
                                {{"x1y", 0, 5, 12, 12}, {"x1x2", 0, 1, 11, 10}, {"x1x5", 0, 4, 11, 10},
                                 {"x3x4", 2, 3, 10, 10}}),
                   {}});

    out.push_back({"T7.C8", "pan", Scheme::Theta7,
                   "5-cycle x1~...~x5 plus pendant x1y; y 3(C) or 3(D), x1, x4 3(D), x2, x3, x5 3-vertices",
                   {{"x1", cls({Label::Deg3D})}, {"x2", deg({3})}, {"x3", deg({3})}, {"x4", cls({Label::Deg3D})},
                    {"x5", deg({3})},
                    {"y", cls({Label::Deg3CWeak, Label::Deg3CModerate, Label::Deg3CStrong, Label::Deg3D})}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}},
                   {{5, 2}, {5, 3}},
                   {},
                   erase_recipe(k, "delete x1, erase x3x4, color x1y and x3x4 alike or by distinct representatives", 0,
                                {{2, 3}},
                                {{"x1y", 0, 5, 11, 11}, {"x1x2", 0, 1, 11, 10}, {"x1x5", 0, 4, 11, 10},
                                 {"x3x4", 2, 3, 11, 11}}),
                   {}});

    out.push_back({"T7.C9", "3d1", Scheme::Theta7, "a 3(D)-vertex adjacent to two 3(C_weak)-vertices",
                   {{"x", cls({Label::Deg3D})}, {"y1", cls({Label::Deg3CWeak})}, {"y2", cls({Label::Deg3CWeak})},
                    {"w", deg({3})}, {"z1", cls({Label::Deg3D})}, {"z2", cls({Label::Deg3D})}},
                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}},
                   {{1, 2}, {1, 5}, {4, 2}, {4, 5}},
                   {},
                   erase_recipe(k, "delete x, erase y1z1 and y2z2, color them alike or by distinct representatives", 0,
                                {{1, 4}, {2, 5}},
                                {{"e1", 0, 1, 11, 9}, {"e2", 0, 2, 11, 9}, {"e3", 0, 3, 12, 10},
                                 {"e4", 1, 4, 10, 10}, {"e5", 2, 5, 10, 10}}),
                   {}});

    out.push_back({"T7.C10", "3d2", Scheme::Theta7,
                   "a 3(D)-vertex with three 3(C)-neighbors, one 3(C_weak), the others not both 3(C_strong)",
                   {{"x", cls({Label::Deg3D})}, {"y1", cls({Label::Deg3CWeak})}, {"y2", cls({Label::Deg3CModerate})},
                    {"y3", cls({Label::Deg3CModerate, Label::Deg3CStrong})}, {"z1", cls({Label::Deg3D})},
                    {"z2", cls(c7)}},
                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}},
                   {{1, 2}, {1, 5}, {4, 2}, {4, 5}},
                   {},
                   erase_recipe(k, "delete x, erase y1z1 and y2z2, color them alike or by distinct representatives", 0,
                                {{1, 4}, {2, 5}},
                                {{"e1", 0, 1, 11, 9}, {"e2", 0, 2, 11, 9}, {"e3", 0, 3, 11, 9},
                                 {"e4", 1, 4, 10, 10}, {"e5", 2, 5, 11, 11}}),
                   {}});
    return out;
}

std::vector<Pattern> build_theta8()
{
    constexpr int k = 20;
    std::vector<Pattern> out;

    {
        Recipe r;
        r.palette = k;
        r.summary = "delete the vertex and apply the ordering lemma";
        r.plan = [](const Graph& g, const std::vector<Vertex>& a) {
            Vertex x = a[0];
            RecipePlan plan{"degree " + std::to_string(g.degree(x)), x, {}, {}};
            if (g.degree(x) == 1)
                plan.bounds.push_back({"xy", edge_of(x, g.neighbors(x)[0]), 12, -1});
            else if (g.degree(x) == 2)
                for (Vertex w : g.neighbors(x))
                    plan.bounds.push_back({"xv", edge_of(x, w), 17, -1});
            return plan;
        };
        out.push_back({"T8.C1", "no-1-2-6-7", Scheme::Theta8, "a 1-, 2-, 6- or 7-vertex",
                       {{"x", deg({1, 2, 6, 7})}}, {}, {}, {}, r, {}});
    }

    out.push_back({"T8.C2", "83v", Scheme::Theta8,
                   "a 3-vertex adjacent to a 3-vertex but not to two 5-vertices",
                   {{"x", deg({3})}, {"y", deg({3})}, {"z", not_deg({5})}, {"w", any()}},
                   {{0, 1}, {0, 2}, {0, 3}},
                   {},
                   {},
                   delete_recipe(k, "delete x and apply the ordering lemma", 0,
                                 {{"xy", 0, 1, 17}, {"xz", 0, 2, 18}, {"xw", 0, 3, 17}}),
                   {}});

    out.push_back({"T8.C3", "84v", Scheme::Theta8, "a 4-vertex adjacent to four 3-vertices",
                   {{"x", deg({4})}, {"y1", deg({3})}, {"y2", deg({3})}, {"y3", deg({3})}, {"y4", deg({3})}},
                   {{0, 1}, {0, 2}, {0, 3}, {0, 4}},
                   {},
                   {},
                   delete_recipe(k, "delete x and apply the ordering lemma", 0,
                                 {{"xy1", 0, 1, 16}, {"xy2", 0, 2, 16}, {"xy3", 0, 3, 16}, {"xy4", 0, 4, 16}}),
                   {}});

    {
        Recipe r;
        r.palette = k;
        r.summary = "delete x and apply the ordering lemma";
        r.plan = [](const Graph& g, const std::vector<Vertex>& a) {
            // y1 is a neighbor that is not a 4(B)-vertex; recompute from the graph.
            auto labels = classify_theta8(g).labels;
            std::vector<Vertex> ys{a[1], a[2], a[3]};
            std::stable_partition(ys.begin(), ys.end(), [&](Vertex y) { return labels[y] != Label::Deg4B; });
            Vertex x = a[0];
            return RecipePlan{"lemma", x, {},
                              {{"xy1", edge_of(x, ys[0]), 17, -1},
                               {"xy2", edge_of(x, ys[1]), 18, -1},
                               {"xy3", edge_of(x, ys[2]), 18, -1}}};
        };
        out.push_back({"T8.C4", "83dv", Scheme::Theta8, "a 3(D)-vertex with a 4-neighbor that is not a 4(B)-vertex",
                       {{"x", cls({Label::Deg3D})}, {"y1", deg({4})}, {"y2", deg({4})}, {"y3", deg({4})}},
                       {{0, 1}, {0, 2}, {0, 3}},
                       {},
                       {{{1, not_cls({Label::Deg4B})}}, {{2, not_cls({Label::Deg4B})}}, {{3, not_cls({Label::Deg4B})}}},
                       r,
                       {}});
    }

    {
        Recipe r;
        r.palette = k;
        r.summary = "delete x and apply the ordering lemma";
        r.plan = [](const Graph& g, const std::vector<Vertex>& a) {
            auto labels = classify_theta8(g).labels;
            Vertex x = a[0], z = a[4];
            std::vector<Vertex> ys{a[1], a[2], a[3]};
            std::stable_partition(ys.begin(), ys.end(), [&](Vertex y) { return labels[y] == Label::Deg3C; });
            if (labels[ys[0]] == Label::Deg3C)
                return RecipePlan{"3(C)-neighbor", x, {},
                                  {{"xy1", edge_of(x, ys[0]), 16, -1},
                                   {"xy2", edge_of(x, ys[1]), 17, -1},
                                   {"xy3", edge_of(x, ys[2]), 17, -1},
                                   {"xz", edge_of(x, z), 18, -1}}};
            return RecipePlan{"4(C)/4(D)-neighbor", x, {},
                              {{"xy1", edge_of(x, ys[0]), 17, -1},
                               {"xy2", edge_of(x, ys[1]), 17, -1},
                               {"xy3", edge_of(x, ys[2]), 17, -1},
                               {"xz", edge_of(x, z), 16, -1}}};
        };
        out.push_back({"T8.C5", "84dv", Scheme::Theta8,
                       "a 4(D)-vertex with a 3(C)-neighbor or with a 4(C)/4(D)-neighbor",
                       {{"x", cls({Label::Deg4D})}, {"y1", deg({3})}, {"y2", deg({3})}, {"y3", deg({3})}, {"z", deg({4})}},
                       {{0, 1}, {0, 2}, {0, 3}, {0, 4}},
                       {},
                       {{{1, cls({Label::Deg3C})}},
                        {{2, cls({Label::Deg3C})}},
                        {{3, cls({Label::Deg3C})}},
                        {{4, cls({Label::Deg4CStrong, Label::Deg4CWeak, Label::Deg4D})}}},
                       r,
                       {}});
    }

    out.push_back({"T8.C6", "4c-triangle", Scheme::Theta8, "a triangle of 4(C)-vertices",
                   {{"x1", cls(c8_four)}, {"x2", cls(c8_four)}, {"x3", cls(c8_four)}, {"y1", deg({3})}, {"y2", deg({3})}},
                   {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}},
                   {},
                   {},
                   delete_recipe(k, "delete x1 and apply the ordering lemma", 0,
                                 {{"x1x2", 0, 1, 13}, {"x1x3", 0, 2, 13}, {"x1y1", 0, 3, 17}, {"x1y2", 0, 4, 17}}),
                   {}});

    out.push_back({"T8.C7", "3-triangle", Scheme::Theta8, "a triangle with a 3-vertex",
                   {{"x1", deg({3})}, {"x2", any()}, {"x3", any()}}, {{0, 1}, {1, 2}, {0, 2}}, {}, {},
                   generic_recipe(k, 0), {}});

    out.push_back({"T8.C8", "34c4c4c", Scheme::Theta8,
                   "4-cycle x1~x2~x3~x4 with x1 a 3-vertex and x2, x3, x4 4(C)-vertices",
                   {{"x1", deg({3})}, {"x2", cls(c8_four)}, {"x3", cls(c8_four)}, {"x4", cls(c8_four)}, {"y", any()}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}},
                   {{0, 2}},
                   {},
                   delete_recipe(k, "delete x1 and apply the ordering lemma", 0,
                                 {{"x1y", 0, 4, 18}, {"x1x2", 0, 1, 17}, {"x1x4", 0, 3, 17}}),
                   {}});

    out.push_back({"T8.C9", "84cv", Scheme::Theta8, "a 4(C_weak)-vertex adjacent to two 4(C)-vertices",
                   {{"x", cls({Label::Deg4CWeak})}, {"y1", cls({Label::Deg3C})}, {"y2", cls({Label::Deg3C})},
                    {"z1", cls(c8_four)}, {"z2", cls(c8_four)}, {"w1", deg({3})}, {"w2", deg({3})}},
                   {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 5}, {4, 6}},
                   {{3, 4}, {3, 6}, {4, 5}, {5, 6}},
                   {},
                   erase_recipe(k, "delete x, erase z1w1 and z2w2, color them alike or by distinct representatives", 0,
                                {{3, 5}, {4, 6}},
                                {{"e1", 0, 1, 17, 15}, {"e2", 0, 2, 17, 15}, {"e3", 0, 3, 17, 15}, {"e4", 0, 4, 17, 15},
                                 {"e5", 3, 5, 17, 17}, {"e6", 4, 6, 17, 17}}),
                   {}});

    out.push_back({"T8.C10", "85v", Scheme::Theta8, "a 5-vertex adjacent to two 3(B_weak)-vertices",
                   {{"x", deg({5})}, {"y1", cls({Label::Deg3BWeak})}, {"y2", cls({Label::Deg3BWeak})}, {"y3", any()},
                    {"y4", any()}, {"y5", any()}, {"z1", deg({3})}, {"z2", deg({3})}},
                   {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {2, 7}},
                   {{1, 2}, {1, 7}, {2, 6}, {6, 7}},
                   {},
                   erase_recipe(k, "delete x, erase y1z1 and y2z2, color them alike or by distinct representatives", 0,
                                {{1, 6}, {2, 7}},
                                {{"e1", 0, 1, 16, 14}, {"e2", 0, 2, 16, 14}, {"e3", 0, 3, 18, 16}, {"e4", 0, 4, 18, 16},
                                 {"e5", 0, 5, 18, 16}, {"e6", 1, 6, 15, 15}, {"e7", 2, 7, 15, 15}}),
                   {}});
    return out;
}

std::vector<Pattern> finish(std::vector<Pattern> patterns)
{
    for (auto& p : patterns)
        compute_automorphisms(p);
    return patterns;
}

/// Pattern nodes ordered so each node after the first is adjacent to an earlier one when possible.
std::vector<int> search_order(const Pattern& p)
{
    const int k = static_cast<int>(p.nodes.size());
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    while (static_cast<int>(order.size()) < k) {
        int next = -1;
        for (int i = 0; i < k && next < 0; ++i) {
            if (placed[i])
                continue;
            for (auto [a, b] : p.edges)
                if ((a == i && placed[b]) || (b == i && placed[a])) {
                    next = i;
                    break;
                }
        }
        if (next < 0)
            next = static_cast<int>(std::find(placed.begin(), placed.end(), false) - placed.begin());
        placed[next] = true;
        order.push_back(next);
    }
    return order;
}

bool alternatives_hold(const Graph& g, const std::vector<Label>& labels, const Pattern& p,
                       const std::vector<Vertex>& a)
{
    if (p.alternatives.empty())
        return true;
    return std::any_of(p.alternatives.begin(), p.alternatives.end(), [&](const auto& alt) {
        return std::all_of(alt.begin(), alt.end(), [&](const auto& entry) {
            Vertex v = a[entry.first];
            return entry.second.admits(g.degree(v), labels[v]);
        });
    });
}

bool orbit_least(const Pattern& p, const std::vector<Vertex>& a)
{
    std::vector<Vertex> image(a.size());
    for (const auto& perm : p.automorphisms) {
        for (std::size_t i = 0; i < a.size(); ++i)
            image[i] = a[perm[i]];
        if (image < a)
            return false;
    }
    return true;
}

class Matcher {
public:
    Matcher(const Graph& g, const Pattern& p, const std::vector<Label>& labels)
        : _g(g), _p(p), _labels(labels), _order(search_order(p)), _assignment(p.nodes.size(), -1),
          _used(g.order(), false)
    {
        const int k = static_cast<int>(p.nodes.size());
        _adjacent.assign(k, std::vector<int>(k, 0));
        for (auto [a, b] : p.edges)
            _adjacent[a][b] = _adjacent[b][a] = 1;
        for (auto [a, b] : p.nonedges)
            _adjacent[a][b] = _adjacent[b][a] = -1;
    }

    std::vector<ConfigurationMatch> run()
    {
        if (static_cast<int>(_labels.size()) != _g.order())
            throw std::invalid_argument("label vector does not match the graph order");
        extend(0);
        return std::move(_found);
    }

private:
    void extend(std::size_t depth)
    {
        if (depth == _order.size()) {
            if (alternatives_hold(_g, _labels, _p, _assignment) && orbit_least(_p, _assignment)) {
                ConfigurationMatch m{_p.id, _assignment, {}};
                for (auto [a, b] : _p.edges)
                    m.witnesses.push_back(edge_of(_assignment[a], _assignment[b]));
                _found.push_back(std::move(m));
            }
            return;
        }
        int node = _order[depth];
        int anchor = -1;
        for (std::size_t i = 0; i < depth && anchor < 0; ++i)
            if (_adjacent[node][_order[i]] == 1)
                anchor = _order[i];
        auto try_vertex = [&](Vertex v) {
            if (_used[v] || !_p.nodes[node].constraint.admits(_g.degree(v), _labels[v]))
                return;
            for (std::size_t i = 0; i < depth; ++i) {
                int other = _order[i];
                int rel = _adjacent[node][other];
                if (rel == 1 && !_g.adjacent(v, _assignment[other]))
                    return;
                if (rel == -1 && _g.adjacent(v, _assignment[other]))
                    return;
            }
            _assignment[node] = v;
            _used[v] = true;
            extend(depth + 1);
            _used[v] = false;
            _assignment[node] = -1;
        };
        if (anchor >= 0) {
            for (Vertex v : _g.neighbors(_assignment[anchor]))
                try_vertex(v);
        } else {
            for (Vertex v = 0; v < _g.order(); ++v)
                try_vertex(v);
        }
    }

    const Graph& _g;
    const Pattern& _p;
    const std::vector<Label>& _labels;
    std::vector<int> _order;
    std::vector<std::vector<int>> _adjacent;
    std::vector<Vertex> _assignment;
    std::vector<bool> _used;
    std::vector<ConfigurationMatch> _found;
};

} // namespace

const std::vector<Pattern>& catalog(Scheme scheme)
{
    static const std::vector<Pattern> theta7 = finish(build_theta7());
    static const std::vector<Pattern> theta8 = finish(build_theta8());
    return scheme == Scheme::Theta7 ? theta7 : theta8;
}

const Pattern& find_pattern(const std::string& id)
{
    for (Scheme s : {Scheme::Theta7, Scheme::Theta8})
        for (const auto& p : catalog(s))
            if (p.id == id)
                return p;
    throw std::invalid_argument("unknown pattern id '" + id + "'");
}

std::vector<ConfigurationMatch> find_pattern_matches(const Graph& g, const Pattern& p, const std::vector<Label>& labels)
{
    auto found = Matcher(g, p, labels).run();
    std::sort(found.begin(), found.end(),
              [](const ConfigurationMatch& a, const ConfigurationMatch& b) { return a.assignment < b.assignment; });
    return found;
}

std::vector<ConfigurationMatch> find_configurations(const Graph& g, Scheme scheme, const std::vector<Label>& labels)
{
    std::vector<ConfigurationMatch> all;
    for (const auto& p : catalog(scheme)) {
        auto found = find_pattern_matches(g, p, labels);
        all.insert(all.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    // Catalog order is claim order; sort ids numerically within the scheme (C2 before C10).
    auto index = [&](const std::string& id) {
        const auto& cat = catalog(scheme);
        return std::find_if(cat.begin(), cat.end(), [&](const Pattern& p) { return p.id == id; }) - cat.begin();
    };
    std::stable_sort(all.begin(), all.end(), [&](const ConfigurationMatch& a, const ConfigurationMatch& b) {
        auto ia = index(a.pattern_id), ib = index(b.pattern_id);
        return ia != ib ? ia < ib : a.assignment < b.assignment;
    });
    return all;
}

bool validate_match(const Graph& g, const std::vector<Label>& labels, const Pattern& p, const ConfigurationMatch& m)
{
    const auto& a = m.assignment;
    if (m.pattern_id != p.id || a.size() != p.nodes.size())
        return false;
    std::set<Vertex> distinct(a.begin(), a.end());
    if (distinct.size() != a.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] >= g.order())
            return false;
        if (!p.nodes[i].constraint.admits(g.degree(a[i]), labels[a[i]]))
            return false;
    }
    for (auto [x, y] : p.edges)
        if (!g.adjacent(a[x], a[y]))
            return false;
    for (auto [x, y] : p.nonedges)
        if (g.adjacent(a[x], a[y]))
            return false;
    return alternatives_hold(g, labels, p, a);
}

std::string_view verdict_name(ReducibilityVerdict v)
{
    switch (v) {
    case ReducibilityVerdict::Extended: return "EXTENDED";
    case ReducibilityVerdict::Vacuous: return "VACUOUS";
    case ReducibilityVerdict::Timeout: return "TIMEOUT";
    case ReducibilityVerdict::Failed: return "FAILED";
    default: return "NO_RECIPE";
    }
}

ReducibilityReport verify_reducibility(const Graph& g, const ConfigurationMatch& m, Budget budget)
{
    const Pattern& p = find_pattern(m.pattern_id);
    ReducibilityReport report;
    report.pattern_id = p.id;
    if (!p.recipe)
        return report;
    const Recipe& recipe = *p.recipe;
    RecipePlan plan = recipe.plan(g, m.assignment);
    report.variant = plan.variant;
    report.palette = recipe.palette;
    report.deleted = plan.deleted;
    report.erased = plan.erase;

    auto deletion = delete_vertex(g, plan.deleted);
    ConflictGraph reduced(deletion.graph);
    auto solved = k_colorable(reduced, recipe.palette, budget);
    report.stats = solved.stats;
    if (solved.status == SolveStatus::Timeout) {
        report.verdict = ReducibilityVerdict::Timeout;
        return report;
    }
    if (solved.status == SolveStatus::Unsat) {
        report.verdict = ReducibilityVerdict::Vacuous;
        report.notes.push_back("G - v has no strong " + std::to_string(recipe.palette) + "-edge-coloring");
        return report;
    }

    ConflictGraph cg(g);
    PartialColoring f(recipe.palette, g.size());
    for (EdgeId e = 0; e < g.size(); ++e)
        if (deletion.edge_map[e] >= 0)
            f.assignment[e] = solved.coloring.assignment[deletion.edge_map[e]];

    std::vector<EdgeId> targets = g.incident(plan.deleted);
    std::vector<EdgeId> erase;
    for (const auto& e : plan.erase) {
        EdgeId id = g.edge_id(e.u, e.v);
        if (id < 0)
            throw std::logic_error("recipe erases a non-edge");
        erase.push_back(id);
    }
    PartialColoring erased = f;
    for (EdgeId e : erase)
        erased.assignment[e] = 0;

    auto in_reduced = [&](EdgeId e) { return deletion.edge_map[e] >= 0; };
    auto observe = [&](const std::string& role, EdgeId id, int bound_before, int bound_after) {
        EdgeObservation obs;
        obs.role = role;
        obs.edge = g.edge(id);
        obs.id = id;
        for (EdgeId s : cg.sees(id)) {
            obs.sees_before += in_reduced(s);
            obs.sees_after += erased.colored(s);
        }
        obs.list_before = static_cast<int>(available_colors(cg, f, id).size());
        obs.list_after = static_cast<int>(available_colors(cg, erased, id).size());
        obs.bound_before = bound_before;
        obs.bound_after = bound_after;
        obs.within_bounds = (bound_before < 0 || obs.sees_before <= bound_before)
                            && (bound_after < 0 || obs.sees_after <= bound_after);
        report.bounds_respected = report.bounds_respected && obs.within_bounds;
        report.observations.push_back(std::move(obs));
    };
    std::set<EdgeId> described;
    for (const auto& b : plan.bounds) {
        EdgeId id = g.edge_id(b.edge.u, b.edge.v);
        if (id < 0)
            throw std::logic_error("recipe bound refers to a non-edge");
        observe(b.role, id, b.sees_before, b.sees_after);
        described.insert(id);
    }
    for (EdgeId e : targets)
        if (!described.count(e))
            observe("incident", e, -1, -1);
    for (EdgeId e : erase)
        if (!described.count(e))
            observe("erased", e, -1, -1);

    auto extended = erase_and_extend(cg, f, erase, targets);
    report.strategy = extended.strategy;
    report.notes.insert(report.notes.end(), extended.attempts.begin(), extended.attempts.end());
    if (!extended.success) {
        report.verdict = ReducibilityVerdict::Failed;
        return report;
    }
    if (!is_valid_strong_coloring(cg, extended.coloring).valid || !extended.coloring.total())
        throw std::logic_error("erase_and_extend returned an invalid coloring");
    report.verdict = ReducibilityVerdict::Extended;
    report.extension = std::move(extended.coloring);
    return report;
}

} // namespace strongedge
