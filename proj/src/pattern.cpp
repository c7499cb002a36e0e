#include <algorithm>
#include <set>

#include "pbe/classification.hpp"

namespace pbe {

namespace {

using Roles = std::map<std::string, vertex>;

struct Core {
    VertexSet vertices;
    std::set<Edge> edges;
    std::map<vertex, int> degree;
};

Core core_of(const Graph& g, const VertexSet& keep) {
    Core c;
    c.vertices = keep;
    for (vertex u : keep) {
        c.degree[u] = 0;
        for (vertex w : g.neighbors(u))
            if (keep.contains(w)) {
                ++c.degree[u];
                if (u < w) c.edges.emplace(u, w);
            }
    }
    return c;
}

std::vector<vertex> with_degree(const Core& c, int d) {
    std::vector<vertex> out;
    for (auto [v, deg] : c.degree)
        if (deg == d) out.push_back(v);
    return out;
}

bool edges_match(const Core& c, const Roles& r, const std::vector<std::pair<std::string, std::string>>& pattern) {
    std::set<Edge> want;
    for (const auto& [a, b] : pattern) {
        vertex u = r.at(a), v = r.at(b);
        want.emplace(std::min(u, v), std::max(u, v));
    }
    return want == c.edges;
}

// Each named anchor carries exactly one path attachment; nothing else carries any.
std::optional<std::vector<int>> anchored_paths(const PendantStrip& s, const Roles& r,
                                               const std::vector<std::string>& anchors) {
    std::vector<int> lengths;
    std::set<vertex> used;
    for (const auto& name : anchors) {
        vertex a = r.at(name);
        auto it = s.attachments.find(a);
        if (it == s.attachments.end() || it->second.size() != 1 || !it->second.front().is_path) return std::nullopt;
        lengths.push_back(it->second.front().length);
        used.insert(a);
    }
    for (const auto& [a, list] : s.attachments)
        if (!list.empty() && !used.contains(a)) return std::nullopt;
    return lengths;
}

std::optional<PatternMatch> match_g3(const PendantStrip& s, const Core& c) {
    if (c.vertices.size() != 4 || c.edges.size() != 5) return std::nullopt;
    auto alphas = with_degree(c, 3);
    auto xs = with_degree(c, 2);
    if (alphas.size() != 2 || xs.size() != 2) return std::nullopt;
    // x1 is the apex that carries the path.
    vertex x1 = s.attachments.contains(xs[0]) ? xs[0] : xs[1];
    vertex x2 = x1 == xs[0] ? xs[1] : xs[0];
    Roles r{{"alpha1", alphas[0]}, {"alpha2", alphas[1]}, {"x1", x1}, {"x2", x2}};
    if (!edges_match(c, r, {{"alpha1", "alpha2"}, {"alpha1", "x1"}, {"alpha2", "x1"}, {"alpha1", "x2"}, {"alpha2", "x2"}}))
        return std::nullopt;
    auto lengths = anchored_paths(s, r, {"x1"});
    if (!lengths) return std::nullopt;
    return PatternMatch{PatternClass::g3, r, *lengths};
}

std::optional<PatternMatch> match_g2(const PendantStrip& s, const Core& c) {
    if (c.vertices.size() != 5 || c.edges.size() != 8) return std::nullopt;
    auto alphas = with_degree(c, 4);
    auto ys = with_degree(c, 3);
    auto x2 = with_degree(c, 2);
    if (alphas.size() != 2 || ys.size() != 2 || x2.size() != 1) return std::nullopt;
    Roles r{{"alpha1", alphas[0]}, {"alpha2", alphas[1]}, {"y1", ys[0]}, {"x1", ys[1]}, {"x2", x2[0]}};
    if (!edges_match(c, r,
                     {{"alpha1", "alpha2"}, {"alpha1", "y1"}, {"alpha1", "x1"}, {"alpha2", "y1"}, {"alpha2", "x1"},
                      {"y1", "x1"}, {"alpha1", "x2"}, {"alpha2", "x2"}}))
        return std::nullopt;
    auto lengths = anchored_paths(s, r, {"y1", "x1"});
    if (!lengths) return std::nullopt;
    return PatternMatch{PatternClass::g2, r, *lengths};
}

std::optional<PatternMatch> match_g1(const Graph& g, const PendantStrip& s, const Core& c) {
    if (c.vertices.size() != 6 || c.edges.size() != 9) return std::nullopt;
    auto alphas = with_degree(c, 4);
    auto betas = with_degree(c, 2);
    if (alphas.size() != 3 || betas.size() != 3) return std::nullopt;
    Roles r{{"alpha1", alphas[0]}, {"alpha2", alphas[1]}, {"alpha3", alphas[2]}};
    const std::pair<int, int> pairs[3] = {{0, 1}, {1, 2}, {0, 2}};
    for (int i = 0; i < 3; ++i) {
        for (vertex b : betas)
            if (g.adjacent(b, alphas[pairs[i].first]) && g.adjacent(b, alphas[pairs[i].second]))
                r["beta" + std::to_string(i + 1)] = b;
        if (!r.contains("beta" + std::to_string(i + 1))) return std::nullopt;
    }
    if (!edges_match(c, r,
                     {{"alpha1", "alpha2"}, {"alpha2", "alpha3"}, {"alpha1", "alpha3"}, {"beta1", "alpha1"},
                      {"beta1", "alpha2"}, {"beta2", "alpha2"}, {"beta2", "alpha3"}, {"beta3", "alpha1"},
                      {"beta3", "alpha3"}}))
        return std::nullopt;
    auto lengths = anchored_paths(s, r, {"beta1", "beta2", "beta3"});
    if (!lengths) return std::nullopt;
    return PatternMatch{PatternClass::g1, r, *lengths};
}

}  // namespace

const char* to_string(PatternClass c) {
    switch (c) {
        case PatternClass::path: return "Path";
        case PatternClass::k3: return "K3";
        case PatternClass::g1: return "G1";
        case PatternClass::g2: return "G2";
        case PatternClass::g3: return "G3";
    }
    return "?";
}

std::optional<PatternMatch> match_pattern(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || !is_connected(g)) return std::nullopt;
    if (is_path(g)) {
        vertex end = 0;
        while (g.degree(end) > 1) ++end;
        return PatternMatch{PatternClass::path, {{"end", end}}, {n - 1}};
    }
    if (n == 3 && g.edge_count() == 3)
        return PatternMatch{PatternClass::k3, {{"alpha1", 0}, {"alpha2", 1}, {"alpha3", 2}}, {}};

    const PendantStrip s = strip_pendant_trees(g);
    if (s.forest) return std::nullopt;
    const Core c = core_of(g, s.core);
    if (auto m = match_g3(s, c)) return m;
    if (auto m = match_g2(s, c)) return m;
    return match_g1(g, s, c);
}

}  // namespace pbe
