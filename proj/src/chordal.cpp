#include "pbe/chordal.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pbe/error.hpp"

namespace pbe {

namespace {

// Shortest a-b path avoiding the blocked vertices (a and b themselves allowed).
std::vector<vertex> shortest_path(const Graph& g, vertex a, vertex b, const std::vector<bool>& blocked) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::deque<vertex> queue{a};
    parent[a] = -1;
    while (!queue.empty()) {
        vertex v = queue.front();
        queue.pop_front();
        if (v == b) break;
        for (vertex w : g.neighbors(v)) {
            if (parent[w] != -2 || (blocked[w] && w != b)) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    std::vector<vertex> path;
    if (parent[b] == -2) return path;
    for (vertex v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Center v with non-adjacent neighbours a, b: a shortest a-b path through
// non-neighbours of v closes an induced cycle.
std::vector<vertex> cycle_through(const Graph& g, vertex v, vertex a, vertex b) {
    std::vector<bool> blocked(g.vertex_count(), false);
    blocked[v] = true;
    for (vertex w : g.neighbors(v))
        if (w != a && w != b) blocked[w] = true;
    std::vector<vertex> path = shortest_path(g, a, b, blocked);
    if (path.empty()) return path;
    path.insert(path.begin(), v);
    return path;
}

std::vector<vertex> find_chordless_cycle(const Graph& g, vertex v, vertex a, vertex b) {
    if (auto c = cycle_through(g, v, a, b); !c.empty()) return c;
    for (vertex center = 0; center < g.vertex_count(); ++center) {
        const auto& nb = g.neighbors(center);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j]))
                    if (auto c = cycle_through(g, center, nb[i], nb[j]); !c.empty()) return c;
    }
    throw invariant_violation("chordality test failed but no chordless cycle was found");
}

}  // namespace

ChordalityResult recognize_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0), visit(n, -1);
    std::vector<vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        vertex best = -1;
        for (vertex v = 0; v < n; ++v)
            if (visit[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
        visit[best] = step;
        order.push_back(best);
        for (vertex w : g.neighbors(best))
            if (visit[w] < 0) ++weight[w];
    }

    ChordalityResult out;
    // Parent test: earlier neighbours of v minus its latest earlier neighbour
    // must all be earlier neighbours of that parent.
    for (vertex v : order) {
        vertex parent = -1;
        for (vertex w : g.neighbors(v))
            if (visit[w] < visit[v] && (parent < 0 || visit[w] > visit[parent])) parent = w;
        if (parent < 0) continue;
        for (vertex w : g.neighbors(v)) {
            if (w == parent || visit[w] > visit[v]) continue;
            if (!g.adjacent(w, parent)) {
                out.chordal = false;
                out.chordless_cycle = find_chordless_cycle(g, v, parent, w);
                return out;
            }
        }
    }
    out.chordal = true;
    out.elimination_order.assign(order.rbegin(), order.rend());
    return out;
}

bool is_chordal(const Graph& g) {
    return recognize_chordal(g).chordal;
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g) {
    const ChordalityResult r = recognize_chordal(g);
    if (!r.chordal) throw input_error("graph is not chordal");
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[r.elimination_order[i]] = i;

    std::vector<VertexSet> candidates;
    for (vertex v = 0; v < n; ++v) {
        VertexSet c{v};
        for (vertex w : g.neighbors(v))
            if (pos[w] > pos[v]) c.insert(w);
        candidates.push_back(std::move(c));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> out;
    for (const auto& c : candidates) {
        bool covered = std::any_of(out.begin(), out.end(), [&](const VertexSet& m) { return is_subset(c, m); });
        if (!covered) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CliqueSet CliqueDecomposition::containing(vertex v) const {
    std::vector<int> ids;
    for (int i = 0; i < t(); ++i)
        if (cliques[i].contains(v)) ids.push_back(i);
    return CliqueSet(std::move(ids));
}

namespace {

CliqueDecomposition finish_decomposition(std::vector<VertexSet> order) {
    CliqueDecomposition d;
    d.cliques = std::move(order);
    VertexSet seen;
    for (int j = 0; j < d.t(); ++j) {
        if (j == 0) {
            d.attach.emplace_back();
            d.lambda.emplace_back();
        } else {
            VertexSet r = set_intersection(seen, d.cliques[j]);
            std::vector<int> lam;
            for (int i = 0; i < j; ++i)
                if (is_subset(r, d.cliques[i])) lam.push_back(i);
            d.attach.push_back(std::move(r));
            d.lambda.emplace_back(std::move(lam));
        }
        seen = set_union(seen, d.cliques[j]);
    }
    return d;
}

}  // namespace

CliqueDecomposition clique_sum_order(const Graph& g) {
    if (g.vertex_count() == 0) throw input_error("clique decomposition needs a non-empty graph");
    if (!is_connected(g)) throw input_error("clique decomposition needs a connected graph; decompose per component");
    const std::vector<VertexSet> cliques = maximal_cliques_chordal(g);
    const int t = static_cast<int>(cliques.size());

    // Maximum-weight spanning tree of the clique intersection graph (Prim),
    // rooted at the first clique holding vertex 0.
    int root = 0;
    while (!cliques[root].contains(0)) ++root;
    std::vector<int> parent(t, -1);
    std::vector<bool> in_tree(t, false);
    in_tree[root] = true;
    for (int added = 1; added < t; ++added) {
        int best = -1, best_parent = -1, best_weight = -1;
        for (int j = 0; j < t; ++j) {
            if (in_tree[j]) continue;
            for (int i = 0; i < t; ++i) {
                if (!in_tree[i]) continue;
                int w = static_cast<int>(set_intersection(cliques[i], cliques[j]).size());
                if (w > best_weight) {
                    best_weight = w;
                    best = j;
                    best_parent = i;
                }
            }
        }
        in_tree[best] = true;
        parent[best] = best_parent;
    }

    std::vector<VertexSet> order;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        order.push_back(cliques[i]);
        for (int j = 0; j < t; ++j)
            if (parent[j] == i) queue.push_back(j);
    }
    return finish_decomposition(std::move(order));
}

CliqueDecomposition clique_sum_order(const Graph& g, const std::vector<VertexSet>& order) {
    if (g.vertex_count() == 0) throw input_error("clique decomposition needs a non-empty graph");
    if (!is_connected(g)) throw input_error("clique decomposition needs a connected graph; decompose per component");
    std::vector<VertexSet> expected = maximal_cliques_chordal(g);
    std::vector<VertexSet> given = order;
    std::sort(given.begin(), given.end());
    if (given != expected) throw input_error("clique order must list every maximal clique exactly once");
    CliqueDecomposition d = finish_decomposition(order);
    for (int j = 1; j < d.t(); ++j)
        if (d.lambda[j].empty())
            throw input_error("clique order violates running intersection at position " + std::to_string(j + 1));
    return d;
}

VertexSet common_vertices(const CliqueDecomposition& d, const CliqueSet& gamma) {
    if (gamma.empty()) throw input_error("m is only defined for a non-empty set of cliques");
    if (gamma.back() >= d.t() || gamma.front() < 0) throw input_error("clique index out of range");
    VertexSet common = d.cliques[gamma.front()];
    for (int i : gamma) common = set_intersection(common, d.cliques[i]);
    return common;
}

int m_value(const CliqueDecomposition& d, const CliqueSet& gamma) {
    return static_cast<int>(common_vertices(d, gamma).size());
}

bool is_block_graph(const Graph& g) {
    for (const VertexSet& b : blocks(g))
        for (vertex u : b)
            for (vertex v : b)
                if (u < v && !g.adjacent(u, v)) return false;
    return true;
}

bool is_generalized_block_graph(const Graph& g) {
    if (!is_chordal(g)) return false;
    const std::vector<VertexSet> k = maximal_cliques_chordal(g);
    const std::size_t t = k.size();
    for (std::size_t a = 0; a < t; ++a)
        for (std::size_t b = a + 1; b < t; ++b) {
            const VertexSet ab = set_intersection(k[a], k[b]);
            if (ab.empty()) continue;
            for (std::size_t c = b + 1; c < t; ++c) {
                if (!intersects(ab, k[c])) continue;
                if (set_intersection(k[a], k[c]) != ab || set_intersection(k[b], k[c]) != ab) return false;
            }
        }
    return true;
}

}  // namespace pbe
