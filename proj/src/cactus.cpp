#include <algorithm>
#include <deque>

#include "pbe/classification.hpp"
#include "pbe/error.hpp"

namespace pbe {

namespace {

bool is_cycle_block(const Graph& g, const VertexSet& b) {
    if (b.size() < 3) return false;
    std::size_t edges = 0;
    for (vertex u : b)
        for (vertex w : g.neighbors(u))
            if (u < w && b.contains(w)) ++edges;
    return edges == b.size();
}

// Vertices reachable from u without entering the rest of the cycle.
VertexSet hanging_part(const Graph& g, const VertexSet& cycle, vertex u) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<vertex> queue{u};
    seen[u] = true;
    std::vector<int> out;
    while (!queue.empty()) {
        vertex v = queue.front();
        queue.pop_front();
        out.push_back(v);
        for (vertex w : g.neighbors(v)) {
            if (seen[w] || cycle.contains(w)) continue;
            seen[w] = true;
            queue.push_back(w);
        }
    }
    return VertexSet(std::move(out));
}

}  // namespace

bool is_cactus(const Graph& g) {
    for (const VertexSet& b : blocks(g))
        if (b.size() > 2 && !is_cycle_block(g, b)) return false;
    return true;
}

CactusAnalysis pendant_odd_cycles(const Graph& g) {
    if (!is_connected(g) || !is_cactus(g)) throw input_error("pendant odd cycles need a connected cactus graph");
    CactusAnalysis out;
    out.is_cactus = true;
    for (const VertexSet& b : blocks(g))
        if (b.size() % 2 == 1 && is_cycle_block(g, b)) out.odd_cycles.push_back(b);

    for (std::size_t i = 0; i < out.odd_cycles.size(); ++i) {
        const VertexSet& c = out.odd_cycles[i];
        std::vector<vertex> connectors;
        for (vertex u : c) {
            const VertexSet part = hanging_part(g, c, u);
            for (std::size_t j = 0; j < out.odd_cycles.size(); ++j)
                if (j != i && intersects(part, out.odd_cycles[j])) {
                    connectors.push_back(u);
                    break;
                }
        }
        out.epsilon.push_back(static_cast<int>(connectors.size()));
        if (out.odd_cycles.size() == 1) {
            vertex v = c.front();
            for (vertex u : c)
                if (g.degree(u) > 2) {
                    v = u;
                    break;
                }
            out.pendant.emplace_back(c, v);
        } else if (connectors.size() == 1) {
            out.pendant.emplace_back(c, connectors.front());
        }
    }
    return out;
}

PendantSplit pendant_split(const Graph& g, const VertexSet& cycle, vertex v) {
    if (!cycle.contains(v) || cycle.size() < 3) throw input_error("pendant split needs a cycle through v");
    const RemovalProfile p = removal_profile(g, VertexSet{v});
    vertex inside = cycle.front() == v ? *std::next(cycle.begin()) : cycle.front();
    PendantSplit out;
    out.g0 = p.components[p.component_of[inside]];
    out.rest = set_difference(set_difference(all_vertices(g), out.g0), VertexSet{v});
    out.g0_graph = induced_subgraph(g, out.g0).graph;
    out.rest_graph = induced_subgraph(g, out.rest).graph;
    return out;
}

}  // namespace pbe
