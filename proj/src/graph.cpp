#include "pbe/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "pbe/error.hpp"

namespace pbe {

namespace {

std::string edge_text(Label u, Label v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw input_error("negative vertex count");
    std::vector<Label> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    std::vector<LabeledEdge> le;
    le.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge " + edge_text(u, v) + " has an endpoint outside 0.." + std::to_string(n - 1));
        le.emplace_back(u, v);
    }
    return from_labels(std::move(labels), le);
}

Graph Graph::from_labels(std::vector<Label> labels, std::span<const LabeledEdge> edges) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) throw input_error("negative vertex label " + std::to_string(labels[i]));
        if (i > 0 && labels[i] == labels[i - 1])
            throw input_error("duplicate vertex label " + std::to_string(labels[i]));
    }
    Graph g;
    g.labels_ = std::move(labels);
    const int n = static_cast<int>(g.labels_.size());
    g.adj_.assign(n, {});
    std::set<Edge> seen;
    for (auto [lu, lv] : edges) {
        if (lu == lv) throw input_error("self-loop " + edge_text(lu, lv));
        auto u = g.vertex_of(lu);
        auto v = g.vertex_of(lv);
        if (!u || !v) throw input_error("edge " + edge_text(lu, lv) + " uses an unknown vertex");
        Edge key{std::min(*u, *v), std::max(*u, *v)};
        if (!seen.insert(key).second) throw input_error("duplicate edge " + edge_text(lu, lv));
        g.adj_[*u].push_back(*v);
        g.adj_[*v].push_back(*u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edge_count_ = static_cast<int>(seen.size());
    if (n <= 64) {
        g.masks_.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (vertex w : g.adj_[v]) g.masks_[v] |= std::uint64_t{1} << w;
    }
    return g;
}

bool Graph::adjacent(vertex u, vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<vertex> Graph::vertex_of(Label l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<vertex>(it - labels_.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    require_subset(g, keep);
    InducedSubgraph out;
    out.parent = keep.ids();
    std::vector<Label> labels;
    std::vector<LabeledEdge> edges;
    for (vertex v : keep) {
        labels.push_back(g.label(v));
        for (vertex w : g.neighbors(v))
            if (v < w && keep.contains(w)) edges.emplace_back(g.label(v), g.label(w));
    }
    out.graph = Graph::from_labels(std::move(labels), edges);
    return out;
}

VertexSet all_vertices(const Graph& g) {
    std::vector<int> ids(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) ids[i] = i;
    return VertexSet(std::move(ids));
}

void require_subset(const Graph& g, const VertexSet& s) {
    if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
        throw input_error("vertex set " + to_string(s) + " is not contained in the graph");
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return removal_profile(g, {}).components;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

int RemovalProfile::b() const {
    return static_cast<int>(std::count(bipartite.begin(), bipartite.end(), true));
}

RemovalProfile removal_profile(const Graph& g, const VertexSet& s) {
    require_subset(g, s);
    const int n = g.vertex_count();
    RemovalProfile p;
    p.removed = s;
    p.color.assign(n, -1);
    p.component_of.assign(n, -1);
    std::vector<int> depth(n, -1), parent(n, -1);

    for (vertex root = 0; root < n; ++root) {
        if (s.contains(root) || depth[root] >= 0) continue;
        const int index = p.c();
        std::vector<int> members;
        std::optional<Edge> conflict;
        std::deque<vertex> queue{root};
        depth[root] = 0;
        while (!queue.empty()) {
            vertex v = queue.front();
            queue.pop_front();
            members.push_back(v);
            p.component_of[v] = index;
            for (vertex w : g.neighbors(v)) {
                if (s.contains(w)) continue;
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (!conflict && depth[w] % 2 == depth[v] % 2) {
                    conflict = Edge{v, w};
                }
            }
        }
        std::vector<vertex> cycle;
        if (conflict) {
            // BFS layers differ by at most one, so both ends sit at the same depth.
            auto [a, b] = *conflict;
            std::vector<vertex> left, right;
            while (a != b) {
                left.push_back(a);
                right.push_back(b);
                a = parent[a];
                b = parent[b];
            }
            cycle = left;
            cycle.push_back(a);
            cycle.insert(cycle.end(), right.rbegin(), right.rend());
        } else {
            for (vertex v : members) p.color[v] = depth[v] % 2;
        }
        p.components.emplace_back(std::move(members));
        p.bipartite.push_back(!conflict);
        p.odd_cycle.push_back(std::move(cycle));
    }

    for (vertex x : s) {
        std::vector<int> adjacent;
        for (vertex w : g.neighbors(x))
            if (p.component_of[w] >= 0) adjacent.push_back(p.component_of[w]);
        std::sort(adjacent.begin(), adjacent.end());
        adjacent.erase(std::unique(adjacent.begin(), adjacent.end()), adjacent.end());
        p.reconnect[x] = std::move(adjacent);
    }
    return p;
}

std::vector<VertexSet> blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<VertexSet> out;
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        vertex v;
        vertex parent;
        std::size_t next;
    };

    for (vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            out.push_back(VertexSet{root});
            continue;
        }
        std::vector<Frame> frames{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const vertex v = f.v;
            if (f.next < g.neighbors(v).size()) {
                vertex w = g.neighbors(v)[f.next++];
                if (w == f.parent) continue;
                if (disc[w] < 0) {
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, v, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            const vertex up = f.parent;
            frames.pop_back();
            if (up < 0) continue;
            low[up] = std::min(low[up], low[v]);
            if (low[v] >= disc[up]) {
                std::vector<int> members;
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    members.push_back(e.first);
                    members.push_back(e.second);
                    if (e == Edge{up, v}) break;
                }
                out.emplace_back(std::move(members));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PendantStrip strip_pendant_trees(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    std::vector<vertex> queue;
    for (vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        vertex v = queue.back();
        queue.pop_back();
        if (removed[v]) continue;
        removed[v] = true;
        for (vertex w : g.neighbors(v))
            if (!removed[w] && --deg[w] <= 1) queue.push_back(w);
    }

    PendantStrip out;
    std::vector<int> core;
    for (vertex v = 0; v < n; ++v)
        if (!removed[v]) core.push_back(v);
    out.core = VertexSet(std::move(core));
    out.forest = out.core.empty();
    if (out.forest) return out;

    const RemovalProfile rest = removal_profile(g, out.core);
    for (vertex a : out.core) {
        for (int ci : rest.reconnect.at(a)) {
            const VertexSet& tree = rest.components[ci];
            Attachment att;
            att.vertices = tree;
            vertex entry = -1;
            bool path = true;
            for (vertex v : tree) {
                int inside = 0;
                for (vertex w : g.neighbors(v)) {
                    if (w == a) entry = v;
                    else if (tree.contains(w)) ++inside;
                }
                if (inside > 2) path = false;
            }
            int entry_inside = 0;
            for (vertex w : g.neighbors(entry))
                if (tree.contains(w)) ++entry_inside;
            att.is_path = path && entry_inside <= 1;
            att.length = att.is_path ? static_cast<int>(tree.size()) : 0;
            out.attachments[a].push_back(std::move(att));
        }
    }
    return out;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() > 0 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_path(const Graph& g) {
    if (!is_tree(g)) return false;
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_bipartite(const Graph& g) {
    const RemovalProfile p = removal_profile(g, {});
    return p.b() == p.c();
}

int bipartite_component_count(const Graph& g) {
    return removal_profile(g, {}).b();
}

}  // namespace pbe
