#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pbe/id_set.hpp"

namespace pbe {

using vertex = int;
using Label = std::int64_t;
using Edge = std::pair<vertex, vertex>;
using LabeledEdge = std::pair<Label, Label>;

// Simple undirected graph on 0..n-1. Each vertex keeps the label it had at
// the input boundary; labels are strictly increasing in the vertex id, so
// "least vertex" and "least label" coincide.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1, labels equal to ids.
    static Graph build(int n, std::span<const Edge> edges);
    // Arbitrary non-negative labels; vertex ids follow ascending label order.
    static Graph from_labels(std::vector<Label> labels, std::span<const LabeledEdge> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<vertex>& neighbors(vertex v) const { return adj_[v]; }
    int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(vertex u, vertex v) const;
    // Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    Label label(vertex v) const { return labels_[v]; }
    const std::vector<Label>& labels() const { return labels_; }
    std::optional<vertex> vertex_of(Label l) const;

    // Bitmask adjacency, available when n <= 64.
    bool fits_mask() const { return vertex_count() <= 64; }
    std::uint64_t neighbor_mask(vertex v) const { return masks_[v]; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    std::vector<std::vector<vertex>> adj_;
    std::vector<Label> labels_;
    std::vector<std::uint64_t> masks_;
    int edge_count_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<vertex> parent;  // sub vertex -> vertex of the host graph
};

// Labels are carried over from the host.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

VertexSet all_vertices(const Graph& g);
void require_subset(const Graph& g, const VertexSet& s);

// Components sorted by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct RemovalProfile {
    VertexSet removed;
    std::vector<VertexSet> components;        // of G \ S, by least vertex
    std::vector<bool> bipartite;              // per component
    std::vector<std::vector<vertex>> odd_cycle;  // witness cycle for non-bipartite components
    std::vector<int> color;                   // 0/1 on bipartite components, -1 elsewhere
    std::vector<int> component_of;            // -1 for removed vertices
    std::map<vertex, std::vector<int>> reconnect;  // s -> adjacent component indices

    int c() const { return static_cast<int>(components.size()); }
    int b() const;
};

RemovalProfile removal_profile(const Graph& g, const VertexSet& s);

// Biconnected blocks; bridges are 2-vertex blocks, isolated vertices singletons.
std::vector<VertexSet> blocks(const Graph& g);

struct Attachment {
    VertexSet vertices;  // stripped tree, anchor excluded
    bool is_path = false;
    int length = 0;      // edge count from the anchor when is_path
};

struct PendantStrip {
    VertexSet core;
    bool forest = false;
    std::map<vertex, std::vector<Attachment>> attachments;
};

PendantStrip strip_pendant_trees(const Graph& g);

bool is_tree(const Graph& g);
bool is_path(const Graph& g);
bool is_bipartite(const Graph& g);
int bipartite_component_count(const Graph& g);

}  // namespace pbe
