#pragma once

#include <vector>

#include "pbe/graph.hpp"

namespace pbe {

struct ChordalityResult {
    bool chordal = false;
    std::vector<vertex> elimination_order;  // perfect elimination ordering when chordal
    std::vector<vertex> chordless_cycle;    // induced cycle of length >= 4 otherwise
};

// Maximum-cardinality search, ties to the least vertex.
ChordalityResult recognize_chordal(const Graph& g);
bool is_chordal(const Graph& g);

// Sorted lexicographically. Throws input_error on non-chordal input.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g);

// Ordered maximal cliques K_1..K_t of a connected chordal graph together
// with attachment cliques and lambda, all 0-based.
struct CliqueDecomposition {
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> attach;   // attach[0] is empty
    std::vector<CliqueSet> lambda;   // lambda[0] is empty

    int t() const { return static_cast<int>(cliques.size()); }
    // Cliques containing v.
    CliqueSet containing(vertex v) const;
};

// Clique tree rooted at the clique holding vertex 0, visited breadth-first
// with children in lexicographic order.
CliqueDecomposition clique_sum_order(const Graph& g);
// Caller-supplied order; must list every maximal clique once and satisfy the
// running intersection property.
CliqueDecomposition clique_sum_order(const Graph& g, const std::vector<VertexSet>& order);

// Size of the common intersection of the cliques in gamma (gamma non-empty).
int m_value(const CliqueDecomposition& d, const CliqueSet& gamma);
VertexSet common_vertices(const CliqueDecomposition& d, const CliqueSet& gamma);

bool is_block_graph(const Graph& g);
bool is_generalized_block_graph(const Graph& g);

}  // namespace pbe
