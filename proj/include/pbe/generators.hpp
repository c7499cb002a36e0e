#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pbe/graph.hpp"

namespace pbe {

struct GeneratedGraph {
    Graph graph;
    std::map<std::string, vertex> roles;
};

struct FamilySpec {
    std::string family;
    std::vector<std::int64_t> params;
};

// "name", "name:1,2,3" or "name(1,2,3)".
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
GeneratedGraph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph bowtie();
Graph diamond();
// Pattern graphs with the stated pendant path lengths (each >= 1).
GeneratedGraph frak_g1(int l1, int l2, int l3);
GeneratedGraph frak_g2(int l2, int l3);
GeneratedGraph frak_g3(int l1);
// Cliques {1,2,3}, {2,3,4,5}, {4,6}, {5,7} on labels 1..7.
Graph worked_example();
// Three triangles, the outer two joined to the middle one by single edges.
Graph triangle_chain();
// k triangles over the common edge {0,1}.
Graph triple_attach(int k);

Graph random_chordal(int n, std::uint64_t seed);
Graph random_cactus(int n, std::uint64_t seed);
Graph random_block(int n, std::uint64_t seed);

// Labels of b are shifted past those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

// Isomorphism-invariant code for small graphs (n <= 10).
std::string canonical_code(const Graph& g);
// One representative per isomorphism class, by brute force over labelled graphs.
std::vector<Graph> connected_chordal_graphs(int n);

}  // namespace pbe
