#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbe/graph.hpp"
#include "pbe/spectrum.hpp"

namespace pbe {

// Three-valued flag; not_covered means no available theorem decides it and
// the oracle could not either.
enum class Verdict { yes, no, not_covered };

const char* to_string(Verdict v);

struct CactusAnalysis {
    bool is_cactus = false;
    std::vector<VertexSet> odd_cycles;
    std::vector<int> epsilon;                            // per odd cycle
    std::vector<std::pair<VertexSet, vertex>> pendant;  // (cycle, connecting vertex)
};

bool is_cactus(const Graph& g);
// Requires a connected cactus.
CactusAnalysis pendant_odd_cycles(const Graph& g);

struct PendantSplit {
    VertexSet g0, rest;
    Graph g0_graph, rest_graph;
};

PendantSplit pendant_split(const Graph& g, const VertexSet& cycle, vertex v);

enum class PatternClass { path, k3, g1, g2, g3 };

const char* to_string(PatternClass c);

struct PatternMatch {
    PatternClass cls = PatternClass::path;
    std::map<std::string, vertex> roles;  // alpha1, beta2, x1, y1, ...
    std::vector<int> path_lengths;        // per attachment in role order
};

std::optional<PatternMatch> match_pattern(const Graph& g);

struct Classification {
    Verdict unmixed = Verdict::not_covered;
    Verdict cohen_macaulay = Verdict::not_covered;
    Verdict gorenstein = Verdict::not_covered;
    Verdict complete_intersection = Verdict::not_covered;
    std::string basis;
    std::optional<VertexSet> witness;
    std::optional<PatternMatch> pattern;
};

struct ClassifyOptions {
    SpectrumOptions oracle;
};

// Connected cactus.
Classification classify_cactus(const Graph& g, ClassifyOptions opt = {});
// Connected chordal; input_error otherwise.
Classification classify_chordal(const Graph& g);

struct ComponentClassification {
    VertexSet vertices;
    Classification verdict;  // vertices and witness in host ids
};

struct GraphClassification {
    std::vector<ComponentClassification> components;
    Classification combined;
};

GraphClassification classify(const Graph& g, ClassifyOptions opt = {});

}  // namespace pbe
