#pragma once

#include <optional>
#include <string>

#include "pbe/classification.hpp"
#include "pbe/graph.hpp"
#include "pbe/tree_algorithm.hpp"

namespace pbe {

struct DotOverlay {
    std::optional<PatternMatch> pattern;
    std::optional<AlgorithmResult> run;
};

// Undirected Graphviz rendering with original labels. Pattern roles are
// colour-coded; a run highlights H and marks S2/S0.
std::string emit_dot(const Graph& g, const DotOverlay& overlay = {});

// Macaulay2 script for the parity binomial edge ideal over QQ, reporting
// dim and depth of the quotient. Variables follow ascending label order.
std::string emit_m2_script(const Graph& g);

}  // namespace pbe
