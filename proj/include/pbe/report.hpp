#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "pbe/chordal.hpp"
#include "pbe/classification.hpp"
#include "pbe/spectrum.hpp"
#include "pbe/tree_algorithm.hpp"

namespace pbe {

// JSON documents. Vertices are reported by label, cliques 1-based.
nlohmann::json labels_json(const Graph& g, const VertexSet& s);
nlohmann::json classification_json(const Graph& g, const Classification& c);
nlohmann::json classification_json(const Graph& g, const GraphClassification& c);
nlohmann::json oracle_json(const Graph& g, const OracleVerdict& v);
nlohmann::json spectrum_json(const Graph& g, const SpectrumReport& r);
nlohmann::json trace_json(const Graph& g, const CliqueDecomposition& d, const AlgorithmResult& r);

struct CrossCheckOptions {
    int max_n = default_max_n;
    int run_limit = 256;
};

struct CrossCheckReport {
    GraphClassification classification;
    std::optional<OracleVerdict> oracle;  // absent above the cap
    bool agree = true;
    int runs_checked = 0;
    bool runs_truncated = false;
    std::vector<Violation> violations;
    // First run with a violation, with the component it ran on.
    std::optional<AlgorithmResult> failing_run;
    std::optional<VertexSet> failing_component;
};

// Classifier against oracle; for chordal components also every enumerated
// run of the tree algorithm against verify_run.
CrossCheckReport cross_check(const Graph& g, CrossCheckOptions opt = {});
nlohmann::json cross_check_json(const Graph& g, const CrossCheckReport& r);

}  // namespace pbe
