#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbe/chordal.hpp"
#include "pbe/graph.hpp"

namespace pbe {

// One forced choice; x may be left to the default least-vertex rule.
struct ScriptEntry {
    CliqueSet L;
    std::optional<vertex> x;
};

struct RunPolicy {
    enum class TieBreak { lexicographic, script };
    TieBreak tie_break = TieBreak::lexicographic;
    // Consumed in order, one entry per choosing iteration; once exhausted the
    // lexicographic rule takes over.
    std::vector<ScriptEntry> script;
};

struct IterationRecord {
    int q = 0;
    CliqueSet T;
    std::vector<CliqueSet> M;   // maximal candidates
    std::vector<CliqueSet> M1;  // step 0 only
    std::vector<CliqueSet> M2;  // step 0 only
    std::optional<CliqueSet> L;
    std::optional<vertex> x;
};

struct StepRecord {
    int p = 0;
    std::vector<IterationRecord> iterations;
    std::vector<int> D;  // iterations that made a choice
    CliqueSet A2, A1, A0;
    VertexSet H;
    std::vector<vertex> added;  // x's chosen in this step, in order
};

struct AlgorithmResult {
    int last_step = 0;
    VertexSet H, S, S2, S0;
    std::vector<StepRecord> trace;
};

AlgorithmResult run_algorithm(const Graph& g, const CliqueDecomposition& d, const RunPolicy& policy = {});

struct RunEnumeration {
    std::vector<AlgorithmResult> results;
    bool truncated = false;
};

// Depth-first over every legal (L, x) sequence; distinct (H, S) pairs only.
RunEnumeration enumerate_runs(const Graph& g, const CliqueDecomposition& d, int limit = 256);

struct SSplit {
    VertexSet S2, S0;
};

SSplit split_S(const Graph& g, const VertexSet& H, const VertexSet& S);

struct Violation {
    std::string invariant;
    std::string detail;
};

// Every structural property of a run. The path and |S2| checks only apply
// when G is unmixed; pass the verdict if known, otherwise the oracle decides
// (skipped above its cap).
std::vector<Violation> verify_run(const Graph& g, const CliqueDecomposition& d, const AlgorithmResult& r,
                                  std::optional<bool> unmixed = std::nullopt);

}  // namespace pbe
