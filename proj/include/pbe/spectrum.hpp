#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pbe/graph.hpp"

namespace pbe {

enum class Sign { plus, minus };

// Non-bipartite component index of G \ S -> sign.
using SignAssignment = std::map<int, Sign>;

inline constexpr int default_max_n = 20;

struct SpectrumOptions {
    int max_n = default_max_n;
};

bool is_cut_set(const Graph& g, const VertexSet& s);
bool is_disconnector(const Graph& g, const VertexSet& s);

// Families C(s) whose members are all non-bipartite; each must end up
// non-monochromatic.
std::vector<std::vector<int>> sign_constraints(const RemovalProfile& p);
bool satisfies_sign_split(const RemovalProfile& p, const SignAssignment& a);

enum class SignSplitRoute { vacuous, common_component, exhaustive };

struct SignSplitResult {
    std::optional<SignAssignment> assignment;
    SignSplitRoute route = SignSplitRoute::exhaustive;
};

// Requires S to be a disconnector (input_error otherwise).
SignSplitResult sign_split(const Graph& g, const VertexSet& s);
std::optional<SignAssignment> sign_split_assignment(const Graph& g, const VertexSet& s);
// Plain search over every assignment, no shortcuts.
std::optional<SignAssignment> sign_split_exhaustive(const RemovalProfile& p);

int height(const Graph& g, const RemovalProfile& p);

struct DisconnectorRecord {
    VertexSet set;
    RemovalProfile profile;
    SignAssignment witness;
    int height = 0;
};

// Ordered by size, then lexicographically. Throw cap_exceeded above max_n.
std::vector<VertexSet> enumerate_disconnectors(const Graph& g, SpectrumOptions opt = {});
std::vector<DisconnectorRecord> enumerate_sign_split_disconnectors(const Graph& g, SpectrumOptions opt = {});

struct OracleVerdict {
    bool unmixed = true;
    std::optional<VertexSet> witness;  // minimum size, then lexicographic
    int witness_b = 0;
};

OracleVerdict unmixedness_oracle(const Graph& g, SpectrumOptions opt = {});

struct SpectrumReport {
    std::vector<DisconnectorRecord> records;
    std::vector<int> heights;  // one per record, record order
    int krull_dimension = 0;
    bool unmixed = true;
    std::optional<VertexSet> witness;
};

SpectrumReport spectrum_report(const Graph& g, SpectrumOptions opt = {});
std::vector<int> minimal_prime_heights(const Graph& g, SpectrumOptions opt = {});
int krull_dimension(const Graph& g, SpectrumOptions opt = {});

}  // namespace pbe
