#include "pbe/classification.hpp"

#include "pbe/chordal.hpp"
#include "pbe/error.hpp"

namespace pbe {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::not_covered: return "not-covered";
    }
    return "?";
}

namespace {

Verdict from_bool(bool b) { return b ? Verdict::yes : Verdict::no; }

Classification uniform(Verdict v, std::string basis) {
    Classification c;
    c.unmixed = c.cohen_macaulay = c.gorenstein = c.complete_intersection = v;
    c.basis = std::move(basis);
    return c;
}

bool is_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || n % 2 == 0 || g.edge_count() != n || !is_connected(g)) return false;
    for (vertex v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// Unmixedness from the oracle when affordable; the stronger properties can
// then only be refuted.
Classification oracle_fallback(const Graph& g, const ClassifyOptions& opt, std::string basis) {
    Classification c;
    c.basis = std::move(basis);
    c.complete_intersection = Verdict::no;
    if (g.vertex_count() > opt.oracle.max_n) return c;
    const OracleVerdict o = unmixedness_oracle(g, opt.oracle);
    c.basis += " (unmixedness by oracle)";
    c.unmixed = from_bool(o.unmixed);
    c.witness = o.witness;
    if (!o.unmixed) c.cohen_macaulay = c.gorenstein = Verdict::no;
    return c;
}

Verdict conjunction(Verdict a, Verdict b) {
    if (a == Verdict::no || b == Verdict::no) return Verdict::no;
    if (a == Verdict::yes && b == Verdict::yes) return Verdict::yes;
    return Verdict::not_covered;
}

bool conflicting(Verdict a, Verdict b) {
    return a != Verdict::not_covered && b != Verdict::not_covered && a != b;
}

}  // namespace

Classification classify_cactus(const Graph& g, ClassifyOptions opt) {
    if (g.vertex_count() == 0 || !is_connected(g) || !is_cactus(g))
        throw input_error("cactus classification needs a connected cactus graph");
    if (is_bipartite(g)) {
        if (is_tree(g)) {
            return is_path(g) ? uniform(Verdict::yes, "tree: path") : uniform(Verdict::no, "tree: not a path");
        }
        return oracle_fallback(g, opt, "not-covered: bipartite cactus with cycles");
    }
    if (is_odd_cycle(g)) return uniform(Verdict::yes, "cactus: odd cycle");
    const auto odd = pendant_odd_cycles(g).odd_cycles.size();
    return uniform(Verdict::no, odd >= 2 ? "cactus: at least two odd cycles" : "cactus: one odd cycle, not a cycle");
}

Classification classify_chordal(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) throw input_error("chordal classification needs a connected graph");
    if (!is_chordal(g)) throw input_error("chordal classification needs a chordal graph");
    auto m = match_pattern(g);
    if (!m) return uniform(Verdict::no, "chordal: no unmixed pattern");
    Classification c;
    c.pattern = m;
    c.basis = std::string("chordal: ") + to_string(m->cls);
    c.unmixed = Verdict::yes;
    switch (m->cls) {
        case PatternClass::path:
        case PatternClass::k3:
            c.cohen_macaulay = c.gorenstein = c.complete_intersection = Verdict::yes;
            break;
        case PatternClass::g1:
        case PatternClass::g2:
            c.cohen_macaulay = c.gorenstein = c.complete_intersection = Verdict::no;
            break;
        case PatternClass::g3:
            c.cohen_macaulay = Verdict::yes;
            c.gorenstein = Verdict::not_covered;
            c.complete_intersection = Verdict::no;
            break;
    }
    return c;
}

GraphClassification classify(const Graph& g, ClassifyOptions opt) {
    GraphClassification out;
    out.combined = uniform(Verdict::yes, "empty graph");
    const auto comps = connected_components(g);
    for (const VertexSet& comp : comps) {
        const InducedSubgraph sub = induced_subgraph(g, comp);
        const bool chordal = is_chordal(sub.graph);
        const bool cactus = is_cactus(sub.graph);
        Classification c;
        if (chordal) {
            c = classify_chordal(sub.graph);
            if (cactus) {
                const Classification other = classify_cactus(sub.graph, opt);
                if (conflicting(c.unmixed, other.unmixed) || conflicting(c.cohen_macaulay, other.cohen_macaulay) ||
                    conflicting(c.complete_intersection, other.complete_intersection))
                    throw invariant_violation("chordal and cactus classifications disagree on component " +
                                              to_string(comp));
            }
        } else if (cactus) {
            c = classify_cactus(sub.graph, opt);
        } else {
            c = oracle_fallback(sub.graph, opt, "outside-scope");
        }

        if (c.witness) {
            std::vector<int> ids;
            for (vertex v : *c.witness) ids.push_back(sub.parent[v]);
            c.witness = VertexSet(std::move(ids));
        }
        if (c.pattern)
            for (auto& [role, v] : c.pattern->roles) v = sub.parent[v];
        out.components.push_back({comp, c});
    }

    if (out.components.size() == 1) {
        out.combined = out.components.front().verdict;
    } else if (out.components.size() > 1) {
        Classification& k = out.combined;
        k.basis = "per-component";
        for (const auto& pc : out.components) {
            const Classification& c = pc.verdict;
            k.unmixed = conjunction(k.unmixed, c.unmixed);
            k.cohen_macaulay = conjunction(k.cohen_macaulay, c.cohen_macaulay);
            k.gorenstein = conjunction(k.gorenstein, c.gorenstein);
            k.complete_intersection = conjunction(k.complete_intersection, c.complete_intersection);
            if (!k.witness && c.witness) k.witness = c.witness;
        }
    }
    return out;
}

}  // namespace pbe
