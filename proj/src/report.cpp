#include "pbe/report.hpp"

#include "pbe/io.hpp"

namespace pbe {

using nlohmann::json;

namespace {

json verdict_json(Verdict v) {
    if (v == Verdict::not_covered) return nullptr;
    return v == Verdict::yes;
}

json cliques_json(const CliqueSet& s) {
    json out = json::array();
    for (int i : s) out.push_back(i + 1);
    return out;
}

json family_json(const std::vector<CliqueSet>& f) {
    json out = json::array();
    for (const auto& s : f) out.push_back(cliques_json(s));
    return out;
}

}  // namespace

json labels_json(const Graph& g, const VertexSet& s) {
    json out = json::array();
    for (vertex v : s) out.push_back(g.label(v));
    return out;
}

json classification_json(const Graph& g, const Classification& c) {
    json out;
    out["unmixed"] = verdict_json(c.unmixed);
    out["cohen_macaulay"] = verdict_json(c.cohen_macaulay);
    out["gorenstein"] = to_string(c.gorenstein);
    out["complete_intersection"] = verdict_json(c.complete_intersection);
    out["basis"] = c.basis;
    out["witness"] = c.witness ? labels_json(g, *c.witness) : json(nullptr);
    if (c.pattern) {
        json roles = json::object();
        for (const auto& [role, v] : c.pattern->roles) roles[role] = g.label(v);
        out["pattern"] = {{"class", to_string(c.pattern->cls)}, {"roles", roles},
                          {"path_lengths", c.pattern->path_lengths}};
    } else {
        out["pattern"] = nullptr;
    }
    return out;
}

json classification_json(const Graph& g, const GraphClassification& c) {
    json out = classification_json(g, c.combined);
    json comps = json::array();
    for (const auto& pc : c.components) {
        json one = classification_json(g, pc.verdict);
        one["vertices"] = labels_json(g, pc.vertices);
        comps.push_back(std::move(one));
    }
    out["components"] = std::move(comps);
    return out;
}

json oracle_json(const Graph& g, const OracleVerdict& v) {
    json out;
    out["unmixed"] = v.unmixed;
    out["witness"] = v.witness ? labels_json(g, *v.witness) : json(nullptr);
    if (v.witness) {
        out["witness_b"] = v.witness_b;
        out["expected_b"] = static_cast<int>(v.witness->size()) + bipartite_component_count(g);
    }
    return out;
}

json spectrum_json(const Graph& g, const SpectrumReport& r) {
    json records = json::array();
    for (const auto& rec : r.records) {
        json comps = json::array();
        for (int c = 0; c < rec.profile.c(); ++c) {
            json one{{"vertices", labels_json(g, rec.profile.components[c])}, {"bipartite", bool(rec.profile.bipartite[c])}};
            if (auto it = rec.witness.find(c); it != rec.witness.end())
                one["sign"] = it->second == Sign::plus ? "+" : "-";
            comps.push_back(std::move(one));
        }
        records.push_back({{"S", labels_json(g, rec.set)}, {"c", rec.profile.c()}, {"b", rec.profile.b()},
                           {"height", rec.height}, {"components", comps}});
    }
    json out;
    out["records"] = std::move(records);
    out["heights"] = r.heights;
    out["krull_dimension"] = r.krull_dimension;
    out["unmixed"] = r.unmixed;
    out["witness"] = r.witness ? labels_json(g, *r.witness) : json(nullptr);
    return out;
}

json trace_json(const Graph& g, const CliqueDecomposition& d, const AlgorithmResult& r) {
    json cliques = json::array(), attach = json::array(), lambda = json::array();
    for (int j = 0; j < d.t(); ++j) {
        cliques.push_back(labels_json(g, d.cliques[j]));
        attach.push_back(j == 0 ? json(nullptr) : labels_json(g, d.attach[j]));
        lambda.push_back(cliques_json(d.lambda[j]));
    }
    json steps = json::array();
    for (const StepRecord& s : r.trace) {
        json iterations = json::array();
        for (const IterationRecord& it : s.iterations) {
            json one{{"q", it.q}, {"T", cliques_json(it.T)}, {"M", family_json(it.M)}};
            if (s.p == 0 && it.q > 1) {
                one["M1"] = family_json(it.M1);
                one["M2"] = family_json(it.M2);
            }
            one["L"] = it.L ? cliques_json(*it.L) : json(nullptr);
            one["x"] = it.x ? json(g.label(*it.x)) : json(nullptr);
            iterations.push_back(std::move(one));
        }
        steps.push_back({{"p", s.p}, {"iterations", iterations}, {"D", s.D}, {"A2", cliques_json(s.A2)},
                         {"A1", cliques_json(s.A1)}, {"A0", cliques_json(s.A0)}, {"H", labels_json(g, s.H)}});
    }
    json out;
    out["cliques"] = std::move(cliques);
    out["attach"] = std::move(attach);
    out["lambda"] = std::move(lambda);
    out["trace"] = std::move(steps);
    out["last_step"] = r.last_step;
    out["H"] = labels_json(g, r.H);
    out["S"] = labels_json(g, r.S);
    out["S2"] = labels_json(g, r.S2);
    out["S0"] = labels_json(g, r.S0);
    return out;
}

CrossCheckReport cross_check(const Graph& g, CrossCheckOptions opt) {
    CrossCheckReport out;
    ClassifyOptions copt;
    copt.oracle.max_n = opt.max_n;
    out.classification = classify(g, copt);
    if (g.vertex_count() > opt.max_n) return out;

    out.oracle = unmixedness_oracle(g, {opt.max_n});
    const Verdict claimed = out.classification.combined.unmixed;
    out.agree = claimed == Verdict::not_covered || (claimed == Verdict::yes) == out.oracle->unmixed;

    for (const VertexSet& comp : connected_components(g)) {
        const InducedSubgraph sub = induced_subgraph(g, comp);
        if (!is_chordal(sub.graph)) continue;
        const bool unmixed = unmixedness_oracle(sub.graph, {opt.max_n}).unmixed;
        const CliqueDecomposition d = clique_sum_order(sub.graph);
        const RunEnumeration runs = enumerate_runs(sub.graph, d, opt.run_limit);
        out.runs_truncated = out.runs_truncated || runs.truncated;
        for (const AlgorithmResult& r : runs.results) {
            ++out.runs_checked;
            auto v = verify_run(sub.graph, d, r, unmixed);
            if (v.empty()) continue;
            if (!out.failing_run) {
                out.failing_run = r;
                out.failing_component = comp;
            }
            out.violations.insert(out.violations.end(), v.begin(), v.end());
        }
    }
    return out;
}

json cross_check_json(const Graph& g, const CrossCheckReport& r) {
    json out;
    out["agree"] = r.agree && r.violations.empty();
    out["classification"] = classification_json(g, r.classification);
    out["oracle"] = r.oracle ? oracle_json(g, *r.oracle) : json(nullptr);
    out["runs_checked"] = r.runs_checked;
    out["runs_truncated"] = r.runs_truncated;
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({{"invariant", v.invariant}, {"detail", v.detail}});
    out["violations"] = std::move(violations);
    if (!r.agree || r.failing_run) {
        json bundle;
        bundle["graph"] = json::parse(emit_graph(g, GraphFormat::json));
        if (r.oracle && r.oracle->witness) bundle["witness"] = labels_json(g, *r.oracle->witness);
        if (r.failing_run) {
            const InducedSubgraph sub = induced_subgraph(g, *r.failing_component);
            bundle["trace"] = trace_json(sub.graph, clique_sum_order(sub.graph), *r.failing_run);
        }
        out["counterexample"] = std::move(bundle);
    }
    return out;
}

}  // namespace pbe
