#include "pbe/tree_algorithm.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pbe/error.hpp"
#include "pbe/spectrum.hpp"

namespace pbe {

namespace {

class Chooser {
public:
    virtual ~Chooser() = default;
    virtual std::size_t pick_L(int p, int q, const std::vector<CliqueSet>& options) = 0;
    virtual std::size_t pick_x(int p, int q, const std::vector<vertex>& pool) = 0;
};

class LexChooser : public Chooser {
public:
    std::size_t pick_L(int, int, const std::vector<CliqueSet>&) override { return 0; }
    std::size_t pick_x(int, int, const std::vector<vertex>&) override { return 0; }
};

std::string clique_list(const CliqueSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += std::to_string(*it + 1);
    }
    return out + "}";
}

class ScriptChooser : public Chooser {
public:
    ScriptChooser(const Graph& g, const std::vector<ScriptEntry>& script) : g_(g), script_(script) {}

    std::size_t pick_L(int p, int q, const std::vector<CliqueSet>& options) override {
        current_ = std::nullopt;
        if (next_ >= script_.size()) return 0;
        const ScriptEntry& e = script_[next_++];
        auto it = std::find(options.begin(), options.end(), e.L);
        if (it == options.end()) {
            std::string legal;
            for (const auto& o : options) legal += (legal.empty() ? "" : " ") + clique_list(o);
            throw input_error("step " + std::to_string(p) + " iteration " + std::to_string(q) + ": L=" +
                              clique_list(e.L) + " is not a legal choice; candidates: " + legal);
        }
        current_ = e;
        step_ = p;
        iteration_ = q;
        return static_cast<std::size_t>(it - options.begin());
    }

    std::size_t pick_x(int, int, const std::vector<vertex>& pool) override {
        if (!current_ || !current_->x) return 0;
        auto it = std::find(pool.begin(), pool.end(), *current_->x);
        if (it == pool.end()) {
            std::string legal;
            for (vertex v : pool) legal += (legal.empty() ? "" : " ") + std::to_string(g_.label(v));
            throw input_error("step " + std::to_string(step_) + " iteration " + std::to_string(iteration_) +
                              ": x=" + std::to_string(g_.label(*current_->x)) +
                              " is not in the vertex pool; candidates: " + legal);
        }
        return static_cast<std::size_t>(it - pool.begin());
    }

private:
    const Graph& g_;
    const std::vector<ScriptEntry>& script_;
    std::size_t next_ = 0;
    std::optional<ScriptEntry> current_;
    int step_ = 0, iteration_ = 0;
};

// Follows a fixed prefix of choice indices, then takes the first option,
// recording how many options each choice point offered.
class ReplayChooser : public Chooser {
public:
    explicit ReplayChooser(std::vector<std::size_t> prefix) : prefix_(std::move(prefix)) {}

    std::size_t pick_L(int, int, const std::vector<CliqueSet>& options) override { return pick(options.size()); }
    std::size_t pick_x(int, int, const std::vector<vertex>& pool) override { return pick(pool.size()); }

    std::vector<std::size_t> choices, widths;

private:
    std::size_t pick(std::size_t width) {
        std::size_t c = choices.size() < prefix_.size() ? prefix_[choices.size()] : 0;
        choices.push_back(c);
        widths.push_back(width);
        return c;
    }

    std::vector<std::size_t> prefix_;
};

std::vector<CliqueSet> maximal_sets(std::vector<CliqueSet> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<CliqueSet> out;
    for (const auto& a : family) {
        bool dominated = std::any_of(family.begin(), family.end(),
                                     [&](const CliqueSet& b) { return a != b && is_subset(a, b); });
        if (!dominated) out.push_back(a);
    }
    return out;
}

CliqueSet all_cliques(int t) {
    std::vector<int> ids(t);
    for (int i = 0; i < t; ++i) ids[i] = i;
    return CliqueSet(std::move(ids));
}

VertexSet union_of(const CliqueDecomposition& d, const CliqueSet& idx) {
    VertexSet out;
    for (int i : idx) out = set_union(out, d.cliques[i]);
    return out;
}

AlgorithmResult run_engine(const Graph& g, const CliqueDecomposition& d, Chooser& chooser) {
    const int n = g.vertex_count();
    const int t = d.t();
    if (t == 0) throw input_error("empty clique decomposition");
    std::vector<CliqueSet> Lv(n);
    for (vertex v = 0; v < n; ++v) Lv[v] = d.containing(v);

    AlgorithmResult r;
    VertexSet H;

    // Step 0.
    StepRecord s0;
    std::vector<CliqueSet> chosen;
    const std::vector<CliqueSet> top = maximal_sets(Lv);
    for (int q = 1;; ++q) {
        IterationRecord it;
        it.q = q;
        CliqueSet used;
        for (const auto& L : chosen) used = set_union(used, L);
        it.T = set_difference(all_cliques(t), used);
        for (const auto& L : top)
            if (intersects(L, it.T)) it.M.push_back(L);

        std::vector<CliqueSet> options;
        if (q == 1) {
            options = it.M;
        } else {
            std::vector<int> overlap;
            for (const auto& L : it.M) {
                int hits = 0, size = 0;
                for (const auto& prev : chosen)
                    if (intersects(L, prev)) {
                        ++hits;
                        size = static_cast<int>(set_intersection(L, prev).size());
                    }
                if (hits == 1) {
                    it.M1.push_back(L);
                    overlap.push_back(size);
                }
            }
            if (!it.M1.empty()) {
                const int best = *std::min_element(overlap.begin(), overlap.end());
                for (std::size_t i = 0; i < it.M1.size(); ++i)
                    if (overlap[i] == best) it.M2.push_back(it.M1[i]);
            }
            options = it.M2;
        }
        if (options.empty()) {
            s0.iterations.push_back(std::move(it));
            break;
        }
        const CliqueSet L = options[chooser.pick_L(0, q, options)];
        const VertexSet pool = common_vertices(d, L);
        const vertex x = pool.ids()[chooser.pick_x(0, q, pool.ids())];
        it.L = L;
        it.x = x;
        chosen.push_back(L);
        H.insert(x);
        s0.D.push_back(q);
        s0.added.push_back(x);
        s0.iterations.push_back(std::move(it));
    }
    {
        std::vector<int> hits(t, 0);
        for (const auto& L : chosen)
            for (int i : L) ++hits[i];
        std::vector<int> a2, a1, a0;
        for (int i = 0; i < t; ++i) (hits[i] >= 2 ? a2 : hits[i] == 1 ? a1 : a0).push_back(i);
        s0.A2 = CliqueSet(a2);
        s0.A1 = CliqueSet(a1);
        s0.A0 = CliqueSet(a0);
    }
    s0.H = H;
    r.trace.push_back(std::move(s0));

    // Steps p >= 1 until A1 runs empty.
    for (int p = 1; !r.trace.back().A1.empty(); ++p) {
        if (p > t + 1) throw invariant_violation("algorithm did not terminate within t+1 steps");
        const StepRecord& prev = r.trace.back();
        StepRecord sp;
        sp.p = p;
        CliqueSet excluded = prev.A2;
        CliqueSet touched;
        for (int q = 1;; ++q) {
            IterationRecord it;
            it.q = q;
            it.T = set_difference(all_cliques(t), excluded);
            // Pools also avoid H itself: with a single step-0 choice the
            // clique-based exclusion alone would let x_1^0 be picked again.
            const VertexSet forbidden = set_union(union_of(d, excluded), H);
            std::vector<CliqueSet> family;
            for (vertex v = 0; v < n; ++v)
                if (!forbidden.contains(v) && intersects(Lv[v], prev.A1)) family.push_back(Lv[v]);
            it.M = maximal_sets(std::move(family));
            if (it.M.empty()) {
                sp.iterations.push_back(std::move(it));
                break;
            }
            const CliqueSet L = it.M[chooser.pick_L(p, q, it.M)];
            const VertexSet pool = set_difference(common_vertices(d, L), forbidden);
            const vertex x = pool.ids()[chooser.pick_x(p, q, pool.ids())];
            it.L = L;
            it.x = x;
            excluded = set_union(excluded, L);
            touched = set_union(touched, L);
            H.insert(x);
            sp.D.push_back(q);
            sp.added.push_back(x);
            sp.iterations.push_back(std::move(it));
        }
        sp.A2 = set_union(prev.A2, prev.A1);
        sp.A1 = set_intersection(prev.A0, touched);
        sp.A0 = set_difference(prev.A0, sp.A1);
        sp.H = H;
        r.trace.push_back(std::move(sp));
    }

    r.last_step = r.trace.back().p;
    r.H = H;
    r.S = set_difference(union_of(d, r.trace.back().A2), H);
    SSplit split = split_S(g, r.H, r.S);
    r.S2 = std::move(split.S2);
    r.S0 = std::move(split.S0);
    return r;
}

}  // namespace

AlgorithmResult run_algorithm(const Graph& g, const CliqueDecomposition& d, const RunPolicy& policy) {
    if (policy.tie_break == RunPolicy::TieBreak::script) {
        ScriptChooser chooser(g, policy.script);
        return run_engine(g, d, chooser);
    }
    LexChooser chooser;
    return run_engine(g, d, chooser);
}

RunEnumeration enumerate_runs(const Graph& g, const CliqueDecomposition& d, int limit) {
    RunEnumeration out;
    if (limit <= 0) {
        out.truncated = true;
        return out;
    }
    // Many choice sequences can collapse onto one (H, S); cap the raw walk too.
    const long long budget = static_cast<long long>(limit) * 256;
    std::set<std::pair<VertexSet, VertexSet>> seen;
    std::vector<std::size_t> prefix;
    for (long long walked = 0;; ++walked) {
        if (walked == budget) {
            out.truncated = true;
            break;
        }
        ReplayChooser chooser(prefix);
        AlgorithmResult r = run_engine(g, d, chooser);
        if (seen.emplace(r.H, r.S).second) out.results.push_back(std::move(r));

        // Advance the odometer: bump the deepest choice that still has room.
        std::vector<std::size_t> next = chooser.choices;
        int i = static_cast<int>(next.size()) - 1;
        while (i >= 0 && next[i] + 1 >= chooser.widths[i]) --i;
        if (i < 0) break;
        next.resize(i + 1);
        ++next[i];
        prefix = std::move(next);

        if (static_cast<int>(out.results.size()) == limit) {
            out.truncated = true;
            break;
        }
    }
    return out;
}

SSplit split_S(const Graph& g, const VertexSet& H, const VertexSet& S) {
    SSplit out;
    const RemovalProfile p = removal_profile(g, S);
    const int home = H.empty() ? -1 : p.component_of[H.front()];
    for (vertex s : S) {
        const auto& rc = p.reconnect.at(s);
        if (home >= 0 && rc.size() == 1 && rc.front() == home) out.S2.insert(s);
        else out.S0.insert(s);
    }
    return out;
}

namespace {

std::string labels_of(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += std::to_string(g.label(*it));
    }
    return out + "}";
}

}  // namespace

std::vector<Violation> verify_run(const Graph& g, const CliqueDecomposition& d, const AlgorithmResult& r,
                                  std::optional<bool> unmixed) {
    std::vector<Violation> out;
    auto fail = [&](std::string name, std::string detail) { out.push_back({std::move(name), std::move(detail)}); };
    const int t = d.t();
    if (r.trace.empty()) {
        fail("trace", "empty trace");
        return out;
    }

    std::map<vertex, int> level;
    for (const StepRecord& s : r.trace)
        for (vertex x : s.added) level[x] = s.p;

    VertexSet previous_H;
    for (const StepRecord& s : r.trace) {
        const std::string at = "step " + std::to_string(s.p);
        if (set_union(set_union(s.A2, s.A1), s.A0) != all_cliques(t) || intersects(s.A2, s.A1) ||
            intersects(s.A2, s.A0) || intersects(s.A1, s.A0))
            fail("partition", at + ": A2, A1, A0 do not partition the cliques");
        if (!is_subset(previous_H, s.H)) fail("H-monotone", at + ": H shrank");
        previous_H = s.H;

        if (!is_tree(induced_subgraph(g, s.H).graph)) fail("H-tree", at + ": H=" + labels_of(g, s.H) + " is not a tree");

        VertexSet outside = set_difference(union_of(d, s.A2), s.H);
        for (vertex v : outside) {
            std::vector<vertex> nb;
            for (vertex w : g.neighbors(v))
                if (s.H.contains(w)) nb.push_back(w);
            bool triangle = false;
            for (std::size_t i = 0; i < nb.size() && !triangle; ++i)
                for (std::size_t j = i + 1; j < nb.size() && !triangle; ++j) triangle = g.adjacent(nb[i], nb[j]);
            if (!triangle)
                fail("A2-triangle", at + ": vertex " + std::to_string(g.label(v)) + " has no triangle into H");
        }
        for (int i : s.A0)
            if (intersects(d.cliques[i], s.H))
                fail("A0-disjoint", at + ": clique " + std::to_string(i + 1) + " meets H");

        if (s.p >= 1) {
            for (vertex x : s.added) {
                int parents = 0, same = 0, older = 0;
                for (vertex w : g.neighbors(x)) {
                    if (!s.H.contains(w)) continue;
                    const int lw = level.at(w);
                    if (lw == s.p - 1) ++parents;
                    else if (lw == s.p) ++same;
                    else if (lw < s.p - 1) ++older;
                }
                if (parents != 1 || same != 0 || older != 0)
                    fail("levels", at + ": vertex " + std::to_string(g.label(x)) + " breaks the level structure");
            }
        }
    }

    // Step-0 combinatorics.
    std::vector<CliqueSet> chosen0;
    for (const auto& it : r.trace.front().iterations)
        if (it.L) chosen0.push_back(*it.L);
    for (const auto& L : chosen0)
        for (int i : L)
            if (i != L.front() && !is_subset(d.lambda[i], L))
                fail("step0-lambda", "lambda(" + std::to_string(i + 1) + ") is not inside " + clique_list(L));
    for (std::size_t a = 0; a < chosen0.size(); ++a)
        for (std::size_t b = a + 1; b < chosen0.size(); ++b) {
            CliqueSet both = set_intersection(chosen0[a], chosen0[b]);
            if (!both.empty() && both.front() != chosen0[a].front() && both.front() != chosen0[b].front())
                fail("step0-mu", clique_list(chosen0[a]) + " and " + clique_list(chosen0[b]) +
                                     " meet away from both minima");
        }

    if (r.last_step != r.trace.back().p || r.last_step > t) fail("termination", "more than t+1 steps");
    if (r.H != r.trace.back().H) fail("result", "H differs from the last step");

    const VertexSet expected_S = set_difference(union_of(d, r.trace.back().A2), r.trace.back().H);
    if (r.S != expected_S) fail("S", "S=" + labels_of(g, r.S) + " but the last step gives " + labels_of(g, expected_S));
    const SSplit split = split_S(g, r.H, r.S);
    if (split.S2 != r.S2 || split.S0 != r.S0) fail("S-split", "S2/S0 disagree with reconnection sets");

    auto check_disconnector = [&](const VertexSet& s, const std::string& name) {
        if (!is_disconnector(g, s)) {
            fail(name + "-disconnector", labels_of(g, s) + " is not a disconnector");
        } else if (!sign_split_assignment(g, s)) {
            fail(name + "-sign-split", labels_of(g, s) + " is not sign-split");
        }
    };
    check_disconnector(r.S, "S");
    check_disconnector(r.S0, "S0");

    auto is_component = [&](const VertexSet& removed, const VertexSet& part) {
        const RemovalProfile p = removal_profile(g, removed);
        return std::find(p.components.begin(), p.components.end(), part) != p.components.end();
    };
    if (!intersects(r.H, r.S) && !is_component(r.S, r.H))
        fail("H-component", "H is not a component of G minus S");
    if (intersects(r.H, r.S)) fail("H-component", "H meets S");
    if (!is_component(r.S0, set_union(r.H, r.S2)))
        fail("H-S2-component", "H plus S2 is not a component of G minus S0");

    if (!unmixed && g.vertex_count() <= default_max_n) unmixed = unmixedness_oracle(g).unmixed;
    if (unmixed && *unmixed) {
        for (const StepRecord& s : r.trace)
            if (!is_path(induced_subgraph(g, s.H).graph))
                fail("H-path", "step " + std::to_string(s.p) + ": H is not a path although G is unmixed");
        if (r.S2.size() > 1) fail("S2-size", "|S2| > 1 although G is unmixed");
    }
    return out;
}

}  // namespace pbe
