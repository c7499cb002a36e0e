#include <algorithm>

#include "doctest.h"
#include "pbe/error.hpp"
#include "pbe/generators.hpp"
#include "pbe/spectrum.hpp"
#include "pbe/tree_algorithm.hpp"

using namespace pbe;

namespace {

// worked_example labels are 1..7, so vertex id = label - 1.
VertexSet L(std::initializer_list<int> labels) {
    VertexSet s;
    for (int l : labels) s.insert(l - 1);
    return s;
}

std::string describe(const std::vector<Violation>& v) {
    std::string out;
    for (const auto& x : v) out += x.invariant + ": " + x.detail + "\n";
    return out;
}

}  // namespace

TEST_CASE("worked example golden trace") {
    Graph g = worked_example();
    auto d = clique_sum_order(g);
    auto r = run_algorithm(g, d);

    REQUIRE(r.trace.size() == 2);
    const auto& s0 = r.trace[0];
    CHECK(s0.D == std::vector<int>{1, 2});
    CHECK(s0.A2 == CliqueSet{1});
    CHECK(s0.A1 == CliqueSet{0, 2});
    CHECK(s0.A0 == CliqueSet{3});
    CHECK(s0.H == L({2, 4}));
    REQUIRE(s0.iterations.size() == 3);
    CHECK(s0.iterations[0].T == CliqueSet{0, 1, 2, 3});
    CHECK(s0.iterations[0].M == std::vector<CliqueSet>{{0, 1}, {1, 2}, {1, 3}});
    CHECK(s0.iterations[0].L == CliqueSet{0, 1});
    CHECK(s0.iterations[0].x == 1);
    CHECK(s0.iterations[1].T == CliqueSet{2, 3});
    CHECK(s0.iterations[1].M1 == std::vector<CliqueSet>{{1, 2}, {1, 3}});
    CHECK(s0.iterations[1].M2 == std::vector<CliqueSet>{{1, 2}, {1, 3}});
    CHECK(s0.iterations[1].L == CliqueSet{1, 2});
    CHECK(s0.iterations[1].x == 3);
    CHECK_FALSE(s0.iterations[2].L.has_value());
    CHECK(s0.iterations[2].M1.empty());

    const auto& s1 = r.trace[1];
    CHECK(s1.A2 == CliqueSet{0, 1, 2});
    CHECK(s1.A1.empty());
    CHECK(s1.iterations[0].M == std::vector<CliqueSet>{{0}, {2}});
    CHECK(s1.iterations[0].L == CliqueSet{0});
    CHECK(s1.iterations[0].x == 0);
    CHECK(s1.iterations[1].L == CliqueSet{2});
    CHECK(s1.iterations[1].x == 5);

    CHECK(r.last_step == 1);
    CHECK(r.H == L({1, 2, 4, 6}));
    CHECK(r.S == L({3, 5}));
    CHECK(r.S2 == L({3}));
    CHECK(r.S0 == L({5}));
    CHECK(verify_run(g, d, r).empty());
}

TEST_CASE("explicit script") {
    Graph g = worked_example();
    auto d = clique_sum_order(g);
    RunPolicy scripted{RunPolicy::TieBreak::script,
                       {{{0, 1}, 1}, {{1, 2}, 3}, {{0}, 0}, {{2}, 5}}};
    auto r = run_algorithm(g, d, scripted);
    CHECK(r.H == L({1, 2, 4, 6}));
    CHECK(r.S == L({3, 5}));

    RunPolicy other{RunPolicy::TieBreak::script, {{{1, 3}, std::nullopt}}};
    auto r2 = run_algorithm(g, d, other);
    CHECK(r2.trace[0].iterations[0].L == CliqueSet{1, 3});
    CHECK(verify_run(g, d, r2).empty());

    RunPolicy bad_L{RunPolicy::TieBreak::script, {{{0, 3}, std::nullopt}}};
    CHECK_THROWS_AS(run_algorithm(g, d, bad_L), input_error);
    RunPolicy bad_x{RunPolicy::TieBreak::script, {{{0, 1}, 6}}};
    CHECK_THROWS_AS(run_algorithm(g, d, bad_x), input_error);
    try {
        run_algorithm(g, d, bad_L);
    } catch (const input_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("step 0") != std::string::npos);
        CHECK(msg.find("{1,2}") != std::string::npos);
    }
}

TEST_CASE("single clique and path") {
    Graph k3 = complete_graph(3);
    auto dk = clique_sum_order(k3);
    auto r = run_algorithm(k3, dk);
    CHECK(r.trace[0].iterations[0].L == CliqueSet{0});
    CHECK(r.trace[0].A2.empty());
    CHECK(r.trace[0].A1 == CliqueSet{0});
    CHECK(r.last_step == 1);
    CHECK(r.H.size() == 2);
    CHECK(r.S.size() == 1);
    CHECK(r.S2 == r.S);
    CHECK(r.S0.empty());
    CHECK(verify_run(k3, dk, r).empty());

    Graph p4 = path_graph(4);
    auto dp = clique_sum_order(p4);
    auto rp = run_algorithm(p4, dp);
    CHECK(rp.H == all_vertices(p4));
    CHECK(rp.S.empty());
    CHECK(rp.S2.empty());
    CHECK(rp.S0.empty());
    CHECK(verify_run(p4, dp, rp).empty());
}

TEST_CASE("run enumeration") {
    Graph g = worked_example();
    auto d = clique_sum_order(g);
    auto e = enumerate_runs(g, d, 64);
    CHECK_FALSE(e.truncated);
    bool found = false;
    for (const auto& r : e.results) {
        found = found || (r.H == L({1, 2, 4, 6}) && r.S == L({3, 5}));
        CHECK(verify_run(g, d, r).empty());
    }
    CHECK(found);

    auto k3 = enumerate_runs(complete_graph(3), clique_sum_order(complete_graph(3)));
    CHECK(k3.results.size() == 3);
    for (const auto& r : k3.results) {
        CHECK(r.H.size() == 2);
        CHECK(r.S.size() == 1);
    }

    auto p4 = enumerate_runs(path_graph(4), clique_sum_order(path_graph(4)));
    for (const auto& r : p4.results) CHECK(r.S.empty());

    auto cut = enumerate_runs(g, d, 2);
    CHECK(cut.truncated);
    CHECK(cut.results.size() == 2);
}

TEST_CASE("split_S") {
    Graph g = worked_example();
    auto s = split_S(g, L({1, 2, 4, 6}), L({3, 5}));
    CHECK(s.S2 == L({3}));
    CHECK(s.S0 == L({5}));
    auto e = split_S(path_graph(4), all_vertices(path_graph(4)), {});
    CHECK(e.S2.empty());
    CHECK(e.S0.empty());
}

TEST_CASE("tampered results are caught") {
    Graph g = worked_example();
    auto d = clique_sum_order(g);
    auto r = run_algorithm(g, d);
    auto bad = r;
    bad.H.erase(5);
    bad.S.insert(5);
    CHECK_FALSE(verify_run(g, d, bad).empty());

    auto bad2 = r;
    std::swap(bad2.S2, bad2.S0);
    CHECK_FALSE(verify_run(g, d, bad2).empty());
}

TEST_CASE("non-unmixed graphs still satisfy the unconditional invariants") {
    Graph b = bowtie();
    auto d = clique_sum_order(b);
    for (const auto& r : enumerate_runs(b, d).results) CHECK(verify_run(b, d, r).empty());
}

TEST_CASE("invariants over all runs on random chordal graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int n = 2 + static_cast<int>(seed % 10);
        Graph g = random_chordal(n, seed);
        auto d = clique_sum_order(g);
        const bool unmixed = unmixedness_oracle(g).unmixed;
        auto runs = enumerate_runs(g, d, 32);
        REQUIRE_FALSE(runs.results.empty());
        for (const auto& r : runs.results) {
            auto v = verify_run(g, d, r, unmixed);
            CHECK_MESSAGE(v.empty(), "seed " << seed << "\n" << describe(v));
            CHECK(r.last_step <= d.t());
            auto split = split_S(g, r.H, r.S);
            CHECK(split.S2 == r.S2);
            CHECK(split.S0 == r.S0);
            CHECK(is_disconnector(g, r.S));
            CHECK(sign_split_assignment(g, r.S).has_value());
        }
    }
}

TEST_CASE("invariants on pattern graphs") {
    for (const auto& gg : {frak_g1(1, 2, 1), frak_g2(2, 1), frak_g3(3)}) {
        auto d = clique_sum_order(gg.graph);
        for (const auto& r : enumerate_runs(gg.graph, d, 64).results) {
            auto v = verify_run(gg.graph, d, r, true);
            CHECK_MESSAGE(v.empty(), describe(v));
        }
    }
}
