#include <algorithm>

#include "doctest.h"
#include "pbe/chordal.hpp"
#include "pbe/classification.hpp"
#include "pbe/error.hpp"
#include "pbe/generators.hpp"
#include "pbe/spectrum.hpp"
#include "support/reference.hpp"

using namespace pbe;

namespace {

int rank(Verdict v) { return v == Verdict::yes ? 1 : 0; }

void check_monotone(const Classification& c) {
    auto implies = [](Verdict a, Verdict b) {
        return a != Verdict::yes || b != Verdict::no;
    };
    CHECK(implies(c.complete_intersection, c.gorenstein));
    CHECK(implies(c.gorenstein, c.cohen_macaulay));
    CHECK(implies(c.cohen_macaulay, c.unmixed));
    CHECK(implies(c.complete_intersection, c.cohen_macaulay));
    CHECK(rank(c.complete_intersection) <= rank(c.unmixed));
}

Graph append_path(Graph g, vertex at, int len) {
    std::vector<Edge> e = g.edges();
    int n = g.vertex_count();
    vertex prev = at;
    for (int i = 0; i < len; ++i) {
        e.emplace_back(prev, n);
        prev = n++;
    }
    return Graph::build(n, e);
}

}  // namespace

TEST_CASE("cactus recognition") {
    CHECK(is_cactus(triangle_chain()));
    CHECK_FALSE(is_cactus(complete_graph(4)));
    CHECK(is_cactus(bowtie()));
    CHECK_FALSE(is_cactus(diamond()));
    CHECK(is_cactus(path_graph(5)));
}

TEST_CASE("pendant odd cycles") {
    auto a = pendant_odd_cycles(triangle_chain());
    CHECK(a.odd_cycles.size() == 3);
    REQUIRE(a.pendant.size() == 2);
    CHECK(a.pendant[0] == std::pair<VertexSet, vertex>{{0, 1, 2}, 2});
    CHECK(a.pendant[1] == std::pair<VertexSet, vertex>{{6, 7, 8}, 6});
    for (std::size_t i = 0; i < a.odd_cycles.size(); ++i) {
        const bool pendant = std::any_of(a.pendant.begin(), a.pendant.end(),
                                         [&](const auto& p) { return p.first == a.odd_cycles[i]; });
        CHECK(pendant == (a.epsilon[i] <= 1));
    }

    auto c5 = pendant_odd_cycles(cycle_graph(5));
    REQUIRE(c5.pendant.size() == 1);
    CHECK(c5.pendant[0].first == VertexSet{0, 1, 2, 3, 4});

    auto bow = pendant_odd_cycles(bowtie());
    REQUIRE(bow.pendant.size() == 2);
    CHECK(bow.pendant[0].second == 2);
    CHECK(bow.pendant[1].second == 2);
}

TEST_CASE("pendant splits") {
    auto s = pendant_split(bowtie(), {0, 1, 2}, 2);
    CHECK(s.g0 == VertexSet{0, 1});
    CHECK(s.rest == VertexSet{3, 4});
    CHECK(s.g0_graph.edge_count() == 1);
    CHECK(s.rest_graph.edge_count() == 1);

    auto t = pendant_split(triangle_chain(), {0, 1, 2}, 2);
    CHECK(t.g0 == VertexSet{0, 1});
    CHECK(t.rest == VertexSet{3, 4, 5, 6, 7, 8});

    auto c = pendant_split(cycle_graph(5), {0, 1, 2, 3, 4}, 0);
    CHECK(is_path(c.g0_graph));
    CHECK(c.g0.size() == 4);
    CHECK(c.rest.empty());
}

TEST_CASE("cactus classification") {
    auto c5 = classify_cactus(cycle_graph(5));
    CHECK(c5.unmixed == Verdict::yes);
    CHECK(c5.cohen_macaulay == Verdict::yes);
    CHECK(c5.gorenstein == Verdict::yes);
    CHECK(c5.complete_intersection == Verdict::yes);

    auto bow = classify_cactus(bowtie());
    CHECK(bow.unmixed == Verdict::no);
    CHECK(bow.complete_intersection == Verdict::no);
    CHECK(bow.basis == "cactus: at least two odd cycles");

    auto p5 = classify_cactus(path_graph(5));
    CHECK(p5.unmixed == Verdict::yes);
    CHECK(p5.cohen_macaulay == Verdict::yes);
    CHECK(p5.complete_intersection == Verdict::yes);

    auto c4 = classify_cactus(cycle_graph(4));
    CHECK(c4.basis.find("not-covered") == 0);
    CHECK(c4.unmixed == Verdict::no);
    REQUIRE(c4.witness.has_value());
    CHECK(*c4.witness == VertexSet{0, 2});
    CHECK(c4.cohen_macaulay == Verdict::no);

    CHECK_THROWS_AS(classify_cactus(complete_graph(4)), input_error);
}

TEST_CASE("pattern matching") {
    auto g3 = match_pattern(frak_g3(1).graph);
    REQUIRE(g3.has_value());
    CHECK(g3->cls == PatternClass::g3);
    CHECK(g3->path_lengths == std::vector<int>{1});

    auto g1 = match_pattern(frak_g1(1, 1, 1).graph);
    REQUIRE(g1.has_value());
    CHECK(g1->cls == PatternClass::g1);
    CHECK(g1->path_lengths == std::vector<int>{1, 1, 1});

    CHECK_FALSE(match_pattern(diamond()).has_value());
    CHECK(match_pattern(complete_graph(3))->cls == PatternClass::k3);
    CHECK(match_pattern(path_graph(4))->cls == PatternClass::path);
    CHECK_FALSE(match_pattern(bowtie()).has_value());
    auto w = match_pattern(worked_example());
    REQUIRE(w.has_value());
    CHECK(w->cls == PatternClass::g2);
    CHECK(w->roles.at("x2") == 0);

    // A second path at an anchor, or a path at a forbidden vertex, breaks the match.
    auto g = frak_g3(1);
    CHECK_FALSE(match_pattern(append_path(g.graph, g.roles.at("x1"), 1)).has_value());
    CHECK_FALSE(match_pattern(append_path(g.graph, g.roles.at("x2"), 1)).has_value());
    CHECK_FALSE(match_pattern(append_path(g.graph, g.roles.at("alpha1"), 2)).has_value());
}

TEST_CASE("pattern roles agree with the generators") {
    for (const auto& gg : {frak_g1(1, 2, 3), frak_g1(2, 1, 1), frak_g2(1, 1), frak_g2(3, 2), frak_g3(1), frak_g3(4)}) {
        auto m = match_pattern(gg.graph);
        REQUIRE(m.has_value());
        CHECK(m->roles == gg.roles);
    }
    CHECK(match_pattern(frak_g1(1, 2, 3).graph)->path_lengths == std::vector<int>{1, 2, 3});
    CHECK(match_pattern(frak_g2(3, 2).graph)->path_lengths == std::vector<int>{3, 2});
}

TEST_CASE("chordal classification") {
    auto k3 = classify_chordal(complete_graph(3));
    CHECK(k3.unmixed == Verdict::yes);
    CHECK(k3.cohen_macaulay == Verdict::yes);
    CHECK(k3.complete_intersection == Verdict::yes);

    auto g2 = classify_chordal(frak_g2(1, 1).graph);
    CHECK(frak_g2(1, 1).graph.vertex_count() == 7);
    CHECK(g2.unmixed == Verdict::yes);
    CHECK(g2.cohen_macaulay == Verdict::no);

    auto g3 = classify_chordal(frak_g3(1).graph);
    CHECK(frak_g3(1).graph.vertex_count() == 5);
    CHECK(g3.unmixed == Verdict::yes);
    CHECK(g3.cohen_macaulay == Verdict::yes);
    CHECK(g3.gorenstein == Verdict::not_covered);

    CHECK(classify_chordal(diamond()).unmixed == Verdict::no);
    CHECK_THROWS_AS(classify_chordal(cycle_graph(4)), input_error);
}

TEST_CASE("whole-graph classification") {
    auto u = classify(disjoint_union(complete_graph(3), path_graph(3)));
    CHECK(u.components.size() == 2);
    CHECK(u.combined.unmixed == Verdict::yes);
    CHECK(u.combined.cohen_macaulay == Verdict::yes);
    CHECK(u.combined.basis == "per-component");

    auto c5 = classify(cycle_graph(5)).combined;
    CHECK(c5.unmixed == Verdict::yes);
    CHECK(c5.cohen_macaulay == Verdict::yes);

    auto c4 = classify(cycle_graph(4)).combined;
    CHECK(c4.basis.find("(unmixedness by oracle)") != std::string::npos);
    CHECK(c4.unmixed == Verdict::no);

    auto outside = classify(complete_graph(4));
    CHECK(outside.combined.unmixed == Verdict::no);

    auto mixed = classify(disjoint_union(bowtie(), complete_graph(3))).combined;
    CHECK(mixed.unmixed == Verdict::no);

    auto empty = classify(Graph::build(0, {})).combined;
    CHECK(empty.unmixed == Verdict::yes);

    // A 5-cycle with one chord: neither chordal nor cactus.
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}};
    auto fan = classify(Graph::build(5, e)).combined;
    CHECK(fan.basis.find("outside-scope") == 0);
    auto big = classify(path_graph(3), ClassifyOptions{{.max_n = 2}});
    CHECK(big.combined.unmixed == Verdict::yes);
}

TEST_CASE("classifier agrees with the oracle on chordal graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_chordal_graphs(n)) {
            auto c = classify(g).combined;
            check_monotone(c);
            CHECK((c.unmixed == Verdict::yes) == unmixedness_oracle(g).unmixed);
        }
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_chordal(3 + static_cast<int>(seed % 10), seed);
        auto c = classify(g).combined;
        check_monotone(c);
        CHECK((c.unmixed == Verdict::yes) == unmixedness_oracle(g).unmixed);
    }
    for (const auto& gg : {frak_g1(1, 1, 1), frak_g1(2, 1, 1), frak_g2(2, 2), frak_g3(3)}) {
        CHECK(unmixedness_oracle(gg.graph).unmixed);
        CHECK(classify(gg.graph).combined.unmixed == Verdict::yes);
    }
}

TEST_CASE("classifier agrees with the oracle on cactus graphs") {
    int non_bipartite = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = random_cactus(3 + static_cast<int>(seed % 10), seed);
        REQUIRE(is_cactus(g));
        auto c = classify(g).combined;
        check_monotone(c);
        if (is_bipartite(g)) continue;
        ++non_bipartite;
        CHECK((c.unmixed == Verdict::yes) == unmixedness_oracle(g).unmixed);
    }
    CHECK(non_bipartite > 50);
}

TEST_CASE("pendant cycle count laws and descent") {
    int sampled = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_cactus(4 + static_cast<int>(seed % 8), seed + 77);
        auto a = pendant_odd_cycles(g);
        for (const auto& [cycle, v] : a.pendant) {
            auto split = pendant_split(g, cycle, v);
            const Graph& rest = split.rest_graph;
            if (unmixedness_oracle(g).unmixed) CHECK(unmixedness_oracle(rest).unmixed);
            const auto& ids = split.rest.ids();
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ids.size()); ++bits) {
                VertexSet local = ref::subset(bits), host{v};
                for (vertex x : local) host.insert(ids[x]);
                auto here = ref::counts(g, host);
                auto there = ref::counts(rest, local);
                CHECK(here.c == there.c + 1);
                CHECK(here.b == there.b + 1);
                ++sampled;
            }
        }
    }
    CHECK(sampled > 1000);
}

TEST_CASE("whisker invariance") {
    auto same = [](const GeneratedGraph& a, const GeneratedGraph& b) {
        auto ca = classify(a.graph).combined, cb = classify(b.graph).combined;
        CHECK(ca.pattern->cls == cb.pattern->cls);
        CHECK(ca.cohen_macaulay == cb.cohen_macaulay);
        CHECK(unmixedness_oracle(a.graph).unmixed == unmixedness_oracle(b.graph).unmixed);
    };
    same(frak_g1(1, 1, 1), frak_g1(2, 1, 1));
    same(frak_g1(1, 2, 1), frak_g1(1, 2, 2));
    same(frak_g2(1, 1), frak_g2(2, 1));
    same(frak_g2(1, 1), frak_g2(1, 2));
    same(frak_g3(1), frak_g3(2));
    same(frak_g3(2), frak_g3(3));
}

TEST_CASE("block and generalized block graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_block(3 + static_cast<int>(seed % 10), seed);
        REQUIRE(is_block_graph(g));
        auto c = classify(g).combined;
        if (c.unmixed == Verdict::yes) {
            REQUIRE(c.pattern.has_value());
            CHECK((c.pattern->cls == PatternClass::path || c.pattern->cls == PatternClass::k3));
        }
    }
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_chordal_graphs(n)) {
            if (!is_generalized_block_graph(g)) continue;
            auto c = classify(g).combined;
            if (c.unmixed == Verdict::yes) CHECK(c.pattern->cls != PatternClass::g1);
        }
    CHECK(is_generalized_block_graph(frak_g3(2).graph));
}
