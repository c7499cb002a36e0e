#include "pbe/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <random>
#include <set>
#include <tuple>
#include <unordered_set>

#include "pbe/chordal.hpp"
#include "pbe/error.hpp"

namespace pbe {

namespace {

// mt19937_64 output is fixed by the standard; the distributions are not, so
// bounded draws are done here to keep graphs identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return lo + static_cast<int>(x % range);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
    }

private:
    std::mt19937_64 engine_;
};

struct Builder {
    int n = 0;
    std::vector<Edge> edges;

    int add() { return n++; }
    void link(int u, int v) { edges.emplace_back(u, v); }
    void clique(const std::vector<int>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) link(vs[i], vs[j]);
    }
    // Path of `length` new vertices hanging off `anchor`.
    void whisker(int anchor, int length) {
        int prev = anchor;
        for (int i = 0; i < length; ++i) {
            int v = add();
            link(prev, v);
            prev = v;
        }
    }
    Graph graph() const { return Graph::build(n, edges); }
};

void require(bool ok, const std::string& message) {
    if (!ok) throw input_error(message);
}

}  // namespace

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    Builder b;
    b.add();
    b.whisker(0, n - 1);
    return b.graph();
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    Builder b;
    b.add();
    b.whisker(0, n - 1);
    b.link(n - 1, 0);
    return b.graph();
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    Builder b;
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(b.add());
    b.clique(all);
    return b.graph();
}

Graph bowtie() {
    Builder b;
    for (int i = 0; i < 5; ++i) b.add();
    b.clique({0, 1, 2});
    b.clique({2, 3, 4});
    return b.graph();
}

Graph diamond() {
    return triple_attach(2);
}

GeneratedGraph frak_g1(int l1, int l2, int l3) {
    require(l1 >= 1 && l2 >= 1 && l3 >= 1, "pattern path lengths must be at least 1");
    Builder b;
    for (int i = 0; i < 6; ++i) b.add();
    // alpha1..3 = 0..2, beta1..3 = 3..5
    b.clique({0, 1, 2});
    for (auto [beta, a, c] : {std::tuple{3, 0, 1}, std::tuple{4, 1, 2}, std::tuple{5, 0, 2}}) {
        b.link(beta, a);
        b.link(beta, c);
    }
    b.whisker(3, l1);
    b.whisker(4, l2);
    b.whisker(5, l3);
    return {b.graph(), {{"alpha1", 0}, {"alpha2", 1}, {"alpha3", 2}, {"beta1", 3}, {"beta2", 4}, {"beta3", 5}}};
}

GeneratedGraph frak_g2(int l2, int l3) {
    require(l2 >= 1 && l3 >= 1, "pattern path lengths must be at least 1");
    Builder b;
    for (int i = 0; i < 5; ++i) b.add();
    // alpha1, alpha2, y1, x1, x2
    b.clique({0, 1, 2, 3});
    b.link(0, 4);
    b.link(1, 4);
    b.whisker(2, l2);
    b.whisker(3, l3);
    return {b.graph(), {{"alpha1", 0}, {"alpha2", 1}, {"y1", 2}, {"x1", 3}, {"x2", 4}}};
}

GeneratedGraph frak_g3(int l1) {
    require(l1 >= 1, "pattern path length must be at least 1");
    Builder b;
    for (int i = 0; i < 4; ++i) b.add();
    // alpha1, alpha2, x1, x2
    b.clique({0, 1, 2});
    b.link(0, 3);
    b.link(1, 3);
    b.whisker(2, l1);
    return {b.graph(), {{"alpha1", 0}, {"alpha2", 1}, {"x1", 2}, {"x2", 3}}};
}

Graph worked_example() {
    std::vector<LabeledEdge> edges{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 7}};
    return Graph::from_labels({1, 2, 3, 4, 5, 6, 7}, edges);
}

Graph triangle_chain() {
    Builder b;
    for (int i = 0; i < 9; ++i) b.add();
    b.clique({0, 1, 2});
    b.clique({3, 4, 5});
    b.clique({6, 7, 8});
    b.link(2, 3);
    b.link(4, 6);
    return b.graph();
}

Graph triple_attach(int k) {
    require(k >= 1, "triple_attach needs k >= 1");
    Builder b;
    b.add();
    b.add();
    b.link(0, 1);
    for (int i = 0; i < k; ++i) {
        int apex = b.add();
        b.link(0, apex);
        b.link(1, apex);
    }
    return b.graph();
}

Graph random_chordal(int n, std::uint64_t seed) {
    require(n >= 1, "random_chordal needs n >= 1");
    Rng rng(seed);
    Builder b;
    std::vector<std::vector<int>> cliques(1);
    const int first = rng.uniform(1, std::min(n, 4));
    for (int i = 0; i < first; ++i) cliques[0].push_back(b.add());
    b.clique(cliques[0]);
    while (b.n < n) {
        std::vector<int> base = cliques[rng.uniform(0, static_cast<int>(cliques.size()) - 1)];
        rng.shuffle(base);
        const int keep = base.size() == 1 ? 1 : rng.uniform(1, static_cast<int>(base.size()) - 1);
        std::vector<int> next(base.begin(), base.begin() + keep);
        const int fresh = rng.uniform(1, std::min(3, n - b.n));
        for (int i = 0; i < fresh; ++i) next.push_back(b.add());
        std::sort(next.begin(), next.end());
        // Only pairs involving a fresh vertex are new edges.
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = i + 1; j < next.size(); ++j)
                if (next[j] >= b.n - fresh) b.link(next[i], next[j]);
        cliques.push_back(std::move(next));
    }
    return b.graph();
}

Graph random_cactus(int n, std::uint64_t seed) {
    require(n >= 1, "random_cactus needs n >= 1");
    Rng rng(seed);
    Builder b;
    b.add();
    while (b.n < n) {
        const int anchor = rng.uniform(0, b.n - 1);
        const int room = n - b.n;
        if (room >= 2 && rng.uniform(0, 2) > 0) {
            const int length = rng.uniform(3, std::min(7, room + 1));
            int prev = anchor;
            for (int i = 1; i < length; ++i) {
                int v = b.add();
                b.link(prev, v);
                prev = v;
            }
            b.link(prev, anchor);
        } else {
            b.link(anchor, b.add());
        }
    }
    return b.graph();
}

Graph random_block(int n, std::uint64_t seed) {
    require(n >= 1, "random_block needs n >= 1");
    Rng rng(seed);
    Builder b;
    std::vector<int> first;
    const int size = n == 1 ? 1 : rng.uniform(2, std::min(n, 4));
    for (int i = 0; i < size; ++i) first.push_back(b.add());
    b.clique(first);
    while (b.n < n) {
        std::vector<int> block{rng.uniform(0, b.n - 1)};
        const int grow = rng.uniform(1, std::min(3, n - b.n));
        for (int i = 0; i < grow; ++i) block.push_back(b.add());
        b.clique(block);
    }
    return b.graph();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const Label shift = a.vertex_count() == 0 ? 0 : a.labels().back() + 1;
    std::vector<Label> labels = a.labels();
    std::vector<LabeledEdge> edges;
    for (auto [u, v] : a.edges()) edges.emplace_back(a.label(u), a.label(v));
    for (Label l : b.labels()) labels.push_back(l + shift);
    for (auto [u, v] : b.edges()) edges.emplace_back(b.label(u) + shift, b.label(v) + shift);
    return Graph::from_labels(std::move(labels), edges);
}

FamilySpec parse_family(std::string_view text) {
    FamilySpec spec;
    std::size_t cut = text.find_first_of(":(");
    spec.family = std::string(text.substr(0, cut));
    if (cut == std::string_view::npos) return spec;
    std::string_view rest = text.substr(cut + 1);
    if (text[cut] == '(') {
        require(!rest.empty() && rest.back() == ')', "family '" + std::string(text) + "' is missing ')'");
        rest.remove_suffix(1);
    }
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view part = rest.substr(0, comma);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        require(ec == std::errc{} && ptr == part.data() + part.size() && !part.empty(),
                "family parameter '" + std::string(part) + "' is not an integer");
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    std::string out = spec.family;
    for (std::size_t i = 0; i < spec.params.size(); ++i) out += (i ? "," : ":") + std::to_string(spec.params[i]);
    return out;
}

GeneratedGraph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto want = [&](std::size_t count) {
        require(p.size() == count, "family " + spec.family + " takes " + std::to_string(count) + " parameter(s)");
    };
    auto small = [&](std::size_t i) {
        require(p[i] >= -1000000 && p[i] <= 1000000, "family parameter out of range");
        return static_cast<int>(p[i]);
    };
    const std::string& f = spec.family;
    if (f == "path") return want(1), GeneratedGraph{path_graph(small(0)), {}};
    if (f == "cycle") return want(1), GeneratedGraph{cycle_graph(small(0)), {}};
    if (f == "complete") return want(1), GeneratedGraph{complete_graph(small(0)), {}};
    if (f == "bowtie") return want(0), GeneratedGraph{bowtie(), {}};
    if (f == "diamond") return want(0), GeneratedGraph{diamond(), {{"alpha1", 0}, {"alpha2", 1}, {"x1", 2}, {"x2", 3}}};
    if (f == "frak_g1") return want(3), frak_g1(small(0), small(1), small(2));
    if (f == "frak_g2") return want(2), frak_g2(small(0), small(1));
    if (f == "frak_g3") return want(1), frak_g3(small(0));
    if (f == "worked_example") return want(0), GeneratedGraph{worked_example(), {}};
    if (f == "triangle_chain") return want(0), GeneratedGraph{triangle_chain(), {}};
    if (f == "triple_attach") return want(1), GeneratedGraph{triple_attach(small(0)), {}};
    if (f == "random_chordal") return want(2), GeneratedGraph{random_chordal(small(0), static_cast<std::uint64_t>(p[1])), {}};
    if (f == "random_cactus") return want(2), GeneratedGraph{random_cactus(small(0), static_cast<std::uint64_t>(p[1])), {}};
    if (f == "random_block") return want(2), GeneratedGraph{random_block(small(0), static_cast<std::uint64_t>(p[1])), {}};
    throw input_error("unknown family '" + f + "'");
}

namespace {

struct SmallGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;
};

std::string code_for(const SmallGraph& g, const std::vector<int>& order) {
    std::string bits;
    bits.reserve(g.n * (g.n - 1) / 2);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) bits.push_back((g.adj[order[i]] >> order[j]) & 1 ? '1' : '0');
    return bits;
}

// Minimum adjacency code over orderings that respect a degree-refined partition.
std::string canonical_small(const SmallGraph& g) {
    std::vector<std::pair<std::vector<int>, int>> keyed;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> key{std::popcount(g.adj[v])};
        std::vector<int> nb;
        for (int w = 0; w < g.n; ++w)
            if ((g.adj[v] >> w) & 1) nb.push_back(std::popcount(g.adj[w]));
        std::sort(nb.begin(), nb.end());
        key.insert(key.end(), nb.begin(), nb.end());
        keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<int>> cells;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) cells.emplace_back();
        cells.back().push_back(keyed[i].second);
    }
    std::string best;
    bool have = false;
    // Odometer over per-cell permutations.
    while (true) {
        std::vector<int> order;
        for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
        std::string code = code_for(g, order);
        if (!have || code < best) {
            best = std::move(code);
            have = true;
        }
        std::size_t i = 0;
        while (i < cells.size() && !std::next_permutation(cells[i].begin(), cells[i].end())) ++i;
        if (i == cells.size()) break;
    }
    return std::to_string(g.n) + ":" + best;
}

bool small_connected(const SmallGraph& g) {
    if (g.n == 0) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= g.adj[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint32_t{1} << g.n) - 1;
}

}  // namespace

std::string canonical_code(const Graph& g) {
    require(g.vertex_count() <= 10, "canonical codes are limited to 10 vertices");
    SmallGraph s{g.vertex_count(), std::vector<std::uint32_t>(g.vertex_count(), 0)};
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= std::uint32_t{1} << v;
        s.adj[v] |= std::uint32_t{1} << u;
    }
    return canonical_small(s);
}

std::vector<Graph> connected_chordal_graphs(int n) {
    require(n >= 1 && n <= 8, "exhaustive generation supports 1..8 vertices");
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<std::string> codes;
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        if (std::popcount(bits) < n - 1) continue;
        SmallGraph s{n, std::vector<std::uint32_t>(n, 0)};
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((bits >> k) & 1) {
                auto [u, v] = slots[k];
                s.adj[u] |= std::uint32_t{1} << v;
                s.adj[v] |= std::uint32_t{1} << u;
                edges.push_back(slots[k]);
            }
        if (!small_connected(s)) continue;
        Graph g = Graph::build(n, edges);
        if (!is_chordal(g)) continue;
        if (codes.insert(canonical_small(s)).second) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace pbe
