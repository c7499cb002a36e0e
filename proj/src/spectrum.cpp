#include "pbe/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "pbe/error.hpp"

namespace pbe {

namespace {

using mask = std::uint64_t;

constexpr mask bit(int v) { return mask{1} << v; }

struct Counts {
    int c = 0;
    int b = 0;
    int sum() const { return c + b; }
};

// Components and bipartite components of the subgraph induced on `alive`.
// A BFS component is bipartite iff no edge stays inside one layer.
Counts mask_counts(const Graph& g, mask alive) {
    Counts out;
    mask remaining = alive;
    while (remaining) {
        mask layer = bit(std::countr_zero(remaining));
        mask seen = layer;
        bool bipartite = true;
        while (layer) {
            mask next = 0;
            for (mask rest = layer; rest; rest &= rest - 1) {
                mask nb = g.neighbor_mask(std::countr_zero(rest)) & alive;
                if (nb & layer) bipartite = false;
                next |= nb;
            }
            next &= ~seen;
            seen |= next;
            layer = next;
        }
        remaining &= ~seen;
        ++out.c;
        if (bipartite) ++out.b;
    }
    return out;
}

mask to_mask(const VertexSet& s) {
    mask m = 0;
    for (vertex v : s) m |= bit(v);
    return m;
}

VertexSet from_mask(mask m) {
    std::vector<int> ids;
    for (; m; m &= m - 1) ids.push_back(std::countr_zero(m));
    return VertexSet(std::move(ids));
}

mask full_mask(int n) {
    return n == 64 ? ~mask{0} : bit(n) - 1;
}

bool mask_disconnector(const Graph& g, mask removed, mask all, Counts base) {
    for (mask rest = removed; rest; rest &= rest - 1) {
        Counts back = mask_counts(g, (all & ~removed) | (rest & -rest));
        if (base.sum() <= back.sum()) return false;
    }
    return true;
}

void check_cap(const Graph& g, const SpectrumOptions& opt) {
    const int n = g.vertex_count();
    if (n > opt.max_n || n > 63)
        throw cap_exceeded("graph has " + std::to_string(n) + " vertices, above the exhaustive cap of " +
                           std::to_string(std::min(opt.max_n, 63)) + "; raise --max-n if you can afford 2^n subsets");
}

// Calls visit(mask) for every subset of {0..n-1}, ordered by size and then
// lexicographically by sorted member list. Stops when visit returns false.
template <class Visit>
void for_each_subset(int n, Visit visit) {
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            mask m = 0;
            for (int i : idx) m |= bit(i);
            if (!visit(m)) return;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

Counts profile_counts(const Graph& g, const VertexSet& s) {
    RemovalProfile p = removal_profile(g, s);
    return {p.c(), p.b()};
}

}  // namespace

bool is_cut_set(const Graph& g, const VertexSet& s) {
    require_subset(g, s);
    const int c = profile_counts(g, s).c;
    for (vertex v : s) {
        VertexSet without = s;
        without.erase(v);
        if (c <= profile_counts(g, without).c) return false;
    }
    return true;
}

bool is_disconnector(const Graph& g, const VertexSet& s) {
    require_subset(g, s);
    if (g.fits_mask()) {
        const mask all = full_mask(g.vertex_count());
        const mask removed = to_mask(s);
        return mask_disconnector(g, removed, all, mask_counts(g, all & ~removed));
    }
    const int total = profile_counts(g, s).sum();
    for (vertex v : s) {
        VertexSet without = s;
        without.erase(v);
        if (total <= profile_counts(g, without).sum()) return false;
    }
    return true;
}

std::vector<std::vector<int>> sign_constraints(const RemovalProfile& p) {
    std::vector<std::vector<int>> out;
    for (const auto& [s, family] : p.reconnect) {
        bool all_odd = std::none_of(family.begin(), family.end(), [&](int c) { return p.bipartite[c]; });
        if (all_odd) out.push_back(family);
    }
    return out;
}

bool satisfies_sign_split(const RemovalProfile& p, const SignAssignment& a) {
    for (int c = 0; c < p.c(); ++c)
        if (!p.bipartite[c] && !a.contains(c)) return false;
    for (const auto& family : sign_constraints(p)) {
        bool plus = false, minus = false;
        for (int c : family) (a.at(c) == Sign::plus ? plus : minus) = true;
        if (!(plus && minus)) return false;
    }
    return true;
}

std::optional<SignAssignment> sign_split_exhaustive(const RemovalProfile& p) {
    std::vector<int> odd;
    for (int c = 0; c < p.c(); ++c)
        if (!p.bipartite[c]) odd.push_back(c);
    if (odd.size() > 30) throw cap_exceeded("too many non-bipartite components for exhaustive sign search");
    const std::uint64_t total = std::uint64_t{1} << odd.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        SignAssignment a;
        for (std::size_t i = 0; i < odd.size(); ++i) a[odd[i]] = (bits >> i) & 1 ? Sign::minus : Sign::plus;
        if (satisfies_sign_split(p, a)) return a;
    }
    return std::nullopt;
}

SignSplitResult sign_split(const Graph& g, const VertexSet& s) {
    if (!is_disconnector(g, s)) throw input_error("sign-split check needs a disconnector; " + to_string(s) + " is not one");
    const RemovalProfile p = removal_profile(g, s);
    const auto constraints = sign_constraints(p);
    SignSplitResult out;

    if (constraints.empty()) {
        SignAssignment a;
        for (int c = 0; c < p.c(); ++c)
            if (!p.bipartite[c]) a[c] = Sign::plus;
        out.assignment = std::move(a);
        out.route = SignSplitRoute::vacuous;
        return out;
    }

    std::vector<int> common = constraints.front();
    for (const auto& family : constraints) {
        std::vector<int> keep;
        std::set_intersection(common.begin(), common.end(), family.begin(), family.end(), std::back_inserter(keep));
        common = std::move(keep);
    }
    if (!common.empty()) {
        SignAssignment a;
        for (int c = 0; c < p.c(); ++c)
            if (!p.bipartite[c]) a[c] = c == common.front() ? Sign::plus : Sign::minus;
        if (satisfies_sign_split(p, a)) {
            out.assignment = std::move(a);
            out.route = SignSplitRoute::common_component;
            return out;
        }
    }

    out.assignment = sign_split_exhaustive(p);
    out.route = SignSplitRoute::exhaustive;
    return out;
}

std::optional<SignAssignment> sign_split_assignment(const Graph& g, const VertexSet& s) {
    return sign_split(g, s).assignment;
}

int height(const Graph& g, const RemovalProfile& p) {
    return static_cast<int>(p.removed.size()) + g.vertex_count() - p.b();
}

std::vector<VertexSet> enumerate_disconnectors(const Graph& g, SpectrumOptions opt) {
    check_cap(g, opt);
    const int n = g.vertex_count();
    const mask all = full_mask(n);
    std::vector<VertexSet> out;
    for_each_subset(n, [&](mask removed) {
        if (mask_disconnector(g, removed, all, mask_counts(g, all & ~removed))) out.push_back(from_mask(removed));
        return true;
    });
    return out;
}

std::vector<DisconnectorRecord> enumerate_sign_split_disconnectors(const Graph& g, SpectrumOptions opt) {
    std::vector<DisconnectorRecord> out;
    for (VertexSet& s : enumerate_disconnectors(g, opt)) {
        auto a = sign_split_assignment(g, s);
        if (!a) continue;
        DisconnectorRecord r;
        r.profile = removal_profile(g, s);
        r.height = height(g, r.profile);
        r.witness = std::move(*a);
        r.set = std::move(s);
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// First violating S of a connected graph in (size, lex) order. The count
// condition is checked first since it is far cheaper than the disconnector test.
std::optional<VertexSet> connected_violation(const Graph& g) {
    const int n = g.vertex_count();
    const mask all = full_mask(n);
    const int base_b = mask_counts(g, all).b;
    std::optional<VertexSet> found;
    for_each_subset(n, [&](mask removed) {
        const Counts here = mask_counts(g, all & ~removed);
        if (here.b == std::popcount(removed) + base_b) return true;
        if (!mask_disconnector(g, removed, all, here)) return true;
        VertexSet s = from_mask(removed);
        if (!sign_split_assignment(g, s)) return true;
        found = std::move(s);
        return false;
    });
    return found;
}

}  // namespace

OracleVerdict unmixedness_oracle(const Graph& g, SpectrumOptions opt) {
    check_cap(g, opt);
    OracleVerdict out;
    for (const VertexSet& comp : connected_components(g)) {
        const InducedSubgraph sub = induced_subgraph(g, comp);
        auto local = connected_violation(sub.graph);
        if (!local) continue;
        std::vector<int> ids;
        for (vertex v : *local) ids.push_back(sub.parent[v]);
        VertexSet s(std::move(ids));
        if (!out.witness || s.size() < out.witness->size() || (s.size() == out.witness->size() && s < *out.witness))
            out.witness = std::move(s);
    }
    if (out.witness) {
        out.unmixed = false;
        out.witness_b = removal_profile(g, *out.witness).b();
    }
    return out;
}

SpectrumReport spectrum_report(const Graph& g, SpectrumOptions opt) {
    SpectrumReport out;
    out.records = enumerate_sign_split_disconnectors(g, opt);
    int min_height = 2 * g.vertex_count();
    for (const auto& r : out.records) {
        out.heights.push_back(r.height);
        min_height = std::min(min_height, r.height);
    }
    const OracleVerdict verdict = unmixedness_oracle(g, opt);
    out.unmixed = verdict.unmixed;
    out.witness = verdict.witness;
    out.krull_dimension = 2 * g.vertex_count() - min_height;
    return out;
}

std::vector<int> minimal_prime_heights(const Graph& g, SpectrumOptions opt) {
    return spectrum_report(g, opt).heights;
}

int krull_dimension(const Graph& g, SpectrumOptions opt) {
    return spectrum_report(g, opt).krull_dimension;
}

}  // namespace pbe
