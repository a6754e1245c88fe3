#include "ddp/solver.hpp"

#include <algorithm>

namespace ddp {
namespace {

void check_query(DominationQuery q) {
    if (q.d < 1) throw ParameterOutOfRange("distance radius d must be >= 1");
    if (q.p < 0) throw ParameterOutOfRange("packing separation p must be >= 0");
}

bool dominates_all(const DistanceTable& dist, const std::vector<char>& chosen, int d, int n) {
    for (int u = 0; u < n; ++u) {
        if (chosen[static_cast<size_t>(u)]) continue;
        bool covered = false;
        for (int w = 0; w < n && !covered; ++w)
            covered = chosen[static_cast<size_t>(w)] &&
                      dist[static_cast<size_t>(u)][static_cast<size_t>(w)] <= d;
        if (!covered) return false;
    }
    return true;
}

// Lexicographic DFS for the least valid set of exactly k vertices.
// Prunes on packing conflicts and on vertices no future pick can dominate.
struct GammaSearch {
    const DistanceTable& dist;
    int n, d, p, k;
    std::vector<int> chosen;
    std::vector<int> cover_count;  // how many chosen vertices d-cover each vertex

    GammaSearch(const DistanceTable& table, int order, DominationQuery q, int size)
        : dist(table), n(order), d(q.d), p(q.p), k(size),
          cover_count(static_cast<size_t>(order), 0) {}

    bool run(VertexSet& out) {
        chosen.clear();
        if (!extend(0)) return false;
        out = chosen;
        return true;
    }

    bool extend(int from) {
        int picked = static_cast<int>(chosen.size());
        if (picked == k) return complete();
        int remaining = k - picked;
        // A vertex with index < from that is still uncovered can only be
        // dominated by future picks; if none reaches it, this branch is dead.
        for (int u = 0; u < n; ++u) {
            if (cover_count[static_cast<size_t>(u)] > 0) continue;
            if (in_chosen(u) || u >= from) continue;
            bool reachable = false;
            for (int w = from; w < n && !reachable; ++w)
                reachable = dist[static_cast<size_t>(u)][static_cast<size_t>(w)] <= d;
            if (!reachable) return false;
        }
        if (n - from < remaining) return false;
        for (int v = from; v <= n - remaining; ++v) {
            if (!packing_ok(v)) continue;
            push(v);
            if (extend(v + 1)) return true;
            pop(v);
        }
        return false;
    }

    bool complete() const {
        for (int u = 0; u < n; ++u)
            if (cover_count[static_cast<size_t>(u)] == 0 && !in_chosen(u)) return false;
        return true;
    }

    bool in_chosen(int v) const {
        return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    }

    bool packing_ok(int v) const {
        for (int w : chosen)
            if (dist[static_cast<size_t>(v)][static_cast<size_t>(w)] < p + 1) return false;
        return true;
    }

    void push(int v) {
        chosen.push_back(v);
        for (int u = 0; u < n; ++u)
            if (dist[static_cast<size_t>(u)][static_cast<size_t>(v)] <= d)
                ++cover_count[static_cast<size_t>(u)];
    }

    void pop(int v) {
        chosen.pop_back();
        for (int u = 0; u < n; ++u)
            if (dist[static_cast<size_t>(u)][static_cast<size_t>(v)] <= d)
                --cover_count[static_cast<size_t>(u)];
    }
};

}  // namespace

bool is_d_dominating(const Graph& g, const VertexSet& s, int d) {
    auto n = g.order();
    std::vector<char> chosen(static_cast<size_t>(n), 0);
    for (int v : s) chosen[static_cast<size_t>(v)] = 1;
    std::vector<int> best(static_cast<size_t>(n), kInfDist);
    for (int v : s) {
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < n; ++u)
            best[static_cast<size_t>(u)] = std::min(best[static_cast<size_t>(u)],
                                                    dist[static_cast<size_t>(u)]);
    }
    for (int u = 0; u < n; ++u)
        if (!chosen[static_cast<size_t>(u)] &&
            (best[static_cast<size_t>(u)] == kInfDist || best[static_cast<size_t>(u)] > d))
            return false;
    return true;
}

bool is_p_packing(const Graph& g, const VertexSet& s, int p) {
    for (size_t i = 0; i < s.size(); ++i) {
        auto dist = bfs_distances(g, s[i]);
        for (size_t j = i + 1; j < s.size(); ++j) {
            int dij = dist[static_cast<size_t>(s[j])];
            if (dij != kInfDist && dij < p + 1) return false;
        }
    }
    return true;
}

GammaWitness gamma(const Graph& g, DominationQuery q) {
    check_query(q);
    if (!is_connected(g)) throw GraphDisconnected();
    auto dist = all_pairs(g);
    int n = g.order();
    for (int k = 1; k <= n; ++k) {
        GammaSearch search(dist, n, q, k);
        VertexSet witness;
        if (search.run(witness)) return {true, k, std::move(witness)};
    }
    return {false, 0, {}};
}

GammaWitness gamma_bruteforce(const Graph& g, DominationQuery q) {
    check_query(q);
    if (!is_connected(g)) throw GraphDisconnected();
    int n = g.order();
    for (int k = 1; k <= n; ++k) {
        // All k-subsets in lexicographic order.
        std::vector<int> subset(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i;
        while (true) {
            if (is_p_packing(g, subset, q.p) && is_d_dominating(g, subset, q.d))
                return {true, k, subset};
            int i = k - 1;
            while (i >= 0 && subset[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++subset[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return {false, 0, {}};
}

LevelPartition level_partition(const Graph& g, int d) {
    if (d < 1) throw ParameterOutOfRange("d must be >= 1");
    if (!is_connected(g)) throw GraphDisconnected();
    auto sides = bipartition(g);
    if (!sides) throw NotBipartite();
    if (g.order() < d + 1) throw OrderTooSmall("partition needs order >= d+1");

    LevelPartition out;
    out.parts.assign(static_cast<size_t>(d + 1), {});

    int diam = diameter(g);
    if (diam >= d + 1) {
        auto path = diametrical_path(g);
        auto level = bfs_distances(g, path.front());
        for (int v = 0; v < g.order(); ++v)
            out.parts[static_cast<size_t>(level[static_cast<size_t>(v)] % (d + 1))].push_back(v);
        return out;
    }

    // diam <= d: any nonempty set d-dominates, so slice the two sides into
    // d+1 nonempty runs, first run of each side absorbing the surplus.
    const auto& [x, y] = *sides;
    int kx = std::min(static_cast<int>(x.size()), d);
    int ky = d + 1 - kx;
    auto slice = [&](const VertexSet& side, int pieces, int first_part) {
        int surplus = static_cast<int>(side.size()) - pieces;
        size_t at = 0;
        for (int i = 0; i < pieces; ++i) {
            int take = 1 + (i == 0 ? surplus : 0);
            for (int j = 0; j < take; ++j)
                out.parts[static_cast<size_t>(first_part + i)].push_back(side[at++]);
        }
    };
    slice(x, kx, 0);
    slice(y, ky, kx);
    return out;
}

bool verify_partition(const Graph& g, const LevelPartition& partition, int d) {
    if (static_cast<int>(partition.parts.size()) != d + 1) return false;
    std::vector<int> seen(static_cast<size_t>(g.order()), 0);
    for (const auto& part : partition.parts) {
        if (part.empty()) return false;
        for (int v : part) {
            if (v < 0 || v >= g.order()) return false;
            if (seen[static_cast<size_t>(v)]++) return false;
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (!seen[static_cast<size_t>(v)]) return false;
    for (const auto& part : partition.parts) {
        if (!is_p_packing(g, part, 1)) return false;  // 1-packing == independent
        if (!is_d_dominating(g, part, d)) return false;
    }
    return true;
}

std::string tree_regime_name(TreeRegime r) {
    switch (r) {
        case TreeRegime::BelowCoronaOrder: return "n<(d+1)l";
        case TreeRegime::AtCoronaOrder: return "n=(d+1)l";
        case TreeRegime::AboveCoronaOrder: return "n>(d+1)l";
    }
    return "?";
}

BoundSheet bound_sheet(const Graph& g, int d) {
    if (d < 1) throw ParameterOutOfRange("d must be >= 1");
    BoundSheet sheet;
    sheet.n = g.order();
    sheet.leaf_count = static_cast<int>(leaves(g).size());
    sheet.d = d;
    long long n = sheet.n, l = sheet.leaf_count, dd = d;
    sheet.order_over_d1 = Frac(n, dd + 1);
    sheet.minus_leaves_over_d = Frac(n - l, dd);
    sheet.plus_leaves_over_d2 = Frac(n + l, dd + 2);
    sheet.lower_bound = Frac(n - dd * l + 2 * dd, 2 * dd + 1);
    sheet.order_bound_applies = n >= dd + 1;
    sheet.minus_leaves_applies = n - l >= dd;
    sheet.plus_leaves_applies = n >= dd;
    sheet.is_tree = is_tree(g);
    if (sheet.is_tree && n >= dd + l) {
        long long rhs = (dd + 1) * l;
        sheet.tree_regime = n < rhs   ? TreeRegime::BelowCoronaOrder
                            : n == rhs ? TreeRegime::AtCoronaOrder
                                       : TreeRegime::AboveCoronaOrder;
    }
    return sheet;
}

}  // namespace ddp
