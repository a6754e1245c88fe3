#include "ddp/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace ddp {
namespace {

std::string ahu_code(const Graph& t, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : t.neighbors(v))
        if (w != parent) child_codes.push_back(ahu_code(t, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

std::vector<int> tree_centers(const Graph& t) {
    int n = t.order();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = t.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) frontier.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(frontier.size());
        for (int v : frontier) {
            deg[static_cast<size_t>(v)] = 0;
            for (int w : t.neighbors(v))
                if (deg[static_cast<size_t>(w)] > 0 && --deg[static_cast<size_t>(w)] == 1)
                    next.push_back(w);
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

constexpr uint32_t kUnsetChunk = UINT32_MAX;

// Prefix-pruned search for the lexicographically least upper-triangle
// adjacency bit-string over all vertex orderings.
struct MinCodeSearch {
    const Graph& g;
    int n;
    std::vector<uint32_t> masks;   // adjacency bitmask per vertex
    std::vector<uint32_t> best;    // best chunk per position, kUnsetChunk = +inf
    std::vector<uint32_t> cur;
    std::vector<int> placed;
    uint32_t used = 0;

    explicit MinCodeSearch(const Graph& graph) : g(graph), n(graph.order()) {
        masks.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) masks[static_cast<size_t>(v)] |= 1u << w;
        best.assign(static_cast<size_t>(n), kUnsetChunk);
        cur.assign(static_cast<size_t>(n), 0);
        placed.reserve(static_cast<size_t>(n));
    }

    void run() { descend(0); }

    void descend(int pos) {
        if (pos == n) {
            best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            uint32_t chunk = 0;
            for (int j = 0; j < pos; ++j) {
                chunk <<= 1;
                if (masks[static_cast<size_t>(v)] & (1u << placed[static_cast<size_t>(j)]))
                    chunk |= 1;
            }
            if (chunk > best[static_cast<size_t>(pos)]) continue;
            if (chunk < best[static_cast<size_t>(pos)])
                std::fill(best.begin() + pos, best.end(), kUnsetChunk);
            cur[static_cast<size_t>(pos)] = chunk;
            placed.push_back(v);
            used |= 1u << v;
            descend(pos + 1);
            used &= ~(1u << v);
            placed.pop_back();
        }
    }
};

}  // namespace

std::string tree_canonical_form(const Graph& t) {
    if (!is_tree(t)) throw NotATree();
    auto centers = tree_centers(t);
    std::string code = ahu_code(t, centers[0], -1);
    if (centers.size() == 2) code = std::min(code, ahu_code(t, centers[1], -1));
    return code;
}

std::string graph_canonical_form(const Graph& g, int order_cap) {
    if (g.order() > order_cap) throw OrderTooLarge();
    MinCodeSearch search(g);
    search.run();
    std::string out = std::to_string(g.order()) + ":";
    for (int i = 1; i < g.order(); ++i) {
        uint32_t chunk = search.best[static_cast<size_t>(i)];
        for (int j = i - 1; j >= 0; --j) out += ((chunk >> j) & 1) ? '1' : '0';
    }
    return out;
}

std::string canonical_code(const Graph& g, int order_cap) {
    if (is_tree(g)) return "t" + tree_canonical_form(g);
    return "g" + graph_canonical_form(g, order_cap);
}

bool isomorphic(const Graph& g, const Graph& h, int order_cap) {
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    if (g.order() > order_cap) throw OrderTooLarge();
    int n = g.order();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v : g.neighbors(u))
                if (!h.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace ddp
