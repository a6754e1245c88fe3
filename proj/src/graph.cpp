#include "ddp/graph.hpp"

#include <algorithm>
#include <deque>

namespace ddp {

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw ParameterOutOfRange("edge endpoint out of range");
    if (u == v) throw ParameterOutOfRange("self-loops are not allowed");
    if (has_edge(u, v)) throw ParameterOutOfRange("parallel edges are not allowed");
    auto& nu = adj_[static_cast<size_t>(u)];
    auto& nv = adj_[static_cast<size_t>(v)];
    nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.order()), kInfDist);
    dist[static_cast<size_t>(source)] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] == kInfDist) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceTable all_pairs(const Graph& g) {
    DistanceTable table;
    table.reserve(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) table.push_back(bfs_distances(g, v));
    return table;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfDist; });
}

int diameter(const Graph& g) {
    int diam = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d == kInfDist) throw GraphDisconnected();
            diam = std::max(diam, d);
        }
    }
    return diam;
}

Path shortest_path(const Graph& g, int u, int v) {
    auto dist = bfs_distances(g, u);
    if (dist[static_cast<size_t>(v)] == kInfDist)
        throw GraphDisconnected("no path between requested vertices");
    // Walk back from v, always via the smallest predecessor index.
    Path rev{v};
    int cur = v;
    while (cur != u) {
        for (int w : g.neighbors(cur)) {
            if (dist[static_cast<size_t>(w)] + 1 == dist[static_cast<size_t>(cur)]) {
                cur = w;
                break;
            }
        }
        rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

Path diametrical_path(const Graph& g) {
    int best_u = 0, best_v = 0, diam = 0;
    for (int u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = 0; v < g.order(); ++v) {
            if (dist[static_cast<size_t>(v)] == kInfDist) throw GraphDisconnected();
            if (dist[static_cast<size_t>(v)] > diam) {
                diam = dist[static_cast<size_t>(v)];
                best_u = u;
                best_v = v;
            }
        }
    }
    return shortest_path(g, best_u, best_v);
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.order()), -1);
    for (int start = 0; start < g.order(); ++start) {
        if (color[static_cast<size_t>(start)] != -1) continue;
        color[static_cast<size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(u)];
                    queue.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet x, y;
    for (int v = 0; v < g.order(); ++v)
        (color[static_cast<size_t>(v)] == 0 ? x : y).push_back(v);
    return std::make_pair(std::move(x), std::move(y));
}

VertexSet leaves(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.order() - 1;
}

Graph attach_path(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.order()) throw ParameterOutOfRange("attachment vertex out of range");
    if (k < 1) throw ParameterOutOfRange("attached path needs at least one vertex");
    Graph out(g.order() + k);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    int first = g.order();
    for (int i = 0; i + 1 < k; ++i) out.add_edge(first + i, first + i + 1);
    out.add_edge(first + k - 1, v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> index(static_cast<size_t>(g.order()), -1);
    for (size_t i = 0; i < keep.size(); ++i) index[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    Graph out(static_cast<int>(keep.size()));
    for (int v : keep)
        for (int w : g.neighbors(v))
            if (v < w && index[static_cast<size_t>(w)] >= 0)
                out.add_edge(index[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
    return out;
}

}  // namespace ddp
