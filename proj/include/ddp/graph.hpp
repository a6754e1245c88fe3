#ifndef DDP_GRAPH_HPP
#define DDP_GRAPH_HPP

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ddp/errors.hpp"

namespace ddp {

// Sentinel for unreachable vertex pairs. Never used in arithmetic.
inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Sorted list of distinct vertex indices of one host graph.
using VertexSet = std::vector<int>;

// Ordered vertex sequence with consecutive vertices adjacent, all distinct.
using Path = std::vector<int>;

using DistanceTable = std::vector<std::vector<int>>;

// Simple undirected graph on dense vertex indices 0..n-1.
// Neighbor lists are kept sorted; the value is immutable once built
// (mutating helpers return new graphs).
class Graph {
public:
    explicit Graph(int n) : adj_(static_cast<size_t>(check_order(n))) {}

    int order() const { return static_cast<int>(adj_.size()); }

    int edge_count() const {
        size_t deg_sum = 0;
        for (const auto& nb : adj_) deg_sum += nb.size();
        return static_cast<int>(deg_sum / 2);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(int u, int v) const;

    // Inserts the undirected edge {u, v}; rejects loops and duplicates.
    void add_edge(int u, int v);

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

    std::vector<std::pair<int, int>> edges() const;

private:
    static int check_order(int n) {
        if (n < 1) throw ParameterOutOfRange("graph order must be >= 1");
        return n;
    }
    std::vector<std::vector<int>> adj_;
};

// BFS hop counts from source; kInfDist for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

DistanceTable all_pairs(const Graph& g);

bool is_connected(const Graph& g);

int diameter(const Graph& g);  // throws GraphDisconnected

// A shortest path realizing the diameter, deterministic choice.
Path diametrical_path(const Graph& g);

// Returns (X, Y) with X containing vertex 0, or nullopt if an odd cycle exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

VertexSet leaves(const Graph& g);

bool is_tree(const Graph& g);

// Attach a k-vertex path to v; the new vertices get indices
// g.order() .. g.order()+k-1, chained in order, with the last one joined to v.
// The free end of the path is the first new index.
Graph attach_path(const Graph& g, int v, int k);

// Extract one shortest u,v-path from a BFS tree (witness for the distance table).
Path shortest_path(const Graph& g, int u, int v);  // throws GraphDisconnected if unreachable

// Induced subgraph on the given sorted vertex set, re-indexed in that order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace ddp

#endif
