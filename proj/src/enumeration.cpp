#include "ddp/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>

#include "ddp/canonical.hpp"

namespace ddp {
namespace {

Graph tree_from_level_sequence(const std::vector<int>& level) {
    int n = static_cast<int>(level.size());
    Graph g(n);
    std::vector<int> last_at_level(static_cast<size_t>(n + 2), -1);
    for (int i = 0; i < n; ++i) {
        int l = level[static_cast<size_t>(i)];
        if (l > 1) g.add_edge(i, last_at_level[static_cast<size_t>(l - 1)]);
        last_at_level[static_cast<size_t>(l)] = i;
    }
    return g;
}

// Beyer-Hedetniemi successor over rooted-tree level sequences. Starts from
// the path (1,2,...,n), ends at the star (1,2,2,...,2).
bool next_level_sequence(std::vector<int>& level) {
    int n = static_cast<int>(level.size());
    int p = n - 1;
    while (p > 0 && level[static_cast<size_t>(p)] <= 2) --p;
    if (p == 0) return false;
    int q = p - 1;
    while (level[static_cast<size_t>(q)] != level[static_cast<size_t>(p)] - 1) --q;
    for (int i = p; i < n; ++i)
        level[static_cast<size_t>(i)] = level[static_cast<size_t>(i - (p - q))];
    return true;
}

std::vector<Graph> sort_by_code(std::map<std::string, Graph>&& by_code) {
    std::vector<Graph> out;
    out.reserve(by_code.size());
    for (auto& [code, g] : by_code) out.push_back(std::move(g));
    return out;
}

bool split_mask_connected(int a, int b, uint64_t mask) {
    // Vertices 0..a-1 on one side, a..a+b-1 on the other; bit i*b+j is the
    // edge {i, a+j}.
    int n = a + b;
    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (mask & (uint64_t{1} << (i * b + j))) {
                adj[static_cast<size_t>(i)] |= 1u << (a + j);
                adj[static_cast<size_t>(a + j)] |= 1u << i;
            }
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= adj[static_cast<size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n >= 32 ? ~uint32_t{0} : (1u << n) - 1);
}

std::vector<Graph> bipartite_by_splits(int n, bool connected_only) {
    std::map<std::string, Graph> by_code;
    if (n == 1) {
        by_code.emplace(canonical_code(Graph(1)), Graph(1));
        return sort_by_code(std::move(by_code));
    }
    for (int a = 1; a <= n / 2; ++a) {
        int b = n - a;
        uint64_t total = uint64_t{1} << (a * b);
        for (uint64_t mask = 0; mask < total; ++mask) {
            if (connected_only && !split_mask_connected(a, b, mask)) continue;
            Graph g(n);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    if (mask & (uint64_t{1} << (i * b + j))) g.add_edge(i, a + j);
            auto code = canonical_code(g, n);
            by_code.emplace(std::move(code), std::move(g));
        }
    }
    return sort_by_code(std::move(by_code));
}

}  // namespace

std::vector<Graph> all_trees(int n) {
    if (n < 1 || n > kTreeOrderCap) throw OrderTooLarge("tree enumeration cap exceeded");
    if (n == 1) return {Graph(1)};
    std::map<std::string, Graph> by_code;
    std::vector<int> level(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) level[static_cast<size_t>(i)] = i + 1;
    do {
        Graph t = tree_from_level_sequence(level);
        auto code = canonical_code(t);
        by_code.emplace(std::move(code), std::move(t));
    } while (next_level_sequence(level));
    return sort_by_code(std::move(by_code));
}

std::vector<Graph> all_connected_bipartite(int n) {
    if (n < 1 || n > kBipartiteOrderCap)
        throw OrderTooLarge("bipartite enumeration cap exceeded");
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, bipartite_by_splits(n, /*connected_only=*/true)).first;
    return it->second;
}

std::vector<Graph> all_bipartite(int n) {
    if (n < 1 || n > kBipartiteOrderCap)
        throw OrderTooLarge("bipartite enumeration cap exceeded");
    return bipartite_by_splits(n, /*connected_only=*/false);
}

bool space_filter_accepts(const EnumerationSpace& space, const Graph& g) {
    if (space.min_leaves || space.max_leaves) {
        int l = static_cast<int>(leaves(g).size());
        if (space.min_leaves && l < *space.min_leaves) return false;
        if (space.max_leaves && l > *space.max_leaves) return false;
    }
    if (space.min_diameter || space.max_diameter) {
        int diam = diameter(g);
        if (space.min_diameter && diam < *space.min_diameter) return false;
        if (space.max_diameter && diam > *space.max_diameter) return false;
    }
    return true;
}

std::vector<Graph> enumerate_space(const EnumerationSpace& space) {
    auto full = space.kind == SpaceKind::Trees ? all_trees(space.order)
                                               : all_connected_bipartite(space.order);
    std::vector<Graph> out;
    for (auto& g : full)
        if (space_filter_accepts(space, g)) out.push_back(std::move(g));
    return out;
}

int shard_of(const std::string& canonical, int shards) {
    if (shards < 1) throw ParameterOutOfRange("shard count must be >= 1");
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return static_cast<int>(h % static_cast<uint64_t>(shards));
}

std::vector<std::vector<Graph>> shard(const std::vector<Graph>& stream, int shards) {
    std::vector<std::vector<Graph>> out(static_cast<size_t>(shards));
    for (const auto& g : stream)
        out[static_cast<size_t>(shard_of(canonical_code(g), shards))].push_back(g);
    return out;
}

}  // namespace ddp
