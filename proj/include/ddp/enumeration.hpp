#ifndef DDP_ENUMERATION_HPP
#define DDP_ENUMERATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ddp/graph.hpp"

namespace ddp {

inline constexpr int kTreeOrderCap = 18;
inline constexpr int kBipartiteOrderCap = 9;

enum class SpaceKind { Trees, ConnectedBipartite };

struct EnumerationSpace {
    SpaceKind kind = SpaceKind::Trees;
    int order = 1;
    std::optional<int> min_leaves, max_leaves;
    std::optional<int> min_diameter, max_diameter;
};

// Every unlabeled tree of order n exactly once, sorted by canonical code.
// Rooted level-sequence successor generation, free-tree dedup by the
// center-rooted canonical form.
std::vector<Graph> all_trees(int n);  // throws OrderTooLarge

// Every unlabeled connected bipartite graph of order n exactly once, sorted
// by canonical code. Edge subsets over all bipartition splits, connectivity
// filtered, canonically deduped. Results are cached per order.
std::vector<Graph> all_connected_bipartite(int n);  // throws OrderTooLarge

// Same universe without the connectivity filter (used for the disconnected-H
// corona flag).
std::vector<Graph> all_bipartite(int n);

std::vector<Graph> enumerate_space(const EnumerationSpace& space);

bool space_filter_accepts(const EnumerationSpace& space, const Graph& g);

// Deterministic shard assignment: FNV-1a of the canonical code mod shards.
int shard_of(const std::string& canonical, int shards);

std::vector<std::vector<Graph>> shard(const std::vector<Graph>& stream, int shards);

}  // namespace ddp

#endif
