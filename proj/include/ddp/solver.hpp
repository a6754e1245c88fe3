#ifndef DDP_SOLVER_HPP
#define DDP_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ddp/graph.hpp"
#include "ddp/rational.hpp"

namespace ddp {

struct DominationQuery {
    int d = 1;  // distance radius, >= 1
    int p = 0;  // packing separation, >= 0
};

// Exact optimum of the d-distance p-packing domination problem. When no set
// of any size satisfies both constraints the value is infinite and the
// witness empty; otherwise the witness is the lexicographically least
// optimal set.
struct GammaWitness {
    bool finite = false;
    int value = 0;  // meaningful only when finite
    VertexSet witness;
};

struct LevelPartition {
    std::vector<VertexSet> parts;  // d+1 parts in level order
};

// The regime of the piecewise bound for trees with n >= d + leaf count.
enum class TreeRegime { BelowCoronaOrder, AtCoronaOrder, AboveCoronaOrder };

std::string tree_regime_name(TreeRegime r);

// All four closed-form bounds as exact rationals, with their applicability
// guards evaluated on the given graph.
struct BoundSheet {
    int n = 0;
    int leaf_count = 0;
    int d = 1;
    Frac order_over_d1;       // n/(d+1)
    Frac minus_leaves_over_d; // (n-l)/d
    Frac plus_leaves_over_d2; // (n+l)/(d+2)
    Frac lower_bound;         // (n-dl+2d)/(2d+1), trees only
    bool order_bound_applies = false;        // n >= d+1
    bool minus_leaves_applies = false;       // n-l >= d
    bool plus_leaves_applies = false;        // n >= d
    bool is_tree = false;                    // lower bound is tree-only
    std::optional<TreeRegime> tree_regime;   // set when is_tree and n >= d+l
};

bool is_d_dominating(const Graph& g, const VertexSet& s, int d);
bool is_p_packing(const Graph& g, const VertexSet& s, int p);

// Exact search over cardinalities with packing and coverage pruning.
GammaWitness gamma(const Graph& g, DominationQuery q);  // throws GraphDisconnected

// Independent oracle: plain subset enumeration in size-then-lexicographic
// order, both predicates tested directly. Must agree with gamma exactly.
GammaWitness gamma_bruteforce(const Graph& g, DominationQuery q);  // throws GraphDisconnected

// The constructive partition of V(G) into d+1 d-distance independent
// dominating sets for connected bipartite G of order >= d+1.
LevelPartition level_partition(const Graph& g, int d);

bool verify_partition(const Graph& g, const LevelPartition& parts, int d);

BoundSheet bound_sheet(const Graph& g, int d);

}  // namespace ddp

#endif
