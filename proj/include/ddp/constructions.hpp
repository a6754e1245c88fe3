#ifndef DDP_CONSTRUCTIONS_HPP
#define DDP_CONSTRUCTIONS_HPP

#include <map>
#include <utility>
#include <vector>

#include "ddp/graph.hpp"

namespace ddp {

// Certificate that a graph is H ∘ P_d: the anchor vertices carry H, and each
// anchor owns one attached d-vertex pendant path, listed outer end first.
struct CoronaDecomposition {
    VertexSet anchors;
    std::map<int, std::vector<int>> path_of;
};

enum class FamilyTag { Bd, Td, Zeta1, Fd, FprimeD, Counterexample, Primitive };

// ---- primitives ----
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int t);            // K_{1,t}, center 0
Graph complete_graph(int n);
Graph complete_bipartite_graph(int r, int s);
Graph double_star(int r, int s);    // centers 0 and 1

// ---- paper constructions ----

// H ∘ P_d. Anchors keep H's indices 0..|V(H)|-1; the path of anchor u
// occupies indices |V(H)|+u*d .. |V(H)|+(u+1)*d-1, outer end first.
std::pair<Graph, CoronaDecomposition> corona(const Graph& h, int d);

// Replace each edge by a path with d internal vertices (d = 0 is identity).
Graph d_subdivision(const Graph& t, int d);

// K_n with k copies of P_d attached to each vertex (n >= d+2, k >= 2).
Graph counterexample_gnkd(int n, int k, int d);

// (d-1)-subdivisions of K_{1,t1} and K_{1,t2} joined by an edge between the
// centers (t1, t2 >= 2, d >= 2). Order d(t1+t2)+2, diameter 2d+1.
Graph joined_subdivided_stars(int t1, int t2, int d);

// ---- extremal family generators ----
// Every generator returns its members sorted by canonical code, each
// isomorphism class exactly once.

std::vector<Graph> zeta1_members(int max_order);

std::vector<Graph> family_T_d(int max_order, int d);

// P_d-coronas of connected bipartite graphs. Disconnected H yields
// disconnected coronas that the solver rejects, so it is off by default.
std::vector<Graph> family_B_d(int max_order, int d, bool allow_disconnected_h = false);

std::vector<Graph> family_F_d(int max_order, int d);

std::vector<Graph> family_Fprime_d(int max_order, int d);

}  // namespace ddp

#endif
