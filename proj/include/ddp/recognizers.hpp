#ifndef DDP_RECOGNIZERS_HPP
#define DDP_RECOGNIZERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddp/constructions.hpp"
#include "ddp/graph.hpp"

namespace ddp {

// Per vertex: multiset of lengths of the maximal pendant chains hanging at
// it. On pure paths each endpoint is reported as a length-1 chain at its
// neighbor.
struct SupportProfile {
    std::map<int, std::vector<int>> pendant_lengths;  // sorted multisets
};

SupportProfile support_profile(const Graph& t);  // throws NotATree

// Sizes of the components of T - v that are paths attached to v by an end
// vertex. This is the structural "copy of P_k attached to v" notion: v is a
// P_k-support vertex iff k appears here, and a (P_i,P_j)-support vertex iff
// two distinct components of sizes i and j exist.
std::vector<int> attached_path_sizes(const Graph& t, int v);  // throws NotATree

bool is_pd_support(const Graph& t, int v, int k);
bool has_pi_pj_support(const Graph& t, int i_max, int j_max);  // some v with i<=i_max, j<=j_max

// Decompose g as H ∘ P_d if possible. The certificate is deterministic
// (forced by the pendant chains).
std::optional<CoronaDecomposition> is_corona(const Graph& g, int d);  // throws GraphDisconnected

bool verify_corona_decomposition(const Graph& g, const CoronaDecomposition& c, int d);

// Membership in the recursive family zeta_1, by reverse peeling with
// memoization. Independent of any gamma computation.
bool in_zeta1(const Graph& t);  // throws NotATree

bool in_T_d(const Graph& t, int d);       // tree coronas, H nontrivial tree
bool in_B_d(const Graph& g, int d);       // coronas of connected bipartite H
bool in_F_d(const Graph& t, int d);       // core-in-base families, d >= 2
bool in_Fprime_d(const Graph& t, int d);

// Hypotheses of the structural lemma: diam >= 2d+1, no P_{d+1}-support
// vertex, no (P_i,P_j)-support vertex with i in [d-1], j in [d].
bool lemma34_hypotheses(const Graph& t, int d);

// Evaluates clauses (i)-(v) on the canonical diametrical path; returns the
// labels of violated clauses (empty when the lemma holds).
std::vector<std::string> lemma34_check(const Graph& t, int d);

}  // namespace ddp

#endif
