#ifndef DDP_CANONICAL_HPP
#define DDP_CANONICAL_HPP

#include <string>

#include "ddp/graph.hpp"

namespace ddp {

// Canonical code of an unlabeled tree: AHU parenthesis encoding rooted at the
// center (minimum over both roots for bicentral trees). Equal codes iff
// isomorphic.
std::string tree_canonical_form(const Graph& t);  // throws NotATree

// Canonical code for arbitrary small graphs: lexicographically minimum
// upper-triangle adjacency bit-string over all vertex orderings, found by a
// prefix-pruned search. Equal codes iff isomorphic. The code is prefixed with
// the order so codes of different orders never collide.
std::string graph_canonical_form(const Graph& g, int order_cap = 10);  // throws OrderTooLarge

// True iff g and h are isomorphic; brute-force permutation check, test oracle
// quality only (order cap as above).
bool isomorphic(const Graph& g, const Graph& h, int order_cap = 10);

// Unified code used by every family and enumeration stream: AHU code for
// trees (prefix 't'), matrix minimization otherwise (prefix 'g'). Equal codes
// iff isomorphic, across both routes.
std::string canonical_code(const Graph& g, int order_cap = 16);

}  // namespace ddp

#endif
