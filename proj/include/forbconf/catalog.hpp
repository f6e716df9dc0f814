#pragma once

#include <string>

#include "forbconf/graph.hpp"
#include "forbconf/matrix.hpp"

namespace forbconf {

BinMatrix identity(int k);             // I_k
BinMatrix identity_complement(int k);  // I_k with every bit flipped
BinMatrix triangular(int k);           // upper triangular: 1 at (i,j) iff i <= j
BinMatrix ones(int k);                 // k x 1 column of 1's
BinMatrix zeros(int a, int b);         // a x b of 0's
BinMatrix all_ones(int p, int q);      // p x q of 1's

// Vertex-edge incidence matrix of the length-k cycle, k >= 3.
BinMatrix cycle_incidence(int k);

// The nine catalogued quadratic patterns, stored in a fixed row/column order
// so tests can reference positions.
BinMatrix q_config(int i);

// Two-rowed block (0 | t x (1,0) | t x (0,1) | 1), t >= 1.
BinMatrix f2_config(int t);

// (t+1) x (2t+2) tower whose first two rows restrict to f2_config(t).
BinMatrix ftower_config(int t);

// Incidence matrix of a simple graph with at least one edge; columns follow
// the graph's normalized edge order.
BinMatrix graph_incidence(const SimpleGraph& g);

// m-rowed simple matrix with l+q-2 columns in which every row has exactly
// q-1 ones and l-1 zeros; avoids both the a x b all-zero block (k, l) and the
// all-one block (p, q). Requires m >= C(l+q-2, q-1).
BinMatrix constant_construction(int m, int k, int l, int p, int q);

// Name grammar: "I:k", "Ic:k", "T:k", "C:k", "ones:k", "zeros:a,b", "J:p,q",
// "Q1".."Q9", "F2:t", "Ftower:t". Factors joined with 'x' build products.
BinMatrix make_named(const std::string& name);

// Comma-separated list of names or matrix file paths. A bare integer token
// after a "zeros:a" or "J:p" token is folded back into that name.
Family parse_family(const std::string& list);

}  // namespace forbconf
