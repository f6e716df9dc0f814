#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forbconf/containment.hpp"
#include "forbconf/graph.hpp"
#include "forbconf/matrix.hpp"

namespace forbconf {

enum class GrowthKind { Constant, Linear, LinearUpper, AtLeastLinear, Quadratic, Subquadratic, Unknown };

std::string growth_kind_name(GrowthKind k);

struct EmbeddingHit {
  int member = 0;  // family index
  Embedding emb;
};

// Growth class with the certificate that justifies it. Which fields are
// populated depends on the kind:
//   Constant      ell + three hits (into I, Ic, T at size ell)
//   AtLeastLinear / Linear   the avoiding 1-fold factor name
//   Quadratic     reason tag, and for graph classification the witness
//   LinearUpper   the adorned forest edges
//   Subquadratic  the adorned graph edges plus a 2-coloring
struct GrowthClass {
  GrowthKind kind = GrowthKind::Unknown;
  int ell = 0;
  std::vector<EmbeddingHit> hits;  // order: I, Ic, T
  std::string avoiding_factor;     // "I", "Ic" or "T"
  std::string reason;
  int cycle_length = 0;
  std::optional<Embedding> graph_witness;
  std::vector<std::pair<int, int>> graph_edges;
  std::vector<int> bipartition;
};

// Constant versus at-least-linear dichotomy at ell = max(rows+cols) over the
// family: constant exactly when some member embeds into each of the identity,
// its complement and the triangular matrix of order ell.
GrowthClass classify_constant(const Family& fam);

// Builds a graph whose incidence matrix contains f, for f with column sums in
// {0,1,2} and no repeated weight-2 column: weight-2 columns become edges,
// weight-1 columns pendant edges, and the zero columns a path on fresh
// vertices.
SimpleGraph adorn(const BinMatrix& f);

// Growth of forb(m, {1_3, f}) for f with column sums <= 2: quadratic when a
// repeated weight-2 column or an odd cycle embeds, linear when the adorned
// graph is a forest, subquadratic otherwise.
GrowthClass classify_ones3_family(const BinMatrix& f);

// Exact Turan number: maximum edges of an h-subgraph-free graph on m
// vertices, by branch and bound over the edge set. m <= 8.
int ex_exact(int m, const SimpleGraph& h, int workers = 1);

// Checks forb(m, {1_3, Inc(h)}) == ex(m, h) + m + 1 with both sides computed
// by independent exhaustive searches.
bool verify_extendgraph(int m, const SimpleGraph& h);

// Ground-truth growth of forb(m, {Q_i, Q_j}), 1 <= i < j <= 9.
GrowthClass pair_growth(int i, int j);

// Growth of forb(m, F) for a nonempty subset of the nine catalogued
// quadratic patterns, given by index.
GrowthClass family_growth(const std::vector<int>& q_indices);

}  // namespace forbconf
