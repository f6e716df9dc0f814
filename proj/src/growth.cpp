#include "forbconf/growth.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forbconf/catalog.hpp"
#include "forbconf/search.hpp"

namespace forbconf {

std::string growth_kind_name(GrowthKind k) {
  switch (k) {
    case GrowthKind::Constant: return "Constant";
    case GrowthKind::Linear: return "Linear";
    case GrowthKind::LinearUpper: return "LinearUpper";
    case GrowthKind::AtLeastLinear: return "AtLeastLinear";
    case GrowthKind::Quadratic: return "Quadratic";
    case GrowthKind::Subquadratic: return "Subquadratic";
    case GrowthKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

GrowthClass classify_constant(const Family& fam) {
  if (fam.empty()) throw Error("bad_params", "classification needs a nonempty family");
  int ell = 0;
  for (const BinMatrix& f : fam.members()) ell = std::max(ell, f.rows() + f.ncols());
  const std::pair<std::string, BinMatrix> targets[3] = {
      {"I", identity(ell)}, {"Ic", identity_complement(ell)}, {"T", triangular(ell)}};
  GrowthClass out;
  out.ell = ell;
  for (const auto& [name, target] : targets) {
    bool found = false;
    for (int i = 0; i < fam.size(); ++i) {
      if (auto emb = has_config(target, fam.member(i))) {
        out.hits.push_back({i, *emb});
        found = true;
        break;
      }
    }
    if (!found) {
      out.kind = GrowthKind::AtLeastLinear;
      out.avoiding_factor = name;
      out.hits.clear();
      out.reason = "one-fold-avoider";
      return out;
    }
  }
  out.kind = GrowthKind::Constant;
  out.reason = "constant-dichotomy";
  return out;
}

SimpleGraph adorn(const BinMatrix& f) {
  const int k = f.rows();
  std::vector<int> colsum(static_cast<size_t>(f.ncols()), 0);
  for (int j = 1; j <= f.ncols(); ++j)
    for (int i = 1; i <= k; ++i) colsum[static_cast<size_t>(j - 1)] += f.bit(i, j);
  for (int s : colsum)
    if (s > 2) throw Error("adorn_precondition", "column sums must be 0, 1 or 2");
  if (contains_config(f, multiply(2, ones(2))))
    throw Error("adorn_precondition", "a repeated weight-2 column cannot be adorned");

  std::vector<int> pendant(static_cast<size_t>(k), 0);  // a_i
  int zero_cols = 0;                                    // b
  std::vector<std::pair<int, int>> inner_edges;
  for (int j = 1; j <= f.ncols(); ++j) {
    const int s = colsum[static_cast<size_t>(j - 1)];
    if (s == 0) {
      ++zero_cols;
    } else if (s == 1) {
      for (int i = 1; i <= k; ++i)
        if (f.bit(i, j)) ++pendant[static_cast<size_t>(i - 1)];
    } else {
      int u = 0, v = 0;
      for (int i = 1; i <= k; ++i)
        if (f.bit(i, j)) (u == 0 ? u : v) = i;
      inner_edges.emplace_back(u, v);
    }
  }
  const int total_pendants = std::accumulate(pendant.begin(), pendant.end(), 0);
  const int n = k + total_pendants + zero_cols + 1;
  SimpleGraph g(n);
  for (auto [u, v] : inner_edges)
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  int fresh = k + 1;
  for (int i = 1; i <= k; ++i)
    for (int a = 0; a < pendant[static_cast<size_t>(i - 1)]; ++a) g.add_edge(i, fresh++);
  // path on the remaining zero_cols + 1 vertices
  for (int e = 0; e < zero_cols; ++e) {
    g.add_edge(fresh, fresh + 1);
    ++fresh;
  }
  if (g.edge_count() == 0) throw Error("adorn_precondition", "pattern has no columns to adorn");
  if (!contains_config(graph_incidence(g), f))
    throw Error("internal", "adorned incidence matrix does not contain the pattern");
  return g;
}

GrowthClass classify_ones3_family(const BinMatrix& f) {
  for (int j = 1; j <= f.ncols(); ++j) {
    int s = 0;
    for (int i = 1; i <= f.rows(); ++i) s += f.bit(i, j);
    if (s > 2) throw Error("bad_params", "column sums must be at most 2");
  }
  GrowthClass out;
  if (auto emb = has_config(f, multiply(2, ones(2)))) {
    out.kind = GrowthKind::Quadratic;
    out.reason = "repeated-weight-2-column";
    out.graph_witness = *emb;
    return out;
  }
  // odd cycles cannot embed with more rows than f has
  for (int len = 3; len <= f.rows(); len += 2) {
    if (auto emb = has_config(f, cycle_incidence(len))) {
      out.kind = GrowthKind::Quadratic;
      out.reason = "odd-cycle";
      out.cycle_length = len;
      out.graph_witness = *emb;
      return out;
    }
  }
  bool any_cycle = false;
  int even_len = 0;
  for (int len = 4; len <= f.rows(); len += 2) {
    if (contains_config(f, cycle_incidence(len))) {
      any_cycle = true;
      even_len = len;
      break;
    }
  }
  const SimpleGraph g = adorn(f);
  if (!any_cycle) {
    out.kind = GrowthKind::LinearUpper;
    out.reason = "forest";
    if (!g.is_forest()) throw Error("internal", "cycle-free pattern adorned to a non-forest");
    out.graph_edges = g.edges();
    return out;
  }
  out.kind = GrowthKind::Subquadratic;
  out.reason = "bipartite";
  out.cycle_length = even_len;
  out.graph_edges = g.edges();
  const auto colors = g.bipartition();
  if (!colors) throw Error("internal", "odd-cycle-free pattern adorned to a non-bipartite graph");
  out.bipartition = *colors;
  return out;
}

namespace {

struct ExSearch {
  const SimpleGraph* h;
  int m;
  std::vector<std::pair<int, int>> all_edges;

  int run(int workers) const {
    std::vector<int> best{0};
    if (workers <= 1) {
      SimpleGraph g(m);
      dfs(g, 0, 0, best);
      return best[0];
    }
    std::atomic<int> shared{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
    for (int i = 0; i < static_cast<int>(all_edges.size()) + 1; ++i) {
      SimpleGraph g(m);
      // branch fixed by the index of the first chosen edge
      if (i < static_cast<int>(all_edges.size())) {
        g.add_edge(all_edges[static_cast<size_t>(i)].first, all_edges[static_cast<size_t>(i)].second);
        if (g.contains_subgraph(*h)) continue;
        std::vector<int> local{shared.load()};
        dfs(g, i + 1, 1, local);
        int cur = shared.load();
        while (local[0] > cur && !shared.compare_exchange_weak(cur, local[0])) {
        }
      }
    }
    return std::max(0, shared.load());
  }

  void dfs(SimpleGraph& g, size_t next, int chosen, std::vector<int>& best) const {
    if (chosen > best[0]) best[0] = chosen;
    for (size_t i = next; i < all_edges.size(); ++i) {
      if (chosen + static_cast<int>(all_edges.size() - i) <= best[0]) return;
      SimpleGraph g2 = g;
      g2.add_edge(all_edges[i].first, all_edges[i].second);
      if (g2.contains_subgraph(*h)) continue;
      dfs(g2, i + 1, chosen + 1, best);
    }
  }
};

}  // namespace

int ex_exact(int m, const SimpleGraph& h, int workers) {
  if (m < 1 || m > 8) throw Error("m_out_of_range", "exact Turan numbers support 1 <= m <= 8");
  if (h.edge_count() < 1) throw Error("bad_params", "forbidden graph needs at least one edge");
  if (h.vertex_count() > m) {
    // h cannot fit, so nothing is excluded
    return m * (m - 1) / 2;
  }
  ExSearch s;
  s.h = &h;
  s.m = m;
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) s.all_edges.emplace_back(u, v);
  return s.run(workers);
}

bool verify_extendgraph(int m, const SimpleGraph& h) {
  if (m < 1 || m > 5) throw Error("m_out_of_range", "extendgraph check supports m <= 5");
  Family fam;
  fam.add(ones(3), "ones:3");
  fam.add(graph_incidence(h), "incidence");
  const int lhs = forb_exact(m, fam).forb_value;
  const int rhs = ex_exact(m, h) + m + 1;
  return lhs == rhs;
}

namespace {

struct PairEntry {
  int i, j;
  GrowthKind kind;
  const char* reason;
};

// Growth of forb(m, {Q_i, Q_j}) with the mechanism that certifies the upper
// bound; quadratic entries name the avoiding 2-fold product.
constexpr PairEntry kPairTable[] = {
    {1, 2, GrowthKind::Constant, "constant-dichotomy"},
    {1, 3, GrowthKind::Linear, "identity-extraction"},
    {1, 4, GrowthKind::Quadratic, "Ic:4xIc:4"},
    {1, 5, GrowthKind::Constant, "constant-dichotomy"},
    {1, 6, GrowthKind::Quadratic, "Ic:4xIc:4"},
    {1, 7, GrowthKind::Constant, "constant-dichotomy"},
    {1, 8, GrowthKind::Linear, "support-induction"},
    {1, 9, GrowthKind::Linear, "sum-class-structure"},
    {2, 3, GrowthKind::Linear, "identity-extraction"},
    {2, 4, GrowthKind::Constant, "constant-dichotomy"},
    {2, 5, GrowthKind::Quadratic, "I:4xI:4"},
    {2, 6, GrowthKind::Constant, "constant-dichotomy"},
    {2, 7, GrowthKind::Quadratic, "I:4xI:4"},
    {2, 8, GrowthKind::Linear, "support-induction"},
    {2, 9, GrowthKind::Linear, "sum-class-structure"},
    {3, 4, GrowthKind::Linear, "forest-graph"},
    {3, 5, GrowthKind::Linear, "forest-graph"},
    {3, 6, GrowthKind::Linear, "identity-extraction"},
    {3, 7, GrowthKind::Linear, "identity-extraction"},
    {3, 8, GrowthKind::Linear, "support-induction"},
    {3, 9, GrowthKind::Linear, "sum-class-structure"},
    {4, 5, GrowthKind::Constant, "constant-dichotomy"},
    {4, 6, GrowthKind::Quadratic, "Ic:4xIc:4"},
    {4, 7, GrowthKind::Constant, "constant-dichotomy"},
    {4, 8, GrowthKind::Linear, "forest-graph"},
    {4, 9, GrowthKind::Linear, "forest-graph"},
    {5, 6, GrowthKind::Constant, "constant-dichotomy"},
    {5, 7, GrowthKind::Quadratic, "I:4xI:4"},
    {5, 8, GrowthKind::Linear, "forest-graph"},
    {5, 9, GrowthKind::Linear, "forest-graph"},
    {6, 7, GrowthKind::Quadratic, "T:4xT:4"},
    {6, 8, GrowthKind::Quadratic, "T:4xT:4"},
    {6, 9, GrowthKind::Quadratic, "Ic:4xT:4"},
    {7, 8, GrowthKind::Quadratic, "T:4xT:4"},
    {7, 9, GrowthKind::Quadratic, "I:4xT:4"},
    {8, 9, GrowthKind::Linear, "sum-class-structure"},
};

}  // namespace

GrowthClass pair_growth(int i, int j) {
  if (i < 1 || j < 1 || i > 9 || j > 9 || i == j) throw Error("bad_params", "need 1 <= i < j <= 9");
  if (i > j) std::swap(i, j);
  for (const PairEntry& e : kPairTable) {
    if (e.i == i && e.j == j) {
      GrowthClass out;
      out.kind = e.kind;
      out.reason = e.reason;
      return out;
    }
  }
  throw Error("internal", "pair table is incomplete");
}

GrowthClass family_growth(const std::vector<int>& q_indices) {
  if (q_indices.empty()) throw Error("bad_params", "family must be nonempty");
  std::set<int> s(q_indices.begin(), q_indices.end());
  for (int i : s)
    if (i < 1 || i > 9) throw Error("bad_params", "indices must be within 1..9");
  auto subset_of = [&](std::initializer_list<int> super) {
    return std::all_of(s.begin(), s.end(),
                       [&](int v) { return std::find(super.begin(), super.end(), v) != super.end(); });
  };
  const bool quadratic = subset_of({1, 4, 6}) || subset_of({2, 5, 7}) || subset_of({6, 7, 8}) ||
                         subset_of({6, 9}) || subset_of({7, 9}) || (s == std::set<int>{3});
  if (quadratic) {
    GrowthClass out;
    out.kind = GrowthKind::Quadratic;
    out.reason = "every-member-avoided-by-a-2-fold-product";
    return out;
  }
  Family fam;
  for (int i : s) fam.add(q_config(i), "Q" + std::to_string(i));
  GrowthClass cls = classify_constant(fam);
  if (cls.kind == GrowthKind::AtLeastLinear) {
    // linear upper bound holds for every non-quadratic subset of the nine
    cls.kind = GrowthKind::Linear;
    cls.reason = "linear-with-one-fold-lower-bound";
  }
  return cls;
}

}  // namespace forbconf
