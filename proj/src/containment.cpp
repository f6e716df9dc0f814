#include "forbconf/containment.hpp"

#include <algorithm>
#include <set>

namespace forbconf {

namespace {

inline int col_bit(Column v, int m, int row1) { return static_cast<int>((v >> (m - row1)) & 1u); }

// Fixed row order chosen once per pattern: repeatedly take the row whose
// addition splits the column patterns into the most classes.
std::vector<int> constrained_order(const BinMatrix& f) {
  const int k = f.rows();
  const int n = f.ncols();
  std::vector<int> order;
  order.reserve(static_cast<size_t>(k));
  std::vector<bool> used(static_cast<size_t>(k), false);
  std::vector<std::uint64_t> pat(static_cast<size_t>(n), 0);
  for (int step = 0; step < k; ++step) {
    int best_row = -1;
    int best_score = -1;
    for (int r = 0; r < k; ++r) {
      if (used[static_cast<size_t>(r)]) continue;
      std::set<std::uint64_t> distinct;
      for (int j = 0; j < n; ++j)
        distinct.insert((pat[static_cast<size_t>(j)] << 1) | static_cast<unsigned>(f.bit(r + 1, j + 1)));
      const int score = static_cast<int>(distinct.size());
      if (score > best_score) {
        best_score = score;
        best_row = r;
      }
    }
    used[static_cast<size_t>(best_row)] = true;
    order.push_back(best_row);
    for (int j = 0; j < n; ++j)
      pat[static_cast<size_t>(j)] = (pat[static_cast<size_t>(j)] << 1) | static_cast<unsigned>(f.bit(best_row + 1, j + 1));
  }
  return order;
}

std::vector<std::uint64_t> pattern_prefixes(const BinMatrix& f, const std::vector<int>& order, int depth) {
  std::vector<std::uint64_t> pats(static_cast<size_t>(f.ncols()), 0);
  for (int d = 0; d < depth; ++d)
    for (int j = 0; j < f.ncols(); ++j)
      pats[static_cast<size_t>(j)] = (pats[static_cast<size_t>(j)] << 1) |
                                     static_cast<unsigned>(f.bit(order[static_cast<size_t>(d)] + 1, j + 1));
  return pats;
}

}  // namespace

bool verify_embedding(const BinMatrix& target, const BinMatrix& pattern, const Embedding& e) {
  const int k = pattern.rows();
  const int l = pattern.ncols();
  if (static_cast<int>(e.row_map.size()) != k || static_cast<int>(e.col_map.size()) != l) return false;
  std::set<int> rset(e.row_map.begin(), e.row_map.end());
  std::set<int> cset(e.col_map.begin(), e.col_map.end());
  if (static_cast<int>(rset.size()) != k || static_cast<int>(cset.size()) != l) return false;
  for (int r : e.row_map)
    if (r < 1 || r > target.rows()) return false;
  for (int c : e.col_map)
    if (c < 1 || c > target.ncols()) return false;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j)
      if (pattern.bit(i, j) != target.bit(e.row_map[static_cast<size_t>(i - 1)], e.col_map[static_cast<size_t>(j - 1)]))
        return false;
  return true;
}

ConfigMatcher::ConfigMatcher(BinMatrix pattern) : f_(std::move(pattern)), k_(f_.rows()) {
  order_ = constrained_order(f_);
  depth_.resize(static_cast<size_t>(k_) + 1);
  for (int d = 0; d <= k_; ++d) {
    auto pats = pattern_prefixes(f_, order_, d);
    std::sort(pats.begin(), pats.end());
    DepthInfo& di = depth_[static_cast<size_t>(d)];
    for (std::uint64_t p : pats) {
      if (di.pats.empty() || di.pats.back() != p) {
        di.pats.push_back(p);
        di.need.push_back(1);
      } else {
        ++di.need.back();
      }
    }
  }
}

bool ConfigMatcher::feasible(size_t ncols, int depth, int forced) const {
  const DepthInfo& di = depth_[static_cast<size_t>(depth)];
  cnt_.assign(di.pats.size(), 0);
  for (size_t j = 0; j < ncols; ++j) {
    const std::uint64_t p = apat_[j];
    const auto it = std::lower_bound(di.pats.begin(), di.pats.end(), p);
    if (it != di.pats.end() && *it == p) ++cnt_[static_cast<size_t>(it - di.pats.begin())];
  }
  if (forced >= 0) {
    const std::uint64_t p = apat_[static_cast<size_t>(forced)];
    const auto it = std::lower_bound(di.pats.begin(), di.pats.end(), p);
    if (it == di.pats.end() || *it != p) return false;
  }
  for (size_t i = 0; i < di.need.size(); ++i)
    if (cnt_[i] < di.need[i]) return false;
  return true;
}

bool ConfigMatcher::dfs(const std::vector<Column>& cols, int m, int depth, int forced) {
  if (depth == k_) return true;
  for (int r = 1; r <= m; ++r) {
    if (used_rows_ & (std::uint64_t{1} << r)) continue;
    for (size_t j = 0; j < cols.size(); ++j)
      apat_[j] = (apat_[j] << 1) | static_cast<std::uint64_t>(col_bit(cols[j], m, r));
    if (feasible(cols.size(), depth + 1, forced)) {
      used_rows_ |= std::uint64_t{1} << r;
      if (dfs(cols, m, depth + 1, forced)) return true;
      used_rows_ &= ~(std::uint64_t{1} << r);
    }
    for (size_t j = 0; j < cols.size(); ++j) apat_[j] >>= 1;
  }
  return false;
}

bool ConfigMatcher::contains(const std::vector<Column>& target_cols, int target_rows) {
  return contains_using(target_cols, target_rows, -1);
}

bool ConfigMatcher::contains_using(const std::vector<Column>& target_cols, int target_rows, int forced) {
  if (k_ > target_rows) return false;
  if (f_.ncols() > static_cast<int>(target_cols.size())) return false;
  if (f_.ncols() == 0) return forced < 0;
  apat_.assign(target_cols.size(), 0);
  used_rows_ = 0;
  return dfs(target_cols, target_rows, 0, forced);
}

bool contains_config(const BinMatrix& target, const BinMatrix& pattern) {
  ConfigMatcher m(pattern);
  return m.contains(target.columns(), target.rows());
}

namespace {

// Lexicographically least full row assignment in natural pattern-row order,
// pruned by the same per-prefix counting check.
struct WitnessSearch {
  const BinMatrix& a;
  const BinMatrix& f;
  std::vector<std::vector<std::uint64_t>> fpats;       // distinct per depth
  std::vector<std::vector<int>> fneed;
  std::vector<std::uint64_t> apat;
  std::vector<int> rows;
  std::uint64_t used = 0;

  explicit WitnessSearch(const BinMatrix& target, const BinMatrix& pattern) : a(target), f(pattern) {
    const int k = f.rows();
    std::vector<int> natural(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) natural[static_cast<size_t>(i)] = i;
    fpats.resize(static_cast<size_t>(k) + 1);
    fneed.resize(static_cast<size_t>(k) + 1);
    for (int d = 0; d <= k; ++d) {
      auto pats = pattern_prefixes(f, natural, d);
      std::sort(pats.begin(), pats.end());
      for (std::uint64_t p : pats) {
        auto& ps = fpats[static_cast<size_t>(d)];
        auto& ns = fneed[static_cast<size_t>(d)];
        if (ps.empty() || ps.back() != p) {
          ps.push_back(p);
          ns.push_back(1);
        } else {
          ++ns.back();
        }
      }
    }
    apat.assign(static_cast<size_t>(a.ncols()), 0);
  }

  bool counts_ok(int depth) const {
    const auto& ps = fpats[static_cast<size_t>(depth)];
    const auto& ns = fneed[static_cast<size_t>(depth)];
    std::vector<int> cnt(ps.size(), 0);
    for (std::uint64_t p : apat) {
      const auto it = std::lower_bound(ps.begin(), ps.end(), p);
      if (it != ps.end() && *it == p) ++cnt[static_cast<size_t>(it - ps.begin())];
    }
    for (size_t i = 0; i < ns.size(); ++i)
      if (cnt[i] < ns[i]) return false;
    return true;
  }

  bool rec(int depth) {
    if (depth == f.rows()) return true;
    for (int r = 1; r <= a.rows(); ++r) {
      if (used & (std::uint64_t{1} << r)) continue;
      for (int j = 1; j <= a.ncols(); ++j)
        apat[static_cast<size_t>(j - 1)] = (apat[static_cast<size_t>(j - 1)] << 1) |
                                           static_cast<std::uint64_t>(a.bit(r, j));
      if (counts_ok(depth + 1)) {
        used |= std::uint64_t{1} << r;
        rows.push_back(r);
        if (rec(depth + 1)) return true;
        rows.pop_back();
        used &= ~(std::uint64_t{1} << r);
      }
      for (auto& p : apat) p >>= 1;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> has_config(const BinMatrix& target, const BinMatrix& pattern) {
  if (!contains_config(target, pattern)) return std::nullopt;
  Embedding e;
  if (pattern.ncols() == 0) {
    for (int i = 1; i <= pattern.rows(); ++i) e.row_map.push_back(i);
    return e;
  }
  WitnessSearch ws(target, pattern);
  if (!ws.rec(0)) return std::nullopt;  // unreachable once the decision succeeded
  e.row_map = ws.rows;
  // Greedy least column map: patterns partition columns, so taking the
  // smallest unused matching target column per pattern column is optimal.
  const auto full = ws.apat;
  std::vector<bool> taken(static_cast<size_t>(target.ncols()), false);
  for (int j = 1; j <= pattern.ncols(); ++j) {
    std::uint64_t want = 0;
    for (int i = 0; i < pattern.rows(); ++i)
      want = (want << 1) | static_cast<std::uint64_t>(pattern.bit(i + 1, j));
    int pick = -1;
    for (int c = 0; c < target.ncols(); ++c) {
      if (!taken[static_cast<size_t>(c)] && full[static_cast<size_t>(c)] == want) {
        pick = c;
        break;
      }
    }
    if (pick < 0) return std::nullopt;  // unreachable by the counting argument
    taken[static_cast<size_t>(pick)] = true;
    e.col_map.push_back(pick + 1);
  }
  return e;
}

bool avoids_family(const BinMatrix& target, const Family& family) {
  for (const BinMatrix& f : family.members())
    if (contains_config(target, f)) return false;
  return true;
}

bool config_equal(const BinMatrix& a, const BinMatrix& b) {
  if (a.rows() != b.rows() || a.ncols() != b.ncols()) return false;
  return contains_config(a, b) && contains_config(b, a);
}

}  // namespace forbconf
