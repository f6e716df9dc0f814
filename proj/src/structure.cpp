#include "forbconf/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "forbconf/catalog.hpp"

namespace forbconf {

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

bool valid_type1(const std::vector<Column>& cols, int m, const RowPartition& p, int sum) {
  if (static_cast<int>(p.x.size()) + 1 != sum) return false;
  for (Column c : cols) {
    for (int r : p.x)
      if (!((c >> (m - r)) & 1u)) return false;
    for (int r : p.z)
      if ((c >> (m - r)) & 1u) return false;
    int ones = 0;
    for (int r : p.y) ones += (c >> (m - r)) & 1u;
    if (ones != 1) return false;
  }
  return true;
}

bool valid_type2(const std::vector<Column>& cols, int m, const RowPartition& p, int sum) {
  if (static_cast<int>(p.x.size()) + static_cast<int>(p.y.size()) - 1 != sum) return false;
  for (Column c : cols) {
    for (int r : p.x)
      if (!((c >> (m - r)) & 1u)) return false;
    for (int r : p.z)
      if ((c >> (m - r)) & 1u) return false;
    int zerosy = 0;
    for (int r : p.y) zerosy += 1 - ((c >> (m - r)) & 1u);
    if (zerosy != 1) return false;
  }
  return true;
}

RowPartition vote_partition(const std::vector<Column>& cols, int m) {
  RowPartition p;
  for (int r = 1; r <= m; ++r) {
    bool all1 = true, all0 = true;
    for (Column c : cols) {
      if ((c >> (m - r)) & 1u)
        all0 = false;
      else
        all1 = false;
    }
    if (all1)
      p.x.push_back(r);
    else if (all0)
      p.z.push_back(r);
    else
      p.y.push_back(r);
  }
  return p;
}

}  // namespace

std::vector<SumClassDecomposition> q9_decompose(const BinMatrix& a) {
  Family q9;
  q9.add(q_config(9), "Q9");
  if (!avoids_family(a, q9))
    throw Error("contains_q9", "matrix contains the forbidden two-column block pattern");
  const int m = a.rows();
  std::map<int, std::vector<Column>> classes;
  for (Column c : a.columns()) classes[std::popcount(c)].push_back(c);
  std::vector<SumClassDecomposition> out;
  for (auto& [sum, cols] : classes) {
    SumClassDecomposition d;
    d.sum = sum;
    d.ncols = static_cast<int>(cols.size());
    RowPartition vote = vote_partition(cols, m);
    std::optional<RowPartition> t1, t2;
    if (valid_type1(cols, m, vote, sum)) t1 = vote;
    if (valid_type2(cols, m, vote, sum)) t2 = vote;
    if (cols.size() == 1) {
      // single column: shift one constant row into y for each reading
      if (!t1 && sum >= 1) {
        RowPartition p = vote;
        const int r = p.x.front();
        p.x.erase(p.x.begin());
        p.y.insert(std::lower_bound(p.y.begin(), p.y.end(), r), r);
        if (valid_type1(cols, m, p, sum)) t1 = p;
      }
      if (!t2 && sum <= m - 1) {
        RowPartition p = vote;
        const int r = p.z.front();
        p.z.erase(p.z.begin());
        p.y.insert(std::lower_bound(p.y.begin(), p.y.end(), r), r);
        if (valid_type2(cols, m, p, sum)) t2 = p;
      }
    }
    if (t1 && t2) {
      d.type = SumClassType::Ambiguous;
      d.part = *t1;
      d.alt = *t2;
    } else if (t1) {
      d.type = SumClassType::Type1;
      d.part = *t1;
    } else if (t2) {
      d.type = SumClassType::Type2;
      d.part = *t2;
    } else {
      throw Error("type_contradiction",
                  "sum class " + std::to_string(sum) + " fits neither structure type");
    }
    out.push_back(std::move(d));
  }
  return out;
}

BucketReport bucket_inequality(const BinMatrix& a, int k, int l, int p, int q,
                               bool enforce_preconditions) {
  if (k < 1 || l < 1 || p < 1 || q < 1) throw Error("bad_params", "block parameters must be positive");
  if (enforce_preconditions) {
    Family f;
    f.add(zeros(k, l), "zeros");
    f.add(all_ones(p, q), "ones-block");
    if (!avoids_family(a, f))
      throw Error("precondition", "matrix does not avoid the constant blocks, inequality not guaranteed");
  }
  const long long n = a.ncols();
  BucketReport rep;
  for (int r = 1; r <= a.rows(); ++r) {
    long long ones = 0;
    for (int j = 1; j <= a.ncols(); ++j) ones += a.bit(r, j);
    rep.lhs += binom(n - ones, l) + binom(ones, q);
  }
  rep.rhs = static_cast<long long>(k - 1) * binom(n, l) + static_cast<long long>(p - 1) * binom(n, q);
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

namespace {

struct IdentityGreedy {
  // sets indexed by original row, elements are original column indices
  std::vector<std::pair<int, std::set<int>>> sets;
  int t;

  // returns (rows, cols) of an identity of order k
  std::pair<std::vector<int>, std::vector<int>> extract(int k) {
    if (k == 0) return {{}, {}};
    // greedy prefix whose union reaches (t-1) k, every set contributing
    std::vector<size_t> picked;
    std::set<int> uni;
    for (size_t i = 0; i < sets.size(); ++i) {
      bool fresh = false;
      for (int e : sets[i].second)
        if (!uni.count(e)) {
          fresh = true;
          break;
        }
      if (!fresh) continue;
      picked.push_back(i);
      uni.insert(sets[i].second.begin(), sets[i].second.end());
      if (static_cast<int>(uni.size()) >= (t - 1) * k) break;
    }
    if (static_cast<int>(uni.size()) < (t - 1) * k)
      throw Error("internal", "greedy union fell short of the required size");
    const size_t last = picked.back();
    std::set<int> before;
    for (size_t idx = 0; idx + 1 < picked.size(); ++idx)
      before.insert(sets[picked[idx]].second.begin(), sets[picked[idx]].second.end());
    int chosen_col = -1;
    for (int e : sets[last].second)
      if (!before.count(e)) {
        chosen_col = e;
        break;
      }
    const int chosen_row = sets[last].first;
    // reduce: drop the last set, delete its elements from the earlier picks
    const std::set<int> remove = sets[last].second;
    std::vector<std::pair<int, std::set<int>>> reduced;
    for (size_t idx = 0; idx + 1 < picked.size(); ++idx) {
      std::set<int> s;
      for (int e : sets[picked[idx]].second)
        if (!remove.count(e)) s.insert(e);
      if (!s.empty()) reduced.push_back({sets[picked[idx]].first, std::move(s)});
    }
    IdentityGreedy sub{std::move(reduced), t};
    auto [rows, cols] = sub.extract(k - 1);
    rows.push_back(chosen_row);
    cols.push_back(chosen_col);
    return {rows, cols};
  }
};

}  // namespace

Embedding find_identity(const BinMatrix& c, int k, int t) {
  if (k < 1) throw Error("bad_params", "identity order must be positive");
  if (t < 2) throw Error("bad_params", "multiplicity parameter must be at least 2");
  for (int r = 1; r <= c.rows(); ++r) {
    int s = 0;
    for (int j = 1; j <= c.ncols(); ++j) s += c.bit(r, j);
    if (s > t - 1) throw Error("precondition", "row " + std::to_string(r) + " has more than t-1 ones");
  }
  for (int j = 1; j <= c.ncols(); ++j) {
    int s = 0;
    for (int r = 1; r <= c.rows(); ++r) s += c.bit(r, j);
    if (s < 1) throw Error("precondition", "column " + std::to_string(j) + " is all zero");
  }
  if (c.ncols() < (t - 1) * k)
    throw Error("precondition", "matrix needs at least (t-1)k columns");

  IdentityGreedy greedy;
  greedy.t = t;
  for (int r = 1; r <= c.rows(); ++r) {
    std::set<int> s;
    for (int j = 1; j <= c.ncols(); ++j)
      if (c.bit(r, j)) s.insert(j);
    if (!s.empty()) greedy.sets.push_back({r, std::move(s)});
  }
  auto [rows, cols] = greedy.extract(k);
  Embedding e;
  e.row_map = rows;
  e.col_map = cols;
  if (!verify_embedding(c, identity(k), e))
    throw Error("internal", "greedy identity extraction produced an invalid embedding");
  return e;
}

YSystemReport y_system_bound(const std::vector<std::vector<int>>& sets, int m) {
  if (m < 1) throw Error("bad_params", "ground set must be nonempty");
  std::vector<std::set<int>> ys;
  for (const auto& s : sets) {
    std::set<int> t(s.begin(), s.end());
    if (t.size() != s.size()) throw Error("hypothesis_violation", "a set lists an element twice");
    for (int e : t)
      if (e < 1 || e > m) throw Error("hypothesis_violation", "element out of the ground set");
    ys.push_back(std::move(t));
  }
  const int n = static_cast<int>(ys.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (ys[static_cast<size_t>(i)] == ys[static_cast<size_t>(j)])
        throw Error("hypothesis_violation",
                    "sets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are equal");
      std::vector<int> inter;
      std::set_intersection(ys[static_cast<size_t>(i)].begin(), ys[static_cast<size_t>(i)].end(),
                            ys[static_cast<size_t>(j)].begin(), ys[static_cast<size_t>(j)].end(),
                            std::back_inserter(inter));
      if (inter.size() > 1)
        throw Error("hypothesis_violation", "sets " + std::to_string(i + 1) + " and " +
                                                std::to_string(j + 1) + " share more than one element");
    }
  auto singleton = [&](int i, int j) -> std::optional<int> {
    std::vector<int> inter;
    std::set_intersection(ys[static_cast<size_t>(i)].begin(), ys[static_cast<size_t>(i)].end(),
                          ys[static_cast<size_t>(j)].begin(), ys[static_cast<size_t>(j)].end(),
                          std::back_inserter(inter));
    if (inter.empty()) return std::nullopt;
    return inter[0];
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const auto rb = singleton(c, b);
        const auto ra = singleton(c, a);
        if (rb && ra && *rb != *ra)
          throw Error("hypothesis_violation",
                      "triple (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                          std::to_string(c + 1) + ") meets the last set in two different elements");
      }
  YSystemReport rep;
  for (const auto& s : ys) rep.total += static_cast<long long>(s.size());
  rep.bound = 2LL * m;
  rep.holds = rep.total <= rep.bound;
  return rep;
}

BinMatrix cycle_of_falls_reduce(const BinMatrix& a, const std::vector<int>& rows, int t) {
  if (!is_simple(a)) throw Error("not_simple", "reduction requires a simple matrix");
  if (t < 0) throw Error("bad_params", "fall budget must be nonnegative");
  const int k = static_cast<int>(rows.size());
  if (k < 2) throw Error("bad_params", "need at least two rows");
  std::set<int> distinct(rows.begin(), rows.end());
  if (static_cast<int>(distinct.size()) != k) throw Error("bad_params", "rows must be distinct");
  for (int r : rows)
    if (r < 1 || r > a.rows()) throw Error("index_range", "row out of range");
  const int m = a.rows();
  std::set<int> special;  // 1-based column indices
  for (int i = 0; i < k; ++i) {
    const int r1 = rows[static_cast<size_t>(i)];
    const int r2 = rows[static_cast<size_t>((i + 1) % k)];
    int count = 0;
    for (int j = 1; j <= a.ncols(); ++j) {
      if (a.bit(r1, j) && !a.bit(r2, j)) {
        ++count;
        special.insert(j);
      }
    }
    if (count > t)
      throw Error("precondition", "pair (" + std::to_string(r1) + "," + std::to_string(r2) +
                                      ") carries " + std::to_string(count) + " falls, budget is " +
                                      std::to_string(t));
  }
  std::vector<Column> kept;
  for (int j = 1; j <= a.ncols(); ++j)
    if (!special.count(j)) kept.push_back(a.col(j));
  RowSet keep_rows;
  std::set<int> dropped(rows.begin(), rows.end());
  dropped.erase(rows.back());  // the last listed row survives
  for (int r = 1; r <= m; ++r)
    if (!dropped.count(r)) keep_rows.push_back(r);
  const BinMatrix reduced = restrict_rows(BinMatrix(m, kept), keep_rows);
  if (!is_simple(reduced)) throw Error("internal", "reduction produced a non-simple matrix");
  return reduced;
}

}  // namespace forbconf
