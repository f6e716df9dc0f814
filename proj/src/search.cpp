#include "forbconf/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forbconf/containment.hpp"
#include "forbconf/products.hpp"

namespace forbconf {

namespace {

// Bitmask over up to 256 candidate columns (2^m for m <= 8).
struct Mask {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[static_cast<size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }
  int pop_lowest() {
    for (size_t i = 0; i < 4; ++i) {
      if (w[i]) {
        const int b = std::countr_zero(w[i]);
        w[i] &= w[i] - 1;
        return static_cast<int>(i) * 64 + b;
      }
    }
    return -1;
  }
  Mask operator&(const Mask& o) const {
    Mask r;
    for (size_t i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
};

// Column-subset search state shared by forb_exact and enumerate_avoiding.
// Candidates are the column values 0..2^m-1 themselves; one-column patterns
// become a root filter, two-column patterns a pairwise compatibility table,
// wider patterns an incremental matcher run when a column is about to join.
struct ForbEngine {
  int m = 0;
  int ncand = 0;
  Mask root;
  bool have_pairs = false;
  std::vector<Mask> compat;
  std::vector<ConfigMatcher> general;

  ForbEngine(int rows, const Family& family) : m(rows), ncand(1 << rows) {
    for (int c = 0; c < ncand; ++c) root.set(c);
    std::vector<const BinMatrix*> pair_patterns;
    for (const BinMatrix& f : family.members()) {
      if (f.ncols() == 0) throw Error("bad_params", "family members must have at least one column");
      if (f.ncols() == 1) {
        ConfigMatcher matcher(f);
        for (int c = 0; c < ncand; ++c) {
          const std::vector<Column> one{static_cast<Column>(c)};
          if (matcher.contains(one, m)) root.reset(c);
        }
      } else if (f.ncols() == 2) {
        pair_patterns.push_back(&f);
      } else {
        general.emplace_back(f);
      }
    }
    if (!pair_patterns.empty()) {
      have_pairs = true;
      compat.assign(static_cast<size_t>(ncand), Mask{});
      for (int a = 0; a < ncand; ++a)
        for (int b = 0; b < ncand; ++b) compat[static_cast<size_t>(a)].set(b);
      for (const BinMatrix* f : pair_patterns) {
        ConfigMatcher matcher(*f);
        for (int a = 0; a < ncand; ++a) {
          for (int b = a + 1; b < ncand; ++b) {
            const std::vector<Column> two{static_cast<Column>(a), static_cast<Column>(b)};
            if (matcher.contains(two, m)) {
              compat[static_cast<size_t>(a)].reset(b);
              compat[static_cast<size_t>(b)].reset(a);
            }
          }
        }
      }
    }
  }
};

struct Worker {
  const ForbEngine* eng;
  std::vector<ConfigMatcher> matchers;  // private copies, scratch inside
  std::vector<Column> stack;
  std::vector<Column> buf;
  std::uint64_t nodes = 0;

  explicit Worker(const ForbEngine& e) : eng(&e), matchers(e.general) {}

  bool may_join(Column c) {
    if (matchers.empty()) return true;
    buf = stack;
    buf.push_back(c);
    const int last = static_cast<int>(buf.size()) - 1;
    for (auto& mt : matchers)
      if (mt.contains_using(buf, eng->m, last)) return false;
    return true;
  }
};

struct BestCell {
  std::atomic<int> best{-1};
  std::vector<Column> witness;
  std::mutex mx;

  void offer(int size, const std::vector<Column>& cols) {
    int cur = best.load(std::memory_order_relaxed);
    if (size <= cur) return;
    std::lock_guard<std::mutex> g(mx);
    if (size > best.load(std::memory_order_relaxed)) {
      witness = cols;
      best.store(size, std::memory_order_relaxed);
    }
  }
};

void bb_dfs(Worker& wk, Mask cand, BestCell& cell) {
  ++wk.nodes;
  const int depth = static_cast<int>(wk.stack.size());
  if (depth > cell.best.load(std::memory_order_relaxed)) cell.offer(depth, wk.stack);
  int rem = cand.count();
  if (depth + rem <= cell.best.load(std::memory_order_relaxed)) return;
  while (true) {
    const int c = cand.pop_lowest();
    if (c < 0) break;
    --rem;
    if (depth + 1 + rem <= cell.best.load(std::memory_order_relaxed)) break;
    if (!wk.may_join(static_cast<Column>(c))) continue;
    const Mask child = wk.eng->have_pairs ? (cand & wk.eng->compat[static_cast<size_t>(c)]) : cand;
    wk.stack.push_back(static_cast<Column>(c));
    bb_dfs(wk, child, cell);
    wk.stack.pop_back();
  }
}

void enum_dfs(Worker& wk, Mask cand, const std::function<bool(const BinMatrix&)>& visit, bool& go) {
  if (!go) return;
  ++wk.nodes;
  if (!visit(BinMatrix(wk.eng->m, wk.stack))) {
    go = false;
    return;
  }
  while (go) {
    const int c = cand.pop_lowest();
    if (c < 0) break;
    if (!wk.may_join(static_cast<Column>(c))) continue;
    const Mask child = wk.eng->have_pairs ? (cand & wk.eng->compat[static_cast<size_t>(c)]) : cand;
    wk.stack.push_back(static_cast<Column>(c));
    enum_dfs(wk, child, visit, go);
    wk.stack.pop_back();
  }
}

void validate_m(int m) {
  if (m < 1 || m > 8)
    throw Error("m_out_of_range", "forb search supports 1 <= m <= 8, got " + std::to_string(m));
}

}  // namespace

SearchResult forb_exact(int m, const Family& family, const SearchOptions& opt) {
  validate_m(m);
  const auto t0 = std::chrono::steady_clock::now();
  ForbEngine eng(m, family);
  BestCell cell;
  std::uint64_t nodes = 0;

  const int workers = std::max(1, opt.workers);
  if (workers == 1) {
    Worker wk(eng);
    bb_dfs(wk, eng.root, cell);
    nodes = wk.nodes;
  } else {
    // Split the root branches; the value is schedule independent because the
    // shared best cell only ever grows.
    std::vector<int> first;
    Mask r = eng.root;
    while (true) {
      const int c = r.pop_lowest();
      if (c < 0) break;
      first.push_back(c);
    }
    cell.offer(0, {});
    std::atomic<std::uint64_t> total_nodes{1};
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
#endif
    {
      Worker wk(eng);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
      for (int i = 0; i < static_cast<int>(first.size()); ++i) {
        const int c = first[static_cast<size_t>(i)];
        if (!wk.may_join(static_cast<Column>(c))) continue;
        Mask tail;
        {
          Mask r2 = eng.root;
          while (true) {
            const int x = r2.pop_lowest();
            if (x < 0) break;
            if (x > c) tail.set(x);
          }
        }
        const Mask child = eng.have_pairs ? (tail & eng.compat[static_cast<size_t>(c)]) : tail;
        wk.stack.assign(1, static_cast<Column>(c));
        bb_dfs(wk, child, cell);
        wk.stack.clear();
      }
      total_nodes.fetch_add(wk.nodes);
    }
    nodes = total_nodes.load();
  }

  SearchResult res;
  res.forb_value = std::max(0, cell.best.load());
  res.witness = BinMatrix(m, cell.witness);
  res.nodes_expanded = nodes;
  res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return res;
}

void enumerate_avoiding(int m, const Family& family,
                        const std::function<bool(const BinMatrix&)>& visit) {
  validate_m(m);
  ForbEngine eng(m, family);
  Worker wk(eng);
  bool go = true;
  enum_dfs(wk, eng.root, visit, go);
}

Decomposition decompose(const BinMatrix& a, int r) {
  if (!is_simple(a)) throw Error("not_simple", "decomposition requires a simple matrix");
  if (r < 1 || r > a.rows()) throw Error("index_range", "row out of range");
  if (a.rows() < 2) throw Error("bad_params", "decomposition needs at least two rows");
  const int m = a.rows();
  auto strip = [&](Column v) {
    const Column low = v & ((Column{1} << (m - r)) - 1);
    const Column high = v >> (m - r + 1);
    return (high << (m - r)) | low;
  };
  // first-occurrence order of the stripped columns, split by the row-r bit
  std::vector<Column> zeros_side, ones_side;
  std::map<Column, std::pair<bool, bool>> seen;  // stripped -> (under 0, under 1)
  for (Column v : a.columns()) {
    const bool one = (v >> (m - r)) & 1u;
    const Column s = strip(v);
    auto& flags = seen[s];
    if (one) {
      flags.second = true;
      ones_side.push_back(s);
    } else {
      flags.first = true;
      zeros_side.push_back(s);
    }
  }
  Decomposition out;
  out.row = r;
  std::vector<Column> b, c, d;
  for (Column s : zeros_side) {
    const auto& flags = seen[s];
    (flags.second ? c : b).push_back(s);
  }
  for (Column s : ones_side) {
    if (!seen[s].first) d.push_back(s);
  }
  out.b = BinMatrix(m - 1, std::move(b));
  out.c = BinMatrix(m - 1, std::move(c));
  out.d = BinMatrix(m - 1, std::move(d));
  return out;
}

Family induced_family(const Family& fam, int max_rows, int max_cols) {
  if (max_rows < 1 || max_cols < 1) throw Error("bad_params", "bounds must be positive");
  if (max_rows > 4 || max_cols > 6)
    throw Error("bad_params", "induced family enumeration is capped at 4 rows and 6 columns");
  Family out;
  if (fam.empty()) return out;
  const BinMatrix bit_pair(1, {0, 1});  // the (0 1) row block
  std::vector<ConfigMatcher> matchers;
  for (const BinMatrix& f : fam.members()) matchers.emplace_back(f);
  std::set<std::string> seen;
  for (int r = 1; r <= max_rows; ++r) {
    const int values = 1 << r;
    std::vector<Column> cols;
    // non-decreasing column sequences enumerate the multisets once
    std::function<void()> visit = [&]() {
      if (!cols.empty()) {
        const BinMatrix cand(r, cols);
        const BinMatrix canon = canonical_form(cand);
        const std::string key = std::to_string(r) + "|" + canon.to_text();
        if (seen.insert(key).second) {
          const BinMatrix doubled = product(bit_pair, canon);
          for (auto& mt : matchers) {
            if (mt.contains(doubled.columns(), doubled.rows())) {
              out.add(canon);
              break;
            }
          }
        }
      }
      if (static_cast<int>(cols.size()) == max_cols) return;
      const Column lo = cols.empty() ? 0 : cols.back();
      for (Column v = lo; v < static_cast<Column>(values); ++v) {
        cols.push_back(v);
        visit();
        cols.pop_back();
      }
    };
    visit();
  }
  return out.minimized();
}

bool check_recursion(int m, const Family& fam) {
  if (m < 2 || m > 5) throw Error("m_out_of_range", "recursion check supports 2 <= m <= 5");
  int max_rows = 1, max_cols = 1;
  for (const BinMatrix& f : fam.members()) {
    max_rows = std::max(max_rows, f.rows());
    max_cols = std::max(max_cols, f.ncols());
  }
  const Family g = induced_family(fam, max_rows, max_cols);
  const int lhs = forb_exact(m, fam).forb_value;
  const int rhs = forb_exact(m - 1, fam).forb_value + forb_exact(m - 1, g).forb_value;
  return lhs <= rhs;
}

}  // namespace forbconf
