#pragma once

#include <optional>
#include <vector>

#include "forbconf/matrix.hpp"

namespace forbconf {

// Witness of pattern <= target: injective row and column maps, 1-based,
// indexed by the pattern's rows/columns.
struct Embedding {
  std::vector<int> row_map;
  std::vector<int> col_map;
};

bool verify_embedding(const BinMatrix& target, const BinMatrix& pattern, const Embedding& e);

// Reusable decision procedure for one fixed pattern. Row assignments are
// tried most-constrained-first; a partial assignment survives only while
// every distinct pattern of the restricted pattern columns has at least as
// many matching target columns (patterns partition the columns, so counting
// replaces matching).
class ConfigMatcher {
 public:
  explicit ConfigMatcher(BinMatrix pattern);

  const BinMatrix& pattern() const { return f_; }

  bool contains(const std::vector<Column>& target_cols, int target_rows);
  // Same decision restricted to embeddings whose column map uses the column
  // at index `forced` (0-based into target_cols).
  bool contains_using(const std::vector<Column>& target_cols, int target_rows, int forced);

 private:
  struct DepthInfo {
    std::vector<std::uint64_t> pats;  // sorted distinct prefix patterns
    std::vector<int> need;
  };

  bool feasible(size_t ncols, int depth, int forced) const;
  bool dfs(const std::vector<Column>& cols, int m, int depth, int forced);

  BinMatrix f_;
  int k_ = 0;
  std::vector<int> order_;           // 0-based pattern rows
  std::vector<DepthInfo> depth_;     // index d = rows assigned so far
  // scratch, reused across calls
  std::vector<std::uint64_t> apat_;
  mutable std::vector<int> cnt_;
  std::uint64_t used_rows_ = 0;
};

// Decision form of the configuration relation pattern <= target.
bool contains_config(const BinMatrix& target, const BinMatrix& pattern);

// Full relation with witness extraction. The returned embedding is the
// lexicographically least one (row map first, then column map).
std::optional<Embedding> has_config(const BinMatrix& target, const BinMatrix& pattern);

bool avoids_family(const BinMatrix& target, const Family& family);

// Equality as configurations: same shape and containment both ways.
bool config_equal(const BinMatrix& a, const BinMatrix& b);

}  // namespace forbconf
