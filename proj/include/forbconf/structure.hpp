#pragma once

#include <optional>
#include <vector>

#include "forbconf/containment.hpp"
#include "forbconf/matrix.hpp"

namespace forbconf {

enum class SumClassType { Type1, Type2, Ambiguous };

struct RowPartition {
  RowSet x, y, z;  // disjoint, union [m]
};

// Structure of the columns of one fixed column sum inside a matrix that
// avoids the two-column block pattern: constant on x (all 1) and z (all 0),
// with either exactly one 1 per column on y (type 1, |x|+1 = sum) or exactly
// one 0 per column on y (type 2, |x|+|y|-1 = sum). Classes of at most two
// columns can admit both readings.
struct SumClassDecomposition {
  int sum = 0;
  int ncols = 0;
  SumClassType type = SumClassType::Ambiguous;
  RowPartition part;                 // the type-1 reading when ambiguous
  std::optional<RowPartition> alt;   // the type-2 reading when ambiguous
};

std::vector<SumClassDecomposition> q9_decompose(const BinMatrix& a);

struct BucketReport {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

// Row-by-row bucket count: lhs = sum over rows of C(zeros, l) + C(ones, q),
// rhs = (k-1) C(n, l) + (p-1) C(n, q). The inequality is guaranteed only for
// matrices avoiding both constant blocks, which is enforced by default.
BucketReport bucket_inequality(const BinMatrix& a, int k, int l, int p, int q,
                               bool enforce_preconditions = true);

// Greedy extraction of a k x k identity from a matrix whose row sums are at
// most t-1, whose column sums are at least 1, and which has at least (t-1) k
// columns. The returned embedding always re-verifies.
Embedding find_identity(const BinMatrix& c, int k, int t);

struct YSystemReport {
  long long total = 0;
  long long bound = 0;
  bool holds = false;
};

// Checks sum |Y_i| <= 2m for an ordered system of distinct subsets of [m]
// with pairwise intersections of size at most 1 and the coherence condition
// on triples a < b < c: the singletons Y_c ∩ Y_b and Y_c ∩ Y_a agree.
// Hypothesis violations raise errors naming the offending pair or triple.
YSystemReport y_system_bound(const std::vector<std::vector<int>>& sets, int m);

// Deletes every column carrying a (1,0) fall on some cyclically consecutive
// pair of the given rows (at most t per pair by precondition), then deletes
// all but the last of those rows. The result is simple.
BinMatrix cycle_of_falls_reduce(const BinMatrix& a, const std::vector<int>& rows, int t);

}  // namespace forbconf
