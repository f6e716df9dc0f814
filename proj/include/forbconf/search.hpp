#pragma once

#include <chrono>
#include <cstdint>
#include <functional>

#include "forbconf/matrix.hpp"

namespace forbconf {

struct SearchOptions {
  // workers == 1 runs the serial kernel and yields the canonical
  // (lexicographically least) witness; more workers split the root branches
  // across OpenMP threads. The value is the same either way.
  int workers = 1;
};

struct SearchResult {
  int forb_value = 0;
  BinMatrix witness{1, {}};
  std::uint64_t nodes_expanded = 0;
  std::chrono::milliseconds elapsed{0};
};

// Exact forb(m, family): branch and bound over the 2^m candidate columns in
// ascending numeric order. m <= 8; beyond m = 5 only tightly constrained
// families finish in reasonable time.
SearchResult forb_exact(int m, const Family& family, const SearchOptions& opt = {});

// Calls visit for every simple m-rowed matrix avoiding the family (including
// the empty one), in search order. Return false from visit to stop early.
void enumerate_avoiding(int m, const Family& family,
                        const std::function<bool(const BinMatrix&)>& visit);

// Split of a simple matrix along row r: strip row r, then group the stripped
// columns by whether they appeared under a 0, a 1, or both.
struct Decomposition {
  int row = 0;
  BinMatrix b{1, {}};  // columns that occurred only under 0
  BinMatrix c{1, {}};  // columns that occurred under both values
  BinMatrix d{1, {}};  // columns that occurred only under 1
};

Decomposition decompose(const BinMatrix& a, int r);

// Minimal configurations g (within the given bounds) such that some family
// member embeds into (0 1) x g.
Family induced_family(const Family& fam, int max_rows, int max_cols);

// Checks forb(m, F) <= forb(m-1, F) + forb(m-1, G) with G induced as above,
// all sides computed exactly.
bool check_recursion(int m, const Family& fam);

}  // namespace forbconf
