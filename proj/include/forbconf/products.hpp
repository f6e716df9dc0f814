#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forbconf/matrix.hpp"

namespace forbconf {

enum class FactorKind { Identity, IdentityComplement, Triangular };

std::string factor_name(FactorKind k);  // "I", "Ic", "T"
BinMatrix factor_matrix(FactorKind k, int block_size);

struct ProductSpec {
  std::vector<FactorKind> factors;
  int block_size = 1;
};

// Stacks every column of a over every column of b, a-major.
BinMatrix product(const BinMatrix& a, const BinMatrix& b);
BinMatrix build_product(const ProductSpec& spec);

struct XValue {
  int x = 0;
  int block_size = 0;
  // Avoiding (x-1)-fold products, e.g. "Ic:6xT:6"; empty when x == 1.
  std::vector<std::string> certificates;
};

// Smallest p <= max_p such that every p-fold product of identity /
// complemented-identity / triangular blocks contains some family member.
// Block size is max(rows+cols) over the members; the value is recomputed at
// block size n+1 and a disagreement raises an error.
std::optional<XValue> x_value(const Family& fam, int max_p = 4);

struct GrowthPrediction {
  int exponent = 0;            // x - 1
  bool conjectural = true;     // a predicted rate, not a computed one
  std::string counterexample_note;  // nonempty when the true rate is known to differ
};

std::optional<GrowthPrediction> predicted_growth(const Family& fam, int max_p = 4);

}  // namespace forbconf
