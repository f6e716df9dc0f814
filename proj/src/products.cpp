#include "forbconf/products.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forbconf/catalog.hpp"
#include "forbconf/containment.hpp"

namespace forbconf {

std::string factor_name(FactorKind k) {
  switch (k) {
    case FactorKind::Identity: return "I";
    case FactorKind::IdentityComplement: return "Ic";
    case FactorKind::Triangular: return "T";
  }
  throw Error("bad_params", "unknown factor kind");
}

BinMatrix factor_matrix(FactorKind k, int block_size) {
  switch (k) {
    case FactorKind::Identity: return identity(block_size);
    case FactorKind::IdentityComplement: return identity_complement(block_size);
    case FactorKind::Triangular: return triangular(block_size);
  }
  throw Error("bad_params", "unknown factor kind");
}

BinMatrix product(const BinMatrix& a, const BinMatrix& b) {
  const int m = a.rows() + b.rows();
  if (m > kMaxRows) throw Error("rows_out_of_range", "product exceeds the row cap");
  std::vector<Column> cols;
  cols.reserve(a.columns().size() * b.columns().size());
  for (Column ca : a.columns())
    for (Column cb : b.columns()) cols.push_back((ca << b.rows()) | cb);
  return BinMatrix(m, std::move(cols));
}

BinMatrix build_product(const ProductSpec& spec) {
  if (spec.factors.empty()) throw Error("bad_params", "product spec needs at least one factor");
  if (spec.block_size < 1) throw Error("bad_params", "block size must be positive");
  BinMatrix acc = factor_matrix(spec.factors[0], spec.block_size);
  for (size_t i = 1; i < spec.factors.size(); ++i)
    acc = product(acc, factor_matrix(spec.factors[i], spec.block_size));
  return acc;
}

namespace {

constexpr FactorKind kFactors[3] = {FactorKind::Identity, FactorKind::IdentityComplement,
                                    FactorKind::Triangular};

std::string tuple_name(const std::vector<FactorKind>& fs, int n) {
  std::string s;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) s += 'x';
    s += factor_name(fs[i]) + ":" + std::to_string(n);
  }
  return s;
}

struct LevelScan {
  bool all_contain = true;
  std::vector<std::string> avoiders;
};

LevelScan scan_level(const Family& fam, int p, int n) {
  int total = 1;
  for (int i = 0; i < p; ++i) total *= 3;
  std::vector<char> contains(static_cast<size_t>(total), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int code = 0; code < total; ++code) {
    std::vector<FactorKind> fs(static_cast<size_t>(p));
    int c = code;
    for (int i = 0; i < p; ++i) {
      fs[static_cast<size_t>(i)] = kFactors[c % 3];
      c /= 3;
    }
    const BinMatrix prod = build_product({fs, n});
    bool found = false;
    for (const BinMatrix& f : fam.members()) {
      if (contains_config(prod, f)) {
        found = true;
        break;
      }
    }
    contains[static_cast<size_t>(code)] = found ? 1 : 0;
  }
  LevelScan out;
  for (int code = 0; code < total; ++code) {
    if (!contains[static_cast<size_t>(code)]) {
      out.all_contain = false;
      std::vector<FactorKind> fs(static_cast<size_t>(p));
      int c = code;
      for (int i = 0; i < p; ++i) {
        fs[static_cast<size_t>(i)] = kFactors[c % 3];
        c /= 3;
      }
      out.avoiders.push_back(tuple_name(fs, n));
    }
  }
  return out;
}

std::optional<XValue> x_value_at_block(const Family& fam, int max_p, int n) {
  std::vector<std::string> prev_avoiders;
  for (int p = 1; p <= max_p; ++p) {
    const LevelScan scan = scan_level(fam, p, n);
    if (scan.all_contain) {
      XValue v;
      v.x = p;
      v.block_size = n;
      v.certificates = prev_avoiders;
      return v;
    }
    prev_avoiders = scan.avoiders;
  }
  return std::nullopt;
}

}  // namespace

std::optional<XValue> x_value(const Family& fam, int max_p) {
  if (fam.empty()) return std::nullopt;
  if (max_p < 1 || max_p > 4) throw Error("bad_params", "max_p must be between 1 and 4");
  int n = 0;
  for (const BinMatrix& f : fam.members()) n = std::max(n, f.rows() + f.ncols());
  if (n > 12) throw Error("block_too_large", "block threshold exceeds 12 rows per factor");
  const auto at_n = x_value_at_block(fam, max_p, n);
  const auto at_n1 = x_value_at_block(fam, max_p, n + 1);
  const bool agree = (at_n.has_value() == at_n1.has_value()) &&
                     (!at_n || at_n->x == at_n1->x);
  if (!agree)
    throw Error("block_instability", "x value differs between block sizes " + std::to_string(n) +
                                          " and " + std::to_string(n + 1));
  return at_n;
}

std::optional<GrowthPrediction> predicted_growth(const Family& fam, int max_p) {
  const auto xv = x_value(fam, max_p);
  if (!xv) return std::nullopt;
  GrowthPrediction gp;
  gp.exponent = xv->x - 1;
  gp.conjectural = true;
  // Families whose true growth is known to beat the prediction.
  auto matches = [&](const BinMatrix& a, const BinMatrix& b) {
    if (fam.size() != 2) return false;
    const BinMatrix& f0 = fam.member(0);
    const BinMatrix& f1 = fam.member(1);
    return (config_equal(f0, a) && config_equal(f1, b)) || (config_equal(f0, b) && config_equal(f1, a));
  };
  if (matches(ones(3), cycle_incidence(4)))
    gp.counterexample_note = "known counterexample: the true rate is m^(3/2)";
  else if (matches(ones(3), cycle_incidence(6)))
    gp.counterexample_note = "known counterexample: the true rate is m^(4/3)";
  return gp;
}

}  // namespace forbconf
