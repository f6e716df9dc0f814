#include <doctest.h>

#include <random>

#include "forbconf/catalog.hpp"
#include "forbconf/containment.hpp"
#include "forbconf/products.hpp"
#include "oracles.hpp"

using namespace forbconf;

TEST_CASE("containment with witness") {
  const auto emb = has_config(identity(4), q_config(1));
  REQUIRE(emb.has_value());
  CHECK(verify_embedding(identity(4), q_config(1), *emb));
  // canonical witness: least rows, then least matching columns
  CHECK(emb->row_map == std::vector<int>{1, 2});
  CHECK(emb->col_map == std::vector<int>{3, 4});
}

TEST_CASE("avoidance facts about two-fold products") {
  const BinMatrix txt = product(triangular(4), triangular(4));
  CHECK_FALSE(has_config(txt, q_config(6)).has_value());
  CHECK_FALSE(contains_config(product(identity(8), identity_complement(8)), q_config(3)));

  Family f257;
  f257.add(q_config(2));
  f257.add(q_config(5));
  f257.add(q_config(7));
  CHECK(avoids_family(product(identity(4), identity(4)), f257));

  Family f69;
  f69.add(q_config(6));
  f69.add(q_config(9));
  CHECK(avoids_family(product(identity_complement(4), triangular(4)), f69));

  Family empty;
  CHECK(avoids_family(identity(3), empty));
}

TEST_CASE("configuration equality") {
  CHECK(config_equal(q_config(8), complement(q_config(8))));
  CHECK_FALSE(config_equal(q_config(1), q_config(2)));
  for (int i = 1; i <= 9; ++i) CHECK(config_equal(q_config(i), q_config(i)));
  const BinMatrix ixi = product(identity(2), identity(2));
  CHECK(contains_config(ixi, cycle_incidence(4)));
  CHECK(contains_config(cycle_incidence(4), ixi));
  CHECK(config_equal(ixi, cycle_incidence(4)));
}

TEST_CASE("reflexivity and transitivity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const BinMatrix a = oracles::random_matrix(rng, 6, 8);
    const auto e = has_config(a, a);
    REQUIRE(e.has_value());
    CHECK(verify_embedding(a, a, *e));
  }
  // transitivity over catalogued triples
  std::vector<BinMatrix> pool;
  for (int i = 1; i <= 9; ++i) pool.push_back(q_config(i));
  pool.push_back(identity(4));
  pool.push_back(triangular(4));
  pool.push_back(identity_complement(4));
  pool.push_back(product(identity(3), triangular(3)));
  int checked = 0;
  for (const auto& f : pool)
    for (const auto& g : pool)
      for (const auto& a : pool) {
        if (contains_config(g, f) && contains_config(a, g)) {
          CHECK(contains_config(a, f));
          ++checked;
        }
      }
  CHECK(checked > 0);
}

TEST_CASE("complement equivariance") {
  std::mt19937 rng(8);
  for (int i = 0; i < 200; ++i) {
    const BinMatrix a = oracles::random_matrix(rng, 5, 7);
    const BinMatrix f = oracles::random_matrix(rng, 3, 4);
    CHECK(contains_config(a, f) == contains_config(complement(a), complement(f)));
  }
}

TEST_CASE("one-fold monotonicity") {
  std::vector<BinMatrix> pats;
  for (int i = 1; i <= 9; ++i) pats.push_back(q_config(i));
  for (const auto& f : pats) {
    const int l = f.rows() + f.ncols();
    for (int n = l; n <= l + 2; ++n) {
      CHECK(contains_config(identity(l), f) == contains_config(identity(n), f));
      CHECK(contains_config(identity_complement(l), f) == contains_config(identity_complement(n), f));
      CHECK(contains_config(triangular(l), f) == contains_config(triangular(n), f));
    }
  }
}

TEST_CASE("agreement with the naive oracle") {
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    const BinMatrix f = oracles::random_matrix(rng, 3, 4);
    const BinMatrix a = oracles::random_matrix(rng, 4, 8);
    const bool fast = contains_config(a, f);
    const bool slow = oracles::naive_contains(a, f);
    CHECK(fast == slow);
    if (fast) {
      const auto emb = has_config(a, f);
      REQUIRE(emb.has_value());
      CHECK(verify_embedding(a, f, *emb));
    }
  }
  // exhaustive micro-sweep on two-row patterns against three-row targets
  for (Column f1 = 0; f1 < 4; ++f1)
    for (Column f2 = 0; f2 < 4; ++f2) {
      const BinMatrix f(2, {f1, f2});
      for (unsigned mask = 0; mask < 256; mask += 7) {
        std::vector<Column> cols;
        for (int c = 0; c < 8; ++c)
          if (mask & (1u << c)) cols.push_back(static_cast<Column>(c));
        const BinMatrix a(3, cols);
        CHECK(contains_config(a, f) == oracles::naive_contains(a, f));
      }
    }
  // wider samples: both sides up to four rows and six columns
  for (int i = 0; i < 150; ++i) {
    std::uniform_int_distribution<int> rows(1, 4);
    std::uniform_int_distribution<int> ncols(0, 6);
    const int mf = rows(rng), ma = rows(rng);
    std::uniform_int_distribution<Column> fv(0, (Column{1} << mf) - 1);
    std::uniform_int_distribution<Column> av(0, (Column{1} << ma) - 1);
    std::vector<Column> fc, ac;
    for (int j = ncols(rng); j > 0; --j) fc.push_back(fv(rng));
    for (int j = ncols(rng); j > 0; --j) ac.push_back(av(rng));
    const BinMatrix f(mf, fc), a(ma, ac);
    CHECK(contains_config(a, f) == oracles::naive_contains(a, f));
  }
}

TEST_CASE("patterns with repeated columns") {
  const BinMatrix twice = multiply(2, ones(2));
  CHECK(contains_config(all_ones(2, 2), twice));
  CHECK_FALSE(contains_config(identity(4), twice));
  CHECK(contains_config(multiply(3, BinMatrix(1, {1})), multiply(2, BinMatrix(1, {1}))));
  CHECK_FALSE(contains_config(BinMatrix(1, {1, 0}), multiply(2, BinMatrix(1, {1}))));
}
