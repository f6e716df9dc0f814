#include <doctest.h>

#include "forbconf/catalog.hpp"
#include "forbconf/containment.hpp"
#include "forbconf/growth.hpp"
#include "forbconf/search.hpp"
#include "oracles.hpp"

using namespace forbconf;

namespace {

Family fam_of(std::initializer_list<int> qs) {
  Family f;
  for (int q : qs) f.add(q_config(q), "Q" + std::to_string(q));
  return f;
}

}  // namespace

TEST_CASE("constant classification") {
  for (auto [a, b] : {std::pair<int, int>{1, 5}, {5, 6}, {1, 2}, {2, 4}}) {
    const Family fam = fam_of({a, b});
    const GrowthClass g = classify_constant(fam);
    CHECK(g.kind == GrowthKind::Constant);
    REQUIRE(g.hits.size() == 3);
    const BinMatrix targets[3] = {identity(g.ell), identity_complement(g.ell), triangular(g.ell)};
    for (int i = 0; i < 3; ++i)
      CHECK(verify_embedding(targets[i], fam.member(g.hits[static_cast<size_t>(i)].member),
                             g.hits[static_cast<size_t>(i)].emb));
  }

  const GrowthClass g6 = classify_constant(fam_of({6}));
  CHECK(g6.kind == GrowthKind::AtLeastLinear);
  CHECK(g6.avoiding_factor == "Ic");
  // the named factor really avoids the family at ell and ell+1
  CHECK_FALSE(contains_config(identity_complement(g6.ell), q_config(6)));
  CHECK_FALSE(contains_config(identity_complement(g6.ell + 1), q_config(6)));
}

TEST_CASE("adorn") {
  // one weight-2 column: a single edge plus the spare tail vertex
  const SimpleGraph g1 = adorn(ones(2));
  CHECK(g1.vertex_count() == 3);
  CHECK(g1.edges() == std::vector<std::pair<int, int>>{{1, 2}});

  // one weight-1 column: a pendant edge
  const SimpleGraph g2 = adorn(BinMatrix(2, {0b10}));
  CHECK(g2.edge_count() == 1);
  CHECK(contains_config(graph_incidence(g2), BinMatrix(2, {0b10})));

  // one zero column: a tree edge on the spare vertices
  const SimpleGraph g3 = adorn(zeros(2, 1));
  CHECK(g3.vertex_count() == 4);
  CHECK(contains_config(graph_incidence(g3), zeros(2, 1)));

  // postcondition over the catalogue patterns that qualify
  for (int qi : {1, 3, 4, 6, 7, 8, 9}) {
    const BinMatrix f = q_config(qi);
    const SimpleGraph g = adorn(f);
    CHECK(contains_config(graph_incidence(g), f));
  }
  CHECK_THROWS_AS(adorn(q_config(2)), Error);         // column sums 2 but repeated
  CHECK_THROWS_AS(adorn(all_ones(3, 1)), Error);      // column sum 3
}

TEST_CASE("ones-3 classifier") {
  CHECK(classify_ones3_family(cycle_incidence(3)).kind == GrowthKind::Quadratic);
  CHECK(classify_ones3_family(cycle_incidence(3)).cycle_length == 3);
  CHECK(classify_ones3_family(graph_incidence(SimpleGraph::path(3))).kind == GrowthKind::LinearUpper);
  const GrowthClass c4 = classify_ones3_family(cycle_incidence(4));
  CHECK(c4.kind == GrowthKind::Subquadratic);
  CHECK_FALSE(c4.bipartition.empty());
  CHECK(classify_ones3_family(multiply(2, ones(2))).kind == GrowthKind::Quadratic);
  CHECK_THROWS_AS(classify_ones3_family(ones(3)), Error);
}

TEST_CASE("exact extremal edge counts") {
  const SimpleGraph triangle = SimpleGraph::cycle(3);
  CHECK(ex_exact(4, triangle) == 4);
  CHECK(ex_exact(5, triangle) == 6);
  CHECK(ex_exact(3, triangle) == 2);
  CHECK(ex_exact(5, SimpleGraph::single_edge()) == 0);
  CHECK(ex_exact(4, SimpleGraph::path(3)) == 2);
  CHECK(ex_exact(4, SimpleGraph::cycle(4)) == 4);
  // the forbidden graph may not even fit
  CHECK(ex_exact(3, SimpleGraph::cycle(4)) == 3);
  CHECK_THROWS_AS(ex_exact(9, triangle), Error);

  // whole-space reference at small orders
  for (int m = 2; m <= 5; ++m) {
    for (const SimpleGraph& h : {SimpleGraph::single_edge(), SimpleGraph::path(3), SimpleGraph::cycle(3)}) {
      CHECK(ex_exact(m, h) == oracles::brute_ex(m, h));
    }
  }
  // parallel kernel agreement
  CHECK(ex_exact(6, triangle, 4) == ex_exact(6, triangle, 1));
}

TEST_CASE("extendgraph identity") {
  for (int m = 3; m <= 4; ++m) {
    CHECK(verify_extendgraph(m, SimpleGraph::single_edge()));
    CHECK(verify_extendgraph(m, SimpleGraph::path(3)));
    CHECK(verify_extendgraph(m, SimpleGraph::cycle(3)));
    CHECK(verify_extendgraph(m, SimpleGraph::cycle(4)));
  }
}

TEST_CASE("pair growth table") {
  CHECK(pair_growth(1, 4).kind == GrowthKind::Quadratic);
  CHECK(pair_growth(8, 9).kind == GrowthKind::Linear);
  CHECK(pair_growth(1, 2).kind == GrowthKind::Constant);
  CHECK(pair_growth(2, 1).kind == GrowthKind::Constant);
  CHECK_THROWS_AS(pair_growth(1, 1), Error);
  CHECK_THROWS_AS(pair_growth(0, 5), Error);

  // quadratic entries name an avoiding product; verify each certificate
  for (int i = 1; i <= 9; ++i)
    for (int j = i + 1; j <= 9; ++j) {
      const GrowthClass g = pair_growth(i, j);
      if (g.kind == GrowthKind::Quadratic) {
        Family fam = fam_of({i, j});
        CHECK(avoids_family(make_named(g.reason), fam));
      }
    }
}

TEST_CASE("pair table agrees with the constant classifier") {
  for (int i = 1; i <= 9; ++i)
    for (int j = i + 1; j <= 9; ++j) {
      const bool table_constant = pair_growth(i, j).kind == GrowthKind::Constant;
      const bool classified = classify_constant(fam_of({i, j})).kind == GrowthKind::Constant;
      CHECK(table_constant == classified);
    }
}

TEST_CASE("family growth over subsets") {
  CHECK(family_growth({6, 7, 9}).kind == GrowthKind::Linear);
  CHECK(family_growth({3}).kind == GrowthKind::Quadratic);
  CHECK(family_growth({1, 4, 6}).kind == GrowthKind::Quadratic);
  CHECK(family_growth({2, 5, 7}).kind == GrowthKind::Quadratic);
  CHECK(family_growth({1, 2}).kind == GrowthKind::Constant);
  CHECK(family_growth({1, 2, 3}).kind == GrowthKind::Constant);  // contains a constant pair
  CHECK(family_growth({3, 6}).kind == GrowthKind::Linear);
  CHECK(family_growth({3, 6, 9}).kind == GrowthKind::Linear);
  CHECK_THROWS_AS(family_growth({}), Error);
  CHECK_THROWS_AS(family_growth({10}), Error);

  // pairwise view matches the table everywhere
  for (int i = 1; i <= 9; ++i)
    for (int j = i + 1; j <= 9; ++j)
      CHECK(family_growth({i, j}).kind == pair_growth(i, j).kind);
}

TEST_CASE("constant families respect the width bound") {
  // constant pairs stay within l+q-2 at the sizes the search can reach,
  // taking the tightest matching block parameters for the zero/one pair
  const int v5 = forb_exact(5, fam_of({1, 2})).forb_value;
  const int v6 = forb_exact(6, fam_of({1, 2})).forb_value;
  CHECK(v5 >= v6);  // eventual settling, not monotone before it
  CHECK(forb_exact(7, fam_of({1, 2})).forb_value == 2);
}
