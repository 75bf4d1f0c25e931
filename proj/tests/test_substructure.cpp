#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <variant>

#include "distgroup/distgroup.hpp"
#include "tables.hpp"

using namespace distgroup;

namespace {

CayleyTable product9() {
  return direct_product(tables::order3(), tables::order3());
}

std::vector<int> everything(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  return w;
}

}  // namespace

TEST_CASE("closure and generated subgroups") {
  auto t9 = product9();
  REQUIRE(closure_members(t9, {0}) == std::vector<int>{0});
  REQUIRE(closure_members(t9, {0, 1}) == std::vector<int>{0, 1, 2});
  REQUIRE(generated_subgroup(t9, {0, 3}).members == std::vector<int>{0, 3, 6});
  REQUIRE(generated_subgroup(t9, {0, 4}).members == std::vector<int>{0, 4, 8});
  // any two points share a line; a third point off it spans everything
  REQUIRE(generated_subgroup(t9, {1, 3}).members == std::vector<int>{1, 3, 8});
  REQUIRE(generated_subgroup(t9, {0, 1, 3}).members.size() == 9);
  REQUIRE_THROWS_AS(closure_members(t9, {0, 9}), usage_error);
}

TEST_CASE("subset closure and induced tables") {
  auto t9 = product9();
  REQUIRE(subset_is_closed(t9, {0, 1, 2}));
  REQUIRE_FALSE(subset_is_closed(t9, {0, 1}));
  auto line = induced_table(t9, {0, 3, 6});
  REQUIRE(line.order() == 3);
  REQUIRE(is_distributive_group(line));
  REQUIRE(are_isomorphic(line, tables::order3()).has_value());
  REQUIRE_THROWS_AS(induced_table(t9, {0, 1}), usage_error);
}

TEST_CASE("subgroup census of the small tables") {
  auto s3 = all_subgroups(tables::order3());
  REQUIRE(s3.size() == 4);
  REQUIRE(s3.front().members == std::vector<int>{0});
  REQUIRE(s3.back().members == std::vector<int>{0, 1, 2});
  for (const auto& s : s3) REQUIRE(s.closed);

  REQUIRE(all_subgroups(tables::order4()).size() == 5);
  REQUIRE(all_subgroups(CayleyTable(1, {0})).size() == 1);

  auto s9 = all_subgroups(product9());
  REQUIRE(s9.size() == 22);
  size_t singles = 0, lines = 0, wholes = 0;
  for (const auto& s : s9) {
    if (s.members.size() == 1) ++singles;
    if (s.members.size() == 3) ++lines;
    if (s.members.size() == 9) ++wholes;
  }
  REQUIRE(singles == 9);
  REQUIRE(lines == 12);
  REQUIRE(wholes == 1);
}

TEST_CASE("simplicity is generation by every inner pair") {
  REQUIRE(is_simple(tables::order3(), everything(3)));
  REQUIRE(is_simple(tables::order4(), everything(4)));
  REQUIRE(is_simple(modular_group(5), everything(5)));
  auto t9 = product9();
  REQUIRE_FALSE(is_simple(t9, everything(9)));
  REQUIRE(is_simple(t9, {0, 1, 2}));
  REQUIRE(is_simple(t9, {0}));
}

TEST_CASE("the subgroup counting identity holds with uniform h") {
  auto t9 = product9();
  auto subs = all_subgroups(t9);
  auto r1 = verify_counting(t9, 1, subs);
  REQUIRE(r1.n_subgroups == 9);
  REQUIRE(r1.h == 1);
  REQUIRE(r1.holds);
  auto r3 = verify_counting(t9, 3, subs);
  REQUIRE(r3.n_subgroups == 12);
  REQUIRE(r3.h == 4);
  REQUIRE(r3.holds);
  auto r9 = verify_counting(t9, 9);
  REQUIRE(r9.n_subgroups == 1);
  REQUIRE(r9.holds);
  // no subgroup of that size: identity holds vacuously with h = 0
  auto r2 = verify_counting(t9, 2, subs);
  REQUIRE(r2.n_subgroups == 0);
  REQUIRE(r2.holds);
  REQUIRE_THROWS_AS(verify_counting(t9, 0, subs), usage_error);
  REQUIRE_THROWS_AS(verify_counting(t9, 10, subs), usage_error);
}

TEST_CASE("commutants collect the commuting elements") {
  // commutative: everything commutes
  REQUIRE(commutant(tables::order3(), 0).members == everything(3));
  // 2x+4y mod 5: only the element itself commutes
  auto a52 = affine_modular(5, 2);
  for (int a = 0; a < 5; ++a) {
    auto c = commutant(a52, a);
    REQUIRE(c.members == std::vector<int>{a});
    REQUIRE(c.closed);
  }
  REQUIRE_THROWS_AS(commutant(a52, 5), usage_error);
}

TEST_CASE("degree subgroups are the r-fold return sets") {
  auto m5 = modular_group(5);
  REQUIRE(degree_subgroup(m5, 0, 1).members == std::vector<int>{0});
  REQUIRE(degree_subgroup(m5, 0, 2).members == std::vector<int>{0});
  REQUIRE(degree_subgroup(m5, 0, 4).members == everything(5));
  auto t9 = product9();
  // left application by 0 squares to the identity on each line through 0
  REQUIRE(degree_subgroup(t9, 0, 2).members == everything(9));
  REQUIRE(degree_subgroup(t9, 0, 3).members == std::vector<int>{0});
  REQUIRE_THROWS_AS(degree_subgroup(m5, 0, 0), usage_error);
}

TEST_CASE("complex products collapse duplicates and sort") {
  auto t9 = product9();
  REQUIRE(complex_product(t9, {0, 1, 2}, {0, 1, 2}) == std::vector<int>{0, 1, 2});
  REQUIRE(complex_product(t9, {0, 1, 2}, {3}).size() == 3);
  REQUIRE(complex_product(t9, {0}, {0}) == std::vector<int>{0});
}

TEST_CASE("coset decomposition partitions by distinct translates") {
  auto t9 = product9();

  auto res = coset_decomposition(t9, {0, 1, 2});
  auto* d = std::get_if<CosetDecomposition>(&res);
  REQUIRE(d != nullptr);
  REQUIRE(d->cosets.size() == 3);
  REQUIRE(d->cosets[0] == std::vector<int>{0, 1, 2});
  REQUIRE(d->representatives[0] == 0);
  std::vector<char> seen(9, 0);
  for (size_t k = 0; k < d->cosets.size(); ++k) {
    REQUIRE(d->cosets[k].size() == 3);
    REQUIRE(d->cosets[k] ==
            complex_product(t9, d->subgroup, {d->representatives[k]}));
    for (int x : d->cosets[k]) {
      REQUIRE_FALSE(seen[x]);
      seen[x] = 1;
    }
  }

  // singleton: one coset per element
  auto rs = coset_decomposition(t9, {4});
  auto* ds = std::get_if<CosetDecomposition>(&rs);
  REQUIRE(ds != nullptr);
  REQUIRE(ds->cosets.size() == 9);
  REQUIRE(ds->cosets[0] == std::vector<int>{4});

  // the whole table: a single coset
  auto rw = coset_decomposition(t9, everything(9));
  auto* dw = std::get_if<CosetDecomposition>(&rw);
  REQUIRE(dw != nullptr);
  REQUIRE(dw->cosets.size() == 1);

  REQUIRE_THROWS_AS(coset_decomposition(t9, {0, 1}), usage_error);
  REQUIRE_THROWS_AS(coset_decomposition(t9, {}), usage_error);
}

TEST_CASE("partially overlapping translates are reported as data") {
  auto t = tables::blocks10();
  REQUIRE(subset_is_closed(t, {0, 1, 2}));
  auto res = coset_decomposition(t, {0, 1, 2});
  auto* o = std::get_if<CosetOverlap>(&res);
  REQUIRE(o != nullptr);
  REQUIRE(o->existing_coset == 1);
  REQUIRE(o->offending_rep == 4);
  REQUIRE(o->shared_element == 6);
}

TEST_CASE("quotient by a block system reproduces the base table") {
  auto t9 = product9();
  auto q = subgroup_quotient_group(t9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  REQUIRE(q == tables::order3());

  // a partial system completes itself
  auto q2 = subgroup_quotient_group(t9, {{0, 1, 2}, {3, 4, 5}});
  REQUIRE(q2 == tables::order3());

  // singleton blocks give the table back
  auto q3 = subgroup_quotient_group(tables::order3(), {{0}, {1}});
  REQUIRE(q3 == tables::order3());

  REQUIRE_THROWS_AS(subgroup_quotient_group(t9, {}), usage_error);
  REQUIRE_THROWS_AS(subgroup_quotient_group(t9, {{0, 1, 2}, {3, 4}}),
                    usage_error);
  REQUIRE_THROWS_AS(subgroup_quotient_group(t9, {{0, 1}, {3, 4}}), usage_error);
  REQUIRE_THROWS_AS(subgroup_quotient_group(t9, {{0, 1, 2}, {0, 1, 2}}),
                    usage_error);
  REQUIRE_THROWS_AS(subgroup_quotient_group(t9, {{0, 1, 2}, {0, 3, 6}}),
                    usage_error);
}

TEST_CASE("an unabsorbable block product is an inconsistency") {
  auto t = tables::blocks10();
  REQUIRE(subset_is_closed(t, {3, 4, 5}));
  REQUIRE_THROWS_AS(subgroup_quotient_group(t, {{0, 1, 2}, {3, 4, 5}}),
                    inconsistency_error);
}

TEST_CASE("return pairs and the distinguished predicate") {
  auto t3 = tables::order3();
  REQUIRE(right_return_pair(t3) == std::make_pair(0, 1));
  REQUIRE(left_return_pair(t3).has_value());
  REQUIRE_FALSE(is_distinguished(t3));

  REQUIRE(is_distinguished(modular_group(5)));
  REQUIRE(is_distinguished(CayleyTable(1, {0})));

  // 2x+4y mod 5: only the left pattern returns
  auto a52 = affine_modular(5, 2);
  REQUIRE_FALSE(right_return_pair(a52).has_value());
  REQUIRE_FALSE(mixed_return_pair(a52).has_value());
  REQUIRE(left_return_pair(a52).has_value());
  REQUIRE_FALSE(is_distinguished(a52));
}

TEST_CASE("coset pair products have size v on the product table") {
  auto t9 = product9();
  std::vector<int> a{0, 1, 2};
  auto rec = h_pq(t9, a, 3, 6);
  REQUIRE_FALSE(rec.v_squared);
  REQUIRE(rec.set == std::vector<int>{0, 1, 2});
  for (int p = 0; p < 9; ++p)
    for (int q = 0; q < 9; ++q) {
      auto r = h_pq(t9, a, p, q);
      REQUIRE(r.set.size() == 3);
      REQUIRE_FALSE(r.v_squared);
    }
  REQUIRE_THROWS_AS(h_pq(t9, a, 9, 0), usage_error);
}

TEST_CASE("maximal chains descend to a simple subalgebra") {
  auto c3 = maximal_chain(tables::order3());
  REQUIRE(c3.size() == 1);
  REQUIRE(c3[0].members == everything(3));

  auto c1 = maximal_chain(CayleyTable(1, {0}));
  REQUIRE(c1.size() == 1);

  auto c9 = maximal_chain(product9());
  REQUIRE(c9.size() == 2);
  REQUIRE(c9[0].members == everything(9));
  REQUIRE(c9[1].members.size() == 3);
  REQUIRE(is_simple(product9(), c9[1].members));

  REQUIRE(maximal_chain(modular_group(5)).size() == 1);
}
