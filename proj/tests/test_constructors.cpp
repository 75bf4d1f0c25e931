#include <catch2/catch_amalgamated.hpp>

#include "distgroup/distgroup.hpp"
#include "tables.hpp"

using namespace distgroup;

namespace {

template <class E, class F>
std::string message_of(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("abelian group tables validate the group laws") {
  REQUIRE_THROWS_AS(AbelianGroupTable(2, {0, 1, 1, 0, 0, 0}), usage_error);
  // not commutative
  REQUIRE_THROWS_AS(AbelianGroupTable(2, {0, 1, 0, 1}), usage_error);
  // latin but no identity
  REQUIRE_THROWS_AS(AbelianGroupTable(3, {1, 0, 2, 0, 2, 1, 2, 1, 0}),
                    usage_error);
  auto z4 = AbelianGroupTable::cyclic(4);
  REQUIRE(z4.identity() == 0);
  REQUIRE(z4.at(3, 3) == 2);
  auto klein = AbelianGroupTable::direct_sum(AbelianGroupTable::cyclic(2),
                                             AbelianGroupTable::cyclic(2));
  REQUIRE(klein.order() == 4);
  REQUIRE(klein.at(1, 1) == 0);
  REQUIRE(klein.at(1, 2) == 3);
}

TEST_CASE("abelian powers reduce any integer exponent") {
  auto z5 = AbelianGroupTable::cyclic(5);
  REQUIRE(abelian_power(z5, 2, 0) == 0);
  REQUIRE(abelian_power(z5, 2, 1) == 2);
  REQUIRE(abelian_power(z5, 2, 3) == 1);
  REQUIRE(abelian_power(z5, 2, -1) == 3);
  REQUIRE(abelian_power(z5, 2, -7) == abelian_power(z5, 2, 3));
  REQUIRE_THROWS_AS(abelian_power(z5, 5, 1), usage_error);
}

TEST_CASE("the modular construction reproduces the small tables") {
  REQUIRE(modular_group(1) == CayleyTable(1, {0}));
  REQUIRE(modular_group(3) == tables::order3());
  auto m5 = modular_group(5);
  REQUIRE(m5.at(1, 2) == 4);
  REQUIRE(is_distributive_group(m5));
  REQUIRE(is_commutative(m5));
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) REQUIRE(m5.at(i, k) == (3 * i + 3 * k) % 5);
}

TEST_CASE("the modular construction rejects even orders") {
  REQUIRE(message_of<usage_error>([] { modular_group(4); }) ==
          "order must be odd");
  REQUIRE_THROWS_AS(modular_group(0), usage_error);
  REQUIRE_THROWS_AS(modular_group(-3), usage_error);
}

TEST_CASE("affine tables cover the generalized multiplier range") {
  auto a72 = affine_modular(7, 2);
  REQUIRE(a72.at(0, 1) == 6);
  REQUIRE(is_distributive_group(a72));
  REQUIRE_FALSE(is_commutative(a72));
  REQUIRE(affine_modular(5, 3) == modular_group(5));
  REQUIRE(affine_modular(1, 1) == CayleyTable(1, {0}));
}

TEST_CASE("affine coprimality failures name the broken condition") {
  REQUIRE(message_of<usage_error>([] { affine_modular(6, 2); }) ==
          "alpha must be coprime with the modulus");
  REQUIRE(message_of<usage_error>([] { affine_modular(6, 3); }) ==
          "alpha must be coprime with the modulus");
  REQUIRE(message_of<usage_error>([] { affine_modular(5, 1); }) ==
          "alpha-1 must be coprime with the modulus");
  REQUIRE(message_of<usage_error>([] { affine_modular(6, 5); }) ==
          "alpha-1 must be coprime with the modulus");
  REQUIRE(message_of<usage_error>([] { affine_modular(9, 4); }) ==
          "alpha-1 must be coprime with the modulus");
}

TEST_CASE("from_abelian over a cyclic group matches the affine table") {
  for (auto [m, alpha] : {std::pair{5, 2}, {7, 3}, {9, 2}, {11, 7}}) {
    auto g = AbelianGroupTable::cyclic(m);
    REQUIRE(from_abelian(g, alpha) == affine_modular(m, alpha));
  }
}

TEST_CASE("from_abelian accepts non-cyclic groups") {
  auto g = AbelianGroupTable::direct_sum(AbelianGroupTable::cyclic(3),
                                         AbelianGroupTable::cyclic(3));
  auto t = from_abelian(g, 2);
  REQUIRE(t.order() == 9);
  REQUIRE(is_distributive_group(t));
  REQUIRE(is_commutative(t));
  // x^2 pairs with y^(-1) componentwise
  REQUIRE(t.at(1, 0) == 2);
  REQUIRE(t.at(0, 1) == 2);
  REQUIRE_THROWS_AS(from_abelian(g, 3), usage_error);
  REQUIRE_THROWS_AS(from_abelian(AbelianGroupTable::cyclic(4), 3), usage_error);
}

TEST_CASE("direct products multiply componentwise") {
  auto t9 = direct_product(tables::order3(), tables::order3());
  REQUIRE(t9.order() == 9);
  REQUIRE(is_distributive_group(t9));
  auto t3 = tables::order3();
  for (int i1 = 0; i1 < 3; ++i1)
    for (int k1 = 0; k1 < 3; ++k1)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int k2 = 0; k2 < 3; ++k2)
          REQUIRE(t9.at(i1 * 3 + k1, i2 * 3 + k2) ==
                  t3.at(i1, i2) * 3 + t3.at(k1, k2));

  auto t12 = direct_product(tables::order3(), tables::order4());
  REQUIRE(t12.order() == 12);
  REQUIRE(is_distributive_group(t12));
  REQUIRE_THROWS_AS(direct_product(tables::order3(), tables::xor4()),
                    usage_error);
}

TEST_CASE("medial tables need not be distributive") {
  auto t = medial_affine(5, 2, 2);
  REQUIRE(check_latin(t));
  REQUIRE(check_medial(t));
  REQUIRE_FALSE(check_idempotent(t));
  REQUIRE_FALSE(is_distributive_group(t));
  REQUIRE_THROWS_AS(medial_affine(6, 2, 3), usage_error);

  // alpha + beta = 1 lands back on the distributive family
  REQUIRE(medial_affine(5, 2, 4) == affine_modular(5, 2));
  REQUIRE(check_medial(tables::order3()));
  REQUIRE(check_medial(tables::order4()));
  REQUIRE(check_medial(tables::xor4()));
}

TEST_CASE("large modular tables stay within budget") {
  auto t = modular_group(101);
  REQUIRE(t.at(0, 1) == 51);
  REQUIRE(is_distributive_group(t));
}
