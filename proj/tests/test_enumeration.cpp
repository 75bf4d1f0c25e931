#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>

#include "distgroup/distgroup.hpp"
#include "tables.hpp"

using namespace distgroup;

namespace {

// restores the order-bound variable no matter how a section exits
struct EnvGuard {
  std::string name;
  std::string old;
  bool had;
  explicit EnvGuard(const char* n) : name(n) {
    const char* v = std::getenv(n);
    had = v != nullptr;
    if (had) old = v;
  }
  ~EnvGuard() {
    if (had)
      setenv(name.c_str(), old.c_str(), 1);
    else
      unsetenv(name.c_str());
  }
};

unsigned long long labeled_count(int n) { return enumerate_all(n).size(); }

}  // namespace

TEST_CASE("labeled census for the desk orders") {
  REQUIRE(labeled_count(1) == 1);
  REQUIRE(labeled_count(2) == 0);
  REQUIRE(labeled_count(3) == 1);
  REQUIRE(labeled_count(4) == 2);
  REQUIRE(labeled_count(5) == 18);
  REQUIRE(labeled_count(6) == 0);
}

TEST_CASE("enumeration emits sorted, valid, duplicate-free tables") {
  for (int n : {3, 4, 5}) {
    auto tables = enumerate_all(n);
    for (const auto& t : tables) {
      REQUIRE(t.order() == n);
      REQUIRE(is_distributive_group(t));
      REQUIRE(check_idempotent(t));
      if (n > 1) REQUIRE_FALSE(has_unit(t));
    }
    for (size_t i = 1; i < tables.size(); ++i)
      REQUIRE(tables[i - 1] < tables[i]);
  }
}

TEST_CASE("independent recount agrees with the optimized enumerator") {
  for (int n = 1; n <= 5; ++n) REQUIRE(oracle_count(n) == labeled_count(n));
  REQUIRE_THROWS_AS(oracle_count(6), usage_error);
}

TEST_CASE("classification by orbit sweep") {
  auto c3 = classify(3);
  REQUIRE(c3.representatives.size() == 1);
  REQUIRE(c3.representatives[0] == tables::order3());
  REQUIRE(c3.class_sizes == std::vector<unsigned long long>{1});
  REQUIRE(c3.aut_sizes == std::vector<unsigned long long>{6});

  auto c4 = classify(4);
  REQUIRE(c4.representatives.size() == 1);
  REQUIRE(c4.representatives[0] == tables::order4());
  REQUIRE(c4.class_sizes == std::vector<unsigned long long>{2});
  REQUIRE(c4.aut_sizes == std::vector<unsigned long long>{12});

  auto c5 = classify(5);
  REQUIRE(c5.representatives.size() == 3);
  REQUIRE(c5.labeled_count == 18);
  for (size_t k = 0; k < 3; ++k) {
    REQUIRE(c5.class_sizes[k] == 6);
    REQUIRE(c5.aut_sizes[k] == 20);
  }
  // the commutative member is the modular table
  bool found_modular = false;
  for (const auto& r : c5.representatives)
    found_modular = found_modular || are_isomorphic(r, modular_group(5)).has_value();
  REQUIRE(found_modular);

  auto c6 = classify(6);
  REQUIRE(c6.representatives.empty());
  REQUIRE(c6.labeled_count == 0);
}

TEST_CASE("orbit sizes satisfy the counting identity") {
  for (int n = 1; n <= 5; ++n) {
    auto c = classify(n);
    unsigned long long sum = 0;
    for (size_t k = 0; k < c.representatives.size(); ++k) {
      REQUIRE(factorial(n) % c.aut_sizes[k] == 0);
      REQUIRE(c.class_sizes[k] * c.aut_sizes[k] == factorial(n));
      sum += c.class_sizes[k];
    }
    REQUIRE(sum == c.labeled_count);
  }
}

TEST_CASE("canonical form equals the brute-force minimum over relabelings") {
  for (int n : {3, 4, 5}) {
    auto tables = enumerate_all(n);
    std::vector<int> img(n);
    for (const auto& t : tables) {
      auto canon = canonical_form_with_witness(t);
      REQUIRE(relabel(t, canon.witness) == canon.table);
      for (int i = 0; i < n; ++i) img[i] = i;
      CayleyTable best = relabel(t, Permutation(img));
      do {
        auto r = relabel(t, Permutation(img));
        if (r < best) best = r;
      } while (std::next_permutation(img.begin(), img.end()));
      REQUIRE(canon.table == best);
    }
  }
}

TEST_CASE("canonical representatives are the least orbit members") {
  auto c5 = classify(5);
  auto all5 = enumerate_all(5);
  for (const auto& rep : c5.representatives) {
    REQUIRE(canonical_form(rep) == rep);
    REQUIRE(std::find(all5.begin(), all5.end(), rep) != all5.end());
  }
}

TEST_CASE("isomorphism witnesses verify by construction") {
  auto t = tables::order4();
  auto r = relabel(t, Permutation({2, 0, 3, 1}));
  auto w = are_isomorphic(t, r);
  REQUIRE(w.has_value());
  REQUIRE(relabel(t, *w) == r);

  auto c5 = classify(5);
  REQUIRE_FALSE(are_isomorphic(c5.representatives[0], c5.representatives[1]));
  REQUIRE_FALSE(are_isomorphic(tables::order3(), tables::order4()));
}

TEST_CASE("automorphism groups of the small tables") {
  REQUIRE(automorphism_group(tables::order3()).size() == 6);
  auto aut4 = automorphism_group(tables::order4());
  REQUIRE(aut4.size() == 12);
  for (const auto& p : aut4) REQUIRE(is_automorphism(tables::order4(), p));
  // closed under composition
  for (const auto& p : aut4)
    for (const auto& q : aut4) {
      auto pq = compose(p, q);
      REQUIRE(std::find(aut4.begin(), aut4.end(), pq) != aut4.end());
    }
  REQUIRE(automorphism_group(modular_group(5)).size() == 20);
  REQUIRE_THROWS_AS(automorphism_group(tables::xor4()), usage_error);
}

TEST_CASE("one-sided enumeration contains the two-sided tables") {
  REQUIRE(enumerate_left_distributive(3).size() == 1);
  REQUIRE(enumerate_left_distributive(4).size() == 2);
  auto left5 = enumerate_left_distributive(5);
  REQUIRE(left5.size() == 18);
  for (const auto& t : left5) {
    REQUIRE(check_latin(t));
    REQUIRE_FALSE(left_distributive_defect(t).has_value());
  }
  auto both5 = enumerate_all(5);
  for (const auto& t : both5)
    REQUIRE(std::find(left5.begin(), left5.end(), t) != left5.end());
}

TEST_CASE("order bound limits the search") {
  EnumerationOptions opt;
  opt.max_order = 4;
  REQUIRE_THROWS_AS(enumerate_all(5, opt), order_bound_error);
  REQUIRE_THROWS_AS(classify(5, opt), order_bound_error);
  REQUIRE(enumerate_all(4, opt).size() == 2);

  EnvGuard guard("DISTGROUP_MAX_ORDER");
  setenv("DISTGROUP_MAX_ORDER", "3", 1);
  REQUIRE(order_bound_from_env() == 3);
  REQUIRE(EnumerationOptions{}.max_order == 3);
  REQUIRE_THROWS_AS(enumerate_all(4), order_bound_error);
  setenv("DISTGROUP_MAX_ORDER", "200", 1);
  REQUIRE(order_bound_from_env() == 12);
  setenv("DISTGROUP_MAX_ORDER", "junk", 1);
  REQUIRE(order_bound_from_env() == 12);
  unsetenv("DISTGROUP_MAX_ORDER");
  REQUIRE(order_bound_from_env() == 12);
}

TEST_CASE("worker width never changes the emitted sequence") {
  EnumerationOptions one, three, wide;
  one.parallel_width = 1;
  three.parallel_width = 3;
  wide.parallel_width = 16;
  auto a = enumerate_all(5, one);
  auto b = enumerate_all(5, three);
  auto c = enumerate_all(5, wide);
  REQUIRE(a == b);
  REQUIRE(b == c);
  auto c5 = classify(5, three);
  REQUIRE(c5.representatives.size() == 3);
}
