#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "distgroup/cayley_table.hpp"
#include "distgroup/check_result.hpp"
#include "distgroup/enumeration.hpp"

namespace distgroup {

// A subset of a table's elements, with its closure status under the product.
struct SubsetAlgebra {
  int parent_order = 0;
  std::vector<int> members;  // sorted ascending
  bool closed = false;
};

inline bool subset_is_closed(const CayleyTable& t, const std::vector<int>& members) {
  std::vector<char> in(t.order(), 0);
  for (int x : members) in[x] = 1;
  for (int a : members)
    for (int b : members)
      if (!in[t.at(a, b)]) return false;
  return true;
}

inline std::vector<int> closure_members(const CayleyTable& t,
                                        const std::vector<int>& seed) {
  std::vector<char> in(t.order(), 0);
  std::vector<int> q;
  for (int x : seed) {
    if (x < 0 || x >= t.order()) throw usage_error("seed element out of range");
    if (!in[x]) {
      in[x] = 1;
      q.push_back(x);
    }
  }
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      int p1 = t.at(q[i], q[j]);
      if (!in[p1]) {
        in[p1] = 1;
        q.push_back(p1);
      }
      int p2 = t.at(q[j], q[i]);
      if (!in[p2]) {
        in[p2] = 1;
        q.push_back(p2);
      }
    }
  std::sort(q.begin(), q.end());
  return q;
}

inline SubsetAlgebra generated_subgroup(const CayleyTable& t,
                                        const std::vector<int>& seed) {
  if (seed.empty()) throw usage_error("seed must be nonempty");
  return SubsetAlgebra{t.order(), closure_members(t, seed), true};
}

// The table restricted to a closed subset, relabeled to 0..v-1 in member order.
inline CayleyTable induced_table(const CayleyTable& t,
                                 const std::vector<int>& members) {
  if (members.empty()) throw usage_error("subset must be nonempty");
  std::vector<int> pos(t.order(), -1);
  for (size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
  int v = static_cast<int>(members.size());
  std::vector<int> e(static_cast<size_t>(v) * v);
  for (int i = 0; i < v; ++i)
    for (int k = 0; k < v; ++k) {
      int p = pos[t.at(members[i], members[k])];
      if (p < 0) throw usage_error("subset is not closed");
      e[static_cast<size_t>(i) * v + k] = p;
    }
  return CayleyTable(v, std::move(e));
}

// Every closed subalgebra. Closures of all seeds of size at most two are
// collected, then the family is saturated under pairwise joins (closure of
// unions); for distributive groups this reaches every subgroup, since any
// subgroup is the join of the singletons it contains.
inline std::vector<SubsetAlgebra> all_subgroups(const CayleyTable& t) {
  if (!is_distributive_group(t))
    throw usage_error("subgroup search requires a distributive group");
  int n = t.order();
  std::set<std::vector<int>> family;
  for (int x = 0; x < n; ++x)
    family.insert(closure_members(t, {x}));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      family.insert(closure_members(t, {x, y}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(family.begin(), family.end());
    for (size_t i = 0; i < snapshot.size() && !grew; ++i)
      for (size_t j = i + 1; j < snapshot.size() && !grew; ++j) {
        std::vector<int> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        auto joined = closure_members(t, seed);
        if (family.insert(joined).second) grew = true;
      }
  }
  std::vector<SubsetAlgebra> out;
  for (const auto& m : family) out.push_back(SubsetAlgebra{n, m, true});
  std::sort(out.begin(), out.end(),
            [](const SubsetAlgebra& a, const SubsetAlgebra& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              return a.members < b.members;
            });
  return out;
}

// A subalgebra is simple when it has no proper subalgebra of size above one,
// i.e. every two-element seed inside generates the whole thing.
inline bool is_simple(const CayleyTable& t, const std::vector<int>& members) {
  if (!subset_is_closed(t, members)) throw usage_error("subset is not closed");
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (closure_members(t, {members[i], members[j]}) != members) return false;
  return true;
}

// Elements commuting with a.
inline SubsetAlgebra commutant(const CayleyTable& t, int a) {
  if (a < 0 || a >= t.order()) throw usage_error("element out of range");
  std::vector<int> m;
  for (int x = 0; x < t.order(); ++x)
    if (t.at(a, x) == t.at(x, a)) m.push_back(x);
  return SubsetAlgebra{t.order(), m, subset_is_closed(t, m)};
}

// Fixed points of r-fold left application of a: x with a.(a.(...(a.x))) == x.
inline SubsetAlgebra degree_subgroup(const CayleyTable& t, int a, int r) {
  if (a < 0 || a >= t.order()) throw usage_error("element out of range");
  if (r < 1) throw usage_error("degree must be positive");
  std::vector<int> m;
  for (int x = 0; x < t.order(); ++x) {
    int y = x;
    for (int i = 0; i < r; ++i) y = t.at(a, y);
    if (y == x) m.push_back(x);
  }
  return SubsetAlgebra{t.order(), m, subset_is_closed(t, m)};
}

// Set product {a.b : a in A, b in B}, sorted, duplicates collapsed.
inline std::vector<int> complex_product(const CayleyTable& t,
                                        const std::vector<int>& a,
                                        const std::vector<int>& b) {
  std::vector<char> in(t.order(), 0);
  for (int x : a)
    for (int y : b) in[t.at(x, y)] = 1;
  std::vector<int> out;
  for (int z = 0; z < t.order(); ++z)
    if (in[z]) out.push_back(z);
  return out;
}

struct CosetDecomposition {
  std::vector<int> subgroup;
  std::vector<std::vector<int>> cosets;     // cosets[0] is the subgroup itself
  std::vector<int> representatives;         // cosets[k] == subgroup . rep[k]
};

// Greedy decomposition found two right translates of the subgroup that
// intersect without being equal.
struct CosetOverlap {
  int existing_coset;   // index into the cosets built so far
  int offending_rep;    // the representative whose coset collided
  int shared_element;
};

using CosetResult = std::variant<CosetDecomposition, CosetOverlap>;

// Collect the distinct right translates A.p, p ascending, starting from the
// subgroup itself (A.a == A for a inside A). A translate need not contain its
// own representative, so the sweep runs over all elements and drops exact
// repeats. For a simple subgroup of a distributive group the distinct
// translates partition the elements; a partial overlap is returned as data,
// not as an error, because non-simple subgroups genuinely produce them.
inline CosetResult coset_decomposition(const CayleyTable& t,
                                       const std::vector<int>& subgroup) {
  if (subgroup.empty()) throw usage_error("subgroup must be nonempty");
  if (!subset_is_closed(t, subgroup)) throw usage_error("subset is not closed");
  int n = t.order();
  std::vector<int> owner(n, -1);
  CosetDecomposition d;
  d.subgroup = subgroup;
  auto add = [&](std::vector<int> c, int p) {
    int idx = static_cast<int>(d.cosets.size());
    for (int x : c) owner[x] = idx;
    d.cosets.push_back(std::move(c));
    d.representatives.push_back(p);
  };
  add(complex_product(t, subgroup, {subgroup.front()}), subgroup.front());
  for (int p = 0; p < n; ++p) {
    auto c = complex_product(t, subgroup, {p});
    if (std::find(d.cosets.begin(), d.cosets.end(), c) != d.cosets.end())
      continue;
    for (int x : c)
      if (owner[x] >= 0)
        return CosetOverlap{owner[x], p, x};
    add(std::move(c), p);
  }
  for (int x = 0; x < n; ++x)
    if (owner[x] < 0) throw theorem_violation("translates do not cover the table");
  return d;
}

// N*h == n_subgroups*v, where h counts the order-v subgroups through a fixed
// element; h must come out the same for every element.
struct CountingRecord {
  int order;                         // N
  int subgroup_size;                 // v
  unsigned long long n_subgroups;
  unsigned long long h;
  bool holds;
};

inline CountingRecord verify_counting(const CayleyTable& t, int v,
                                      const std::vector<SubsetAlgebra>& subgroups) {
  int n = t.order();
  if (v < 1 || v > n) throw usage_error("subgroup size out of range");
  std::vector<unsigned long long> through(n, 0);
  unsigned long long count = 0;
  for (const auto& s : subgroups) {
    if (static_cast<int>(s.members.size()) != v) continue;
    ++count;
    for (int x : s.members) ++through[x];
  }
  bool uniform = true;
  for (int x = 1; x < n; ++x)
    if (through[x] != through[0]) uniform = false;
  unsigned long long h = through[0];
  bool holds = uniform && static_cast<unsigned long long>(n) * h ==
                              count * static_cast<unsigned long long>(v);
  return CountingRecord{n, v, count, h, holds};
}

inline CountingRecord verify_counting(const CayleyTable& t, int v) {
  return verify_counting(t, v, all_subgroups(t));
}

// Quotient of t by a system of pairwise disjoint, pairwise isomorphic closed
// subalgebras. The family is completed under complex products; the result
// composes family indices (sorted by smallest member). Products that escape
// the family's shape signal a hypothesis violation.
inline CayleyTable subgroup_quotient_group(const CayleyTable& t,
                                           std::vector<std::vector<int>> system) {
  if (system.empty()) throw usage_error("system must be nonempty");
  size_t v = system[0].size();
  for (auto& m : system) {
    std::sort(m.begin(), m.end());
    if (m.empty()) throw usage_error("system members must be nonempty");
    if (m.size() != v) throw usage_error("system members differ in size");
    if (!subset_is_closed(t, m)) throw usage_error("system member is not closed");
  }
  for (size_t i = 0; i < system.size(); ++i)
    for (size_t j = i + 1; j < system.size(); ++j) {
      if (system[i] == system[j]) throw usage_error("system members repeat");
      if (!are_isomorphic(induced_table(t, system[i]),
                          induced_table(t, system[j])))
        throw usage_error("system members are not isomorphic");
    }

  auto disjoint_from_all = [&](const std::vector<int>& c,
                               const std::vector<std::vector<int>>& fam,
                               size_t skip) {
    std::vector<char> in(t.order(), 0);
    for (int x : c) in[x] = 1;
    for (size_t i = 0; i < fam.size(); ++i) {
      if (i == skip) continue;
      for (int x : fam[i])
        if (in[x]) return false;
    }
    return true;
  };
  for (size_t i = 0; i < system.size(); ++i)
    if (!disjoint_from_all(system[i], system, i))
      throw usage_error("system members are not pairwise disjoint");

  // complete the family under products, re-sweeping until nothing new appears
  std::vector<std::vector<int>> fam = system;
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < fam.size(); ++i)
      for (size_t k = 0; k < fam.size(); ++k) {
        auto p = complex_product(t, fam[i], fam[k]);
        if (std::find(fam.begin(), fam.end(), p) != fam.end()) continue;
        if (p.size() != v)
          throw inconsistency_error(
              "family completion produced a product of size " +
              std::to_string(p.size()) + ", expected " + std::to_string(v));
        if (!disjoint_from_all(p, fam, fam.size()))
          throw inconsistency_error(
              "family completion produced a set overlapping an existing member");
        if ((fam.size() + 1) * v > static_cast<size_t>(t.order()))
          throw inconsistency_error("family completion exceeds the universe");
        fam.push_back(std::move(p));
        grew = true;
      }
  }

  std::sort(fam.begin(), fam.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  int q = static_cast<int>(fam.size());
  std::vector<int> e(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int k = 0; k < q; ++k) {
      auto p = complex_product(t, fam[i], fam[k]);
      auto it = std::find(fam.begin(), fam.end(), p);
      if (it == fam.end())
        throw inconsistency_error("family is not closed after completion");
      e[static_cast<size_t>(i) * q + k] = static_cast<int>(it - fam.begin());
    }
  CayleyTable gamma(q, std::move(e));
  if (!is_distributive_group(gamma))
    throw theorem_violation("quotient table is not a distributive group");
  return gamma;
}

// Return pairs: x != y whose combinations step back to x.
inline std::optional<std::pair<int, int>> right_return_pair(const CayleyTable& t) {
  for (int x = 0; x < t.order(); ++x)
    for (int y = 0; y < t.order(); ++y)
      if (x != y && t.at(t.at(x, y), y) == x) return std::make_pair(x, y);
  return std::nullopt;
}

inline std::optional<std::pair<int, int>> mixed_return_pair(const CayleyTable& t) {
  for (int x = 0; x < t.order(); ++x)
    for (int y = 0; y < t.order(); ++y)
      if (x != y && t.at(t.at(y, x), y) == x) return std::make_pair(x, y);
  return std::nullopt;
}

inline std::optional<std::pair<int, int>> left_return_pair(const CayleyTable& t) {
  for (int x = 0; x < t.order(); ++x)
    for (int y = 0; y < t.order(); ++y)
      if (x != y && t.at(y, t.at(y, x)) == x) return std::make_pair(x, y);
  return std::nullopt;
}

// No element returns to its start under any of the three two-step patterns.
inline bool is_distinguished(const CayleyTable& t) {
  return !right_return_pair(t) && !mixed_return_pair(t) && !left_return_pair(t);
}

// (A.p).(A.q) for a simple subalgebra A: by theorem its size is either v or
// v squared; anything else is a violation worth raising.
struct HpqRecord {
  std::vector<int> set;
  bool v_squared;  // false: size v, true: size v squared
};

inline HpqRecord h_pq(const CayleyTable& t, const std::vector<int>& a, int p,
                      int q) {
  if (p < 0 || p >= t.order() || q < 0 || q >= t.order())
    throw usage_error("element out of range");
  auto ap = complex_product(t, a, {p});
  auto aq = complex_product(t, a, {q});
  auto h = complex_product(t, ap, aq);
  size_t v = a.size();
  if (h.size() == v) return HpqRecord{std::move(h), false};
  if (h.size() == v * v) return HpqRecord{std::move(h), true};
  throw theorem_violation("coset product has size " + std::to_string(h.size()) +
                          ", expected " + std::to_string(v) + " or " +
                          std::to_string(v * v));
}

// Descend from the whole table through maximal proper subalgebras (largest
// size, ties broken by member order) until a simple one is reached. Each step
// is verified to admit nothing strictly between.
inline std::vector<SubsetAlgebra> maximal_chain(const CayleyTable& t) {
  auto subs = all_subgroups(t);
  std::vector<int> whole(t.order());
  for (int i = 0; i < t.order(); ++i) whole[i] = i;
  std::vector<SubsetAlgebra> chain{SubsetAlgebra{t.order(), whole, true}};
  for (;;) {
    const auto& cur = chain.back().members;
    const std::vector<int>* next = nullptr;
    for (const auto& s : subs) {
      if (s.members.size() <= 1 || s.members.size() >= cur.size()) continue;
      if (!std::includes(cur.begin(), cur.end(), s.members.begin(),
                         s.members.end()))
        continue;
      if (!next || s.members.size() > next->size() ||
          (s.members.size() == next->size() && s.members < *next))
        next = &s.members;
    }
    if (!next) break;
    for (const auto& s : subs)
      if (s.members.size() > next->size() && s.members.size() < cur.size() &&
          std::includes(cur.begin(), cur.end(), s.members.begin(), s.members.end()) &&
          std::includes(s.members.begin(), s.members.end(), next->begin(), next->end()))
        throw theorem_violation("chain step admits an intermediate subalgebra");
    chain.push_back(SubsetAlgebra{t.order(), *next, true});
  }
  return chain;
}

}  // namespace distgroup
