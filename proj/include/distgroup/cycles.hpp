#pragma once

#include <optional>
#include <vector>

#include "distgroup/cayley_table.hpp"
#include "distgroup/substructure.hpp"

namespace distgroup {

// Orbit of a start element under repeated left application of an anchor:
// b, a.b, a.(a.b), ... until it returns to b. The anchor itself never appears
// in the sequence, and anchor . last == first.
struct CycleRecord {
  int anchor;
  int start;
  std::vector<int> sequence;  // starts at `start`
  int degree;                 // sequence length
};

inline CycleRecord l_cycle(const CayleyTable& t, int a, int b) {
  if (a < 0 || a >= t.order() || b < 0 || b >= t.order())
    throw usage_error("element out of range");
  if (a == b) throw usage_error("cycle anchor and start must differ");
  CycleRecord rec;
  rec.anchor = a;
  rec.start = b;
  int x = b;
  do {
    rec.sequence.push_back(x);
    x = t.at(a, x);
    if (static_cast<int>(rec.sequence.size()) > t.order())
      throw usage_error("cycle does not return to its start");
  } while (x != b);
  rec.degree = static_cast<int>(rec.sequence.size());
  return rec;
}

inline int l_degree(const CayleyTable& t, int a, int b) {
  return l_cycle(t, a, b).degree;
}

// Same walk on the mirrored table: b, b.a, (b.a).a, ...
inline int r_degree(const CayleyTable& t, int a, int b) {
  return l_cycle(opposite(t), a, b).degree;
}

struct DegreeInvariant {
  std::optional<int> degree;  // common degree, or the minimum when mixed
  bool uniform;
  bool simple;
};

// For simple tables every anchored cycle has one common degree; that is
// verified and returned. Non-simple tables may mix degrees, in which case the
// minimum is reported with the uniform flag cleared.
inline DegreeInvariant cycle_degree_invariant(const CayleyTable& t) {
  int n = t.order();
  std::vector<int> whole(n);
  for (int i = 0; i < n; ++i) whole[i] = i;
  bool simple = is_simple(t, whole);
  DegreeInvariant inv{std::nullopt, true, simple};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int d = l_degree(t, a, b);
      if (!inv.degree) {
        inv.degree = d;
      } else if (d != *inv.degree) {
        inv.uniform = false;
        if (d < *inv.degree) inv.degree = d;
      }
    }
  if (simple && !inv.uniform)
    throw theorem_violation("simple table with non-uniform cycle degrees");
  return inv;
}

// Cycles anchored at a, covering everything but a, smallest start first.
inline std::vector<CycleRecord> cycle_partition(const CayleyTable& t, int a) {
  if (a < 0 || a >= t.order()) throw usage_error("element out of range");
  int n = t.order();
  std::vector<char> covered(n, 0);
  covered[a] = 1;
  std::vector<CycleRecord> out;
  for (int b = 0; b < n; ++b) {
    if (covered[b]) continue;
    auto rec = l_cycle(t, a, b);
    for (int x : rec.sequence) {
      if (covered[x])
        throw theorem_violation("anchored cycles overlap");
      covered[x] = 1;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

struct ModularCongruenceRecord {
  int order;                  // N
  std::optional<int> degree;  // g; absent only for the one-element table
  bool holds;                 // N == 1 mod g, with the partition verified
};

// Simple tables only: the common cycle degree g divides N-1, witnessed by the
// anchored partitions (each anchor splits the other N-1 elements into cycles
// of size exactly g).
inline ModularCongruenceRecord verify_mod_theorem(const CayleyTable& t) {
  int n = t.order();
  std::vector<int> whole(n);
  for (int i = 0; i < n; ++i) whole[i] = i;
  if (!is_simple(t, whole))
    throw usage_error("modular congruence check requires a simple table");
  if (n == 1) return ModularCongruenceRecord{1, std::nullopt, true};
  auto inv = cycle_degree_invariant(t);
  int g = *inv.degree;
  bool holds = (n - 1) % g == 0;
  for (int a = 0; a < n && holds; ++a) {
    auto part = cycle_partition(t, a);
    if (part.size() != static_cast<size_t>((n - 1) / g)) holds = false;
    for (const auto& c : part)
      if (c.degree != g) holds = false;
  }
  return ModularCongruenceRecord{n, g, holds};
}

}  // namespace distgroup
