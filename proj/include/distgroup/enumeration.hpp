#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

#include "distgroup/cayley_table.hpp"
#include "distgroup/permutation.hpp"

namespace distgroup {

// Hard default cap for exhaustive search; the DISTGROUP_MAX_ORDER environment
// variable overrides it (values outside 1..31 are ignored).
inline int order_bound_from_env() {
  if (const char* s = std::getenv("DISTGROUP_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 31) return static_cast<int>(v);
  }
  return 12;
}

struct EnumerationOptions {
  int max_order = order_bound_from_env();
  int parallel_width = 0;  // 0 picks the hardware thread count
};

inline unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

namespace detail {

// Backtracking enumerator over idempotent tables with incremental latin
// masks and cell-level propagation of the distributive laws: whenever a law
// instance has all premise cells decided and a conclusion cell located, the
// two conclusion cells are equated, forcing values early.
struct Search {
  int n = 0;
  bool left_only = false;
  std::vector<int8_t> g;        // n*n grid, -1 = undecided
  std::vector<uint32_t> rowm, colm;
  std::vector<int> trail;       // assignment order; doubles as the work queue
  const std::vector<int>* cells = nullptr;  // branchable cells, row-major
  std::vector<std::vector<int>>* out = nullptr;

  void init(int order, bool lonly) {
    n = order;
    left_only = lonly;
    g.assign(static_cast<size_t>(n) * n, int8_t(-1));
    rowm.assign(n, 0);
    colm.assign(n, 0);
    trail.clear();
    for (int i = 0; i < n; ++i) {
      g[static_cast<size_t>(i) * n + i] = static_cast<int8_t>(i);
      rowm[i] |= 1u << i;
      colm[i] |= 1u << i;
    }
  }

  int cell(int r, int c) const { return g[static_cast<size_t>(r) * n + c]; }

  bool assign(int r, int c, int v) {
    int8_t& slot = g[static_cast<size_t>(r) * n + c];
    if (slot >= 0) return slot == v;
    uint32_t bit = 1u << v;
    if ((rowm[r] & bit) || (colm[c] & bit)) return false;
    slot = static_cast<int8_t>(v);
    rowm[r] |= bit;
    colm[c] |= bit;
    trail.push_back(r * n + c);
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      int p = trail.back();
      trail.pop_back();
      int r = p / n, c = p % n;
      uint32_t bit = 1u << g[p];
      g[p] = -1;
      rowm[r] &= ~bit;
      colm[c] &= ~bit;
    }
  }

  // Demand g[lr][lc] == g[rr][rc]; forces whichever side is still open.
  bool relate(int lr, int lc, int rr, int rc) {
    int lv = cell(lr, lc), rv = cell(rr, rc);
    if (lv >= 0) {
      if (rv >= 0) return lv == rv;
      return assign(rr, rc, lv);
    }
    if (rv >= 0) return assign(lr, lc, rv);
    return true;
  }

  // Revisit every law instance that the newly decided cell (r,c)=v touches,
  // in any of its roles: premise, or either side of the conclusion.
  // Left law (c0,a,b):  g[c0][g[a][b]] == g[g[c0][a]][g[c0][b]]
  // Right law (a,b,c0): g[g[a][b]][c0] == g[g[a][c0]][g[b][c0]]
  bool scan(int p) {
    int r = p / n, c = p % n, v = g[p];

    // left law, (r,c) as (a,b)
    for (int c0 = 0; c0 < n; ++c0) {
      int u = cell(c0, r), w = cell(c0, c);
      if (u >= 0 && w >= 0 && !relate(c0, v, u, w)) return false;
    }
    // left law, (r,c) as (c0,a)
    for (int b = 0; b < n; ++b) {
      int t = cell(c, b), w = cell(r, b);
      if (t >= 0 && w >= 0 && !relate(r, t, v, w)) return false;
    }
    // left law, (r,c) as (c0,b)
    for (int a = 0; a < n; ++a) {
      int t = cell(a, c), u = cell(r, a);
      if (t >= 0 && u >= 0 && !relate(r, t, u, v)) return false;
    }
    // left law, (r,c) as the conclusion cell (c0, a.b)
    for (int a = 0; a < n; ++a) {
      int u = cell(r, a);
      if (u < 0) continue;
      for (int b = 0; b < n; ++b) {
        if (cell(a, b) != c) continue;
        int w = cell(r, b);
        if (w >= 0 && !relate(r, c, u, w)) return false;
      }
    }
    // left law, (r,c) as the conclusion cell (c0.a, c0.b)
    for (int c0 = 0; c0 < n; ++c0) {
      int a = -1, b = -1;
      for (int x = 0; x < n; ++x) {
        int q = cell(c0, x);
        if (q == r) a = x;
        else if (q == c) b = x;
      }
      if (a < 0 || b < 0) continue;
      int t = cell(a, b);
      if (t >= 0 && !relate(c0, t, r, c)) return false;
    }

    if (left_only) return true;

    // right law, (r,c) as (a,b)
    for (int c0 = 0; c0 < n; ++c0) {
      int u = cell(r, c0), w = cell(c, c0);
      if (u >= 0 && w >= 0 && !relate(v, c0, u, w)) return false;
    }
    // right law, (r,c) as (a,c0)
    for (int b = 0; b < n; ++b) {
      int t = cell(r, b), w = cell(b, c);
      if (t >= 0 && w >= 0 && !relate(t, c, v, w)) return false;
    }
    // right law, (r,c) as (b,c0)
    for (int a = 0; a < n; ++a) {
      int t = cell(a, r), u = cell(a, c);
      if (t >= 0 && u >= 0 && !relate(t, c, u, v)) return false;
    }
    // right law, (r,c) as the conclusion cell (a.b, c0)
    for (int a = 0; a < n; ++a) {
      int u = cell(a, c);
      if (u < 0) continue;
      for (int b = 0; b < n; ++b) {
        if (cell(a, b) != r) continue;
        int w = cell(b, c);
        if (w >= 0 && !relate(r, c, u, w)) return false;
      }
    }
    // right law, (r,c) as the conclusion cell (a.c0, b.c0)
    for (int a = 0; a < n; ++a) {
      int c0 = -1;
      for (int x = 0; x < n; ++x)
        if (cell(a, x) == r) {
          c0 = x;
          break;
        }
      if (c0 < 0) continue;
      int b = -1;
      for (int y = 0; y < n; ++y)
        if (cell(y, c0) == c) {
          b = y;
          break;
        }
      if (b < 0) continue;
      int t = cell(a, b);
      if (t >= 0 && !relate(t, c0, r, c)) return false;
    }
    return true;
  }

  bool propagate(size_t from) {
    for (size_t q = from; q < trail.size(); ++q)
      if (!scan(trail[q])) return false;
    return true;
  }

  bool complete() const {
    int a = 0, b = 0, c = 0;
    for (a = 0; a < n; ++a)
      for (b = 0; b < n; ++b) {
        int ab = cell(a, b);
        for (c = 0; c < n; ++c) {
          if (cell(c, ab) != cell(cell(c, a), cell(c, b))) return false;
          if (!left_only && cell(cell(a, b), c) != cell(cell(a, c), cell(b, c)))
            return false;
        }
      }
    return true;
  }

  void emit() {
    if (!complete())
      throw theorem_violation("enumeration produced a non-conforming table");
    out->emplace_back(g.begin(), g.end());
  }

  // Branch on the first undecided listed cell, values ascending; propagated
  // cells are skipped, so emission order is lexicographic on the flat grid.
  void dfs(size_t ci) {
    while (ci < cells->size() && g[(*cells)[ci]] >= 0) ++ci;
    if (ci == cells->size()) {
      emit();
      return;
    }
    int p = (*cells)[ci];
    int r = p / n, c = p % n;
    uint32_t used = rowm[r] | colm[c];
    for (int v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      size_t mark = trail.size();
      if (assign(r, c, v) && propagate(mark)) dfs(ci + 1);
      undo(mark);
    }
  }
};

inline std::vector<std::vector<int>> run_enumeration(int n, bool left_only,
                                                     int width) {
  std::vector<int> all_cells, row0_cells;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) {
        all_cells.push_back(r * n + c);
        if (r == 0) row0_cells.push_back(r * n + c);
      }

  // Phase A: enumerate first-row completions as independent work units.
  std::vector<std::vector<int8_t>> tasks;
  {
    Search s;
    s.init(n, left_only);
    s.cells = &row0_cells;
    std::vector<std::vector<int>> dummy;
    s.out = &dummy;
    // capture the first row instead of emitting a table
    struct Collector {
      Search& s;
      std::vector<std::vector<int8_t>>& tasks;
      void dfs(size_t ci) {
        const auto& cl = *s.cells;
        while (ci < cl.size() && s.g[cl[ci]] >= 0) ++ci;
        if (ci == cl.size()) {
          tasks.emplace_back(s.g.begin() + 1, s.g.begin() + s.n);
          return;
        }
        int p = cl[ci];
        int r = p / s.n, c = p % s.n;
        uint32_t used = s.rowm[r] | s.colm[c];
        for (int v = 0; v < s.n; ++v) {
          if (used & (1u << v)) continue;
          size_t mark = s.trail.size();
          if (s.assign(r, c, v) && s.propagate(mark)) dfs(ci + 1);
          s.undo(mark);
        }
      }
    } collector{s, tasks};
    collector.dfs(0);
  }

  // Phase B: finish each first-row prefix; slots keep the global order.
  std::vector<std::vector<std::vector<int>>> slots(tasks.size());
  auto worker_body = [&](size_t ti) {
    Search s;
    s.init(n, left_only);
    s.cells = &all_cells;
    s.out = &slots[ti];
    bool alive = true;
    for (int j = 1; j < n && alive; ++j) {
      size_t mark = s.trail.size();
      alive = s.assign(0, j, tasks[ti][j - 1]) && s.propagate(mark);
    }
    if (alive) s.dfs(0);
  };

  if (width < 0) throw usage_error("parallel width must be nonnegative");
  size_t w = width == 0
                 ? std::max(1u, std::thread::hardware_concurrency())
                 : static_cast<size_t>(width);
  w = std::min(w, tasks.size());
  if (w <= 1) {
    for (size_t ti = 0; ti < tasks.size(); ++ti) worker_body(ti);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t i = 0; i < w; ++i)
      pool.emplace_back([&] {
        for (;;) {
          size_t ti = next.fetch_add(1);
          if (ti >= tasks.size()) break;
          worker_body(ti);
        }
      });
    for (auto& t : pool) t.join();
  }

  std::vector<std::vector<int>> flat;
  for (auto& slot : slots)
    for (auto& f : slot) flat.push_back(std::move(f));
  return flat;
}

}  // namespace detail

inline void enforce_order_bound(int n, const EnumerationOptions& opt) {
  if (n < 1) throw usage_error("order must be positive");
  if (n > opt.max_order)
    throw order_bound_error("order " + std::to_string(n) +
                            " exceeds the enumeration bound " +
                            std::to_string(opt.max_order));
}

// Every distributive group table on 0..n-1, each exactly once, ascending in
// the lexicographic order of flattened entries. The diagonal is pinned by
// idempotence, so distinct tables differ off the diagonal.
inline std::vector<CayleyTable> enumerate_all(
    int n, const EnumerationOptions& opt = {}) {
  enforce_order_bound(n, opt);
  auto flats = detail::run_enumeration(n, false, opt.parallel_width);
  std::vector<CayleyTable> out;
  out.reserve(flats.size());
  for (auto& f : flats) out.emplace_back(n, std::move(f));
  return out;
}

// Same search relaxed to the left law only (idempotent latin tables obeying
// c.(a.b) == (c.a).(c.b)); used to probe which conclusions need both laws.
inline std::vector<CayleyTable> enumerate_left_distributive(
    int n, const EnumerationOptions& opt = {}) {
  enforce_order_bound(n, opt);
  auto flats = detail::run_enumeration(n, true, opt.parallel_width);
  std::vector<CayleyTable> out;
  out.reserve(flats.size());
  for (auto& f : flats) out.emplace_back(n, std::move(f));
  return out;
}

// Lexicographically least relabeling of t, found by branch-and-bound over
// label assignments with first-row pruning against the best candidate.
struct CanonicalResult {
  CayleyTable table;
  Permutation witness;  // relabel(input, witness) == table
};

inline CanonicalResult canonical_form_with_witness(const CayleyTable& t) {
  int n = t.order();
  std::vector<int> lab(n, -1);   // original -> new label
  std::vector<int> pre(n, -1);   // new label -> original
  std::vector<int> best, best_lab;

  auto leaf = [&] {
    std::vector<int> img(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        img[static_cast<size_t>(lab[i]) * n + lab[j]] = lab[t.at(i, j)];
    if (best.empty() || img < best) {
      best = std::move(img);
      best_lab = lab;
    }
  };

  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      leaf();
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (lab[cand] >= 0) continue;
      lab[cand] = k;
      pre[k] = cand;
      bool prune = false;
      if (!best.empty()) {
        // compare the decided prefix of the new first row against the best
        for (int j = 1; j <= k; ++j) {
          int lv = lab[t.at(pre[0], pre[j])];
          int bv = best[j];
          if (lv >= 0) {
            if (lv < bv) break;
            if (lv > bv) {
              prune = true;
              break;
            }
          } else {
            // undecided labels will all be at least k+1
            if (k + 1 > bv) prune = true;
            break;
          }
        }
      }
      if (!prune) self(self, k + 1);
      lab[cand] = -1;
    }
    pre[k] = -1;
  };
  rec(rec, 0);

  return CanonicalResult{CayleyTable(n, std::move(best)),
                         Permutation(std::move(best_lab))};
}

inline CayleyTable canonical_form(const CayleyTable& t) {
  return canonical_form_with_witness(t).table;
}

// Witness permutation s with relabel(t1, s) == t2, when one exists.
inline std::optional<Permutation> are_isomorphic(const CayleyTable& t1,
                                                 const CayleyTable& t2) {
  if (t1.order() != t2.order()) return std::nullopt;
  auto c1 = canonical_form_with_witness(t1);
  auto c2 = canonical_form_with_witness(t2);
  if (!(c1.table == c2.table)) return std::nullopt;
  Permutation s = compose(c2.witness.inverse(), c1.witness);
  if (!(relabel(t1, s) == t2))
    throw theorem_violation("isomorphism witness failed verification");
  return s;
}

// All relabelings fixing t, ascending in image-list order.
inline std::vector<Permutation> automorphism_group(const CayleyTable& t) {
  if (!is_distributive_group(t))
    throw usage_error("automorphism search requires a distributive group");
  int n = t.order();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        ok = img[t.at(i, j)] == t.at(img[i], img[j]);
    if (ok) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Isomorphism classes of order n, by orbit sweep over the full enumeration.
struct ClassificationReport {
  int order;
  unsigned long long labeled_count;
  std::vector<CayleyTable> representatives;     // lex-least member per class
  std::vector<unsigned long long> class_sizes;  // labeled tables per class
  std::vector<unsigned long long> aut_sizes;    // n! / class size
};

inline ClassificationReport classify(int n, const EnumerationOptions& opt = {}) {
  auto tables = enumerate_all(n, opt);
  ClassificationReport rep;
  rep.order = n;
  rep.labeled_count = tables.size();
  std::vector<int> owner(tables.size(), -1);
  unsigned long long fact = factorial(n);
  std::vector<int> perm(n), scratch(static_cast<size_t>(n) * n);

  auto locate = [&](const std::vector<int>& flat) {
    auto it = std::lower_bound(
        tables.begin(), tables.end(), flat,
        [](const CayleyTable& a, const std::vector<int>& b) {
          return a.flat() < b;
        });
    if (it == tables.end() || !(it->flat() == flat))
      throw theorem_violation("relabeled table missing from the enumeration");
    return static_cast<size_t>(it - tables.begin());
  };

  for (size_t i = 0; i < tables.size(); ++i) {
    if (owner[i] >= 0) continue;
    int cls = static_cast<int>(rep.representatives.size());
    const std::vector<int>& src = tables[i].flat();
    unsigned long long orbit = 0;
    for (int x = 0; x < n; ++x) perm[x] = x;
    do {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          scratch[static_cast<size_t>(perm[a]) * n + perm[b]] =
              perm[src[static_cast<size_t>(a) * n + b]];
      size_t idx = locate(scratch);
      if (owner[idx] < 0) {
        owner[idx] = cls;
        ++orbit;
      } else if (owner[idx] != cls) {
        throw theorem_violation("orbits intersected during classification");
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (fact % orbit != 0)
      throw theorem_violation("orbit size does not divide n!");
    rep.representatives.push_back(tables[i]);
    rep.class_sizes.push_back(orbit);
    rep.aut_sizes.push_back(fact / orbit);
  }
  return rep;
}

// Independent recount for small orders: walk every way of giving each row a
// permutation that fixes the diagonal entry, then keep exactly the selections
// that form a distributive group. No pruning and no shared search machinery;
// columns and both laws are only filtered at the end of each selection.
inline unsigned long long oracle_count(int n) {
  if (n < 1) throw usage_error("order must be positive");
  if (n > 5) throw usage_error("oracle recount supports orders up to 5");
  // candidate rows per row index
  std::vector<std::vector<std::vector<int>>> rows(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
      if (v != i) others.push_back(v);
    std::sort(others.begin(), others.end());
    do {
      std::vector<int> row(n);
      row[i] = i;
      int k = 0;
      for (int c = 0; c < n; ++c)
        if (c != i) row[c] = others[k++];
      rows[i].push_back(row);
    } while (std::next_permutation(others.begin(), others.end()));
  }

  std::vector<size_t> pick(n, 0);
  std::vector<const std::vector<int>*> sel(n);
  unsigned long long count = 0;
  for (;;) {
    for (int i = 0; i < n; ++i) sel[i] = &rows[i][pick[i]];
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      uint32_t seen = 0;
      for (int r = 0; r < n && ok; ++r) {
        uint32_t bit = 1u << (*sel[r])[c];
        if (seen & bit) ok = false;
        seen |= bit;
      }
    }
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        int ab = (*sel[a])[b];
        for (int c = 0; c < n && ok; ++c) {
          if ((*sel[c])[ab] != (*sel[(*sel[c])[a]])[(*sel[c])[b]]) ok = false;
          else if ((*sel[ab])[c] != (*sel[(*sel[a])[c]])[(*sel[b])[c]])
            ok = false;
        }
      }
    if (ok) ++count;
    int i = n - 1;
    while (i >= 0 && ++pick[i] == rows[i].size()) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return count;
}

}  // namespace distgroup
