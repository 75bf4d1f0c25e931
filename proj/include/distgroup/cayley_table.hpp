#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distgroup {

// Caller errors: bad arguments, malformed input, violated call contracts.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed table text; carries the 1-based line number.
struct parse_error : usage_error {
  int line;
  parse_error(const std::string& msg, int line_no)
      : usage_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

// Requested order exceeds the configured enumeration bound.
struct order_bound_error : usage_error {
  using usage_error::usage_error;
};

// A structural law that should hold by theorem failed on concrete data.
struct theorem_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Completion of a subgroup family ran out of room or produced a set that is
// not a family member; signals a hypothesis violation in the input system.
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Square composition table over elements 0..n-1. Only closure is structural;
// latin and distributive properties are checked, not assumed, so tables that
// violate them are representable as counterexamples.
class CayleyTable {
 public:
  CayleyTable(int order, std::vector<int> entries)
      : n_(order), e_(std::move(entries)) {
    if (n_ < 1) throw usage_error("order must be positive");
    if (e_.size() != static_cast<size_t>(n_) * n_)
      throw usage_error("entry grid size does not match order");
    for (int v : e_)
      if (v < 0 || v >= n_)
        throw usage_error("entry out of range 0.." + std::to_string(n_ - 1));
  }

  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return CayleyTable(static_cast<int>(rows.size()), std::move(flat));
  }

  int order() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<int>& flat() const { return e_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

  // Lexicographic on (order, flattened entries); total order used for
  // deterministic sorting and canonical-form comparison.
  friend bool operator<(const CayleyTable& a, const CayleyTable& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.e_ < b.e_;
  }

 private:
  int n_;
  std::vector<int> e_;
};

inline int compose(const CayleyTable& t, int a, int b) {
  if (a < 0 || a >= t.order() || b < 0 || b >= t.order())
    throw usage_error("element out of range");
  return t.at(a, b);
}

// Witness for a latin-property failure.
struct LatinDefect {
  bool in_row;   // false: in a column
  int index;     // which row/column
  int value;     // the repeated value
  int first;     // first position carrying it
  int second;    // second position carrying it
};

inline std::optional<LatinDefect> latin_defect(const CayleyTable& t) {
  int n = t.order();
  std::vector<int> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int j = 0; j < n; ++j) {
      int v = t.at(i, j);
      if (seen[v] >= 0) return LatinDefect{true, i, v, seen[v], j};
      seen[v] = j;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int i = 0; i < n; ++i) {
      int v = t.at(i, j);
      if (seen[v] >= 0) return LatinDefect{false, j, v, seen[v], i};
      seen[v] = j;
    }
  }
  return std::nullopt;
}

inline bool check_latin(const CayleyTable& t) { return !latin_defect(t); }

// Witness triple for a distributivity failure.
struct LawDefect {
  int a, b, c;
};

// (a.b).c == (a.c).(b.c)
inline std::optional<LawDefect> right_distributive_defect(const CayleyTable& t) {
  int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = t.at(a, b);
      for (int c = 0; c < n; ++c)
        if (t.at(ab, c) != t.at(t.at(a, c), t.at(b, c)))
          return LawDefect{a, b, c};
    }
  return std::nullopt;
}

// c.(a.b) == (c.a).(c.b)
inline std::optional<LawDefect> left_distributive_defect(const CayleyTable& t) {
  int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = t.at(a, b);
      for (int c = 0; c < n; ++c)
        if (t.at(c, ab) != t.at(t.at(c, a), t.at(c, b)))
          return LawDefect{a, b, c};
    }
  return std::nullopt;
}

struct DistributivityResult {
  bool left;
  bool right;
};

inline DistributivityResult check_distributive(const CayleyTable& t) {
  return {!left_distributive_defect(t), !right_distributive_defect(t)};
}

inline bool is_distributive_group(const CayleyTable& t) {
  if (latin_defect(t)) return false;
  auto d = check_distributive(t);
  return d.left && d.right;
}

// Derived law: in a distributive group every element is its own square.
inline bool check_idempotent(const CayleyTable& t) {
  for (int i = 0; i < t.order(); ++i)
    if (t.at(i, i) != i) return false;
  return true;
}

inline bool is_commutative(const CayleyTable& t) {
  int n = t.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t.at(i, j) != t.at(j, i)) return false;
  return true;
}

// True iff some e satisfies e.x == x.e == x for all x.
inline bool has_unit(const CayleyTable& t) {
  int n = t.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t.at(e, x) == x && t.at(x, e) == x;
    if (ok) return true;
  }
  return false;
}

// Transposed table; swaps the roles of the two distributive laws.
inline CayleyTable opposite(const CayleyTable& t) {
  int n = t.order();
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e[static_cast<size_t>(j) * n + i] = t.at(i, j);
  return CayleyTable(n, std::move(e));
}

// Second-order operation i*k = (i.k).k. Well-behaved (latin) only when no
// off-diagonal pair returns, i.e. (i.k).k != i for all i != k; the result is
// produced either way and the first violating pair is reported.
struct DerivedOperation {
  CayleyTable table;
  bool precondition_held;
  std::optional<std::pair<int, int>> violation;  // first (i, k), i != k, with (i.k).k == i
};

inline DerivedOperation derived_operation(const CayleyTable& t) {
  int n = t.order();
  std::vector<int> e(static_cast<size_t>(n) * n);
  std::optional<std::pair<int, int>> bad;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int v = t.at(t.at(i, k), k);
      e[static_cast<size_t>(i) * n + k] = v;
      if (i != k && v == i && !bad) bad = std::make_pair(i, k);
    }
  return DerivedOperation{CayleyTable(n, std::move(e)), !bad, bad};
}

// Text format: first significant line is the order n, then n lines of n
// entries each. Lines whose first non-blank character is '#' are comments.
inline CayleyTable parse_table(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  int rows_read = 0;
  std::vector<int> entries;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    std::string rest;
    if (n < 0) {
      if (!(ls >> n) || n < 1)
        throw parse_error("expected a positive order", lineno);
      if (ls >> rest) throw parse_error("unexpected token after order", lineno);
      entries.reserve(static_cast<size_t>(n) * n);
      continue;
    }
    if (rows_read == n)
      throw parse_error("unexpected content after the table", lineno);
    for (int j = 0; j < n; ++j) {
      int v;
      if (!(ls >> v))
        throw parse_error("expected " + std::to_string(n) + " row entries",
                          lineno);
      if (v < 0 || v >= n)
        throw parse_error("entry " + std::to_string(v) + " out of range 0.." +
                              std::to_string(n - 1),
                          lineno);
      entries.push_back(v);
    }
    if (ls >> rest)
      throw parse_error("unexpected token after row entries", lineno);
    ++rows_read;
  }
  if (n < 0) throw parse_error("empty input, expected an order line", lineno ? lineno : 1);
  if (rows_read != n)
    throw parse_error("expected " + std::to_string(n) + " rows, got " +
                          std::to_string(rows_read),
                      lineno ? lineno : 1);
  return CayleyTable(n, std::move(entries));
}

inline CayleyTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

inline void emit_table(std::ostream& out, const CayleyTable& t) {
  int n = t.order();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << t.at(i, j);
    }
    out << '\n';
  }
}

inline std::string emit_table(const CayleyTable& t) {
  std::ostringstream out;
  emit_table(out, t);
  return out.str();
}

}  // namespace distgroup
