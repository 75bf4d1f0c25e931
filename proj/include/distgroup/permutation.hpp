#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "distgroup/cayley_table.hpp"

namespace distgroup {

// Bijection on 0..n-1, stored as the image list.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    int n = static_cast<int>(img_.size());
    if (n < 1) throw usage_error("permutation must act on at least one point");
    std::vector<char> seen(n, 0);
    for (int v : img_) {
      if (v < 0 || v >= n || seen[v])
        throw usage_error("image list is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const {
    if (x < 0 || x >= degree()) throw usage_error("point out of range");
    return img_[x];
  }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 0; x < degree(); ++x) inv[img_[x]] = x;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

 private:
  std::vector<int> img_;
};

// f after g: x -> f(g(x)).
inline Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree())
    throw usage_error("permutation degrees differ");
  std::vector<int> img(f.degree());
  for (int x = 0; x < f.degree(); ++x) img[x] = f(g(x));
  return Permutation(std::move(img));
}

// Disjoint-cycle text, fixed points omitted unless the map is the identity.
inline std::string cycle_notation(const Permutation& p) {
  int n = p.degree();
  std::vector<char> done(n, 0);
  std::string out;
  for (int x = 0; x < n; ++x) {
    if (done[x] || p(x) == x) continue;
    out += '(';
    int y = x;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(y);
      done[y] = 1;
      y = p(y);
      first = false;
    } while (y != x);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

// x -> x.p, as a permutation. Demands a latin table.
inline Permutation right_translation(const CayleyTable& t, int p) {
  if (p < 0 || p >= t.order()) throw usage_error("element out of range");
  if (!check_latin(t)) throw usage_error("translations need a latin table");
  std::vector<int> img(t.order());
  for (int x = 0; x < t.order(); ++x) img[x] = t.at(x, p);
  return Permutation(std::move(img));
}

// x -> p.x, as a permutation. Demands a latin table.
inline Permutation left_translation(const CayleyTable& t, int p) {
  if (p < 0 || p >= t.order()) throw usage_error("element out of range");
  if (!check_latin(t)) throw usage_error("translations need a latin table");
  std::vector<int> img(t.order());
  for (int x = 0; x < t.order(); ++x) img[x] = t.at(p, x);
  return Permutation(std::move(img));
}

inline bool is_automorphism(const CayleyTable& t, const Permutation& s) {
  if (s.degree() != t.order())
    throw usage_error("permutation degree does not match table order");
  int n = t.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s(t.at(i, j)) != t.at(s(i), s(j))) return false;
  return true;
}

// Rename elements through s: result[s(i)][s(j)] = s(t[i][j]).
inline CayleyTable relabel(const CayleyTable& t, const Permutation& s) {
  if (s.degree() != t.order())
    throw usage_error("permutation degree does not match table order");
  int n = t.order();
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e[static_cast<size_t>(s(i)) * n + s(j)] = s(t.at(i, j));
  return CayleyTable(n, std::move(e));
}

}  // namespace distgroup
