#pragma once

#include <numeric>
#include <vector>

#include "distgroup/cayley_table.hpp"

namespace distgroup {

// Abelian group table, validated exhaustively on construction
// (commutativity, associativity, identity, inverses).
class AbelianGroupTable {
 public:
  AbelianGroupTable(int order, std::vector<int> entries)
      : n_(order), e_(std::move(entries)) {
    if (n_ < 1) throw usage_error("order must be positive");
    if (e_.size() != static_cast<size_t>(n_) * n_)
      throw usage_error("entry grid size does not match order");
    for (int v : e_)
      if (v < 0 || v >= n_) throw usage_error("entry out of range");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) throw usage_error("table is not commutative");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (at(at(i, j), k) != at(i, at(j, k)))
            throw usage_error("table is not associative");
    id_ = -1;
    for (int e = 0; e < n_ && id_ < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x) ok = at(e, x) == x;
      if (ok) id_ = e;
    }
    if (id_ < 0) throw usage_error("table has no identity element");
    for (int x = 0; x < n_; ++x) {
      bool ok = false;
      for (int y = 0; y < n_ && !ok; ++y) ok = at(x, y) == id_;
      if (!ok) throw usage_error("element without inverse");
    }
  }

  static AbelianGroupTable cyclic(int m) {
    if (m < 1) throw usage_error("order must be positive");
    std::vector<int> e(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        e[static_cast<size_t>(i) * m + j] = (i + j) % m;
    return AbelianGroupTable(m, std::move(e));
  }

  static AbelianGroupTable direct_sum(const AbelianGroupTable& a,
                                      const AbelianGroupTable& b) {
    int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<int> e(static_cast<size_t>(n) * n);
    for (int i1 = 0; i1 < na; ++i1)
      for (int k1 = 0; k1 < nb; ++k1)
        for (int i2 = 0; i2 < na; ++i2)
          for (int k2 = 0; k2 < nb; ++k2) {
            int x = i1 * nb + k1, y = i2 * nb + k2;
            e[static_cast<size_t>(x) * n + y] =
                a.at(i1, i2) * nb + b.at(k1, k2);
          }
    return AbelianGroupTable(n, std::move(e));
  }

  int order() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  int identity() const { return id_; }

 private:
  int n_;
  std::vector<int> e_;
  int id_;
};

// x composed with itself e times; e may be any integer (reduced modulo the
// element's order, identity for e == 0).
inline int abelian_power(const AbelianGroupTable& g, int x, long long e) {
  if (x < 0 || x >= g.order()) throw usage_error("element out of range");
  int ord = 1;
  int y = x;
  while (y != g.identity()) {
    y = g.at(y, x);
    ++ord;
  }
  long long r = ((e % ord) + ord) % ord;
  int acc = g.identity();
  for (long long i = 0; i < r; ++i) acc = g.at(acc, x);
  return acc;
}

// a.b = mu(a+b) mod m with mu = (m+1)/2; odd m only.
inline CayleyTable modular_group(int m) {
  if (m < 1) throw usage_error("order must be positive");
  if (m % 2 == 0) throw usage_error("order must be odd");
  long long mu = (m + 1) / 2;
  std::vector<int> e(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      e[static_cast<size_t>(a) * m + b] = static_cast<int>(mu * (a + b) % m);
  return CayleyTable(m, std::move(e));
}

// a.b = alpha*a + (1-alpha)*b mod m; needs alpha and alpha-1 coprime with m.
inline CayleyTable affine_modular(int m, int alpha) {
  if (m < 1) throw usage_error("order must be positive");
  if (alpha < 1) throw usage_error("alpha must be positive");
  long long a = ((alpha % m) + m) % m;
  long long b = (((1 - alpha) % m) + m) % m;
  if (std::gcd(a, static_cast<long long>(m)) != 1)
    throw usage_error("alpha must be coprime with the modulus");
  if (std::gcd(static_cast<long long>(((alpha - 1) % m + m) % m),
               static_cast<long long>(m)) != 1)
    throw usage_error("alpha-1 must be coprime with the modulus");
  std::vector<int> e(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      e[static_cast<size_t>(i) * m + k] = static_cast<int>((a * i + b * k) % m);
  return CayleyTable(m, std::move(e));
}

// i.k = i^alpha composed with k^(1-alpha) in an abelian group; both exponent
// maps must be automorphisms, i.e. alpha and alpha-1 coprime with the order.
inline CayleyTable from_abelian(const AbelianGroupTable& g, int alpha) {
  int m = g.order();
  if (alpha < 1) throw usage_error("alpha must be positive");
  if (m > 1) {
    if (std::gcd(((alpha % m) + m) % m, m) != 1)
      throw usage_error("alpha must be coprime with the group order");
    if (std::gcd((((alpha - 1) % m) + m) % m, m) != 1)
      throw usage_error("alpha-1 must be coprime with the group order");
  }
  std::vector<int> pa(m), pb(m);
  for (int x = 0; x < m; ++x) {
    pa[x] = abelian_power(g, x, alpha);
    pb[x] = abelian_power(g, x, 1LL - alpha);
  }
  std::vector<int> e(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      e[static_cast<size_t>(i) * m + k] = g.at(pa[i], pb[k]);
  return CayleyTable(m, std::move(e));
}

// Componentwise product on pairs (i, k), indexed as i*order(t2) + k.
inline CayleyTable direct_product(const CayleyTable& t1,
                                  const CayleyTable& t2) {
  if (!is_distributive_group(t1) || !is_distributive_group(t2))
    throw usage_error("factors must be distributive groups");
  int n1 = t1.order(), n2 = t2.order(), n = n1 * n2;
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int i1 = 0; i1 < n1; ++i1)
    for (int k1 = 0; k1 < n2; ++k1)
      for (int i2 = 0; i2 < n1; ++i2)
        for (int k2 = 0; k2 < n2; ++k2) {
          int x = i1 * n2 + k1, y = i2 * n2 + k2;
          e[static_cast<size_t>(x) * n + y] =
              t1.at(i1, i2) * n2 + t2.at(k1, k2);
        }
  return CayleyTable(n, std::move(e));
}

// a.b = alpha*a + beta*b mod m, no constraint tying alpha and beta; latin
// whenever both are coprime with m, but not distributive in general.
inline CayleyTable medial_affine(int m, int alpha, int beta) {
  if (m < 1) throw usage_error("order must be positive");
  long long a = ((alpha % m) + m) % m;
  long long b = ((beta % m) + m) % m;
  if (std::gcd(a, static_cast<long long>(m)) != 1 ||
      std::gcd(b, static_cast<long long>(m)) != 1)
    throw usage_error("coefficients must be coprime with the modulus");
  std::vector<int> e(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      e[static_cast<size_t>(i) * m + k] = static_cast<int>((a * i + b * k) % m);
  return CayleyTable(m, std::move(e));
}

// Medial law: (x.y).(z.w) == (x.z).(y.w) for all quadruples.
inline bool check_medial(const CayleyTable& t) {
  int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = t.at(x, y);
      for (int z = 0; z < n; ++z) {
        int xz = t.at(x, z);
        for (int w = 0; w < n; ++w)
          if (t.at(xy, t.at(z, w)) != t.at(xz, t.at(y, w))) return false;
      }
    }
  return true;
}

}  // namespace distgroup
