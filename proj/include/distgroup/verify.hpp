#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "distgroup/cayley_table.hpp"
#include "distgroup/check_result.hpp"
#include "distgroup/constructors.hpp"
#include "distgroup/cycles.hpp"
#include "distgroup/enumeration.hpp"
#include "distgroup/permutation.hpp"
#include "distgroup/substructure.hpp"

namespace distgroup {

// Cost gates: quartic or subgroup-census checks are skipped (reported with
// zero instances) above these orders to keep large constructed tables cheap.
struct VerifyOptions {
  int subgroup_gate = 30;
  int medial_gate = 40;
};

struct VerificationReport {
  std::string subject;
  // deque: named() hands out references that must survive later insertions
  std::deque<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
  unsigned long long total_failures() const {
    unsigned long long f = 0;
    for (const auto& c : checks) f += c.failures;
    return f;
  }
  CheckResult& named(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back(CheckResult{name, 0, 0, ""});
    return checks.back();
  }
};

namespace detail {

inline std::string pair_witness(int a, int b) {
  return "a=" + std::to_string(a) + " b=" + std::to_string(b);
}

inline std::string set_witness(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

inline void check_axioms(const CayleyTable& t, VerificationReport& rep) {
  int n = t.order();
  auto& closure = rep.named("closure");
  closure.instances += static_cast<unsigned long long>(n) * n;

  auto& latin = rep.named("latin");
  ++latin.instances;
  if (auto d = latin_defect(t)) {
    ++latin.failures;
    latin.witness = std::string(d->in_row ? "row " : "column ") +
                    std::to_string(d->index) + " repeats value " +
                    std::to_string(d->value);
  }
  auto& left = rep.named("left-distributive");
  ++left.instances;
  if (auto d = left_distributive_defect(t)) {
    ++left.failures;
    left.witness = "a=" + std::to_string(d->a) + " b=" + std::to_string(d->b) +
                   " c=" + std::to_string(d->c);
  }
  auto& right = rep.named("right-distributive");
  ++right.instances;
  if (auto d = right_distributive_defect(t)) {
    ++right.failures;
    right.witness = "a=" + std::to_string(d->a) + " b=" + std::to_string(d->b) +
                    " c=" + std::to_string(d->c);
  }
}

inline void check_basics(const CayleyTable& t, VerificationReport& rep) {
  int n = t.order();
  auto& idem = rep.named("idempotent");
  for (int i = 0; i < n; ++i)
    idem.hit(t.at(i, i) == i, "element " + std::to_string(i));

  auto& unit = rep.named("no-unit");
  if (n > 1) unit.hit(!has_unit(t), "a unit element exists");

  auto& codd = rep.named("commutative-odd-order");
  codd.hit(!is_commutative(t) || n % 2 == 1,
           "commutative with even order " + std::to_string(n));

  auto& trans = rep.named("translations-are-automorphisms");
  for (int p = 0; p < n; ++p) {
    trans.hit(is_automorphism(t, right_translation(t, p)),
              "right translation by " + std::to_string(p));
    trans.hit(is_automorphism(t, left_translation(t, p)),
              "left translation by " + std::to_string(p));
  }

  auto& transit = rep.named("translation-transitivity");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      bool found = false;
      for (int p = 0; p < n && !found; ++p) found = t.at(i, p) == k;
      transit.hit(found, "no translation moves " + std::to_string(i) + " to " +
                             std::to_string(k));
    }

  auto& opp = rep.named("opposite-distributive");
  opp.hit(is_distributive_group(opposite(t)), "mirrored table fails the laws");

  auto& der = rep.named("derived-operation-distributive");
  auto d = derived_operation(t);
  if (d.precondition_held)
    der.hit(is_distributive_group(d.table), "depth-two table fails the laws");
}

inline void check_medial_law(const CayleyTable& t, VerificationReport& rep,
                             const VerifyOptions& opt) {
  auto& med = rep.named("medial");
  if (t.order() > opt.medial_gate) return;
  int n = t.order();
  bool ok = true;
  std::string w;
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z)
        for (int v = 0; v < n && ok; ++v)
          if (t.at(t.at(x, y), t.at(z, v)) != t.at(t.at(x, z), t.at(y, v))) {
            ok = false;
            w = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                " z=" + std::to_string(z) + " w=" + std::to_string(v);
          }
  med.hit(ok, w);
}

inline void check_cycles(const CayleyTable& t, VerificationReport& rep) {
  int n = t.order();
  std::vector<int> whole(n);
  for (int i = 0; i < n; ++i) whole[i] = i;

  auto& ret = rep.named("cycle-return");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      bool ok = true;
      std::string w = pair_witness(a, b);
      try {
        auto c = l_cycle(t, a, b);
        ok = t.at(a, c.sequence.back()) == c.sequence.front();
        for (int x : c.sequence)
          if (x == a) ok = false;
      } catch (const std::exception& e) {
        ok = false;
        w += std::string(": ") + e.what();
      }
      ret.hit(ok, w);
    }

  auto& part = rep.named("cycle-partition-covers");
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    std::string w = "anchor " + std::to_string(a);
    try {
      auto cycles = cycle_partition(t, a);
      size_t covered = 1;
      for (const auto& c : cycles) covered += c.sequence.size();
      ok = covered == static_cast<size_t>(n);
    } catch (const std::exception& e) {
      ok = false;
      w += std::string(": ") + e.what();
    }
    part.hit(ok, w);
  }

  auto& dsc = rep.named("degree-subgroup-contains-cycles");
  for (int a = 0; a < n; ++a)
    for (const auto& c : cycle_partition(t, a)) {
      auto d = degree_subgroup(t, a, c.degree);
      bool ok = true;
      for (int x : c.sequence)
        if (!std::binary_search(d.members.begin(), d.members.end(), x))
          ok = false;
      dsc.hit(ok, "anchor " + std::to_string(a) + " start " +
                      std::to_string(c.start));
    }

  bool simple = is_simple(t, whole);
  auto& uni = rep.named("cycle-degree-uniform-when-simple");
  if (simple && n > 1) {
    bool ok = true;
    std::string w;
    try {
      auto inv = cycle_degree_invariant(t);
      ok = inv.uniform && inv.degree.has_value();
    } catch (const std::exception& e) {
      ok = false;
      w = e.what();
    }
    uni.hit(ok, w);
  }

  auto& mod = rep.named("cycle-modular-congruence");
  auto& modm = rep.named("cycle-modular-congruence-mirror");
  if (simple) {
    bool ok = true;
    std::string w;
    try {
      auto r = verify_mod_theorem(t);
      ok = r.holds;
      if (!ok && r.degree)
        w = "order " + std::to_string(r.order) + " degree " +
            std::to_string(*r.degree);
    } catch (const std::exception& e) {
      ok = false;
      w = e.what();
    }
    mod.hit(ok, w);
    bool okm = true;
    std::string wm;
    try {
      auto r = verify_mod_theorem(opposite(t));
      okm = r.holds;
      if (!okm && r.degree)
        wm = "order " + std::to_string(r.order) + " mirrored degree " +
             std::to_string(*r.degree);
    } catch (const std::exception& e) {
      okm = false;
      wm = e.what();
    }
    modm.hit(okm, wm);
  }
}

inline void check_substructure(const CayleyTable& t, VerificationReport& rep,
                               const VerifyOptions& opt) {
  int n = t.order();
  if (n > opt.subgroup_gate) return;
  auto subs = all_subgroups(t);

  auto& fam = rep.named("subgroup-family-closed");
  for (const auto& s : subs)
    fam.hit(subset_is_closed(t, s.members), set_witness(s.members));

  auto& cnt = rep.named("subgroup-counting");
  {
    std::vector<char> seen(n + 1, 0);
    for (const auto& s : subs) {
      int v = static_cast<int>(s.members.size());
      if (seen[v]) continue;
      seen[v] = 1;
      auto recd = verify_counting(t, v, subs);
      cnt.hit(recd.holds, "size " + std::to_string(v) + ": N=" +
                              std::to_string(recd.order) + " count=" +
                              std::to_string(recd.n_subgroups) + " h=" +
                              std::to_string(recd.h));
    }
  }

  auto& ccnt = rep.named("subgroup-class-counting");
  {
    std::map<std::vector<int>, std::vector<size_t>> classes;
    for (size_t i = 0; i < subs.size(); ++i)
      classes[canonical_form(induced_table(t, subs[i].members)).flat()]
          .push_back(i);
    for (const auto& [key, idxs] : classes) {
      std::vector<unsigned long long> through(n, 0);
      for (size_t i : idxs)
        for (int x : subs[i].members) ++through[x];
      bool uniform = true;
      for (int x = 1; x < n; ++x)
        if (through[x] != through[0]) uniform = false;
      unsigned long long m = idxs.size();
      unsigned long long v = subs[idxs[0]].members.size();
      bool ok = uniform &&
                static_cast<unsigned long long>(n) * through[0] == m * v;
      ccnt.hit(ok, "class of size-" + std::to_string(v) + " subgroups");
    }
  }

  auto& com = rep.named("commutant-membership");
  std::vector<SubsetAlgebra> commutants;
  for (int a = 0; a < n; ++a) {
    commutants.push_back(commutant(t, a));
    const auto& k = commutants.back();
    com.hit(k.closed && std::binary_search(k.members.begin(), k.members.end(), a),
            "element " + std::to_string(a));
  }
  auto& comr = rep.named("commutant-rigidity");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> inter;
      std::set_intersection(commutants[a].members.begin(),
                            commutants[a].members.end(),
                            commutants[b].members.begin(),
                            commutants[b].members.end(),
                            std::back_inserter(inter));
      comr.hit(inter.empty() || commutants[a].members == commutants[b].members,
               pair_witness(a, b));
    }

  auto& dm = rep.named("degree-subgroup-membership");
  auto& dr = rep.named("degree-subgroup-rigidity");
  for (int r = 1; r <= n; ++r) {
    std::vector<SubsetAlgebra> ds;
    for (int a = 0; a < n; ++a) {
      ds.push_back(degree_subgroup(t, a, r));
      dm.hit(ds.back().closed &&
                 std::binary_search(ds.back().members.begin(),
                                    ds.back().members.end(), a),
             "anchor " + std::to_string(a) + " r=" + std::to_string(r));
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> inter;
        std::set_intersection(ds[a].members.begin(), ds[a].members.end(),
                              ds[b].members.begin(), ds[b].members.end(),
                              std::back_inserter(inter));
        dr.hit(inter.empty() || ds[a].members == ds[b].members,
               pair_witness(a, b) + " r=" + std::to_string(r));
      }
  }

  std::vector<size_t> simple_idx;
  for (size_t i = 0; i < subs.size(); ++i)
    if (is_simple(t, subs[i].members)) simple_idx.push_back(i);

  auto& cos = rep.named("simple-coset-partition");
  std::map<size_t, CosetDecomposition> decomps;
  for (size_t i : simple_idx) {
    const auto& a = subs[i].members;
    auto res = coset_decomposition(t, a);
    bool ok = false;
    std::string w = set_witness(a);
    if (auto* d = std::get_if<CosetDecomposition>(&res)) {
      ok = n % static_cast<int>(a.size()) == 0 &&
           d->cosets.size() == static_cast<size_t>(n) / a.size();
      decomps.emplace(i, *d);
    } else {
      auto* o = std::get_if<CosetOverlap>(&res);
      w += " overlap at element " + std::to_string(o->shared_element);
    }
    cos.hit(ok, w);
  }

  auto& mix = rep.named("subgroup-coset-mixed-product");
  std::vector<int> wholev(n);
  for (int i = 0; i < n; ++i) wholev[i] = i;
  for (const auto& s : subs)
    for (int p = 0; p < n; ++p) {
      auto lhs = complex_product(t, complex_product(t, s.members, {p}), s.members);
      auto rhs = complex_product(t, s.members, complex_product(t, {p}, s.members));
      mix.hit(lhs == rhs, set_witness(s.members) + " p=" + std::to_string(p));
    }

  bool distinguished = is_distinguished(t);

  auto& hsz = rep.named("paired-coset-product-size");
  auto& hsm = rep.named("paired-coset-product-small");
  auto& hlu = rep.named("paired-coset-product-large-union");
  auto& hlp = rep.named("paired-coset-product-large-pairs");
  auto& dsq = rep.named("return-free-square-divisibility");
  for (size_t i : simple_idx) {
    const auto& a = subs[i].members;
    int v = static_cast<int>(a.size());
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        HpqRecord h;
        try {
          h = h_pq(t, a, p, q);
        } catch (const theorem_violation& e) {
          hsz.hit(false, set_witness(a) + " p=" + std::to_string(p) + " q=" +
                             std::to_string(q) + ": " + e.what());
          continue;
        }
        hsz.hit(true, "");
        auto apq = complex_product(t, a, {t.at(p, q)});
        if (!h.v_squared) {
          hsm.hit(h.set == apq, set_witness(a) + " p=" + std::to_string(p) +
                                    " q=" + std::to_string(q));
        } else {
          // the big case must split into v translates of a, one of them a.(p.q)
          std::vector<std::vector<int>> taus;
          std::vector<char> covered(n, 0);
          bool ok = true;
          for (int x : h.set) {
            if (covered[x]) continue;
            auto c = complex_product(t, a, {x});
            for (int y : c) {
              if (covered[y] ||
                  !std::binary_search(h.set.begin(), h.set.end(), y))
                ok = false;
              else
                covered[y] = 1;
            }
            taus.push_back(std::move(c));
            if (!ok) break;
          }
          ok = ok && taus.size() == static_cast<size_t>(v);
          bool has_apq = false;
          for (const auto& c : taus) has_apq = has_apq || c == apq;
          hlu.hit(ok && has_apq, set_witness(a) + " p=" + std::to_string(p) +
                                     " q=" + std::to_string(q));
          if (ok) {
            bool pairs_ok = true;
            for (const auto& c1 : taus)
              for (const auto& c2 : taus) {
                auto pr = complex_product(t, c1, c2);
                bool found = false;
                for (const auto& c3 : taus) found = found || pr == c3;
                if (!found) pairs_ok = false;
              }
            hlp.hit(pairs_ok, set_witness(a) + " p=" + std::to_string(p) +
                                  " q=" + std::to_string(q));
          }
          if (distinguished)
            dsq.hit(n % (v * v) == 0,
                    "order " + std::to_string(n) + " v=" + std::to_string(v));
        }
      }
  }

  auto& tcl = rep.named("compatible-coset-closure");
  auto& tqd = rep.named("compatible-coset-quotient");
  auto& qfs = rep.named("coset-family-quotient");
  for (size_t i : simple_idx) {
    auto it = decomps.find(i);
    if (it == decomps.end()) continue;
    const auto& d = it->second;
    size_t s = d.cosets.size();
    // which cosets multiply compatibly with every coset, both ways
    std::vector<char> tilde(s, 1);
    for (size_t j = 0; j < s; ++j)
      for (size_t h = 0; h < s && tilde[j]; ++h) {
        auto lhs1 = complex_product(t, d.cosets[j], d.cosets[h]);
        auto rhs1 = complex_product(
            t, d.subgroup,
            {t.at(d.representatives[j], d.representatives[h])});
        auto lhs2 = complex_product(t, d.cosets[h], d.cosets[j]);
        auto rhs2 = complex_product(
            t, d.subgroup,
            {t.at(d.representatives[h], d.representatives[j])});
        if (lhs1 != rhs1 || lhs2 != rhs2) tilde[j] = 0;
      }
    std::vector<size_t> tj;
    for (size_t j = 0; j < s; ++j)
      if (tilde[j]) tj.push_back(j);
    if (!tj.empty()) {
      bool closed = true;
      for (size_t j : tj)
        for (size_t h : tj) {
          auto pr = complex_product(t, d.cosets[j], d.cosets[h]);
          bool found = false;
          for (size_t l : tj) found = found || pr == d.cosets[l];
          if (!found) closed = false;
        }
      tcl.hit(closed, set_witness(d.subgroup));
      if (closed) {
        int q = static_cast<int>(tj.size());
        std::vector<int> e(static_cast<size_t>(q) * q);
        for (int j = 0; j < q; ++j)
          for (int h = 0; h < q; ++h) {
            auto pr = complex_product(t, d.cosets[tj[j]], d.cosets[tj[h]]);
            int found = -1;
            for (int l = 0; l < q; ++l)
              if (pr == d.cosets[tj[l]]) found = l;
            e[static_cast<size_t>(j) * q + h] = found < 0 ? 0 : found;
          }
        tqd.hit(is_distributive_group(CayleyTable(q, std::move(e))),
                set_witness(d.subgroup));
      }
    }
    // full coset family as a quotient system, when the hypotheses apply
    bool all_small = true;
    for (const auto& c1 : d.cosets)
      for (const auto& c2 : d.cosets)
        if (complex_product(t, c1, c2).size() != d.subgroup.size())
          all_small = false;
    bool closed_members = true;
    for (const auto& c : d.cosets)
      if (!subset_is_closed(t, c)) closed_members = false;
    if (all_small && closed_members && d.cosets.size() > 0) {
      bool iso = true;
      for (size_t j = 1; j < d.cosets.size() && iso; ++j)
        iso = are_isomorphic(induced_table(t, d.cosets[0]),
                             induced_table(t, d.cosets[j]))
                  .has_value();
      if (iso) {
        bool ok = true;
        std::string w = set_witness(d.subgroup);
        try {
          auto gamma = subgroup_quotient_group(t, d.cosets);
          ok = is_distributive_group(gamma) &&
               gamma.order() == static_cast<int>(d.cosets.size());
        } catch (const std::exception& e) {
          ok = false;
          w += std::string(": ") + e.what();
        }
        qfs.hit(ok, w);
      }
    }
  }

  auto& t8 = rep.named("return-free-square-subgroup-cosets");
  if (distinguished) {
    for (size_t i : simple_idx) {
      const auto& a = subs[i].members;
      size_t v = a.size();
      for (const auto& r : subs) {
        if (r.members.size() != v * v || r.members == a) continue;
        if (!std::includes(r.members.begin(), r.members.end(), a.begin(),
                           a.end()))
          continue;
        // inside r, every translate of a must multiply compatibly
        auto rt = induced_table(t, r.members);
        std::vector<int> pos(t.order(), -1);
        for (size_t x = 0; x < r.members.size(); ++x)
          pos[r.members[x]] = static_cast<int>(x);
        std::vector<int> ain;
        for (int x : a) ain.push_back(pos[x]);
        auto res = coset_decomposition(rt, ain);
        bool ok = false;
        if (auto* dd = std::get_if<CosetDecomposition>(&res)) {
          ok = true;
          for (size_t j = 0; j < dd->cosets.size() && ok; ++j)
            for (size_t h = 0; h < dd->cosets.size() && ok; ++h) {
              auto lhs = complex_product(rt, dd->cosets[j], dd->cosets[h]);
              auto rhs = complex_product(
                  rt, ain,
                  {rt.at(dd->representatives[j], dd->representatives[h])});
              if (lhs != rhs) ok = false;
            }
        }
        t8.hit(ok, set_witness(a) + " inside " + set_witness(r.members));
      }
    }
  }

  auto& sq = rep.named("singleton-quotient-identity");
  {
    std::vector<std::vector<int>> singles;
    for (int x = 0; x < n; ++x) singles.push_back({x});
    bool ok = true;
    std::string w;
    try {
      ok = subgroup_quotient_group(t, singles) == t;
    } catch (const std::exception& e) {
      ok = false;
      w = e.what();
    }
    sq.hit(ok, w);
  }
}

}  // namespace detail

// Run every theorem check against one table. Non-latin or non-distributive
// input fails fast with just the axiom results.
inline VerificationReport verify_table(const CayleyTable& t,
                                       const std::string& subject = "table",
                                       const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.subject = subject;
  detail::check_axioms(t, rep);
  if (!rep.passed()) return rep;
  detail::check_basics(t, rep);
  detail::check_medial_law(t, rep, opt);
  detail::check_cycles(t, rep);
  detail::check_substructure(t, rep, opt);
  return rep;
}

inline void merge_reports(VerificationReport& into,
                          const VerificationReport& from) {
  for (const auto& c : from.checks) {
    auto& dst = into.named(c.name);
    dst.instances += c.instances;
    if (c.failures && dst.failures == 0)
      dst.witness = from.subject + ": " + c.witness;
    dst.failures += c.failures;
  }
}

// Classify every order up to max_order and verify each representative, plus
// catalog-level identities (orbit sums, canonical representatives, and the
// presence of the modular class at odd orders).
inline VerificationReport verify_catalog(int max_order,
                                         const EnumerationOptions& eopt = {},
                                         const VerifyOptions& vopt = {}) {
  VerificationReport rep;
  rep.subject = "catalog through order " + std::to_string(max_order);
  auto& orbits = rep.named("catalog-orbit-sums");
  auto& canon = rep.named("catalog-representatives-canonical");
  auto& modp = rep.named("catalog-modular-class-present");
  auto& mixed = rep.named("catalog-mixed-degree-witness");

  for (int n = 1; n <= max_order; ++n) {
    auto cls = classify(n, eopt);
    unsigned long long fact = factorial(n);
    unsigned long long sum = 0;
    for (size_t k = 0; k < cls.representatives.size(); ++k) {
      sum += cls.class_sizes[k];
      orbits.hit(cls.class_sizes[k] * cls.aut_sizes[k] == fact,
                 "order " + std::to_string(n) + " class " + std::to_string(k));
      canon.hit(canonical_form(cls.representatives[k]) == cls.representatives[k],
                "order " + std::to_string(n) + " class " + std::to_string(k));
      auto sub = verify_table(cls.representatives[k],
                              "order " + std::to_string(n) + " class " +
                                  std::to_string(k),
                              vopt);
      merge_reports(rep, sub);
    }
    orbits.hit(sum == cls.labeled_count, "order " + std::to_string(n) + " total");
    if (n % 2 == 1) {
      bool found = false;
      auto m = modular_group(n);
      for (const auto& r : cls.representatives)
        found = found || are_isomorphic(r, m).has_value();
      modp.hit(found, "order " + std::to_string(n));
    }
    // informational: record one table where left and right degrees part ways
    if (mixed.witness.empty()) {
      for (size_t k = 0; k < cls.representatives.size(); ++k) {
        const auto& r = cls.representatives[k];
        for (int a = 0; a < n && mixed.witness.empty(); ++a)
          for (int b = 0; b < n && mixed.witness.empty(); ++b) {
            if (a == b) continue;
            int dl = l_degree(r, a, b), dr = r_degree(r, a, b);
            if (dl != dr) {
              ++mixed.instances;
              mixed.witness = "order " + std::to_string(n) + " class " +
                              std::to_string(k) + " a=" + std::to_string(a) +
                              " b=" + std::to_string(b) + " left=" +
                              std::to_string(dl) + " right=" +
                              std::to_string(dr) + " (finding, not a failure)";
            }
          }
      }
    }
  }
  return rep;
}

inline void print_report(std::ostream& out, const VerificationReport& rep) {
  out << "subject: " << rep.subject << '\n';
  for (const auto& c : rep.checks) {
    out << "check " << c.name << ": " << (c.passed() ? "pass" : "FAIL")
        << " instances=" << c.instances;
    if (c.failures) out << " failures=" << c.failures;
    if (!c.witness.empty()) out << " [" << c.witness << "]";
    out << '\n';
  }
  out << "overall: " << (rep.passed() ? "pass" : "fail") << '\n';
}

}  // namespace distgroup
