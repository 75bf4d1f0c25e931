#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "distgroup/distgroup.hpp"

using nlohmann::ordered_json;
using namespace distgroup;

namespace {

int parse_int(const std::string& s) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw usage_error("not an integer: " + s);
  }
  if (pos != s.size()) throw usage_error("not an integer: " + s);
  return v;
}

CayleyTable load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw usage_error("cannot open file: " + path);
  return parse_table(f);
}

void write_json(const std::string& path, const ordered_json& j) {
  std::ofstream f(path);
  if (!f) throw usage_error("cannot write report file: " + path);
  f << j.dump(2) << '\n';
}

ordered_json table_json(const CayleyTable& t) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < t.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < t.order(); ++j) row.push_back(t.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json checks_json(const VerificationReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"instances", c.instances},
                      {"failures", c.failures},
                      {"witness", c.witness}});
  return checks;
}

ordered_json report_json(const std::string& cmd, const VerificationReport& rep) {
  return {{"command", cmd},
          {"subject", rep.subject},
          {"checks", checks_json(rep)},
          {"overall", rep.passed() ? "pass" : "fail"}};
}

// Axioms as pass/fail plus observed properties carried in the witness slot.
int run_check(const std::string& path, const std::string& report_path) {
  auto t = load_table(path);
  VerificationReport rep;
  rep.subject = path;
  detail::check_axioms(t, rep);

  auto& idem = rep.named("idempotent");
  for (int i = 0; i < t.order(); ++i)
    idem.hit(t.at(i, i) == i, "element " + std::to_string(i));

  auto& comm = rep.named("commutative");
  ++comm.instances;
  comm.witness = is_commutative(t) ? "yes" : "no";

  auto& unit = rep.named("unit");
  ++unit.instances;
  unit.witness = "none";
  for (int e = 0; e < t.order(); ++e) {
    bool is_unit = true;
    for (int x = 0; x < t.order() && is_unit; ++x)
      is_unit = t.at(e, x) == x && t.at(x, e) == x;
    if (is_unit) unit.witness = "element " + std::to_string(e);
  }

  auto& dist = rep.named("distinguished");
  ++dist.instances;
  dist.witness = is_distinguished(t) ? "yes" : "no";

  print_report(std::cout, rep);
  if (!report_path.empty()) write_json(report_path, report_json("check", rep));
  return rep.passed() ? 0 : 1;
}

int run_classify(int n, bool emit, int width, const std::string& report_path) {
  EnumerationOptions opt;
  opt.parallel_width = width;
  auto cls = classify(n, opt);
  size_t k = cls.representatives.size();
  std::cout << "order " << n << ": " << k << (k == 1 ? " class, " : " classes, ")
            << cls.labeled_count << " labeled tables\n";
  for (size_t i = 0; i < k; ++i) {
    std::cout << "class " << i << ": class size " << cls.class_sizes[i]
              << ", automorphisms " << cls.aut_sizes[i] << '\n';
    if (emit) emit_table(std::cout, cls.representatives[i]);
  }
  if (!report_path.empty()) {
    ordered_json classes = ordered_json::array();
    for (size_t i = 0; i < k; ++i)
      classes.push_back({{"index", i},
                         {"class_size", cls.class_sizes[i]},
                         {"aut_size", cls.aut_sizes[i]},
                         {"table", table_json(cls.representatives[i])}});
    write_json(report_path, {{"command", "classify"},
                             {"order", n},
                             {"labeled_count", cls.labeled_count},
                             {"class_count", k},
                             {"classes", classes}});
  }
  return 0;
}

int run_construct(const std::string& kind, const std::vector<std::string>& params,
                  const std::string& out_path, const std::string& report_path) {
  CayleyTable t = CayleyTable(1, {0});
  if (kind == "modular") {
    if (params.size() != 1) throw usage_error("construct modular needs: m");
    t = modular_group(parse_int(params[0]));
  } else if (kind == "affine") {
    if (params.size() != 2) throw usage_error("construct affine needs: m alpha");
    t = affine_modular(parse_int(params[0]), parse_int(params[1]));
  } else if (kind == "product") {
    if (params.size() != 2)
      throw usage_error("construct product needs: file1 file2");
    t = direct_product(load_table(params[0]), load_table(params[1]));
  } else if (kind == "abelian") {
    if (params.size() < 2)
      throw usage_error("construct abelian needs: alpha m1 [m2 ...]");
    int alpha = parse_int(params[0]);
    auto g = AbelianGroupTable::cyclic(parse_int(params[1]));
    for (size_t i = 2; i < params.size(); ++i)
      g = AbelianGroupTable::direct_sum(g, AbelianGroupTable::cyclic(parse_int(params[i])));
    t = from_abelian(g, alpha);
  } else {
    throw usage_error("unknown constructor: " + kind +
                      " (expected modular, affine, product, or abelian)");
  }
  if (out_path.empty()) {
    emit_table(std::cout, t);
  } else {
    std::ofstream f(out_path);
    if (!f) throw usage_error("cannot write table file: " + out_path);
    emit_table(f, t);
  }
  if (!report_path.empty()) {
    ordered_json p = ordered_json::array();
    for (const auto& s : params) p.push_back(s);
    write_json(report_path, {{"command", "construct"},
                             {"kind", kind},
                             {"params", p},
                             {"order", t.order()},
                             {"table", table_json(t)}});
  }
  return 0;
}

int run_subgroups(const std::string& path, const std::string& report_path) {
  auto t = load_table(path);
  int n = t.order();
  auto subs = all_subgroups(t);
  std::cout << "order " << n << ": " << subs.size() << " subgroups\n";

  std::map<int, unsigned long long> by_size;
  for (const auto& s : subs) ++by_size[static_cast<int>(s.members.size())];
  for (const auto& [v, count] : by_size)
    std::cout << "size " << v << ": " << count << '\n';

  ordered_json counting = ordered_json::array();
  for (const auto& [v, count] : by_size) {
    auto rec = verify_counting(t, v, subs);
    std::cout << "counting v=" << v << ": subgroups=" << rec.n_subgroups
              << " h=" << rec.h << (rec.holds ? " holds" : " FAILS") << '\n';
    counting.push_back({{"v", v},
                        {"subgroups", rec.n_subgroups},
                        {"h", rec.h},
                        {"holds", rec.holds}});
  }

  std::vector<int> whole(n);
  for (int i = 0; i < n; ++i) whole[i] = i;
  bool simple = is_simple(t, whole);
  std::cout << "simple: " << (simple ? "yes" : "no") << '\n';

  auto chain = maximal_chain(t);
  std::cout << "chain:";
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) std::cout << " >";
    std::cout << ' ' << detail::set_witness(chain[i].members);
  }
  std::cout << '\n';

  ordered_json decomps = ordered_json::array();
  ordered_json products = ordered_json::array();
  for (const auto& s : subs) {
    if (!is_simple(t, s.members)) continue;
    auto res = coset_decomposition(t, s.members);
    ordered_json entry = {{"subgroup", s.members}};
    if (auto* d = std::get_if<CosetDecomposition>(&res)) {
      std::cout << "cosets of " << detail::set_witness(s.members) << ": "
                << d->cosets.size() << " cosets, representatives "
                << detail::set_witness(d->representatives) << '\n';
      ordered_json cosets = ordered_json::array();
      for (const auto& c : d->cosets) cosets.push_back(c);
      entry["cosets"] = std::move(cosets);
      entry["representatives"] = d->representatives;
    } else {
      auto* o = std::get_if<CosetOverlap>(&res);
      std::cout << "cosets of " << detail::set_witness(s.members)
                << ": overlap at element " << o->shared_element << " (coset "
                << o->existing_coset << ", representative " << o->offending_rep
                << ")\n";
      entry["overlap"] = {{"existing_coset", o->existing_coset},
                          {"offending_rep", o->offending_rep},
                          {"shared_element", o->shared_element}};
    }
    decomps.push_back(std::move(entry));

    int v = static_cast<int>(s.members.size());
    if (v > 1 && v < n) {
      unsigned long long small = 0, large = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          auto rec = h_pq(t, s.members, p, q);
          if (rec.v_squared)
            ++large;
          else
            ++small;
        }
      std::cout << "coset-pair products for " << detail::set_witness(s.members)
                << ": size-v " << small << ", size-v2 " << large << '\n';
      products.push_back({{"subgroup", s.members},
                          {"size_v", small},
                          {"size_v_squared", large}});
    }
  }

  if (!report_path.empty()) {
    ordered_json subj = ordered_json::array();
    for (const auto& s : subs)
      subj.push_back({{"members", s.members},
                      {"size", s.members.size()},
                      {"simple", is_simple(t, s.members)}});
    ordered_json chainj = ordered_json::array();
    for (const auto& s : chain) chainj.push_back(s.members);
    write_json(report_path, {{"command", "subgroups"},
                             {"subject", path},
                             {"order", n},
                             {"count", subs.size()},
                             {"subgroups", subj},
                             {"counting", counting},
                             {"simple", simple},
                             {"chain", chainj},
                             {"decompositions", decomps},
                             {"coset_pair_products", products}});
  }
  return 0;
}

int run_cycles(const std::string& path, const std::string& report_path) {
  auto t = load_table(path);
  int n = t.order();
  auto mirror = opposite(t);
  auto linv = cycle_degree_invariant(t);
  auto rinv = cycle_degree_invariant(mirror);
  std::cout << "order " << n << ": " << (linv.simple ? "simple" : "not simple")
            << '\n';
  auto degree_line = [](const char* side, const DegreeInvariant& inv) {
    std::cout << side << "-degree: ";
    if (!inv.degree)
      std::cout << "none (no pairs)";
    else if (inv.uniform)
      std::cout << *inv.degree << " (uniform)";
    else
      std::cout << "min " << *inv.degree << " (non-uniform)";
    std::cout << '\n';
  };
  degree_line("l", linv);
  degree_line("r", rinv);

  ordered_json congruence;
  if (linv.simple) {
    auto lm = verify_mod_theorem(t);
    auto rm = verify_mod_theorem(mirror);
    auto cong_line = [](const char* side, const ModularCongruenceRecord& m) {
      std::cout << "congruence " << side << ": N=" << m.order;
      if (m.degree) std::cout << " g=" << *m.degree;
      std::cout << (m.holds ? " holds" : " FAILS") << '\n';
    };
    cong_line("l", lm);
    cong_line("r", rm);
    auto cong_json = [](const ModularCongruenceRecord& m) {
      ordered_json j = {{"order", m.order}, {"holds", m.holds}};
      if (m.degree) j["degree"] = *m.degree;
      return j;
    };
    congruence = {{"l", cong_json(lm)}, {"r", cong_json(rm)}};
  } else {
    std::cout << "congruence: skipped (table is not simple)\n";
  }

  ordered_json partitions = ordered_json::array();
  for (int a = 0; a < n; ++a) {
    auto part = cycle_partition(t, a);
    std::cout << "anchor " << a << ":";
    ordered_json cycles = ordered_json::array();
    for (const auto& c : part) {
      std::cout << " (";
      for (size_t i = 0; i < c.sequence.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << c.sequence[i];
      }
      std::cout << ')';
      cycles.push_back(c.sequence);
    }
    std::cout << '\n';
    partitions.push_back({{"anchor", a}, {"cycles", std::move(cycles)}});
  }

  if (!report_path.empty()) {
    auto inv_json = [](const DegreeInvariant& inv) {
      ordered_json j = {{"uniform", inv.uniform}};
      if (inv.degree) j["degree"] = *inv.degree;
      return j;
    };
    ordered_json j = {{"command", "cycles"},
                      {"subject", path},
                      {"order", n},
                      {"simple", linv.simple},
                      {"l", inv_json(linv)},
                      {"r", inv_json(rinv)}};
    if (!congruence.is_null()) j["congruence"] = congruence;
    j["partitions"] = partitions;
    write_json(report_path, j);
  }
  return 0;
}

int run_verify(const std::string& path, int catalog, int width,
               const std::string& report_path) {
  VerificationReport rep;
  if (catalog > 0) {
    EnumerationOptions eopt;
    eopt.parallel_width = width;
    rep = verify_catalog(catalog, eopt);
  } else {
    rep = verify_table(load_table(path), path);
  }
  print_report(std::cout, rep);
  if (!report_path.empty()) write_json(report_path, report_json("verify", rep));
  return rep.passed() ? 0 : 1;
}

int run_oracle(int n, const std::string& report_path) {
  auto slow = oracle_count(n);
  auto cls = classify(n);
  unsigned long long orbit_sum = 0;
  for (auto s : cls.class_sizes) orbit_sum += s;
  bool agree = slow == cls.labeled_count && slow == orbit_sum;
  std::cout << "order " << n << ": oracle=" << slow
            << " enumerator=" << cls.labeled_count << " orbit-sum=" << orbit_sum
            << " agree=" << (agree ? "yes" : "no") << '\n';
  if (!report_path.empty())
    write_json(report_path, {{"command", "oracle"},
                             {"order", n},
                             {"oracle_count", slow},
                             {"enumerator_count", cls.labeled_count},
                             {"orbit_sum", orbit_sum},
                             {"agree", agree}});
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite distributive quasigroup toolkit"};
  app.require_subcommand(1);

  std::string check_path, check_report;
  auto* c_check = app.add_subcommand("check", "axiom and property report for one table");
  c_check->add_option("file", check_path, "table text file")->required();
  c_check->add_option("--report", check_report, "write a JSON report here");

  int cls_n = 0, cls_width = 0;
  bool cls_emit = false;
  std::string cls_report;
  auto* c_cls = app.add_subcommand("classify", "isomorphism classes of one order");
  c_cls->add_option("n", cls_n, "table order")->required();
  c_cls->add_flag("--emit-tables", cls_emit, "print each canonical table");
  c_cls->add_option("--parallel-width", cls_width, "enumeration worker cap (0 = all cores)");
  c_cls->add_option("--report", cls_report, "write a JSON report here");

  std::string con_kind, con_out, con_report;
  std::vector<std::string> con_params;
  auto* c_con = app.add_subcommand("construct", "build a table: modular m | affine m alpha | product f1 f2 | abelian alpha m1 [m2 ...]");
  c_con->add_option("kind", con_kind, "modular, affine, product, or abelian")->required();
  c_con->add_option("params", con_params, "constructor parameters");
  c_con->add_option("--out", con_out, "write the table here instead of stdout");
  c_con->add_option("--report", con_report, "write a JSON report here");

  std::string sub_path, sub_report;
  auto* c_sub = app.add_subcommand("subgroups", "subgroup census, counting identity, cosets, chain");
  c_sub->add_option("file", sub_path, "table text file")->required();
  c_sub->add_option("--report", sub_report, "write a JSON report here");

  std::string cyc_path, cyc_report;
  auto* c_cyc = app.add_subcommand("cycles", "cycle degrees, partitions, modular congruence");
  c_cyc->add_option("file", cyc_path, "table text file")->required();
  c_cyc->add_option("--report", cyc_report, "write a JSON report here");

  std::string ver_path, ver_report;
  int ver_catalog = 0, ver_width = 0;
  auto* c_ver = app.add_subcommand("verify", "full property suite on one table or the whole catalog");
  c_ver->add_option("file", ver_path, "table text file");
  c_ver->add_option("--catalog", ver_catalog, "verify every class up to this order");
  c_ver->add_option("--parallel-width", ver_width, "enumeration worker cap (0 = all cores)");
  c_ver->add_option("--report", ver_report, "write a JSON report here");

  int ora_n = 0;
  std::string ora_report;
  auto* c_ora = app.add_subcommand("oracle", "cross-check enumeration against the generate-and-test oracle");
  c_ora->add_option("n", ora_n, "table order (small)")->required();
  c_ora->add_option("--report", ora_report, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) return run_check(check_path, check_report);
    if (c_cls->parsed()) return run_classify(cls_n, cls_emit, cls_width, cls_report);
    if (c_con->parsed()) return run_construct(con_kind, con_params, con_out, con_report);
    if (c_sub->parsed()) return run_subgroups(sub_path, sub_report);
    if (c_cyc->parsed()) return run_cycles(cyc_path, cyc_report);
    if (c_ver->parsed()) {
      if (ver_catalog <= 0 && ver_path.empty())
        throw usage_error("verify needs a table file or --catalog n");
      return run_verify(ver_path, ver_catalog, ver_width, ver_report);
    }
    if (c_ora->parsed()) return run_oracle(ora_n, ora_report);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const theorem_violation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return 1;
  } catch (const inconsistency_error& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
