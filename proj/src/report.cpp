#include "orbifold/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "orbifold/braiding.hpp"
#include "orbifold/character_table.hpp"
#include "orbifold/cyclotomic.hpp"
#include "orbifold/double_data.hpp"
#include "orbifold/equivariant.hpp"
#include "orbifold/matrix_rep.hpp"
#include "orbifold/repa.hpp"

namespace orbifold {

namespace {

using nlohmann::json;

json cyc_json(const Cyclotomic& v) {
  json coeffs = json::array();
  for (const mpq_class& q : v.coeffs()) coeffs.push_back(rat_str(q));
  return json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

std::string label_name(const RepA& ctx, int l) {
  const SimpleLabel& lab = ctx.labels()[l];
  return "(" + ctx.parent().element_names[lab.m0] + "," + std::to_string(lab.pi) + ")";
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

CheckResult check_repa(const RepA& ctx) {
  CheckResult r{"repa", false, ""};
  const FiniteGroup& m = ctx.parent();
  SubgroupView n = subgroup_view(m, ctx.n().to_parent);
  DoubleData dn = double_modular_data(n.group);

  std::multiset<long> untwisted, expected(dn.dims.begin(), dn.dims.end());
  std::map<int, long> sector_sum;
  for (const SimpleLabel& lab : ctx.labels()) {
    if (lab.sector == 0) untwisted.insert(lab.dim_a);
    sector_sum[lab.sector] += lab.dim_a * lab.dim_a;
  }
  long nn = n.group.order;
  if (untwisted != expected) {
    r.witness = "untwisted labels do not match the double of the subgroup";
    return r;
  }
  if (static_cast<int>(sector_sum.size()) != ctx.g().order) {
    r.witness = "an empty sector";
    return r;
  }
  for (const auto& [sec, sum] : sector_sum) {
    if (sum != nn * nn) {
      r.witness = "sector " + std::to_string(sec) + " has squared-dimension sum " +
                  std::to_string(sum) + ", wanted " + std::to_string(nn * nn);
      return r;
    }
  }
  r.pass = true;
  return r;
}

CheckResult check_sectors(const RepA& ctx) {
  CheckResult r{"sectors", false, ""};
  const FiniteGroup& g = ctx.g();
  int nl = static_cast<int>(ctx.labels().size());
  for (int gg = 0; gg < g.order; ++gg)
    for (int l = 0; l < nl; ++l)
      if (ctx.sector_of(ctx.act(gg, l)) != g.conj(gg, ctx.sector_of(l))) {
        r.witness = "conjugation rule fails at " + label_name(ctx, l);
        return r;
      }
  for (int l = 0; l < nl; ++l)
    if (ctx.sector_of(ctx.dual(l)) != g.inv(ctx.sector_of(l))) {
      r.witness = "dual sector fails at " + label_name(ctx, l);
      return r;
    }
  for (int x = 0; x < nl; ++x) {
    for (int y = 0; y < nl; ++y) {
      std::vector<long> f = ctx.fuse(x, y);
      int want = g.mul(ctx.sector_of(x), ctx.sector_of(y));
      long total = 0;
      for (int l = 0; l < nl; ++l) {
        if (f[l] != 0 && ctx.sector_of(l) != want) {
          r.witness = "fusion leaks outside its sector at " + label_name(ctx, x) + "*" +
                      label_name(ctx, y);
          return r;
        }
        total += f[l] * ctx.labels()[l].dim_a;
      }
      if (total != ctx.labels()[x].dim_a * ctx.labels()[y].dim_a) {
        r.witness = "fusion loses dimension at " + label_name(ctx, x) + "*" + label_name(ctx, y);
        return r;
      }
    }
  }
  r.pass = true;
  return r;
}

CheckResult check_cocycles(const Equivariantization& eq, const ToleranceConfig& tol) {
  CheckResult r{"cocycles", false, ""};
  for (size_t o = 0; o < eq.orbits().size(); ++o) {
    int oi = static_cast<int>(o);
    SubgroupView sv = eq.stabilizer(oi);
    ToleranceConfig loose = tol;
    loose.eps_abs = std::max(tol.eps_abs, 1e-8);
    validate_cocycle(sv.group, eq.cocycle(oi), loose);
    long nirr = static_cast<long>(eq.lambdas(oi).degrees.size());
    if (eq.alpha_regular(oi) != nirr) {
      r.witness = "regular-class count disagrees with the twisted irrep count on orbit " +
                  std::to_string(o);
      return r;
    }
    long sq = 0;
    for (int d : eq.lambdas(oi).degrees) sq += static_cast<long>(d) * d;
    if (sq != sv.group.order) {
      r.witness = "twisted irrep degrees do not fill the stabilizer on orbit " + std::to_string(o);
      return r;
    }
    bool triv = eq.alpha_regular(oi) ==
                static_cast<long>(conjugacy_data(sv.group).reps.size());
    if (triv != eq.cocycle_trivial(oi)) {
      r.witness = "triviality flag disagrees with the regular census on orbit " + std::to_string(o);
      return r;
    }
  }
  r.pass = true;
  return r;
}

CheckResult check_dsimples(const Equivariantization& eq) {
  CheckResult r{"dsimples", false, ""};
  long long want = static_cast<long long>(eq.ctx().parent().order) * eq.ctx().parent().order;
  long long sq = 0;
  for (const DSimple& d : eq.d_simples()) sq += static_cast<long long>(d.dim_d) * d.dim_d;
  if (sq != want) {
    r.witness = "squared dimensions sum to " + std::to_string(sq) + ", wanted " +
                std::to_string(want);
    return r;
  }
  r.pass = eq.d_simples().size() > 0;
  if (!r.pass) r.witness = "no simples";
  return r;
}

CheckResult check_functors(const Equivariantization& eq) {
  CheckResult r{"functors", false, ""};
  const RepA& ctx = eq.ctx();
  auto f = eq.functor_multiplicities();
  int nd = static_cast<int>(eq.d_simples().size());
  int nl = static_cast<int>(ctx.labels().size());
  for (int l = 0; l < nl; ++l) {
    std::vector<long> ind = eq.induction_image(l);
    for (int d = 0; d < nd; ++d) {
      if (ind[d] != f[d][l]) {
        r.witness = "restriction and induction matrices are not transposes at " +
                    label_name(ctx, l);
        return r;
      }
      if (ind[d] != 0) {
        const DSimple& ds = eq.d_simples()[d];
        if (ind[d] != eq.lambdas(ds.orbit).degrees[ds.lambda]) {
          r.witness = "an induction multiplicity differs from its twisted irrep degree";
          return r;
        }
      }
    }
  }
  for (int d = 0; d < nd; ++d) {
    if (!eq.untwisted(d)) continue;
    for (int l = 0; l < nl; ++l)
      if (f[d][l] != 0 && ctx.sector_of(l) != 0) {
        r.witness = "an untwisted simple restricts to a twisted label";
        return r;
      }
  }
  r.pass = true;
  return r;
}

CheckResult check_braiding(const RepA& ctx, const ToleranceConfig& tol) {
  CheckResult r{"braiding", false, ""};
  Rng rng(tol.rng_seed);
  int nl = static_cast<int>(ctx.labels().size());
  for (int t = 0; t < 20; ++t) {
    DObject a = ind_dobject(ctx, static_cast<int>(rng.next_below(nl)));
    DObject b = ind_dobject(ctx, static_cast<int>(rng.next_below(nl)));
    DObject c = ind_dobject(ctx, static_cast<int>(rng.next_below(nl)));
    check_braiding_descent(ctx, a, b, 1e-7);
    check_braiding_descent(ctx, a, c, 1e-7);
    check_braiding_descent(ctx, b, c, 1e-7);
    check_yang_baxter(ctx, a, b, c, rng, 3, 1e-7);
    double u = unit_double_braiding_residual(ctx, a);
    if (u > 1e-9) {
      std::ostringstream os;
      os << "unit double braiding residual " << u;
      r.witness = os.str();
      return r;
    }
  }
  r.pass = true;
  return r;
}

CheckResult check_smatrix(const Equivariantization& eq) {
  CheckResult r{"smatrix", false, ""};
  const RepA& ctx = eq.ctx();
  CharacterTable tg = character_table(ctx.g());
  auto s = eq.smatrix_rows();
  int triv = -1;
  for (int lam = 0; lam < tg.num_irreps() && triv < 0; ++lam) {
    bool all1 = true;
    for (int h = 0; h < ctx.g().order && all1; ++h)
      if (!(tg.value_at_element(lam, h) == Cyclotomic(1))) all1 = false;
    if (all1) triv = lam;
  }
  if (triv < 0) {
    r.witness = "no trivial quotient character";
    return r;
  }
  for (size_t d = 0; d < eq.d_simples().size(); ++d)
    if (!(s[triv][d] ==
          Cyclotomic(make_rat(eq.d_simples()[d].dim_d, ctx.parent().order)))) {
      r.witness = "trivial-character row differs from dims/|M|";
      return r;
    }
  r.pass = true;
  return r;
}

CheckResult check_match(const Equivariantization& eq, std::vector<BijectionEntry>* bij) {
  CheckResult r{"match", false, ""};
  MatchReport rep = match_to_double(eq);
  if (!rep.counts_match)
    r.witness = "simple counts differ";
  else if (!rep.dims_match)
    r.witness = "dimension multisets differ";
  else if (!rep.bijection_found)
    r.witness = "no character-compatible bijection";
  else if (!rep.s_rows_match)
    r.witness = "quotient character rows do not match the double";
  else if (!rep.c1_match)
    r.witness = "untwisted census " + std::to_string(rep.d0_count) + " vs " +
                std::to_string(rep.c1_census);
  r.pass = rep.ok();
  if (r.pass && bij != nullptr) {
    const FiniteGroup& m = eq.ctx().parent();
    DoubleData dd = double_modular_data(m);
    for (size_t d = 0; d < rep.assignment.size(); ++d) {
      int j = rep.assignment[d];
      BijectionEntry e;
      e.d_simple = static_cast<int>(d);
      e.double_label = "(" + m.element_names[dd.labels[j].class_rep] + "," +
                       std::to_string(dd.labels[j].irrep) + ")";
      bij->push_back(e);
    }
  }
  return r;
}

CheckResult check_clifford(const Instance& inst, const ToleranceConfig& tol) {
  CheckResult r{"clifford", false, ""};
  CliffordReport rep = clifford_check(inst.m, inst.n_members, tol);
  r.pass = rep.pass;
  if (!rep.pass)
    r.witness = "degrees {" + join_longs(rep.degrees) + "} vs expected {" +
                join_longs(rep.expected) + "}";
  return r;
}

json report_json(const EquivalenceReport& er) {
  json orbits = json::array();
  for (const OrbitReport& o : er.orbits)
    orbits.push_back(json{{"labels", o.labels},
                          {"stab_order", o.stab_order},
                          {"alpha_regular", o.alpha_regular},
                          {"cocycle_trivial", o.cocycle_trivial}});
  json dsimples = json::array();
  for (const DSimpleReport& d : er.d_simples)
    dsimples.push_back(
        json{{"orbit", d.orbit}, {"lambda_deg", d.lambda_deg}, {"dim", d.dim}});
  json checks = json::array();
  for (const CheckResult& c : er.checks) {
    json jc{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(jc);
  }
  json out{{"input", er.input},
           {"orbits", orbits},
           {"d_simples", dsimples},
           {"checks", checks},
           {"pass", er.pass}};
  if (!er.bijection.empty()) {
    json bij = json::array();
    for (const BijectionEntry& e : er.bijection)
      bij.push_back(json{{"d_simple", e.d_simple}, {"double_label", e.double_label}});
    out["bijection"] = bij;
  }
  return out;
}

}  // namespace

Instance resolve_instance(const std::string& spec, bool allow_degenerate, long max_order) {
  size_t slash = spec.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= spec.size())
    throw SpecParseError("instance must look like <group-spec>/<subgroup-selector>: " + spec);
  Instance inst;
  inst.spec = spec;
  inst.m = group_from_spec(spec.substr(0, slash), max_order);
  inst.n_members = resolve_subgroup(inst.m, spec.substr(slash + 1));
  quotient_with_section(inst.m, inst.n_members);
  size_t sz = inst.n_members.size();
  if (!allow_degenerate && (sz == 1 || sz == static_cast<size_t>(inst.m.order)))
    throw DegenerateInstance("subgroup of " + spec + " is " +
                             (sz == 1 ? std::string("trivial") : std::string("everything")) +
                             "; pass --allow-degenerate to proceed");
  return inst;
}

const std::vector<std::string>& default_catalog() {
  static const std::vector<std::string> c = {"S3/index:2", "Q8/center", "Z4/index:2",
                                             "S4/index:2", "D4/center"};
  return c;
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> c = {"repa",     "sectors",  "cocycles",
                                             "dsimples", "functors", "braiding",
                                             "smatrix",  "match",    "clifford"};
  return c;
}

EquivalenceReport run_instance_checks(const Instance& inst, const std::vector<std::string>& checks,
                                      const ToleranceConfig& tol) {
  auto started = std::chrono::steady_clock::now();
  EquivalenceReport er;
  er.input = inst.spec;

  RepA ctx(inst.m, inst.n_members, tol);
  Equivariantization eq(ctx);

  for (size_t o = 0; o < eq.orbits().size(); ++o) {
    const LabelOrbit& lo = eq.orbits()[o];
    OrbitReport orep;
    for (int mem : lo.members) orep.labels.push_back(label_name(ctx, mem));
    orep.stab_order = static_cast<long>(lo.stab.size());
    orep.alpha_regular = eq.alpha_regular(static_cast<int>(o));
    orep.cocycle_trivial = eq.cocycle_trivial(static_cast<int>(o));
    er.orbits.push_back(std::move(orep));
  }
  for (const DSimple& d : eq.d_simples())
    er.d_simples.push_back(
        {d.orbit, eq.lambdas(d.orbit).degrees[d.lambda], d.dim_d});

  std::set<std::string> wanted(checks.begin(), checks.end());
  for (const std::string& name : all_check_names()) {
    if (!wanted.empty() && wanted.count(name) == 0) continue;
    CheckResult res;
    try {
      if (name == "repa")
        res = check_repa(ctx);
      else if (name == "sectors")
        res = check_sectors(ctx);
      else if (name == "cocycles")
        res = check_cocycles(eq, tol);
      else if (name == "dsimples")
        res = check_dsimples(eq);
      else if (name == "functors")
        res = check_functors(eq);
      else if (name == "braiding")
        res = check_braiding(ctx, tol);
      else if (name == "smatrix")
        res = check_smatrix(eq);
      else if (name == "match")
        res = check_match(eq, &er.bijection);
      else
        res = check_clifford(inst, tol);
    } catch (const Error& e) {
      res.name = name;
      res.pass = false;
      res.witness = e.what();
    }
    er.pass = er.pass && res.pass;
    er.checks.push_back(std::move(res));
  }
  er.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return er;
}

SuiteReport run_verify_suite(const SuiteConfig& cfg) {
  for (const std::string& name : cfg.checks)
    if (std::find(all_check_names().begin(), all_check_names().end(), name) ==
        all_check_names().end())
      throw SpecParseError("unknown check: " + name);

  std::vector<Instance> resolved;
  for (const std::string& spec : cfg.instances)
    resolved.push_back(resolve_instance(spec, cfg.allow_degenerate, cfg.max_order));

  SuiteReport rep;
  for (const Instance& inst : resolved) {
    EquivalenceReport er = run_instance_checks(inst, cfg.checks, cfg.tol);
    rep.pass = rep.pass && er.pass;
    rep.instances.push_back(std::move(er));
  }
  return rep;
}

std::string emit_report(const SuiteReport& r, const std::string& format) {
  if (format == "json") {
    json instances = json::array();
    for (const EquivalenceReport& er : r.instances) instances.push_back(report_json(er));
    json out{{"schema_version", r.schema_version}, {"instances", instances}, {"pass", r.pass}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "verification suite (schema " << r.schema_version << ")\n";
  for (const EquivalenceReport& er : r.instances) {
    os << er.input << "  [" << er.orbits.size() << " orbits, " << er.d_simples.size()
       << " simples, " << er.seconds << "s]\n";
    for (const CheckResult& c : er.checks) {
      os << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name;
      if (!c.witness.empty()) os << "  (" << c.witness << ")";
      os << "\n";
    }
  }
  os << "suite: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string equivalence_report_json(const EquivalenceReport& er) {
  return report_json(er).dump(2) + "\n";
}

std::string group_info_json(const FiniteGroup& m) {
  ConjugacyData cd = conjugacy_data(m);
  CharacterTable t = character_table(m);
  json classes = json::array();
  for (size_t c = 0; c < cd.reps.size(); ++c) {
    long size = 0;
    for (int x = 0; x < m.order; ++x)
      if (cd.class_of[x] == static_cast<int>(c)) size++;
    classes.push_back(json{{"rep", m.element_names[cd.reps[c]]}, {"size", size}});
  }
  json out{{"name", m.name},
           {"order", m.order},
           {"exponent", m.exponent()},
           {"classes", classes},
           {"irrep_degrees", t.degrees}};
  return out.dump(2) + "\n";
}

std::string double_data_json(const FiniteGroup& m) {
  DoubleData dd = double_modular_data(m);
  AxiomReport ax = verify_modular_axioms(dd);
  json labels = json::array();
  for (const DoubleSimple& l : dd.labels)
    labels.push_back(json{{"class_rep", m.element_names[l.class_rep]}, {"irrep", l.irrep}});
  json srows = json::array();
  for (int i = 0; i < dd.S.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < dd.S.cols; ++j) row.push_back(cyc_json(dd.S.at(i, j)));
    srows.push_back(row);
  }
  json t = json::array();
  for (const Cyclotomic& v : dd.T) t.push_back(cyc_json(v));
  json out{{"group", m.name},
           {"num_simples", dd.num_labels()},
           {"labels", labels},
           {"dims", dd.dims},
           {"s", srows},
           {"t", t},
           {"axioms",
            json{{"s_unitary", ax.s_unitary},
                 {"s_symmetric", ax.s_symmetric},
                 {"st_cubed_proportional_s2", ax.st_cubed_proportional_s2},
                 {"s2_permutation", ax.s2_permutation},
                 {"det_nonzero", ax.det_nonzero}}}};
  return out.dump(2) + "\n";
}

std::string repa_json(const Instance& inst, const ToleranceConfig& tol) {
  RepA ctx(inst.m, inst.n_members, tol);
  json labels = json::array();
  std::map<std::string, long> sector_sum;
  long untwisted = 0;
  for (int l = 0; l < static_cast<int>(ctx.labels().size()); ++l) {
    const SimpleLabel& lab = ctx.labels()[l];
    labels.push_back(json{{"m0", inst.m.element_names[lab.m0]},
                          {"pi", lab.pi},
                          {"dim", lab.dim_a},
                          {"sector", lab.sector}});
    sector_sum[std::to_string(lab.sector)] += lab.dim_a * lab.dim_a;
    if (lab.sector == 0) untwisted++;
  }
  json out{{"input", inst.spec},
           {"num_labels", labels.size()},
           {"labels", labels},
           {"sector_squared_dims", sector_sum},
           {"untwisted_labels", untwisted}};
  return out.dump(2) + "\n";
}

std::string orbifold_json(const Instance& inst, const ToleranceConfig& tol) {
  return equivalence_report_json(run_instance_checks(inst, all_check_names(), tol));
}

std::string clifford_json(const Instance& inst, const ToleranceConfig& tol) {
  CliffordReport rep = clifford_check(inst.m, inst.n_members, tol);
  json orbits = json::array();
  for (const CliffordOrbit& o : rep.orbits)
    orbits.push_back(json{{"base", o.base},
                          {"size", o.size},
                          {"stab_order", o.stab_order},
                          {"cocycle_trivial", o.cocycle_trivial},
                          {"lambda_degrees", o.lambda_degrees}});
  json out{{"input", inst.spec},
           {"orbits", orbits},
           {"degrees", rep.degrees},
           {"expected", rep.expected},
           {"nontrivial_cocycle_orbits", rep.nontrivial_cocycle_orbits},
           {"pass", rep.pass}};
  return out.dump(2) + "\n";
}

}  // namespace orbifold
