// End-to-end acceptance run: one line per criterion, exit code = failure count.
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbifold/character_table.hpp"
#include "orbifold/double_data.hpp"
#include "orbifold/equivariant.hpp"
#include "orbifold/group.hpp"
#include "orbifold/repa.hpp"
#include "orbifold/report.hpp"

using namespace orbifold;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", n, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) failures++;
}

const std::vector<std::string>& catalog() { return default_catalog(); }

bool run_checks(const std::vector<std::string>& names, std::string& detail) {
  SuiteConfig cfg;
  cfg.instances = catalog();
  cfg.checks = names;
  SuiteReport r = run_verify_suite(cfg);
  if (!r.pass) {
    std::ostringstream os;
    for (const EquivalenceReport& er : r.instances)
      for (const CheckResult& c : er.checks)
        if (!c.pass) os << er.input << ": " << c.witness << "; ";
    detail = os.str();
  }
  return r.pass;
}

void criterion1() {
  const std::vector<std::string> groups = {"Z2", "Z3", "Z4", "Z2xZ2", "S3",
                                           "D4", "Q8", "A4",  "S4"};
  bool pass = true;
  std::string detail;
  for (const std::string& spec : groups) {
    FiniteGroup m = group_from_spec(spec);
    DoubleData dd = double_modular_data(m);

    long census = 0;
    for (const CharacterTable& t : dd.cent_tables) census += t.num_irreps();
    if (census != dd.num_labels()) {
      pass = false;
      detail = spec + ": label count vs centralizer-pair census";
      break;
    }

    long long sq = 0;
    for (long d : dd.dims) sq += static_cast<long long>(d) * d;
    if (sq != static_cast<long long>(m.order) * m.order) {
      pass = false;
      detail = spec + ": dimension sum";
      break;
    }

    AxiomReport ax = verify_modular_axioms(dd);
    if (!ax.all()) {
      pass = false;
      detail = spec + ": modular axioms";
      break;
    }

    auto fus = verlinde_fusion(dd);
    int n = dd.num_labels();
    for (int i = 0; i < n && pass; ++i)
      for (int j = 0; j < n && pass; ++j)
        for (int l = 0; l < n && pass; ++l)
          for (int mm = 0; mm < n && pass; ++mm) {
            long lhs = 0, rhs = 0;
            for (int k = 0; k < n; ++k) {
              lhs += fus[i][j][k] * fus[k][l][mm];
              rhs += fus[j][l][k] * fus[i][k][mm];
            }
            if (lhs != rhs) {
              pass = false;
              detail = spec + ": fusion associativity";
            }
          }
    if (!pass) break;
  }
  report(1, "double of each small group is modular with integral associative fusion", pass,
         detail);
}

void criterion2() {
  std::string detail;
  bool pass = run_checks({"repa"}, detail);
  report(2, "graded simples: untwisted part matches the double of N, sectors fill up", pass,
         detail);
}

void criterion3() {
  std::string detail;
  bool pass = run_checks({"sectors"}, detail);
  report(3, "sector rules under conjugation, fusion, and duals", pass, detail);
}

void criterion4() {
  std::string detail;
  bool pass = run_checks({"clifford"}, detail);

  const std::vector<std::string> pairs = {"S3/index:2", "Q8/center", "S4/index:2",
                                          "S4/index:6", "D4/center"};
  for (const std::string& spec : pairs) {
    if (!pass) break;
    Instance inst = resolve_instance(spec);
    CliffordReport rep = clifford_check(inst.m, inst.n_members, ToleranceConfig{});
    if (!rep.pass) {
      pass = false;
      detail = spec + ": degree mismatch";
    }
  }
  if (pass) {
    Instance q8 = resolve_instance("Q8/center");
    CliffordReport rep = clifford_check(q8.m, q8.n_members, ToleranceConfig{});
    if (rep.nontrivial_cocycle_orbits != 1) {
      pass = false;
      detail = "Q8/center: wanted exactly one nontrivial-cocycle orbit";
    } else {
      for (const CliffordOrbit& o : rep.orbits)
        if (!o.cocycle_trivial &&
            !(o.lambda_degrees.size() == 1 && o.lambda_degrees[0] == 2)) {
          pass = false;
          detail = "Q8/center: projective piece is not a single degree-2 irrep";
        }
    }
  }
  report(4, "equivariantizing Rep N recovers Rep M, with the Q8 projective piece", pass, detail);
}

void criterion5() {
  std::string detail;
  bool pass = run_checks({"match"}, detail);

  if (pass) {
    Instance s3 = resolve_instance("S3/index:2");
    RepA ctx(s3.m, s3.n_members, ToleranceConfig{});
    Equivariantization eq(ctx);
    std::multiset<long> dims;
    for (const DSimple& d : eq.d_simples()) dims.insert(d.dim_d);
    if (eq.d_simples().size() != 8 || dims != std::multiset<long>{1, 1, 2, 2, 2, 2, 3, 3}) {
      pass = false;
      detail = "S3/index:2: wanted 8 simples with dims {1,1,2,2,2,2,3,3}";
    }
  }
  if (pass) {
    Instance q8 = resolve_instance("Q8/center");
    RepA ctx(q8.m, q8.n_members, ToleranceConfig{});
    Equivariantization eq(ctx);
    if (eq.d_simples().size() != 22) {
      pass = false;
      detail = "Q8/center: wanted 22 simples";
    }
  }
  report(5, "equivariantization matches the double of M: counts, dims, character rows", pass,
         detail);
}

void criterion6() {
  std::string detail;
  bool pass = run_checks({"functors"}, detail);
  report(6, "induction and restriction are transposes with the expected multiplicities", pass,
         detail);
}

void criterion7() {
  std::string detail;
  bool pass = run_checks({"braiding"}, detail);
  report(7, "braiding descends, satisfies Yang-Baxter, and is transparent on the unit", pass,
         detail);
}

void criterion8() {
  SuiteConfig cfg;
  cfg.instances = catalog();
  cfg.tol.rng_seed = 20250816;
  std::string a = emit_report(run_verify_suite(cfg), "json");
  std::string b = emit_report(run_verify_suite(cfg), "json");
  report(8, "repeated runs with one seed emit byte-identical reports", a == b && !a.empty());
}

void guard(int n, void (*fn)()) {
  try {
    fn();
  } catch (const Error& e) {
    report(n, "unexpected error", false, e.what());
  }
}

}  // namespace

int main() {
  guard(1, criterion1);
  guard(2, criterion2);
  guard(3, criterion3);
  guard(4, criterion4);
  guard(5, criterion5);
  guard(6, criterion6);
  guard(7, criterion7);
  guard(8, criterion8);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
