#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "orbifold/common.hpp"
#include "orbifold/equivariant.hpp"
#include "orbifold/group.hpp"
#include "orbifold/report.hpp"

namespace {

long max_order_from_env() {
  const char* env = std::getenv("ORBIFOLD_MAX_ORDER");
  if (env == nullptr) return 64;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return 64;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"doubles of finite groups, graded module categories, and their equivariantizations"};
  app.require_subcommand(1);

  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool allow_degenerate = false;
  long max_order = max_order_from_env();
  app.add_option("--tol", tol, "tolerance for the approximate checks")->capture_default_str();
  app.add_option("--seed", seed, "seed for the randomized checks")->capture_default_str();
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--allow-degenerate", allow_degenerate, "accept a trivial or full subgroup");
  app.add_option("--max-order", max_order, "largest group order accepted by the parser")
      ->capture_default_str();

  std::string group_spec;
  std::string instance_spec;

  CLI::App* group = app.add_subcommand("group", "inspect a finite group");
  group->require_subcommand(1);
  group->fallthrough();
  CLI::App* info = group->add_subcommand("info", "conjugacy classes and irrep degrees");
  info->add_option("spec", group_spec, "group spec, e.g. S4 or Z2xZ2")->required();
  info->fallthrough();

  CLI::App* dbl = app.add_subcommand("double", "modular data of the double of a group");
  dbl->add_option("spec", group_spec, "group spec")->required();
  dbl->fallthrough();

  CLI::App* repa = app.add_subcommand("repa", "graded simple labels of an (M,N) instance");
  repa->add_option("instance", instance_spec, "<group-spec>/<subgroup-selector>")->required();
  repa->fallthrough();

  CLI::App* orb = app.add_subcommand("orbifold", "run every check on one instance");
  orb->add_option("instance", instance_spec, "<group-spec>/<subgroup-selector>")->required();
  orb->fallthrough();

  CLI::App* cliff = app.add_subcommand("clifford", "equivariantize Rep N and compare with Rep M");
  cliff->add_option("instance", instance_spec, "<group-spec>/<subgroup-selector>")->required();
  cliff->fallthrough();

  std::vector<std::string> instances;
  std::vector<std::string> checks;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("instances", instances, "instances to verify (default: built-in catalog)");
  verify->add_option("--checks", checks, "comma-separated subset of checks")->delimiter(',');
  verify->fallthrough();

  CLI11_PARSE(app, argc, argv);

  orbifold::ToleranceConfig tc;
  tc.eps_abs = tol;
  tc.eps_rel = tol;
  tc.rng_seed = seed;

  try {
    if (info->parsed()) {
      std::cout << orbifold::group_info_json(orbifold::group_from_spec(group_spec, max_order));
      return 0;
    }
    if (dbl->parsed()) {
      std::cout << orbifold::double_data_json(orbifold::group_from_spec(group_spec, max_order));
      return 0;
    }
    if (repa->parsed()) {
      orbifold::Instance inst =
          orbifold::resolve_instance(instance_spec, allow_degenerate, max_order);
      std::cout << orbifold::repa_json(inst, tc);
      return 0;
    }
    if (orb->parsed()) {
      orbifold::Instance inst =
          orbifold::resolve_instance(instance_spec, allow_degenerate, max_order);
      orbifold::EquivalenceReport er =
          orbifold::run_instance_checks(inst, orbifold::all_check_names(), tc);
      if (format == "text") {
        orbifold::SuiteReport sr;
        sr.pass = er.pass;
        sr.instances.push_back(std::move(er));
        std::cout << orbifold::emit_report(sr, "text");
        return sr.pass ? 0 : 1;
      }
      std::cout << orbifold::equivalence_report_json(er);
      return er.pass ? 0 : 1;
    }
    if (cliff->parsed()) {
      orbifold::Instance inst =
          orbifold::resolve_instance(instance_spec, allow_degenerate, max_order);
      std::string payload = orbifold::clifford_json(inst, tc);
      std::cout << payload;
      return orbifold::clifford_check(inst.m, inst.n_members, tc).pass ? 0 : 1;
    }
    orbifold::SuiteConfig cfg;
    cfg.instances = instances.empty() ? orbifold::default_catalog() : instances;
    cfg.checks = checks;
    cfg.tol = tc;
    cfg.allow_degenerate = allow_degenerate;
    cfg.max_order = max_order;
    orbifold::SuiteReport rep = orbifold::run_verify_suite(cfg);
    std::cout << orbifold::emit_report(rep, format);
    return rep.pass ? 0 : 1;
  } catch (const orbifold::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
