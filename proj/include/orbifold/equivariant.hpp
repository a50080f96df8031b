#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orbifold/double_data.hpp"
#include "orbifold/repa.hpp"

namespace orbifold {

// One orbit of the quotient action on simple labels.
struct LabelOrbit {
  std::vector<int> members;      // label indices, ascending
  int base = 0;                  // minimal member
  std::vector<int> stab;         // elements of G fixing the base, ascending
  std::vector<int> transversal;  // per member: minimal g sending base there
};

// Simple equivariant object: an orbit plus an irrep of the twisted
// stabilizer algebra at its base.
struct DSimple {
  int orbit = 0;
  int lambda = 0;
  long dim_d = 1;
};

class Equivariantization {
 public:
  explicit Equivariantization(const RepA& ctx);

  const RepA& ctx() const { return ctx_; }
  const CharacterTable& parent_table() const { return table_m_; }
  const std::vector<LabelOrbit>& orbits() const { return orbits_; }
  int orbit_of_label(int label) const { return orbit_of_[label]; }
  const SubgroupView& stabilizer(int orbit) const { return stabs_[orbit]; }
  const CocycleTable& cocycle(int orbit) const { return cocycles_[orbit]; }
  int alpha_regular(int orbit) const { return alpha_regular_[orbit]; }
  // whether the twisted stabilizer algebra has as many simples as the
  // untwisted one
  bool cocycle_trivial(int orbit) const { return trivial_[orbit]; }
  const TwistedIrreps& lambdas(int orbit) const { return lambdas_[orbit]; }
  const std::vector<DSimple>& d_simples() const { return dsimples_; }
  // orbit lies entirely in the trivial sector
  bool untwisted(int d) const;

  // the unique-up-to-scale module map from the g-twist of X_label to the
  // module at g.label, normalized unitary with positive leading entry;
  // exact identity at g = e
  Eigen::MatrixXcd intertwiner(int label, int g) const;

  // multiplicity of each equivariant simple in the induction of X_label
  std::vector<long> induction_image(int label) const;
  // [d_simple][label]: multiplicities of the underlying module decomposition
  std::vector<std::vector<long>> functor_multiplicities() const;

  // exact character of each equivariant simple as a representation of the
  // parent group, one value per parent conjugacy class
  const std::vector<std::vector<Cyclotomic>>& d_characters() const { return d_chars_; }
  // s[lambda][d] = (1/|M|) sum over sectors g of dim_A of the g-part of the
  // underlying module of d, weighted by the quotient character lambda at g;
  // exact, and the trivial-lambda row is dim_d/|M|
  std::vector<std::vector<Cyclotomic>> smatrix_rows() const;

 private:
  void build_orbits();
  void build_cocycles();
  void build_characters();

  RepA ctx_;
  CharacterTable table_m_;
  std::vector<LabelOrbit> orbits_;
  std::vector<int> orbit_of_;
  std::vector<SubgroupView> stabs_;
  std::vector<GradedModule> base_modules_;
  std::vector<std::vector<Eigen::MatrixXcd>> stab_intertwiners_;
  std::vector<CocycleTable> cocycles_;
  std::vector<int> alpha_regular_;
  std::vector<bool> trivial_;
  std::vector<TwistedIrreps> lambdas_;
  std::vector<DSimple> dsimples_;
  std::vector<std::vector<Cyclotomic>> d_chars_;
};

struct MatchReport {
  bool counts_match = false;
  bool dims_match = false;
  bool bijection_found = false;
  bool s_rows_match = false;
  long d0_count = 0;
  long c1_census = 0;
  bool c1_match = false;
  std::vector<int> assignment;  // d-simple index -> double label index
  bool ok() const {
    return counts_match && dims_match && bijection_found && s_rows_match && c1_match;
  }
};

// Compare the equivariantized category against the untwisted double of the
// parent group: simple counts, exact dimension multisets, the untwisted-part
// census, and an exact character-row bijection.
MatchReport match_to_double(const Equivariantization& eq);

struct CliffordOrbit {
  int base = 0;  // irrep index of N
  int size = 1;
  int stab_order = 1;
  bool cocycle_trivial = true;
  std::vector<int> lambda_degrees;
};

struct CliffordReport {
  std::vector<CliffordOrbit> orbits;
  std::vector<long> degrees;   // simple dims of the equivariantized Rep N, sorted
  std::vector<long> expected;  // character degrees of M, sorted
  int nontrivial_cocycle_orbits = 0;
  bool pass = false;
};

// Decompose the equivariantization of Rep N under G = M/N into orbit and
// twisted-stabilizer data and compare the resulting degrees with the
// character degrees of M.
CliffordReport clifford_check(const FiniteGroup& m, const std::vector<int>& n_members,
                              const ToleranceConfig& tol = {});

}  // namespace orbifold
