#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "orbifold/character_table.hpp"
#include "orbifold/common.hpp"
#include "orbifold/group.hpp"
#include "orbifold/matrix_rep.hpp"

namespace orbifold {

// Simple module label: canonical (minimal) representative of an N-conjugacy
// orbit in M together with an irrep of its centralizer in N.
struct SimpleLabel {
  int m0 = 0;
  int pi = 0;
  long dim_a = 1;  // [N : C_N(m0)] * deg(pi)
  int sector = 0;  // element of G = M/N
  bool operator==(const SimpleLabel& o) const { return m0 == o.m0 && pi == o.pi; }
};

// Concrete module: basis slots graded by elements of M, with N acting by
// unitary matrices that shuffle grades by conjugation.
struct GradedModule {
  int dim = 0;
  std::vector<int> grade;               // per slot, an element of M
  std::vector<Eigen::MatrixXcd> n_act;  // per N-subgroup index
};

// Shared context for one (M, N) pair: quotient data, N-orbit structure,
// centralizer tables/irreps, the simple labels, and the label-level
// operations (sector, G-action, fusion, duals).
class RepA {
 public:
  // section, when given, replaces the default minimal-representative coset
  // lifts; it must pick one element from each coset and keep the identity
  RepA(const FiniteGroup& m, const std::vector<int>& n_members, const ToleranceConfig& tol = {},
       const std::vector<int>* section = nullptr);

  const FiniteGroup& parent() const { return m_; }
  const SubgroupView& n() const { return n_; }
  const QuotientData& quot() const { return q_; }
  const FiniteGroup& g() const { return q_.quotient; }
  const ToleranceConfig& tol() const { return tol_; }

  const std::vector<SimpleLabel>& labels() const { return labels_; }
  int label_index(int m0, int pi) const;
  int canonical_rep(int m) const { return canon_[m]; }
  const std::vector<int>& orbit_members(int m0) const;  // ascending
  const SubgroupView& cent(int m0) const;
  const CharacterTable& cent_table(int m0) const;
  const std::vector<MatrixRep>& cent_irreps(int m0) const;
  // left coset representatives of C_N(m0) in N, aligned with orbit_members
  const std::vector<int>& coset_reps(int m0) const;

  GradedModule module_of(int label) const;
  int sector_of(int label) const { return labels_[label].sector; }
  // label of the conjugate (m0, pi) -> (gt m0 gt^{-1}, pi o conj_{gt^{-1}}),
  // canonicalized; a left action of G permuting labels
  int act(int g, int label) const { return act_table_[g][label]; }
  // full multiplicity vector over labels of the tensor product
  std::vector<long> fuse(int x, int y) const;
  int dual(int label) const;

 private:
  int act_label(int g, int label) const;
  int match_conjugated_irrep(int m0_from, int pi, int m0_to, int w) const;

  FiniteGroup m_;
  SubgroupView n_;
  QuotientData q_;
  ToleranceConfig tol_;
  std::vector<int> canon_;
  std::map<int, int> rep_slot_;  // canonical rep -> index into per-rep caches
  std::vector<std::vector<int>> orbit_members_;
  std::vector<SubgroupView> cents_;
  std::vector<CharacterTable> cent_tables_;
  std::vector<std::vector<MatrixRep>> cent_irreps_;
  std::vector<std::vector<int>> coset_reps_;
  std::vector<SimpleLabel> labels_;
  std::map<std::pair<int, int>, int> label_index_;
  std::vector<std::vector<int>> act_table_;
};

}  // namespace orbifold
