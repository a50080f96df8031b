#pragma once

#include <vector>

#include "orbifold/character_table.hpp"
#include "orbifold/cyclotomic.hpp"
#include "orbifold/group.hpp"

namespace orbifold {

// Simple object of the untwisted double of M: a conjugacy class (by its
// minimal representative) together with an irrep of the centralizer.
struct DoubleSimple {
  int class_rep = 0;
  int irrep = 0;
  bool operator==(const DoubleSimple& o) const {
    return class_rep == o.class_rep && irrep == o.irrep;
  }
};

struct DoubleData {
  FiniteGroup m;
  ConjugacyData classes;
  std::vector<SubgroupView> centralizers;   // per class
  std::vector<CharacterTable> cent_tables;  // per class
  std::vector<DoubleSimple> labels;         // (class index asc, irrep asc)
  std::vector<long> dims;                   // |class| * deg
  CycMat S;
  std::vector<Cyclotomic> T;

  int num_labels() const { return static_cast<int>(labels.size()); }
  int class_index_of_label(int i) const { return classes.class_of[labels[i].class_rep]; }
};

// label list only, cheap (no character tables needed for the count)
std::vector<DoubleSimple> double_simples(const FiniteGroup& m);

// Exact S and T matrices:
//   S_{(a,chi),(b,eta)} = (1/(|C(a)||C(b)|)) sum over g in M with
//                         a g b g^{-1} = g b g^{-1} a of
//                         conj(chi(g b g^{-1})) conj(eta(g^{-1} a g))
//   T_{(a,chi)} = chi(a)/chi(e)
// All ModularData invariants (S symmetric and unitary, T roots of unity,
// first S row = dims/|M|, sum dims^2 = |M|^2) are verified exactly before
// returning; AxiomFailure otherwise.
DoubleData double_modular_data(const FiniteGroup& m);

// Verlinde coefficients N_{ij}^k = sum_m S_im S_jm conj(S_km)/S_0m, exact.
// Throws NonIntegralFusion if any coefficient is not a nonnegative integer.
std::vector<std::vector<std::vector<long>>> verlinde_fusion(const DoubleData& md);

struct AxiomReport {
  bool s_unitary = false;
  bool s_symmetric = false;
  bool st_cubed_proportional_s2 = false;
  bool s2_permutation = false;
  bool det_nonzero = false;
  bool all() const {
    return s_unitary && s_symmetric && st_cubed_proportional_s2 && s2_permutation && det_nonzero;
  }
};
AxiomReport verify_modular_axioms(const DoubleData& md);

}  // namespace orbifold
