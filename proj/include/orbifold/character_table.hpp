#pragma once

#include <vector>

#include "orbifold/cyclotomic.hpp"
#include "orbifold/group.hpp"

namespace orbifold {

// Exact character table. Row 0 is the trivial character; remaining rows are
// sorted by (degree, value key) so the table is reproducible.
struct CharacterTable {
  int group_order = 0;
  ConjugacyData classes;
  std::vector<int> degrees;                     // per irrep
  std::vector<std::vector<Cyclotomic>> values;  // [irrep][class]

  int num_classes() const { return static_cast<int>(classes.reps.size()); }
  int num_irreps() const { return static_cast<int>(degrees.size()); }
  const Cyclotomic& value(int irrep, int cls) const { return values[irrep][cls]; }
  const Cyclotomic& value_at_element(int irrep, int g) const {
    return values[irrep][classes.class_of[g]];
  }
};

// Burnside-Dixon: simultaneous eigenvectors of the class-multiplication
// matrices over a suitable prime field, lifted to exact cyclotomic values of
// conductor dividing exponent(G). Both orthogonality relations are verified
// before returning.
CharacterTable character_table(const FiniteGroup& g);

// Multiplicity of each irrep in a module with the given class function as
// character: m_i = (1/|G|) sum_c |c| chi(c) conj(chi_i(c)), exact. Throws
// NotACharacter unless every m_i is a nonnegative integer.
std::vector<long> decompose_by_characters(const std::vector<Cyclotomic>& module_char,
                                          const CharacterTable& table);

}  // namespace orbifold
