#pragma once

#include <string>
#include <vector>

namespace orbifold {

// Finite group with a full multiplication table. Element 0 is the identity.
// Element order comes from breadth-first closure of the generators, so every
// construction from the same spec yields the same table.
struct FiniteGroup {
  int order = 0;
  std::vector<int> cayley;  // row-major: cayley[a * order + b] = a*b
  std::vector<int> inverse;
  std::vector<int> generators;
  std::vector<std::vector<int>> perms;  // faithful permutation action per element
  std::vector<std::string> element_names;
  std::string name;

  int mul(int a, int b) const { return cayley[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  // g x g^{-1}
  int conj(int g, int x) const { return mul(mul(g, x), inverse[g]); }
  int element_order(int a) const;
  long exponent() const;
};

// Parses a catalog name (Z{n}, S{n}, A{n} for n<=5, D{n}, Q8, products joined
// by "x") or "perm:" with cycle-notation generators, then closes under
// multiplication. Throws SpecParseError / TooLarge.
FiniteGroup group_from_spec(const std::string& spec, long max_order = 64);

// Runs the full axiom battery on a constructed table (associativity, identity,
// inverses, generator closure). Throws Error on violation.
void validate_group(const FiniteGroup& g);

struct ConjugacyData {
  std::vector<int> class_of;               // element -> class index
  std::vector<int> reps;                   // class -> smallest member
  std::vector<std::vector<int>> members;   // class -> sorted members
  std::vector<std::vector<int>> centralizers;  // class -> centralizer of rep
};
ConjugacyData conjugacy_data(const FiniteGroup& g);

std::vector<int> centralizer_of(const FiniteGroup& g, int a);
std::vector<int> center_members(const FiniteGroup& g);
std::vector<int> derived_members(const FiniteGroup& g);
// subgroup generated by the given elements
std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);
bool is_normal(const FiniteGroup& g, const std::vector<int>& members);
// every normal subgroup, each as a sorted member list, ordered by (size, members)
std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g);

// A subgroup repackaged as a standalone group plus index maps both ways.
struct SubgroupView {
  FiniteGroup group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 for elements outside the subgroup
};
SubgroupView subgroup_view(const FiniteGroup& g, std::vector<int> members);

struct QuotientData {
  FiniteGroup quotient;
  std::vector<int> projection;  // parent element -> quotient element
  std::vector<int> section;     // quotient element -> minimal coset representative
};
// Throws NotNormal when some conjugate of the subgroup escapes it.
QuotientData quotient_with_section(const FiniteGroup& m, const std::vector<int>& normal_members);

// Subgroup selector: "center", "derived", "index:<k>", "trivial", "full", or
// "gens:" with a comma-separated list of cycle-notation permutations or
// element indices. Throws AmbiguousSelector / SpecParseError.
std::vector<int> resolve_subgroup(const FiniteGroup& g, const std::string& selector);

}  // namespace orbifold
