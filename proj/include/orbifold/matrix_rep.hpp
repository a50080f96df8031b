#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "orbifold/character_table.hpp"
#include "orbifold/common.hpp"
#include "orbifold/group.hpp"

namespace orbifold {

// Unitary matrices, one per group element, multiplying like the group (or
// projectively, for twisted-algebra irreps).
struct MatrixRep {
  int degree = 0;
  std::vector<Eigen::MatrixXcd> mats;
  const Eigen::MatrixXcd& at(int g) const { return mats[g]; }
};

// One unitary matrix rep per character-table row, in row order. Splits the
// regular representation by a seeded random Hermitian commutant element;
// retries with fresh randomness up to three times before SplitFailure.
std::vector<MatrixRep> explicit_irreps(const FiniteGroup& g, const CharacterTable& table,
                                       const ToleranceConfig& tol = {});

// 2-cocycle on a group, unit-modulus entries, normalized so that
// alpha(e,g) = alpha(g,e) = 1.
struct CocycleTable {
  int order = 0;
  std::vector<std::complex<double>> alpha;  // row-major g * order + h

  static CocycleTable trivial(int n) {
    CocycleTable c;
    c.order = n;
    c.alpha.assign(static_cast<size_t>(n) * n, {1.0, 0.0});
    return c;
  }
  std::complex<double> at(int g, int h) const {
    return alpha[static_cast<size_t>(g) * order + h];
  }
  std::complex<double>& at(int g, int h) { return alpha[static_cast<size_t>(g) * order + h]; }
};

// Throws CocycleInvalid unless |alpha| = 1, the 2-cocycle identity
// alpha(g,h) alpha(gh,k) = alpha(g,hk) alpha(h,k) holds, and alpha is
// normalized, all within tolerance.
void validate_cocycle(const FiniteGroup& gs, const CocycleTable& a,
                      const ToleranceConfig& tol = {});

// classes whose representative g has alpha(g,h) = alpha(h,g) for every h
// centralizing g
int alpha_regular_class_count(const FiniteGroup& gs, const CocycleTable& a,
                              const ToleranceConfig& tol = {});

struct TwistedIrreps {
  std::vector<int> degrees;
  // projective character per group element (not a class function in general)
  std::vector<std::vector<std::complex<double>>> characters;
  // R(g) R(h) = alpha(g,h) R(gh)
  std::vector<MatrixRep> reps;
};

// Irreducible modules of the alpha-twisted group algebra, found by splitting
// the twisted regular representation (e_g . e_h = alpha(g,h) e_{gh}) with the
// seeded commutant method. Checks #irreps = #alpha-regular classes and
// sum deg^2 = |Gs|.
TwistedIrreps twisted_algebra_irreps(const FiniteGroup& gs, const CocycleTable& alpha,
                                     const ToleranceConfig& tol = {});

}  // namespace orbifold
