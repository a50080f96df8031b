#pragma once

#include <Eigen/Dense>
#include <vector>

#include "orbifold/common.hpp"
#include "orbifold/repa.hpp"

namespace orbifold {

// a graded module together with a lift of the quotient action: phi[g] moves
// the grade-m component to the conj(section(g), m) component, phi[e] = id,
// and phi[g] phi[h] = rho(section(g) section(h) section(gh)^-1) phi[gh]
struct DObject {
  GradedModule mod;
  std::vector<Eigen::MatrixXcd> phi;
};

// one slot at the identity grade, trivial action, trivial lift
DObject unit_dobject(const RepA& ctx);

// the free lift of a label's module: one shifted copy per quotient element
DObject ind_dobject(const RepA& ctx, int label);

// action of a parent element through the lift; multiplicative in m exactly
Eigen::MatrixXcd parent_action(const RepA& ctx, const DObject& y, int m);

// grades multiply, subgroup and lift act diagonally
DObject tensor_dobject(const RepA& ctx, const DObject& x, const DObject& y);

// x (x) y -> y (x) x, sending v (x) w to parent_action(grade of v) w (x) v
Eigen::MatrixXcd braiding_matrix(const RepA& ctx, const GradedModule& x, const DObject& y);

// largest violation of the lift axioms on y itself (identity at e, grade
// support, subgroup equivariance, twisted multiplicativity)
double lift_axiom_residual(const RepA& ctx, const DObject& y);

// largest violation of grade support, subgroup equivariance, and lift
// equivariance of the braiding between x and y; throws DescentFailure above
// the tolerance
double check_braiding_descent(const RepA& ctx, const DObject& x, const DObject& y,
                              double tol = 1e-7);

// braid three objects across both orders of adjacent swaps, applied to
// seeded random vectors; throws YBEFailure above the tolerance
double check_yang_baxter(const RepA& ctx, const DObject& a, const DObject& b, const DObject& c,
                         Rng& rng, int vectors = 3, double tol = 1e-7);

// distance of both unit double braidings from the identity
double unit_double_braiding_residual(const RepA& ctx, const DObject& y);

// averaging projector of the parent action; idempotent with rank equal to
// the dimension of the invariants
Eigen::MatrixXcd sym_projector(const RepA& ctx, const DObject& y);

}  // namespace orbifold
