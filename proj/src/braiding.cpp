#include "orbifold/braiding.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace orbifold {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// apply sig to the leading pair of factors, the trailing dimension rides along
Eigen::VectorXcd apply_first(const Eigen::MatrixXcd& sig, const Eigen::VectorXcd& v, int tail) {
  using RM = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  int head = static_cast<int>(sig.cols());
  Eigen::Map<const RM> vin(v.data(), head, tail);
  Eigen::VectorXcd out(sig.rows() * tail);
  Eigen::Map<RM> vout(out.data(), sig.rows(), tail);
  vout = sig * vin;
  return out;
}

// apply sig to the trailing pair of factors, block by leading index
Eigen::VectorXcd apply_last(const Eigen::MatrixXcd& sig, const Eigen::VectorXcd& v) {
  int in = static_cast<int>(sig.cols());
  int outn = static_cast<int>(sig.rows());
  int blocks = static_cast<int>(v.size()) / in;
  Eigen::VectorXcd out(static_cast<Eigen::Index>(blocks) * outn);
  for (int b = 0; b < blocks; ++b) out.segment(b * outn, outn) = sig * v.segment(b * in, in);
  return out;
}

}  // namespace

DObject unit_dobject(const RepA& ctx) {
  DObject u;
  u.mod.dim = 1;
  u.mod.grade = {0};
  u.mod.n_act.assign(ctx.n().group.order, Eigen::MatrixXcd::Identity(1, 1));
  u.phi.assign(ctx.g().order, Eigen::MatrixXcd::Identity(1, 1));
  return u;
}

DObject ind_dobject(const RepA& ctx, int label) {
  const FiniteGroup& m = ctx.parent();
  const SubgroupView& n = ctx.n();
  const QuotientData& q = ctx.quot();
  GradedModule x = ctx.module_of(label);
  int o = q.quotient.order;
  int dx = x.dim;
  int dim = o * dx;

  DObject y;
  y.mod.dim = dim;
  y.mod.grade.resize(dim);
  for (int k = 0; k < o; ++k)
    for (int i = 0; i < dx; ++i) y.mod.grade[k * dx + i] = m.conj(q.section[k], x.grade[i]);

  y.mod.n_act.assign(n.group.order, Eigen::MatrixXcd::Zero(dim, dim));
  for (int ni = 0; ni < n.group.order; ++ni) {
    int nn = n.to_parent[ni];
    for (int k = 0; k < o; ++k) {
      int local = n.from_parent[m.conj(m.inv(q.section[k]), nn)];
      y.mod.n_act[ni].block(k * dx, k * dx, dx, dx) = x.n_act[local];
    }
  }

  y.phi.assign(o, Eigen::MatrixXcd::Zero(dim, dim));
  for (int g = 0; g < o; ++g) {
    for (int k = 0; k < o; ++k) {
      int gk = q.quotient.mul(g, k);
      int mu = m.mul(m.inv(q.section[gk]), m.mul(q.section[g], q.section[k]));
      y.phi[g].block(gk * dx, k * dx, dx, dx) = x.n_act[n.from_parent[mu]];
    }
  }
  return y;
}

Eigen::MatrixXcd parent_action(const RepA& ctx, const DObject& y, int mm) {
  const FiniteGroup& m = ctx.parent();
  const QuotientData& q = ctx.quot();
  int p = q.projection[mm];
  int nm = m.mul(mm, m.inv(q.section[p]));
  return y.mod.n_act[ctx.n().from_parent[nm]] * y.phi[p];
}

DObject tensor_dobject(const RepA& ctx, const DObject& x, const DObject& y) {
  const FiniteGroup& m = ctx.parent();
  int dx = x.mod.dim, dy = y.mod.dim;
  DObject t;
  t.mod.dim = dx * dy;
  t.mod.grade.resize(t.mod.dim);
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dy; ++j) t.mod.grade[i * dy + j] = m.mul(x.mod.grade[i], y.mod.grade[j]);
  t.mod.n_act.resize(ctx.n().group.order);
  for (int ni = 0; ni < ctx.n().group.order; ++ni)
    t.mod.n_act[ni] = kron(x.mod.n_act[ni], y.mod.n_act[ni]);
  t.phi.resize(ctx.g().order);
  for (int g = 0; g < ctx.g().order; ++g) t.phi[g] = kron(x.phi[g], y.phi[g]);
  return t;
}

Eigen::MatrixXcd braiding_matrix(const RepA& ctx, const GradedModule& x, const DObject& y) {
  int dx = x.dim, dy = y.mod.dim;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dy * dx, dx * dy);
  for (int j = 0; j < dx; ++j) {
    Eigen::MatrixXcd th = parent_action(ctx, y, x.grade[j]);
    for (int iy = 0; iy < dy; ++iy)
      for (int jy = 0; jy < dy; ++jy) out(iy * dx + j, j * dy + jy) = th(iy, jy);
  }
  return out;
}

double lift_axiom_residual(const RepA& ctx, const DObject& y) {
  const FiniteGroup& m = ctx.parent();
  const SubgroupView& n = ctx.n();
  const QuotientData& q = ctx.quot();
  int o = q.quotient.order;
  int d = y.mod.dim;
  double worst = (y.phi[0] - Eigen::MatrixXcd::Identity(d, d)).norm();

  for (int g = 0; g < o; ++g) {
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (std::abs(y.phi[g](r, c)) > 1e-9 &&
            y.mod.grade[r] != m.conj(q.section[g], y.mod.grade[c]))
          worst = std::max(worst, 1.0);
    for (int ni = 0; ni < n.group.order; ++ni) {
      int moved = n.from_parent[m.conj(q.section[g], n.to_parent[ni])];
      worst = std::max(worst,
                       (y.phi[g] * y.mod.n_act[ni] - y.mod.n_act[moved] * y.phi[g]).norm());
    }
    for (int h = 0; h < o; ++h) {
      int gh = q.quotient.mul(g, h);
      int nu = m.mul(q.section[g], m.mul(q.section[h], m.inv(q.section[gh])));
      worst = std::max(
          worst,
          (y.phi[g] * y.phi[h] - y.mod.n_act[n.from_parent[nu]] * y.phi[gh]).norm());
    }
  }
  return worst;
}

double check_braiding_descent(const RepA& ctx, const DObject& x, const DObject& y, double tol) {
  const FiniteGroup& m = ctx.parent();
  Eigen::MatrixXcd sig = braiding_matrix(ctx, x.mod, y);
  DObject t = tensor_dobject(ctx, x, y);
  DObject t2 = tensor_dobject(ctx, y, x);

  double worst = 0.0;
  for (int r = 0; r < t2.mod.dim; ++r)
    for (int c = 0; c < t.mod.dim; ++c)
      if (std::abs(sig(r, c)) > 1e-9 && t2.mod.grade[r] != t.mod.grade[c])
        worst = std::max(worst, 1.0);
  for (int ni = 0; ni < ctx.n().group.order; ++ni)
    worst = std::max(worst, (sig * t.mod.n_act[ni] - t2.mod.n_act[ni] * sig).norm());
  for (int g = 0; g < ctx.g().order; ++g)
    worst = std::max(worst, (sig * t.phi[g] - t2.phi[g] * sig).norm());

  if (worst > tol) {
    std::ostringstream msg;
    msg << "braiding fails to descend: residual " << worst << " on a " << t.mod.dim
        << "-dim tensor over " << m.order << "-element parent";
    throw DescentFailure(msg.str());
  }
  return worst;
}

double check_yang_baxter(const RepA& ctx, const DObject& a, const DObject& b, const DObject& c,
                         Rng& rng, int vectors, double tol) {
  int d1 = a.mod.dim, d2 = b.mod.dim, d3 = c.mod.dim;
  Eigen::MatrixXcd s12 = braiding_matrix(ctx, a.mod, b);
  Eigen::MatrixXcd s13 = braiding_matrix(ctx, a.mod, c);
  Eigen::MatrixXcd s23 = braiding_matrix(ctx, b.mod, c);

  double worst = 0.0;
  for (int t = 0; t < vectors; ++t) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(d1) * d2 * d3);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.next_complex();

    Eigen::VectorXcd lhs = apply_first(s23, apply_last(s13, apply_first(s12, v, d3)), d1);
    Eigen::VectorXcd rhs = apply_last(s12, apply_first(s13, apply_last(s23, v), d2));
    worst = std::max(worst, (lhs - rhs).norm() / std::max(1.0, v.norm()));
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << "Yang-Baxter residual " << worst << " on dims (" << d1 << "," << d2 << "," << d3
        << ")";
    throw YBEFailure(msg.str());
  }
  return worst;
}

double unit_double_braiding_residual(const RepA& ctx, const DObject& y) {
  DObject u = unit_dobject(ctx);
  int d = y.mod.dim;
  Eigen::MatrixXcd forward = braiding_matrix(ctx, u.mod, y);
  Eigen::MatrixXcd back = braiding_matrix(ctx, y.mod, u);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  return std::max((back * forward - id).norm(), (forward * back - id).norm());
}

Eigen::MatrixXcd sym_projector(const RepA& ctx, const DObject& y) {
  const FiniteGroup& m = ctx.parent();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(y.mod.dim, y.mod.dim);
  for (int mm = 0; mm < m.order; ++mm) acc += parent_action(ctx, y, mm);
  return acc / static_cast<double>(m.order);
}

}  // namespace orbifold
