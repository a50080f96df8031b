#include "orbifold/equivariant.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <set>

namespace orbifold {

namespace {

using cplx = std::complex<double>;

// least-squares solve of T A_n = B_n T over all n, with entries of T outside
// the allowed support forced to zero; the solution space must come out
// one-dimensional, and the normalized solution unitary
Eigen::MatrixXcd solve_intertwiner_system(const std::vector<Eigen::MatrixXcd>& lhs,
                                          const std::vector<Eigen::MatrixXcd>& rhs,
                                          const std::vector<std::pair<int, int>>& forbidden,
                                          const std::string& what) {
  int dt = static_cast<int>(rhs[0].rows());
  int ds = static_cast<int>(lhs[0].rows());
  int vars = dt * ds;
  int rows = static_cast<int>(lhs.size()) * vars + static_cast<int>(forbidden.size());
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(rows, vars);
  auto var = [&](int a, int b) { return a + dt * b; };  // entry T(a, b)
  int r = 0;
  for (size_t n = 0; n < lhs.size(); ++n) {
    const Eigen::MatrixXcd& a = lhs[n];
    const Eigen::MatrixXcd& b = rhs[n];
    for (int i = 0; i < dt; ++i) {
      for (int j = 0; j < ds; ++j) {
        for (int t = 0; t < ds; ++t) k(r, var(i, t)) += a(t, j);
        for (int t = 0; t < dt; ++t) k(r, var(t, j)) -= b(i, t);
        ++r;
      }
    }
  }
  for (auto [i, j] : forbidden) k(r++, var(i, j)) = 1.0;

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cut = 1e-6 * std::max(1.0, sv(0));
  int null_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < cut) null_dim++;
  if (null_dim != 1)
    throw SchurViolation(what + ": solution space has dimension " + std::to_string(null_dim));

  Eigen::VectorXcd v = svd.matrixV().col(vars - 1);
  Eigen::MatrixXcd t(dt, ds);
  for (int b = 0; b < ds; ++b)
    for (int a = 0; a < dt; ++a) t(a, b) = v(var(a, b));

  t *= std::sqrt(static_cast<double>(ds)) / t.norm();
  bool fixed = false;
  for (int a = 0; a < dt && !fixed; ++a) {
    for (int b = 0; b < ds && !fixed; ++b) {
      if (std::abs(t(a, b)) > 1e-6) {
        t *= std::conj(t(a, b)) / std::abs(t(a, b));
        fixed = true;
      }
    }
  }
  if ((t.adjoint() * t - Eigen::MatrixXcd::Identity(ds, ds)).norm() > 1e-6 * ds)
    throw SchurViolation(what + ": normalized solution is not unitary");
  return t;
}

long round_count(cplx v, double eps, const char* what) {
  long r = std::lround(v.real());
  if (std::abs(v.imag()) > eps || std::abs(v.real() - static_cast<double>(r)) > eps || r < 0)
    throw NotACharacter(std::string(what) + ": coefficient " + std::to_string(v.real()) + "+" +
                        std::to_string(v.imag()) + "i");
  return r;
}

}  // namespace

Equivariantization::Equivariantization(const RepA& ctx)
    : ctx_(ctx), table_m_(character_table(ctx.parent())) {
  build_orbits();
  build_cocycles();
  for (size_t oi = 0; oi < orbits_.size(); ++oi) {
    long osize = static_cast<long>(orbits_[oi].members.size());
    long base_dim = ctx_.labels()[orbits_[oi].base].dim_a;
    for (size_t li = 0; li < lambdas_[oi].degrees.size(); ++li) {
      DSimple d;
      d.orbit = static_cast<int>(oi);
      d.lambda = static_cast<int>(li);
      d.dim_d = lambdas_[oi].degrees[li] * osize * base_dim;
      dsimples_.push_back(d);
    }
  }
  build_characters();
}

void Equivariantization::build_orbits() {
  int nl = static_cast<int>(ctx_.labels().size());
  const FiniteGroup& g = ctx_.g();
  orbit_of_.assign(nl, -1);
  for (int l = 0; l < nl; ++l) {
    if (orbit_of_[l] >= 0) continue;
    LabelOrbit o;
    o.base = l;
    std::map<int, int> first_g;
    for (int gg = 0; gg < g.order; ++gg) {
      int t = ctx_.act(gg, l);
      if (!first_g.count(t)) first_g[t] = gg;
      if (t == l) o.stab.push_back(gg);
    }
    for (const auto& [mem, mg] : first_g) {
      o.members.push_back(mem);
      o.transversal.push_back(mg);
    }
    int oi = static_cast<int>(orbits_.size());
    for (int mem : o.members) orbit_of_[mem] = oi;
    if (o.members.size() * o.stab.size() != static_cast<size_t>(g.order))
      throw Error("orbit and stabilizer sizes do not multiply to |G|");
    orbits_.push_back(std::move(o));
  }
}

Eigen::MatrixXcd Equivariantization::intertwiner(int label, int g) const {
  const FiniteGroup& m = ctx_.parent();
  const SubgroupView& n = ctx_.n();
  GradedModule src = ctx_.module_of(label);
  if (g == 0) return Eigen::MatrixXcd::Identity(src.dim, src.dim);
  GradedModule dst = ctx_.module_of(ctx_.act(g, label));
  int gt = ctx_.quot().section[g];
  int gti = m.inv(gt);

  std::vector<Eigen::MatrixXcd> lhs, rhs;
  for (int ni = 0; ni < n.group.order; ++ni) {
    int nn = n.to_parent[ni];
    lhs.push_back(src.n_act[n.from_parent[m.conj(gti, nn)]]);
    rhs.push_back(dst.n_act[ni]);
  }
  std::vector<std::pair<int, int>> forbidden;
  for (int i = 0; i < dst.dim; ++i)
    for (int j = 0; j < src.dim; ++j)
      if (dst.grade[i] != m.conj(gt, src.grade[j])) forbidden.push_back({i, j});
  return solve_intertwiner_system(lhs, rhs, forbidden, "label intertwiner");
}

void Equivariantization::build_cocycles() {
  const FiniteGroup& m = ctx_.parent();
  const SubgroupView& n = ctx_.n();
  const FiniteGroup& g = ctx_.g();
  ToleranceConfig loose = ctx_.tol();
  loose.eps_abs = std::max(loose.eps_abs, 1e-8);

  for (const LabelOrbit& o : orbits_) {
    stabs_.push_back(subgroup_view(g, o.stab));
    const SubgroupView& sv = stabs_.back();
    base_modules_.push_back(ctx_.module_of(o.base));
    const GradedModule& w = base_modules_.back();

    std::vector<Eigen::MatrixXcd> ts;
    for (int gg : o.stab) ts.push_back(intertwiner(o.base, gg));
    stab_intertwiners_.push_back(ts);

    int h = sv.group.order;
    CocycleTable a;
    a.order = h;
    a.alpha.assign(static_cast<size_t>(h) * h, {1.0, 0.0});
    for (int h1 = 0; h1 < h; ++h1) {
      for (int h2 = 0; h2 < h; ++h2) {
        int g1 = sv.to_parent[h1];
        int g2 = sv.to_parent[h2];
        int g12 = g.mul(g1, g2);
        int h12 = sv.from_parent[g12];
        int nu = m.mul(m.mul(ctx_.quot().section[g1], ctx_.quot().section[g2]),
                       m.inv(ctx_.quot().section[g12]));
        Eigen::MatrixXcd rr = w.n_act[n.from_parent[nu]] * ts[h12];
        Eigen::MatrixXcd q = ts[h1] * ts[h2];
        cplx al = (rr.adjoint() * q).trace() / (rr.adjoint() * rr).trace();
        a.at(h1, h2) = al / std::abs(al);
      }
    }
    validate_cocycle(sv.group, a, loose);
    alpha_regular_.push_back(alpha_regular_class_count(sv.group, a, loose));
    trivial_.push_back(alpha_regular_.back() ==
                       static_cast<int>(conjugacy_data(sv.group).reps.size()));

    CocycleTable inv = a;
    for (auto& v : inv.alpha) v = std::conj(v);
    lambdas_.push_back(twisted_algebra_irreps(sv.group, inv, ctx_.tol()));
    cocycles_.push_back(std::move(a));
  }
}

void Equivariantization::build_characters() {
  const FiniteGroup& m = ctx_.parent();
  const SubgroupView& n = ctx_.n();
  int nc = table_m_.num_classes();
  double eps = 1e-6;

  for (const DSimple& d : dsimples_) {
    const LabelOrbit& o = orbits_[d.orbit];
    const SubgroupView& sv = stabs_[d.orbit];
    const GradedModule& w = base_modules_[d.orbit];
    const std::vector<Eigen::MatrixXcd>& ts = stab_intertwiners_[d.orbit];
    const std::vector<cplx>& lchar = lambdas_[d.orbit].characters[d.lambda];
    long ms_order = static_cast<long>(n.group.order) * sv.group.order;

    std::vector<cplx> chi(nc, 0.0);
    for (int cls = 0; cls < nc; ++cls) {
      int x = table_m_.classes.reps[cls];
      cplx acc = 0.0;
      for (int y = 0; y < m.order; ++y) {
        int z = m.conj(m.inv(y), x);
        int hz = sv.from_parent[ctx_.quot().projection[z]];
        if (hz < 0) continue;
        int nz = m.mul(z, m.inv(ctx_.quot().section[sv.to_parent[hz]]));
        acc += (w.n_act[n.from_parent[nz]] * ts[hz]).trace() * lchar[hz];
      }
      chi[cls] = acc / static_cast<double>(ms_order);
    }

    std::vector<long> coeff(table_m_.num_irreps());
    for (int i = 0; i < table_m_.num_irreps(); ++i) {
      cplx ip = 0.0;
      for (int cls = 0; cls < nc; ++cls)
        ip += static_cast<double>(table_m_.classes.members[cls].size()) * chi[cls] *
              std::conj(table_m_.values[i][cls].to_complex());
      coeff[i] = round_count(ip / static_cast<double>(m.order), eps, "equivariant character");
    }
    long deg = 0;
    for (int i = 0; i < table_m_.num_irreps(); ++i) deg += coeff[i] * table_m_.degrees[i];
    if (deg != d.dim_d) throw NotACharacter("equivariant character has the wrong degree");

    std::vector<Cyclotomic> exact(nc);
    for (int cls = 0; cls < nc; ++cls) {
      Cyclotomic v;
      for (int i = 0; i < table_m_.num_irreps(); ++i)
        if (coeff[i]) v += table_m_.values[i][cls] * Cyclotomic(mpq_class(coeff[i]));
      if (!approx_eq(v.to_complex(), chi[cls], ToleranceConfig{eps, eps, 0}))
        throw NotACharacter("equivariant character reconstruction mismatch");
      exact[cls] = v;
    }
    d_chars_.push_back(std::move(exact));
  }
}

bool Equivariantization::untwisted(int d) const {
  return ctx_.labels()[orbits_[dsimples_[d].orbit].base].sector == 0;
}

std::vector<long> Equivariantization::induction_image(int label) const {
  int oi = orbit_of_[label];
  std::vector<long> out(dsimples_.size(), 0);
  long degsq = 0;
  long total = 0;
  for (size_t d = 0; d < dsimples_.size(); ++d) {
    if (dsimples_[d].orbit != oi) continue;
    int deg = lambdas_[oi].degrees[dsimples_[d].lambda];
    out[d] = deg;
    degsq += static_cast<long>(deg) * deg;
    total += deg * dsimples_[d].dim_d;
  }
  if (degsq != stabs_[oi].group.order)
    throw Error("twisted stabilizer degrees do not square-sum to the stabilizer order");
  if (total != static_cast<long>(ctx_.g().order) * ctx_.labels()[label].dim_a)
    throw Error("induction does not preserve total dimension");
  return out;
}

std::vector<std::vector<long>> Equivariantization::functor_multiplicities() const {
  std::vector<std::vector<long>> f(dsimples_.size(),
                                   std::vector<long>(ctx_.labels().size(), 0));
  for (size_t d = 0; d < dsimples_.size(); ++d) {
    const LabelOrbit& o = orbits_[dsimples_[d].orbit];
    int deg = lambdas_[dsimples_[d].orbit].degrees[dsimples_[d].lambda];
    for (int mem : o.members) f[d][mem] = deg;
  }
  return f;
}

std::vector<std::vector<Cyclotomic>> Equivariantization::smatrix_rows() const {
  const FiniteGroup& m = ctx_.parent();
  CharacterTable tg = character_table(ctx_.g());
  std::vector<std::vector<Cyclotomic>> s(tg.num_irreps(),
                                         std::vector<Cyclotomic>(dsimples_.size()));
  for (size_t d = 0; d < dsimples_.size(); ++d) {
    const LabelOrbit& o = orbits_[dsimples_[d].orbit];
    long deg = lambdas_[dsimples_[d].orbit].degrees[dsimples_[d].lambda];
    for (int lam = 0; lam < tg.num_irreps(); ++lam) {
      Cyclotomic acc;
      for (int mem : o.members)
        acc += tg.value_at_element(lam, ctx_.sector_of(mem)) *
               make_rat(ctx_.labels()[mem].dim_a, 1);
      s[lam][d] = acc * make_rat(deg, m.order);
    }
  }
  return s;
}

MatchReport match_to_double(const Equivariantization& eq) {
  const RepA& ctx = eq.ctx();
  const FiniteGroup& m = ctx.parent();
  DoubleData dd = double_modular_data(m);
  MatchReport rep;

  rep.counts_match = static_cast<int>(eq.d_simples().size()) == dd.num_labels();
  std::multiset<long> a, b;
  for (const DSimple& d : eq.d_simples()) a.insert(d.dim_d);
  for (long v : dd.dims) b.insert(v);
  rep.dims_match = (a == b);

  for (size_t cls = 0; cls < dd.classes.reps.size(); ++cls)
    if (ctx.n().from_parent[dd.classes.reps[cls]] >= 0)
      rep.c1_census += dd.cent_tables[cls].num_irreps();
  for (size_t d = 0; d < eq.d_simples().size(); ++d)
    if (eq.untwisted(static_cast<int>(d))) rep.d0_count++;
  rep.c1_match = (rep.c1_census == rep.d0_count);

  // exact character of each double simple as an induced class function
  int nc = static_cast<int>(dd.classes.reps.size());
  std::vector<std::vector<Cyclotomic>> ddchi(dd.num_labels(), std::vector<Cyclotomic>(nc));
  for (int j = 0; j < dd.num_labels(); ++j) {
    int arep = dd.labels[j].class_rep;
    int acls = dd.classes.class_of[arep];
    const SubgroupView& cv = dd.centralizers[acls];
    const CharacterTable& ct = dd.cent_tables[acls];
    for (int cls = 0; cls < nc; ++cls) {
      Cyclotomic acc;
      int x = dd.classes.reps[cls];
      for (int y = 0; y < m.order; ++y) {
        int loc = cv.from_parent[m.conj(m.inv(y), x)];
        if (loc < 0) continue;
        acc += ct.value_at_element(dd.labels[j].irrep, loc);
      }
      ddchi[j][cls] = acc * make_rat(1, cv.group.order);
    }
  }

  int nl = static_cast<int>(ctx.labels().size());
  std::vector<std::vector<Cyclotomic>> rows(dd.num_labels(), std::vector<Cyclotomic>(nl));
  for (int j = 0; j < dd.num_labels(); ++j) {
    for (int i = 0; i < nl; ++i) {
      const SimpleLabel& lab = ctx.labels()[i];
      rows[j][i] = ddchi[j][dd.classes.class_of[lab.m0]] * make_rat(lab.dim_a, m.order);
    }
  }

  int nd = static_cast<int>(eq.d_simples().size());
  std::vector<std::vector<Cyclotomic>> dval(nd, std::vector<Cyclotomic>(nl));
  for (int d = 0; d < nd; ++d) {
    for (int i = 0; i < nl; ++i) {
      const SimpleLabel& lab = ctx.labels()[i];
      int cls = eq.parent_table().classes.class_of[lab.m0];
      dval[d][i] = eq.d_characters()[d][cls] * make_rat(lab.dim_a, m.order);
    }
  }

  // candidate pairs must agree in dimension, in the full induced character,
  // and in the quotient class supporting the grading
  CharacterTable tg = character_table(ctx.g());
  std::vector<int> dsector(nd), jsector(dd.num_labels());
  for (int d = 0; d < nd; ++d) {
    int base = eq.orbits()[eq.d_simples()[d].orbit].base;
    dsector[d] = tg.classes.class_of[ctx.sector_of(base)];
  }
  for (int j = 0; j < dd.num_labels(); ++j)
    jsector[j] = tg.classes.class_of[ctx.quot().projection[dd.labels[j].class_rep]];

  std::vector<std::vector<int>> cand(nd);
  for (int d = 0; d < nd; ++d) {
    for (int j = 0; j < dd.num_labels(); ++j) {
      if (eq.d_simples()[d].dim_d != dd.dims[j]) continue;
      if (dsector[d] != jsector[j]) continue;
      bool all = true;
      for (int i = 0; i < nl && all; ++i)
        if (!(dval[d][i] == rows[j][i])) all = false;
      if (all) cand[d].push_back(j);
    }
  }

  if (rep.counts_match) {
    std::vector<int> owner(dd.num_labels(), -1);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int d, std::vector<bool>& seen) {
      for (int j : cand[d]) {
        if (seen[j]) continue;
        seen[j] = true;
        if (owner[j] < 0 || augment(owner[j], seen)) {
          owner[j] = d;
          return true;
        }
      }
      return false;
    };
    bool all = true;
    for (int d = 0; d < nd && all; ++d) {
      std::vector<bool> seen(dd.num_labels(), false);
      all = augment(d, seen);
    }
    rep.bijection_found = all;
    if (all) {
      rep.assignment.assign(nd, -1);
      for (int j = 0; j < dd.num_labels(); ++j)
        if (owner[j] >= 0) rep.assignment[owner[j]] = j;
    }
  }

  // every quotient-character row of the s-table must transport, under the
  // found bijection, to the S-matrix row of the double simple carried by the
  // identity class and the pulled-back quotient character
  if (rep.bijection_found) {
    std::vector<std::vector<Cyclotomic>> s = eq.smatrix_rows();
    int cls_e = dd.classes.class_of[0];
    const SubgroupView& cve = dd.centralizers[cls_e];
    const CharacterTable& cte = dd.cent_tables[cls_e];
    bool all = true;
    for (int lam = 0; all && lam < tg.num_irreps(); ++lam) {
      int jlam = -1;
      for (int j = 0; j < dd.num_labels() && jlam < 0; ++j) {
        if (dd.classes.class_of[dd.labels[j].class_rep] != cls_e) continue;
        bool same = true;
        for (int c2 = 0; c2 < cte.num_classes() && same; ++c2) {
          int loc = cte.classes.reps[c2];
          int g = ctx.quot().projection[cve.to_parent[loc]];
          if (!(cte.value_at_element(dd.labels[j].irrep, loc) == tg.value_at_element(lam, g)))
            same = false;
        }
        if (same) jlam = j;
      }
      if (jlam < 0) {
        all = false;
        break;
      }
      for (int d = 0; d < nd && all; ++d)
        if (!(s[lam][d] == dd.S.at(jlam, rep.assignment[d]).conj())) all = false;
    }
    rep.s_rows_match = all;
  }
  return rep;
}

CliffordReport clifford_check(const FiniteGroup& m, const std::vector<int>& n_members,
                              const ToleranceConfig& tol) {
  SubgroupView n = subgroup_view(m, n_members);
  QuotientData q = quotient_with_section(m, n_members);
  const FiniteGroup& g = q.quotient;
  CharacterTable tn = character_table(n.group);
  std::vector<MatrixRep> irreps = explicit_irreps(n.group, tn, tol);
  int nir = tn.num_irreps();

  auto act = [&](int gg, int r) {
    int gti = m.inv(q.section[gg]);
    std::vector<Cyclotomic> wanted;
    for (int cls = 0; cls < tn.num_classes(); ++cls) {
      int crep = n.to_parent[tn.classes.reps[cls]];
      int moved = n.from_parent[m.conj(gti, crep)];
      wanted.push_back(tn.value_at_element(r, moved));
    }
    for (int r2 = 0; r2 < nir; ++r2) {
      bool match = true;
      for (int cls = 0; cls < tn.num_classes() && match; ++cls)
        if (!(tn.values[r2][cls] == wanted[cls])) match = false;
      if (match) return r2;
    }
    throw Error("conjugated character matches no irrep of N");
  };
  std::vector<std::vector<int>> act_table(g.order, std::vector<int>(nir));
  for (int gg = 0; gg < g.order; ++gg)
    for (int r = 0; r < nir; ++r) act_table[gg][r] = act(gg, r);

  ToleranceConfig loose = tol;
  loose.eps_abs = std::max(loose.eps_abs, 1e-8);

  CliffordReport out;
  std::vector<int> seen(nir, 0);
  for (int r = 0; r < nir; ++r) {
    if (seen[r]) continue;
    CliffordOrbit co;
    co.base = r;
    std::set<int> members;
    std::vector<int> stab;
    for (int gg = 0; gg < g.order; ++gg) {
      members.insert(act_table[gg][r]);
      if (act_table[gg][r] == r) stab.push_back(gg);
    }
    for (int mem : members) seen[mem] = 1;
    co.size = static_cast<int>(members.size());
    co.stab_order = static_cast<int>(stab.size());

    SubgroupView sv = subgroup_view(g, stab);
    int deg = irreps[r].degree;
    std::vector<Eigen::MatrixXcd> ts;
    for (int h = 0; h < sv.group.order; ++h) {
      int gg = sv.to_parent[h];
      if (gg == 0) {
        ts.push_back(Eigen::MatrixXcd::Identity(deg, deg));
        continue;
      }
      int gti = m.inv(q.section[gg]);
      std::vector<Eigen::MatrixXcd> lhs, rhs;
      for (int ni = 0; ni < n.group.order; ++ni) {
        lhs.push_back(irreps[r].mats[n.from_parent[m.conj(gti, n.to_parent[ni])]]);
        rhs.push_back(irreps[r].mats[ni]);
      }
      ts.push_back(solve_intertwiner_system(lhs, rhs, {}, "character intertwiner"));
    }

    int h = sv.group.order;
    CocycleTable a;
    a.order = h;
    a.alpha.assign(static_cast<size_t>(h) * h, {1.0, 0.0});
    for (int h1 = 0; h1 < h; ++h1) {
      for (int h2 = 0; h2 < h; ++h2) {
        int g1 = sv.to_parent[h1];
        int g2 = sv.to_parent[h2];
        int h12 = sv.from_parent[g.mul(g1, g2)];
        int nu = m.mul(m.mul(q.section[g1], q.section[g2]),
                       m.inv(q.section[g.mul(g1, g2)]));
        Eigen::MatrixXcd rr = irreps[r].mats[n.from_parent[nu]] * ts[h12];
        Eigen::MatrixXcd qq = ts[h1] * ts[h2];
        cplx al = (rr.adjoint() * qq).trace() / (rr.adjoint() * rr).trace();
        a.at(h1, h2) = al / std::abs(al);
      }
    }
    validate_cocycle(sv.group, a, loose);
    int regular = alpha_regular_class_count(sv.group, a, loose);
    co.cocycle_trivial = (regular == static_cast<int>(conjugacy_data(sv.group).reps.size()));
    if (!co.cocycle_trivial) out.nontrivial_cocycle_orbits++;

    CocycleTable inv = a;
    for (auto& v : inv.alpha) v = std::conj(v);
    TwistedIrreps tw = twisted_algebra_irreps(sv.group, inv, tol);
    for (int degl : tw.degrees) {
      co.lambda_degrees.push_back(degl);
      out.degrees.push_back(static_cast<long>(degl) * co.size * tn.degrees[r]);
    }
    out.orbits.push_back(std::move(co));
  }

  CharacterTable tm = character_table(m);
  out.expected.assign(tm.degrees.begin(), tm.degrees.end());
  std::sort(out.expected.begin(), out.expected.end());
  std::sort(out.degrees.begin(), out.degrees.end());
  out.pass = (out.degrees == out.expected);
  return out;
}

}  // namespace orbifold
