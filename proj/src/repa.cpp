#include "orbifold/repa.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

namespace orbifold {

namespace {

long round_to_integer(std::complex<double> v, double eps) {
  double re = v.real();
  long r = std::lround(re);
  if (std::abs(v.imag()) > eps || std::abs(re - static_cast<double>(r)) > eps)
    throw NonIntegralMultiplicity("multiplicity " + std::to_string(re) + "+" +
                                  std::to_string(v.imag()) + "i is not an integer");
  return r;
}

}  // namespace

RepA::RepA(const FiniteGroup& m, const std::vector<int>& n_members, const ToleranceConfig& tol,
           const std::vector<int>* section)
    : m_(m), n_(subgroup_view(m, n_members)), q_(quotient_with_section(m, n_members)), tol_(tol) {
  if (section) {
    if (static_cast<int>(section->size()) != q_.quotient.order)
      throw Error("section override has the wrong length");
    if ((*section)[0] != 0) throw Error("section override must lift the identity to the identity");
    for (int g = 0; g < q_.quotient.order; ++g)
      if (q_.projection[(*section)[g]] != g)
        throw Error("section override does not lift the quotient");
    q_.section = *section;
  }
  int order = m_.order;
  canon_.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    int best = x;
    for (int nn : n_.to_parent) best = std::min(best, m_.conj(nn, x));
    canon_[x] = best;
  }

  for (int m0 = 0; m0 < order; ++m0) {
    if (canon_[m0] != m0) continue;
    int slot = static_cast<int>(orbit_members_.size());
    rep_slot_[m0] = slot;

    std::vector<int> orbit;
    for (int x = 0; x < order; ++x)
      if (canon_[x] == m0) orbit.push_back(x);
    orbit_members_.push_back(orbit);

    std::vector<int> cent_members;
    for (int nn : n_.to_parent)
      if (m_.mul(nn, m0) == m_.mul(m0, nn)) cent_members.push_back(nn);
    cents_.push_back(subgroup_view(m_, cent_members));
    cent_tables_.push_back(character_table(cents_[slot].group));
    cent_irreps_.push_back(explicit_irreps(cents_[slot].group, cent_tables_[slot], tol_));

    std::vector<int> reps;
    for (int mp : orbit) {
      int t = -1;
      for (int nn : n_.to_parent) {
        if (m_.conj(nn, m0) == mp) { t = nn; break; }
      }
      reps.push_back(t);
    }
    coset_reps_.push_back(reps);

    for (int pi = 0; pi < cent_tables_[slot].num_irreps(); ++pi) {
      SimpleLabel lab;
      lab.m0 = m0;
      lab.pi = pi;
      lab.dim_a = static_cast<long>(orbit.size()) * cent_tables_[slot].degrees[pi];
      lab.sector = q_.projection[m0];
      label_index_[{m0, pi}] = static_cast<int>(labels_.size());
      labels_.push_back(lab);
    }
  }

  act_table_.assign(q_.quotient.order, std::vector<int>(labels_.size(), -1));
  for (int g = 0; g < q_.quotient.order; ++g)
    for (int l = 0; l < static_cast<int>(labels_.size()); ++l)
      act_table_[g][l] = act_label(g, l);
}

int RepA::label_index(int m0, int pi) const {
  auto it = label_index_.find({m0, pi});
  if (it == label_index_.end()) throw Error("no simple labelled by this orbit/irrep pair");
  return it->second;
}

const std::vector<int>& RepA::orbit_members(int m0) const {
  return orbit_members_[rep_slot_.at(m0)];
}
const SubgroupView& RepA::cent(int m0) const { return cents_[rep_slot_.at(m0)]; }
const CharacterTable& RepA::cent_table(int m0) const { return cent_tables_[rep_slot_.at(m0)]; }
const std::vector<MatrixRep>& RepA::cent_irreps(int m0) const {
  return cent_irreps_[rep_slot_.at(m0)];
}
const std::vector<int>& RepA::coset_reps(int m0) const { return coset_reps_[rep_slot_.at(m0)]; }

GradedModule RepA::module_of(int label) const {
  const SimpleLabel& lab = labels_[label];
  int slot = rep_slot_.at(lab.m0);
  const SubgroupView& cent = cents_[slot];
  const MatrixRep& rho = cent_irreps_[slot][lab.pi];
  const std::vector<int>& tr = coset_reps_[slot];
  const std::vector<int>& orbit = orbit_members_[slot];
  int k = static_cast<int>(tr.size());
  int d = rho.degree;

  GradedModule mod;
  mod.dim = k * d;
  mod.grade.resize(mod.dim);
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < d; ++a) mod.grade[i * d + a] = orbit[i];

  mod.n_act.assign(n_.group.order, Eigen::MatrixXcd::Zero(mod.dim, mod.dim));
  for (int ni = 0; ni < n_.group.order; ++ni) {
    int nn = n_.to_parent[ni];
    for (int i = 0; i < k; ++i) {
      int target = m_.conj(nn, orbit[i]);
      int j = static_cast<int>(std::lower_bound(orbit.begin(), orbit.end(), target) -
                               orbit.begin());
      int c = m_.mul(m_.inv(tr[j]), m_.mul(nn, tr[i]));
      int ci = cent.from_parent[c];
      if (ci < 0) throw Error("coset bookkeeping left the centralizer");
      mod.n_act[ni].block(j * d, i * d, d, d) = rho.mats[ci];
    }
  }
  return mod;
}

int RepA::match_conjugated_irrep(int m0_from, int pi, int m0_to, int w) const {
  // target character: c |-> chi_pi(w^{-1} c w), matched exactly in the
  // centralizer table at m0_to
  const CharacterTable& src = cent_tables_[rep_slot_.at(m0_from)];
  const SubgroupView& src_cent = cents_[rep_slot_.at(m0_from)];
  const CharacterTable& dst = cent_tables_[rep_slot_.at(m0_to)];
  const SubgroupView& dst_cent = cents_[rep_slot_.at(m0_to)];
  int winv = m_.inv(w);

  std::vector<Cyclotomic> wanted;
  for (int cls = 0; cls < dst.num_classes(); ++cls) {
    int crep = dst_cent.to_parent[dst.classes.reps[cls]];
    int moved = src_cent.from_parent[m_.conj(winv, crep)];
    if (moved < 0) throw Error("conjugation left the source centralizer");
    wanted.push_back(src.value_at_element(pi, moved));
  }
  for (int r = 0; r < dst.num_irreps(); ++r) {
    bool ok = true;
    for (int cls = 0; cls < dst.num_classes() && ok; ++cls)
      if (!(dst.values[r][cls] == wanted[cls])) ok = false;
    if (ok) return r;
  }
  throw Error("conjugated character matches no irrep of the target centralizer");
}

int RepA::act_label(int g, int label) const {
  const SimpleLabel& lab = labels_[label];
  int gt = q_.section[g];
  int mp = m_.conj(gt, lab.m0);
  int m0p = canon_[mp];
  int u = -1;
  for (int nn : n_.to_parent) {
    if (m_.conj(nn, mp) == m0p) { u = nn; break; }
  }
  int w = m_.mul(u, gt);
  int pip = match_conjugated_irrep(lab.m0, lab.pi, m0p, w);
  return label_index(m0p, pip);
}

std::vector<long> RepA::fuse(int x, int y) const {
  GradedModule mx = module_of(x);
  GradedModule my = module_of(y);

  std::set<int> support;
  for (int i = 0; i < mx.dim; ++i)
    for (int j = 0; j < my.dim; ++j) support.insert(canon_[m_.mul(mx.grade[i], my.grade[j])]);

  std::vector<long> mult(labels_.size(), 0);
  double eps = std::max(tol_.eps_abs, 1e-6);
  for (int m0 : support) {
    int slot = rep_slot_.at(m0);
    const SubgroupView& cent = cents_[slot];
    const CharacterTable& table = cent_tables_[slot];
    int csize = cent.group.order;

    // trace of each centralizer element on the m0-graded component of the
    // tensor product (diagonal action, product grading)
    std::vector<std::complex<double>> traces(csize, 0.0);
    for (int ci = 0; ci < csize; ++ci) {
      int nn = cent.to_parent[ci];
      int ni = n_.from_parent[nn];
      std::complex<double> t = 0.0;
      for (int i = 0; i < mx.dim; ++i) {
        for (int j = 0; j < my.dim; ++j) {
          if (m_.mul(mx.grade[i], my.grade[j]) != m0) continue;
          t += mx.n_act[ni](i, i) * my.n_act[ni](j, j);
        }
      }
      traces[ci] = t;
    }

    for (int pi = 0; pi < table.num_irreps(); ++pi) {
      std::complex<double> acc = 0.0;
      for (int ci = 0; ci < csize; ++ci) {
        int cls = table.classes.class_of[ci];
        acc += traces[ci] * std::conj(table.values[pi][cls].to_complex());
      }
      acc /= static_cast<double>(csize);
      long k = round_to_integer(acc, eps);
      if (k < 0) throw NonIntegralMultiplicity("negative multiplicity");
      mult[label_index(m0, pi)] = k;
    }
  }

  long total = 0;
  for (size_t l = 0; l < labels_.size(); ++l) total += mult[l] * labels_[l].dim_a;
  if (total != labels_[x].dim_a * labels_[y].dim_a)
    throw Error("fusion multiplicities do not account for the product dimension");
  return mult;
}

int RepA::dual(int label) const {
  const SimpleLabel& lab = labels_[label];
  int mp = m_.inv(lab.m0);
  int m0p = canon_[mp];
  int u = -1;
  for (int nn : n_.to_parent) {
    if (m_.conj(nn, mp) == m0p) { u = nn; break; }
  }

  // dual character: c |-> conj(chi_pi)(u^{-1} c u)
  const CharacterTable& src = cent_tables_[rep_slot_.at(lab.m0)];
  const SubgroupView& src_cent = cents_[rep_slot_.at(lab.m0)];
  const CharacterTable& dst = cent_tables_[rep_slot_.at(m0p)];
  const SubgroupView& dst_cent = cents_[rep_slot_.at(m0p)];
  int uinv = m_.inv(u);

  std::vector<Cyclotomic> wanted;
  for (int cls = 0; cls < dst.num_classes(); ++cls) {
    int crep = dst_cent.to_parent[dst.classes.reps[cls]];
    int moved = src_cent.from_parent[m_.conj(uinv, crep)];
    if (moved < 0) throw Error("conjugation left the source centralizer");
    wanted.push_back(src.value_at_element(lab.pi, moved).conj());
  }
  for (int r = 0; r < dst.num_irreps(); ++r) {
    bool ok = true;
    for (int cls = 0; cls < dst.num_classes() && ok; ++cls)
      if (!(dst.values[r][cls] == wanted[cls])) ok = false;
    if (ok) return label_index(m0p, r);
  }
  throw Error("dual character matches no irrep of the target centralizer");
}

}  // namespace orbifold
