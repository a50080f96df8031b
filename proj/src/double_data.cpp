#include "orbifold/double_data.hpp"

#include "orbifold/common.hpp"

namespace orbifold {

std::vector<DoubleSimple> double_simples(const FiniteGroup& m) {
  ConjugacyData cd = conjugacy_data(m);
  std::vector<DoubleSimple> out;
  for (size_t c = 0; c < cd.reps.size(); ++c) {
    SubgroupView cent = subgroup_view(m, cd.centralizers[c]);
    int nirr = static_cast<int>(conjugacy_data(cent.group).reps.size());
    for (int i = 0; i < nirr; ++i) out.push_back({cd.reps[c], i});
  }
  return out;
}

DoubleData double_modular_data(const FiniteGroup& m) {
  DoubleData md;
  md.m = m;
  md.classes = conjugacy_data(m);
  int nc = static_cast<int>(md.classes.reps.size());
  for (int c = 0; c < nc; ++c) {
    md.centralizers.push_back(subgroup_view(m, md.classes.centralizers[c]));
    md.cent_tables.push_back(character_table(md.centralizers.back().group));
  }
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < md.cent_tables[c].num_irreps(); ++i) {
      md.labels.push_back({md.classes.reps[c], i});
      md.dims.push_back(static_cast<long>(md.classes.members[c].size()) *
                        md.cent_tables[c].degrees[i]);
    }
  int n = md.num_labels();

  md.S = CycMat(n, n);
  for (int i = 0; i < n; ++i) {
    int ca = md.class_index_of_label(i);
    int a = md.labels[i].class_rep;
    const SubgroupView& ka = md.centralizers[ca];
    const CharacterTable& ta = md.cent_tables[ca];
    for (int j = 0; j < n; ++j) {
      int cb = md.class_index_of_label(j);
      int b = md.labels[j].class_rep;
      const SubgroupView& kb = md.centralizers[cb];
      const CharacterTable& tb = md.cent_tables[cb];
      Cyclotomic sum;
      for (int g = 0; g < m.order; ++g) {
        int bg = m.conj(g, b);
        if (m.mul(a, bg) != m.mul(bg, a)) continue;
        int ag = m.conj(m.inv(g), a);
        sum += ta.value_at_element(md.labels[i].irrep, ka.from_parent[bg]).conj() *
               tb.value_at_element(md.labels[j].irrep, kb.from_parent[ag]).conj();
      }
      md.S.at(i, j) =
          sum / mpq_class(static_cast<long>(ka.group.order) * kb.group.order);
    }
  }

  for (int i = 0; i < n; ++i) {
    int ca = md.class_index_of_label(i);
    int a = md.labels[i].class_rep;
    const CharacterTable& ta = md.cent_tables[ca];
    Cyclotomic chi_a =
        ta.value_at_element(md.labels[i].irrep, md.centralizers[ca].from_parent[a]);
    md.T.push_back(chi_a / mpq_class(ta.degrees[md.labels[i].irrep]));
  }

  // exact invariant battery
  long dimsq = 0;
  for (long d : md.dims) dimsq += d * d;
  if (dimsq != static_cast<long>(m.order) * m.order)
    throw AxiomFailure("squared dims sum to " + std::to_string(dimsq));
  for (int j = 0; j < n; ++j)
    if (md.S.at(0, j) != Cyclotomic(md.dims[j]) / mpq_class(m.order))
      throw AxiomFailure("first S row is not dims/|M|");
  if (!md.S.is_symmetric()) throw AxiomFailure("S is not symmetric");
  if (!(md.S * md.S.conj_transpose()).is_identity()) throw AxiomFailure("S is not unitary");
  for (int i = 0; i < n; ++i) {
    if (md.T[i] * md.T[i].conj() != Cyclotomic(1))
      throw AxiomFailure("T entry is not unit modulus");
    Cyclotomic p(1);
    int ord = m.element_order(md.labels[i].class_rep);
    for (int k = 0; k < ord; ++k) p *= md.T[i];
    if (p != Cyclotomic(1)) throw AxiomFailure("T entry is not a root of unity of class order");
  }
  return md;
}

std::vector<std::vector<std::vector<long>>> verlinde_fusion(const DoubleData& md) {
  int n = md.num_labels();
  std::vector<std::vector<std::vector<long>>> fusion(
      n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Cyclotomic sum;
        for (int mm = 0; mm < n; ++mm) {
          // S_{0m} = dim_m / |M|, so dividing by it keeps everything exact
          sum += md.S.at(i, mm) * md.S.at(j, mm) * md.S.at(k, mm).conj() *
                 mpq_class(md.m.order, md.dims[mm]);
        }
        if (!sum.is_rational() || !rat_is_int(sum.rational_value()) || sum.rational_value() < 0)
          throw NonIntegralFusion("N_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                                  std::to_string(k) + " = " + sum.str());
        fusion[i][j][k] = sum.rational_value().get_num().get_si();
      }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (fusion[0][j][k] != (j == k ? 1 : 0))
        throw NonIntegralFusion("unit column of the fusion tensor is wrong");
  return fusion;
}

AxiomReport verify_modular_axioms(const DoubleData& md) {
  AxiomReport r;
  int n = md.num_labels();
  r.s_symmetric = md.S.is_symmetric();
  r.s_unitary = (md.S * md.S.conj_transpose()).is_identity();
  CycMat s2 = md.S * md.S;
  r.s2_permutation = s2.is_permutation();
  CycMat st(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) st.at(i, j) = md.S.at(i, j) * md.T[j];
  CycMat st3 = st * st * st;
  // proportionality constant read off at the unit entry
  Cyclotomic c;
  bool found = false;
  for (int i = 0; i < n && !found; ++i)
    for (int j = 0; j < n && !found; ++j)
      if (!s2.at(i, j).is_zero()) {
        c = st3.at(i, j) / s2.at(i, j);
        found = true;
      }
  r.st_cubed_proportional_s2 = found;
  if (found)
    for (int i = 0; i < n && r.st_cubed_proportional_s2; ++i)
      for (int j = 0; j < n; ++j)
        if (st3.at(i, j) != c * s2.at(i, j)) {
          r.st_cubed_proportional_s2 = false;
          break;
        }
  r.det_nonzero = !md.S.determinant().is_zero();
  return r;
}

}  // namespace orbifold
