#include "orbifold/character_table.hpp"

#include <algorithm>
#include <numeric>

#include "orbifold/common.hpp"

namespace orbifold {

namespace {

long mod_pow(long b, long e, long p) {
  long r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// smallest prime p = 1 mod e with p*p > 4*order, so that F_p contains the
// needed roots of unity and squares of degrees lift uniquely
long dixon_prime(long e, long order) {
  for (long p = e + 1;; p += e) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

long primitive_root(long p) {
  std::vector<long> qs;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    qs.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) qs.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : qs)
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

using FpVec = std::vector<long>;
using FpMat = std::vector<FpVec>;  // rows

// reduced row echelon form in place; returns pivot column per row
std::vector<int> rref(FpMat& m, long p) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    long iv = mod_inv(m[r][c], p);
    for (int j = 0; j < cols; ++j) m[r][j] = m[r][j] * iv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    pivots.push_back(c);
    r++;
  }
  m.resize(r);
  return pivots;
}

// kernel basis of a square matrix, as rows
FpMat kernel(FpMat m, long p) {
  int n = static_cast<int>(m.size());
  std::vector<int> pivots = rref(m, p);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  FpMat ker;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    FpVec v(n, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][c]) % p;
    ker.push_back(v);
  }
  return ker;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
  CharacterTable t;
  t.group_order = g.order;
  t.classes = conjugacy_data(g);
  const ConjugacyData& cd = t.classes;
  int r = static_cast<int>(cd.reps.size());
  long e = g.exponent();
  long p = dixon_prime(e, g.order);

  // class multiplication coefficients a[i][j][k]: #{(x,y) in Ci x Cj : xy = rep_k}
  std::vector<std::vector<std::vector<long>>> a(
      r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int x : cd.members[i])
      for (int k = 0; k < r; ++k) {
        int y = g.mul(g.inv(x), cd.reps[k]);
        a[i][cd.class_of[y]][k] += 1;
      }

  // split F_p^r into common eigenspaces of the class matrices M_i with
  // (M_i v)_j = sum_k a[i][j][k] v_k
  std::vector<std::pair<FpMat, std::vector<int>>> spaces;  // basis rows + pivot cols
  {
    FpMat full(r, FpVec(r, 0));
    for (int i = 0; i < r; ++i) full[i][i] = 1;
    std::vector<int> piv(r);
    std::iota(piv.begin(), piv.end(), 0);
    spaces.push_back({full, piv});
  }
  for (int i = 1; i < r; ++i) {
    std::vector<std::pair<FpMat, std::vector<int>>> next;
    for (auto& [basis, pivots] : spaces) {
      int d = static_cast<int>(basis.size());
      if (d == 1) {
        next.push_back({basis, pivots});
        continue;
      }
      // restriction of M_i to the subspace, in pivot coordinates
      FpMat rm(d, FpVec(d, 0));
      for (int u = 0; u < d; ++u) {
        FpVec mv(r, 0);
        for (int j = 0; j < r; ++j) {
          long s = 0;
          for (int k = 0; k < r; ++k) s = (s + a[i][j][k] * basis[u][k]) % p;
          mv[j] = s;
        }
        for (int tt = 0; tt < d; ++tt) rm[tt][u] = mv[pivots[tt]];
      }
      for (long lam = 0; lam < p; ++lam) {
        FpMat shifted = rm;
        for (int tt = 0; tt < d; ++tt) shifted[tt][tt] = ((shifted[tt][tt] - lam) % p + p) % p;
        FpMat ker = kernel(shifted, p);
        if (ker.empty()) continue;
        FpMat sub;
        for (const FpVec& x : ker) {
          FpVec v(r, 0);
          for (int tt = 0; tt < d; ++tt)
            for (int k = 0; k < r; ++k) v[k] = (v[k] + x[tt] * basis[tt][k]) % p;
          sub.push_back(v);
        }
        std::vector<int> sub_piv = rref(sub, p);
        next.push_back({sub, sub_piv});
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r) throw Error("class algebra failed to split");

  // central characters -> degrees -> character values mod p
  std::vector<int> inv_class(r);
  for (int j = 0; j < r; ++j) inv_class[j] = cd.class_of[g.inv(cd.reps[j])];
  long xi = mod_pow(primitive_root(p), (p - 1) / e, p);

  struct Row {
    long degree;
    std::vector<Cyclotomic> vals;
  };
  std::vector<Row> rows;
  for (auto& [basis, pivots] : spaces) {
    FpVec v = basis[0];
    if (v[0] == 0) throw Error("central character vanishes at identity");
    long scale = mod_inv(v[0], p);
    for (long& x : v) x = x * scale % p;
    long s = 0;
    for (int j = 0; j < r; ++j)
      s = (s + v[j] * v[inv_class[j]] % p * mod_inv(cd.members[j].size(), p)) % p;
    long d2 = g.order % p * mod_inv(s, p) % p;
    long deg = 0;
    for (long cand = 1; cand * cand <= g.order; ++cand)
      if (cand * cand % p == d2) {
        deg = cand;
        break;
      }
    if (deg == 0) throw Error("degree lift failed");
    // theta_j = chi(rep_j) mod p
    FpVec theta(r);
    for (int j = 0; j < r; ++j)
      theta[j] = deg % p * v[j] % p * mod_inv(cd.members[j].size(), p) % p;
    Row row;
    row.degree = deg;
    row.vals.resize(r);
    for (int j = 0; j < r; ++j) {
      long ej = g.element_order(cd.reps[j]);
      std::vector<std::pair<long, mpq_class>> terms;
      long msum = 0;
      for (long tt = 0; tt < ej; ++tt) {
        long acc = 0;
        int gp = 0;  // rep_j^s
        for (long s2 = 0; s2 < ej; ++s2) {
          long expo = ((e / ej) * s2 % e * tt) % e;
          long w = mod_pow(xi, (e - expo) % e, p);
          acc = (acc + theta[cd.class_of[gp]] * w) % p;
          gp = g.mul(gp, cd.reps[j]);
        }
        long m = acc * mod_inv(ej % p, p) % p;
        if (m > deg) throw Error("eigenvalue multiplicity lift failed");
        msum += m;
        if (m != 0) terms.push_back({tt, mpq_class(m)});
      }
      if (msum != deg) throw Error("eigenvalue multiplicities do not sum to the degree");
      row.vals[j] = Cyclotomic::from_terms(ej, terms);
    }
    rows.push_back(std::move(row));
  }

  // trivial character first, then (degree, value key) order
  std::vector<std::string> keys(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string k;
    for (const Cyclotomic& c : rows[i].vals) k += c.str() + ";";
    keys[i] = k;
  }
  std::vector<int> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    bool tx = std::all_of(rows[x].vals.begin(), rows[x].vals.end(),
                          [](const Cyclotomic& c) { return c == Cyclotomic(1); });
    bool ty = std::all_of(rows[y].vals.begin(), rows[y].vals.end(),
                          [](const Cyclotomic& c) { return c == Cyclotomic(1); });
    if (tx != ty) return tx;
    if (rows[x].degree != rows[y].degree) return rows[x].degree < rows[y].degree;
    return keys[x] < keys[y];
  });
  long degsum = 0;
  for (int i : order) {
    t.degrees.push_back(static_cast<int>(rows[i].degree));
    t.values.push_back(rows[i].vals);
    degsum += rows[i].degree * rows[i].degree;
  }
  if (degsum != g.order) throw Error("degree squares do not sum to the group order");

  // both orthogonality relations, exact
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cyclotomic s;
      for (int c = 0; c < r; ++c)
        s += Cyclotomic(static_cast<long>(cd.members[c].size())) * t.values[i][c] *
             t.values[j][c].conj();
      Cyclotomic want(i == j ? g.order : 0);
      if (s != want) throw Error("row orthogonality fails");
    }
  for (int c1 = 0; c1 < r; ++c1)
    for (int c2 = 0; c2 < r; ++c2) {
      Cyclotomic s;
      for (int i = 0; i < r; ++i) s += t.values[i][c1] * t.values[i][c2].conj();
      Cyclotomic want(c1 == c2 ? g.order / static_cast<long>(cd.members[c1].size()) : 0);
      if (s != want) throw Error("column orthogonality fails");
    }
  return t;
}

std::vector<long> decompose_by_characters(const std::vector<Cyclotomic>& module_char,
                                          const CharacterTable& table) {
  int r = table.num_classes();
  if (static_cast<int>(module_char.size()) != r)
    throw Error("class function has wrong length");
  std::vector<long> out;
  for (int i = 0; i < table.num_irreps(); ++i) {
    Cyclotomic s;
    for (int c = 0; c < r; ++c)
      s += Cyclotomic(static_cast<long>(table.classes.members[c].size())) * module_char[c] *
           table.values[i][c].conj();
    Cyclotomic m = s / mpq_class(table.group_order);
    if (!m.is_rational() || !rat_is_int(m.rational_value()) || m.rational_value() < 0)
      throw NotACharacter("multiplicity of irrep " + std::to_string(i) + " is " + m.str());
    out.push_back(m.rational_value().get_num().get_si());
  }
  return out;
}

}  // namespace orbifold
