#include "orbifold/matrix_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace orbifold {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

MatrixXcd polar_unitary(const MatrixXcd& m) {
  Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

// eigenvector column blocks grouped by close eigenvalues
std::vector<std::pair<int, int>> cluster_ranges(const VectorXd& ev, double gap) {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(ev.size());
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || ev[i] - ev[i - 1] > gap) {
      out.push_back({start, i});
      start = i;
    }
  }
  return out;
}

// shared splitting core: L is a projective unitary rep of gs on C^n whose
// commutant contains the operators R_h built by the caller
struct SplitResult {
  std::vector<MatrixXcd> bases;  // orthonormal columns per invariant block
};

SplitResult split_by_commutant(const std::vector<MatrixXcd>& rmults, int n, Rng& rng) {
  MatrixXcd h = MatrixXcd::Zero(n, n);
  for (const MatrixXcd& r : rmults) {
    cplx c(rng.next_real(), rng.next_real());
    h += c * r;
  }
  MatrixXcd herm = h + h.adjoint();
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(herm);
  if (es.info() != Eigen::Success) throw SplitFailure("eigensolver failed");
  SplitResult sr;
  for (auto [b, e] : cluster_ranges(es.eigenvalues(), 1e-7))
    sr.bases.push_back(es.eigenvectors().middleCols(b, e - b));
  return sr;
}

std::string rep_tag(const FiniteGroup& g, const char* what, int attempt) {
  std::ostringstream os;
  os << g.name << "#" << g.order << "#" << what << "#" << attempt;
  return os.str();
}

}  // namespace

std::vector<MatrixRep> explicit_irreps(const FiniteGroup& g, const CharacterTable& table,
                                       const ToleranceConfig& tol) {
  int n = g.order;
  int nir = table.num_irreps();
  std::vector<MatrixXcd> left(n), right(n);
  for (int a = 0; a < n; ++a) {
    left[a] = MatrixXcd::Zero(n, n);
    right[a] = MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x) {
      left[a](g.mul(a, x), x) = 1.0;
      right[a](g.mul(x, a), x) = 1.0;
    }
  }
  std::string err;
  for (int attempt = 0; attempt < 3; ++attempt) {
    Rng rng(tol.rng_seed + stable_hash(rep_tag(g, "irreps", attempt)));
    SplitResult sr = split_by_commutant(right, n, rng);
    std::vector<MatrixRep> out(nir);
    std::vector<char> have(nir, 0);
    bool bad = false;
    for (const MatrixXcd& q : sr.bases) {
      int d = static_cast<int>(q.cols());
      int match = -1;
      for (int i = 0; i < nir && match < 0; ++i) {
        if (table.degrees[i] != d) continue;
        bool all = true;
        for (int c = 0; c < table.num_classes() && all; ++c) {
          cplx tr = (q.adjoint() * left[table.classes.reps[c]] * q).trace();
          if (!approx_eq(tr, table.value(i, c).to_complex(), tol)) all = false;
        }
        if (all) match = i;
      }
      if (match < 0) {
        bad = true;
        err = "block of size " + std::to_string(d) + " matches no character row";
        break;
      }
      if (have[match]) continue;
      have[match] = 1;
      MatrixRep rep;
      rep.degree = d;
      rep.mats.resize(n);
      for (int a = 0; a < n; ++a)
        rep.mats[a] = a == 0 ? MatrixXcd::Identity(d, d)
                             : polar_unitary(MatrixXcd(q.adjoint() * left[a] * q));
      out[match] = std::move(rep);
    }
    if (!bad)
      for (int i = 0; i < nir; ++i)
        if (!have[i]) {
          bad = true;
          err = "missing irrep " + std::to_string(i);
        }
    if (!bad) {
      // homomorphism spot check on generators against the whole group
      for (int i = 0; i < nir && !bad; ++i)
        for (int a : g.generators)
          for (int b = 0; b < n && !bad; ++b) {
            double e = (out[i].mats[a] * out[i].mats[b] - out[i].mats[g.mul(a, b)]).norm();
            if (e > 1e-7 * out[i].degree) {
              bad = true;
              err = "homomorphism defect " + std::to_string(e);
            }
          }
    }
    if (!bad) return out;
  }
  throw SplitFailure("regular representation split failed for " + g.name + ": " + err);
}

void validate_cocycle(const FiniteGroup& gs, const CocycleTable& a, const ToleranceConfig& tol) {
  int n = gs.order;
  if (a.order != n) throw CocycleInvalid("cocycle table size mismatch");
  for (int g = 0; g < n; ++g) {
    if (!approx_eq(a.at(0, g), {1.0, 0.0}, tol) || !approx_eq(a.at(g, 0), {1.0, 0.0}, tol))
      throw CocycleInvalid("cocycle not normalized at the identity");
    for (int h = 0; h < n; ++h)
      if (std::abs(std::abs(a.at(g, h)) - 1.0) > tol.eps_abs + tol.eps_rel)
        throw CocycleInvalid("cocycle entry is not unit modulus");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        cplx lhs = a.at(g, h) * a.at(gs.mul(g, h), k);
        cplx rhs = a.at(g, gs.mul(h, k)) * a.at(h, k);
        if (!approx_eq(lhs, rhs, tol)) throw CocycleInvalid("2-cocycle identity fails");
      }
}

int alpha_regular_class_count(const FiniteGroup& gs, const CocycleTable& a,
                              const ToleranceConfig& tol) {
  ConjugacyData cd = conjugacy_data(gs);
  int count = 0;
  for (size_t c = 0; c < cd.reps.size(); ++c) {
    int g = cd.reps[c];
    bool regular = true;
    for (int h : cd.centralizers[c])
      if (!approx_eq(a.at(g, h), a.at(h, g), tol)) {
        regular = false;
        break;
      }
    if (regular) count++;
  }
  return count;
}

TwistedIrreps twisted_algebra_irreps(const FiniteGroup& gs, const CocycleTable& alpha,
                                     const ToleranceConfig& tol) {
  validate_cocycle(gs, alpha, tol);
  int n = gs.order;
  int want_count = alpha_regular_class_count(gs, alpha, tol);
  std::vector<MatrixXcd> left(n), right(n);
  for (int a = 0; a < n; ++a) {
    left[a] = MatrixXcd::Zero(n, n);
    right[a] = MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x) {
      left[a](gs.mul(a, x), x) = alpha.at(a, x);
      right[a](gs.mul(x, a), x) = alpha.at(x, a);
    }
  }
  std::string err;
  for (int attempt = 0; attempt < 3; ++attempt) {
    Rng rng(tol.rng_seed + stable_hash(rep_tag(gs, "twisted", attempt)));
    SplitResult sr = split_by_commutant(right, n, rng);
    // collect distinct blocks by projective character
    std::vector<MatrixRep> reps;
    std::vector<std::vector<cplx>> chars;
    std::vector<int> copies;
    bool bad = false;
    for (const MatrixXcd& q : sr.bases) {
      int d = static_cast<int>(q.cols());
      std::vector<cplx> ch(n);
      for (int a = 0; a < n; ++a) ch[a] = (q.adjoint() * left[a] * q).trace();
      int match = -1;
      for (size_t i = 0; i < chars.size() && match < 0; ++i) {
        if (reps[i].degree != d) continue;
        bool all = true;
        for (int a = 0; a < n && all; ++a)
          if (!approx_eq(chars[i][a], ch[a], tol)) all = false;
        if (all) match = static_cast<int>(i);
      }
      if (match >= 0) {
        copies[match]++;
        continue;
      }
      MatrixRep rep;
      rep.degree = d;
      rep.mats.resize(n);
      for (int a = 0; a < n; ++a)
        rep.mats[a] = a == 0 ? MatrixXcd::Identity(d, d)
                             : polar_unitary(MatrixXcd(q.adjoint() * left[a] * q));
      reps.push_back(std::move(rep));
      chars.push_back(std::move(ch));
      copies.push_back(1);
    }
    long degsq = 0;
    for (size_t i = 0; i < reps.size() && !bad; ++i) {
      degsq += static_cast<long>(reps[i].degree) * reps[i].degree;
      if (copies[i] != reps[i].degree) {
        bad = true;
        err = "block multiplicity does not equal its degree";
      }
    }
    if (!bad && degsq != n) {
      bad = true;
      err = "squared degrees sum to " + std::to_string(degsq);
    }
    if (!bad && static_cast<int>(reps.size()) != want_count) {
      bad = true;
      err = "found " + std::to_string(reps.size()) + " irreps, expected " +
            std::to_string(want_count) + " alpha-regular classes";
    }
    if (!bad) {
      // projective multiplication spot check
      for (size_t i = 0; i < reps.size() && !bad; ++i)
        for (int a = 0; a < n && !bad; ++a)
          for (int b = 0; b < n; ++b) {
            double e = (reps[i].mats[a] * reps[i].mats[b] -
                        alpha.at(a, b) * reps[i].mats[gs.mul(a, b)])
                           .norm();
            if (e > 1e-7 * reps[i].degree) {
              bad = true;
              err = "projective relation defect " + std::to_string(e);
              break;
            }
          }
    }
    if (!bad) {
      // deterministic order: degree, then character value key
      std::vector<int> order(reps.size());
      std::iota(order.begin(), order.end(), 0);
      auto key = [&](int i) {
        std::ostringstream os;
        for (const cplx& v : chars[i])
          os << llround(v.real() * 1e6) << "," << llround(v.imag() * 1e6) << ";";
        return os.str();
      };
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (reps[x].degree != reps[y].degree) return reps[x].degree < reps[y].degree;
        return key(x) < key(y);
      });
      TwistedIrreps out;
      for (int i : order) {
        out.degrees.push_back(reps[i].degree);
        out.characters.push_back(chars[i]);
        out.reps.push_back(std::move(reps[i]));
      }
      return out;
    }
  }
  throw SplitFailure("twisted algebra split failed for " + gs.name + ": " + err);
}

}  // namespace orbifold
