#include "orbifold/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "orbifold/common.hpp"

namespace orbifold {

namespace {

struct PrimePower {
  long p;
  long a;
  long pa;   // p^a
  long u;    // n / p^a
  long v;    // u^{-1} mod p^a
  long phi;  // (p-1) * p^(a-1)
};

long mod_inverse(long a, long m) {
  long t = 0, new_t = 1;
  long r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("mod_inverse: arguments not coprime");
  return ((t % m) + m) % m;
}

std::vector<PrimePower> prime_powers(long n) {
  std::vector<PrimePower> out;
  long rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    PrimePower pp;
    pp.p = p;
    pp.a = 0;
    pp.pa = 1;
    while (rest % p == 0) {
      rest /= p;
      pp.a++;
      pp.pa *= p;
    }
    pp.u = 0;
    pp.v = 0;
    pp.phi = (p - 1) * (pp.pa / p);
    out.push_back(pp);
  }
  if (rest > 1) {
    PrimePower pp;
    pp.p = rest;
    pp.a = 1;
    pp.pa = rest;
    pp.u = 0;
    pp.v = 0;
    pp.phi = rest - 1;
    out.push_back(pp);
  }
  for (auto& pp : out) {
    pp.u = n / pp.pa;
    pp.v = mod_inverse(pp.u % pp.pa, pp.pa);
  }
  return out;
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n <= 0) throw Error("root_of_unity: conductor must be positive");
  k = ((k % n) + n) % n;
  std::vector<mpq_class> c(n, mpq_class(0));
  c[k] = 1;
  Cyclotomic z(n, std::move(c));
  z.normalize();
  return z;
}

Cyclotomic Cyclotomic::from_terms(long n, const std::vector<std::pair<long, mpq_class>>& terms) {
  if (n <= 0) throw Error("from_terms: conductor must be positive");
  std::vector<mpq_class> c(n, mpq_class(0));
  for (const auto& [k, q] : terms) {
    mpq_class v = q;
    v.canonicalize();
    c[((k % n) + n) % n] += v;
  }
  Cyclotomic z(n, std::move(c));
  z.normalize();
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

const mpq_class& Cyclotomic::rational_value() const {
  if (n_ != 1) throw Error("rational_value: not a rational");
  return c_[0];
}

void Cyclotomic::basis_reduce() {
  if (n_ == 1) return;
  auto pps = prime_powers(n_);
  for (const auto& pp : pps) {
    long step = pp.pa / pp.p;  // p^(a-1)
    for (long j = 0; j < n_; ++j) {
      if (c_[j] == 0) continue;
      long e = (j % pp.pa) * pp.v % pp.pa;
      if (e < pp.phi) continue;
      long d = e - pp.phi;
      mpq_class coef = c_[j];
      c_[j] = 0;
      for (long t = 0; t + 1 < pp.p; ++t) {
        long e2 = d + t * step;
        long j2 = (j + (e2 - e) % n_ * pp.u % n_ + n_ * 2) % n_;
        c_[j2] -= coef;
      }
    }
  }
}

bool Cyclotomic::try_conductor_step() {
  if (is_zero()) {
    if (n_ == 1) return false;
    n_ = 1;
    c_.assign(1, mpq_class(0));
    return false;
  }
  if (n_ == 1) return false;
  auto pps = prime_powers(n_);
  for (const auto& pp : pps) {
    bool reducible = true;
    for (long j = 0; j < n_ && reducible; ++j) {
      if (c_[j] == 0) continue;
      long e = (j % pp.pa) * pp.v % pp.pa;
      if (pp.a == 1 ? e != 0 : e % pp.p != 0) reducible = false;
    }
    if (!reducible) continue;
    long m = n_ / pp.p;
    auto mps = prime_powers(m);
    std::vector<mpq_class> nc(m, mpq_class(0));
    for (long j = 0; j < n_; ++j) {
      if (c_[j] == 0) continue;
      long j2 = 0;
      for (const auto& mq : mps) {
        long e;
        if (mq.p == pp.p) {
          e = (j % pp.pa) * pp.v % pp.pa / pp.p;
        } else {
          // same component as in conductor n
          long u = n_ / mq.pa;
          long v = mod_inverse(u % mq.pa, mq.pa);
          e = (j % mq.pa) * v % mq.pa;
        }
        j2 = (j2 + e * mq.u) % m;
      }
      nc[j2] += c_[j];
    }
    n_ = m;
    c_ = std::move(nc);
    return true;
  }
  return false;
}

void Cyclotomic::normalize() {
  basis_reduce();
  while (try_conductor_step()) {
  }
  if (n_ == 1 && c_.empty()) c_.assign(1, mpq_class(0));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long l = std::lcm(n_, o.n_);
  std::vector<mpq_class> c(l, mpq_class(0));
  long s1 = l / n_, s2 = l / o.n_;
  for (long j = 0; j < n_; ++j)
    if (c_[j] != 0) c[j * s1] += c_[j];
  for (long j = 0; j < o.n_; ++j)
    if (o.c_[j] != 0) c[j * s2] += o.c_[j];
  Cyclotomic z(l, std::move(c));
  z.normalize();
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& q : z.c_) q = -q;
  return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (n_ == 1) return o * c_[0];
  if (o.n_ == 1) return *this * o.c_[0];
  long l = std::lcm(n_, o.n_);
  long s1 = l / n_, s2 = l / o.n_;
  std::vector<mpq_class> c(l, mpq_class(0));
  for (long i = 0; i < n_; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < o.n_; ++j) {
      if (o.c_[j] == 0) continue;
      c[(i * s1 + j * s2) % l] += c_[i] * o.c_[j];
    }
  }
  Cyclotomic z(l, std::move(c));
  z.normalize();
  return z;
}

Cyclotomic Cyclotomic::operator*(const mpq_class& q) const {
  if (q == 0) return Cyclotomic();
  mpq_class v = q;
  v.canonicalize();
  Cyclotomic z = *this;
  for (auto& x : z.c_) x *= v;
  return z;
}

Cyclotomic Cyclotomic::operator/(const mpq_class& q) const {
  if (q == 0) throw Error("cyclotomic: division by zero");
  mpq_class v = q;
  v.canonicalize();
  return *this * mpq_class(1 / v);
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (n_ == 1) return *this;
  long am = ((a % n_) + n_) % n_;
  if (std::gcd(am, n_) != 1) throw Error("galois: exponent not coprime to conductor");
  std::vector<mpq_class> c(n_, mpq_class(0));
  for (long j = 0; j < n_; ++j)
    if (c_[j] != 0) c[am * j % n_] += c_[j];
  Cyclotomic z(n_, std::move(c));
  z.normalize();
  return z;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("cyclotomic: division by zero");
  if (n_ == 1) {
    return Cyclotomic(mpq_class(1 / c_[0]));
  }
  Cyclotomic prod(1);
  for (long a = 2; a < n_; ++a) {
    if (std::gcd(a, n_) != 1) continue;
    prod *= galois(a);
  }
  Cyclotomic norm = prod * (*this);
  if (!norm.is_rational()) throw Error("cyclotomic: norm failed to be rational");
  return prod / norm.rational_value();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z(0.0, 0.0);
  const double twopi = 6.283185307179586476925286766559;
  for (long j = 0; j < n_; ++j) {
    if (c_[j] == 0) continue;
    double arg = twopi * static_cast<double>(j) / static_cast<double>(n_);
    z += c_[j].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long j = 0; j < n_; ++j) {
    if (c_[j] == 0) continue;
    mpq_class q = c_[j];
    if (first) {
      if (q < 0) {
        os << "-";
        q = -q;
      }
    } else {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    if (j == 0) {
      os << rat_str(q);
    } else {
      if (q != 1) os << rat_str(q) << "*";
      os << "z" << n_;
      if (j != 1) os << "^" << j;
    }
  }
  return os.str();
}

CycMat CycMat::identity(int n) {
  CycMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

CycMat CycMat::operator*(const CycMat& o) const {
  if (cols != o.rows) throw Error("cycmat: shape mismatch");
  CycMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Cyclotomic& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

CycMat CycMat::conj_transpose() const {
  CycMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

CycMat CycMat::entrywise_conj() const {
  CycMat r(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j).conj();
  return r;
}

bool CycMat::is_identity() const {
  if (rows != cols) return false;
  Cyclotomic one(1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (i == j ? at(i, j) != one : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool CycMat::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool CycMat::is_permutation() const {
  if (rows != cols) return false;
  Cyclotomic one(1);
  std::vector<int> col_hit(cols, 0);
  for (int i = 0; i < rows; ++i) {
    int ones = 0;
    for (int j = 0; j < cols; ++j) {
      if (at(i, j).is_zero()) continue;
      if (at(i, j) != one) return false;
      ones++;
      col_hit[j]++;
    }
    if (ones != 1) return false;
  }
  for (int j = 0; j < cols; ++j)
    if (col_hit[j] != 1) return false;
  return true;
}

Cyclotomic CycMat::determinant() const {
  if (rows != cols) throw Error("determinant: not square");
  CycMat w = *this;
  Cyclotomic det(1);
  for (int k = 0; k < rows; ++k) {
    int pivot = -1;
    for (int i = k; i < rows; ++i) {
      if (!w.at(i, k).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Cyclotomic(0);
    if (pivot != k) {
      for (int j = 0; j < cols; ++j) std::swap(w.at(pivot, j), w.at(k, j));
      det = -det;
    }
    Cyclotomic pv = w.at(k, k);
    det *= pv;
    Cyclotomic inv = pv.inverse();
    for (int j = k; j < cols; ++j) w.at(k, j) *= inv;
    for (int i = k + 1; i < rows; ++i) {
      if (w.at(i, k).is_zero()) continue;
      Cyclotomic f = w.at(i, k);
      for (int j = k; j < cols; ++j) w.at(i, j) -= f * w.at(k, j);
    }
  }
  return det;
}

}  // namespace orbifold
