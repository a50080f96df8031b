#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbifold/rational.hpp"

namespace orbifold {

// Element of a cyclotomic field Q(zeta_n), held in a canonical form:
// coefficients over the tensor-product integral basis (for every prime power
// p^a || n the local exponent lies below phi(p^a)), with the conductor reduced
// to the smallest m (never 2 mod 4) whose field contains the value.
// Canonical form is unique, so operator== is coefficient comparison.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, mpq_class(0)) {}
  explicit Cyclotomic(const mpq_class& q) : n_(1), c_(1, q) { c_[0].canonicalize(); }
  explicit Cyclotomic(long v) : n_(1), c_(1, mpq_class(v)) {}

  // zeta_n^k
  static Cyclotomic root_of_unity(long n, long k);
  // sum of coeff * zeta_n^k for (k, coeff) terms
  static Cyclotomic from_terms(long n, const std::vector<std::pair<long, mpq_class>>& terms);

  long conductor() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  const mpq_class& rational_value() const;  // requires is_rational()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic operator*(const mpq_class& q) const;
  Cyclotomic operator/(const mpq_class& q) const;

  // Galois conjugation zeta_n -> zeta_n^a, gcd(a, n) = 1
  Cyclotomic galois(long a) const;
  // complex conjugation = galois(-1)
  Cyclotomic conj() const { return galois(-1); }
  // multiplicative inverse via the norm; throws on zero
  Cyclotomic inverse() const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  Cyclotomic(long n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}
  void normalize();
  void basis_reduce();
  bool try_conductor_step();

  long n_;
  std::vector<mpq_class> c_;
};

inline Cyclotomic operator*(const mpq_class& q, const Cyclotomic& x) { return x * q; }

// Dense matrix over Q(zeta), just enough for modular-data checks.
struct CycMat {
  int rows = 0;
  int cols = 0;
  std::vector<Cyclotomic> a;

  CycMat() = default;
  CycMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Cyclotomic& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Cyclotomic& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static CycMat identity(int n);
  CycMat operator*(const CycMat& o) const;
  CycMat conj_transpose() const;
  CycMat entrywise_conj() const;
  bool operator==(const CycMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_identity() const;
  bool is_symmetric() const;
  // true when the matrix entries form a permutation matrix
  bool is_permutation() const;
  // exact determinant by fraction-full Gaussian elimination
  Cyclotomic determinant() const;
};

}  // namespace orbifold
