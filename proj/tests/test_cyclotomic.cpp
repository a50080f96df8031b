#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numeric>
#include <vector>

#include "orbifold/common.hpp"
#include "orbifold/cyclotomic.hpp"

using orbifold::CycMat;
using orbifold::Cyclotomic;
using orbifold::Rng;

namespace {

Cyclotomic random_cyc(Rng& rng) {
  long n = 1 + static_cast<long>(rng.next_below(12));
  std::vector<std::pair<long, mpq_class>> terms;
  int nterms = 1 + static_cast<int>(rng.next_below(4));
  for (int t = 0; t < nterms; ++t) {
    long k = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(n)));
    long num = static_cast<long>(rng.next_below(9)) - 4;
    long den = 1 + static_cast<long>(rng.next_below(3));
    terms.push_back({k, mpq_class(num, den)});
  }
  return Cyclotomic::from_terms(n, terms);
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

TEST_CASE("rationals embed at conductor 1") {
  Cyclotomic z(mpq_class(3, 2));
  CHECK(z.is_rational());
  CHECK(z.rational_value() == mpq_class(3, 2));
  CHECK((z + z).rational_value() == 3);
  CHECK((z * z).rational_value() == mpq_class(9, 4));
}

TEST_CASE("power relations collapse to smaller conductors") {
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic i2 = i * i;
  CHECK(i2.is_rational());
  CHECK(i2.rational_value() == -1);

  Cyclotomic m1 = Cyclotomic::root_of_unity(2, 1);
  CHECK(m1.is_rational());
  CHECK(m1.rational_value() == -1);
  CHECK((Cyclotomic(1) + m1).is_zero());

  Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic s = w + w * w;
  CHECK(s.is_rational());
  CHECK(s.rational_value() == -1);

  // zeta_6 lives in Q(zeta_3): conductor is never 2 mod 4
  Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
  CHECK(z6.conductor() == 3);
  CHECK(z6 == -(w * w));
}

TEST_CASE("numeric embedding matches known values") {
  Cyclotomic z8 = Cyclotomic::root_of_unity(8, 1);
  Cyclotomic sqrt2 = z8 + z8.conj();
  CHECK(close(sqrt2.to_complex(), {std::sqrt(2.0), 0.0}));
  CHECK((sqrt2 * sqrt2).rational_value() == 2);

  Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
  Cyclotomic golden = z5 + z5.conj();  // 2 cos(2 pi / 5)
  CHECK(close(golden.to_complex(), {(std::sqrt(5.0) - 1.0) / 2.0, 0.0}));
}

TEST_CASE("ring axioms hold on sampled elements") {
  Rng rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    Cyclotomic x = random_cyc(rng);
    Cyclotomic y = random_cyc(rng);
    Cyclotomic z = random_cyc(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + Cyclotomic() == x);
    CHECK(x * Cyclotomic(1) == x);
    CHECK((x - x).is_zero());
    CHECK(close((x * y).to_complex(), x.to_complex() * y.to_complex()));
    CHECK(close((x + y).to_complex(), x.to_complex() + y.to_complex()));
  }
}

TEST_CASE("galois maps are ring maps and conj is an involution") {
  Rng rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic x = random_cyc(rng);
    Cyclotomic y = random_cyc(rng);
    long n = std::lcm(x.conductor(), y.conductor());
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      // a acts consistently on the subfields generated by x, y and x*y
      CHECK((x * y).galois(a) == x.galois(a) * y.galois(a));
      CHECK((x + y).galois(a) == x.galois(a) + y.galois(a));
    }
    CHECK(x.conj().conj() == x);
    CHECK(close(x.conj().to_complex(), std::conj(x.to_complex())));
  }
}

TEST_CASE("inverse multiplies back to one") {
  Rng rng(4242);
  int done = 0;
  while (done < 15) {
    Cyclotomic x = random_cyc(rng);
    if (x.is_zero()) continue;
    Cyclotomic p = x * x.inverse();
    CHECK(p.is_rational());
    CHECK(p.rational_value() == 1);
    done++;
  }
  CHECK_THROWS(Cyclotomic().inverse());
}

TEST_CASE("galois conjugation of roots permutes exponents") {
  Cyclotomic z7 = Cyclotomic::root_of_unity(7, 1);
  CHECK(z7.galois(3) == Cyclotomic::root_of_unity(7, 3));
  CHECK(z7.conj() == Cyclotomic::root_of_unity(7, 6));
  // sum over a full orbit is rational (here all primitive 7th roots: -1)
  Cyclotomic s;
  for (long a = 1; a < 7; ++a) s += Cyclotomic::root_of_unity(7, a);
  CHECK(s.rational_value() == -1);
}

TEST_CASE("matrix identities over Q(zeta)") {
  // unnormalized character matrix of Z/3: F F^* = 3 I
  CycMat f(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) f.at(j, k) = Cyclotomic::root_of_unity(3, j * k);
  CycMat prod = f * f.conj_transpose();
  CycMat expect(3, 3);
  for (int j = 0; j < 3; ++j) expect.at(j, j) = Cyclotomic(3);
  CHECK(prod == expect);
  CHECK(f.is_symmetric());
  CHECK_FALSE(f.is_permutation());

  CycMat p(3, 3);
  p.at(0, 1) = Cyclotomic(1);
  p.at(1, 0) = Cyclotomic(1);
  p.at(2, 2) = Cyclotomic(1);
  CHECK(p.is_permutation());
  CHECK((p * p).is_identity());

  CycMat m(2, 2);
  m.at(0, 0) = Cyclotomic(1);
  m.at(0, 1) = Cyclotomic::root_of_unity(4, 1);
  m.at(1, 0) = Cyclotomic::root_of_unity(4, 1);
  m.at(1, 1) = Cyclotomic(1);
  CHECK(m.determinant().rational_value() == 2);
  CHECK(f.determinant() != Cyclotomic(0));
}
