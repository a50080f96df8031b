#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbifold/character_table.hpp"
#include "orbifold/common.hpp"
#include "orbifold/group.hpp"
#include "orbifold/matrix_rep.hpp"

using namespace orbifold;

namespace {

std::multiset<int> degree_multiset(const CharacterTable& t) {
  return std::multiset<int>(t.degrees.begin(), t.degrees.end());
}

}  // namespace

TEST_CASE("character tables of the small catalog") {
  CharacterTable z2 = character_table(group_from_spec("Z2"));
  REQUIRE(z2.num_irreps() == 2);
  CHECK(z2.values[0] == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)});
  CHECK(z2.values[1] == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)});

  CHECK(degree_multiset(character_table(group_from_spec("S3"))) == std::multiset<int>{1, 1, 2});
  CHECK(degree_multiset(character_table(group_from_spec("Q8"))) ==
        std::multiset<int>{1, 1, 1, 1, 2});
  CHECK(degree_multiset(character_table(group_from_spec("S4"))) ==
        std::multiset<int>{1, 1, 2, 3, 3});
  CHECK(degree_multiset(character_table(group_from_spec("A4"))) == std::multiset<int>{1, 1, 1, 3});
  CHECK(degree_multiset(character_table(group_from_spec("A5"))) ==
        std::multiset<int>{1, 3, 3, 4, 5});
  CHECK(degree_multiset(character_table(group_from_spec("D4"))) ==
        std::multiset<int>{1, 1, 1, 1, 2});
  CHECK(degree_multiset(character_table(group_from_spec("Z1"))) == std::multiset<int>{1});
}

TEST_CASE("cube roots appear in the Z3 table") {
  CharacterTable t = character_table(group_from_spec("Z3"));
  Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  std::set<std::string> seen;
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) seen.insert(t.values[i][c].str());
  CHECK(seen.count(w.str()) == 1);
  CHECK(seen.count((w * w).str()) == 1);
}

TEST_CASE("first row is trivial and first column is the degree") {
  for (const char* spec : {"S3", "S4", "Q8", "D4", "A4", "Z6", "D5"}) {
    CharacterTable t = character_table(group_from_spec(spec));
    for (int c = 0; c < t.num_classes(); ++c) CHECK(t.values[0][c] == Cyclotomic(1));
    for (int i = 0; i < t.num_irreps(); ++i)
      CHECK(t.values[i][0] == Cyclotomic(t.degrees[i]));
  }
}

TEST_CASE("decompose_by_characters on known modules") {
  FiniteGroup s3 = group_from_spec("S3");
  CharacterTable t = character_table(s3);

  std::vector<Cyclotomic> regular(t.num_classes());
  regular[0] = Cyclotomic(6);
  CHECK(decompose_by_characters(regular, t) == std::vector<long>{1, 1, 2});

  std::vector<Cyclotomic> trivial(t.num_classes(), Cyclotomic(1));
  CHECK(decompose_by_characters(trivial, t) == std::vector<long>{1, 0, 0});

  // induced character of a nontrivial linear character of A3
  SubgroupView a3 = subgroup_view(s3, resolve_subgroup(s3, "index:2"));
  CharacterTable ta3 = character_table(a3.group);
  std::vector<char> in_n(s3.order, 0);
  for (int m : a3.to_parent) in_n[m] = 1;
  std::vector<Cyclotomic> induced(t.num_classes());
  for (int c = 0; c < t.num_classes(); ++c) {
    Cyclotomic sum;
    int g = t.classes.reps[c];
    for (int x = 0; x < s3.order; ++x) {
      int y = s3.mul(s3.mul(s3.inv(x), g), x);
      if (in_n[y]) sum += ta3.value_at_element(1, a3.from_parent[y]);
    }
    induced[c] = sum / mpq_class(a3.group.order);
  }
  CHECK(decompose_by_characters(induced, t) == std::vector<long>{0, 0, 1});

  // 2*trivial - sign is virtual, not a character
  std::vector<Cyclotomic> virt(t.num_classes());
  for (int c = 0; c < t.num_classes(); ++c)
    virt[c] = Cyclotomic(2) - t.values[1][c];
  CHECK_THROWS_AS(decompose_by_characters(virt, t), NotACharacter);
}

TEST_CASE("explicit irreps are unitary homomorphisms matching the table") {
  ToleranceConfig tol;
  for (const char* spec : {"Z3", "S3", "Q8", "D4", "A4", "Z2xZ2"}) {
    FiniteGroup g = group_from_spec(spec);
    CharacterTable t = character_table(g);
    std::vector<MatrixRep> reps = explicit_irreps(g, t, tol);
    REQUIRE(static_cast<int>(reps.size()) == t.num_irreps());
    for (int i = 0; i < t.num_irreps(); ++i) {
      const MatrixRep& r = reps[i];
      CHECK(r.degree == t.degrees[i]);
      for (int a = 0; a < g.order; ++a) {
        CHECK((r.mats[a] * r.mats[a].adjoint() -
               Eigen::MatrixXcd::Identity(r.degree, r.degree))
                  .norm() < 1e-8);
        for (int b = 0; b < g.order; ++b)
          CHECK((r.mats[a] * r.mats[b] - r.mats[g.mul(a, b)]).norm() < 1e-7);
        CHECK(approx_eq(r.mats[a].trace(), t.value_at_element(i, a).to_complex(), tol));
      }
    }
    // regular character vanishes away from the identity
    for (int a = 1; a < g.order; ++a) {
      std::complex<double> s = 0;
      for (int i = 0; i < t.num_irreps(); ++i)
        s += static_cast<double>(t.degrees[i]) * reps[i].mats[a].trace();
      CHECK(std::abs(s) < 1e-7);
    }
  }
}

TEST_CASE("known entries of specific explicit irreps") {
  ToleranceConfig tol;
  FiniteGroup s3 = group_from_spec("S3");
  CharacterTable ts3 = character_table(s3);
  std::vector<MatrixRep> rs3 = explicit_irreps(s3, ts3, tol);
  int three_cycle = -1;
  for (int a = 0; a < 6; ++a)
    if (s3.element_order(a) == 3) three_cycle = a;
  REQUIRE(three_cycle >= 0);
  CHECK(rs3[2].degree == 2);
  CHECK(approx_eq(rs3[2].mats[three_cycle].trace(), {-1.0, 0.0}, tol));

  FiniteGroup q8 = group_from_spec("Q8");
  std::vector<MatrixRep> rq8 = explicit_irreps(q8, character_table(q8), tol);
  int minus_one = center_members(q8)[1];
  const MatrixRep& two_dim = rq8.back();
  CHECK(two_dim.degree == 2);
  CHECK((two_dim.mats[minus_one] + Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-8);
}

TEST_CASE("twisted algebra with trivial cocycle reproduces ordinary degrees") {
  for (const char* spec : {"Z2", "Z3", "S3", "Q8", "D4", "Z2xZ2", "A4"}) {
    FiniteGroup g = group_from_spec(spec);
    CharacterTable t = character_table(g);
    TwistedIrreps tw = twisted_algebra_irreps(g, CocycleTable::trivial(g.order));
    CHECK(std::multiset<int>(tw.degrees.begin(), tw.degrees.end()) == degree_multiset(t));
    CHECK(alpha_regular_class_count(g, CocycleTable::trivial(g.order)) == t.num_classes());
  }
}

TEST_CASE("nontrivial Klein-group cocycle has a single 2-dim module") {
  FiniteGroup v4 = group_from_spec("Z2xZ2");
  // exponent pairs in breadth-first order: e, a, b, ab
  auto bits = [](int x) { return std::pair<int, int>{x == 1 || x == 3, x == 2 || x == 3}; };
  CocycleTable alpha = CocycleTable::trivial(4);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      auto [i1, j1] = bits(g);
      auto [i2, j2] = bits(h);
      alpha.at(g, h) = (j1 & i2) ? -1.0 : 1.0;
    }
  validate_cocycle(v4, alpha);
  CHECK(alpha_regular_class_count(v4, alpha) == 1);
  TwistedIrreps tw = twisted_algebra_irreps(v4, alpha);
  CHECK(tw.degrees == std::vector<int>{2});
  // the projective rep genuinely realizes the cocycle
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h)
      CHECK((tw.reps[0].mats[g] * tw.reps[0].mats[h] -
             alpha.at(g, h) * tw.reps[0].mats[v4.mul(g, h)])
                .norm() < 1e-8);

  CocycleTable bad = CocycleTable::trivial(4);
  bad.at(0, 1) = -1.0;
  CHECK_THROWS_AS(twisted_algebra_irreps(v4, bad), CocycleInvalid);
}

TEST_CASE("Z2 admits only trivial projective behaviour") {
  FiniteGroup z2 = group_from_spec("Z2");
  TwistedIrreps tw = twisted_algebra_irreps(z2, CocycleTable::trivial(2));
  CHECK(tw.degrees == std::vector<int>{1, 1});
}
