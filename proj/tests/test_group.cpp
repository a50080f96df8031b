#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbifold/common.hpp"
#include "orbifold/group.hpp"

using namespace orbifold;

TEST_CASE("catalog groups have the expected orders and pass the axiom battery") {
  struct Row {
    const char* spec;
    int order;
  };
  const Row rows[] = {{"Z1", 1},  {"Z2", 2},  {"Z3", 3},    {"Z4", 4},  {"Z6", 6},
                      {"S3", 6},  {"S4", 24}, {"S5", 120},  {"A4", 12}, {"A5", 60},
                      {"D4", 8},  {"D5", 10}, {"Q8", 8},    {"Z2xZ2", 4},
                      {"Z2xZ3", 6}, {"S3xZ2", 12}, {"D2", 4}};
  for (const Row& r : rows) {
    FiniteGroup g = group_from_spec(r.spec, 128);
    CHECK_MESSAGE(g.order == r.order, r.spec);
    validate_group(g);
    CHECK(g.element_names[0] == (std::string(r.spec) == "Q8" ? "1" : "e"));
  }
}

TEST_CASE("perm specs close under multiplication") {
  FiniteGroup g = group_from_spec("perm:(1 2 3),(1 2)");
  CHECK(g.order == 6);
  validate_group(g);
  CHECK(group_from_spec("perm:(1 2)(3 4),(1 3)(2 4)").order == 4);
  CHECK_THROWS_AS(group_from_spec("perm:(1 2"), SpecParseError);
  CHECK_THROWS_AS(group_from_spec("nonsense"), SpecParseError);
  CHECK_THROWS_AS(group_from_spec("Z100", 64), TooLarge);
}

TEST_CASE("element orders and exponent") {
  FiniteGroup z6 = group_from_spec("Z6");
  std::multiset<int> orders;
  for (int a = 0; a < 6; ++a) orders.insert(z6.element_order(a));
  CHECK(orders == std::multiset<int>{1, 2, 3, 3, 6, 6});
  CHECK(z6.exponent() == 6);
  CHECK(group_from_spec("Q8").exponent() == 4);
  CHECK(group_from_spec("S4").exponent() == 12);
}

TEST_CASE("conjugacy classes of the small catalog") {
  auto sizes = [](const FiniteGroup& g) {
    std::multiset<size_t> s;
    for (const auto& m : conjugacy_data(g).members) s.insert(m.size());
    return s;
  };
  CHECK(sizes(group_from_spec("S3")) == std::multiset<size_t>{1, 2, 3});
  CHECK(sizes(group_from_spec("Z4")) == std::multiset<size_t>{1, 1, 1, 1});
  CHECK(sizes(group_from_spec("Q8")) == std::multiset<size_t>{1, 1, 2, 2, 2});
  CHECK(sizes(group_from_spec("S4")) == std::multiset<size_t>{1, 3, 6, 6, 8});
  CHECK(sizes(group_from_spec("A5")) == std::multiset<size_t>{1, 12, 12, 15, 20});

  FiniteGroup g = group_from_spec("S4");
  ConjugacyData cd = conjugacy_data(g);
  CHECK(cd.class_of[0] == 0);
  CHECK(cd.reps[0] == 0);
  for (size_t c = 0; c < cd.reps.size(); ++c) {
    CHECK(cd.members[c].size() * cd.centralizers[c].size() == static_cast<size_t>(g.order));
    CHECK(cd.reps[c] == cd.members[c].front());
  }
}

TEST_CASE("center and derived subgroup") {
  FiniteGroup q8 = group_from_spec("Q8");
  auto z = center_members(q8);
  CHECK(z.size() == 2);
  CHECK(derived_members(q8) == z);

  CHECK(center_members(group_from_spec("S4")).size() == 1);
  CHECK(derived_members(group_from_spec("S4")).size() == 12);
  CHECK(derived_members(group_from_spec("S3")).size() == 3);
  CHECK(center_members(group_from_spec("D4")).size() == 2);
  CHECK(derived_members(group_from_spec("Z6")).size() == 1);
}

TEST_CASE("normal subgroup enumeration") {
  auto ns_sizes = [](const char* spec) {
    std::multiset<size_t> s;
    for (const auto& h : normal_subgroups(group_from_spec(spec))) s.insert(h.size());
    return s;
  };
  CHECK(ns_sizes("S4") == std::multiset<size_t>{1, 4, 12, 24});
  CHECK(ns_sizes("S3") == std::multiset<size_t>{1, 3, 6});
  CHECK(ns_sizes("Q8") == std::multiset<size_t>{1, 2, 4, 4, 4, 8});
  CHECK(ns_sizes("A5") == std::multiset<size_t>{1, 60});
}

TEST_CASE("subgroup selectors") {
  FiniteGroup s4 = group_from_spec("S4");
  CHECK(resolve_subgroup(s4, "index:2").size() == 12);
  CHECK(resolve_subgroup(s4, "index:6").size() == 4);
  CHECK(resolve_subgroup(s4, "derived").size() == 12);
  CHECK(resolve_subgroup(s4, "center").size() == 1);
  CHECK(resolve_subgroup(s4, "trivial").size() == 1);
  CHECK(resolve_subgroup(s4, "full").size() == 24);
  CHECK(resolve_subgroup(s4, "gens:(1 2)(3 4),(1 3)(2 4)").size() == 4);
  CHECK_THROWS_AS(resolve_subgroup(s4, "index:5"), SpecParseError);
  CHECK_THROWS_AS(resolve_subgroup(group_from_spec("Z2xZ2"), "index:2"), AmbiguousSelector);
  CHECK_THROWS_AS(resolve_subgroup(s4, "wat"), SpecParseError);

  // the Klein subgroup resolved by gens matches the one found by index
  CHECK(resolve_subgroup(s4, "gens:(1 2)(3 4),(1 3)(2 4)") == resolve_subgroup(s4, "index:6"));
}

TEST_CASE("subgroup view is a group with consistent embedding") {
  FiniteGroup s4 = group_from_spec("S4");
  SubgroupView v4 = subgroup_view(s4, resolve_subgroup(s4, "index:6"));
  CHECK(v4.group.order == 4);
  validate_group(v4.group);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(v4.to_parent[v4.group.mul(a, b)] == s4.mul(v4.to_parent[a], v4.to_parent[b]));
  CHECK(v4.from_parent[v4.to_parent[2]] == 2);
  CHECK(v4.group.exponent() == 2);
  // element 2 is the 4-cycle generator; {e, c} is not closed for c of order 4
  CHECK(s4.element_order(2) == 4);
  CHECK_THROWS(subgroup_view(s4, {0, 2}));
}

TEST_CASE("quotients with minimal-representative sections") {
  FiniteGroup s3 = group_from_spec("S3");
  QuotientData q = quotient_with_section(s3, resolve_subgroup(s3, "index:2"));
  CHECK(q.quotient.order == 2);
  validate_group(q.quotient);
  CHECK(q.section[0] == 0);
  for (int a = 0; a < 2; ++a) CHECK(q.projection[q.section[a]] == a);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(q.projection[s3.mul(x, y)] == q.quotient.mul(q.projection[x], q.projection[y]));

  FiniteGroup q8 = group_from_spec("Q8");
  QuotientData qq = quotient_with_section(q8, center_members(q8));
  CHECK(qq.quotient.order == 4);
  CHECK(qq.quotient.exponent() == 2);  // Q8 / {+-1} is the Klein group

  CHECK_THROWS_AS(quotient_with_section(s3, resolve_subgroup(s3, "gens:(1 2)")), NotNormal);
}

TEST_CASE("projected parent classes are exactly the quotient classes") {
  for (const char* spec : {"S4", "Q8", "D4"}) {
    FiniteGroup m = group_from_spec(spec);
    for (const auto& nm : normal_subgroups(m)) {
      QuotientData qd = quotient_with_section(m, nm);
      std::set<std::set<int>> projected;
      for (const auto& cls : conjugacy_data(m).members) {
        std::set<int> img;
        for (int x : cls) img.insert(qd.projection[x]);
        projected.insert(img);
      }
      std::set<std::set<int>> direct;
      for (const auto& cls : conjugacy_data(qd.quotient).members)
        direct.insert(std::set<int>(cls.begin(), cls.end()));
      CHECK(projected == direct);
    }
  }
}

TEST_CASE("quaternion group multiplication matches the unit relations") {
  FiniteGroup q8 = group_from_spec("Q8");
  auto find = [&](const std::string& nm) {
    for (int a = 0; a < 8; ++a)
      if (q8.element_names[a] == nm) return a;
    throw std::runtime_error("missing unit " + nm);
  };
  int i = find("i"), j = find("j"), k = find("k"), m1 = find("-1");
  CHECK(q8.mul(i, i) == m1);
  CHECK(q8.mul(j, j) == m1);
  CHECK(q8.mul(k, k) == m1);
  CHECK(q8.mul(i, j) == k);
  CHECK(q8.mul(j, i) == q8.inv(k));
  CHECK(q8.element_order(m1) == 2);
}
