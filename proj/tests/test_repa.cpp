#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "orbifold/double_data.hpp"
#include "orbifold/group.hpp"
#include "orbifold/repa.hpp"

using namespace orbifold;

namespace {

RepA make_ctx(const std::string& group, const std::string& selector) {
  FiniteGroup m = group_from_spec(group);
  std::vector<int> n = resolve_subgroup(m, selector);
  return RepA(m, n);
}

std::multiset<long> dim_multiset(const RepA& ctx) {
  std::multiset<long> out;
  for (const auto& l : ctx.labels()) out.insert(l.dim_a);
  return out;
}

int unit_label(const RepA& ctx) { return ctx.label_index(0, 0); }

}  // namespace

TEST_CASE("label census for S3 over its 3-element normal subgroup") {
  RepA ctx = make_ctx("S3", "index:2");
  REQUIRE(ctx.labels().size() == 10);

  int dim1 = 0, dim3 = 0;
  for (const auto& lab : ctx.labels()) {
    if (lab.dim_a == 1) {
      ++dim1;
      CHECK(lab.sector == 0);
    } else {
      CHECK(lab.dim_a == 3);
      ++dim3;
      CHECK(lab.sector != 0);
    }
  }
  CHECK(dim1 == 9);
  CHECK(dim3 == 1);

  // both sectors carry the same total squared dimension, |N|^2
  std::map<int, long> per_sector;
  for (const auto& lab : ctx.labels()) per_sector[lab.sector] += lab.dim_a * lab.dim_a;
  REQUIRE(per_sector.size() == 2);
  for (const auto& [sec, total] : per_sector) CHECK(total == 9);
}

TEST_CASE("label census for Q8 over its center") {
  RepA ctx = make_ctx("Q8", "center");
  REQUIRE(ctx.labels().size() == 16);
  CHECK(ctx.g().order == 4);
  for (const auto& lab : ctx.labels()) CHECK(lab.dim_a == 1);

  std::map<int, int> per_sector;
  for (const auto& lab : ctx.labels()) per_sector[lab.sector]++;
  REQUIRE(per_sector.size() == 4);
  for (const auto& [sec, cnt] : per_sector) CHECK(cnt == 4);

  std::map<int, long> sq;
  for (const auto& lab : ctx.labels()) sq[lab.sector] += lab.dim_a * lab.dim_a;
  for (const auto& [sec, total] : sq) CHECK(total == 4);
}

TEST_CASE("census over S4: subgroup A4 and the Klein subgroup") {
  RepA a4 = make_ctx("S4", "index:2");
  CHECK(a4.labels().size() == 18);
  std::map<int, long> sq;
  for (const auto& lab : a4.labels()) sq[lab.sector] += lab.dim_a * lab.dim_a;
  REQUIRE(sq.size() == 2);
  for (const auto& [sec, total] : sq) CHECK(total == 144);

  RepA v4 = make_ctx("S4", "index:6");
  CHECK(v4.labels().size() == 30);
  CHECK(v4.g().order == 6);
  std::map<int, long> sq2;
  std::set<int> sectors;
  for (const auto& lab : v4.labels()) {
    sq2[lab.sector] += lab.dim_a * lab.dim_a;
    sectors.insert(lab.sector);
  }
  REQUIRE(sectors.size() == 6);  // every sector is populated
  for (const auto& [sec, total] : sq2) CHECK(total == 16);
}

TEST_CASE("taking N = M reproduces the census of the double") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    FiniteGroup m = group_from_spec(name);
    std::vector<int> all(m.order);
    for (int i = 0; i < m.order; ++i) all[i] = i;
    RepA ctx(m, all);

    DoubleData dd = double_modular_data(m);
    REQUIRE(ctx.labels().size() == dd.labels.size());
    std::multiset<long> a = dim_multiset(ctx);
    std::multiset<long> b(dd.dims.begin(), dd.dims.end());
    CHECK(a == b);
    for (const auto& lab : ctx.labels()) CHECK(lab.sector == 0);
  }
}

TEST_CASE("taking N trivial grades the group algebra of M") {
  FiniteGroup m = group_from_spec("S3");
  RepA ctx(m, {0});
  REQUIRE(ctx.labels().size() == 6);
  for (const auto& lab : ctx.labels()) CHECK(lab.dim_a == 1);
  // sectors biject with elements, fusion follows the multiplication table
  std::set<int> sectors;
  for (const auto& lab : ctx.labels()) sectors.insert(lab.sector);
  CHECK(sectors.size() == 6);
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      std::vector<long> f = ctx.fuse(x, y);
      long total = 0;
      for (long v : f) total += v;
      CHECK(total == 1);
    }
  }
}

TEST_CASE("graded modules are unitary homomorphisms compatible with the grading") {
  for (auto [g, sel] : std::vector<std::pair<const char*, const char*>>{
           {"S3", "index:2"}, {"Q8", "center"}}) {
    RepA ctx = make_ctx(g, sel);
    const FiniteGroup& m = ctx.parent();
    const SubgroupView& n = ctx.n();
    for (int l = 0; l < static_cast<int>(ctx.labels().size()); ++l) {
      GradedModule mod = ctx.module_of(l);
      REQUIRE(mod.dim == ctx.labels()[l].dim_a);

      for (int ni = 0; ni < n.group.order; ++ni) {
        const Eigen::MatrixXcd& r = mod.n_act[ni];
        CHECK((r.adjoint() * r - Eigen::MatrixXcd::Identity(mod.dim, mod.dim)).norm() < 1e-8);
        // entries only connect slots whose grades are conjugate by this element
        int np = n.to_parent[ni];
        for (int i = 0; i < mod.dim; ++i)
          for (int j = 0; j < mod.dim; ++j)
            if (std::abs(r(i, j)) > 1e-9) CHECK(mod.grade[i] == m.conj(np, mod.grade[j]));
      }
      for (int a = 0; a < n.group.order; ++a)
        for (int b = 0; b < n.group.order; ++b)
          CHECK((mod.n_act[n.group.mul(a, b)] - mod.n_act[a] * mod.n_act[b]).norm() < 1e-7);
    }
  }
}

TEST_CASE("the quotient acts on labels by conjugation") {
  for (auto [g, sel] : std::vector<std::pair<const char*, const char*>>{
           {"S3", "index:2"}, {"Q8", "center"}, {"S4", "index:6"}}) {
    RepA ctx = make_ctx(g, sel);
    const FiniteGroup& q = ctx.g();
    int nl = static_cast<int>(ctx.labels().size());

    for (int gg = 0; gg < q.order; ++gg) {
      std::set<int> image;
      for (int l = 0; l < nl; ++l) {
        int l2 = ctx.act(gg, l);
        image.insert(l2);
        CHECK(ctx.labels()[l2].dim_a == ctx.labels()[l].dim_a);
        CHECK(ctx.sector_of(l2) == q.conj(gg, ctx.sector_of(l)));
      }
      CHECK(static_cast<int>(image.size()) == nl);  // permutation
      for (int l = 0; l < nl; ++l) CHECK(ctx.act(0, l) == l);
    }
    for (int a = 0; a < q.order; ++a)
      for (int b = 0; b < q.order; ++b)
        for (int l = 0; l < nl; ++l)
          CHECK(ctx.act(q.mul(a, b), l) == ctx.act(a, ctx.act(b, l)));
  }
}

TEST_CASE("fusion respects sectors and total dimension") {
  for (auto [g, sel] : std::vector<std::pair<const char*, const char*>>{
           {"S3", "index:2"}, {"Q8", "center"}}) {
    RepA ctx = make_ctx(g, sel);
    const FiniteGroup& q = ctx.g();
    int nl = static_cast<int>(ctx.labels().size());
    for (int x = 0; x < nl; ++x) {
      for (int y = 0; y < nl; ++y) {
        std::vector<long> f = ctx.fuse(x, y);
        int sec = q.mul(ctx.sector_of(x), ctx.sector_of(y));
        long total = 0;
        for (int z = 0; z < nl; ++z) {
          if (f[z] > 0) CHECK(ctx.sector_of(z) == sec);
          total += f[z] * ctx.labels()[z].dim_a;
        }
        CHECK(total == ctx.labels()[x].dim_a * ctx.labels()[y].dim_a);
      }
    }
  }
}

TEST_CASE("duals invert sectors and pair once with the unit") {
  for (auto [g, sel] : std::vector<std::pair<const char*, const char*>>{
           {"S3", "index:2"}, {"Q8", "center"}}) {
    RepA ctx = make_ctx(g, sel);
    const FiniteGroup& q = ctx.g();
    int nl = static_cast<int>(ctx.labels().size());
    int unit = unit_label(ctx);
    CHECK(ctx.labels()[unit].dim_a == 1);
    CHECK(ctx.sector_of(unit) == 0);

    for (int x = 0; x < nl; ++x) {
      int xd = ctx.dual(x);
      CHECK(ctx.labels()[xd].dim_a == ctx.labels()[x].dim_a);
      CHECK(ctx.sector_of(xd) == q.inv(ctx.sector_of(x)));
      CHECK(ctx.dual(xd) == x);

      std::vector<long> f = ctx.fuse(x, xd);
      CHECK(f[unit] == 1);
      // the unit never shows up against anything but the dual
      for (int y = 0; y < nl; ++y) {
        if (y == xd) continue;
        CHECK(ctx.fuse(x, y)[unit] == 0);
      }
    }
  }
}

TEST_CASE("untwisted fusion matches the fusion ring of the double of N") {
  for (auto [g, sel] : std::vector<std::pair<const char*, const char*>>{
           {"S3", "index:2"}, {"Q8", "center"}}) {
    RepA ctx = make_ctx(g, sel);
    const SubgroupView& n = ctx.n();
    DoubleData dd = double_modular_data(n.group);

    // identify each untwisted label with a simple of the double
    std::vector<int> untw;  // repa label -> position
    std::map<int, int> to_dd;
    for (int l = 0; l < static_cast<int>(ctx.labels().size()); ++l) {
      if (ctx.sector_of(l) != 0) continue;
      const SimpleLabel& lab = ctx.labels()[l];
      int nm = n.from_parent[lab.m0];
      REQUIRE(nm >= 0);
      int cls = dd.classes.class_of[nm];
      REQUIRE(dd.classes.reps[cls] == nm);
      int found = -1;
      for (int k = 0; k < dd.num_labels(); ++k)
        if (dd.labels[k].class_rep == nm && dd.labels[k].irrep == lab.pi) found = k;
      REQUIRE(found >= 0);
      CHECK(dd.dims[found] == lab.dim_a);
      to_dd[l] = found;
      untw.push_back(l);
    }
    REQUIRE(untw.size() == dd.labels.size());

    auto fusion = verlinde_fusion(dd);
    for (int x : untw) {
      for (int y : untw) {
        std::vector<long> f = ctx.fuse(x, y);
        for (int z : untw) CHECK(f[z] == fusion[to_dd[x]][to_dd[y]][to_dd[z]]);
        for (int z = 0; z < static_cast<int>(f.size()); ++z)
          if (ctx.sector_of(z) != 0) CHECK(f[z] == 0);
      }
    }
  }
}

TEST_CASE("fusion multiplicities are symmetric in the two factors") {
  RepA ctx = make_ctx("S3", "index:2");
  int nl = static_cast<int>(ctx.labels().size());
  for (int x = 0; x < nl; ++x)
    for (int y = x; y < nl; ++y) CHECK(ctx.fuse(x, y) == ctx.fuse(y, x));
}
