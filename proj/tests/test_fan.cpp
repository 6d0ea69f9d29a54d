#include "doctest.h"
#include "tropgw/fan.hpp"

using namespace tropgw;
using namespace tropgw::fans;

namespace {
VecZ v2(int a, int b) { return {Int(a), Int(b)}; }
VecQ q2(int a, int b) { return {Rat(a), Rat(b)}; }
}  // namespace

TEST_CASE("p2 fan has seven cones and is complete") {
  Fan f = fan_p2();
  CHECK(f.ambient_rank() == 2);
  CHECK(f.cones().size() == 7);  // origin + 3 rays + 3 maximal
  CHECK(f.maximal_cones().size() == 3);
  CHECK(f.is_complete());
}

TEST_CASE("rank one fan with a single ray is valid but not complete") {
  Fan f = Fan::make(1, {Cone::from_rays(1, {{Int(1)}})});
  CHECK(f.cones().size() == 2);
  CHECK(!f.is_complete());
  CHECK(fan_p1().is_complete());
}

TEST_CASE("overlapping cones are rejected") {
  Cone a = Cone::from_rays(2, {v2(1, 0), v2(0, 1)});
  Cone b = Cone::from_rays(2, {v2(1, 1), v2(1, -1)});
  CHECK_THROWS_AS(Fan::make(2, {a, b}), FanAxiomViolation);
}

TEST_CASE("random overlap perturbations rejected, shared faces accepted") {
  // Pairs sharing a full common face pass, skewed pairs fail.
  Cone a = Cone::from_rays(2, {v2(1, 0), v2(0, 1)});
  Cone ok = Cone::from_rays(2, {v2(0, 1), v2(-1, 0)});
  CHECK_NOTHROW(Fan::make(2, {a, ok}));
  for (int k = 2; k <= 5; ++k) {
    Cone bad = Cone::from_rays(2, {v2(1, k), v2(1, -1)});
    CHECK_THROWS_AS(Fan::make(2, {a, bad}), FanAxiomViolation);
  }
}

TEST_CASE("cone normalization and strict convexity") {
  Cone c = Cone::from_rays(2, {v2(2, 0), v2(0, 3)});
  REQUIRE(c.rays().size() == 2);
  CHECK(c.rays()[0] == v2(0, 1));
  CHECK(c.rays()[1] == v2(1, 0));
  CHECK_THROWS_AS(Cone::from_rays(2, {v2(1, 0), v2(-1, 0)}), FanAxiomViolation);
  // Redundant generator dropped.
  Cone r = Cone::from_rays(2, {v2(1, 0), v2(1, 1), v2(0, 1)});
  CHECK(r.rays().size() == 2);
}

TEST_CASE("find_cone on the p2 fan") {
  Fan f = fan_p2();

  auto loc = f.find_cone(q2(2, 1));
  CHECK(loc.cone->dim() == 2);
  CHECK(loc.cone->rays()[0] == v2(0, 1));
  CHECK(loc.cone->rays()[1] == v2(1, 0));
  REQUIRE(loc.coefficients.size() == 2);
  // rays are sorted (0,1) < (1,0): coefficients follow that order
  CHECK(loc.coefficients[0] == 1);
  CHECK(loc.coefficients[1] == 2);

  auto ray = f.find_cone(q2(-3, -3));
  CHECK(ray.cone->dim() == 1);
  CHECK(ray.cone->rays()[0] == v2(-1, -1));
  REQUIRE(ray.coefficients.size() == 1);
  CHECK(ray.coefficients[0] == 3);

  auto origin = f.find_cone(q2(0, 0));
  CHECK(origin.cone->dim() == 0);
  CHECK(origin.coefficients.empty());
}

TEST_CASE("find_cone reproduces the vector exactly") {
  Fan f = fan_p2();
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    VecQ v = {make_rat(long(rng.below(41)) - 20, 3), make_rat(long(rng.below(41)) - 20, 5)};
    auto loc = f.find_cone(v);
    VecQ rec(2, Rat(0));
    for (size_t i = 0; i < loc.cone->rays().size(); ++i) {
      CHECK(loc.coefficients[i] > 0);
      for (int j = 0; j < 2; ++j)
        rec[j] += loc.coefficients[i] * Rat(loc.cone->rays()[i][j]);
    }
    CHECK(rec == v);
  }
}

TEST_CASE("smoothness") {
  CHECK(Cone::from_rays(2, {v2(1, 0), v2(0, 1)}).is_smooth());
  CHECK(!Cone::from_rays(2, {v2(1, 0), v2(1, 2)}).is_smooth());
  Fan f = fan_p2();
  for (const Cone* c : f.maximal_cones()) CHECK(c->is_smooth());
}

TEST_CASE("star subdivision of p2 at (1,1)") {
  Fan f = fan_p2();
  Fan g = star_subdivision(f, v2(1, 1));
  CHECK(g.rays().size() == 4);
  CHECK(g.maximal_cones().size() == 4);
  CHECK(g.is_complete());
  // Refinement: every cone of g lies inside a cone of f.
  for (const auto& c : g.cones()) {
    bool inside = false;
    for (const auto& big : f.cones())
      if (big.contains_cone(c)) inside = true;
    CHECK(inside);
  }
  // Cones of f not containing the new ray survive.
  for (const auto& c : f.cones()) {
    if (c.contains(q2(1, 1))) continue;
    bool kept = false;
    for (const auto& d : g.cones())
      if (c == d) kept = true;
    CHECK(kept);
  }
}

TEST_CASE("star subdivision idempotence at existing rays") {
  Fan f = fan_p2();
  CHECK(star_subdivision(f, v2(1, 0)) == f);
  Fan line = fan_p1();
  CHECK(star_subdivision(line, {Int(1)}) == line);
  Fan half = Fan::make(1, {Cone::from_rays(1, {{Int(1)}})});
  CHECK(star_subdivision(half, {Int(1)}) == half);
  CHECK_THROWS_AS(star_subdivision(half, {Int(-1)}), NotInSupport);
}

TEST_CASE("star subdivision preserves support and completeness") {
  Fan f = fan_p2();
  Fan g = star_subdivision(f, v2(2, 1));
  CHECK(g.is_complete());
  Fan h = star_subdivision(g, v2(1, 2));
  CHECK(h.is_complete());
}

TEST_CASE("product fan of two lines") {
  Fan f = product_fan(fan_p1(), fan_p1());
  CHECK(f.ambient_rank() == 2);
  CHECK(f.rays().size() == 4);
  CHECK(f.maximal_cones().size() == 4);
  CHECK(f.is_complete());
}

TEST_CASE("cone intersection") {
  Cone a = Cone::from_rays(2, {v2(1, 0), v2(0, 1)});
  Cone b = Cone::from_rays(2, {v2(1, 1), v2(1, -1)});
  Cone c = intersect_cones(a, b);
  REQUIRE(c.rays().size() == 2);
  CHECK(c.rays()[0] == v2(1, 0));
  CHECK(c.rays()[1] == v2(1, 1));

  Cone d = intersect_cones(a, Cone::from_rays(2, {v2(0, 1), v2(-1, 0)}));
  REQUIRE(d.rays().size() == 1);
  CHECK(d.rays()[0] == v2(0, 1));

  Cone z = intersect_cones(Cone::from_rays(2, {v2(1, 0)}),
                           Cone::from_rays(2, {v2(0, 1)}));
  CHECK(z.dim() == 0);
}
