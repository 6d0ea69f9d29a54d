#include "doctest.h"
#include "tropgw/piecewise.hpp"

using namespace tropgw;
using namespace tropgw::fans;
using namespace tropgw::pw;
using tropgw::poly::Poly;

namespace {
VecZ v2(int a, int b) { return {Int(a), Int(b)}; }
VecQ q1(const Rat& a) { return {a}; }
VecQ q2(const Rat& a, const Rat& b) { return {a, b}; }
}  // namespace

TEST_CASE("courant on the line") {
  Fan f = fan_p1();
  PiecewisePoly c = courant_function(f, {Int(1)});
  CHECK(c.evaluate(q1(Rat(3))) == 3);
  CHECK(c.evaluate(q1(Rat(-2))) == 0);
  CHECK(c.evaluate(q1(Rat(0))) == 0);
  CHECK(c.evaluate(q1(Rat(7))) == 7);
}

TEST_CASE("courant on p2") {
  Fan f = fan_p2();
  PiecewisePoly c = courant_function(f, v2(-1, -1));
  CHECK(c.evaluate(q2(Rat(-2), Rat(-2))) == 2);
  PiecewisePoly cx = courant_function(f, v2(1, 0));
  CHECK(cx.evaluate(q2(Rat(0), Rat(5))) == 0);
  CHECK(cx.evaluate(q2(Rat(5), Rat(0))) == 5);
  CHECK_THROWS_AS(courant_function(f, v2(1, 1)), RayNotInFan);
}

TEST_CASE("ring operations and identities") {
  Fan f = fan_p2();
  PiecewisePoly c = courant_function(f, v2(1, 0));
  PiecewisePoly z = PiecewisePoly::zero(f);
  PiecewisePoly one = PiecewisePoly::constant(f, Rat(1));
  CHECK(c + z == c);
  CHECK(one * c == c);
  CHECK(c.scale(Rat(1)) == c);

  Fan g = fan_p1();
  PiecewisePoly other = courant_function(g, {Int(1)});
  CHECK_THROWS_AS(c + pullback(other, lattice::IntMat::identity(1), g),
                  FanMismatch);
}

TEST_CASE("product of adjacent courants is supported on their cone") {
  Fan f = fan_p2();
  PiecewisePoly cx = courant_function(f, v2(1, 0));
  PiecewisePoly cy = courant_function(f, v2(0, 1));
  PiecewisePoly prod = cx * cy;
  SplitMix64 rng(11);
  for (int t = 0; t < 50; ++t) {
    VecQ v = q2(make_rat(long(rng.below(41)) - 20, 3),
                make_rat(long(rng.below(41)) - 20, 4));
    CHECK(prod.evaluate(v) == cx.evaluate(v) * cy.evaluate(v));
    if (v[0] > 0 && v[1] > 0) CHECK(prod.evaluate(v) == v[0] * v[1]);
    if (v[0] < 0 || v[1] < 0) CHECK(prod.evaluate(v) == 0);
  }
}

TEST_CASE("continuity is verified at construction") {
  Fan f = fan_p1();
  // x on the right, 2x on the left: disagreement at 0 is fine (both 0),
  // so break it with constants instead.
  std::vector<Poly> bad = {Poly::constant(1, Rat(1)), Poly::constant(1, Rat(2))};
  CHECK_THROWS_AS(PiecewisePoly(f, bad), ContinuityViolation);
  // Genuinely continuous: |x| as x on one side, -x on the other.
  auto maxc = f.maximal_cones();
  std::vector<Poly> parts;
  for (const Cone* c : maxc) {
    Rat slope = c->rays()[0][0] > 0 ? Rat(1) : Rat(-1);
    parts.push_back(Poly::linear({slope}));
  }
  PiecewisePoly absx(f, parts);
  CHECK(absx.evaluate(q1(Rat(-5))) == 5);
  CHECK(absx.evaluate(q1(Rat(5))) == 5);
}

TEST_CASE("courant functions generate linear functions on complete fans") {
  std::vector<Fan> fansets = {fan_p1(), fan_p2(), product_fan(fan_p1(), fan_p1())};
  SplitMix64 rng(23);
  for (const Fan& f : fansets) {
    int n = f.ambient_rank();
    std::vector<VecZ> rays = f.rays();
    for (int mtrial = 0; mtrial < 3; ++mtrial) {
      VecZ m(n);
      for (int i = 0; i < n; ++i) m[i] = int(rng.below(9)) - 4;
      PiecewisePoly sum = PiecewisePoly::zero(f);
      for (const auto& r : rays)
        sum = sum + courant_function(f, r).scale(Rat(dot(m, r)));
      for (int t = 0; t < 34; ++t) {
        VecQ v(n);
        for (int i = 0; i < n; ++i) v[i] = make_rat(long(rng.below(81)) - 40, 6);
        CHECK(sum.evaluate(v) == dot(to_vecq(m), v));
      }
    }
  }
}

TEST_CASE("pullback along identity and zero maps") {
  Fan f = fan_p2();
  PiecewisePoly c = courant_function(f, v2(1, 0));
  PiecewisePoly id = pullback(c, lattice::IntMat::identity(2), f);
  CHECK(id == c);

  lattice::IntMat zero(2, 2);
  PiecewisePoly z = pullback(c, zero, f);
  SplitMix64 rng(3);
  for (int t = 0; t < 10; ++t) {
    VecQ v = q2(make_rat(long(rng.below(21)) - 10, 2),
                make_rat(long(rng.below(21)) - 10, 2));
    CHECK(z.evaluate(v) == 0);
  }
}

TEST_CASE("pullback along the projection of a product") {
  Fan pxp = product_fan(fan_p1(), fan_p1());
  Fan p1 = fan_p1();
  lattice::IntMat proj(1, 2);
  proj.at(0, 0) = 1;
  PiecewisePoly c = courant_function(p1, {Int(1)});
  PiecewisePoly pb = pullback(c, proj, pxp);
  SplitMix64 rng(17);
  for (int t = 0; t < 20; ++t) {
    VecQ v = q2(make_rat(long(rng.below(81)) - 40, 3),
                make_rat(long(rng.below(81)) - 40, 7));
    CHECK(pb.evaluate(v) == c.evaluate(q1(v[0])));
    CHECK(pb.evaluate(v) == (v[0] > 0 ? v[0] : Rat(0)));
  }
}

TEST_CASE("pullback commutes with evaluation at random points") {
  Fan f2 = fan_p2();
  Fan sub = star_subdivision(f2, v2(1, 1));
  PiecewisePoly c = courant_function(f2, v2(1, 0));
  PiecewisePoly fine = refine_to(c, sub);
  SplitMix64 rng(29);
  for (int t = 0; t < 100; ++t) {
    VecQ v = q2(make_rat(long(rng.below(161)) - 80, 9),
                make_rat(long(rng.below(161)) - 80, 5));
    CHECK(fine.evaluate(v) == c.evaluate(v));
  }
}

TEST_CASE("incompatible pullback reports the offending cone") {
  // The identity from the subdivided fan to itself is compatible, but
  // mapping the coarse fan into the finer one is not: the coarse cone
  // spanning (1,0),(0,1) is split by the new ray.
  Fan f2 = fan_p2();
  Fan sub = star_subdivision(f2, v2(1, 1));
  PiecewisePoly onsub = courant_function(sub, v2(1, 1));
  CHECK_NOTHROW(refine_to(onsub, sub));
  CHECK_THROWS_AS(pullback(onsub, lattice::IntMat::identity(2), f2),
                  NotConeCompatible);
}
