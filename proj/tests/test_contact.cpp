#include "doctest.h"
#include "tropgw/contact.hpp"

using namespace tropgw;
using namespace tropgw::contact;
using namespace tropgw::fans;

TEST_CASE("severi contact data shapes") {
  ContactData c = severi_contact_data(2, 0);
  CHECK(c.rank() == 2);
  CHECK(c.n == 11);  // 6 nonzero + 5 zero
  int nonzero = 0;
  for (int j = 0; j < c.n; ++j)
    if (!c.column_is_zero(j)) ++nonzero;
  CHECK(nonzero == 6);

  ContactData c1 = severi_contact_data(1, 0);
  CHECK(c1.n == 5);
  int nz1 = 0;
  for (int j = 0; j < c1.n; ++j)
    if (!c1.column_is_zero(j)) ++nz1;
  CHECK(nz1 == 3);

  ContactData c31 = severi_contact_data(3, 1);
  CHECK(c31.n == 18);  // 9 nonzero + 9 zero
  c31.validate();
}

TEST_CASE("hurwitz contact data shapes") {
  ContactData h = hurwitz_contact_data(2, 0);
  CHECK(h.rank() == 1);
  REQUIRE(h.n == 6);
  VecZ expect = {Int(1), Int(1), Int(-1), Int(-1), Int(0), Int(0)};
  for (int j = 0; j < 6; ++j) CHECK(h.matrix.at(0, j) == expect[j]);

  ContactData h1 = hurwitz_contact_data(1, 0);
  REQUIRE(h1.n == 2);
  CHECK(h1.matrix.at(0, 0) == 1);
  CHECK(h1.matrix.at(0, 1) == -1);

  ContactData h21 = hurwitz_contact_data(2, 1);
  CHECK(h21.n == 8);  // 4 nonzero + 4 zero
}

TEST_CASE("row sums are enforced") {
  CHECK_THROWS_AS(make_contact_data(0, {{Int(1), Int(0)}, {Int(0), Int(1)}}),
                  std::invalid_argument);
  CHECK_NOTHROW(make_contact_data(0, {{Int(1), Int(0)}, {Int(-1), Int(0)}}));
}

TEST_CASE("evaluation space for severi data on p2") {
  Fan f = fan_p2();
  ContactData lam = severi_contact_data(2, 0);
  EvaluationSpaceSpec spec = evaluation_space(f, lam);
  REQUIRE(spec.per_marking.size() == 11);
  for (int j = 0; j < 6; ++j) {
    CHECK(spec.per_marking[j].stratum_cone.has_value());
    CHECK(spec.per_marking[j].quotient.quotient_rank() == 1);
  }
  for (int j = 6; j < 11; ++j) {
    CHECK(!spec.per_marking[j].stratum_cone.has_value());
    CHECK(spec.per_marking[j].quotient.quotient_rank() == 2);
  }
  CHECK(spec.product_rank == 16);
}

TEST_CASE("evaluation space on the line") {
  Fan f = fan_p1();
  ContactData lam = hurwitz_contact_data(1, 0);
  EvaluationSpaceSpec spec = evaluation_space(f, lam);
  CHECK(spec.product_rank == 0);
  for (const auto& ms : spec.per_marking)
    CHECK(ms.quotient.quotient_rank() == 0);
}

TEST_CASE("contact vector interior to a maximal cone needs a subdivision") {
  Fan f = fan_p2();
  ContactData lam = make_contact_data(0, {{Int(1), Int(1)}, {Int(-1), Int(-1)}});
  // (1,1) sits in the interior of a 2-cone: its resolving cone is that
  // 2-cone, giving a rank-0 stratum; after subdividing at (1,1) the
  // stratum is the new divisor with a rank-1 quotient.
  EvaluationSpaceSpec before = evaluation_space(f, lam);
  CHECK(before.per_marking[0].quotient.quotient_rank() == 0);
  Fan sub = star_subdivision(f, {Int(1), Int(1)});
  EvaluationSpaceSpec after = evaluation_space(sub, lam);
  CHECK(after.per_marking[0].quotient.quotient_rank() == 1);

  // A vector genuinely outside the support of a non-complete fan.
  Fan half = Fan::make(2, {Cone::from_rays(2, {{Int(1), Int(0)}, {Int(0), Int(1)}})});
  ContactData out = make_contact_data(0, {{Int(-1), Int(0)}, {Int(1), Int(0)}});
  CHECK_THROWS_AS(evaluation_space(half, out), NotInSupport);
}

TEST_CASE("effectivity fails on the line with all contacts nonzero") {
  Fan f = fan_p1();
  std::vector<VecZ> cols;
  for (int k = 0; k < 2; ++k) cols.push_back({Int(1)});
  for (int k = 0; k < 2; ++k) cols.push_back({Int(-1)});
  ContactData lam = make_contact_data(0, cols);
  EffectivityReport rep = effectivity_check(f, lam);
  CHECK(!rep.injective);
  CHECK(!rep.effective);
}

TEST_CASE("effectivity holds for severi data on p2") {
  Fan f = fan_p2();
  ContactData lam = severi_contact_data(2, 0);
  EffectivityReport rep = effectivity_check(f, lam);
  CHECK(rep.injective);
  CHECK(rep.effective);
  CHECK(rep.cokernel_free_after_saturation);
  CHECK(rep.phi.rows == 16);
  CHECK(rep.phi.cols == 2);
}

TEST_CASE("rank zero target is vacuously effective") {
  Fan point = Fan::make(0, {});
  ContactData lam = make_contact_data(0, {});
  EffectivityReport rep = effectivity_check(point, lam);
  CHECK(rep.effective);
  CHECK(rep.injective);
}

TEST_CASE("a trivial-contact marking forces effectivity") {
  Fan f = fan_p2();
  SplitMix64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    // Random columns summing to zero, plus one forced zero column.
    int k = 1 + int(rng.below(4));
    std::vector<VecZ> cols;
    VecZ sum = {Int(0), Int(0)};
    for (int i = 0; i < k; ++i) {
      VecZ c = {Int(int(rng.below(7)) - 3), Int(int(rng.below(7)) - 3)};
      sum = add(sum, c);
      cols.push_back(c);
    }
    cols.push_back(neg(sum));
    cols.push_back({Int(0), Int(0)});
    ContactData lam = make_contact_data(0, cols);
    EffectivityReport rep = effectivity_check(f, lam);
    CHECK(rep.effective);
  }
}

TEST_CASE("rubber quotient") {
  Fan f = fan_p2();
  ContactData lam = severi_contact_data(2, 0);
  EvaluationSpaceSpec spec = evaluation_space(f, lam);
  EffectivityReport rep = effectivity_check(f, lam);
  lattice::QuotientLattice q = rubber_quotient(spec, rep);
  CHECK(q.quotient_rank() == 14);  // 16 - 2
  // The quotient annihilates the image of phi exactly.
  for (int j = 0; j < rep.phi.cols; ++j)
    CHECK(is_zero(q.apply(rep.phi.col(j))));

  // All-zero contact data: the quotient kills the diagonal copy.
  ContactData triv = make_contact_data(0, {{Int(0), Int(0)}, {Int(0), Int(0)}});
  EvaluationSpaceSpec sp2 = evaluation_space(f, triv);
  EffectivityReport rp2 = effectivity_check(f, triv);
  CHECK(sp2.product_rank == 4);
  lattice::QuotientLattice q2 = rubber_quotient(sp2, rp2);
  CHECK(q2.quotient_rank() == 2);
  CHECK(is_zero(q2.apply({Int(3), Int(5), Int(3), Int(5)})));

  // Non-effective input refuses.
  Fan line = fan_p1();
  std::vector<VecZ> cols = {{Int(1)}, {Int(-1)}};
  ContactData bad = make_contact_data(0, cols);
  CHECK_THROWS_AS(
      rubber_quotient(evaluation_space(line, bad), effectivity_check(line, bad)),
      NotEffective);
}
