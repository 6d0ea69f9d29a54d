#ifndef TROPGW_CONTACT_HPP
#define TROPGW_CONTACT_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "tropgw/fan.hpp"
#include "tropgw/lattice.hpp"

namespace tropgw::contact {

struct NotEffective : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Discrete data of the counting problem: genus, marking count and the
// r x n integer matrix of contact orders, one column per marking.
// Every row sums to zero.
struct ContactData {
  int genus = 0;
  int n = 0;
  lattice::IntMat matrix;  // r rows, n columns

  int rank() const { return matrix.rows; }
  VecZ column(int j) const { return matrix.col(j); }
  bool column_is_zero(int j) const { return is_zero(column(j)); }

  // Throws std::invalid_argument unless each row sums to zero.
  void validate() const;
};

ContactData make_contact_data(int genus, const std::vector<VecZ>& columns);

// Degree-d genus-g plane curves: d columns each of (1,0), (0,1), (-1,-1),
// then 3d-1+g zero columns for the point conditions.
ContactData severi_contact_data(int d, int g);

// Degree-d genus-g covers of the line: d entries 1, d entries -1, then
// 2d-2+2g zeros for the simple branch points.
ContactData hurwitz_contact_data(int d, int g);

// Per-marking evaluation stratum: the quotient of the ambient lattice by
// the saturated span of the cone resolving the contact vector. Trivial
// contact keeps the full space (identity quotient, no stratum cone).
struct MarkingStratum {
  std::optional<fans::Cone> stratum_cone;  // nullopt: the whole space
  lattice::QuotientLattice quotient;
};

struct EvaluationSpaceSpec {
  std::vector<MarkingStratum> per_marking;
  int product_rank = 0;
};

EvaluationSpaceSpec evaluation_space(const fans::Fan& fan, const ContactData& lam);

// The lattice map from the target's cocharacters into the evaluation
// lattice, assembled by stacking the per-marking quotient projections.
// Effectivity is injectivity of this map.
struct EffectivityReport {
  lattice::IntMat phi;  // product_rank x r
  bool injective = false;
  bool cokernel_free_after_saturation = false;
  bool effective = false;
};

EffectivityReport effectivity_check(const fans::Fan& fan, const ContactData& lam);

// Quotient of the evaluation lattice by the saturation of phi(N): the
// configurations-up-to-translation lattice. Requires effectivity.
lattice::QuotientLattice rubber_quotient(const EvaluationSpaceSpec& spec,
                                         const EffectivityReport& report);

}  // namespace tropgw::contact

#endif
