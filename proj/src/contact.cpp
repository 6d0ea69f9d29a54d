#include "tropgw/contact.hpp"

#include <stdexcept>

namespace tropgw::contact {

using lattice::IntMat;
using lattice::QuotientLattice;

void ContactData::validate() const {
  if (matrix.cols != n) throw std::invalid_argument("marking count mismatch");
  for (int i = 0; i < matrix.rows; ++i) {
    Int s = 0;
    for (int j = 0; j < matrix.cols; ++j) s += matrix.at(i, j);
    if (s != 0)
      throw std::invalid_argument("contact row " + std::to_string(i) +
                                  " does not sum to zero");
  }
}

ContactData make_contact_data(int genus, const std::vector<VecZ>& columns) {
  ContactData c;
  c.genus = genus;
  c.n = int(columns.size());
  c.matrix = IntMat::from_cols(columns);
  if (columns.empty()) c.matrix = IntMat(0, 0);
  c.validate();
  return c;
}

ContactData severi_contact_data(int d, int g) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  std::vector<VecZ> cols;
  for (int k = 0; k < d; ++k) cols.push_back({Int(1), Int(0)});
  for (int k = 0; k < d; ++k) cols.push_back({Int(0), Int(1)});
  for (int k = 0; k < d; ++k) cols.push_back({Int(-1), Int(-1)});
  for (int k = 0; k < 3 * d - 1 + g; ++k) cols.push_back({Int(0), Int(0)});
  return make_contact_data(g, cols);
}

ContactData hurwitz_contact_data(int d, int g) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  std::vector<VecZ> cols;
  for (int k = 0; k < d; ++k) cols.push_back({Int(1)});
  for (int k = 0; k < d; ++k) cols.push_back({Int(-1)});
  for (int k = 0; k < 2 * d - 2 + 2 * g; ++k) cols.push_back({Int(0)});
  return make_contact_data(g, cols);
}

EvaluationSpaceSpec evaluation_space(const fans::Fan& fan, const ContactData& lam) {
  lam.validate();
  int r = fan.ambient_rank();
  if (lam.rank() != r && lam.n > 0)
    throw std::invalid_argument("contact data rank does not match the fan");
  EvaluationSpaceSpec spec;
  for (int j = 0; j < lam.n; ++j) {
    MarkingStratum ms;
    VecZ v = lam.column(j);
    if (is_zero(v)) {
      ms.stratum_cone = std::nullopt;
      ms.quotient = lattice::quotient_by_sublattice(r, {});
    } else {
      auto loc = fan.find_cone(v);  // NotInSupport propagates
      ms.stratum_cone = *loc.cone;
      ms.quotient = lattice::quotient_by_sublattice(r, loc.cone->rays());
    }
    spec.product_rank += ms.quotient.quotient_rank();
    spec.per_marking.push_back(std::move(ms));
  }
  return spec;
}

EffectivityReport effectivity_check(const fans::Fan& fan, const ContactData& lam) {
  EvaluationSpaceSpec spec = evaluation_space(fan, lam);
  int r = fan.ambient_rank();
  EffectivityReport report;
  report.phi = IntMat(spec.product_rank, r);
  int row = 0;
  for (const auto& ms : spec.per_marking) {
    const IntMat& p = ms.quotient.projection;
    for (int i = 0; i < p.rows; ++i, ++row)
      for (int j = 0; j < r; ++j) report.phi.at(row, j) = p.at(i, j);
  }
  report.injective = lattice::kernel_basis(report.phi).empty();
  report.cokernel_free_after_saturation = lattice::cokernel_is_free(report.phi);
  report.effective = report.injective;
  return report;
}

QuotientLattice rubber_quotient(const EvaluationSpaceSpec& spec,
                                const EffectivityReport& report) {
  if (!report.effective)
    throw NotEffective("translation action is not effective");
  std::vector<VecZ> image_cols;
  for (int j = 0; j < report.phi.cols; ++j) image_cols.push_back(report.phi.col(j));
  return lattice::quotient_by_sublattice(spec.product_rank, image_cols);
}

}  // namespace tropgw::contact
