#ifndef TROPGW_FAN_HPP
#define TROPGW_FAN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropgw/lattice.hpp"
#include "tropgw/numeric.hpp"

namespace tropgw::fans {

struct FanAxiomViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInSupport : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonSimplicial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational polyhedral cone over Z^ambient_rank, stored by its primitive ray
// generators in a fixed lexicographic order. Must be strictly convex.
// Facet inequalities are derived on demand.
class Cone {
 public:
  Cone() = default;

  // Normalizes: primitivizes generators, removes duplicates, sorts.
  // Throws FanAxiomViolation if the cone contains a line.
  static Cone from_rays(int ambient_rank, std::vector<VecZ> rays);

  static Cone zero(int ambient_rank) { return from_rays(ambient_rank, {}); }

  int ambient_rank() const { return ambient_rank_; }
  const std::vector<VecZ>& rays() const { return rays_; }
  int dim() const { return dim_; }
  bool is_simplicial() const { return int(rays_.size()) == dim_; }

  // Linear equations cutting out the span, and facet normals valid on the
  // span (n.v >= 0 for v in the cone).
  const std::vector<VecZ>& span_equations() const { return span_eq_; }
  const std::vector<VecZ>& facet_normals() const { return facet_normals_; }

  bool contains(const VecQ& v) const;
  bool contains(const VecZ& v) const { return contains(to_vecq(v)); }
  bool contains_in_relative_interior(const VecQ& v) const;
  bool contains_in_relative_interior(const VecZ& v) const {
    return contains_in_relative_interior(to_vecq(v));
  }
  bool contains_cone(const Cone& other) const;

  // All faces, including the cone itself and the zero cone.
  std::vector<Cone> faces() const;

  // True iff the primitive generators extend to a lattice basis.
  bool is_smooth() const;

  bool operator==(const Cone& o) const {
    return ambient_rank_ == o.ambient_rank_ && rays_ == o.rays_;
  }
  bool operator<(const Cone& o) const;

  std::string key() const;

 private:
  int ambient_rank_ = 0;
  int dim_ = 0;
  std::vector<VecZ> rays_;
  std::vector<VecZ> span_eq_;        // ambient functionals vanishing on span
  std::vector<VecZ> facet_normals_;  // ambient functionals, >= 0 on the cone
};

Cone intersect_cones(const Cone& a, const Cone& b);

// Fan: set of cones closed under taking faces, pairwise intersecting in
// common faces.
class Fan {
 public:
  Fan() = default;

  // Face-closes the input and verifies the fan axioms.
  static Fan make(int ambient_rank, std::vector<Cone> cones);

  int ambient_rank() const { return ambient_rank_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::vector<const Cone*> maximal_cones() const;

  // Distinct rays of the fan, sorted.
  std::vector<VecZ> rays() const;
  bool has_ray(const VecZ& primitive_ray) const;

  // The unique cone whose relative interior contains v, plus the positive
  // coefficients of v over that cone's generators (empty for the origin).
  // Throws NotInSupport / NonSimplicial.
  struct Location {
    const Cone* cone;
    VecQ coefficients;
  };
  Location find_cone(const VecQ& v) const;
  Location find_cone(const VecZ& v) const { return find_cone(to_vecq(v)); }

  bool supports(const VecQ& v) const;

  bool is_complete() const;

  bool operator==(const Fan& o) const {
    return ambient_rank_ == o.ambient_rank_ && cones_ == o.cones_;
  }

 private:
  int ambient_rank_ = 0;
  std::vector<Cone> cones_;  // sorted canonically, face-closed
};

// Star subdivision at a primitive ray in the support. Subdividing at an
// existing ray returns the fan unchanged.
Fan star_subdivision(const Fan& fan, const VecZ& ray);

Fan fan_p1();
Fan fan_p2();
Fan product_fan(const Fan& a, const Fan& b);

}  // namespace tropgw::fans

#endif
