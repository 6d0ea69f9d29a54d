#ifndef TROPGW_PIECEWISE_HPP
#define TROPGW_PIECEWISE_HPP

#include <stdexcept>
#include <vector>

#include "tropgw/fan.hpp"
#include "tropgw/lattice.hpp"
#include "tropgw/polynomial.hpp"

namespace tropgw::pw {

struct RayNotInFan : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FanMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotConeCompatible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContinuityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strict piecewise polynomial on a fan: one polynomial in the ambient
// coordinates per maximal cone, agreeing on shared faces. Construction
// verifies the face agreement symbolically.
class PiecewisePoly {
 public:
  // parts are indexed like fan.maximal_cones().
  PiecewisePoly(fans::Fan fan, std::vector<poly::Poly> parts);

  static PiecewisePoly zero(const fans::Fan& fan);
  static PiecewisePoly constant(const fans::Fan& fan, const Rat& c);

  const fans::Fan& fan() const { return fan_; }
  const std::vector<poly::Poly>& parts() const { return parts_; }

  Rat evaluate(const VecQ& v) const;
  Rat evaluate(const VecZ& v) const { return evaluate(to_vecq(v)); }

  PiecewisePoly operator+(const PiecewisePoly& o) const;
  PiecewisePoly operator*(const PiecewisePoly& o) const;
  PiecewisePoly scale(const Rat& c) const;
  bool operator==(const PiecewisePoly& o) const {
    return fan_ == o.fan_ && parts_ == o.parts_;
  }

 private:
  fans::Fan fan_;
  std::vector<poly::Poly> parts_;
};

// The piecewise linear function taking value 1 on the given ray's primitive
// generator and 0 on every other ray. Requires a simplicial fan.
PiecewisePoly courant_function(const fans::Fan& fan, const VecZ& ray);

// Pullback along the linear map x -> map * x, where the map sends each cone
// of `source` into some cone of f's fan.
PiecewisePoly pullback(const PiecewisePoly& f, const lattice::IntMat& map,
                       const fans::Fan& source);

// Transfers f to a fan refining f's fan (e.g. a star subdivision).
PiecewisePoly refine_to(const PiecewisePoly& f, const fans::Fan& finer);

}  // namespace tropgw::pw

#endif
