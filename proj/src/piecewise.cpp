#include "tropgw/piecewise.hpp"

#include <cassert>

#include "tropgw/qlin.hpp"

namespace tropgw::pw {

using fans::Cone;
using fans::Fan;
using lattice::IntMat;
using poly::Poly;

namespace {

// Substitution images for restricting an ambient polynomial to the span of
// a cone: x = B s with B a saturated basis of the span.
std::vector<Poly> span_restriction(const Cone& c, int ambient) {
  std::vector<VecZ> basis;
  if (c.span_equations().empty()) {
    for (int i = 0; i < ambient; ++i) {
      VecZ e(ambient, Int(0));
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    basis = lattice::kernel_basis(IntMat::from_rows(c.span_equations()));
  }
  int d = int(basis.size());
  std::vector<Poly> images;
  for (int i = 0; i < ambient; ++i) {
    VecQ coeffs(d, Rat(0));
    for (int j = 0; j < d; ++j) coeffs[j] = Rat(basis[j][i]);
    images.push_back(Poly::linear(coeffs));
  }
  return images;
}

}  // namespace

PiecewisePoly::PiecewisePoly(Fan fan, std::vector<Poly> parts)
    : fan_(std::move(fan)), parts_(std::move(parts)) {
  auto maxc = fan_.maximal_cones();
  if (parts_.size() != maxc.size())
    throw FanMismatch("one polynomial per maximal cone required");
  int n = fan_.ambient_rank();
  for (const auto& p : parts_)
    if (p.nvars() != n) throw FanMismatch("polynomial has wrong variable count");

  // Face agreement: restrict both neighbors to the span of their
  // intersection and compare coefficients.
  for (size_t i = 0; i < maxc.size(); ++i)
    for (size_t j = i + 1; j < maxc.size(); ++j) {
      Cone shared = fans::intersect_cones(*maxc[i], *maxc[j]);
      auto images = span_restriction(shared, n);
      if (!(parts_[i].compose(images) == parts_[j].compose(images)))
        throw ContinuityViolation("polynomials disagree on the face {" +
                                  shared.key() + "}");
    }
}

PiecewisePoly PiecewisePoly::zero(const Fan& fan) {
  return constant(fan, Rat(0));
}

PiecewisePoly PiecewisePoly::constant(const Fan& fan, const Rat& c) {
  std::vector<Poly> parts(fan.maximal_cones().size(),
                          Poly::constant(fan.ambient_rank(), c));
  return PiecewisePoly(fan, parts);
}

Rat PiecewisePoly::evaluate(const VecQ& v) const {
  auto loc = fan_.find_cone(v);
  auto maxc = fan_.maximal_cones();
  for (size_t i = 0; i < maxc.size(); ++i)
    if (maxc[i]->contains_cone(*loc.cone)) return parts_[i].eval(v);
  // find_cone succeeded, so some maximal cone contains the result.
  throw fans::NotInSupport("no maximal cone contains the located cone");
}

PiecewisePoly PiecewisePoly::operator+(const PiecewisePoly& o) const {
  if (!(fan_ == o.fan_))
    throw FanMismatch("piecewise polynomials live on different fans");
  std::vector<Poly> parts;
  for (size_t i = 0; i < parts_.size(); ++i) parts.push_back(parts_[i] + o.parts_[i]);
  return PiecewisePoly(fan_, parts);
}

PiecewisePoly PiecewisePoly::operator*(const PiecewisePoly& o) const {
  if (!(fan_ == o.fan_))
    throw FanMismatch("piecewise polynomials live on different fans");
  std::vector<Poly> parts;
  for (size_t i = 0; i < parts_.size(); ++i) parts.push_back(parts_[i] * o.parts_[i]);
  return PiecewisePoly(fan_, parts);
}

PiecewisePoly PiecewisePoly::scale(const Rat& c) const {
  std::vector<Poly> parts;
  for (const auto& p : parts_) parts.push_back(p * c);
  return PiecewisePoly(fan_, parts);
}

PiecewisePoly courant_function(const Fan& fan, const VecZ& ray) {
  if (!fan.has_ray(ray))
    throw RayNotInFan("ray is not a ray of the fan: (" + to_string(ray) + ")");
  int n = fan.ambient_rank();
  std::vector<Poly> parts;
  for (const Cone* c : fan.maximal_cones()) {
    if (!c->is_simplicial())
      throw fans::NonSimplicial("courant functions require a simplicial fan");
    // Linear functional with value 1 on the chosen ray, 0 on the others.
    std::vector<VecQ> rows;
    VecQ rhs;
    for (const auto& u : c->rays()) {
      rows.push_back(to_vecq(u));
      rhs.push_back(u == ray ? Rat(1) : Rat(0));
    }
    if (rows.empty()) {
      parts.push_back(Poly(n));
      continue;
    }
    auto m = qlin::solve(qlin::QMat::from_rows(rows), rhs);
    assert(m.has_value());
    parts.push_back(Poly::linear(*m));
  }
  return PiecewisePoly(fan, parts);
}

PiecewisePoly pullback(const PiecewisePoly& f, const IntMat& map,
                       const Fan& source) {
  const Fan& target = f.fan();
  if (map.rows != target.ambient_rank() || map.cols != source.ambient_rank())
    throw NotConeCompatible("linear map has wrong shape");
  auto tmax = target.maximal_cones();
  std::vector<Poly> parts;
  // Substitution x'_i = sum_j map[i][j] x_j.
  std::vector<Poly> images;
  for (int i = 0; i < map.rows; ++i) {
    VecQ coeffs(map.cols, Rat(0));
    for (int j = 0; j < map.cols; ++j) coeffs[j] = Rat(map.at(i, j));
    images.push_back(Poly::linear(coeffs));
  }
  for (const Cone* c : source.maximal_cones()) {
    int found = -1;
    for (size_t i = 0; i < tmax.size() && found < 0; ++i) {
      bool all = true;
      for (const auto& u : c->rays())
        if (!tmax[i]->contains(to_vecq(mul(map, u)))) {
          all = false;
          break;
        }
      if (all) found = int(i);
    }
    if (found < 0)
      throw NotConeCompatible("image of cone {" + c->key() +
                              "} is not contained in a single cone");
    parts.push_back(f.parts()[found].compose(images));
  }
  return PiecewisePoly(source, parts);
}

PiecewisePoly refine_to(const PiecewisePoly& f, const Fan& finer) {
  if (finer.ambient_rank() != f.fan().ambient_rank())
    throw FanMismatch("refinement must share the ambient lattice");
  return pullback(f, IntMat::identity(f.fan().ambient_rank()), finer);
}

}  // namespace tropgw::pw
