#ifndef TROPGW_POLYNOMIAL_HPP
#define TROPGW_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "tropgw/numeric.hpp"

namespace tropgw::poly {

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// in a map keyed by exponent vector, so the representation is canonical and
// comparison is exact.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);
  // Linear form sum_i coeffs[i] * x_i
  static Poly linear(const VecQ& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exp, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rat eval(const VecQ& x) const;

  // Substitutes x_i -> images[i]; all images share a variable count.
  Poly compose(const std::vector<Poly>& images) const;

  std::string str(const std::string& varname = "x") const;

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace tropgw::poly

#endif
