#include "tropgw/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace tropgw::poly {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Rat(1));
  return p;
}

Poly Poly::linear(const VecQ& coeffs) {
  Poly p(int(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<int> e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const std::vector<int>& exp, const Rat& c) {
  assert(int(exp.size()) == nvars_);
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

Rat Poly::eval(const VecQ& x) const {
  assert(int(x.size()) == nvars_);
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  assert(int(images.size()) == nvars_);
  int m = images.empty() ? 0 : images[0].nvars();
  Poly r(m);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(m, c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t = t * images[i];
    r = r + t;
  }
  return r;
}

std::string Poly::str(const std::string& varname) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += to_string(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      s += "*" + varname + std::to_string(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

}  // namespace tropgw::poly
