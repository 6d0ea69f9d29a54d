#include "tropgw/fan.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "tropgw/qlin.hpp"

namespace tropgw::qlin {

QMat QMat::from_rows(const std::vector<VecQ>& rows) {
  if (rows.empty()) return QMat(0, 0);
  QMat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

QMat QMat::from_cols(const std::vector<VecQ>& cols) {
  if (cols.empty()) return QMat(0, 0);
  QMat m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

std::vector<int> rref(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(p, j));
    Rat inv = m.at(row, col);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(QMat m) { return int(rref(m).size()); }

std::optional<VecQ> solve(const QMat& a, const VecQ& b) {
  assert(int(b.size()) == a.rows);
  QMat m(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols) = b[i];
  }
  auto pivots = rref(m);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  VecQ x(a.cols, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m.at(int(k), a.cols);
  return x;
}

std::vector<VecQ> kernel(const QMat& a) {
  QMat m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<VecQ> out;
  for (int j = 0; j < a.cols; ++j) {
    if (is_pivot[j]) continue;
    VecQ v(a.cols, Rat(0));
    v[j] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(int(k), j);
    out.push_back(v);
  }
  return out;
}

}  // namespace tropgw::qlin

namespace tropgw::fans {

using lattice::IntMat;
using qlin::QMat;

namespace {

// Clears denominators and divides by the content, preserving direction.
VecZ integral_direction(const VecQ& v) {
  Int lcm = 1;
  for (const auto& q : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  VecZ z(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(lcm);
    z[i] = s.get_num();
  }
  Int g = content(z);
  if (g > 1)
    for (auto& x : z) x /= g;
  return z;
}

VecZ scale_primitive_keep_dir(const VecZ& v) {
  Int g = content(v);
  if (g <= 1) return v;
  VecZ r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

bool lex_less(const VecZ& a, const VecZ& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::vector<VecZ> std_basis(int n) {
  std::vector<VecZ> out;
  for (int i = 0; i < n; ++i) {
    VecZ e(n, Int(0));
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

// All k-subsets of {0..m-1}, visited through a callback.
template <typename F>
void for_each_subset(int m, int k, F&& f) {
  if (k < 0 || k > m) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    f(c);
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  if (k == 0) return;
}

// Extreme rays of {y in Q^d : N y >= 0}, assumed pointed.
std::vector<VecZ> extreme_rays(const std::vector<VecZ>& normals, int d) {
  std::vector<VecZ> out;
  if (d == 0) return out;
  std::set<VecZ> seen;
  if (d == 1) {
    for (int s : {1, -1}) {
      bool ok = true;
      for (const auto& n : normals)
        if (n[0] * s < 0) ok = false;
      if (ok) seen.insert({Int(s)});
    }
  } else {
    int m = int(normals.size());
    for_each_subset(m, d - 1, [&](const std::vector<int>& c) {
      std::vector<VecQ> rows;
      for (int i : c) rows.push_back(to_vecq(normals[i]));
      QMat a = rows.empty() ? QMat(0, d) : QMat::from_rows(rows);
      auto ker = qlin::kernel(a);
      if (ker.size() != 1) return;
      VecZ cand = integral_direction(ker[0]);
      for (int s : {1, -1}) {
        VecZ v = cand;
        if (s < 0) v = tropgw::neg(v);
        bool ok = !is_zero(v);
        for (const auto& n : normals)
          if (dot(n, v) < 0) {
            ok = false;
            break;
          }
        if (ok) seen.insert(v);
      }
    });
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace

Cone Cone::from_rays(int ambient_rank, std::vector<VecZ> rays) {
  Cone c;
  c.ambient_rank_ = ambient_rank;
  std::vector<VecZ> norm;
  for (auto& r : rays) {
    if (int(r.size()) != ambient_rank)
      throw FanAxiomViolation("ray has wrong ambient rank");
    if (is_zero(r)) throw FanAxiomViolation("zero vector is not a ray");
    norm.push_back(scale_primitive_keep_dir(r));
  }
  std::sort(norm.begin(), norm.end(), lex_less);
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  c.rays_ = norm;

  if (c.rays_.empty()) {
    c.dim_ = 0;
    c.span_eq_ = std_basis(ambient_rank);
    return c;
  }
  IntMat r_rows = IntMat::from_rows(c.rays_);
  c.dim_ = lattice::rank(r_rows);
  for (const auto& k : lattice::kernel_basis(r_rows)) c.span_eq_.push_back(k);

  // Saturated basis of the span, for working in local coordinates.
  std::vector<VecZ> span_basis;
  if (c.span_eq_.empty()) {
    span_basis = std_basis(ambient_rank);
  } else {
    span_basis = lattice::kernel_basis(IntMat::from_rows(c.span_eq_));
  }
  int d = c.dim_;
  assert(int(span_basis.size()) == d);

  std::vector<VecQ> bcols;
  for (const auto& b : span_basis) bcols.push_back(to_vecq(b));
  QMat bmat = QMat::from_cols(bcols);
  std::vector<VecZ> rays_local;
  for (const auto& r : c.rays_) {
    auto sol = qlin::solve(bmat, to_vecq(r));
    assert(sol.has_value());
    rays_local.push_back(integral_direction(*sol));
  }

  // Facet normals in local coordinates: supporting hyperplanes spanned by
  // d-1 of the generators.
  std::set<VecZ> found;
  if (d == 1) {
    for (int s : {1, -1}) {
      VecZ n(1, Int(s));
      bool nonneg = true, strict = false;
      for (const auto& rl : rays_local) {
        Int v = dot(n, rl);
        if (v < 0) nonneg = false;
        if (v > 0) strict = true;
      }
      if (nonneg && strict) found.insert(n);
    }
  } else {
    int k = int(rays_local.size());
    for_each_subset(k, d - 1, [&](const std::vector<int>& cidx) {
      std::vector<VecQ> rows;
      for (int i : cidx) rows.push_back(to_vecq(rays_local[i]));
      QMat a = rows.empty() ? QMat(0, d) : QMat::from_rows(rows);
      auto ker = qlin::kernel(a);
      if (ker.size() != 1) return;
      VecZ n0 = integral_direction(ker[0]);
      for (int s : {1, -1}) {
        VecZ n = n0;
        if (s < 0) n = tropgw::neg(n);
        bool nonneg = true, strict = false;
        for (const auto& rl : rays_local) {
          Int v = dot(n, rl);
          if (v < 0) {
            nonneg = false;
            break;
          }
          if (v > 0) strict = true;
        }
        if (nonneg && strict) found.insert(n);
      }
    });
  }
  std::vector<VecZ> normals_local(found.begin(), found.end());

  // Strict convexity: the facet normals of a pointed cone span the dual.
  {
    std::vector<VecQ> rows;
    for (const auto& n : normals_local) rows.push_back(to_vecq(n));
    QMat nm = rows.empty() ? QMat(0, d) : QMat::from_rows(rows);
    if (d > 0 && !qlin::kernel(nm).empty())
      throw FanAxiomViolation("cone contains a line");
  }

  // Drop generators that are not extreme: a generator is extreme iff the
  // normals vanishing on it span a hyperplane in the local dual.
  if (int(c.rays_.size()) > d || !normals_local.empty()) {
    std::vector<VecZ> extreme;
    std::vector<VecZ> extreme_local;
    for (size_t i = 0; i < c.rays_.size(); ++i) {
      std::vector<VecQ> tight;
      for (const auto& n : normals_local)
        if (dot(n, rays_local[i]) == 0) tight.push_back(to_vecq(n));
      int rk = tight.empty() ? 0 : qlin::rank(QMat::from_rows(tight));
      if (rk == d - 1) {
        extreme.push_back(c.rays_[i]);
        extreme_local.push_back(rays_local[i]);
      }
    }
    c.rays_ = extreme;
    rays_local = extreme_local;
  }

  // Lift normals to ambient functionals.
  QMat bt(d, ambient_rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < ambient_rank; ++j) bt.at(i, j) = Rat(span_basis[i][j]);
  for (const auto& n : normals_local) {
    auto m = qlin::solve(bt, to_vecq(n));
    assert(m.has_value());
    c.facet_normals_.push_back(integral_direction(*m));
  }
  std::sort(c.facet_normals_.begin(), c.facet_normals_.end(), lex_less);
  return c;
}

bool Cone::contains(const VecQ& v) const {
  for (const auto& e : span_eq_)
    if (dot(to_vecq(e), v) != 0) return false;
  for (const auto& n : facet_normals_)
    if (dot(to_vecq(n), v) < 0) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const VecQ& v) const {
  for (const auto& e : span_eq_)
    if (dot(to_vecq(e), v) != 0) return false;
  for (const auto& n : facet_normals_)
    if (dot(to_vecq(n), v) <= 0) return false;
  return true;
}

bool Cone::contains_cone(const Cone& other) const {
  for (const auto& r : other.rays())
    if (!contains(r)) return false;
  return true;
}

std::vector<Cone> Cone::faces() const {
  std::vector<Cone> out;
  if (is_simplicial()) {
    int k = int(rays_.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<VecZ> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(rays_[i]);
      out.push_back(Cone::from_rays(ambient_rank_, sub));
    }
  } else {
    int f = int(facet_normals_.size());
    std::set<std::string> seen;
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
      std::vector<VecZ> sub;
      for (const auto& r : rays_) {
        bool on = true;
        for (int i = 0; i < f; ++i)
          if ((mask & (1u << i)) && dot(facet_normals_[i], r) != 0) on = false;
        if (on) sub.push_back(r);
      }
      Cone face = Cone::from_rays(ambient_rank_, sub);
      if (seen.insert(face.key()).second) out.push_back(face);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Cone::is_smooth() const {
  if (!is_simplicial()) return false;
  if (rays_.empty()) return true;
  IntMat m = IntMat::from_rows(rays_);
  for (const auto& d : lattice::smith_invariants(m))
    if (d != 1) return false;
  return true;
}

bool Cone::operator<(const Cone& o) const {
  if (rays_.size() != o.rays_.size()) return rays_.size() < o.rays_.size();
  for (size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i] != o.rays_[i]) return lex_less(rays_[i], o.rays_[i]);
  return false;
}

std::string Cone::key() const {
  std::string s;
  for (const auto& r : rays_) {
    s += to_string(r);
    s += ";";
  }
  return s;
}

Cone intersect_cones(const Cone& a, const Cone& b) {
  assert(a.ambient_rank() == b.ambient_rank());
  int n = a.ambient_rank();
  std::vector<VecZ> eqs = a.span_equations();
  for (const auto& e : b.span_equations()) eqs.push_back(e);

  std::vector<VecZ> kbasis;
  if (eqs.empty()) {
    kbasis = std_basis(n);
  } else {
    kbasis = lattice::kernel_basis(IntMat::from_rows(eqs));
  }
  int d = int(kbasis.size());
  if (d == 0) return Cone::zero(n);

  std::vector<VecZ> normals;
  for (const Cone* c : {&a, &b})
    for (const auto& m : c->facet_normals()) {
      VecZ nl(d);
      for (int i = 0; i < d; ++i) nl[i] = dot(m, kbasis[i]);
      if (!is_zero(nl)) normals.push_back(nl);
    }

  std::vector<VecZ> rays_local = extreme_rays(normals, d);
  std::vector<VecZ> rays_ambient;
  for (const auto& rl : rays_local) {
    VecQ v(n, Rat(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) v[j] += Rat(rl[i]) * Rat(kbasis[i][j]);
    VecZ r = integral_direction(v);
    if (a.contains(to_vecq(r)) && b.contains(to_vecq(r)))
      rays_ambient.push_back(r);
  }
  return Cone::from_rays(n, rays_ambient);
}

Fan Fan::make(int ambient_rank, std::vector<Cone> cones) {
  Fan f;
  f.ambient_rank_ = ambient_rank;
  std::map<std::string, Cone> pool;
  for (const auto& c : cones) {
    if (c.ambient_rank() != ambient_rank)
      throw FanAxiomViolation("mixed ambient ranks in fan");
    for (const auto& face : c.faces()) pool.emplace(face.key(), face);
  }
  if (pool.empty()) {
    Cone z = Cone::zero(ambient_rank);
    pool.emplace(z.key(), z);
  }
  std::vector<Cone> all;
  for (auto& [k, c] : pool) all.push_back(c);
  std::sort(all.begin(), all.end());

  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      Cone c = intersect_cones(all[i], all[j]);
      auto is_face_of = [&](const Cone& big) {
        for (const auto& face : big.faces())
          if (face == c) return true;
        return false;
      };
      if (!is_face_of(all[i]) || !is_face_of(all[j]))
        throw FanAxiomViolation("cones intersect in a non-face: {" +
                                all[i].key() + "} vs {" + all[j].key() + "}");
    }
  f.cones_ = all;
  return f;
}

std::vector<const Cone*> Fan::maximal_cones() const {
  std::vector<const Cone*> out;
  for (const auto& c : cones_) {
    bool maximal = true;
    for (const auto& d : cones_) {
      if (c == d) continue;
      if (d.contains_cone(c)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(&c);
  }
  return out;
}

std::vector<VecZ> Fan::rays() const {
  std::set<VecZ> set;
  for (const auto& c : cones_)
    for (const auto& r : c.rays()) set.insert(r);
  return std::vector<VecZ>(set.begin(), set.end());
}

bool Fan::has_ray(const VecZ& primitive_ray) const {
  for (const auto& c : cones_)
    if (c.rays().size() == 1 && c.rays()[0] == primitive_ray) return true;
  return false;
}

Fan::Location Fan::find_cone(const VecQ& v) const {
  for (const auto& c : cones_) {
    if (!c.contains_in_relative_interior(v)) continue;
    if (c.dim() == 0) return Location{&c, {}};
    if (!c.is_simplicial())
      throw NonSimplicial("vector lies interior to a non-simplicial cone");
    std::vector<VecQ> cols;
    for (const auto& r : c.rays()) cols.push_back(to_vecq(r));
    auto sol = qlin::solve(qlin::QMat::from_cols(cols), v);
    assert(sol.has_value());
    return Location{&c, *sol};
  }
  throw NotInSupport("vector outside the fan support: (" +
                     tropgw::to_string(v) + ")");
}

bool Fan::supports(const VecQ& v) const {
  for (const auto& c : cones_)
    if (c.contains(v)) return true;
  return false;
}

bool Fan::is_complete() const {
  auto maxc = maximal_cones();
  if (maxc.empty()) return false;
  for (const Cone* c : maxc)
    if (c->dim() != ambient_rank_) return false;
  if (ambient_rank_ == 0) return true;
  // Constructive certificate: every facet of a maximal cone is shared with
  // exactly one neighboring maximal cone.
  std::map<std::string, int> facet_count;
  for (const Cone* c : maxc)
    for (const auto& face : c->faces())
      if (face.dim() == ambient_rank_ - 1) facet_count[face.key()] += 1;
  for (const auto& [k, cnt] : facet_count)
    if (cnt != 2) return false;

  SplitMix64 rng(2718281828ULL);
  for (int t = 0; t < 24; ++t) {
    VecQ v(ambient_rank_);
    for (int i = 0; i < ambient_rank_; ++i)
      v[i] = make_rat(long(rng.below(2001)) - 1000, 7);
    if (!supports(v)) return false;
  }
  return true;
}

Fan star_subdivision(const Fan& fan, const VecZ& ray_in) {
  VecZ ray = scale_primitive_keep_dir(ray_in);
  if (is_zero(ray)) throw NotInSupport("subdivision ray must be nonzero");
  if (!fan.supports(to_vecq(ray)))
    throw NotInSupport("subdivision ray outside the fan support");
  if (fan.has_ray(ray)) return fan;

  std::vector<Cone> out;
  for (const auto& c : fan.cones()) {
    if (!c.contains(to_vecq(ray))) {
      out.push_back(c);
      continue;
    }
    for (const auto& face : c.faces()) {
      if (face.contains(to_vecq(ray))) continue;
      std::vector<VecZ> rays = face.rays();
      rays.push_back(ray);
      out.push_back(Cone::from_rays(fan.ambient_rank(), rays));
    }
  }
  return Fan::make(fan.ambient_rank(), out);
}

Fan fan_p1() {
  Cone plus = Cone::from_rays(1, {{Int(1)}});
  Cone minus = Cone::from_rays(1, {{Int(-1)}});
  return Fan::make(1, {plus, minus});
}

Fan fan_p2() {
  VecZ e1 = {Int(1), Int(0)}, e2 = {Int(0), Int(1)}, e3 = {Int(-1), Int(-1)};
  return Fan::make(2, {Cone::from_rays(2, {e1, e2}), Cone::from_rays(2, {e2, e3}),
                       Cone::from_rays(2, {e3, e1})});
}

Fan product_fan(const Fan& a, const Fan& b) {
  int ra = a.ambient_rank(), rb = b.ambient_rank();
  auto pad = [&](const VecZ& v, bool first) {
    VecZ w(ra + rb, Int(0));
    for (size_t i = 0; i < v.size(); ++i) w[first ? i : ra + i] = v[i];
    return w;
  };
  std::vector<Cone> cones;
  for (const Cone* ca : a.maximal_cones())
    for (const Cone* cb : b.maximal_cones()) {
      std::vector<VecZ> rays;
      for (const auto& r : ca->rays()) rays.push_back(pad(r, true));
      for (const auto& r : cb->rays()) rays.push_back(pad(r, false));
      cones.push_back(Cone::from_rays(ra + rb, rays));
    }
  return Fan::make(ra + rb, cones);
}

}  // namespace tropgw::fans
