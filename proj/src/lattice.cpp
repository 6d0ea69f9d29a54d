#include "tropgw/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>

namespace tropgw {

VecZ primitive_part(const VecZ& v) {
  Int g = content(v);
  if (g == 0) return v;
  VecZ r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  for (const auto& x : r) {
    if (x > 0) break;
    if (x < 0) {
      for (auto& y : r) y = -y;
      break;
    }
  }
  return r;
}

Int content(const VecZ& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Int dot(const VecZ& a, const VecZ& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const VecQ& a, const VecQ& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat parse_rat(const std::string& s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Int parse_int(const std::string& s) {
  Int z;
  if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
    throw ParseError("bad integer: '" + s + "'");
  return z;
}

}  // namespace tropgw

namespace tropgw::lattice {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<VecZ>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    assert(int(rows[i].size()) == m.cols);
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_cols(const std::vector<VecZ>& cols) {
  if (cols.empty()) return IntMat(0, 0);
  IntMat m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    assert(int(cols[j].size()) == m.rows);
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

VecZ IntMat::row(int i) const {
  VecZ r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

VecZ IntMat::col(int j) const {
  VecZ c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  assert(x.cols == y.rows);
  IntMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

VecZ mul(const IntMat& x, const VecZ& v) {
  assert(int(v.size()) == x.cols);
  VecZ r(x.rows, Int(0));
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i] += x.at(i, j) * v[j];
  return r;
}

IntMat transpose(const IntMat& x) {
  IntMat t(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) t.at(j, i) = x.at(i, j);
  return t;
}

Int det(const IntMat& x) {
  assert(x.rows == x.cols);
  int n = x.rows;
  if (n == 0) return 1;
  IntMat m = x;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // Bareiss: the division is exact.
        m.at(i, j) = t / prev;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// Row/column elementary operations tracked in U (left) and V (right).
struct SmithWork {
  IntMat d, u, v;

  void row_swap(int i, int j) {
    for (int k = 0; k < d.cols; ++k) std::swap(d.at(i, k), d.at(j, k));
    for (int k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
  }
  void col_swap(int i, int j) {
    for (int k = 0; k < d.rows; ++k) std::swap(d.at(k, i), d.at(k, j));
    for (int k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
  }
  void row_addmul(int dst, int src, const Int& c) {
    for (int k = 0; k < d.cols; ++k) d.at(dst, k) += c * d.at(src, k);
    for (int k = 0; k < u.cols; ++k) u.at(dst, k) += c * u.at(src, k);
  }
  void col_addmul(int dst, int src, const Int& c) {
    for (int k = 0; k < d.rows; ++k) d.at(k, dst) += c * d.at(k, src);
    for (int k = 0; k < v.rows; ++k) v.at(k, dst) += c * v.at(k, src);
  }
  void row_negate(int i) {
    for (int k = 0; k < d.cols; ++k) d.at(i, k) = -d.at(i, k);
    for (int k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& a) {
  SmithWork w;
  w.d = a;
  w.u = IntMat::identity(a.rows);
  w.v = IntMat::identity(a.cols);
  int n = std::min(a.rows, a.cols);

  for (int t = 0; t < n; ++t) {
    // Find the nonzero entry of smallest absolute value in the trailing
    // block; first occurrence in row-major order breaks ties, so the
    // decomposition is deterministic.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < a.rows; ++i)
      for (int j = t; j < a.cols; ++j) {
        if (w.d.at(i, j) == 0) continue;
        Int v = abs(w.d.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < a.rows; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);  // truncated division
        w.row_addmul(i, t, -q);
        if (w.d.at(i, t) != 0) {
          w.row_swap(t, i);  // remainder is strictly smaller; iterate
          dirty = true;
        }
      }
      for (int j = t + 1; j < a.cols; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.col_addmul(j, t, -q);
        if (w.d.at(t, j) != 0) {
          w.col_swap(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Pivot divides everything in its row and column; enforce the
      // divisibility chain against the rest of the block.
      bool fixed = true;
      for (int i = t + 1; i < a.rows && fixed; ++i)
        for (int j = t + 1; j < a.cols && fixed; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.d.at(t, t) < 0) w.row_negate(t);
  }

  return SmithDecomposition{w.u, w.d, w.v};
}

std::vector<Int> smith_invariants(const IntMat& a) {
  SmithDecomposition s = smith_normal_form(a);
  std::vector<Int> out;
  int n = std::min(a.rows, a.cols);
  for (int i = 0; i < n; ++i)
    if (s.d.at(i, i) != 0) out.push_back(s.d.at(i, i));
  return out;
}

int rank(const IntMat& a) { return int(smith_invariants(a).size()); }

std::vector<VecZ> kernel_basis(const IntMat& a) {
  SmithDecomposition s = smith_normal_form(a);
  int r = 0;
  int n = std::min(a.rows, a.cols);
  for (int i = 0; i < n; ++i)
    if (s.d.at(i, i) != 0) ++r;
  std::vector<VecZ> out;
  for (int j = r; j < a.cols; ++j) out.push_back(s.v.col(j));
  return out;
}

bool cokernel_is_free(const IntMat& a) {
  for (const auto& d : smith_invariants(a))
    if (d != 1) return false;
  return true;
}

IntMat row_hnf(const IntMat& a) {
  IntMat m = a;
  int pivot_row = 0;
  for (int j = 0; j < m.cols && pivot_row < m.rows; ++j) {
    // Reduce column j below pivot_row to a single nonneg value by gcd steps.
    for (;;) {
      int p = -1;
      Int best = 0;
      for (int i = pivot_row; i < m.rows; ++i) {
        if (m.at(i, j) == 0) continue;
        Int v = abs(m.at(i, j));
        if (p < 0 || v < best) {
          best = v;
          p = i;
        }
      }
      if (p < 0) break;
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(pivot_row, k), m.at(p, k));
      if (m.at(pivot_row, j) < 0)
        for (int k = 0; k < m.cols; ++k) m.at(pivot_row, k) = -m.at(pivot_row, k);
      bool done = true;
      for (int i = pivot_row + 1; i < m.rows; ++i) {
        if (m.at(i, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(),
                   m.at(pivot_row, j).get_mpz_t());
        for (int k = 0; k < m.cols; ++k) m.at(i, k) -= q * m.at(pivot_row, k);
        if (m.at(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (m.at(pivot_row, j) == 0) continue;
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < pivot_row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_mpz_t(),
                 m.at(pivot_row, j).get_mpz_t());
      if (q != 0)
        for (int k = 0; k < m.cols; ++k) m.at(i, k) -= q * m.at(pivot_row, k);
    }
    ++pivot_row;
  }
  IntMat out(pivot_row, m.cols);
  for (int i = 0; i < pivot_row; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

QuotientLattice quotient_by_sublattice(int rank_, const std::vector<VecZ>& gens) {
  std::vector<VecZ> nz;
  for (const auto& g : gens) {
    assert(int(g.size()) == rank_);
    if (!is_zero(g)) nz.push_back(g);
  }
  if (nz.empty()) {
    QuotientLattice q;
    q.ambient_rank = rank_;
    q.projection = IntMat::identity(rank_);
    return q;
  }
  // Columns span the sublattice; U*W*V = D puts the saturation in the first
  // rho columns of U^{-1}, so the trailing rows of U project along it.
  IntMat w = IntMat::from_cols(nz);
  SmithDecomposition s = smith_normal_form(w);
  int rho = 0;
  int n = std::min(w.rows, w.cols);
  for (int i = 0; i < n; ++i)
    if (s.d.at(i, i) != 0) ++rho;
  IntMat low(rank_ - rho, rank_);
  for (int i = 0; i < rank_ - rho; ++i)
    for (int j = 0; j < rank_; ++j) low.at(i, j) = s.u.at(rho + i, j);
  QuotientLattice q;
  q.ambient_rank = rank_;
  q.projection = row_hnf(low);
  return q;
}

QuotientLattice quotient_by_vector(int rank_, const VecZ& w) {
  return quotient_by_sublattice(rank_, {w});
}

}  // namespace tropgw::lattice
