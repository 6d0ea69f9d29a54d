#ifndef TROPGW_LATTICE_HPP
#define TROPGW_LATTICE_HPP

#include <vector>

#include "tropgw/numeric.hpp"

namespace tropgw::lattice {

// Dense integer matrix, row-major. All arithmetic is arbitrary precision:
// Smith pivots overflow machine words even on small inputs.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Int(0)) {}

  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<VecZ>& rows);
  static IntMat from_cols(const std::vector<VecZ>& cols);

  VecZ row(int i) const;
  VecZ col(int j) const;

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

IntMat mul(const IntMat& x, const IntMat& y);
VecZ mul(const IntMat& x, const VecZ& v);
IntMat transpose(const IntMat& x);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& x);

// U*A*V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
  IntMat u;  // rows x rows
  IntMat d;  // rows x cols
  IntMat v;  // cols x cols
};

SmithDecomposition smith_normal_form(const IntMat& a);

// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Int> smith_invariants(const IntMat& a);

int rank(const IntMat& a);

// Basis of the saturated kernel lattice {v : A v = 0}. Empty iff injective.
std::vector<VecZ> kernel_basis(const IntMat& a);

// True iff coker(A) has no torsion, i.e. every nonzero Smith entry is 1.
bool cokernel_is_free(const IntMat& a);

// Row-style Hermite normal form: unique echelon representative of the
// left-unimodular orbit. Pivots positive, entries above pivots reduced,
// zero rows dropped.
IntMat row_hnf(const IntMat& a);

// Surjection Z^ambient -> Z^quotient with saturated kernel.
struct QuotientLattice {
  int ambient_rank = 0;
  IntMat projection;  // quotient_rank x ambient_rank, Smith diagonal all 1

  int quotient_rank() const { return projection.rows; }
  VecZ apply(const VecZ& v) const { return mul(projection, v); }
};

// Quotient of Z^rank by the saturation of the span of the given vectors.
// The projection is canonical: row HNF of any complement, so independent
// of the order of the generators.
QuotientLattice quotient_by_sublattice(int rank, const std::vector<VecZ>& gens);

QuotientLattice quotient_by_vector(int rank, const VecZ& w);

}  // namespace tropgw::lattice

#endif
