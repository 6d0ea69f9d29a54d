#ifndef TROPGW_QLIN_HPP
#define TROPGW_QLIN_HPP

#include <optional>
#include <vector>

#include "tropgw/numeric.hpp"

namespace tropgw::qlin {

// Row-major rational matrix with just enough linear algebra for exact
// solving: reduced row echelon form, consistency, kernels.
struct QMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Rat(0)) {}

  Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static QMat from_rows(const std::vector<VecQ>& rows);
  static QMat from_cols(const std::vector<VecQ>& cols);
};

// In-place reduced row echelon form; returns pivot columns in order.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Exact solution of A x = b. If the system is underdetermined the free
// variables are set to zero, which keeps results deterministic.
std::optional<VecQ> solve(const QMat& a, const VecQ& b);

// Basis of the kernel of A.
std::vector<VecQ> kernel(const QMat& a);

}  // namespace tropgw::qlin

#endif
