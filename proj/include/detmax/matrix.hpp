#pragma once

#include <vector>

namespace detmax {

using Vec = std::vector<double>;

// Dense row-major matrix. Everything in this project is desk-scale
// (d <= ~50), so no blocking or BLAS.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Matrix identity(int n);
  bool square() const { return rows == cols; }
};

Matrix matmul(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);

// Determinant by LU with partial pivoting. Works on any square matrix.
double det_lu(Matrix m);

// Symmetric LDL^T factorization of a positive semidefinite matrix.
// A pivot at or below eps_rank marks the matrix (numerically) singular.
struct Ldlt {
  bool singular = true;
  double log_det = 0.0;  // sum of log pivots; meaningless when singular
  Matrix inverse;        // valid only when !singular
};
Ldlt ldlt_factor(const Matrix& sym, double eps_rank);

// Scale-invariant rank threshold: eps_coeff * trace / n.
double eps_rank_for(const Matrix& sym, double eps_coeff);

double frobenius_norm(const Matrix& m);

// || inv * m - I ||_F / sqrt(n); used by the inverse-maintenance drift check.
double identity_drift(const Matrix& inv, const Matrix& m);

}  // namespace detmax
