#include "detmax/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace detmax {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
  Matrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const double xv = x(i, k);
      if (xv == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) out(i, j) += xv * y(k, j);
    }
  }
  return out;
}

Matrix transpose(const Matrix& x) {
  Matrix out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out(j, i) = x(i, j);
  return out;
}

double det_lu(Matrix m) {
  if (!m.square()) throw std::invalid_argument("det_lu: not square");
  const int n = m.rows;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const double inv_p = 1.0 / m(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double factor = m(r, col) * inv_p;
      if (factor == 0.0) continue;
      for (int j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

Ldlt ldlt_factor(const Matrix& sym, double eps_rank) {
  if (!sym.square()) throw std::invalid_argument("ldlt_factor: not square");
  const int n = sym.rows;
  Ldlt out;
  Matrix lower = Matrix::identity(n);
  std::vector<double> diag(n, 0.0);

  for (int j = 0; j < n; ++j) {
    double dj = sym(j, j);
    for (int k = 0; k < j; ++k) dj -= lower(j, k) * lower(j, k) * diag[k];
    if (!(dj > eps_rank)) return out;  // singular (or indefinite past tolerance)
    diag[j] = dj;
    for (int i = j + 1; i < n; ++i) {
      double v = sym(i, j);
      for (int k = 0; k < j; ++k) v -= lower(i, k) * lower(j, k) * diag[k];
      lower(i, j) = v / dj;
    }
  }

  out.singular = false;
  out.log_det = 0.0;
  for (int j = 0; j < n; ++j) out.log_det += std::log(diag[j]);

  // inverse = L^-T D^-1 L^-1, one unit column at a time
  out.inverse = Matrix(n, n);
  std::vector<double> y(n);
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < n; ++i) {
      double v = (i == col) ? 1.0 : 0.0;
      for (int k = 0; k < i; ++k) v -= lower(i, k) * y[k];
      y[i] = v;
    }
    for (int i = 0; i < n; ++i) y[i] /= diag[i];
    for (int i = n - 1; i >= 0; --i) {
      double v = y[i];
      for (int k = i + 1; k < n; ++k) v -= lower(k, i) * y[k];
      y[i] = v;
      out.inverse(i, col) = v;
    }
  }
  // symmetrize to kill roundoff skew
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (out.inverse(i, j) + out.inverse(j, i));
      out.inverse(i, j) = v;
      out.inverse(j, i) = v;
    }
  return out;
}

double eps_rank_for(const Matrix& sym, double eps_coeff) {
  double trace = 0.0;
  for (int i = 0; i < sym.rows; ++i) trace += sym(i, i);
  if (trace <= 0.0) return eps_coeff;
  return eps_coeff * trace / sym.rows;
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (double v : m.a) s += v * v;
  return std::sqrt(s);
}

double identity_drift(const Matrix& inv, const Matrix& m) {
  Matrix p = matmul(inv, m);
  for (int i = 0; i < p.rows; ++i) p(i, i) -= 1.0;
  return frobenius_norm(p) / std::sqrt(static_cast<double>(p.rows));
}

}  // namespace detmax
