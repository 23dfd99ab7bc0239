#include "detmax/gram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace detmax {

namespace {

void require_nonsingular(const GramState& state) {
  if (state.singular) throw std::domain_error("gram state is singular");
}

void require_dim(const GramState& state, const Vec& v) {
  if (static_cast<int>(v.size()) != state.dim)
    throw std::invalid_argument("vector dimension mismatch");
}

// M^-1 * v
Vec apply_inv(const GramState& state, const Vec& v) {
  Vec out(state.dim, 0.0);
  for (int i = 0; i < state.dim; ++i) {
    double s = 0.0;
    for (int j = 0; j < state.dim; ++j) s += state.inv(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

GramState gram_build(const std::vector<Vec>& vectors, const std::vector<int>& members,
                     double eps_coeff) {
  if (vectors.empty()) throw std::invalid_argument("gram_build: no vectors");
  const int d = static_cast<int>(vectors[0].size());
  for (const Vec& v : vectors)
    if (static_cast<int>(v.size()) != d)
      throw std::invalid_argument("gram_build: vectors of unequal dimension");

  GramState state;
  state.dim = d;
  state.members = members;
  std::sort(state.members.begin(), state.members.end());
  state.eps_coeff = eps_coeff;
  state.gram = Matrix(d, d);
  for (int idx : members) {
    if (idx < 0 || idx >= static_cast<int>(vectors.size()))
      throw std::invalid_argument("gram_build: member index out of range");
    const Vec& v = vectors[idx];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) state.gram(i, j) += v[i] * v[j];
  }

  const Ldlt f = ldlt_factor(state.gram, eps_rank_for(state.gram, eps_coeff));
  if (f.singular) {
    state.singular = true;
    state.log_det = kNegInf;
  } else {
    state.singular = false;
    state.log_det = f.log_det;
    state.inv = f.inverse;
  }
  return state;
}

double inner_s(const GramState& state, const Vec& u, const Vec& v) {
  require_nonsingular(state);
  require_dim(state, u);
  require_dim(state, v);
  double s = 0.0;
  for (int i = 0; i < state.dim; ++i)
    for (int j = 0; j < state.dim; ++j) s += u[i] * state.inv(i, j) * v[j];
  return s;
}

double norm_s_sq(const GramState& state, const Vec& u) {
  return std::max(0.0, inner_s(state, u, u));
}

double swap_ratio(const GramState& state, const Vec& u, const Vec& v) {
  require_nonsingular(state);
  const double ip = inner_s(state, u, v);
  const double nu = norm_s_sq(state, u);
  const double nv = inner_s(state, v, v);
  const double ratio = ip * ip + (1.0 + nu) * (1.0 - nv);
  return std::max(0.0, ratio);
}

double det_update_ratio(const GramState& state, const std::vector<Vec>& add,
                        const std::vector<Vec>& remove) {
  require_nonsingular(state);
  if (add.size() != remove.size())
    throw std::invalid_argument("det_update_ratio: |add| != |remove|");
  const int l = static_cast<int>(add.size());
  if (l == 0) return 1.0;

  std::vector<Vec> winv_add(l), winv_rem(l);
  for (int i = 0; i < l; ++i) {
    require_dim(state, add[i]);
    require_dim(state, remove[i]);
    winv_add[i] = apply_inv(state, add[i]);
    winv_rem[i] = apply_inv(state, remove[i]);
  }

  Matrix block(2 * l, 2 * l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      block(i, j) = dot(add[i], winv_add[j]);
      block(i, l + j) = -dot(add[i], winv_rem[j]);
      block(l + i, j) = dot(remove[i], winv_add[j]);
      block(l + i, l + j) = -dot(remove[i], winv_rem[j]);
    }
  }
  for (int i = 0; i < 2 * l; ++i) block(i, i) += 1.0;
  return det_lu(block);
}

GramState woodbury_swap(const GramState& state, const Vec& u, const Vec& v,
                        int u_index, int v_index) {
  require_nonsingular(state);
  require_dim(state, u);
  require_dim(state, v);

  const double ratio = swap_ratio(state, u, v);
  const double eps = state.eps_coeff;
  if (!(ratio > eps))
    throw std::domain_error("woodbury_swap: swap makes the gram singular");

  GramState next = state;
  const int d = state.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) next.gram(i, j) += u[i] * u[j] - v[i] * v[j];

  if (u_index >= 0 || v_index >= 0) {
    if (v_index >= 0) {
      auto it = std::find(next.members.begin(), next.members.end(), v_index);
      if (it == next.members.end())
        throw std::invalid_argument("woodbury_swap: v_index not a member");
      next.members.erase(it);
    }
    if (u_index >= 0) next.members.push_back(u_index);
    std::sort(next.members.begin(), next.members.end());
  }

  // inv update: M^-1 - M^-1 [u -v] K^-1 [u v]^T M^-1 with
  // K = [[1+|u|^2, -<u,v>], [<u,v>, 1-|v|^2]], det K = swap ratio.
  const double ip = inner_s(state, u, v);
  const double nu = norm_s_sq(state, u);
  const double nv = inner_s(state, v, v);
  const double det_k = ip * ip + (1.0 + nu) * (1.0 - nv);
  const double k00 = (1.0 - nv) / det_k;   // K^-1 entries
  const double k01 = ip / det_k;
  const double k10 = -ip / det_k;
  const double k11 = (1.0 + nu) / det_k;

  const Vec wu = apply_inv(state, u);
  const Vec wv = apply_inv(state, v);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      // rows of [u -v]^T-side products: left column vectors wu, -wv
      const double corr = wu[i] * (k00 * wu[j] + k01 * wv[j]) -
                          wv[i] * (k10 * wu[j] + k11 * wv[j]);
      next.inv(i, j) = state.inv(i, j) - corr;
    }
  }
  next.log_det = state.log_det + std::log(ratio);
  next.swaps_since_factor = state.swaps_since_factor + 1;

  if (next.swaps_since_factor >= 50 || identity_drift(next.inv, next.gram) > 1e-6) {
    const Ldlt f = ldlt_factor(next.gram, eps_rank_for(next.gram, next.eps_coeff));
    if (f.singular) throw std::domain_error("woodbury_swap: refactor found singular gram");
    next.inv = f.inverse;
    next.log_det = f.log_det;
    next.swaps_since_factor = 0;
  }
  return next;
}

double cauchy_binet(const std::vector<Vec>& vectors, const std::vector<int>& members) {
  if (vectors.empty()) throw std::invalid_argument("cauchy_binet: no vectors");
  const int d = static_cast<int>(vectors[0].size());
  const int m = static_cast<int>(members.size());
  if (m < d) return 0.0;

  double total = 0.0;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  while (true) {
    Matrix sq(d, d);
    for (int c = 0; c < d; ++c) {
      const Vec& v = vectors[members[pick[c]]];
      for (int r = 0; r < d; ++r) sq(r, c) = v[r];
    }
    const double minor = det_lu(sq);
    total += minor * minor;

    int pos = d - 1;
    while (pos >= 0 && pick[pos] == m - d + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
  }
  return total;
}

}  // namespace detmax
