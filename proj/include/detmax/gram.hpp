#pragma once

#include <limits>
#include <vector>

#include "detmax/matrix.hpp"

namespace detmax {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// M = sum_{i in S} v_i v_i^T for an index multiset S, together with the
// cached inverse and log-determinant. The inverse induces the bilinear form
// <u,v>_S = u^T M^-1 v that drives all exchange-graph weights.
//
// Value type: copy freely, nothing here aliases shared state.
struct GramState {
  int dim = 0;
  std::vector<int> members;  // sorted index multiset
  Matrix gram;
  Matrix inv;                // valid iff !singular
  double log_det = kNegInf;
  bool singular = true;
  double eps_coeff = 1e-9;
  int swaps_since_factor = 0;

  bool nonsingular() const { return !singular; }
};

// Builds the Gram state from scratch (LDL^T). A pivot below
// eps_coeff * trace/d marks the state singular: log_det = -inf, no inverse.
GramState gram_build(const std::vector<Vec>& vectors, const std::vector<int>& members,
                     double eps_coeff = 1e-9);

// <u,v>_S = u^T M^-1 v. Throws std::domain_error on singular states.
double inner_s(const GramState& state, const Vec& u, const Vec& v);

// <u,u>_S clamped at zero.
double norm_s_sq(const GramState& state, const Vec& u);

// det(M - vv^T + uu^T) / det(M) = <u,v>_S^2 + (1+|u|_S^2)(1-|v|_S^2),
// clamped at zero against ~1e-9 negative roundoff.
double swap_ratio(const GramState& state, const Vec& u, const Vec& v);

// det(M + sum_add uu^T - sum_remove vv^T) / det(M) via the 2l x 2l block
// determinant  det(I_2l + [[X'WX, -X'WY], [Y'WX, -Y'WY]])  with W = M^-1.
double det_update_ratio(const GramState& state, const std::vector<Vec>& add,
                        const std::vector<Vec>& remove);

// Rank-two inverse update for S - v + u (Woodbury). Refactors from scratch
// every 50 swaps or when the inv*gram drift check exceeds 1e-6.
// u_index/v_index, when >= 0, update the member multiset.
GramState woodbury_swap(const GramState& state, const Vec& u, const Vec& v,
                        int u_index = -1, int v_index = -1);

// sum over d-subsets Y of members of det(V_Y)^2; equals det(sum vv^T).
double cauchy_binet(const std::vector<Vec>& vectors, const std::vector<int>& members);

}  // namespace detmax
