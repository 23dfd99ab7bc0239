#pragma once

#include "detmax/matrix.hpp"
#include "detmax/rng.hpp"

namespace detmax {

// Ryser inclusion-exclusion, 2^n terms with Gray-code row-sum updates.
// Serial reference; kept as the ground truth the parallel kernel is
// tested against.
double permanent_ryser_serial(const Matrix& m);

// Same formula, subset range split across OpenMP threads; each thread
// seeds its chunk's row sums directly from the chunk's first Gray code.
double permanent_ryser_omp(const Matrix& m);

// Dispatches to the OpenMP kernel for orders where the 2^n sum dominates.
// Order capped at 20.
double permanent(const Matrix& m);

// Full n! expansion; only sensible for n <= 9. Test oracle.
double permanent_naive(const Matrix& m);

// Preconditions (i)-(iii) of the near-diagonal permanent bound:
//   (i)   a_ii > 0
//   (ii)  0 <= a_ij <= 2 f(i-j) / prod_{t=j+1}^{i-1} a_tt      (i > j)
//   (iii) 0 <= a_ij <= 2 f(l-j+i) prod_{t=i}^{j} a_tt / f(l)   (i < j)
// When they hold, perm(A) <= (1 + 0.05/l) * prod a_ii.
struct PermBoundResult {
  bool preconditions_met = false;
  bool bound_holds = false;
  double perm = 0.0;
  double diag_product = 0.0;
  double bound = 0.0;
  // vacuous truth when preconditions are unmet
  bool ok() const { return !preconditions_met || bound_holds; }
};
PermBoundResult permanent_bound_check(const Matrix& m);

// Random matrix satisfying (i)-(iii): free diagonal, off-diagonal entries
// uniform below their (clipped) caps. Clipping keeps Ryser's alternating
// sum away from catastrophic cancellation; clipped entries still satisfy
// the preconditions.
Matrix sample_perm_bound_matrix(Rng& rng, int order);

}  // namespace detmax
