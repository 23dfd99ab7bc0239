#pragma once

namespace detmax {

// log f(i) for the cycle-violation threshold: f(1) = 2, f(i) = (i!)^11.
// Evaluated through lgamma; f(2d) overflows doubles well before d hits the
// supported range, so the whole codebase stays in the log domain.
double log_f(int i);

}  // namespace detmax
