#pragma once

#include <array>

#include "gtp/problem.hpp"

namespace gtp {

// q2 = -(lambda - 2 + 1/lambda) / (2 (1/lambda + 2 + lambda)), from the
// z^1 w^0 error of the main equation.  Real for |lambda| = 1.
Coeff init_q2(const ProblemParams& params);

// Coefficient with which the unknown at grid position (j,k) enters the main
// equation: the box formula on j = k+1, the circle formula elsewhere (it
// vanishes identically on k = j+1).
Coeff linear_denominator(int j, int k, const ProblemParams& params);

// Same, but raising resonance_error when the magnitude falls below the
// threshold; appends near-resonant magnitudes to the log.
Coeff checked_denominator(int j, int k, const ProblemParams& params,
                          std::vector<ResonanceLogEntry>* log);

// Step-by-step solution of the main equation through total order max_order.
// On a resonance the partial solution is retained and `abort` set.
GtpSolution solve(const ProblemParams& params);

// (phi_20, phi_11, phi_02) from the order-2 closed formulas.
std::array<Coeff, 3> quadratic_phi_closed_form(const ProblemParams& params);

// K = phi_20 cos b0 + phi_11 + phi_02 cos b0; nonzero exactly when q3 is.
Coeff key_combination(const ProblemParams& params);

// z^j w^k coefficient of the main equation with the solution substituted,
// assembled independently of the solver (generic series composition).
Coeff residual(const GtpSolution& sol, const ProblemParams& params, int j, int k);

} // namespace gtp
