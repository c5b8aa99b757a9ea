#pragma once

// Sandwich evaluation: the cylinder-candidate upper bound f_{M,lambda},
// the lambda_0 thresholds from the Case 1 / Case 2b chord inequalities, and
// verdicts combining both with the model-strip minimizer.

#include "isoprod/model_strip.hpp"

namespace isoprod {

enum class SandwichVerdict {
    holds,
    violated_numerically,
    lambda_below_threshold,
};

const char* to_string(SandwichVerdict v);

struct SandwichResult {
    double v0 = 0.0;
    double alpha = 0.0;
    double lam = 0.0;
    double lambda0 = 0.0;
    double f_upper = 0.0;
    double lower_floor = 0.0;      // alpha^4 * f_upper
    double model_value = 0.0;
    double certified_lower = 0.0;
    double grid_slack = 0.0;       // (model - certified) + refinement delta
    GridSize grid;
    SandwichVerdict verdict = SandwichVerdict::violated_numerically;
};

// f_{M,lambda}(v) = lam^{-n} V_N I_M(v / V_N); the boundary area of the
// cylinder candidate of volume v.
double f_upper(const StripConfig& cfg, double v);

// Sufficient threshold: for lam above it the proof's excluded cases are
// impossible, so the alpha^4 floor applies. Case 1 uses the chord slope of
// psi at alpha*V_N, Case 2b at (1-alpha)*V_N; v0 above half the total
// volume is first reduced by the symmetry v0 -> VM*VN - v0.
double lambda0_threshold(const StripConfig& cfg, double v0, double alpha);

// Evaluate the sandwich at one (v0, alpha, lambda, grid). The refinement
// delta in grid_slack compares against the half-resolution grid.
SandwichResult sandwich_check(const StripConfig& cfg, double v0, double alpha,
                              GridSize grid);

}  // namespace isoprod
