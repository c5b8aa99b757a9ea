#include "isoprod/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isoprod {

const char* to_string(SandwichVerdict v) {
    switch (v) {
        case SandwichVerdict::holds: return "HOLDS";
        case SandwichVerdict::violated_numerically: return "VIOLATED_NUMERICALLY";
        case SandwichVerdict::lambda_below_threshold:
            return "LAMBDA_BELOW_THRESHOLD";
    }
    return "UNKNOWN";
}

double f_upper(const StripConfig& cfg, double v) {
    if (!(v > 0.0 && v < cfg.total_area()))
        throw std::invalid_argument("f_upper: v outside (0, VM*VN)");
    return std::pow(cfg.lam, -cfg.n) * cfg.vn * cfg.phi.eval(v / cfg.vn);
}

double lambda0_threshold(const StripConfig& cfg, double v0, double alpha) {
    if (!(alpha > 0.75 && alpha < 1.0))
        throw std::invalid_argument("lambda0_threshold: alpha outside (3/4, 1)");
    if (!(v0 > 0.0 && v0 < cfg.total_area()))
        throw std::invalid_argument("lambda0_threshold: v0 outside (0, VM*VN)");
    // symmetry reduction to the first half
    const double vr = std::min(v0, cfg.total_area() - v0);
    const double t0 = vr / cfg.vn;
    const double phi_t0 = cfg.phi.eval(t0);
    const double kappa_case1 = chord_slope(cfg.psi, alpha * cfg.vn);
    const double kappa_case2b = chord_slope(cfg.psi, (1.0 - alpha) * cfg.vn);
    const double q = (1.0 - alpha) * (1.0 - alpha) * t0;
    const double pow1 = phi_t0 / (q * kappa_case1);
    const double pow2 = phi_t0 / (q * kappa_case2b);
    return std::pow(std::max(pow1, pow2), 1.0 / (cfg.m + cfg.n));
}

SandwichResult sandwich_check(const StripConfig& cfg, double v0, double alpha,
                              GridSize grid) {
    SandwichResult r;
    r.v0 = v0;
    r.alpha = alpha;
    r.lam = cfg.lam;
    r.grid = grid;
    r.lambda0 = lambda0_threshold(cfg, v0, alpha);
    r.f_upper = f_upper(cfg, v0);
    r.lower_floor = alpha * alpha * alpha * alpha * r.f_upper;

    const ModelMinimum fine = minimize_perimeter(cfg, v0, grid, false);
    r.model_value = fine.value;
    r.certified_lower = fine.certified_lower;

    // one refinement step toward the coarse side for the slack estimate
    GridSize half{std::max(4, grid.nx / 2), std::max(4, grid.ny / 2)};
    const ModelMinimum coarse = minimize_perimeter(cfg, v0, half, false);
    const double refine_delta = std::abs(fine.value - coarse.value);
    r.grid_slack = (fine.value - fine.certified_lower) + refine_delta;

    if (!(cfg.lam > r.lambda0)) {
        r.verdict = SandwichVerdict::lambda_below_threshold;
    } else if (r.certified_lower >= r.lower_floor - r.grid_slack &&
               r.model_value <= r.f_upper + r.grid_slack) {
        r.verdict = SandwichVerdict::holds;
    } else {
        r.verdict = SandwichVerdict::violated_numerically;
    }
    return r;
}

}  // namespace isoprod
