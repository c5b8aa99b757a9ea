#include "isoprod/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "isoprod/sphere_cap.hpp"

namespace isoprod {

void validate_cylinder(const CylinderSpec& spec) {
    if (spec.m < 2 || spec.n < 2)
        throw std::invalid_argument("cylinder: m, n must be >= 2");
    if (!(spec.r0 > 0.0 && spec.r0 < M_PI))
        throw std::invalid_argument("cylinder: r0 outside (0, pi)");
    if (!(spec.vn > 0.0)) throw std::invalid_argument("cylinder: V_N <= 0");
    if (!(spec.lam > 0.0)) throw std::invalid_argument("cylinder: lam <= 0");
}

double cylinder_volume(const CylinderSpec& spec) {
    validate_cylinder(spec);
    return spec.vn * sphere_cap_volume(spec.m, spec.r0);
}

double cylinder_boundary_area(const CylinderSpec& spec) {
    validate_cylinder(spec);
    return std::pow(spec.lam, -spec.n) * spec.vn *
           sphere_cap_area(spec.m, spec.r0);
}

AreaBounds tlambda_area_bounds(double lam, int m, int n, double area) {
    if (!(lam > 0)) throw std::invalid_argument("tlambda: lam <= 0");
    if (m < 2 || n < 2) throw std::invalid_argument("tlambda: m, n >= 2");
    const double lo = std::pow(lam, -n) * area;
    const double hi = std::pow(lam, m) * area;
    AreaBounds b;
    b.lower = std::min(lo, hi);  // for lam < 1 the inequalities reverse
    b.upper = std::max(lo, hi);
    b.exact_lateral = lo;
    return b;
}

std::pair<double, double> fbeta_bounds(double beta, int m, FBetaQuantity q,
                                       double value) {
    if (!(beta > 0)) throw std::invalid_argument("fbeta: beta <= 0");
    if (m < 2) throw std::invalid_argument("fbeta: m >= 2");
    const double bm = std::pow(beta, m);
    if (q == FBetaQuantity::volume) return {bm * value, bm * value};
    const double bm1 = std::pow(beta, m - 1);
    if (beta >= 1.0) return {bm1 * value, bm * value};
    return {bm * value, bm1 * value};
}

StabilityReport stability_report(const CylinderSpec& spec, double mu1) {
    validate_cylinder(spec);
    if (!(mu1 > 0)) throw std::invalid_argument("stability: mu1 <= 0");
    const double s = std::sin(spec.r0);
    const double csc2 = 1.0 / (s * s);
    StabilityReport r;
    r.mu1 = mu1;
    r.margin = mu1 * std::pow(spec.lam, 2 * spec.m) -
               (spec.m - 1) * csc2 / std::pow(spec.lam, 2 * spec.n);
    r.threshold_lambda =
        std::pow((spec.m - 1) * csc2 / mu1, 1.0 / (2.0 * (spec.m + spec.n)));
    r.strictly_stable = spec.lam > r.threshold_lambda;
    return r;
}

}  // namespace isoprod
