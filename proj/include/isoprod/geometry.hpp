#pragma once

// Cylinder candidates D_p(r0) x N, the T_lambda / F_beta Jacobian bounds,
// and the O(m)-invariant stability criterion for cylinder boundaries.

#include <utility>

namespace isoprod {

struct CylinderSpec {
    int m = 0, n = 0;
    double r0 = 0.0;   // cap radius on the unit round S^m, in (0, pi)
    double vn = 0.0;   // V_N
    double lam = 1.0;
};

void validate_cylinder(const CylinderSpec& spec);

// V(B^lam(R)) = V(D(r0)) * V_N; lambda-independent by construction of G_lam.
double cylinder_volume(const CylinderSpec& spec);

// A(boundary) = lam^{-n} V_N omega_{m-1} sin^{m-1}(r0); equals f_upper at
// the cylinder's volume when phi is the sphere profile.
double cylinder_boundary_area(const CylinderSpec& spec);

struct AreaBounds {
    double lower = 0.0;
    double upper = 0.0;
    double exact_lateral = 0.0;  // lam^{-n} * area, the a = 0 case
};

// lam^{-n} A <= H(T_lam(Sigma)) <= lam^m A for lam >= 1; reversed bounds
// for lam < 1. exact_lateral applies when the normal is tangent to N
// (cylinder lateral boundaries).
AreaBounds tlambda_area_bounds(double lam, int m, int n, double area);

enum class FBetaQuantity { volume, area };

// F_beta scaling: volumes scale exactly by beta^m; areas lie between
// beta^{m-1} and beta^m times the original (reversed for beta < 1). The
// domain restriction for beta >= 1 is the caller's responsibility.
std::pair<double, double> fbeta_bounds(double beta, int m, FBetaQuantity q,
                                       double value);

struct StabilityReport {
    double mu1 = 0.0;
    double margin = 0.0;            // mu1 lam^{2m} - (m-1) csc^2(r0) / lam^{2n}
    double threshold_lambda = 0.0;  // ((m-1) csc^2(r0) / mu1)^{1/(2(m+n))}
    bool strictly_stable = false;   // lam > threshold_lambda
};

// Reduced second-variation margin for the O(m)-invariant perturbations of a
// cylinder boundary; strict stability iff lam^{2(m+n)} > (m-1) csc^2(r0)/mu1.
StabilityReport stability_report(const CylinderSpec& spec, double mu1);

struct Mu1Estimate {
    double mu1 = 0.0;
    double error_estimate = 0.0;  // |mu1(res) - mu1(res/2)|
    int resolution = 0;
};

// First positive Laplace eigenvalue of the round n-sphere of given radius.
// Zonal reduction: P1 finite elements for -(sin^{n-1} u')' = mu sin^{n-1} u
// on (0, pi), dense generalized eigensolve on `resolution` intervals.
Mu1Estimate mu1_round_sphere(int dim, double radius, int resolution);

// First positive eigenvalue of the flat d-torus of side L: periodic finite
// differences, smallest positive eigenvalue of the d-dimensional stencil.
Mu1Estimate mu1_flat_torus(int dim, double side, int resolution);

}  // namespace isoprod
