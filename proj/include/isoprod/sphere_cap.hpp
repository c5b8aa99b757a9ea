#pragma once

// Geodesic caps of the unit round m-sphere: exact volume/area formulas via
// the sin-power antiderivative recurrence. These are the closed-form route;
// sampled profiles are built independently by adaptive quadrature and the
// two routes are cross-checked in the oracle module.

#include <cmath>
#include <stdexcept>

namespace isoprod {

// Riemannian volume of the unit round k-sphere (k >= 0).
// omega_0 = 2 (two points), omega_1 = 2*pi, omega_k = 2*pi/(k-1) * omega_{k-2}.
inline double unit_sphere_volume(int k) {
    if (k < 0) throw std::invalid_argument("unit_sphere_volume: k < 0");
    double even = 2.0;           // omega_0
    double odd = 2.0 * M_PI;     // omega_1
    if (k == 0) return even;
    if (k == 1) return odd;
    double v = (k % 2 == 0) ? even : odd;
    for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2)
        v *= 2.0 * M_PI / static_cast<double>(j - 1);
    return v;
}

// S_k(r) = integral_0^r sin^k(t) dt, exact recurrence.
inline double sin_power_integral(int k, double r) {
    if (k < 0) throw std::invalid_argument("sin_power_integral: k < 0");
    if (k == 0) return r;
    const double s = std::sin(r), c = std::cos(r);
    if (k == 1) return 1.0 - c;
    // iterate upward: S_j = (-sin^{j-1} r cos r + (j-1) S_{j-2}) / j
    const bool even = (k % 2 == 0);
    double prev = even ? r : (1.0 - c);   // S_0 or S_1
    double sp = even ? s : s * s;         // sin^{j-1} at the first j below
    for (int j = even ? 2 : 3; j <= k; j += 2) {
        prev = (-sp * c + (j - 1) * prev) / j;
        sp *= s * s;
    }
    return prev;
}

// Volume of a geodesic cap of radius r in (S^m, g0).
inline double sphere_cap_volume(int m, double r) {
    if (m < 2) throw std::invalid_argument("sphere_cap_volume: m < 2");
    return unit_sphere_volume(m - 1) * sin_power_integral(m - 1, r);
}

// Boundary area of that cap.
inline double sphere_cap_area(int m, double r) {
    if (m < 2) throw std::invalid_argument("sphere_cap_area: m < 2");
    return unit_sphere_volume(m - 1) * std::pow(std::sin(r), m - 1);
}

// Total volume of (S^m, g0).
inline double sphere_total_volume(int m) { return sphere_cap_volume(m, M_PI); }

// Invert v = sphere_cap_volume(m, r) for r in [0, pi]. Monotone; safeguarded
// Newton with bisection fallback, accurate to ~1 ulp of the volume scale.
double sphere_cap_radius(int m, double v);

}  // namespace isoprod
