#pragma once

#include <functional>

namespace isoprod {

// Adaptive composite Simpson with per-call relative tolerance.
// The integrand is assumed smooth; recursion is depth-limited.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-12);

// Fixed-order Gauss-Legendre on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int points);

// 4-point Gauss-Legendre nodes/weights on [0, 1], used by segment quadrature.
struct Gauss4 {
    static constexpr double node[4] = {
        0.5 - 0.8611363115940526 / 2.0, 0.5 - 0.3399810435848563 / 2.0,
        0.5 + 0.3399810435848563 / 2.0, 0.5 + 0.8611363115940526 / 2.0};
    static constexpr double weight[4] = {
        0.3478548451374538 / 2.0, 0.6521451548625461 / 2.0,
        0.6521451548625461 / 2.0, 0.3478548451374538 / 2.0};
};

}  // namespace isoprod
