#include "isoprod/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace isoprod {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol) {
    if (!(rel_tol > 0)) throw std::invalid_argument("adaptive_simpson: tol <= 0");
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    // absolute tolerance pegged to the first estimate's scale
    const double tol = rel_tol * std::max(std::abs(whole), 1e-300);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int points) {
    // nodes/weights on [-1, 1]
    static const double x8[] = {0.1834346424956498, 0.5255324099163290,
                                0.7966664774136267, 0.9602898564975363};
    static const double w8[] = {0.3626837833783620, 0.3137066458778873,
                                0.2223810344533745, 0.1012285362903763};
    static const double x16[] = {0.0950125098376374, 0.2816035507792589,
                                 0.4580167776572274, 0.6178762444026438,
                                 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double w16[] = {0.1894506104550685, 0.1826034150449236,
                                 0.1691565193950025, 0.1495959888165767,
                                 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    if (points <= 8) {
        for (int i = 0; i < 4; ++i)
            s += w8[i] * (f(c - h * x8[i]) + f(c + h * x8[i]));
    } else {
        for (int i = 0; i < 8; ++i)
            s += w16[i] * (f(c - h * x16[i]) + f(c + h * x16[i]));
    }
    return s * h;
}

}  // namespace isoprod
