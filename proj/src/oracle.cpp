#include "isoprod/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "isoprod/quadrature.hpp"
#include "isoprod/sphere_cap.hpp"
#include "path_dp.hpp"

namespace isoprod {

double brute_force_min(const StripConfig& cfg, double v, GridSize grid) {
    if (grid.nx > 7 || grid.ny > 7 || grid.nx < 1 || grid.ny < 1)
        throw std::invalid_argument("brute_force_min: grid above enumeration cap");
    const detail::StripWeights w = detail::make_weights(cfg, grid);
    const std::int64_t total = std::int64_t(grid.nx) * grid.ny;
    std::int64_t target = std::llround(v / w.cell);
    target = std::clamp<std::int64_t>(target, 0, total);
    return detail::enumerate_min(w, target);
}

OracleReport fuzz_symmetrization(const StripConfig& cfg, int trials,
                                 std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("fuzz: trials < 1");
    OracleReport rep;
    rep.case_count = trials;
    double worst = -1e300;
    const double densities[3] = {0.2, 0.5, 0.8};
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (t + 1));
        std::uniform_int_distribution<int> side(2, 16);
        GridRegion reg;
        reg.nx = side(rng);
        reg.ny = side(rng);
        reg.cell.assign(std::size_t(reg.nx) * reg.ny, 0);
        const double density = densities[rng() % 3];
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (auto& c : reg.cell) c = (u(rng) < density) ? 1 : 0;

        const double before = discrete_perimeter(cfg, reg);
        const GridRegion sym = steiner_symmetrize(cfg, reg);
        const double after = discrete_perimeter(cfg, sym);
        const bool area_ok = reg.count() == sym.count();
        const double margin = after - before;  // must stay <= 0 up to roundoff
        const double tol = 1e-12 * std::max(1.0, before);
        if (margin > worst || !area_ok) {
            worst = std::max(worst, margin);
            if (margin > tol || !area_ok) {
                nlohmann::json j;
                j["trial"] = t;
                j["nx"] = reg.nx;
                j["ny"] = reg.ny;
                j["density"] = density;
                j["perimeter_before"] = before;
                j["perimeter_after"] = after;
                j["area_preserved"] = area_ok;
                rep.worst_case_input = j.dump();
                rep.passed = false;
            }
        }
    }
    rep.max_abs_deviation = std::max(0.0, worst);
    return rep;
}

OracleReport quadrature_crosscheck(int m, int samples) {
    if (m < 2) throw std::invalid_argument("quadrature_crosscheck: m < 2");
    if (samples < 3) throw std::invalid_argument("quadrature_crosscheck: samples < 3");
    OracleReport rep;
    rep.case_count = samples;
    const double om = unit_sphere_volume(m - 1);
    const auto integrand = [m](double t) { return std::pow(std::sin(t), m - 1); };
    double worst = 0.0;
    double worst_r = 0.0;
    for (int k = 1; k <= samples; ++k) {
        const double r = M_PI * k / samples;
        const double simpson = om * adaptive_simpson(integrand, 0.0, r, 1e-12);
        // independent rule at double resolution: composite 16-point
        // Gauss-Legendre over twice as many panels as Simpson's base split
        double gauss = 0.0;
        const int panels = 16;
        for (int p = 0; p < panels; ++p)
            gauss += gauss_legendre(integrand, r * p / panels,
                                    r * (p + 1) / panels, 16);
        gauss *= om;
        const double dev = std::abs(simpson - gauss);
        if (dev > worst) {
            worst = dev;
            worst_r = r;
        }
    }
    rep.max_abs_deviation = worst;
    nlohmann::json j;
    j["m"] = m;
    j["worst_radius"] = worst_r;
    rep.worst_case_input = j.dump();
    rep.passed = worst < 1e-10 * std::max(1.0, sphere_total_volume(m));
    return rep;
}

}  // namespace isoprod
