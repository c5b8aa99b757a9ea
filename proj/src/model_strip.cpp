#include "isoprod/model_strip.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "isoprod/quadrature.hpp"
#include "path_dp.hpp"
#include "threading.hpp"

namespace isoprod {

StripConfig make_strip_config(int m, int n, Profile phi, Profile psi,
                              double lam) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("strip config: m, n must be >= 2");
    if (!(lam > 0)) throw std::invalid_argument("strip config: lam <= 0");
    if (phi.dim != m || psi.dim != n)
        throw std::invalid_argument("strip config: profile dims mismatch m, n");
    validate_profile(phi);
    validate_profile(psi);
    StripConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.vm = phi.total_volume;
    cfg.vn = psi.total_volume;
    cfg.phi = std::move(phi);
    cfg.psi = std::move(psi);
    cfg.lam = lam;
    return cfg;
}

void validate_path(const StripConfig& cfg, const MonotonePath& path) {
    const auto& v = path.vertices;
    if (v.empty()) throw std::invalid_argument("path: empty vertex list");
    const double ex = 1e-9 * std::max(cfg.vm, cfg.vn);
    for (const auto& p : v) {
        if (p[0] < -ex || p[0] > cfg.vm + ex || p[1] < -ex || p[1] > cfg.vn + ex)
            throw std::invalid_argument("path: vertex outside the strip");
    }
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        if (v[k + 1][0] < v[k][0] - ex)
            throw std::invalid_argument("path: x must be nondecreasing");
        if (v[k + 1][1] > v[k][1] + ex)
            throw std::invalid_argument("path: y must be nonincreasing");
    }
    if (v.size() == 1) return;  // degenerate point, empty boundary
    const auto& a = v.front();
    const auto& b = v.back();
    if (!(a[0] <= ex || a[1] >= cfg.vn - ex))
        throw std::invalid_argument("path: must start on the x=0 or y=V_N side");
    if (!(b[1] <= ex || b[0] >= cfg.vm - ex))
        throw std::invalid_argument("path: must end on the y=0 or x=V_M side");
}

namespace {

enum class Integrand { full, phi_only, psi_only };

double segment_integral(const StripConfig& cfg, double am, double bn,
                        double x0, double y0, double x1, double y1,
                        Integrand kind) {
    const double dx = x1 - x0;
    const double dy = y0 - y1;  // >= 0 along a monotone path
    if (dx == 0.0 && dy == 0.0) return 0.0;
    if (kind == Integrand::phi_only) {
        if (dy == 0.0) return 0.0;
        if (dx == 0.0) return bn * cfg.phi.eval(x0) * dy;
        double s = 0.0;
        for (int q = 0; q < 4; ++q) {
            const double t = Gauss4::node[q];
            s += Gauss4::weight[q] * cfg.phi.eval(x0 + t * dx);
        }
        return bn * s * dy;
    }
    if (kind == Integrand::psi_only) {
        if (dx == 0.0) return 0.0;
        if (dy == 0.0) return am * cfg.psi.eval(y0) * dx;
        double s = 0.0;
        for (int q = 0; q < 4; ++q) {
            const double t = Gauss4::node[q];
            s += Gauss4::weight[q] * cfg.psi.eval(y0 - t * dy);
        }
        return am * s * dx;
    }
    if (dx == 0.0) return bn * cfg.phi.eval(x0) * dy;
    if (dy == 0.0) return am * cfg.psi.eval(y0) * dx;
    double s = 0.0;
    for (int q = 0; q < 4; ++q) {
        const double t = Gauss4::node[q];
        const double fx = am * cfg.psi.eval(y0 - t * dy) * dx;
        const double fy = bn * cfg.phi.eval(x0 + t * dx) * dy;
        s += Gauss4::weight[q] * std::sqrt(fx * fx + fy * fy);
    }
    return s;
}

double path_integral(const StripConfig& cfg, const MonotonePath& path,
                     Integrand kind) {
    validate_path(cfg, path);
    const double am = std::pow(cfg.lam, cfg.m);
    const double bn = std::pow(cfg.lam, -cfg.n);
    double total = 0.0;
    const auto& v = path.vertices;
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        total += segment_integral(cfg, am, bn, v[k][0], v[k][1], v[k + 1][0],
                                  v[k + 1][1], kind);
    return total;
}

}  // namespace

double rescaled_perimeter(const StripConfig& cfg, const MonotonePath& path) {
    return path_integral(cfg, path, Integrand::full);
}

double perimeter_phi_term(const StripConfig& cfg, const MonotonePath& path) {
    return path_integral(cfg, path, Integrand::phi_only);
}

double perimeter_psi_term(const StripConfig& cfg, const MonotonePath& path) {
    return path_integral(cfg, path, Integrand::psi_only);
}

double enclosed_area(const StripConfig& cfg, const MonotonePath& path) {
    validate_path(cfg, path);
    const auto& v = path.vertices;
    // full columns to the left of the start, then trapezoids under the path
    double area = v.front()[0] * v.front()[1];
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        area += (v[k + 1][0] - v[k][0]) * 0.5 * (v[k][1] + v[k + 1][1]);
    return area;
}

ModelMinimum minimize_perimeter(const StripConfig& cfg, double v,
                                GridSize grid, bool want_path) {
    if (grid.nx < 4 || grid.ny < 4)
        throw std::invalid_argument("minimize_perimeter: grid must be >= 4x4");
    if (!(v > 0.0 && v < cfg.total_area()))
        throw std::invalid_argument("minimize_perimeter: v outside (0, VM*VN)");

    using namespace detail;
    const StripWeights w = make_weights(cfg, grid);
    const std::int64_t total = std::int64_t(grid.nx) * grid.ny;
    std::int64_t target = std::llround(v / w.cell);
    target = std::clamp<std::int64_t>(target, 0, total);

    ModelMinimum out;
    out.grid = grid;
    out.area_cells = target;
    out.area = double(target) * w.cell;

    // Lagrangian pass first: cheap, and its bracket documents the duality
    // gap that generically prevents dual area matching on concave fronts.
    out.lagrangian = lagrangian_bisect(w, target, 48, nullptr);

    const StripWeights wc = make_certified_weights(cfg, grid);
    Steps steps;
    if (exact_dp_state_bytes(w, target) <= 2.5e8) {
        out.value = exact_area_dp(w, target, want_path ? &steps : nullptr);
        out.certified_lower = exact_area_dp(wc, target, nullptr);
    } else {
        // the two kernels are independent; overlap them when threads allow
        std::future<double> certified;
        if (thread_budget() >= 2)
            certified = std::async(std::launch::async, [&] {
                return banded_area_dp(wc, target);
            });
        out.value = want_path ? banded_area_dp_path(w, target, &steps)
                              : banded_area_dp(w, target);
        out.certified_lower =
            certified.valid() ? certified.get() : banded_area_dp(wc, target);
    }
    if (want_path) out.path = steps_to_path(w, steps);
    return out;
}

std::int64_t GridRegion::count() const {
    std::int64_t c = 0;
    for (const auto b : cell) c += b != 0;
    return c;
}

double discrete_perimeter(const StripConfig& cfg, const GridRegion& region) {
    const GridSize grid{region.nx, region.ny};
    const detail::StripWeights w = detail::make_weights(cfg, grid);
    double p = 0.0;
    for (int j = 0; j < region.ny; ++j) {
        for (int i = 0; i < region.nx; ++i) {
            if (!region.at(i, j)) continue;
            // vertical edges at lines i and i+1, horizontal at levels j, j+1
            if (i == 0 || !region.at(i - 1, j)) p += w.vd[i];
            if (i + 1 == region.nx || !region.at(i + 1, j)) p += w.vd[i + 1];
            if (j == 0 || !region.at(i, j - 1)) p += w.h[j];
            if (j + 1 == region.ny || !region.at(i, j + 1)) p += w.h[j + 1];
        }
    }
    return p;
}

GridRegion symmetrize_columns(const GridRegion& region) {
    GridRegion out;
    out.nx = region.nx;
    out.ny = region.ny;
    out.cell.assign(region.cell.size(), 0);
    for (int i = 0; i < region.nx; ++i) {
        int count = 0;
        for (int j = 0; j < region.ny; ++j) count += region.at(i, j);
        for (int j = 0; j < count; ++j) out.set(i, j, true);
    }
    return out;
}

GridRegion symmetrize_rows(const GridRegion& region) {
    GridRegion out;
    out.nx = region.nx;
    out.ny = region.ny;
    out.cell.assign(region.cell.size(), 0);
    for (int j = 0; j < region.ny; ++j) {
        int count = 0;
        for (int i = 0; i < region.nx; ++i) count += region.at(i, j);
        for (int i = 0; i < count; ++i) out.set(i, j, true);
    }
    return out;
}

GridRegion steiner_symmetrize(const StripConfig& cfg, const GridRegion& region) {
    (void)cfg;  // the operation itself is purely combinatorial
    if (region.nx <= 0 || region.ny <= 0 ||
        region.cell.size() != std::size_t(region.nx) * region.ny)
        throw std::invalid_argument("steiner_symmetrize: malformed region");
    return symmetrize_rows(symmetrize_columns(region));
}

}  // namespace isoprod
