#pragma once

// Ros/Morgan 2D model strip: after the J_lambda change of variables the
// strip is (0,V_M) x (0,V_N) and boundary length is measured by
//   ds^2 = lam^{2m} psi^2(y) dx^2 + lam^{-2n} phi^2(x) dy^2.
// Symmetrized regions are lower-left hypographs of monotone paths; the model
// minimum at fixed area is solved by area-quantized dynamic programming over
// monotone lattice paths.

#include <array>
#include <cstdint>
#include <vector>

#include "isoprod/profile.hpp"

namespace isoprod {

struct StripConfig {
    int m = 0, n = 0;
    Profile phi;   // profile of (M, g), dim m
    Profile psi;   // profile of (N, h), dim n
    double vm = 0.0, vn = 0.0;  // V_M, V_N; must equal the profiles' totals
    double lam = 1.0;

    double total_area() const { return vm * vn; }
};

StripConfig make_strip_config(int m, int n, Profile phi, Profile psi,
                              double lam);

struct MonotonePath {
    // x nondecreasing, y nonincreasing; region is the lower-left hypograph
    std::vector<std::array<double, 2>> vertices;
};

// Throws std::invalid_argument unless the path is monotone, inside the
// closed strip, starts on the x=0 or y=V_N side and ends on the y=0 or
// x=V_M side.
void validate_path(const StripConfig& cfg, const MonotonePath& path);

// Line integral of the model metric along the path; axis-aligned segments
// are exact, diagonal segments use 4-point Gauss quadrature.
double rescaled_perimeter(const StripConfig& cfg, const MonotonePath& path);

// Single-term lower bounds of the integrand (Eqs. varphi / psi analogues):
// dropping the psi dx term leaves lam^{-n} * integral phi(x) |dy|, dropping
// the phi dy term leaves lam^{m} * integral psi(y) |dx|.
double perimeter_phi_term(const StripConfig& cfg, const MonotonePath& path);
double perimeter_psi_term(const StripConfig& cfg, const MonotonePath& path);

// Exact polygonal hypograph area (Lebesgue measure, J_lambda-invariant).
double enclosed_area(const StripConfig& cfg, const MonotonePath& path);

struct GridSize {
    int nx = 0, ny = 0;
};

// Lagrangian diagnostics: minimize P - mu * Area over all monotone lattice
// paths, bisecting mu toward the target area. The perimeter-vs-area front
// of this problem is concave (both endpoints have zero perimeter), so for
// interior targets the bisection generically stalls on a bracketing pair;
// that duality gap is reported rather than hidden.
struct LagrangianBracket {
    bool matched = false;        // bracket closed onto the target area
    int iterations = 0;
    double mu_lo = 0.0, mu_hi = 0.0;
    double area_lo = 0.0, perimeter_lo = 0.0;   // path at mu_lo
    double area_hi = 0.0, perimeter_hi = 0.0;   // path at mu_hi
};

struct ModelMinimum {
    MonotonePath path;            // optimal staircase at the matched area
    double value = 0.0;           // its rescaled perimeter
    double certified_lower = 0.0; // same DP with cell-minimum densities
    double area = 0.0;            // achieved area, within one cell of v
    std::int64_t area_cells = 0;
    GridSize grid;
    LagrangianBracket lagrangian;
};

// Minimum rescaled perimeter over monotone lattice paths whose quantized
// area is the representable value nearest v. Exact area-quantized DP; a
// banded low-memory kernel takes over on large grids. Requires nx, ny >= 4
// and v in (0, V_M*V_N). Throws on invalid input.
ModelMinimum minimize_perimeter(const StripConfig& cfg, double v,
                                GridSize grid, bool want_path = true);

// Cell-set form used by discrete Steiner symmetrization and the fuzz oracle.
struct GridRegion {
    int nx = 0, ny = 0;
    std::vector<std::uint8_t> cell;  // row-major, cell[j*nx + i]

    bool at(int i, int j) const { return cell[std::size_t(j) * nx + i] != 0; }
    void set(int i, int j, bool v) { cell[std::size_t(j) * nx + i] = v ? 1 : 0; }
    std::int64_t count() const;
};

// Weighted discrete perimeter: boundary cell edges weighted by the strip
// densities at the edge midpoints.
double discrete_perimeter(const StripConfig& cfg, const GridRegion& region);

// Steiner symmetrization toward the lower left: per-column cell counts drop
// to the bottom, then per-row counts pack to the left. Area is preserved
// exactly; the weighted perimeter never increases (concavity + symmetry of
// the densities).
GridRegion steiner_symmetrize(const StripConfig& cfg, const GridRegion& region);
GridRegion symmetrize_columns(const GridRegion& region);
GridRegion symmetrize_rows(const GridRegion& region);

}  // namespace isoprod
