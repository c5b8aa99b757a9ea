#pragma once

// Internal kernels for the model-strip optimization. Monotone lattice paths
// run corner-to-corner from (0, ny) to (nx, 0); a path is a word of R/D
// steps. An R step at level j costs h[j] and adds j cells of area; a D step
// at line i costs vd[i]. h[0], h[ny], vd[0], vd[nx] are forced to zero:
// runs along the strip edge belong to the strip boundary, not the region
// boundary. With that convention every lower-left hypograph region is
// represented by exactly this path family.
//
// All kernels accumulate path cost in step order, so the exhaustive
// enumerator and the DP produce bit-identical sums for identical paths.

#include <cstdint>
#include <vector>

#include "isoprod/model_strip.hpp"

namespace isoprod::detail {

struct StripWeights {
    int nx = 0, ny = 0;
    double vm = 0.0, vn = 0.0;              // exact strip extents
    double dx = 0.0, dy = 0.0, cell = 0.0;  // cell = dx*dy
    std::vector<double> h;    // size ny+1
    std::vector<double> vd;   // size nx+1
};

// Model weights: densities evaluated on the lattice lines.
StripWeights make_weights(const StripConfig& cfg, GridSize grid);

// Certified-lower weights: each density replaced by its minimum over the
// cells adjacent to the segment (concave densities attain interval minima
// at the endpoints).
StripWeights make_certified_weights(const StripConfig& cfg, GridSize grid);

// steps: 0 = R, 1 = D, from (0, ny) to (nx, 0)
using Steps = std::vector<std::uint8_t>;

MonotonePath steps_to_path(const StripWeights& w, const Steps& steps);
double path_cost(const StripWeights& w, const Steps& steps);
std::int64_t path_area_cells(const StripWeights& w, const Steps& steps);

// Exhaustive enumeration over all C(nx+ny, nx) paths; returns the minimum
// cost among paths of exactly `target` cells. Grid sides must be <= 7.
double enumerate_min(const StripWeights& w, std::int64_t target);

// Exact area-quantized DP, parent bytes kept for reconstruction.
// Feasible for (nx+1)*(ny+1)*(target+1) up to a few 1e8.
double exact_area_dp(const StripWeights& w, std::int64_t target, Steps* steps);

// Banded low-memory DP (values only): single (ny+1) x (target+1) slice,
// states outside the reach/completion band are skipped.
double banded_area_dp(const StripWeights& w, std::int64_t target);

// Banded DP + Hirschberg-style divide and conquer for the optimal path.
double banded_area_dp_path(const StripWeights& w, std::int64_t target,
                           Steps* steps);

// Number of value-slice bytes the exact DP would need; used to pick kernels.
double exact_dp_state_bytes(const StripWeights& w, std::int64_t target);

struct LagrangianPoint {
    double mu = 0.0;
    double objective = 0.0;
    double perimeter = 0.0;
    std::int64_t area_cells = 0;
    Steps steps;
};

// min over paths of cost - mu * area_cells * cell; ties toward smaller area.
LagrangianPoint lagrangian_dp(const StripWeights& w, double mu);

LagrangianBracket lagrangian_bisect(const StripWeights& w,
                                    std::int64_t target, int max_iter,
                                    Steps* matched_steps);

}  // namespace isoprod::detail
