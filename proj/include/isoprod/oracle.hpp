#pragma once

// Independent brute-force verifiers for the main solvers: exhaustive
// monotone-path enumeration, randomized symmetrization fuzzing, and the
// quadrature cross-check between adaptive Simpson and Gauss-Legendre.

#include <cstdint>
#include <string>

#include "isoprod/model_strip.hpp"

namespace isoprod {

struct OracleReport {
    std::int64_t case_count = 0;
    double max_abs_deviation = 0.0;
    std::string worst_case_input;  // serialized JSON of the worst trial
    bool passed = true;
};

// Exact minimum of the rescaled perimeter over all monotone lattice paths
// whose quantized area is the representable value nearest v. Enumeration;
// grid sides must be <= 7 (C(nx+ny, nx) paths).
double brute_force_min(const StripConfig& cfg, double v, GridSize grid);

// Random cell sets: asserts steiner_symmetrize preserves area exactly and
// never increases the weighted perimeter. Deterministic in (trials, seed).
OracleReport fuzz_symmetrization(const StripConfig& cfg, int trials,
                                 std::uint64_t seed);

// Compares adaptive-Simpson cap volumes against Gauss-Legendre at double
// resolution over a radius sweep; reports the worst absolute deviation.
OracleReport quadrature_crosscheck(int m, int samples);

}  // namespace isoprod
