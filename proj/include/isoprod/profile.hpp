#pragma once

// One-dimensional isoperimetric profiles v -> I(v) on (0, V): construction
// for round spheres, metric scaling, symmetry/concavity validation, and the
// chord-ratio constants used by the strip bounds.

#include <optional>
#include <string>
#include <vector>

namespace isoprod {

struct Profile {
    int dim = 0;                  // manifold dimension m >= 2
    double total_volume = 0.0;    // V, Riemannian volume units
    std::vector<double> volume;   // strictly increasing, 0 .. total_volume
    std::vector<double> area;     // area[i] = I(volume[i]); 0 at both ends
    std::string closed_form_tag;  // "sphere-cap" enables the exact evaluator

    std::size_t size() const { return volume.size(); }

    // Piecewise-linear interpolation of the sample table. This is the
    // contract surface of the type: concave profiles are underestimated,
    // which keeps downstream lower bounds one-sided.
    double interp(double v) const;

    // interp(), except sphere-cap tagged profiles evaluate the exact cap
    // closed form (radius inversion + sin-power area).
    double eval(double v) const;

    bool has_closed_form() const { return closed_form_tag == "sphere-cap"; }
};

// Validation used on construction and JSON load. Checks sample ordering,
// boundary zeros, interior positivity, chord-slope concavity (1e-12
// relative), and grid symmetry about V/2. Throws std::invalid_argument.
void validate_profile(const Profile& p);

// Profile of (S^m, g0) sampled at sample_count radii equally spaced in
// [0, pi]; cap volumes by adaptive Simpson (rel tol 1e-12), mirrored so the
// volume grid is symmetric about V/2 to machine precision.
Profile sphere_profile(int m, int sample_count = 513);

// Lemma-homog scaling: profile of (M, lam^2 g) from the profile of (M, g).
// Samples map to (lam^m v, lam^{m-1} a); total volume scales by lam^m.
Profile scale_profile(const Profile& p, double lam);

// max over the symmetric sample grid of |I(v) - I(V - v)| <= tol.
bool check_symmetry(const Profile& p, double tol);

// kappa0 = inf_{v in (0, v0]} I(v)/v^{(m-1)/m}, taken over the sample grid
// plus a one-sided dyadic refinement toward v0. Sampled approximation of the
// Lemma-c0 constant; positive for valid profiles.
double kappa0(const Profile& p, double v0);

// a0 = I(w0)/w0. For concave I with I(0) = 0 the ratio I(v)/v is
// nonincreasing, so this is the exact infimum over (0, w0].
double cheeger_a0(const Profile& p, double w0);

// Chord slope kappa = I(y)/y; the linear lower bound I(t) >= kappa t on
// [0, y] used by the Case 1 / Case 2b threshold inequalities.
double chord_slope(const Profile& p, double y);

// JSON import/export: {"dim": m, "total_volume": V, "samples": [[v,a],...]}
// plus optional "closed_form_tag". Loading validates.
Profile profile_from_json(const std::string& text);
std::string profile_to_json(const Profile& p);

}  // namespace isoprod
