#include "isoprod/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "isoprod/quadrature.hpp"
#include "isoprod/sphere_cap.hpp"

namespace isoprod {

double sphere_cap_radius(int m, double v) {
    const double vtot = sphere_total_volume(m);
    if (v <= 0.0) return 0.0;
    if (v >= vtot) return M_PI;
    double lo = 0.0, hi = M_PI;
    double r = M_PI * v / vtot;  // crude start, refined below
    for (int it = 0; it < 100; ++it) {
        const double g = sphere_cap_volume(m, r) - v;
        (g > 0 ? hi : lo) = r;
        const double dg = sphere_cap_area(m, r);
        double step = (dg > 0) ? g / dg : 0.0;
        double next = r - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - r) <= 1e-16 * M_PI) { r = next; break; }
        r = next;
    }
    return r;
}

double Profile::interp(double v) const {
    if (volume.empty()) throw std::invalid_argument("Profile: empty");
    if (v <= volume.front()) return area.front();
    if (v >= volume.back()) return area.back();
    const auto it = std::upper_bound(volume.begin(), volume.end(), v);
    const std::size_t k = static_cast<std::size_t>(it - volume.begin());
    const double v0 = volume[k - 1], v1 = volume[k];
    const double t = (v - v0) / (v1 - v0);
    return area[k - 1] + t * (area[k] - area[k - 1]);
}

double Profile::eval(double v) const {
    if (has_closed_form()) {
        if (v <= 0.0 || v >= total_volume) return 0.0;
        return sphere_cap_area(dim, sphere_cap_radius(dim, v));
    }
    return interp(v);
}

void validate_profile(const Profile& p) {
    if (p.dim < 2) throw std::invalid_argument("profile: dim < 2");
    if (!(p.total_volume > 0))
        throw std::invalid_argument("profile: total_volume <= 0");
    const std::size_t n = p.volume.size();
    if (n < 3 || p.area.size() != n)
        throw std::invalid_argument("profile: needs >= 3 samples");
    const double V = p.total_volume;
    if (p.volume.front() != 0.0 || std::abs(p.volume.back() - V) > 1e-12 * V)
        throw std::invalid_argument("profile: volume grid must span [0, V]");
    if (p.area.front() != 0.0 || p.area.back() != 0.0)
        throw std::invalid_argument("profile: I(0) and I(V) must be 0");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(p.volume[i + 1] > p.volume[i]))
            throw std::invalid_argument("profile: volumes not increasing");
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (!(p.area[i] > 0.0))
            throw std::invalid_argument("profile: interior area must be > 0");
    // concavity: consecutive chord slopes nonincreasing (1e-12 relative)
    double prev_slope = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double slope =
            (p.area[i + 1] - p.area[i]) / (p.volume[i + 1] - p.volume[i]);
        if (i > 0) {
            const double scale =
                std::max({std::abs(prev_slope), std::abs(slope), 1.0});
            if (slope > prev_slope + 1e-12 * scale)
                throw std::invalid_argument("profile: not concave");
        }
        prev_slope = slope;
    }
    // symmetric grid + symmetric values (Lemma-symm at sample pairs)
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        if (std::abs(p.volume[i] + p.volume[j] - V) > 1e-9 * V)
            throw std::invalid_argument("profile: sample grid not symmetric");
        const double scale = std::max(std::abs(p.area[i]), 1.0);
        if (std::abs(p.area[i] - p.area[j]) > 1e-9 * scale)
            throw std::invalid_argument("profile: samples break I(v)=I(V-v)");
    }
}

Profile sphere_profile(int m, int sample_count) {
    if (m < 2) throw std::invalid_argument("sphere_profile: m < 2");
    if (sample_count < 3)
        throw std::invalid_argument("sphere_profile: sample_count < 3");
    const int K = sample_count - 1;  // radius intervals
    const int half = K / 2;
    const double om = unit_sphere_volume(m - 1);
    const auto integrand = [m](double t) {
        return std::pow(std::sin(t), m - 1);
    };
    // Quadratically graded cap radii, clustered at the pole. Equal spacing
    // makes the linear-in-volume interpolation error blow up like h^2/r near
    // v = 0; the r ~ t^2 grading equalizes it across the range. The first
    // positive radius is floored where the cap volume reaches ~3e-8 so that
    // mirrored samples near V keep volume gaps thousands of ulps wide (the
    // concavity of the sampled slopes survives the mirror rounding), and for
    // an odd interval count the grid tops out strictly below pi/2.
    const double r_floor = std::pow(m * 3e-8 / om, 1.0 / m);
    const double t_min = std::sqrt(2.0 * r_floor / M_PI);
    const double denom =
        (half == 1) ? 1.0 : (K % 2 == 0 ? half - 1.0 : half - 0.5);
    const auto radius = [&](int k) {
        if (k == 0) return 0.0;
        double t = (half == 1 && K % 2 == 0)
                       ? 1.0
                       : t_min + (1.0 - t_min) * (k - 1) / denom;
        return 0.5 * M_PI * t * t;
    };

    Profile p;
    p.dim = m;
    p.closed_form_tag = "sphere-cap";
    p.volume.assign(sample_count, 0.0);
    p.area.assign(sample_count, 0.0);

    // cumulative cap volumes up to the grid midpoint; mirror the rest so the
    // volume grid is symmetric about V/2 to machine precision
    double acc = 0.0;
    for (int k = 1; k <= half; ++k) {
        acc += om * adaptive_simpson(integrand, radius(k - 1), radius(k), 1e-12);
        p.volume[k] = acc;
        p.area[k] = om * std::pow(std::sin(radius(k)), m - 1);
    }
    double vtot;
    if (K % 2 == 0) {
        vtot = 2.0 * p.volume[half];  // radius(half) is exactly pi/2
    } else {
        // odd interval count: the two middle samples straddle the equator
        const double mid =
            om * adaptive_simpson(integrand, radius(half), 0.5 * M_PI, 1e-12);
        vtot = 2.0 * (p.volume[half] + mid);
    }
    p.total_volume = vtot;
    p.volume[K] = vtot;
    for (int k = half + 1; k < K; ++k) {
        p.volume[k] = vtot - p.volume[K - k];
        p.area[k] = p.area[K - k];
    }
    validate_profile(p);
    return p;
}

Profile scale_profile(const Profile& p, double lam) {
    if (!(lam > 0)) throw std::invalid_argument("scale_profile: lam <= 0");
    if (lam == 1.0) return p;
    const double vf = std::pow(lam, p.dim);
    const double af = std::pow(lam, p.dim - 1);
    Profile q;
    q.dim = p.dim;
    q.total_volume = vf * p.total_volume;
    q.volume.reserve(p.size());
    q.area.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        q.volume.push_back(vf * p.volume[i]);
        q.area.push_back(af * p.area[i]);
    }
    // the exact cap evaluator applies to the unit round metric only
    return q;
}

bool check_symmetry(const Profile& p, double tol) {
    if (tol < 0) throw std::invalid_argument("check_symmetry: tol < 0");
    // V - volume[i] is represented exactly by the mirrored node, so the
    // comparison runs over the sample pairs (v_i, v_{n-1-i})
    const std::size_t n = p.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(p.interp(p.volume[i]) -
                                         p.interp(p.volume[n - 1 - i])));
    return worst <= tol;
}

namespace {
void require_interior(const Profile& p, double v, const char* who) {
    if (!(v > 0.0 && v < p.total_volume))
        throw std::invalid_argument(std::string(who) +
                                    ": argument outside (0, total_volume)");
}
}  // namespace

double kappa0(const Profile& p, double v0) {
    require_interior(p, v0, "kappa0");
    const double ex = static_cast<double>(p.dim - 1) / p.dim;
    double best = p.eval(v0) / std::pow(v0, ex);
    for (std::size_t i = 1; i + 1 < p.size() && p.volume[i] < v0; ++i)
        best = std::min(best, p.area[i] / std::pow(p.volume[i], ex));
    // one-sided refinement between the last sample below v0 and v0
    const auto it = std::lower_bound(p.volume.begin(), p.volume.end(), v0);
    if (it != p.volume.begin()) {
        double lo = *(it - 1);
        for (int k = 0; k < 8; ++k) {
            const double v = 0.5 * (lo + v0);
            if (v <= 0 || v >= v0) break;
            best = std::min(best, p.eval(v) / std::pow(v, ex));
            lo = v;
        }
    }
    return best;
}

double cheeger_a0(const Profile& p, double w0) {
    require_interior(p, w0, "cheeger_a0");
    return p.eval(w0) / w0;
}

double chord_slope(const Profile& p, double y) {
    require_interior(p, y, "chord_slope");
    return p.eval(y) / y;
}

Profile profile_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Profile p;
    p.dim = j.at("dim").get<int>();
    p.total_volume = j.at("total_volume").get<double>();
    for (const auto& s : j.at("samples")) {
        p.volume.push_back(s.at(0).get<double>());
        p.area.push_back(s.at(1).get<double>());
    }
    if (j.contains("closed_form_tag"))
        p.closed_form_tag = j["closed_form_tag"].get<std::string>();
    validate_profile(p);
    return p;
}

std::string profile_to_json(const Profile& p) {
    nlohmann::json j;
    j["dim"] = p.dim;
    j["total_volume"] = p.total_volume;
    auto samples = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        samples.push_back({p.volume[i], p.area[i]});
    j["samples"] = std::move(samples);
    if (!p.closed_form_tag.empty()) j["closed_form_tag"] = p.closed_form_tag;
    return j.dump();
}

}  // namespace isoprod
