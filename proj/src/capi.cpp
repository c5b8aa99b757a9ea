#include "isoprod/isoprod.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "isoprod/bounds.hpp"
#include "isoprod/geometry.hpp"
#include "isoprod/model_strip.hpp"
#include "isoprod/oracle.hpp"
#include "isoprod/profile.hpp"

struct isoprod_profile {
    isoprod::Profile p;
};
struct isoprod_strip {
    isoprod::StripConfig cfg;
};
struct isoprod_path {
    isoprod::MonotonePath path;
};

namespace {

thread_local std::string g_last_error;

isoprod_status fail(isoprod_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
isoprod_status guarded(Fn&& fn) {
    try {
        fn();
        return ISOPROD_OK;
    } catch (const std::invalid_argument& e) {
        return fail(ISOPROD_ERR_INVALID_ARGUMENT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(ISOPROD_ERR_BAD_INPUT_FILE, e.what());
    } catch (const std::runtime_error& e) {
        return fail(ISOPROD_ERR_NO_CONVERGENCE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ISOPROD_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ISOPROD_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

isoprod::MonotonePath path_from_xy(const double* xy, size_t n) {
    isoprod::MonotonePath p;
    p.vertices.reserve(n);
    for (size_t i = 0; i < n; ++i) p.vertices.push_back({xy[2 * i], xy[2 * i + 1]});
    return p;
}

}  // namespace

extern "C" {

const char* isoprod_last_error(void) { return g_last_error.c_str(); }

void isoprod_string_free(char* s) { delete[] s; }

isoprod_status isoprod_profile_sphere(int dim, int sample_count,
                                      isoprod_profile** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out is null");
        *out = new isoprod_profile{isoprod::sphere_profile(dim, sample_count)};
    });
}

isoprod_status isoprod_profile_from_json(const char* json_text,
                                         isoprod_profile** out) {
    return guarded([&] {
        if (!out || !json_text) throw std::invalid_argument("null argument");
        *out = new isoprod_profile{isoprod::profile_from_json(json_text)};
    });
}

isoprod_status isoprod_profile_to_json(const isoprod_profile* p,
                                       char** out_text) {
    return guarded([&] {
        if (!p || !out_text) throw std::invalid_argument("null argument");
        *out_text = dup_string(isoprod::profile_to_json(p->p));
    });
}

isoprod_status isoprod_profile_scale(const isoprod_profile* p, double lam,
                                     isoprod_profile** out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        *out = new isoprod_profile{isoprod::scale_profile(p->p, lam)};
    });
}

isoprod_status isoprod_profile_eval(const isoprod_profile* p, double v,
                                    double* out_area) {
    return guarded([&] {
        if (!p || !out_area) throw std::invalid_argument("null argument");
        *out_area = p->p.eval(v);
    });
}

isoprod_status isoprod_profile_dim(const isoprod_profile* p, int* out_dim) {
    return guarded([&] {
        if (!p || !out_dim) throw std::invalid_argument("null argument");
        *out_dim = p->p.dim;
    });
}

isoprod_status isoprod_profile_total_volume(const isoprod_profile* p,
                                            double* out_volume) {
    return guarded([&] {
        if (!p || !out_volume) throw std::invalid_argument("null argument");
        *out_volume = p->p.total_volume;
    });
}

isoprod_status isoprod_profile_sample_count(const isoprod_profile* p,
                                            size_t* out_count) {
    return guarded([&] {
        if (!p || !out_count) throw std::invalid_argument("null argument");
        *out_count = p->p.size();
    });
}

isoprod_status isoprod_profile_sample(const isoprod_profile* p, size_t index,
                                      double* out_v, double* out_area) {
    return guarded([&] {
        if (!p || !out_v || !out_area) throw std::invalid_argument("null argument");
        if (index >= p->p.size()) throw std::invalid_argument("sample index");
        *out_v = p->p.volume[index];
        *out_area = p->p.area[index];
    });
}

isoprod_status isoprod_profile_check_symmetry(const isoprod_profile* p,
                                              double tol, int* out_symmetric) {
    return guarded([&] {
        if (!p || !out_symmetric) throw std::invalid_argument("null argument");
        *out_symmetric = isoprod::check_symmetry(p->p, tol) ? 1 : 0;
    });
}

isoprod_status isoprod_profile_kappa0(const isoprod_profile* p, double v0,
                                      double* out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        *out = isoprod::kappa0(p->p, v0);
    });
}

isoprod_status isoprod_profile_cheeger_a0(const isoprod_profile* p, double w0,
                                          double* out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        *out = isoprod::cheeger_a0(p->p, w0);
    });
}

isoprod_status isoprod_profile_chord_slope(const isoprod_profile* p, double y,
                                           double* out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("null argument");
        *out = isoprod::chord_slope(p->p, y);
    });
}

void isoprod_profile_free(isoprod_profile* p) { delete p; }

isoprod_status isoprod_strip_new(int m, int n, const isoprod_profile* phi,
                                 const isoprod_profile* psi, double lam,
                                 isoprod_strip** out) {
    return guarded([&] {
        if (!phi || !psi || !out) throw std::invalid_argument("null argument");
        *out = new isoprod_strip{
            isoprod::make_strip_config(m, n, phi->p, psi->p, lam)};
    });
}

void isoprod_strip_free(isoprod_strip* s) { delete s; }

isoprod_status isoprod_minimize_perimeter(const isoprod_strip* s, double v,
                                          int nx, int ny,
                                          isoprod_model_result* out,
                                          isoprod_path** out_path) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        const isoprod::ModelMinimum mm = isoprod::minimize_perimeter(
            s->cfg, v, isoprod::GridSize{nx, ny}, out_path != nullptr);
        out->value = mm.value;
        out->certified_lower = mm.certified_lower;
        out->area = mm.area;
        out->f_upper = isoprod::f_upper(s->cfg, v);
        out->lagrangian_matched = mm.lagrangian.matched ? 1 : 0;
        out->bracket_area_lo = mm.lagrangian.area_lo;
        out->bracket_perimeter_lo = mm.lagrangian.perimeter_lo;
        out->bracket_area_hi = mm.lagrangian.area_hi;
        out->bracket_perimeter_hi = mm.lagrangian.perimeter_hi;
        if (out_path) *out_path = new isoprod_path{mm.path};
    });
}

size_t isoprod_path_size(const isoprod_path* p) {
    return p ? p->path.vertices.size() : 0;
}

isoprod_status isoprod_path_vertex(const isoprod_path* p, size_t index,
                                   double* out_x, double* out_y) {
    return guarded([&] {
        if (!p || !out_x || !out_y) throw std::invalid_argument("null argument");
        if (index >= p->path.vertices.size())
            throw std::invalid_argument("vertex index");
        *out_x = p->path.vertices[index][0];
        *out_y = p->path.vertices[index][1];
    });
}

isoprod_status isoprod_path_to_json(const isoprod_path* p, char** out_text) {
    return guarded([&] {
        if (!p || !out_text) throw std::invalid_argument("null argument");
        nlohmann::json j;
        auto verts = nlohmann::json::array();
        for (const auto& v : p->path.vertices) verts.push_back({v[0], v[1]});
        j["vertices"] = std::move(verts);
        *out_text = dup_string(j.dump());
    });
}

void isoprod_path_free(isoprod_path* p) { delete p; }

isoprod_status isoprod_rescaled_perimeter(const isoprod_strip* s,
                                          const double* xy,
                                          size_t vertex_count, double* out) {
    return guarded([&] {
        if (!s || !xy || !out) throw std::invalid_argument("null argument");
        *out = isoprod::rescaled_perimeter(s->cfg, path_from_xy(xy, vertex_count));
    });
}

isoprod_status isoprod_enclosed_area(const isoprod_strip* s, const double* xy,
                                     size_t vertex_count, double* out) {
    return guarded([&] {
        if (!s || !xy || !out) throw std::invalid_argument("null argument");
        *out = isoprod::enclosed_area(s->cfg, path_from_xy(xy, vertex_count));
    });
}

isoprod_status isoprod_f_upper(const isoprod_strip* s, double v, double* out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = isoprod::f_upper(s->cfg, v);
    });
}

isoprod_status isoprod_lambda0_threshold(const isoprod_strip* s, double v0,
                                         double alpha, double* out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = isoprod::lambda0_threshold(s->cfg, v0, alpha);
    });
}

isoprod_status isoprod_sandwich_check(const isoprod_strip* s, double v0,
                                      double alpha, int nx, int ny,
                                      isoprod_sandwich_result* out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        const isoprod::SandwichResult r =
            isoprod::sandwich_check(s->cfg, v0, alpha, isoprod::GridSize{nx, ny});
        out->v0 = r.v0;
        out->alpha = r.alpha;
        out->lam = r.lam;
        out->lambda0 = r.lambda0;
        out->f_upper = r.f_upper;
        out->lower_floor = r.lower_floor;
        out->model_value = r.model_value;
        out->certified_lower = r.certified_lower;
        out->grid_slack = r.grid_slack;
        switch (r.verdict) {
            case isoprod::SandwichVerdict::holds:
                out->verdict = ISOPROD_VERDICT_HOLDS;
                break;
            case isoprod::SandwichVerdict::violated_numerically:
                out->verdict = ISOPROD_VERDICT_VIOLATED_NUMERICALLY;
                break;
            case isoprod::SandwichVerdict::lambda_below_threshold:
                out->verdict = ISOPROD_VERDICT_LAMBDA_BELOW_THRESHOLD;
                break;
        }
    });
}

isoprod_status isoprod_cylinder_volume(int m, int n, double r0, double vn,
                                       double lam, double* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = isoprod::cylinder_volume({m, n, r0, vn, lam});
    });
}

isoprod_status isoprod_cylinder_boundary_area(int m, int n, double r0,
                                              double vn, double lam,
                                              double* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = isoprod::cylinder_boundary_area({m, n, r0, vn, lam});
    });
}

isoprod_status isoprod_tlambda_area_bounds(double lam, int m, int n,
                                           double area, double* out_lower,
                                           double* out_upper,
                                           double* out_exact_lateral) {
    return guarded([&] {
        if (!out_lower || !out_upper || !out_exact_lateral)
            throw std::invalid_argument("null argument");
        const isoprod::AreaBounds b = isoprod::tlambda_area_bounds(lam, m, n, area);
        *out_lower = b.lower;
        *out_upper = b.upper;
        *out_exact_lateral = b.exact_lateral;
    });
}

isoprod_status isoprod_fbeta_bounds(double beta, int m, int quantity,
                                    double value, double* out_lower,
                                    double* out_upper) {
    return guarded([&] {
        if (!out_lower || !out_upper) throw std::invalid_argument("null argument");
        const auto q = quantity == ISOPROD_FBETA_VOLUME
                           ? isoprod::FBetaQuantity::volume
                           : isoprod::FBetaQuantity::area;
        const auto [lo, hi] = isoprod::fbeta_bounds(beta, m, q, value);
        *out_lower = lo;
        *out_upper = hi;
    });
}

isoprod_status isoprod_stability(int m, int n, double r0, double vn,
                                 double lam, double mu1,
                                 isoprod_stability_report* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        const isoprod::StabilityReport r =
            isoprod::stability_report({m, n, r0, vn, lam}, mu1);
        out->mu1 = r.mu1;
        out->margin = r.margin;
        out->threshold_lambda = r.threshold_lambda;
        out->strictly_stable = r.strictly_stable ? 1 : 0;
    });
}

isoprod_status isoprod_mu1_round_sphere(int dim, double radius, int resolution,
                                        double* out_mu1, double* out_error) {
    return guarded([&] {
        if (!out_mu1) throw std::invalid_argument("null argument");
        const isoprod::Mu1Estimate e =
            isoprod::mu1_round_sphere(dim, radius, resolution);
        *out_mu1 = e.mu1;
        if (out_error) *out_error = e.error_estimate;
    });
}

isoprod_status isoprod_mu1_flat_torus(int dim, double side, int resolution,
                                      double* out_mu1, double* out_error) {
    return guarded([&] {
        if (!out_mu1) throw std::invalid_argument("null argument");
        const isoprod::Mu1Estimate e =
            isoprod::mu1_flat_torus(dim, side, resolution);
        *out_mu1 = e.mu1;
        if (out_error) *out_error = e.error_estimate;
    });
}

isoprod_status isoprod_brute_force_min(const isoprod_strip* s, double v,
                                       int nx, int ny, double* out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = isoprod::brute_force_min(s->cfg, v, isoprod::GridSize{nx, ny});
    });
}

isoprod_status isoprod_fuzz_symmetrization(const isoprod_strip* s, int trials,
                                           uint64_t seed,
                                           isoprod_oracle_report* out,
                                           char** out_worst_case) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        const isoprod::OracleReport r =
            isoprod::fuzz_symmetrization(s->cfg, trials, seed);
        out->case_count = r.case_count;
        out->max_abs_deviation = r.max_abs_deviation;
        out->passed = r.passed ? 1 : 0;
        if (out_worst_case) *out_worst_case = dup_string(r.worst_case_input);
    });
}

isoprod_status isoprod_quadrature_crosscheck(int m, int samples,
                                             isoprod_oracle_report* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        const isoprod::OracleReport r = isoprod::quadrature_crosscheck(m, samples);
        out->case_count = r.case_count;
        out->max_abs_deviation = r.max_abs_deviation;
        out->passed = r.passed ? 1 : 0;
    });
}

}  // extern "C"
