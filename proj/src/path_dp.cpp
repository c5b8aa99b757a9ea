#include "path_dp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace isoprod::detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

StripWeights make_weights(const StripConfig& cfg, GridSize grid) {
    if (grid.nx < 1 || grid.ny < 1)
        throw std::invalid_argument("grid sides must be positive");
    StripWeights w;
    w.nx = grid.nx;
    w.ny = grid.ny;
    w.vm = cfg.vm;
    w.vn = cfg.vn;
    w.dx = cfg.vm / grid.nx;
    w.dy = cfg.vn / grid.ny;
    w.cell = w.dx * w.dy;
    const double am = std::pow(cfg.lam, cfg.m);
    const double bn = std::pow(cfg.lam, -cfg.n);
    w.h.assign(grid.ny + 1, 0.0);
    w.vd.assign(grid.nx + 1, 0.0);
    for (int j = 1; j < grid.ny; ++j)
        w.h[j] = am * cfg.psi.eval(cfg.vn * j / grid.ny) * w.dx;
    for (int i = 1; i < grid.nx; ++i)
        w.vd[i] = bn * cfg.phi.eval(cfg.vm * i / grid.nx) * w.dy;
    return w;
}

StripWeights make_certified_weights(const StripConfig& cfg, GridSize grid) {
    StripWeights w = make_weights(cfg, grid);
    const double am = std::pow(cfg.lam, cfg.m);
    const double bn = std::pow(cfg.lam, -cfg.n);
    // concave densities attain their minimum over the adjacent cells at the
    // outer lattice lines
    for (int j = 1; j < grid.ny; ++j) {
        const double lo = cfg.psi.eval(cfg.vn * (j - 1) / grid.ny);
        const double hi = cfg.psi.eval(cfg.vn * (j + 1) / grid.ny);
        w.h[j] = am * std::min(lo, hi) * w.dx;
    }
    for (int i = 1; i < grid.nx; ++i) {
        const double lo = cfg.phi.eval(cfg.vm * (i - 1) / grid.nx);
        const double hi = cfg.phi.eval(cfg.vm * (i + 1) / grid.nx);
        w.vd[i] = bn * std::min(lo, hi) * w.dy;
    }
    return w;
}

MonotonePath steps_to_path(const StripWeights& w, const Steps& steps) {
    MonotonePath p;
    const double vm = w.vm, vn = w.vn;
    int i = 0, j = w.ny;
    p.vertices.push_back({0.0, vn});
    // lattice corners land exactly on the strip boundary, where the
    // densities vanish; an ulp inside, a sqrt-singular profile is already
    // far from zero
    auto coord = [&](int ii, int jj) -> std::array<double, 2> {
        return {ii == w.nx ? vm : vm * ii / w.nx,
                jj == w.ny ? vn : vn * jj / w.ny};
    };
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (steps[k] == 0) ++i; else --j;
        const bool last = (k + 1 == steps.size());
        if (!last && steps[k + 1] == steps[k]) continue;  // compress runs
        p.vertices.push_back(coord(i, j));
    }
    if (i != w.nx || j != 0)
        throw std::invalid_argument("steps do not reach the far corner");
    return p;
}

double path_cost(const StripWeights& w, const Steps& steps) {
    double c = 0.0;
    int i = 0, j = w.ny;
    for (const auto s : steps) {
        if (s == 0) { c += w.h[j]; ++i; }
        else { c += w.vd[i]; --j; }
    }
    return c;
}

std::int64_t path_area_cells(const StripWeights& w, const Steps& steps) {
    std::int64_t a = 0;
    int j = w.ny;
    for (const auto s : steps) {
        if (s == 0) a += j; else --j;
    }
    return a;
}

double enumerate_min(const StripWeights& w, std::int64_t target) {
    if (w.nx > 7 || w.ny > 7)
        throw std::invalid_argument("enumerate_min: grid above enumeration cap");
    double best = kInf;
    // iterative DFS over R/D words; cost accumulates in step order
    struct Frame { int i, j; std::int64_t a; double c; int branch; };
    std::vector<Frame> stack;
    stack.push_back({0, w.ny, 0, 0.0, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.i == w.nx && f.j == 0) {
            if (f.a == target) best = std::min(best, f.c);
            continue;
        }
        if (f.j > 0)
            stack.push_back({f.i, f.j - 1, f.a, f.c + w.vd[f.i], 0});
        if (f.i < w.nx)
            stack.push_back({f.i + 1, f.j, f.a + f.j, f.c + w.h[f.j], 0});
    }
    return best;
}

namespace {

// Sub-strip of the DP: rows 0..r, lines 0..c with their weight slices.
// skip_first_d forbids descents at line 0 (the path enters the sub-strip
// post-descent at its top corner).
struct SubStrip {
    const double* h = nullptr;
    int r = 0;
    const double* vd = nullptr;
    int c = 0;
    bool skip_first_d = false;
};

// Banded values-only kernel on the first `cols` columns of a strip with
// `total_cols` columns overall (completion capacity for the band bounds).
// slice is (r+1) x (target+1), row-major, and holds post-descent values at
// the last processed line on return (pre-descent when emit_pre_final_d).
void band_kernel(const SubStrip& s, int cols, int total_cols,
                 std::int64_t target, bool emit_pre_final_d, double* slice) {
    const int r = s.r;
    const std::int64_t stride = target + 1;
    std::fill(slice, slice + (r + 1) * stride, kInf);
    slice[std::size_t(r) * stride] = 0.0;

    auto alo_of = [&](int line, int j) {
        const std::int64_t v =
            target - std::int64_t(total_cols - line) * std::int64_t(j);
        return std::max<std::int64_t>(0, v);
    };
    auto ahi_of = [&](int line) {
        return std::min<std::int64_t>(target, std::int64_t(line) * r);
    };

    auto d_pass = [&](int line) {
        const double v = s.vd[line];
        const std::int64_t ahi = ahi_of(line);
        for (int j = r; j >= 1; --j) {
            const std::int64_t alo = alo_of(line, j - 1);
            if (alo > ahi) continue;
            const double* __restrict src = slice + std::size_t(j) * stride;
            double* __restrict dst = slice + std::size_t(j - 1) * stride;
            for (std::int64_t a = alo; a <= ahi; ++a)
                dst[a] = std::min(dst[a], src[a] + v);
        }
    };

    if (!s.skip_first_d) d_pass(0);
    for (int i = 0; i < cols; ++i) {
        const int line = i + 1;
        const std::int64_t ahi = ahi_of(line);
        // row 0 shifts by 0; its weight is nonzero for sub-strips whose
        // bottom row is an interior level of the full strip
        if (s.h[0] != 0.0) {
            const std::int64_t alo = alo_of(line, 0);
            double* __restrict row = slice;
            for (std::int64_t a = alo; a <= ahi; ++a) row[a] += s.h[0];
        }
        for (int j = 1; j <= r; ++j) {
            const std::int64_t alo = alo_of(line, j);
            if (alo > ahi) continue;
            const double hj = s.h[j];
            double* __restrict row = slice + std::size_t(j) * stride;
            const std::int64_t lo = std::max<std::int64_t>(alo, j);
            for (std::int64_t a = ahi; a >= lo; --a) row[a] = row[a - j] + hj;
            for (std::int64_t a = std::min<std::int64_t>(ahi, j - 1); a >= alo; --a)
                row[a] = kInf;  // unreachable by an R step of height j
        }
        if (line < cols || !emit_pre_final_d) d_pass(line);
    }
}

// Exact DP with parent bytes; returns the optimal step word.
double exact_sub_dp(const SubStrip& s, std::int64_t target, Steps* steps) {
    const int r = s.r, c = s.c;
    const std::int64_t stride = target + 1;
    const std::size_t rows = std::size_t(r) + 1;
    std::vector<double> cur(rows * stride, kInf);
    std::vector<double> next(rows * stride, kInf);
    // parent[line][j][a]: 0 = R from (line-1, j, a-j); 1 = D from (line, j+1, a)
    std::vector<std::uint8_t> parent(std::size_t(c + 1) * rows * stride, 255);
    auto par = [&](int line, int j, std::int64_t a) -> std::uint8_t& {
        return parent[(std::size_t(line) * rows + j) * stride + a];
    };

    cur[std::size_t(r) * stride] = 0.0;
    auto d_pass = [&](int line, std::vector<double>& f) {
        const double v = s.vd[line];
        for (int j = r; j >= 1; --j) {
            const double* src = f.data() + std::size_t(j) * stride;
            double* dst = f.data() + std::size_t(j - 1) * stride;
            for (std::int64_t a = 0; a <= target; ++a) {
                const double cand = src[a] + v;
                if (cand < dst[a]) {
                    dst[a] = cand;
                    par(line, j - 1, a) = 1;
                }
            }
        }
    };

    if (!s.skip_first_d) d_pass(0, cur);
    for (int i = 0; i < c; ++i) {
        std::fill(next.begin(), next.end(), kInf);
        for (int j = 0; j <= r; ++j) {
            const double hj = s.h[j];
            const double* src = cur.data() + std::size_t(j) * stride;
            double* dst = next.data() + std::size_t(j) * stride;
            for (std::int64_t a = j; a <= target; ++a) {
                if (src[a - j] == kInf) continue;
                dst[a] = src[a - j] + hj;
                par(i + 1, j, a) = 0;
            }
        }
        cur.swap(next);
        d_pass(i + 1, cur);
    }

    const double value = cur[target];
    if (steps && value < kInf) {
        Steps rev;
        int line = c, j = 0;
        std::int64_t a = target;
        while (!(line == 0 && j == r && a == 0)) {
            const std::uint8_t p = par(line, j, a);
            if (p == 1) {
                rev.push_back(1);
                ++j;
            } else if (p == 0) {
                rev.push_back(0);
                a -= j;
                --line;
            } else {
                throw std::runtime_error("exact DP: broken parent chain");
            }
        }
        steps->assign(rev.rbegin(), rev.rend());
    }
    return value;
}

double exact_dp_bytes(int c, int r, std::int64_t target) {
    return double(c + 1) * double(r + 1) * double(target + 1);
}

constexpr double kExactBudgetBytes = 2.5e8;

// Hirschberg-style divide and conquer: banded value kernels locate the
// optimal crossing (height, area split) at the middle line, then the halves
// recurse until the exact parent-tracked DP fits in memory.
Steps hirschberg_solve(const SubStrip& s, std::int64_t target);

Steps solve_any(const SubStrip& s, std::int64_t target) {
    if (exact_dp_bytes(s.c, s.r, target) <= kExactBudgetBytes) {
        Steps steps;
        const double v = exact_sub_dp(s, target, &steps);
        if (!(v < kInf)) throw std::runtime_error("area target unreachable");
        return steps;
    }
    return hirschberg_solve(s, target);
}

Steps hirschberg_solve(const SubStrip& s, std::int64_t target) {
    const int r = s.r, c = s.c;
    const int split = c / 2;
    const std::int64_t stride = target + 1;

    // forward half: lines 0..split, final descent at the split included
    std::vector<double> fwd(std::size_t(r + 1) * stride);
    band_kernel(s, split, c, target, false, fwd.data());

    // backward half: 180-degree rotation, stopped before the final descent
    // (the crossing state is post-descent, so its rotation is pre-descent)
    std::vector<double> h_rot(r + 1), vd_rot(c - split + 1);
    for (int j = 0; j <= r; ++j) h_rot[j] = s.h[r - j];
    for (int i = 0; i <= c - split; ++i) vd_rot[i] = s.vd[c - i];
    const std::int64_t target_rot = std::int64_t(c) * r - target;
    const std::int64_t stride_rot = target_rot + 1;
    SubStrip rot{h_rot.data(), r, vd_rot.data(), c - split, false};
    std::vector<double> bwd(std::size_t(r + 1) * stride_rot);
    band_kernel(rot, c - split, c, target_rot, true, bwd.data());

    // stitch: F[j][aL] + G[r-j][(c-split)*r - (target-aL)], reading each
    // slice only inside its valid band at the split line (cells outside hold
    // stale values from earlier lines by design of the in-place kernel)
    double best = kInf;
    int best_j = -1;
    std::int64_t best_a = -1;
    const std::int64_t suffix_full = std::int64_t(c - split) * r;
    const std::int64_t f_ahi =
        std::min<std::int64_t>(target, std::int64_t(split) * r);
    const std::int64_t g_ahi =
        std::min<std::int64_t>(target_rot, suffix_full);
    for (int j = 0; j <= r; ++j) {
        const double* frow = fwd.data() + std::size_t(j) * stride;
        const double* grow = bwd.data() + std::size_t(r - j) * stride_rot;
        const std::int64_t f_alo = std::max<std::int64_t>(
            0, target - std::int64_t(c - split) * j);
        const std::int64_t g_alo = std::max<std::int64_t>(
            0, target_rot - std::int64_t(split) * (r - j));
        for (std::int64_t a = f_alo; a <= f_ahi; ++a) {
            if (frow[a] == kInf) continue;
            const std::int64_t arot = suffix_full - (target - a);
            if (arot < g_alo || arot > g_ahi) continue;
            const double tot = frow[a] + grow[arot];
            if (tot < best) {
                best = tot;
                best_j = j;
                best_a = a;
            }
        }
    }
    if (best_j < 0) throw std::runtime_error("hirschberg: no feasible stitch");
    fwd.clear();
    fwd.shrink_to_fit();
    bwd.clear();
    bwd.shrink_to_fit();

    // left: rows best_j..r over lines 0..split, ends at the crossing corner
    std::vector<double> h_left(s.h + best_j, s.h + r + 1);
    std::vector<double> vd_left(s.vd, s.vd + split + 1);
    SubStrip left{h_left.data(), r - best_j, vd_left.data(), split,
                  s.skip_first_d};
    const std::int64_t t_left = best_a - std::int64_t(split) * best_j;
    Steps ls = solve_any(left, t_left);

    // right: rows 0..best_j over lines split..c, entered post-descent
    std::vector<double> h_right(s.h, s.h + best_j + 1);
    std::vector<double> vd_right(s.vd + split, s.vd + c + 1);
    SubStrip right{h_right.data(), best_j, vd_right.data(), c - split, true};
    Steps rs = solve_any(right, target - best_a);

    ls.insert(ls.end(), rs.begin(), rs.end());
    return ls;
}

StripWeights rotate_weights(const StripWeights& w) {
    StripWeights r = w;
    std::reverse(r.h.begin(), r.h.end());
    std::reverse(r.vd.begin(), r.vd.end());
    return r;
}

}  // namespace

double exact_dp_state_bytes(const StripWeights& w, std::int64_t target) {
    return exact_dp_bytes(w.nx, w.ny, target);
}

double exact_area_dp(const StripWeights& w, std::int64_t target, Steps* steps) {
    SubStrip s{w.h.data(), w.ny, w.vd.data(), w.nx, false};
    return exact_sub_dp(s, target, steps);
}

namespace {
// Complementing halves the slice for targets past half the strip; only worth
// it (and only harmless to bit-level reproducibility) when the slice is big.
bool complement_pays_off(const StripWeights& w, std::int64_t target) {
    const std::int64_t total = std::int64_t(w.nx) * w.ny;
    if (target <= total - target) return false;
    return double(w.ny + 1) * double(target + 1) > 2.0e8;
}
}  // namespace

double banded_area_dp(const StripWeights& w, std::int64_t target) {
    const std::int64_t total = std::int64_t(w.nx) * w.ny;
    if (complement_pays_off(w, target)) {
        const StripWeights r = rotate_weights(w);
        return banded_area_dp(r, total - target);
    }
    SubStrip s{w.h.data(), w.ny, w.vd.data(), w.nx, false};
    std::vector<double> slice(std::size_t(w.ny + 1) * (target + 1));
    band_kernel(s, w.nx, w.nx, target, false, slice.data());
    return slice[target];
}

double banded_area_dp_path(const StripWeights& w, std::int64_t target,
                           Steps* steps) {
    const std::int64_t total = std::int64_t(w.nx) * w.ny;
    if (complement_pays_off(w, target)) {
        const StripWeights r = rotate_weights(w);
        Steps srot;
        banded_area_dp_path(r, total - target, &srot);
        Steps orig(srot.rbegin(), srot.rend());
        const double v = path_cost(w, orig);
        if (steps) *steps = std::move(orig);
        return v;
    }
    SubStrip s{w.h.data(), w.ny, w.vd.data(), w.nx, false};
    Steps st = solve_any(s, target);
    const double v = path_cost(w, st);
    if (steps) *steps = std::move(st);
    return v;
}

LagrangianPoint lagrangian_dp(const StripWeights& w, double mu) {
    const int nx = w.nx, ny = w.ny;
    struct Node {
        double obj = kInf;
        std::int64_t area = 0;
    };
    std::vector<Node> cur(ny + 1), next(ny + 1);
    std::vector<std::uint8_t> parent(std::size_t(nx + 1) * (ny + 1), 255);
    auto par = [&](int i, int j) -> std::uint8_t& {
        return parent[std::size_t(i) * (ny + 1) + j];
    };
    auto better = [](double obj, std::int64_t area, const Node& old) {
        return obj < old.obj || (obj == old.obj && area < old.area);
    };

    cur[ny] = {0.0, 0};
    auto d_pass = [&](int line, std::vector<Node>& f) {
        for (int j = ny; j >= 1; --j) {
            if (f[j].obj == kInf) continue;
            const double cand = f[j].obj + w.vd[line];
            if (better(cand, f[j].area, f[j - 1])) {
                f[j - 1] = {cand, f[j].area};
                par(line, j - 1) = 1;
            }
        }
    };
    d_pass(0, cur);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j <= ny; ++j) {
            next[j] = {kInf, 0};
            if (cur[j].obj == kInf) continue;
            next[j] = {cur[j].obj + w.h[j] - mu * double(j) * w.cell,
                       cur[j].area + j};
            par(i + 1, j) = 0;
        }
        cur.swap(next);
        d_pass(i + 1, cur);
    }

    LagrangianPoint out;
    out.mu = mu;
    out.objective = cur[0].obj;
    out.area_cells = cur[0].area;
    Steps rev;
    int line = nx, j = 0;
    while (!(line == 0 && j == ny)) {
        const std::uint8_t p = par(line, j);
        if (p == 1) {
            rev.push_back(1);
            ++j;
        } else {
            rev.push_back(0);
            --line;
        }
    }
    out.steps.assign(rev.rbegin(), rev.rend());
    out.perimeter = path_cost(w, out.steps);
    return out;
}

LagrangianBracket lagrangian_bisect(const StripWeights& w,
                                    std::int64_t target, int max_iter,
                                    Steps* matched_steps) {
    LagrangianBracket br;
    LagrangianPoint lo = lagrangian_dp(w, 0.0);
    auto matched = [&](const LagrangianPoint& p) {
        return std::llabs(p.area_cells - target) <= 1;
    };
    auto record = [&](const LagrangianPoint& p, bool is_lo) {
        if (is_lo) {
            br.mu_lo = p.mu;
            br.area_lo = double(p.area_cells) * w.cell;
            br.perimeter_lo = p.perimeter;
        } else {
            br.mu_hi = p.mu;
            br.area_hi = double(p.area_cells) * w.cell;
            br.perimeter_hi = p.perimeter;
        }
    };
    record(lo, true);
    if (matched(lo)) {
        br.matched = true;
        record(lo, false);
        if (matched_steps) *matched_steps = lo.steps;
        return br;
    }

    double mu_hi = 1.0;
    LagrangianPoint hi = lagrangian_dp(w, mu_hi);
    int iter = 1;
    while (hi.area_cells < target && mu_hi < 1e12 && iter < max_iter) {
        mu_hi *= 8.0;
        hi = lagrangian_dp(w, mu_hi);
        ++iter;
    }
    record(hi, false);
    if (matched(hi)) {
        br.matched = true;
        br.iterations = iter;
        if (matched_steps) *matched_steps = hi.steps;
        return br;
    }

    while (iter < max_iter) {
        const double mu = 0.5 * (lo.mu + mu_hi);
        LagrangianPoint mid = lagrangian_dp(w, mu);
        ++iter;
        if (matched(mid)) {
            br.matched = true;
            record(mid, mid.area_cells <= target);
            if (matched_steps) *matched_steps = mid.steps;
            break;
        }
        if (mid.area_cells < target) {
            lo = mid;
            record(lo, true);
        } else {
            mu_hi = mu;
            hi = mid;
            record(hi, false);
        }
        if (mu_hi - lo.mu <= 1e-15 * std::max(1.0, mu_hi)) break;
    }
    br.iterations = iter;
    return br;
}

}  // namespace isoprod::detail
