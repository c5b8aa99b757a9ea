// isoprod command-line front end. Talks to the core exclusively through the
// C API in isoprod/isoprod.h.
//
// Exit codes: 0 success / all verdicts hold, 1 verdict or harness failure,
// 2 invalid configuration, 3 solver non-convergence.

#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "isoprod/isoprod.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNoConvergence = 3;

struct CliError {
    int code;
    std::string message;
};

void check(isoprod_status st) {
    if (st == ISOPROD_OK) return;
    const std::string msg = isoprod_last_error();
    switch (st) {
        case ISOPROD_ERR_NO_CONVERGENCE:
            throw CliError{kExitNoConvergence, msg};
        case ISOPROD_ERR_INVALID_ARGUMENT:
        case ISOPROD_ERR_BAD_INPUT_FILE:
        default:
            throw CliError{kExitConfig, msg};
    }
}

// 12 significant digits, '.' decimal, locale independent
std::string g12(double x) {
    char buf[40];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

int thread_budget() {
    if (const char* env = std::getenv("ISOPROD_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

struct GridOpt {
    int nx = 64, ny = 64;
};

GridOpt parse_grid(const std::string& s) {
    GridOpt g;
    const auto x = s.find('x');
    if (x == std::string::npos) throw CliError{kExitConfig, "grid must be NxM"};
    try {
        g.nx = std::stoi(s.substr(0, x));
        g.ny = std::stoi(s.substr(x + 1));
    } catch (...) {
        throw CliError{kExitConfig, "grid must be NxM"};
    }
    return g;
}

std::vector<double> parse_range(const std::string& s, double single) {
    // "lo:hi:steps" or empty (use the single value)
    if (s.empty()) return {single};
    std::vector<double> out;
    double lo = 0, hi = 0;
    int steps = 0;
    std::istringstream is(s);
    std::string a, b, c;
    if (!std::getline(is, a, ':') || !std::getline(is, b, ':') ||
        !std::getline(is, c))
        throw CliError{kExitConfig, "range must be lo:hi:steps"};
    try {
        lo = std::stod(a);
        hi = std::stod(b);
        steps = std::stoi(c);
    } catch (...) {
        throw CliError{kExitConfig, "range must be lo:hi:steps"};
    }
    if (steps < 1) throw CliError{kExitConfig, "range needs steps >= 1"};
    for (int k = 0; k < steps; ++k)
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1));
    return out;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw CliError{kExitConfig, "cannot open --out " + path};
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// merge: values from --config JSON apply wherever the flag was not given
class ConfigFile {
  public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw CliError{kExitConfig, "cannot read --config " + path};
        try {
            in >> j_;
        } catch (const std::exception& e) {
            throw CliError{kExitConfig, std::string("bad config JSON: ") + e.what()};
        }
    }
    template <typename T>
    void fill(const CLI::App& app, const std::string& flag, T& value) const {
        if (j_.is_null()) return;
        const std::string key = flag.substr(2);  // strip "--"
        if (app.count(flag) == 0 && j_.contains(key)) value = j_[key].get<T>();
    }

  private:
    nlohmann::json j_;
};

struct ProfileHandle {
    isoprod_profile* p = nullptr;
    ~ProfileHandle() { isoprod_profile_free(p); }
};

struct StripHandle {
    isoprod_strip* s = nullptr;
    ~StripHandle() { isoprod_strip_free(s); }
};

// --M / --N accept "sphere" or a profile JSON file path
void load_factor(const std::string& spec, int dim, int samples,
                 ProfileHandle& out) {
    if (spec == "sphere") {
        check(isoprod_profile_sphere(dim, samples, &out.p));
        return;
    }
    std::ifstream in(spec);
    if (!in) throw CliError{kExitConfig, "cannot read profile file " + spec};
    std::stringstream ss;
    ss << in.rdbuf();
    check(isoprod_profile_from_json(ss.str().c_str(), &out.p));
}

const char* verdict_name(int v) {
    switch (v) {
        case ISOPROD_VERDICT_HOLDS: return "HOLDS";
        case ISOPROD_VERDICT_LAMBDA_BELOW_THRESHOLD:
            return "LAMBDA_BELOW_THRESHOLD";
        default: return "VIOLATED_NUMERICALLY";
    }
}

struct CommonOpts {
    int m = 2, n = 2;
    std::string factor_m = "sphere", factor_n = "sphere";
    int samples = 513;
    double v0 = 0.0;
    double alpha = 0.8;
    double lambda = 10.0;
    std::string lambda_range;
    std::string grid = "64x64";
    std::string out;
    std::string format = "csv";
    std::string config;
    std::uint64_t seed = 0;
};

void add_factor_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--m", o.m, "dimension of the first factor M");
    cmd->add_option("--n", o.n, "dimension of the second factor N");
    cmd->add_option("--M", o.factor_m, "first factor: sphere | profile.json");
    cmd->add_option("--N", o.factor_n, "second factor: sphere | profile.json");
    cmd->add_option("--samples", o.samples, "profile sample count");
    cmd->add_option("--config", o.config, "JSON config file (flags override)");
}

void merge_common(const CLI::App& cmd, const ConfigFile& cf, CommonOpts& o) {
    cf.fill(cmd, "--m", o.m);
    cf.fill(cmd, "--n", o.n);
    cf.fill(cmd, "--M", o.factor_m);
    cf.fill(cmd, "--N", o.factor_n);
    cf.fill(cmd, "--samples", o.samples);
    cf.fill(cmd, "--v0", o.v0);
    cf.fill(cmd, "--alpha", o.alpha);
    cf.fill(cmd, "--lambda", o.lambda);
    cf.fill(cmd, "--lambda-range", o.lambda_range);
    cf.fill(cmd, "--grid", o.grid);
    cf.fill(cmd, "--out", o.out);
    cf.fill(cmd, "--format", o.format);
    cf.fill(cmd, "--seed", o.seed);
}

struct SandwichRow {
    double lambda = 0.0, v0 = 0.0, alpha = 0.0;
    isoprod_sandwich_result r{};
};

void emit_sandwich_csv(std::ostream& os, int m, int n,
                       const std::vector<SandwichRow>& rows) {
    os << "m,n,v0,alpha,lambda0,lambda,f_upper,floor,model_value,"
          "certified_lower,verdict\n";
    for (const auto& row : rows) {
        os << m << ',' << n << ',' << g12(row.v0) << ',' << g12(row.alpha)
           << ',' << g12(row.r.lambda0) << ',' << g12(row.lambda) << ','
           << g12(row.r.f_upper) << ',' << g12(row.r.lower_floor) << ','
           << g12(row.r.model_value) << ',' << g12(row.r.certified_lower)
           << ',' << verdict_name(row.r.verdict) << '\n';
    }
}

void emit_sandwich_json(std::ostream& os, int m, int n,
                        const std::vector<SandwichRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j;
        j["m"] = m;
        j["n"] = n;
        j["v0"] = row.v0;
        j["alpha"] = row.alpha;
        j["lambda0"] = row.r.lambda0;
        j["lambda"] = row.lambda;
        j["f_upper"] = row.r.f_upper;
        j["floor"] = row.r.lower_floor;
        j["model_value"] = row.r.model_value;
        j["certified_lower"] = row.r.certified_lower;
        j["grid_slack"] = row.r.grid_slack;
        j["verdict"] = verdict_name(row.r.verdict);
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

// model-strip plotting rows: lambda, v, model_value, certified_lower,
// f_upper, ratio
void emit_model_csv(std::ostream& os, const std::vector<SandwichRow>& rows) {
    os << "lambda,v,model_value,certified_lower,f_upper,ratio\n";
    for (const auto& row : rows) {
        os << g12(row.lambda) << ',' << g12(row.v0) << ','
           << g12(row.r.model_value) << ',' << g12(row.r.certified_lower)
           << ',' << g12(row.r.f_upper) << ','
           << g12(row.r.model_value / row.r.f_upper) << '\n';
    }
}

int run_profile(CommonOpts& o) {
    ProfileHandle p;
    load_factor(o.factor_m, o.m, o.samples, p);
    Output out(o.out);
    if (o.format == "json") {
        char* text = nullptr;
        check(isoprod_profile_to_json(p.p, &text));
        out.stream() << text << '\n';
        isoprod_string_free(text);
    } else {
        size_t count = 0;
        check(isoprod_profile_sample_count(p.p, &count));
        out.stream() << "volume,area\n";
        for (size_t i = 0; i < count; ++i) {
            double v = 0, a = 0;
            check(isoprod_profile_sample(p.p, i, &v, &a));
            out.stream() << g12(v) << ',' << g12(a) << '\n';
        }
    }
    return kExitOk;
}

int run_threshold(CommonOpts& o) {
    ProfileHandle phi, psi;
    load_factor(o.factor_m, o.m, o.samples, phi);
    load_factor(o.factor_n, o.n, o.samples, psi);
    StripHandle s;
    check(isoprod_strip_new(o.m, o.n, phi.p, psi.p, o.lambda, &s.s));
    double l0 = 0.0;
    check(isoprod_lambda0_threshold(s.s, o.v0, o.alpha, &l0));
    Output out(o.out);
    out.stream() << g12(l0) << '\n';
    return kExitOk;
}

int run_sandwich(CommonOpts& o, const std::string& model_csv,
                 const std::string& emit_path) {
    ProfileHandle phi, psi;
    load_factor(o.factor_m, o.m, o.samples, phi);
    load_factor(o.factor_n, o.n, o.samples, psi);
    const GridOpt grid = parse_grid(o.grid);
    const std::vector<double> lambdas = parse_range(o.lambda_range, o.lambda);

    std::vector<SandwichRow> rows(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        StripHandle s;
        check(isoprod_strip_new(o.m, o.n, phi.p, psi.p, lambdas[i], &s.s));
        rows[i].lambda = lambdas[i];
        rows[i].v0 = o.v0;
        rows[i].alpha = o.alpha;
        check(isoprod_sandwich_check(s.s, o.v0, o.alpha, grid.nx, grid.ny,
                                     &rows[i].r));
    }

    Output out(o.out);
    if (o.format == "json")
        emit_sandwich_json(out.stream(), o.m, o.n, rows);
    else
        emit_sandwich_csv(out.stream(), o.m, o.n, rows);
    if (!model_csv.empty()) {
        Output mc(model_csv);
        emit_model_csv(mc.stream(), rows);
    }
    if (!emit_path.empty()) {
        if (lambdas.size() != 1)
            throw CliError{kExitConfig, "--emit-path needs a single lambda"};
        StripHandle s;
        check(isoprod_strip_new(o.m, o.n, phi.p, psi.p, lambdas[0], &s.s));
        isoprod_model_result mr;
        isoprod_path* path = nullptr;
        check(isoprod_minimize_perimeter(s.s, o.v0, grid.nx, grid.ny, &mr,
                                         &path));
        char* text = nullptr;
        check(isoprod_path_to_json(path, &text));
        Output po(emit_path);
        po.stream() << text << '\n';
        isoprod_string_free(text);
        isoprod_path_free(path);
    }

    for (const auto& row : rows)
        if (row.r.verdict != ISOPROD_VERDICT_HOLDS) return kExitVerdict;
    return kExitOk;
}

int run_sweep(CommonOpts& o, const std::string& v0_range,
              const std::string& alpha_range) {
    ProfileHandle phi, psi;
    load_factor(o.factor_m, o.m, o.samples, phi);
    load_factor(o.factor_n, o.n, o.samples, psi);
    const GridOpt grid = parse_grid(o.grid);
    const std::vector<double> v0s = parse_range(v0_range, o.v0);
    const std::vector<double> alphas = parse_range(alpha_range, o.alpha);
    const std::vector<double> lambdas = parse_range(o.lambda_range, o.lambda);

    std::vector<SandwichRow> rows(v0s.size() * alphas.size() * lambdas.size());
    std::size_t idx = 0;
    for (const double v0 : v0s)
        for (const double alpha : alphas)
            for (const double lambda : lambdas) {
                rows[idx].v0 = v0;
                rows[idx].alpha = alpha;
                rows[idx].lambda = lambda;
                ++idx;
            }

    // worker pool; rows are written at their own index, so the emitted
    // order is independent of completion order
    std::atomic<std::size_t> next{0};
    std::atomic<int> failure{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= rows.size()) return;
            StripHandle s;
            isoprod_status st = isoprod_strip_new(o.m, o.n, phi.p, psi.p,
                                                  rows[k].lambda, &s.s);
            if (st == ISOPROD_OK)
                st = isoprod_sandwich_check(s.s, rows[k].v0, rows[k].alpha,
                                            grid.nx, grid.ny, &rows[k].r);
            if (st != ISOPROD_OK)
                failure.store(st == ISOPROD_ERR_NO_CONVERGENCE
                                  ? kExitNoConvergence
                                  : kExitConfig);
        }
    };
    const int nthreads = std::min<std::size_t>(thread_budget(), rows.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure.load() != 0) throw CliError{failure.load(), isoprod_last_error()};

    Output out(o.out);
    if (o.format == "json")
        emit_sandwich_json(out.stream(), o.m, o.n, rows);
    else
        emit_sandwich_csv(out.stream(), o.m, o.n, rows);

    for (const auto& row : rows)
        if (row.r.verdict != ISOPROD_VERDICT_HOLDS) return kExitVerdict;
    return kExitOk;
}

int run_stability(CommonOpts& o, double r0, double mu1,
                  const std::string& manifold, int resolution, double vn) {
    double mu = mu1;
    double mu_err = 0.0;
    if (!manifold.empty()) {
        // sphere:DIM:RADIUS or torus:DIM:SIDE
        std::istringstream is(manifold);
        std::string kind, a, b;
        std::getline(is, kind, ':');
        std::getline(is, a, ':');
        std::getline(is, b);
        int dim = 0;
        double size = 0;
        try {
            dim = std::stoi(a);
            size = std::stod(b);
        } catch (...) {
            throw CliError{kExitConfig, "--N-manifold must be kind:dim:size"};
        }
        if (kind == "sphere")
            check(isoprod_mu1_round_sphere(dim, size, resolution, &mu, &mu_err));
        else if (kind == "torus")
            check(isoprod_mu1_flat_torus(dim, size, resolution, &mu, &mu_err));
        else
            throw CliError{kExitConfig, "--N-manifold kind must be sphere|torus"};
    }
    if (mu <= 0.0)
        throw CliError{kExitConfig, "provide --mu1 > 0 or --N-manifold"};

    isoprod_stability_report rep;
    check(isoprod_stability(o.m, o.n, r0, vn, o.lambda, mu, &rep));

    nlohmann::json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["r0"] = r0;
    j["lambda"] = o.lambda;
    j["mu1"] = rep.mu1;
    if (!manifold.empty()) j["mu1_error_estimate"] = mu_err;
    j["margin"] = rep.margin;
    j["threshold_lambda"] = rep.threshold_lambda;
    j["strictly_stable"] = rep.strictly_stable != 0;
    Output out(o.out);
    out.stream() << j.dump(2) << '\n';
    return kExitOk;
}

int run_oracle(CommonOpts& o, int trials) {
    ProfileHandle phi, psi;
    load_factor(o.factor_m, o.m, o.samples, phi);
    load_factor(o.factor_n, o.n, o.samples, psi);
    StripHandle s;
    check(isoprod_strip_new(o.m, o.n, phi.p, psi.p, o.lambda, &s.s));

    bool all_ok = true;
    nlohmann::json j;

    isoprod_oracle_report fuzz;
    char* worst = nullptr;
    check(isoprod_fuzz_symmetrization(s.s, trials, o.seed, &fuzz, &worst));
    j["fuzz_symmetrization"] = {{"trials", fuzz.case_count},
                                {"max_abs_deviation", fuzz.max_abs_deviation},
                                {"passed", fuzz.passed != 0}};
    if (worst && worst[0] != '\0')
        j["fuzz_symmetrization"]["worst_case"] =
            nlohmann::json::parse(worst, nullptr, false);
    isoprod_string_free(worst);
    all_ok = all_ok && fuzz.passed;

    for (const int m : {2, 3}) {
        isoprod_oracle_report q;
        check(isoprod_quadrature_crosscheck(m, 48, &q));
        j["quadrature_crosscheck_m" + std::to_string(m)] = {
            {"cases", q.case_count},
            {"max_abs_deviation", q.max_abs_deviation},
            {"passed", q.passed != 0}};
        all_ok = all_ok && q.passed;
    }

    // minimizer vs exhaustive enumeration on small random instances
    {
        std::uint64_t state = o.seed ^ 0x9e3779b97f4a7c15ULL;
        auto rnd = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        int agree = 0;
        const int cases = 25;
        double worst_dev = 0.0;
        for (int k = 0; k < cases; ++k) {
            const int nx = 4 + int(rnd() % 3), ny = 4 + int(rnd() % 3);
            const double frac = 0.05 + 0.9 * double(rnd() % 1000) / 1000.0;
            double vm = 0, vn = 0;
            check(isoprod_profile_total_volume(phi.p, &vm));
            check(isoprod_profile_total_volume(psi.p, &vn));
            const double v = frac * vm * vn;
            double bf = 0;
            check(isoprod_brute_force_min(s.s, v, nx, ny, &bf));
            isoprod_model_result mr;
            check(isoprod_minimize_perimeter(s.s, v, nx, ny, &mr, nullptr));
            const double dev = std::abs(mr.value - bf);
            worst_dev = std::max(worst_dev, dev);
            agree += (dev == 0.0);
        }
        j["dp_vs_enumeration"] = {{"cases", cases},
                                  {"exact_agreements", agree},
                                  {"max_abs_deviation", worst_dev},
                                  {"passed", agree == cases}};
        all_ok = all_ok && (agree == cases);
    }

    j["passed"] = all_ok;
    Output out(o.out);
    out.stream() << j.dump(2) << '\n';
    return all_ok ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isoperimetric profiles of warped products: model-strip "
                 "minimization, sandwich bounds, cylinder stability"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string v0_range, alpha_range, model_csv, emit_path, manifold;
    double r0 = M_PI / 2, mu1 = 0.0, vn_cyl = 0.0;
    int resolution = 128, trials = 1000;

    CLI::App* profile = app.add_subcommand("profile", "emit profile samples");
    add_factor_flags(profile, o);
    profile->add_option("--out", o.out, "output file (default stdout)");
    profile->add_option("--format", o.format, "csv|json");

    CLI::App* sandwich =
        app.add_subcommand("sandwich", "evaluate the sandwich over lambda");
    add_factor_flags(sandwich, o);
    sandwich->add_option("--v0", o.v0, "target volume in (0, VM*VN)");
    sandwich->add_option("--alpha", o.alpha, "alpha in (3/4, 1)");
    sandwich->add_option("--lambda", o.lambda, "single lambda");
    sandwich->add_option("--lambda-range", o.lambda_range, "lo:hi:steps");
    sandwich->add_option("--grid", o.grid, "DP grid NxM");
    sandwich->add_option("--out", o.out, "output file");
    sandwich->add_option("--format", o.format, "csv|json");
    sandwich->add_option("--model-csv", model_csv,
                         "also emit model-strip plotting rows");
    sandwich->add_option("--emit-path", emit_path,
                         "export the optimal path as JSON (single lambda)");

    CLI::App* threshold =
        app.add_subcommand("threshold", "print the lambda0 threshold");
    add_factor_flags(threshold, o);
    threshold->add_option("--v0", o.v0, "target volume");
    threshold->add_option("--alpha", o.alpha, "alpha in (3/4, 1)");
    threshold->add_option("--out", o.out, "output file");

    CLI::App* stability =
        app.add_subcommand("stability", "cylinder stability report");
    stability->add_option("--m", o.m, "dimension of the sphere factor");
    stability->add_option("--n", o.n, "dimension of N");
    stability->add_option("--r0", r0, "cap radius in (0, pi)");
    stability->add_option("--lambda", o.lambda, "lambda");
    stability->add_option("--mu1", mu1, "first positive Laplace eigenvalue");
    stability->add_option("--N-manifold", manifold,
                          "estimate mu1: sphere:dim:radius | torus:dim:side");
    stability->add_option("--resolution", resolution, "mu1 oracle resolution");
    stability->add_option("--vn", vn_cyl, "V_N (defaults to 1)");
    stability->add_option("--out", o.out, "output file");
    stability->add_option("--config", o.config, "JSON config file");

    CLI::App* sweep = app.add_subcommand("sweep", "cross (v0, alpha, lambda)");
    add_factor_flags(sweep, o);
    sweep->add_option("--v0", o.v0, "single v0");
    sweep->add_option("--v0-range", v0_range, "lo:hi:steps");
    sweep->add_option("--alpha", o.alpha, "single alpha");
    sweep->add_option("--alpha-range", alpha_range, "lo:hi:steps");
    sweep->add_option("--lambda", o.lambda, "single lambda");
    sweep->add_option("--lambda-range", o.lambda_range, "lo:hi:steps");
    sweep->add_option("--grid", o.grid, "DP grid NxM");
    sweep->add_option("--out", o.out, "output file");
    sweep->add_option("--format", o.format, "csv|json");
    sweep->add_option("--seed", o.seed, "seed (recorded, sweep is deterministic)");

    CLI::App* oracle =
        app.add_subcommand("oracle", "run the verification harnesses");
    add_factor_flags(oracle, o);
    oracle->add_option("--lambda", o.lambda, "lambda for the fuzz config");
    oracle->add_option("--trials", trials, "fuzz trial count");
    oracle->add_option("--seed", o.seed, "fuzz seed");
    oracle->add_option("--out", o.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        ConfigFile cf;
        if (!o.config.empty()) cf.load(o.config);
        CLI::App* active = app.get_subcommands().front();
        merge_common(*active, cf, o);
        cf.fill(*active, "--v0-range", v0_range);
        cf.fill(*active, "--alpha-range", alpha_range);
        cf.fill(*active, "--r0", r0);
        cf.fill(*active, "--mu1", mu1);
        cf.fill(*active, "--resolution", resolution);
        cf.fill(*active, "--trials", trials);

        if (profile->parsed()) return run_profile(o);
        if (sandwich->parsed()) return run_sandwich(o, model_csv, emit_path);
        if (threshold->parsed()) return run_threshold(o);
        if (stability->parsed())
            return run_stability(o, r0, mu1, manifold, resolution,
                                 vn_cyl > 0 ? vn_cyl : 1.0);
        if (sweep->parsed()) return run_sweep(o, v0_range, alpha_range);
        if (oracle->parsed()) return run_oracle(o, trials);
        return kExitConfig;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
