#include "isoprod/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace isoprod {

namespace {

constexpr int kMaxDenseNodes = 4200;

// Second-smallest eigenvalue: the constant mode is the unique kernel of
// both discretizations, so the first positive eigenvalue sits at index 1.
double second_eigenvalue(const Eigen::VectorXd& evs) {
    if (evs.size() < 2) throw std::runtime_error("mu1: eigensolve too small");
    return evs[1];
}

double sphere_mu1_at(int dim, double radius, int intervals) {
    const int n = intervals;           // elements over (0, pi)
    const int nodes = n + 1;
    if (nodes > kMaxDenseNodes)
        throw std::invalid_argument("mu1_round_sphere: resolution above dense cap");
    const double h = M_PI / n;
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(nodes, nodes);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(nodes, nodes);
    // P1 elements with 2-point Gauss for the sin^{n-1} weight
    const double g0 = 0.5 - 0.5 / std::sqrt(3.0);
    const double g1 = 0.5 + 0.5 / std::sqrt(3.0);
    for (int e = 0; e < n; ++e) {
        const double a = e * h;
        auto w = [&](double t) { return std::pow(std::sin(a + t * h), dim - 1); };
        const double w0 = w(g0), w1 = w(g1);
        const double We = 0.5 * h * (w0 + w1);
        const double kloc = We / (h * h);
        K(e, e) += kloc;
        K(e + 1, e + 1) += kloc;
        K(e, e + 1) -= kloc;
        K(e + 1, e) -= kloc;
        // consistent mass with hat products at the two Gauss points
        const double m00 = 0.5 * h * (w0 * (1 - g0) * (1 - g0) + w1 * (1 - g1) * (1 - g1));
        const double m11 = 0.5 * h * (w0 * g0 * g0 + w1 * g1 * g1);
        const double m01 = 0.5 * h * (w0 * (1 - g0) * g0 + w1 * (1 - g1) * g1);
        M(e, e) += m00;
        M(e + 1, e + 1) += m11;
        M(e, e + 1) += m01;
        M(e + 1, e) += m01;
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(K, M);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("mu1_round_sphere: eigensolver failed");
    return second_eigenvalue(es.eigenvalues()) / (radius * radius);
}

double torus_mu1_at(int dim, double side, int res) {
    std::int64_t nodes = 1;
    for (int d = 0; d < dim; ++d) nodes *= res;
    if (nodes > kMaxDenseNodes)
        throw std::invalid_argument("mu1_flat_torus: resolution above dense cap");
    const double h = side / res;
    const double inv_h2 = 1.0 / (h * h);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nodes, nodes);
    // periodic central differences on the d-dimensional grid
    std::vector<int> stride(dim, 1);
    for (int d = 1; d < dim; ++d) stride[d] = stride[d - 1] * res;
    for (std::int64_t p = 0; p < nodes; ++p) {
        for (int d = 0; d < dim; ++d) {
            const int coord = int(p / stride[d]) % res;
            const std::int64_t up =
                p + std::int64_t((coord + 1) % res - coord) * stride[d];
            const std::int64_t dn =
                p + std::int64_t((coord - 1 + res) % res - coord) * stride[d];
            A(p, p) += 2.0 * inv_h2;
            A(p, up) -= inv_h2;
            A(p, dn) -= inv_h2;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("mu1_flat_torus: eigensolver failed");
    return second_eigenvalue(es.eigenvalues());
}

}  // namespace

Mu1Estimate mu1_round_sphere(int dim, double radius, int resolution) {
    if (dim < 1) throw std::invalid_argument("mu1_round_sphere: dim < 1");
    if (!(radius > 0)) throw std::invalid_argument("mu1_round_sphere: radius <= 0");
    if (resolution < 8)
        throw std::invalid_argument("mu1_round_sphere: resolution < 8");
    Mu1Estimate e;
    e.resolution = resolution;
    e.mu1 = sphere_mu1_at(dim, radius, resolution);
    e.error_estimate = std::abs(e.mu1 - sphere_mu1_at(dim, radius, resolution / 2));
    return e;
}

Mu1Estimate mu1_flat_torus(int dim, double side, int resolution) {
    if (dim < 1) throw std::invalid_argument("mu1_flat_torus: dim < 1");
    if (!(side > 0)) throw std::invalid_argument("mu1_flat_torus: side <= 0");
    if (resolution < 8)
        throw std::invalid_argument("mu1_flat_torus: resolution < 8");
    Mu1Estimate e;
    e.resolution = resolution;
    e.mu1 = torus_mu1_at(dim, side, resolution);
    e.error_estimate = std::abs(e.mu1 - torus_mu1_at(dim, side, resolution / 2));
    return e;
}

}  // namespace isoprod
