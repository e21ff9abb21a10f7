#ifndef SOBOLEV_QUADRATURE_HPP
#define SOBOLEV_QUADRATURE_HPP

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "laguerre.hpp"

namespace sobolev {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/*
 * n-point Gauss rule for x^alpha e^{-x} / Gamma(alpha + 1) on (0, inf).
 *
 * Nodes are the eigenvalues of the Jacobi matrix (diagonal 2k + alpha + 1,
 * off-diagonal sqrt(k (k + alpha))), polished by Newton steps on L_n^alpha.
 * Weights are 1 / K_{n-1}(x_i, x_i), which keeps the tiny weights of the
 * largest nodes accurate in relative terms.
 */
inline QuadratureRule gauss_laguerre(double alpha, std::size_t n_nodes) {
    if (!(alpha > -1.0)) throw PreconditionError("Gauss-Laguerre needs alpha > -1");
    if (n_nodes == 0) throw PreconditionError("Gauss-Laguerre needs at least one node");

    Eigen::VectorXd diag(n_nodes);
    Eigen::VectorXd sub(n_nodes > 1 ? n_nodes - 1 : 0);
    for (std::size_t k = 0; k < n_nodes; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (std::size_t k = 1; k < n_nodes; ++k) sub[k - 1] = std::sqrt(k * (k + alpha));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("tridiagonal eigensolver did not converge");
    }

    QuadratureRule rule;
    const double nn = static_cast<double>(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        double x = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
        for (int it = 0; it < 3 && n_nodes > 1; ++it) {
            const auto v = laguerre_values(alpha, n_nodes, x);
            // x L_n' = n L_n - (n + alpha) L_{n-1}
            const double dv = (nn * v[n_nodes] - (nn + alpha) * v[n_nodes - 1]) / x;
            x -= v[n_nodes] / dv;
        }
        const auto v = laguerre_values(alpha, n_nodes - 1, x);
        double k = 0.0;
        double norm = 1.0;  // d_j^2 = (alpha+1)_j / j!
        for (std::size_t j = 0; j < n_nodes; ++j) {
            if (j > 0) norm *= (alpha + static_cast<double>(j)) / static_cast<double>(j);
            k += v[j] * v[j] / norm;
        }
        rule.nodes.push_back(x);
        rule.weights.push_back(1.0 / k);
    }
    return rule;
}

}  // namespace sobolev

#endif
