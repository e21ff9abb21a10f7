#ifndef SOBOLEV_KERNELS_HPP
#define SOBOLEV_KERNELS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "laguerre.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "spec.hpp"

namespace sobolev {

// Reproducing kernels K_n(x, y) = sum_{r<=n} L_r(x) L_r(y) / d_r^2 of the
// Laguerre family and their partial derivatives
// K_n^{(j,k)}(x, y) = d^j/dx^j d^k/dy^k K_n(x, y). All data is real.

/// The literal sum. Reference oracle for the closed forms below.
template <Field T>
T kernel_sum(const LaguerreFamily<T>& fam, std::size_t n, const T& x, const T& y) {
    T acc(0);
    for (std::size_t r = 0; r <= n; ++r) {
        const auto& p = fam.poly(r);
        acc += p(x) * p(y) / fam.squared_norm(r);
    }
    return acc;
}

/// k_n / (k_{n+1} d_n^2), the Christoffel-Darboux constant.
template <Field T>
T christoffel_darboux_constant(const LaguerreFamily<T>& fam, std::size_t n) {
    return fam.leading(n) / (fam.leading(n + 1) * fam.squared_norm(n));
}

/// Christoffel-Darboux quotient; at x == y the confluent (derivative) form.
template <Field T>
T kernel_cd(const LaguerreFamily<T>& fam, std::size_t n, const T& x, const T& y) {
    const T cst = christoffel_darboux_constant(fam, n);
    const auto& p = fam.poly(n);
    const auto& q = fam.poly(n + 1);
    if (x == y) {
        return cst * (q.derivative()(x) * p(x) - p.derivative()(x) * q(x));
    }
    return cst * (q(x) * p(y) - p(x) * q(y)) / (x - y);
}

/// Term-by-term K_n^{(j,k)}(x, y). Reference oracle.
template <Field T>
T kernel_partial(const LaguerreFamily<T>& fam, std::size_t n, std::size_t j, std::size_t k, const T& x,
                 const T& y) {
    T acc(0);
    for (std::size_t r = std::max(j, k); r <= n; ++r) {
        const auto& p = fam.poly(r);
        acc += p.derivative(j)(x) * p.derivative(k)(y) / fam.squared_norm(r);
    }
    return acc;
}

/*
 * x -> K_n^{(0,k)}(x, y) as a polynomial, from the differentiated
 * Christoffel-Darboux formula
 *
 *   K_n^{(0,k)}(x, y) = C k! (L_{n+1}(x) [L_n(x; y)]_k - L_n(x) [L_{n+1}(x; y)]_k) / (x - y)^{k+1}
 *
 * with [.]_k the Taylor polynomial of degree k centred at y. The numerator
 * is divisible by (x - y)^{k+1} as a polynomial in x; on the exact backend
 * the zero remainder is asserted. Because the quotient is a polynomial the
 * result is also valid at x == y.
 */
template <Field T>
Poly<T> kernel_partial_poly(const LaguerreFamily<T>& fam, std::size_t n, std::size_t k, const T& y) {
    const auto& p = fam.poly(n);
    const auto& q = fam.poly(n + 1);
    const Poly<T> numerator = q * taylor_truncate(p, y, k) - p * taylor_truncate(q, y, k);
    if (numerator.is_zero()) return {};
    const Poly<T> quotient = exact_div(numerator, pow(Poly<T>::linear_root(y), k + 1));
    return (christoffel_darboux_constant(fam, n) * factorial<T>(k)) * quotient;
}

/// K_n^{(0,k)}(x, y) through kernel_partial_poly.
template <Field T>
T kernel_partial_cd(const LaguerreFamily<T>& fam, std::size_t n, std::size_t k, const T& x, const T& y) {
    return kernel_partial_poly(fam, n, k, y)(x);
}

/// K_n^{(j,k)}(x, y) by differentiating the closed-form polynomial in x.
template <Field T>
T kernel_partial_cd(const LaguerreFamily<T>& fam, std::size_t n, std::size_t j, std::size_t k, const T& x,
                    const T& y) {
    return kernel_partial_poly(fam, n, k, y).derivative(j)(x);
}

/// (L_n^{(j)}(c))^2 / d_n^2 == K_n^{(j,j)}(c, c) - K_{n-1}^{(j,j)}(c, c),
/// right-hand side through the closed form.
template <Field T>
bool telescoping_identity_check(const LaguerreFamily<T>& fam, std::size_t n, std::size_t j, const T& c) {
    if (n == 0) throw PreconditionError("telescoping identity needs n >= 1");
    const T v = fam.poly(n).derivative(j)(c);
    const T lhs = v * v / fam.squared_norm(n);
    const T rhs = kernel_partial_cd(fam, n, j, j, c, c) - kernel_partial_cd(fam, n - 1, j, j, c, c);
    return lhs == rhs;
}

/// Entry (i, j) = K_n^{(nu_i, nu_j)}(c_i, c_j).
template <Field T>
struct KernelMatrix {
    std::size_t n = 0;
    Matrix<T> entries;
};

/// Vector entry i is the polynomial x -> K_n^{(0, nu_i)}(x, c_i) (closed form).
template <Field T>
std::vector<Poly<T>> kernel_vector(const LaguerreFamily<T>& fam, std::span<const MassPoint<T>> masses,
                                   std::size_t n) {
    std::vector<Poly<T>> out;
    out.reserve(masses.size());
    for (const auto& m : masses) out.push_back(kernel_partial_poly(fam, n, m.nu, m.c));
    return out;
}

/// Same polynomials assembled from the sum sum_r L_r(x) L_r^{(nu)}(c) / d_r^2.
template <Field T>
std::vector<Poly<T>> kernel_vector_sum(const LaguerreFamily<T>& fam, std::span<const MassPoint<T>> masses,
                                       std::size_t n) {
    std::vector<Poly<T>> out;
    for (const auto& m : masses) {
        Poly<T> acc;
        for (std::size_t r = m.nu; r <= n; ++r) {
            const auto& p = fam.poly(r);
            acc += (p.derivative(m.nu)(m.c) / fam.squared_norm(r)) * p;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

template <Field T>
KernelMatrix<T> kernel_matrix(const LaguerreFamily<T>& fam, std::span<const MassPoint<T>> masses, std::size_t n) {
    const auto columns = kernel_vector(fam, masses, n);
    KernelMatrix<T> km{n, Matrix<T>(masses.size(), masses.size())};
    for (std::size_t i = 0; i < masses.size(); ++i)
        for (std::size_t j = 0; j < masses.size(); ++j)
            km.entries(i, j) = columns[j].derivative(masses[i].nu)(masses[i].c);
    return km;
}

/// kernel_matrix from the term-by-term oracle.
template <Field T>
KernelMatrix<T> kernel_matrix_sum(const LaguerreFamily<T>& fam, std::span<const MassPoint<T>> masses,
                                  std::size_t n) {
    KernelMatrix<T> km{n, Matrix<T>(masses.size(), masses.size())};
    for (std::size_t i = 0; i < masses.size(); ++i)
        for (std::size_t j = 0; j < masses.size(); ++j)
            km.entries(i, j) = kernel_partial(fam, n, masses[i].nu, masses[j].nu, masses[i].c, masses[j].c);
    return km;
}

}  // namespace sobolev

#endif
