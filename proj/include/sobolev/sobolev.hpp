#ifndef SOBOLEV_SOBOLEV_HPP
#define SOBOLEV_SOBOLEV_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "errors.hpp"
#include "kernels.hpp"
#include "laguerre.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "spec.hpp"

namespace sobolev {

/// D f = (f^(nu_1)(c_1), ..., f^(nu_M)(c_M)).
template <Field T>
std::vector<T> dvec(const SobolevSpec<T>& spec, const Poly<T>& p) {
    std::vector<T> out;
    out.reserve(spec.size());
    for (const auto& m : spec.masses()) out.push_back(p.derivative(m.nu)(m.c));
    return out;
}

/// <f, g> = <u_alpha, f g> + (D f)^T diag(mu) (D g).
template <Field T>
T sobolev_inner(const SobolevSpec<T>& spec, const Poly<T>& f, const Poly<T>& g) {
    T acc = MomentFunctional<T>(spec.alpha()).apply(f * g);
    const auto df = dvec(spec, f);
    const auto dg = dvec(spec, g);
    for (std::size_t i = 0; i < spec.size(); ++i) acc += df[i] * spec.masses()[i].mu * dg[i];
    return acc;
}

template <Field T>
struct RegularityRecord {
    std::size_t n = 0;
    bool invertible = true;
    T determinant = T(1);  // det(I + D K_{n-1}); 1 for n = 0
};

/*
 * Sobolev orthogonal polynomials S_n (written L_n^{alpha,mu} in the
 * literature) for a fixed spec, normalized to the leading coefficient
 * (-1)^n / n! of L_n^alpha.
 *
 * poly(n) uses the compact connection formula
 *   S_n = L_n - LL_n^T (I + D K_{n-1})^{-1} D K_{n-1}(x)
 * with closed-form kernels. via_fourier(n) solves for the values D S_n and
 * sums mu_j (S_n)^(nu_j)(c_j) K_{n-1}^{(0,nu_j)}(x, c_j) with term-by-term
 * kernels. A singular I + D K_{n-1} throws NonexistentDegreeError for that n
 * only; other degrees are unaffected.
 *
 * Copies share the cache. Concurrent calls are safe; two threads may both
 * build the same degree, and the second result is discarded.
 */
template <Field T>
class SobolevFamily {
public:
    explicit SobolevFamily(SobolevSpec<T> spec)
        : spec_(std::move(spec)), laguerre_(spec_.alpha()), cache_(std::make_shared<Cache>()) {}

    const SobolevSpec<T>& spec() const noexcept { return spec_; }
    const LaguerreFamily<T>& laguerre() const noexcept { return laguerre_; }

    /// I + D K_{n-1}, or the empty matrix when no system is needed.
    Matrix<T> system_matrix(std::size_t n) const {
        const std::size_t m = spec_.size();
        if (n == 0) return Matrix<T>::identity(m);
        const auto km = kernel_matrix<T>(laguerre_, spec_.masses(), n - 1);
        Matrix<T> a = Matrix<T>::identity(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a(i, j) += spec_.masses()[i].mu * km.entries(i, j);
        return a;
    }

    RegularityRecord<T> regularity(std::size_t n) const {
        RegularityRecord<T> r{n, true, T(1)};
        if (n == 0 || spec_.size() == 0) return r;
        r.determinant = determinant(system_matrix(n));
        r.invertible = !is_zero(r.determinant);
        return r;
    }

    std::vector<RegularityRecord<T>> regularity_report(std::size_t up_to) const {
        std::vector<RegularityRecord<T>> out;
        for (std::size_t n = 0; n <= up_to; ++n) out.push_back(regularity(n));
        return out;
    }

    bool exists(std::size_t n) const { return regularity(n).invertible; }

    Poly<T> poly(std::size_t n) const {
        {
            std::shared_lock lock(cache_->mutex);
            if (auto it = cache_->polys.find(n); it != cache_->polys.end()) return it->second;
        }
        Poly<T> p = compact_formula(n);
        std::unique_lock lock(cache_->mutex);
        return cache_->polys.emplace(n, std::move(p)).first->second;
    }

    Poly<T> via_fourier(std::size_t n) const {
        const auto& ln = laguerre_.poly(n);
        if (n == 0 || n < spec_.min_order() || spec_.all_masses_zero()) return ln;
        const std::size_t m = spec_.size();
        const auto km = kernel_matrix_sum<T>(laguerre_, spec_.masses(), n - 1);
        // (I + K^T D^T) S = LL
        Matrix<T> a = Matrix<T>::identity(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a(i, j) += km.entries(j, i) * spec_.masses()[j].mu;
        const auto values = solve_or_throw(n, a, Matrix<T>::column(dvec(spec_, ln)));
        const auto kx = kernel_vector_sum<T>(laguerre_, spec_.masses(), n - 1);
        Poly<T> s = ln;
        for (std::size_t j = 0; j < m; ++j) s -= (spec_.masses()[j].mu * values.x(j, 0)) * kx[j];
        return s;
    }

private:
    struct Cache {
        mutable std::shared_mutex mutex;
        std::map<std::size_t, Poly<T>> polys;
    };

    LinearSolution<T> solve_or_throw(std::size_t n, const Matrix<T>& a, const Matrix<T>& b) const {
        try {
            return solve(a, b);
        } catch (const SingularSystemError&) {
            throw NonexistentDegreeError(n, to_string(determinant(a)), a.rendered());
        }
    }

    Poly<T> compact_formula(std::size_t n) const {
        const auto& ln = laguerre_.poly(n);
        // below nu_1 every derivative in D of a degree < n polynomial vanishes
        if (n == 0 || n < spec_.min_order() || spec_.all_masses_zero()) return ln;
        const std::size_t m = spec_.size();
        Matrix<T> d(m, m);
        for (std::size_t i = 0; i < m; ++i) d(i, i) = spec_.masses()[i].mu;
        // X = (I + D K_{n-1})^{-1} D
        const auto x = solve_or_throw(n, system_matrix(n), d).x;
        const auto kx = kernel_vector<T>(laguerre_, spec_.masses(), n - 1);
        const auto ll = dvec(spec_, ln);
        Poly<T> s = ln;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const T w = ll[i] * x(i, j);
                if (!is_zero(w)) s -= w * kx[j];
            }
        }
        return s;
    }

    SobolevSpec<T> spec_;
    LaguerreFamily<T> laguerre_;
    std::shared_ptr<Cache> cache_;
};

/// <x^i, x^j> in the Sobolev inner product.
template <Field T>
T monomial_inner(const SobolevSpec<T>& spec, std::size_t i, std::size_t j) {
    T acc = pochhammer(spec.alpha() + T(1), i + j);
    for (const auto& m : spec.masses()) {
        if (m.nu > i || m.nu > j) continue;
        const Poly<T> xi = Poly<T>::monomial(i).derivative(m.nu);
        const Poly<T> xj = Poly<T>::monomial(j).derivative(m.nu);
        acc += m.mu * xi(m.c) * xj(m.c);
    }
    return acc;
}

/// Degree-n polynomial orthogonal to 1, x, ..., x^{n-1} under the Sobolev
/// inner product, obtained from the monomial Gram system. Independent of
/// every kernel routine.
template <Field T>
Poly<T> gram_schmidt_oracle(const SobolevSpec<T>& spec, std::size_t n) {
    const T lead = LaguerreFamily<T>(spec.alpha()).leading(n);
    if (n == 0) return Poly<T>::constant(lead);
    Matrix<T> g(n, n);
    Matrix<T> rhs(n, 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) g(r, c) = monomial_inner(spec, c, r);
        rhs(r, 0) = -lead * monomial_inner(spec, n, r);
    }
    LinearSolution<T> sol;
    try {
        sol = solve(g, rhs);
    } catch (const SingularSystemError&) {
        throw SingularSystemError("Sobolev Gram matrix singular at degree " + std::to_string(n));
    }
    std::vector<T> cs = sol.x.column_values(0);
    cs.push_back(lead);
    return Poly<T>(std::move(cs));
}

/*
 * Pointwise evaluation of S_n without monomial coefficients: every Laguerre
 * value comes from the three-term recurrence and derivatives at the mass
 * points from L_r^{(nu)} = (-1)^nu L_{r-nu}^{alpha+nu}. Then
 *   S_n(x) = L_n(x) - sum_{r<n} beta_r L_r(x),
 *   beta_r = sum_j mu_j (S_n)^(nu_j)(c_j) L_r^{(nu_j)}(c_j) / d_r^2.
 * This is the float-backend evaluation path.
 */
template <Field T>
class SobolevEvaluator {
public:
    explicit SobolevEvaluator(SobolevSpec<T> spec) : spec_(std::move(spec)), laguerre_(spec_.alpha()) {}

    /// beta_0, ..., beta_{n-1}.
    std::vector<T> correction(std::size_t n) const {
        std::vector<T> beta(n, T(0));
        if (n == 0 || n < spec_.min_order() || spec_.all_masses_zero()) return beta;
        const auto& ms = spec_.masses();
        const std::size_t m = ms.size();
        // deriv[j][r] = L_r^{(nu_j)}(c_j), r = 0..n
        std::vector<std::vector<T>> deriv(m, std::vector<T>(n + 1, T(0)));
        for (std::size_t j = 0; j < m; ++j) {
            if (ms[j].nu > n) continue;
            const auto v = laguerre_values(spec_.alpha() + T(static_cast<long>(ms[j].nu)), n - ms[j].nu, ms[j].c);
            const T sign = ms[j].nu % 2 == 0 ? T(1) : T(-1);
            for (std::size_t r = ms[j].nu; r <= n; ++r) deriv[j][r] = sign * v[r - ms[j].nu];
        }
        std::vector<T> norms(n);
        for (std::size_t r = 0; r < n; ++r) norms[r] = laguerre_.squared_norm(r);
        Matrix<T> a = Matrix<T>::identity(m);
        Matrix<T> rhs(m, 1);
        for (std::size_t i = 0; i < m; ++i) {
            rhs(i, 0) = deriv[i][n];
            for (std::size_t j = 0; j < m; ++j) {
                T k(0);
                for (std::size_t r = 0; r < n; ++r) k += deriv[i][r] * deriv[j][r] / norms[r];
                a(i, j) += k * ms[j].mu;
            }
        }
        LinearSolution<T> sol;
        try {
            sol = solve(a, rhs);
        } catch (const SingularSystemError&) {
            throw NonexistentDegreeError(n, to_string(determinant(a)), a.rendered());
        }
        for (std::size_t r = 0; r < n; ++r) {
            T acc(0);
            for (std::size_t j = 0; j < m; ++j) acc += ms[j].mu * sol.x(j, 0) * deriv[j][r];
            beta[r] = acc / norms[r];
        }
        return beta;
    }

    T evaluate(std::size_t n, const T& x) const { return evaluate(n, correction(n), x); }

    /// Reuses a correction vector across many points.
    T evaluate(std::size_t n, const std::vector<T>& beta, const T& x) const {
        const auto v = laguerre_values(spec_.alpha(), n, x);
        T acc = v[n];
        for (std::size_t r = 0; r < n; ++r) acc -= beta[r] * v[r];
        return acc;
    }

private:
    SobolevSpec<T> spec_;
    LaguerreFamily<T> laguerre_;
};

}  // namespace sobolev

#endif
