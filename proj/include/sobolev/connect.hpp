#ifndef SOBOLEV_CONNECT_HPP
#define SOBOLEV_CONNECT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laguerre.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "sobolev.hpp"
#include "spec.hpp"

namespace sobolev {

/// zeta_0 = 1, zeta_1, ..., zeta_nu = zeta with deg zeta_k = k and
/// zeta_k | zeta_{k+1}.
template <Field T>
struct ZetaLadder {
    std::vector<Poly<T>> factors;
    std::vector<T> roots;  // roots[k] is the root added going from zeta_k to zeta_{k+1}

    std::size_t nu() const { return factors.size() - 1; }
    const Poly<T>& zeta() const { return factors.back(); }
    const Poly<T>& operator[](std::size_t k) const { return factors[k]; }
};

/*
 * Minimal-degree polynomial zeta with D(zeta q) = 0 for every q: each
 * distinct location c contributes (x - c)^{nu_max(c) + 1}, where nu_max(c)
 * is the highest derivative order attached to c. The ladder adds one linear
 * factor at a time, locations ascending, repeated factors consecutive.
 */
template <Field T>
ZetaLadder<T> build_zeta(const SobolevSpec<T>& spec) {
    std::map<T, std::size_t> top;
    for (const auto& m : spec.masses()) {
        auto [it, inserted] = top.emplace(m.c, m.nu);
        if (!inserted) it->second = std::max(it->second, m.nu);
    }
    ZetaLadder<T> ladder;
    ladder.factors.push_back(Poly<T>::constant(T(1)));
    for (const auto& [c, nu] : top) {
        for (std::size_t k = 0; k <= nu; ++k) {
            ladder.factors.push_back(ladder.factors.back() * Poly<T>::linear_root(c));
            ladder.roots.push_back(c);
        }
    }
    return ladder;
}

/// <zeta f, g> == <u, zeta f g> == <f, zeta g>.
template <Field T>
bool zeta_adjoint_check(const SobolevSpec<T>& spec, const Poly<T>& zeta, const Poly<T>& f, const Poly<T>& g) {
    const T left = sobolev_inner(spec, zeta * f, g);
    const T middle = MomentFunctional<T>(spec.alpha()).apply(zeta * f * g);
    const T right = sobolev_inner(spec, f, zeta * g);
    return left == middle && middle == right;
}

/*
 * Polynomials orthogonal with respect to modifier * u_alpha, with the
 * leading coefficient (-1)^n / n! of L_n^alpha. Built by solving the
 * modified-moment Gram system; cached like the other families.
 */
template <Field T>
class ModifiedFamily {
public:
    ModifiedFamily(T alpha, Poly<T> modifier)
        : functional_(std::move(alpha)), modifier_(std::move(modifier)), cache_(std::make_shared<Cache>()) {}

    const Poly<T>& modifier() const noexcept { return modifier_; }

    /// m'_k = <u_alpha, modifier x^k>
    T moment(std::size_t k) const {
        T acc(0);
        const auto cs = modifier_.coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) acc += cs[i] * functional_.moment(i + k);
        return acc;
    }

    Poly<T> poly(std::size_t n) const {
        {
            std::shared_lock lock(cache_->mutex);
            if (auto it = cache_->polys.find(n); it != cache_->polys.end()) return it->second;
        }
        Poly<T> p = build(n);
        std::unique_lock lock(cache_->mutex);
        return cache_->polys.emplace(n, std::move(p)).first->second;
    }

private:
    struct Cache {
        mutable std::shared_mutex mutex;
        std::map<std::size_t, Poly<T>> polys;
    };

    Poly<T> build(std::size_t n) const {
        const T f = factorial<T>(n);
        const T lead = n % 2 == 0 ? T(1) / f : T(-1) / f;
        if (n == 0) return Poly<T>::constant(lead);
        Matrix<T> h(n, n);
        Matrix<T> rhs(n, 1);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) h(r, c) = moment(r + c);
            rhs(r, 0) = -lead * moment(r + n);
        }
        LinearSolution<T> sol;
        try {
            sol = solve(h, rhs);
        } catch (const SingularSystemError&) {
            throw SingularSystemError("modified functional not quasi-definite at degree " + std::to_string(n));
        }
        std::vector<T> cs = sol.x.column_values(0);
        cs.push_back(lead);
        return Poly<T>(std::move(cs));
    }

    MomentFunctional<T> functional_;
    Poly<T> modifier_;
    std::shared_ptr<Cache> cache_;
};

/// P_n^{[zeta_j^2]} for one ladder step.
template <Field T>
Poly<T> modified_family(const T& alpha, const Poly<T>& zeta_j, std::size_t n) {
    return ModifiedFamily<T>(alpha, zeta_j * zeta_j).poly(n);
}

enum class Basis { zeta_ladder, shifted_parameter, laguerre };

inline const char* basis_name(Basis b) {
    switch (b) {
        case Basis::zeta_ladder: return "zeta";
        case Basis::shifted_parameter: return "shifted";
        case Basis::laguerre: return "laguerre";
    }
    return "?";
}

template <Field T>
struct ConnectionResult {
    Basis basis = Basis::laguerre;
    std::size_t n = 0;
    std::vector<T> coefficients;
    std::vector<Poly<T>> basis_polys;
    Poly<T> residual;
    std::vector<std::string> warnings;

    Poly<T> reconstruct() const {
        Poly<T> out;
        for (std::size_t k = 0; k < coefficients.size(); ++k) out += coefficients[k] * basis_polys[k];
        return out;
    }
};

namespace detail {

/// Matches the coefficients of x^n, ..., x^{n-nu} of target against the
/// basis, then requires target - sum coeff_k basis_k to vanish identically.
template <Field T>
ConnectionResult<T> match_top_coefficients(Basis basis, std::size_t n, const Poly<T>& target,
                                           std::vector<Poly<T>> polys) {
    const std::size_t width = polys.size();
    Matrix<T> a(width, width);
    Matrix<T> b(width, 1);
    for (std::size_t r = 0; r < width; ++r) {
        for (std::size_t k = 0; k < width; ++k) a(r, k) = polys[k].coeff(n - r);
        b(r, 0) = target.coeff(n - r);
    }
    ConnectionResult<T> out;
    out.basis = basis;
    out.n = n;
    try {
        out.coefficients = solve(a, b).x.column_values(0);
    } catch (const SingularSystemError&) {
        throw SingularSystemError(std::string(basis_name(basis)) +
                                  " expansion: top coefficient block is singular at degree " + std::to_string(n));
    }
    out.basis_polys = std::move(polys);
    out.residual = target - out.reconstruct();

    bool violated = !out.residual.is_zero();
    if constexpr (!field_traits<T>::is_exact) {
        double scale = 0.0;
        double worst = 0.0;
        for (const auto& c : target.coeffs()) scale = std::max(scale, std::fabs(to_double(c)));
        for (const auto& c : out.residual.coeffs()) worst = std::max(worst, std::fabs(to_double(c)));
        violated = worst > 1e-9 * scale;
    }
    if (violated) {
        throw FormulaViolationError(std::string(basis_name(basis)) + " expansion of S_" + std::to_string(n) +
                                        " leaves a nonzero residual",
                                    n, out.residual.str());
    }
    return out;
}

}  // namespace detail

/*
 * lambda_{j,n} with S_n = sum_{j=0}^{nu} lambda_j zeta_j P_{n-j}^{[zeta_j^2]}.
 *
 * Every basis polynomial has degree n. The product
 * L_n(c) P_{n-1}^{[zeta_1^2]}(c) ... P_{n-nu}^{[zeta_nu^2]}(c) vanishing at a
 * mass location is reported as a warning; the residual check decides.
 */
template <Field T>
ConnectionResult<T> connect_zeta(const SobolevFamily<T>& fam, std::size_t n, const ZetaLadder<T>& ladder) {
    const std::size_t nu = ladder.nu();
    if (n < nu) {
        throw PreconditionError("zeta expansion needs n >= nu = " + std::to_string(nu) + ", got n = " +
                                std::to_string(n));
    }
    const T alpha = fam.spec().alpha();
    std::vector<Poly<T>> modified;
    std::vector<Poly<T>> polys;
    for (std::size_t j = 0; j <= nu; ++j) {
        modified.push_back(j == 0 ? fam.laguerre().poly(n) : modified_family(alpha, ladder[j], n - j));
        polys.push_back(ladder[j] * modified.back());
    }
    auto result = detail::match_top_coefficients(Basis::zeta_ladder, n, fam.poly(n), std::move(polys));
    for (const auto& m : fam.spec().masses()) {
        T product(1);
        for (const auto& p : modified) product *= p(m.c);
        if (is_zero(product)) {
            result.warnings.push_back("nonvanishing condition fails at c = " + to_string(m.c));
        }
    }
    return result;
}

template <Field T>
ConnectionResult<T> connect_zeta(const SobolevFamily<T>& fam, std::size_t n) {
    return connect_zeta(fam, n, build_zeta(fam.spec()));
}

/// xi_{k,n} with S_n = sum_{k=0}^{nu} xi_k L_{n-k}^{alpha+k}, nu = deg zeta.
/// The basis is triangular, so the top block is always solvable; whether
/// the residual vanishes depends on the spec.
template <Field T>
ConnectionResult<T> connect_shifted(const SobolevFamily<T>& fam, std::size_t n, std::size_t nu) {
    if (n < nu) {
        throw PreconditionError("shifted-parameter expansion needs n >= nu = " + std::to_string(nu) +
                                ", got n = " + std::to_string(n));
    }
    std::vector<Poly<T>> polys;
    for (std::size_t k = 0; k <= nu; ++k) {
        polys.push_back(laguerre_sequence(fam.spec().alpha() + T(static_cast<long>(k)), n - k).back());
    }
    return detail::match_top_coefficients(Basis::shifted_parameter, n, fam.poly(n), std::move(polys));
}

template <Field T>
ConnectionResult<T> connect_shifted(const SobolevFamily<T>& fam, std::size_t n) {
    return connect_shifted(fam, n, build_zeta(fam.spec()).nu());
}

/// True when zeta is a power of x, i.e. every mass sits at the origin (or
/// there are none). Outside this case the shifted-parameter basis spans a
/// different space than the one S_n lives in once n > nu.
template <Field T>
bool shifted_expansion_applicable(const SobolevSpec<T>& spec) {
    return std::all_of(spec.masses().begin(), spec.masses().end(), [](const auto& m) { return is_zero(m.c); });
}

}  // namespace sobolev

#endif
