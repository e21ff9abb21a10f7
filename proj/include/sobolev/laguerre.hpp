#ifndef SOBOLEV_LAGUERRE_HPP
#define SOBOLEV_LAGUERRE_HPP

#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace sobolev {

/// L_0^beta, ..., L_n^beta from
///   (k+1) L_{k+1} = (2k + beta + 1 - x) L_k - (k + beta) L_{k-1}.
/// Defined for every beta (the polynomials exist even where the functional
/// degenerates); LaguerreFamily adds the quasi-definiteness check.
template <Field T>
std::vector<Poly<T>> laguerre_sequence(const T& beta, std::size_t n) {
    std::vector<Poly<T>> out;
    out.reserve(n + 1);
    out.push_back(Poly<T>::constant(T(1)));
    if (n == 0) return out;
    out.push_back(Poly<T>{beta + T(1), T(-1)});
    for (std::size_t k = 1; k < n; ++k) {
        const T kk(static_cast<long>(k));
        Poly<T> next = Poly<T>{T(2) * kk + beta + T(1), T(-1)} * out[k] - (kk + beta) * out[k - 1];
        next *= T(1) / (kk + T(1));
        out.push_back(std::move(next));
    }
    return out;
}

/// Values L_0^beta(x), ..., L_n^beta(x) by the same recurrence, without
/// forming coefficients. This is the stable evaluation route on the float
/// backend.
template <Field T>
std::vector<T> laguerre_values(const T& beta, std::size_t n, const T& x) {
    std::vector<T> v;
    v.reserve(n + 1);
    v.push_back(T(1));
    if (n == 0) return v;
    v.push_back(beta + T(1) - x);
    for (std::size_t k = 1; k < n; ++k) {
        const T kk(static_cast<long>(k));
        v.push_back(((T(2) * kk + beta + T(1) - x) * v[k] - (kk + beta) * v[k - 1]) / (kk + T(1)));
    }
    return v;
}

/// The Laguerre moment functional normalized to (u_alpha)_0 = 1, so that
/// (u_alpha)_n = (alpha + 1)_n.
template <Field T>
class MomentFunctional {
public:
    explicit MomentFunctional(T alpha) : alpha_(std::move(alpha)) {}

    const T& alpha() const noexcept { return alpha_; }

    T moment(std::size_t n) const { return pochhammer(alpha_ + T(1), n); }

    T apply(const Poly<T>& p) const {
        T acc(0);
        T m(1);
        const auto cs = p.coeffs();
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (k > 0) m *= alpha_ + T(static_cast<long>(k));
            acc += cs[k] * m;
        }
        return acc;
    }

private:
    T alpha_;
};

/*
 * Classical Laguerre polynomials L_n^alpha with a lazily grown cache.
 *
 * Construction rejects alpha in {-1, -2, ...}. The cache may be read from
 * several threads; growth takes an exclusive lock and references handed out
 * stay valid because the deque never relocates existing elements.
 */
template <Field T>
class LaguerreFamily {
public:
    explicit LaguerreFamily(T alpha) : alpha_(std::move(alpha)), state_(std::make_shared<State>()) {
        if (is_negative_integer(alpha_)) {
            throw DegenerateParameterError("Laguerre parameter alpha = " + to_string(alpha_) +
                                           " is a negative integer; u_alpha is not quasi-definite");
        }
    }

    const T& alpha() const noexcept { return alpha_; }

    MomentFunctional<T> functional() const { return MomentFunctional<T>(alpha_); }

    /// L_n^alpha in the monomial basis.
    const Poly<T>& poly(std::size_t n) const {
        {
            std::shared_lock lock(state_->mutex);
            if (n < state_->cache.size()) return state_->cache[n];
        }
        std::unique_lock lock(state_->mutex);
        auto& cache = state_->cache;
        while (cache.size() <= n) {
            const std::size_t k = cache.size();
            if (k == 0) {
                cache.push_back(Poly<T>::constant(T(1)));
            } else if (k == 1) {
                cache.push_back(Poly<T>{alpha_ + T(1), T(-1)});
            } else {
                const T m(static_cast<long>(k - 1));
                Poly<T> next = Poly<T>{T(2) * m + alpha_ + T(1), T(-1)} * cache[k - 1] - (m + alpha_) * cache[k - 2];
                next *= T(1) / (m + T(1));
                cache.push_back(std::move(next));
            }
        }
        return cache[n];
    }

    /// ((alpha+1)_n / n!) 1F1(-n; alpha+1; x)
    Poly<T> hypergeometric(std::size_t n) const {
        const T scale = pochhammer(alpha_ + T(1), n) / factorial<T>(n);
        return scale * hyp1f1_truncated(T(-static_cast<long>(n)), alpha_ + T(1), n);
    }

    /// Leading coefficient k_n = (-1)^n / n!.
    T leading(std::size_t n) const {
        const T f = factorial<T>(n);
        return n % 2 == 0 ? T(1) / f : T(-1) / f;
    }

    /// d_n^2 = (alpha+1)_n / n!
    T squared_norm(std::size_t n) const { return pochhammer(alpha_ + T(1), n) / factorial<T>(n); }

    /// The family with parameter alpha + shift (shift may be negative).
    LaguerreFamily shifted(long shift) const { return LaguerreFamily(alpha_ + T(shift)); }

private:
    struct State {
        mutable std::shared_mutex mutex;
        std::deque<Poly<T>> cache;
    };

    T alpha_;
    std::shared_ptr<State> state_;
};

/// Outcome of the classical identities at one degree. A relation whose
/// range excludes n is reported as passing.
struct StructureReport {
    bool recurrence = true;        // (n+1)L_{n+1} + (x-2n-a-1)L_n + (n+a)L_{n-1} = 0, n >= 1
    bool first_structure = true;   // x L_n' = n L_n - (n+a) L_{n-1}, n >= 1
    bool second_structure = true;  // L_n = L_n' - L_{n+1}'
    bool lowering = true;          // L_n' = -L_{n-1}^{a+1}, n >= 1
    bool raising = true;           // x L_n' + (a-x) L_n = (n+1) L_{n+1}^{a-1}

    bool all() const { return recurrence && first_structure && second_structure && lowering && raising; }
};

template <Field T>
StructureReport structure_checks(const LaguerreFamily<T>& fam, std::size_t n) {
    StructureReport r;
    const T a = fam.alpha();
    const T nn(static_cast<long>(n));
    const Poly<T> x = Poly<T>::monomial(1);
    const auto& ln = fam.poly(n);
    const auto& ln1 = fam.poly(n + 1);
    const Poly<T> dln = ln.derivative();

    if (n >= 1) {
        const auto& lm = fam.poly(n - 1);
        r.recurrence = ((nn + T(1)) * ln1 + Poly<T>{-(T(2) * nn + a + T(1)), T(1)} * ln + (nn + a) * lm).is_zero();
        r.first_structure = x * dln == nn * ln - (nn + a) * lm;
        const auto up = laguerre_sequence(a + T(1), n - 1);
        r.lowering = dln == -up[n - 1];
    }
    r.second_structure = ln == dln - ln1.derivative();
    // alpha - 1 may be degenerate; the polynomial still exists.
    const auto down = laguerre_sequence(a - T(1), n + 1);
    r.raising = x * dln + Poly<T>{a, T(-1)} * ln == (nn + T(1)) * down[n + 1];
    return r;
}

}  // namespace sobolev

#endif
