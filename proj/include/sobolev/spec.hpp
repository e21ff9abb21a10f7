#ifndef SOBOLEV_SPEC_HPP
#define SOBOLEV_SPEC_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace sobolev {

/// One point-mass term mu * f^(nu)(c) g^(nu)(c). A zero mass is allowed and
/// contributes nothing to the inner product.
template <Field T>
struct MassPoint {
    T c;
    std::size_t nu = 0;
    T mu;

    friend bool operator==(const MassPoint&, const MassPoint&) = default;
};

/*
 * alpha together with the mass triples of a discrete Sobolev inner product.
 *
 * The constructor sorts the masses so that nu_1 <= ... <= nu_M (ties broken
 * by ascending c) and merges repeated (c, nu) pairs by adding their masses.
 * origins()[i] lists the input positions that were folded into masses()[i].
 */
template <Field T>
class SobolevSpec {
public:
    SobolevSpec(T alpha, std::vector<MassPoint<T>> masses) : alpha_(std::move(alpha)) {
        if (is_negative_integer(alpha_)) {
            throw DegenerateParameterError("alpha = " + to_string(alpha_) +
                                           " is a negative integer; u_alpha is not quasi-definite");
        }
        std::vector<std::size_t> order(masses.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::tie(masses[a].nu, masses[a].c) < std::tie(masses[b].nu, masses[b].c);
        });
        for (std::size_t idx : order) {
            const auto& m = masses[idx];
            if (!masses_.empty() && masses_.back().nu == m.nu && masses_.back().c == m.c) {
                masses_.back().mu += m.mu;
                origins_.back().push_back(idx);
            } else {
                masses_.push_back(m);
                origins_.push_back({idx});
            }
        }
    }

    const T& alpha() const noexcept { return alpha_; }
    const std::vector<MassPoint<T>>& masses() const noexcept { return masses_; }
    const std::vector<std::vector<std::size_t>>& origins() const noexcept { return origins_; }
    std::size_t size() const noexcept { return masses_.size(); }

    /// nu_1, or none when there are no masses.
    std::size_t min_order() const {
        return masses_.empty() ? static_cast<std::size_t>(-1) : masses_.front().nu;
    }

    bool all_masses_zero() const {
        return std::all_of(masses_.begin(), masses_.end(), [](const auto& m) { return is_zero(m.mu); });
    }

    /// The same spec over another backend.
    template <Field U>
    SobolevSpec<U> convert() const
        requires std::same_as<T, Rational>
    {
        std::vector<MassPoint<U>> ms;
        for (const auto& m : masses_) ms.push_back({from_rational<U>(m.c), m.nu, from_rational<U>(m.mu)});
        return SobolevSpec<U>(from_rational<U>(alpha_), std::move(ms));
    }

private:
    T alpha_;
    std::vector<MassPoint<T>> masses_;
    std::vector<std::vector<std::size_t>> origins_;
};

}  // namespace sobolev

#endif
