#ifndef SOBOLEV_POLY_HPP
#define SOBOLEV_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace sobolev {

/*
 * Dense univariate polynomial in the monomial basis.
 *
 * coeffs()[k] is the coefficient of x^k. Trailing zeros are never stored,
 * so the zero polynomial has no coefficients and degree() == -1. Over the
 * rational backend equality is therefore exact coefficientwise equality.
 */
template <Field T>
class Poly {
public:
    using value_type = T;

    Poly() = default;
    Poly(std::initializer_list<T> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<T> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }

    /// c * x^k
    static Poly monomial(std::size_t k, const T& c = T(1)) {
        std::vector<T> cs(k + 1, T(0));
        cs[k] = c;
        return Poly(std::move(cs));
    }

    /// x - c
    static Poly linear_root(const T& c) { return Poly{-c, T(1)}; }

    std::span<const T> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of x^k, zero beyond the degree.
    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

    /// Horner evaluation.
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    Poly derivative(std::size_t order = 1) const {
        if (order == 0) return *this;
        if (coeffs_.size() <= order) return {};
        std::vector<T> out(coeffs_.size() - order);
        for (std::size_t k = order; k < coeffs_.size(); ++k) {
            // k (k-1) ... (k-order+1)
            T factor(1);
            for (std::size_t i = 0; i < order; ++i) factor *= T(static_cast<long>(k - i));
            out[k - order] = coeffs_[k] * factor;
        }
        return Poly(std::move(out));
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    Poly& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= T(-1); }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sobolev::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (sobolev::is_zero(coeffs_[k])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + to_string(coeffs_[k]) + ")";
            if (k > 0) out += k == 1 ? "x" : "x^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && sobolev::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

template <Field T>
struct DivMod {
    Poly<T> quotient;
    Poly<T> remainder;
};

/// Long division a = q*b + r with deg r < deg b.
template <Field T>
DivMod<T> divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<T> rem(a.coeffs().begin(), a.coeffs().end());
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) return {Poly<T>{}, a};
    std::vector<T> quot(rem.size() - db, T(0));
    const T lead = b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        const T q = rem[k] / lead;
        quot[k - db] = q;
        if (is_zero(q)) continue;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * b.coeffs()[i];
        rem[k] = T(0);
    }
    rem.resize(db);
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

/// Division that the caller knows to be exact. On the exact backend a
/// nonzero remainder raises ConsistencyError; on the float backend the
/// remainder is rounding noise and is dropped.
template <Field T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
    auto [q, r] = divmod(a, b);
    if constexpr (field_traits<T>::is_exact) {
        if (!r.is_zero()) {
            throw ConsistencyError("expected exact division, remainder " + r.str());
        }
    }
    return q;
}

template <Field T>
Poly<T> pow(const Poly<T>& p, std::size_t e) {
    Poly<T> out = Poly<T>::constant(T(1));
    for (std::size_t i = 0; i < e; ++i) out *= p;
    return out;
}

/// Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.
template <Field T>
T pochhammer(const T& a, std::size_t n) {
    T out(1);
    for (std::size_t k = 0; k < n; ++k) out *= a + T(static_cast<long>(k));
    return out;
}

template <Field T>
T factorial(std::size_t n) {
    return pochhammer(T(1), n);
}

/// Coefficients of p(x + c), i.e. the Taylor coefficients p^(k)(c)/k!.
template <Field T>
std::vector<T> taylor_coefficients(const Poly<T>& p, const T& c) {
    std::vector<T> a(p.coeffs().begin(), p.coeffs().end());
    const std::size_t n = a.size();
    // repeated synthetic division by (x - c)
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k-- > i;) a[k] += c * a[k + 1];
    }
    return a;
}

/// [p(x; c)]_N = sum_{k<=N} p^(k)(c)/k! (x - c)^k, in the monomial basis.
template <Field T>
Poly<T> taylor_truncate(const Poly<T>& p, const T& c, std::size_t order) {
    auto t = taylor_coefficients(p, c);
    if (t.size() > order + 1) t.resize(order + 1);
    // Horner in (x - c)
    Poly<T> out;
    const Poly<T> shift = Poly<T>::linear_root(c);
    for (std::size_t k = t.size(); k-- > 0;) {
        out = out * shift + Poly<T>::constant(t[k]);
    }
    return out;
}

/// sum_{k=0}^{terms} (a)_k / ((b)_k k!) x^k.
template <Field T>
Poly<T> hyp1f1_truncated(const T& a, const T& b, std::size_t terms) {
    std::vector<T> cs;
    cs.reserve(terms + 1);
    T term(1);
    cs.push_back(term);
    for (std::size_t k = 1; k <= terms; ++k) {
        const T bk = b + T(static_cast<long>(k - 1));
        if (is_zero(bk)) {
            throw PreconditionError("1F1 lower parameter " + to_string(b) +
                                    " makes (b)_k vanish at k = " + std::to_string(k));
        }
        term = term * (a + T(static_cast<long>(k - 1))) / (bk * T(static_cast<long>(k)));
        cs.push_back(term);
    }
    return Poly<T>(std::move(cs));
}

template <Field T>
Poly<double> to_float(const Poly<T>& p) {
    std::vector<double> cs;
    for (const auto& c : p.coeffs()) cs.push_back(to_double(c));
    return Poly<double>(std::move(cs));
}

}  // namespace sobolev

#endif
