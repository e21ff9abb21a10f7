#ifndef SOBOLEV_LINALG_HPP
#define SOBOLEV_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace sobolev {

/// Dense row-major matrix over a field.
template <Field T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix column(const std::vector<T>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::vector<T> column_values(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<std::vector<std::string>> rendered() const {
        std::vector<std::vector<std::string>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_string((*this)(i, j)));
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <Field T>
struct LinearSolution {
    Matrix<T> x;
    T determinant;
};

namespace detail {

/*
 * Fraction-free (Bareiss) elimination of the augmented system [A | B].
 *
 * Every row is first scaled by the lcm of its denominators so elimination
 * runs over the integers; each Bareiss division is exact. Row scaling leaves
 * the solution unchanged and multiplies det(A) by the product of the scales.
 * Returns the determinant; the solution is only filled when det != 0.
 */
inline Rational bareiss(const Matrix<Rational>& a, const Matrix<Rational>* b, Matrix<Rational>* x) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const std::size_t n = a.rows();
    const std::size_t nb = b ? b->cols() : 0;
    const std::size_t w = n + nb;
    if (n == 0) {
        if (x && b) *x = Matrix<Rational>(0, nb);
        return Rational(1);
    }
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(w));
    Rational scale_product(1);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, Integer(denominator(a(i, j))));
        for (std::size_t j = 0; j < nb; ++j)
            l = boost::multiprecision::lcm(l, Integer(denominator((*b)(i, j))));
        scale_product *= Rational(l);
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Integer(numerator(a(i, j) * Rational(l)));
        for (std::size_t j = 0; j < nb; ++j) m[i][n + j] = Integer(numerator((*b)(i, j) * Rational(l)));
    }

    int sign = 1;
    Integer prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < w; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    const Rational det = Rational(m[n - 1][n - 1] * sign) / scale_product;

    if (x && b) {
        *x = Matrix<Rational>(n, nb);
        for (std::size_t c = 0; c < nb; ++c) {
            for (std::size_t i = n; i-- > 0;) {
                Rational acc(m[i][n + c]);
                for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * (*x)(j, c);
                (*x)(i, c) = acc / Rational(m[i][i]);
            }
        }
    }
    return det;
}

/// Partial-pivoted elimination. A pivot below 1e-14 of the largest entry
/// in its column counts as singular.
inline double partial_pivot(const Matrix<double>& a, const Matrix<double>* b, Matrix<double>* x) {
    const std::size_t n = a.rows();
    const std::size_t nb = b ? b->cols() : 0;
    const std::size_t w = n + nb;
    if (n == 0) {
        if (x && b) *x = Matrix<double>(0, nb);
        return 1.0;
    }
    std::vector<std::vector<double>> m(n, std::vector<double>(w));
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = a(i, j);
            scale = std::max(scale, std::fabs(a(i, j)));
        }
        for (std::size_t j = 0; j < nb; ++j) m[i][n + j] = (*b)(i, j);
    }
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m[i][k]) > std::fabs(m[p][k])) p = i;
        if (std::fabs(m[p][k]) <= 1e-14 * scale) return 0.0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < w; ++j) m[i][j] -= f * m[k][j];
        }
    }
    if (x && b) {
        *x = Matrix<double>(n, nb);
        for (std::size_t c = 0; c < nb; ++c) {
            for (std::size_t i = n; i-- > 0;) {
                double acc = m[i][n + c];
                for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * (*x)(j, c);
                (*x)(i, c) = acc / m[i][i];
            }
        }
    }
    return det;
}

template <Field T>
T eliminate(const Matrix<T>& a, const Matrix<T>* b, Matrix<T>* x) {
    if (a.rows() != a.cols()) throw PreconditionError("linear solve needs a square matrix");
    if (b && b->rows() != a.rows()) throw PreconditionError("right-hand side has wrong row count");
    if constexpr (std::same_as<T, Rational>) {
        return bareiss(a, b, x);
    } else {
        return partial_pivot(a, b, x);
    }
}

}  // namespace detail

template <Field T>
T determinant(const Matrix<T>& a) {
    return detail::eliminate<T>(a, nullptr, nullptr);
}

/// Solves A X = B. Exact backend: fraction-free elimination; float backend:
/// partial pivoting. Throws SingularSystemError when A is singular.
template <Field T>
LinearSolution<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    LinearSolution<T> out;
    out.determinant = detail::eliminate<T>(a, &b, &out.x);
    if (is_zero(out.determinant)) throw SingularSystemError("singular linear system");
    return out;
}

}  // namespace sobolev

#endif
