#ifndef SOBOLEV_ERRORS_HPP
#define SOBOLEV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sobolev {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Laguerre parameter in {-1, -2, ...}: the moment functional is not quasi-definite.
class DegenerateParameterError : public Error {
public:
    using Error::Error;
};

/// An identity that must hold exactly did not (e.g. a nonzero remainder
/// in a division the mathematics guarantees to be exact).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class SingularSystemError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// The Sobolev polynomial of a given degree does not exist because
/// I + D K_{n-1} is singular. Carries the degree, the rendered matrix and
/// its determinant.
class NonexistentDegreeError : public Error {
public:
    NonexistentDegreeError(std::size_t degree, std::string determinant,
                           std::vector<std::vector<std::string>> matrix)
        : Error("Sobolev polynomial of degree " + std::to_string(degree) +
                " does not exist: det(I + D K_" + std::to_string(degree - 1) +
                ") = " + determinant),
          degree_(degree), determinant_(std::move(determinant)), matrix_(std::move(matrix)) {}

    std::size_t degree() const noexcept { return degree_; }
    const std::string& determinant() const noexcept { return determinant_; }
    const std::vector<std::vector<std::string>>& matrix() const noexcept { return matrix_; }

private:
    std::size_t degree_;
    std::string determinant_;
    std::vector<std::vector<std::string>> matrix_;
};

/// A connection expansion left a nonzero residual.
class FormulaViolationError : public Error {
public:
    FormulaViolationError(std::string what, std::size_t degree, std::string residual)
        : Error(std::move(what)), degree_(degree), residual_(std::move(residual)) {}

    std::size_t degree() const noexcept { return degree_; }
    const std::string& residual() const noexcept { return residual_; }

private:
    std::size_t degree_;
    std::string residual_;
};

}  // namespace sobolev

#endif
