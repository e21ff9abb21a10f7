#ifndef SOBOLEV_SCALAR_HPP
#define SOBOLEV_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <concepts>
#include <cstdio>
#include <regex>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace sobolev {

/// Exact reference field. GMP-backed, always canonical (lowest terms,
/// positive denominator). Expression templates are off so that `auto`
/// always binds to a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename T>
struct field_traits;

template <>
struct field_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr const char* name = "exact";

    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational abs(const Rational& v) { return boost::multiprecision::abs(v); }
    static std::string to_string(const Rational& v) { return v.str(); }
    static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

template <>
struct field_traits<double> {
    static constexpr bool is_exact = false;
    static constexpr const char* name = "float";

    static bool is_zero(double v) { return v == 0.0; }
    static double abs(double v) { return std::fabs(v); }
    static std::string to_string(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    static double to_double(double v) { return v; }
};

/// A scalar backend: an ordered field with the operations the algorithms
/// need. Mixing backends does not compile; there are no implicit
/// conversions between Poly<Rational> and Poly<double>.
template <typename T>
concept Field = std::regular<T> && requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a < b } -> std::convertible_to<bool>;
    { field_traits<T>::is_zero(a) } -> std::convertible_to<bool>;
    { field_traits<T>::to_string(a) } -> std::convertible_to<std::string>;
    T(1);
};

template <Field T>
bool is_zero(const T& v) {
    return field_traits<T>::is_zero(v);
}

template <Field T>
T abs_value(const T& v) {
    return field_traits<T>::abs(v);
}

template <Field T>
std::string to_string(const T& v) {
    return field_traits<T>::to_string(v);
}

template <Field T>
double to_double(const T& v) {
    return field_traits<T>::to_double(v);
}

/// Converts an exact value into backend T.
template <Field T>
T from_rational(const Rational& r) {
    if constexpr (std::same_as<T, Rational>) {
        return r;
    } else {
        return static_cast<T>(r.convert_to<double>());
    }
}

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:/([0-9]+))?\s*)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) {
        throw ParseError("malformed rational '" + s + "'");
    }
    Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    Integer den(1);
    if (m[2].matched) {
        den = Integer(m[2].str());
        if (den.is_zero()) {
            throw ParseError("zero denominator in rational '" + s + "'");
        }
    }
    return Rational(num, den);
}

/// True when v is one of -1, -2, -3, ...
template <Field T>
bool is_negative_integer(const T& v) {
    if constexpr (std::same_as<T, Rational>) {
        return v < 0 && boost::multiprecision::denominator(v) == 1;
    } else {
        return v < 0 && std::floor(v) == v;
    }
}

}  // namespace sobolev

#endif
