// Builds the first few Sobolev polynomials for alpha = 1 with masses at
// c = 0 (values) and c = 2 (first derivatives), then expands S_5 in the
// zeta ladder.

#include <sobolev/connect.hpp>
#include <sobolev/sobolev.hpp>

#include <iostream>

int main() {
    using sobolev::Rational;
    const sobolev::SobolevSpec<Rational> spec(
        Rational(1), {{Rational(0), 0, Rational(1)}, {Rational(2), 1, Rational(1, 3)}});
    const sobolev::SobolevFamily<Rational> family(spec);

    for (std::size_t n = 0; n <= 5; ++n) std::cout << "S_" << n << " = " << family.poly(n).str() << '\n';

    const auto ladder = sobolev::build_zeta(spec);
    std::cout << "zeta = " << ladder.zeta().str() << '\n';
    const auto lambda = sobolev::connect_zeta(family, 5, ladder);
    for (std::size_t j = 0; j < lambda.coefficients.size(); ++j)
        std::cout << "lambda_" << j << " = " << lambda.coefficients[j] << '\n';
}
