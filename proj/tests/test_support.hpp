#ifndef SOBOLEV_TEST_SUPPORT_HPP
#define SOBOLEV_TEST_SUPPORT_HPP

#include <sobolev/poly.hpp>
#include <sobolev/scalar.hpp>
#include <sobolev/spec.hpp>

#include <random>
#include <vector>

namespace sobolev::testing {

using Q = Rational;
using PQ = Poly<Q>;

inline Q q(long p, long d = 1) { return Q(p, d); }

inline PQ poly(std::initializer_list<Q> cs) { return PQ(cs); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    Q rational(int max_num = 9, int max_den = 7) {
        std::uniform_int_distribution<int> num(-max_num, max_num);
        std::uniform_int_distribution<int> den(1, max_den);
        return Q(num(gen_), den(gen_));
    }

    PQ poly(std::size_t degree) {
        std::vector<Q> cs;
        for (std::size_t k = 0; k <= degree; ++k) cs.push_back(rational());
        if (cs.back().is_zero()) cs.back() = Q(1);
        return PQ(std::move(cs));
    }

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
    }

private:
    std::mt19937_64 gen_;
};

/// The four reference inner products.
inline std::vector<SobolevSpec<Q>> reference_specs() {
    return {
        SobolevSpec<Q>(q(0), {{q(0), 0, q(1)}}),
        SobolevSpec<Q>(q(1), {{q(0), 0, q(1)}, {q(2), 1, q(1, 3)}}),
        SobolevSpec<Q>(q(1, 2), {{q(0), 0, q(1)}, {q(0), 1, q(1)}}),
        SobolevSpec<Q>(q(2), {{q(1), 2, q(5)}}),
    };
}

}  // namespace sobolev::testing

#endif
