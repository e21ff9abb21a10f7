#include <gtest/gtest.h>

#include <sobolev/kernels.hpp>

#include "test_support.hpp"

namespace sobolev {
namespace {

using testing::PQ;
using testing::Q;
using testing::q;

TEST(KernelSum, Examples) {
    const LaguerreFamily<Q> f0(q(0));
    EXPECT_EQ(kernel_sum(f0, 0, q(3), q(-5, 2)), q(1));
    EXPECT_EQ(kernel_sum(f0, 1, q(0), q(0)), q(2));
    // sympy: sum_{k<=4} L_k^1(1/2) L_k^1(-3/2) / d_k^2
    EXPECT_EQ(kernel_sum(LaguerreFamily<Q>(q(1)), 4, q(1, 2), q(-3, 2)), q(5615227, 245760));
}

TEST(KernelSum, ReproducingProperty) {
    for (const Q a : {q(0), q(1, 2), q(2)}) {
        const LaguerreFamily<Q> f(a);
        const auto u = f.functional();
        for (std::size_t n = 0; n <= 10; ++n) {
            for (const Q y : {q(0), q(3, 2), q(-1, 3)}) {
                // K_n(., y) as a polynomial in x
                PQ k;
                for (std::size_t r = 0; r <= n; ++r) k += (f.poly(r)(y) / f.squared_norm(r)) * f.poly(r);
                for (std::size_t m = 0; m <= n; ++m) {
                    EXPECT_EQ(u.apply(k * PQ::monomial(m)), PQ::monomial(m)(y));
                }
            }
        }
    }
}

TEST(KernelCd, MatchesSumOffAndOnDiagonal) {
    testing::Rng rng(41);
    for (const Q a : {q(0), q(1), q(1, 2)}) {
        const LaguerreFamily<Q> f(a);
        for (int t = 0; t < 50; ++t) {
            const Q x = rng.rational();
            const Q y = rng.rational();
            for (std::size_t n = 0; n <= 12; ++n) {
                EXPECT_EQ(kernel_cd(f, n, x, y), kernel_sum(f, n, x, y));
            }
        }
        for (std::size_t n = 0; n <= 12; ++n) {
            EXPECT_EQ(kernel_cd(f, n, q(7, 5), q(7, 5)), kernel_sum(f, n, q(7, 5), q(7, 5)));
            EXPECT_EQ(kernel_cd(f, n, q(0), q(0)), kernel_sum(f, n, q(0), q(0)));
        }
        EXPECT_EQ(kernel_cd(f, 0, q(2), q(9)), q(1));
    }
}

TEST(KernelPartial, Examples) {
    const LaguerreFamily<Q> f0(q(0));
    EXPECT_EQ(kernel_partial(f0, 4, 0, 0, q(1, 3), q(2)), kernel_sum(f0, 4, q(1, 3), q(2)));
    EXPECT_EQ(kernel_partial(f0, 1, 1, 0, q(5), q(0)), q(-1));
    EXPECT_EQ(kernel_partial(f0, 3, 4, 0, q(5), q(1)), q(0));
    EXPECT_EQ(kernel_partial(f0, 3, 4, 2, q(5), q(1)), q(0));
    // sympy: d/dx d^2/dy^2 K_3 at (1/3, 2), alpha = 1/2
    EXPECT_EQ(kernel_partial(LaguerreFamily<Q>(q(1, 2)), 3, 1, 2, q(1, 3), q(2)), q(-1069, 315));
}

TEST(KernelPartial, Symmetry) {
    const LaguerreFamily<Q> f(q(3, 2));
    for (std::size_t j = 0; j <= 3; ++j)
        for (std::size_t k = 0; k <= 3; ++k)
            EXPECT_EQ(kernel_partial(f, 6, j, k, q(1, 2), q(-4)), kernel_partial(f, 6, k, j, q(-4), q(1, 2)));
}

TEST(KernelPartialCd, ZeroOrderIsChristoffelDarboux) {
    const LaguerreFamily<Q> f(q(1, 2));
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(kernel_partial_cd(f, n, 0, q(3), q(-1, 2)), kernel_cd(f, n, q(3), q(-1, 2)));
    }
}

TEST(KernelPartialCd, MatchesTermByTermOracle) {
    testing::Rng rng(43);
    const LaguerreFamily<Q> f(q(1, 2));
    for (int t = 0; t < 50; ++t) {
        const Q x = rng.rational();
        const Q y = rng.rational();
        for (std::size_t n = 0; n <= 10; ++n)
            for (std::size_t k = 0; k <= 3; ++k)
                EXPECT_EQ(kernel_partial_cd(f, n, k, x, y), kernel_partial(f, n, 0, k, x, y))
                    << "n = " << n << ", k = " << k;
    }
}

TEST(KernelPartialCd, MixedOrdersAndDiagonal) {
    const LaguerreFamily<Q> f(q(1, 2));
    EXPECT_EQ(kernel_partial_cd(f, 3, 1, 2, q(1, 3), q(2)), q(-1069, 315));
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t j = 0; j <= 3; ++j)
            for (std::size_t k = 0; k <= 3; ++k)
                EXPECT_EQ(kernel_partial_cd(f, n, j, k, q(5, 4), q(5, 4)), kernel_partial(f, n, j, k, q(5, 4), q(5, 4)));
}

TEST(KernelPartialCd, NumeratorDivisibleWithZeroRemainder) {
    const LaguerreFamily<Q> f(q(1, 2));
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::size_t k = 0; k <= 3; ++k) {
            const Q y(-7, 3);
            const PQ num = f.poly(n + 1) * taylor_truncate(f.poly(n), y, k) - f.poly(n) * taylor_truncate(f.poly(n + 1), y, k);
            const auto [quot, rem] = divmod(num, pow(PQ::linear_root(y), k + 1));
            EXPECT_TRUE(rem.is_zero());
        }
}

TEST(Telescoping, Examples) {
    const LaguerreFamily<Q> f0(q(0));
    EXPECT_TRUE(telescoping_identity_check(f0, 1, 0, q(0)));
    EXPECT_TRUE(telescoping_identity_check(f0, 2, 5, q(3)));
    EXPECT_THROW(telescoping_identity_check(f0, 0, 0, q(0)), PreconditionError);
}

TEST(Telescoping, Sweep) {
    for (const Q a : {q(0), q(1, 2), q(3)}) {
        const LaguerreFamily<Q> f(a);
        for (std::size_t n = 1; n <= 15; ++n)
            for (std::size_t j = 0; j <= 3; ++j)
                for (const Q c : {q(0), q(1), q(-2)}) EXPECT_TRUE(telescoping_identity_check(f, n, j, c));
    }
}

TEST(KernelMatrix, SingleMassAtOrigin) {
    const LaguerreFamily<Q> f(q(0));
    const std::vector<MassPoint<Q>> ms{{q(0), 0, q(1)}};
    const auto km = kernel_matrix<Q>(f, ms, 0);
    ASSERT_EQ(km.entries.rows(), 1u);
    EXPECT_EQ(km.entries(0, 0), q(1));
}

TEST(KernelMatrix, SymmetricAndMatchesOracle) {
    const LaguerreFamily<Q> f(q(1));
    const std::vector<MassPoint<Q>> ms{{q(0), 0, q(1)}, {q(2), 1, q(1, 3)}, {q(-1, 2), 2, q(4)}};
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto km = kernel_matrix<Q>(f, ms, n);
        EXPECT_EQ(km.entries, kernel_matrix_sum<Q>(f, ms, n).entries);
        EXPECT_EQ(km.entries, km.entries.transpose());
        const auto closed = kernel_vector<Q>(f, ms, n);
        const auto summed = kernel_vector_sum<Q>(f, ms, n);
        for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_EQ(closed[i], summed[i]);
    }
}

TEST(KernelFloat, AgreesWithExact) {
    const LaguerreFamily<Q> fq(q(1, 2));
    const LaguerreFamily<double> fd(0.5);
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::size_t k = 0; k <= 2; ++k) {
            const double e = to_double(kernel_partial(fq, n, 0, k, q(3, 2), q(1, 4)));
            EXPECT_NEAR(kernel_partial_cd(fd, n, k, 1.5, 0.25), e, 1e-9 * std::max(1.0, std::abs(e)));
        }
}

}  // namespace
}  // namespace sobolev
