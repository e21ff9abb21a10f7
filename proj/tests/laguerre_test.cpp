#include <gtest/gtest.h>

#include <sobolev/laguerre.hpp>
#include <sobolev/quadrature.hpp>

#include <cmath>
#include <thread>

#include "test_support.hpp"

namespace sobolev {
namespace {

using testing::poly;
using testing::PQ;
using testing::Q;
using testing::q;

TEST(LaguerrePoly, InitialConditionsAndFirstStep) {
    const LaguerreFamily<Q> f(q(3, 4));
    EXPECT_EQ(f.poly(0), PQ::constant(q(1)));
    EXPECT_EQ(f.poly(1), poly({q(7, 4), q(-1)}));
    const LaguerreFamily<Q> f0(q(0));
    EXPECT_EQ(f0.poly(2), poly({q(1), q(-2), q(1, 2)}));
}

TEST(LaguerrePoly, LeadingCoefficient) {
    const LaguerreFamily<Q> f(q(1, 2));
    for (std::size_t n = 0; n <= 15; ++n) {
        EXPECT_EQ(f.poly(n).degree(), static_cast<long>(n));
        EXPECT_EQ(f.poly(n).leading(), f.leading(n));
    }
    EXPECT_EQ(f.leading(3), q(-1, 6));
}

TEST(LaguerrePoly, ExplicitBinomialSum) {
    // L_n^a(x) = sum_k (-1)^k (a+k+1)_{n-k} / ((n-k)! k!) x^k
    for (const Q a : {q(0), q(1, 2), q(-1, 2), q(3)}) {
        const LaguerreFamily<Q> f(a);
        for (std::size_t n = 0; n <= 12; ++n) {
            std::vector<Q> cs;
            for (std::size_t k = 0; k <= n; ++k) {
                const Q c = pochhammer(a + Q(k + 1), n - k) / (factorial<Q>(n - k) * factorial<Q>(k));
                cs.push_back(k % 2 == 0 ? c : -c);
            }
            EXPECT_EQ(f.poly(n), PQ(cs)) << "n = " << n;
        }
    }
}

TEST(LaguerrePoly, HypergeometricFormMatchesRecurrence) {
    for (const Q a : {q(0), q(1), q(1, 2), q(-1, 2), q(3, 4)}) {
        const LaguerreFamily<Q> f(a);
        for (std::size_t n = 0; n <= 15; ++n) EXPECT_EQ(f.hypergeometric(n), f.poly(n));
    }
    EXPECT_EQ(LaguerreFamily<Q>(q(0)).hypergeometric(1), poly({q(1), q(-1)}));
}

TEST(LaguerreFamily, DegenerateAlphaRejected) {
    EXPECT_THROW(LaguerreFamily<Q>(q(-1)), DegenerateParameterError);
    EXPECT_THROW(LaguerreFamily<Q>(q(-3)), DegenerateParameterError);
    EXPECT_THROW(LaguerreFamily<double>(-2.0), DegenerateParameterError);
    EXPECT_NO_THROW(LaguerreFamily<Q>(q(-3, 2)));
}

TEST(SquaredNorm, Examples) {
    EXPECT_EQ(LaguerreFamily<Q>(q(5, 3)).squared_norm(0), q(1));
    EXPECT_EQ(LaguerreFamily<Q>(q(0)).squared_norm(2), q(1));
    EXPECT_EQ(LaguerreFamily<Q>(q(1)).squared_norm(3), q(4));
}

TEST(MomentFunctional, MomentsAndOrthogonality) {
    const MomentFunctional<Q> u0(q(0));
    EXPECT_EQ(u0.moment(0), q(1));
    EXPECT_EQ(u0.moment(2), q(2));
    for (const Q a : {q(0), q(1, 2), q(3)}) {
        const LaguerreFamily<Q> f(a);
        const auto u = f.functional();
        EXPECT_EQ(u.apply(f.poly(1) * f.poly(0)), q(0));
        for (std::size_t n = 0; n <= 15; ++n)
            for (std::size_t m = 0; m <= 15; ++m)
                EXPECT_EQ(u.apply(f.poly(n) * f.poly(m)), n == m ? f.squared_norm(n) : q(0));
    }
}

TEST(StructureChecks, FirstDegreeByHand) {
    const LaguerreFamily<Q> f(q(0));
    const auto r = structure_checks(f, 1);
    EXPECT_TRUE(r.first_structure);
    EXPECT_TRUE(r.lowering);
    EXPECT_TRUE(r.all());
}

TEST(StructureChecks, SweepIncludingDegenerateShift) {
    // alpha = 0 needs L^{-1} in the raising relation.
    for (const Q a : {q(0), q(1, 2), q(1), q(3)}) {
        const LaguerreFamily<Q> f(a);
        for (std::size_t n = 0; n <= 20; ++n) EXPECT_TRUE(structure_checks(f, n).all()) << "n = " << n;
    }
}

TEST(StructureChecks, DetectsBrokenFamily) {
    // L^{-1}_1 = -x; a sequence with the wrong parameter must fail the lowering relation.
    EXPECT_EQ(laguerre_sequence(q(-1), 1)[1], poly({q(0), q(-1)}));
    const auto wrong = laguerre_sequence(q(1, 3), 3);
    const LaguerreFamily<Q> f(q(0));
    EXPECT_NE(f.poly(2).derivative(), -wrong[1]);
}

TEST(LaguerreValues, MatchPolynomialEvaluation) {
    const LaguerreFamily<Q> f(q(1, 2));
    const auto v = laguerre_values(q(1, 2), 10, q(7, 3));
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(v[n], f.poly(n)(q(7, 3)));
}

TEST(LaguerreFamily, ConcurrentReadsAgree) {
    const LaguerreFamily<Q> f(q(1, 3));
    std::vector<std::thread> pool;
    std::vector<PQ> results(8);
    for (std::size_t t = 0; t < results.size(); ++t) {
        pool.emplace_back([&, t] { results[t] = f.poly(10 + t); });
    }
    for (auto& th : pool) th.join();
    for (std::size_t t = 0; t < results.size(); ++t) EXPECT_EQ(results[t], f.hypergeometric(10 + t));
}

TEST(GaussLaguerre, SingleNode) {
    const auto rule = gauss_laguerre(0.0, 1);
    ASSERT_EQ(rule.nodes.size(), 1u);
    EXPECT_NEAR(rule.nodes[0], 1.0, 1e-15);
    EXPECT_NEAR(rule.weights[0], 1.0, 1e-15);
}

TEST(GaussLaguerre, ExactOnDegreeThree) {
    const auto rule = gauss_laguerre(0.0, 2);
    EXPECT_NEAR(rule.integrate([](double x) { return x * x; }), 2.0, 1e-13);
    EXPECT_NEAR(rule.integrate([](double x) { return x * x * x; }), 6.0, 1e-12);
}

TEST(GaussLaguerre, WeightsSumToOne) {
    for (double a : {0.0, 0.5, 2.0, -0.5}) {
        for (std::size_t n : {1u, 3u, 10u, 20u}) {
            const auto rule = gauss_laguerre(a, n);
            double s = 0.0;
            for (double w : rule.weights) s += w;
            EXPECT_NEAR(s, 1.0, 1e-13) << "alpha = " << a << ", n = " << n;
        }
    }
}

TEST(GaussLaguerre, MatchesFunctionalOnRandomPolynomials) {
    testing::Rng rng(31);
    for (const Q a : {q(0), q(1, 2), q(2)}) {
        const MomentFunctional<Q> u(a);
        for (std::size_t d = 0; d <= 20; ++d) {
            const PQ p = rng.poly(d);
            const auto rule = gauss_laguerre(to_double(a), (d + 2) / 2);
            const auto pf = to_float(p);
            const double approx = rule.integrate([&](double x) { return pf(x); });
            const double exact = to_double(u.apply(p));
            EXPECT_LE(std::fabs(approx - exact), 1e-10 * std::fabs(exact)) << "alpha = " << a << ", d = " << d;
        }
    }
}

TEST(GaussLaguerre, RejectsBadArguments) {
    EXPECT_THROW(gauss_laguerre(-1.0, 3), PreconditionError);
    EXPECT_THROW(gauss_laguerre(0.0, 0), PreconditionError);
}

}  // namespace
}  // namespace sobolev
