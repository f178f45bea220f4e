#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qtoric/charpair.hpp"
#include "qtoric/cohomology.hpp"
#include "qtoric/qseries.hpp"

using namespace qtoric;

TEST_CASE("A-hat expansion matches the Bernoulli formula") {
    const auto s = root_series(RootFactorKind::AHat, 0, 10);
    const auto expected = oracle::ahat_taylor(10);
    for (std::size_t d = 0; d <= 10; ++d) CHECK(s.at(0, d) == expected[d]);
    CHECK(s.at(0, 2) == Rational(-1, 24));
}

TEST_CASE("q-factors match geometric-series expansion") {
    const std::size_t N = 4, D = 6;
    const std::pair<RootFactorKind, oracle::Kind> kinds[] = {
        {RootFactorKind::Q1, oracle::Kind::Q1}, {RootFactorKind::Q2, oracle::Kind::Q2}, {RootFactorKind::Q3, oracle::Kind::Q3}};
    for (const auto& [kind, ref] : kinds) {
        const auto s = root_series(kind, N, D);
        const auto e = oracle::q_factor(ref, N, D);
        for (std::size_t j = 0; j <= N; ++j)
            for (std::size_t d = 0; d <= D; ++d) CHECK(s.at(j, d) == e[j][d]);
    }
}

TEST_CASE("Q2 prime times x equals exp(x/2) Q2") {
    const std::size_t N = 3, D = 6;
    const auto lhs = root_series(RootFactorKind::ExpHalf, N, D) * root_series(RootFactorKind::Q2, N, D);
    const auto rhs = root_series(RootFactorKind::Q2Prime, N, D).times_x();
    CHECK(lhs == rhs);
}

TEST_CASE("constant terms") {
    const std::size_t N = 4, n = 3;
    const GradedPolynomial zero;
    const auto one = QSeries::constant(GradedPolynomial::constant(1), N, n);
    CHECK(root_factor(RootFactorKind::Q1, zero, N, n) == one);
    CHECK(root_factor(RootFactorKind::Q2Prime, zero, N, n) == one);
    CHECK(root_factor(RootFactorKind::AHat, zero, N, n) == one);
    CHECK(root_factor(RootFactorKind::Q3, zero, N, n) == one * Rational(2));
    const std::vector<LineClass> roots(3, LineClass{0, 0});
    CHECK(bundle_series(RootFactorKind::Q3, roots, N, n) == one * Rational(8));
    CHECK(bundle_series(RootFactorKind::Q3, {}, N, n) == one);
}

TEST_CASE("truncated series arithmetic") {
    const auto u = GradedPolynomial::generator(0);
    QSeries a(2, 1), b(2, 1);
    a.set_coefficient(0, GradedPolynomial::constant(1));
    a.set_coefficient(1, u);
    b.set_coefficient(0, GradedPolynomial::constant(1));
    b.set_coefficient(1, u * Rational(-1));
    CHECK(a * b == QSeries::constant(GradedPolynomial::constant(1), 2, 1));

    const auto top = QSeries::q_power(2, 2, 1);
    CHECK(top * QSeries::q_power(1, 2, 1) == QSeries(2, 1));
    CHECK_THROWS_AS(a * QSeries(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(a + QSeries(2, 2), std::invalid_argument);
    CHECK(series_add(a, b) == QSeries::constant(GradedPolynomial::constant(2), 2, 1));
    CHECK(scalar_mul(a, 3).coefficient(1) == u * Rational(3));
}

TEST_CASE("series products distribute") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-2, 2);
    auto random_series = [&] {
        QSeries s(2, 2);
        for (std::size_t k = 0; k <= 2; ++k) {
            GradedPolynomial p = GradedPolynomial::constant(c(rng));
            p += GradedPolynomial::linear({c(rng), c(rng)});
            p.add_term(Monomial({0, 1}), c(rng));
            s.set_coefficient(k, p);
        }
        return s;
    };
    for (int t = 0; t < 20; ++t) {
        const auto a = random_series(), b = random_series(), d = random_series();
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a * b == b * a);
        CHECK((a * b) * d == a * (b * d));
    }
}

TEST_CASE("A-hat genus of CP2") {
    QuasitoricModel cp2(projective_space(2));
    const auto s = bundle_series(RootFactorKind::AHat, cp2.tangent_roots(), 0, 2);
    CHECK(pair_top(cp2, s.coefficient(0).homogeneous_part(2)) == Rational(-1, 8));
}

TEST_CASE("series text") {
    const auto s = QSeries::constant(GradedPolynomial::constant(2), 2, 1);
    CHECK(s.to_string() == "2 + (0) q + (0) q^2");
}
