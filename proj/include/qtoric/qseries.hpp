#pragma once

// Truncated q-series with cohomology-valued coefficients, and the per-root
// characteristic factors entering the twisted index integrand.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qtoric/polynomial.hpp"

namespace qtoric {

enum class RootFactorKind { AHat, Q1, Q2, Q2Prime, Q3, ExpHalf };

std::string to_string(RootFactorKind kind);

// Dense truncated series in a single formal root x and in q:
// sum_{j <= q_order, d <= max_x} c[j][d] q^j x^d.
class RootSeries {
public:
    RootSeries(std::size_t q_order, std::size_t max_x);

    static RootSeries constant(const Rational& c, std::size_t q_order, std::size_t max_x);
    // e^{scale * x}
    static RootSeries exp(const Rational& scale, std::size_t q_order, std::size_t max_x);
    // c * q^k
    static RootSeries q_monomial(std::size_t k, const Rational& c, std::size_t q_order, std::size_t max_x);

    std::size_t q_order() const noexcept { return q_order_; }
    std::size_t max_x() const noexcept { return max_x_; }
    const Rational& at(std::size_t q_power, std::size_t x_power) const;
    Rational& at(std::size_t q_power, std::size_t x_power);

    RootSeries& operator+=(const RootSeries& o);
    RootSeries& operator-=(const RootSeries& o);
    RootSeries& operator*=(const RootSeries& o);
    friend RootSeries operator+(RootSeries a, const RootSeries& b) { return a += b; }
    friend RootSeries operator-(RootSeries a, const RootSeries& b) { return a -= b; }
    friend RootSeries operator*(RootSeries a, const RootSeries& b) { return a *= b; }

    // Multiplication by x (the top x-degree falls off).
    RootSeries times_x() const;
    // Multiplicative inverse; the q^0 x^0 coefficient must be nonzero.
    RootSeries inverse() const;

    bool operator==(const RootSeries& o) const = default;

private:
    void check_compatible(const RootSeries& o) const;

    std::size_t q_order_;
    std::size_t max_x_;
    std::vector<Rational> c_;  // row-major [q][x]
};

// The single-root factor of the given kind expanded through q^q_order and x^max_x:
//   AHat     (x/2)/sinh(x/2)
//   Q1       prod_k (1-q^k)^2 / ((1-e^x q^k)(1-e^-x q^k))
//   Q2       (1-e^-x) prod_k (1-e^x q^k)(1-e^-x q^k)/(1-q^k)^2
//   Q2Prime  sinh(x/2)/(x/2) prod_k (1-e^x q^k)(1-e^-x q^k)/(1-q^k)^2, so e^{x/2} Q2 = x Q2Prime
//   Q3       (e^{x/2}+e^{-x/2}) prod_k (1+e^x q^k)(1+e^-x q^k)/(1+q^k)^2
//   ExpHalf  e^{x/2}
RootSeries root_series(RootFactorKind kind, std::size_t q_order, std::size_t max_x);

class QSeries {
public:
    QSeries(std::size_t q_order, std::size_t max_degree);

    static QSeries constant(const GradedPolynomial& c, std::size_t q_order, std::size_t max_degree);
    static QSeries q_power(std::size_t k, std::size_t q_order, std::size_t max_degree);

    std::size_t q_order() const noexcept { return coeffs_.size() - 1; }
    std::size_t max_degree() const noexcept { return max_degree_; }
    const GradedPolynomial& coefficient(std::size_t k) const { return coeffs_.at(k); }
    const std::vector<GradedPolynomial>& coefficients() const noexcept { return coeffs_; }
    void set_coefficient(std::size_t k, GradedPolynomial p);

    // Throw std::invalid_argument on mismatched q_order or max_degree.
    QSeries& operator+=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries& operator*=(const Rational& s);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
    friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }

    bool operator==(const QSeries& o) const = default;

    // "c0 + (c1) q + ... + (cN) q^N"
    std::string to_string(const std::vector<std::string>& labels = {}) const;

private:
    void check_compatible(const QSeries& o) const;

    std::vector<GradedPolynomial> coeffs_;
    std::size_t max_degree_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries scalar_mul(const QSeries& a, const Rational& s);

// Substitute the degree-one class x for the formal root.
QSeries substitute(const RootSeries& f, const GradedPolynomial& x, std::size_t max_degree);

QSeries root_factor(RootFactorKind kind, const GradedPolynomial& x, std::size_t q_order, std::size_t max_degree);
// Product of root factors over all roots.
QSeries bundle_series(RootFactorKind kind, std::span<const LineClass> roots, std::size_t q_order,
                      std::size_t max_degree);

}  // namespace qtoric
