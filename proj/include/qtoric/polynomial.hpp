#pragma once

// Exact rationals and sparse polynomials in degree-two cohomology generators.
//
// Every generator has complex degree 1, so the degree of a monomial is the
// number of factors it contains. Classes of complex degree above the
// half-dimension vanish, which is why most products take an explicit
// truncation degree.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qtoric {

using Rational = mpq_class;

// "p/q" with q > 0; integers are written "p/1".
std::string to_fraction_string(const Rational& r);
// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

// Multiset of generator indices, kept sorted.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint16_t> factors);

    static Monomial generator(std::size_t index);

    std::size_t degree() const noexcept { return factors_.size(); }
    std::span<const std::uint16_t> factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }

    // Distinct generator indices with their exponents, ascending.
    std::vector<std::pair<std::uint16_t, unsigned>> exponents() const;
    // Distinct generator indices, ascending.
    std::vector<std::uint16_t> support() const;

    Monomial operator*(const Monomial& other) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    std::string to_string(const std::vector<std::string>& labels = {}) const;

private:
    std::vector<std::uint16_t> factors_;
};

// All monomials of exactly `degree` in `generator_count` generators, in
// lexicographic order of their sorted factor lists.
std::vector<Monomial> monomials_of_degree(std::size_t generator_count, std::size_t degree);

// Integral degree-one class, stored as coefficients over the generators.
using LineClass = std::vector<std::int64_t>;

class GradedPolynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    GradedPolynomial() = default;

    static GradedPolynomial constant(const Rational& c);
    static GradedPolynomial generator(std::size_t index);
    static GradedPolynomial from_monomial(const Monomial& m, const Rational& c = 1);
    static GradedPolynomial linear(const LineClass& coefficients);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Largest degree with a nonzero term; 0 for the zero polynomial.
    std::size_t max_degree() const;
    bool is_homogeneous(std::size_t degree) const;
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    GradedPolynomial homogeneous_part(std::size_t degree) const;
    GradedPolynomial truncated(std::size_t max_degree) const;
    // Product with all terms of degree above `max_degree` dropped.
    GradedPolynomial multiply(const GradedPolynomial& other, std::size_t max_degree) const;

    GradedPolynomial& operator+=(const GradedPolynomial& other);
    GradedPolynomial& operator-=(const GradedPolynomial& other);
    GradedPolynomial& operator*=(const Rational& scalar);

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    friend GradedPolynomial operator*(GradedPolynomial a, const Rational& s) { return a *= s; }
    friend GradedPolynomial operator*(const Rational& s, GradedPolynomial a) { return a *= s; }
    // Untruncated product.
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);

    bool operator==(const GradedPolynomial& other) const { return terms_ == other.terms_; }

    std::string to_string(const std::vector<std::string>& labels = {}) const;

private:
    TermMap terms_;
};

GradedPolynomial power(const GradedPolynomial& base, unsigned exponent, std::size_t max_degree);

}  // namespace qtoric
