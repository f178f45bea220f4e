#pragma once

// Small dense exact linear algebra over Q and F2.

#include <cstdint>
#include <optional>
#include <vector>

#include "qtoric/polynomial.hpp"

namespace qtoric {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

// Row echelon basis of a growing subspace of Q^dim. Rows are kept fully
// reduced so that `reduce` returns a canonical representative modulo the span.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    // Returns true if the vector was independent of the current span.
    bool insert(std::vector<Rational> v);
    std::vector<Rational> reduce(std::vector<Rational> v) const;

private:
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const RationalMatrix& m);
Rational determinant(const IntegerMatrix& m);
// Inverse of a square integer matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const IntegerMatrix& m);

// Is `target` (mod 2) in the F2 column span of `columns`? Each column has the
// length of `target`.
bool in_f2_span(const std::vector<std::vector<std::uint8_t>>& columns, std::vector<std::uint8_t> target);

}  // namespace qtoric
