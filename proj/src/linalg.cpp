#include "qtoric/linalg.hpp"

#include <stdexcept>

namespace qtoric {

std::vector<Rational> EchelonBasis::reduce(std::vector<Rational> v) const {
    if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto p = pivots_[r];
        if (sgn(v[p]) == 0) continue;
        const Rational factor = v[p];
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(rows_[r][j]) != 0) v[j] -= factor * rows_[r][j];
        }
    }
    return v;
}

bool EchelonBasis::insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return false;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    // keep existing rows reduced against the new pivot
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        const Rational factor = row[p];
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(v[j]) != 0) row[j] -= factor * v[j];
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

std::size_t rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    EchelonBasis basis(m.front().size());
    for (const auto& row : m) basis.insert(row);
    return basis.rank();
}

Rational determinant(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("determinant: matrix not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(a[r][c]) == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

std::optional<RationalMatrix> inverse(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        const Rational lead = a[c][c];
        for (auto& x : a[c]) x /= lead;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

bool in_f2_span(const std::vector<std::vector<std::uint8_t>>& columns, std::vector<std::uint8_t> target) {
    const std::size_t len = target.size();
    // Gaussian elimination on the augmented system [columns | target] over F2.
    std::vector<std::vector<std::uint8_t>> rows(len, std::vector<std::uint8_t>(columns.size() + 1));
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) rows[i][j] = columns[j].at(i) & 1u;
        rows[i][columns.size()] = target[i] & 1u;
    }
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < columns.size() && pivot_row < len; ++c) {
        std::size_t p = pivot_row;
        while (p < len && rows[p][c] == 0) ++p;
        if (p == len) continue;
        std::swap(rows[p], rows[pivot_row]);
        for (std::size_t r = 0; r < len; ++r) {
            if (r != pivot_row && rows[r][c]) {
                for (std::size_t j = c; j <= columns.size(); ++j) rows[r][j] ^= rows[pivot_row][j];
            }
        }
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < len; ++r) {
        if (rows[r][columns.size()]) return false;
    }
    return true;
}

}  // namespace qtoric
