#pragma once

// Characteristic pairs (P, lambda): the combinatorial model of a quasitoric
// manifold, with an omniorientation sign per facet.

#include <cstdint>
#include <memory>
#include <vector>

#include "qtoric/linalg.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

class IndexModel;

// Tangent weights at a fixed point. weights[k] is the covector dual to the
// lambda row of facets[k]: <weights[k], lambda[facets[l]]> = delta_kl.
struct VertexWeightData {
    std::size_t vertex = 0;
    std::vector<int> facets;  // sorted
    IntegerMatrix weights;
    int determinant = 0;      // det of the lambda block in sorted facet order, +-1
    int local_sign = 0;       // orientation sign of the fixed point
};

// Throws ValidationError when lambda or signs have the wrong shape.
ValidationReport validate_pair(const SimplePolytope& polytope, const IntegerMatrix& lambda,
                               const std::vector<int>& signs = {});

class CharacteristicPair {
public:
    // Validates; throws ValidationError naming the first failing vertex or row.
    CharacteristicPair(SimplePolytope polytope, IntegerMatrix lambda, std::vector<int> signs = {});

    const SimplePolytope& polytope() const noexcept { return polytope_; }
    const IntegerMatrix& lambda() const noexcept { return lambda_; }
    const std::vector<int>& signs() const noexcept { return signs_; }
    std::size_t dim() const noexcept { return polytope_.dim(); }
    std::size_t facet_count() const noexcept { return polytope_.facet_count(); }
    const std::string& name() const noexcept { return polytope_.name(); }

    const std::vector<VertexWeightData>& vertex_data() const noexcept { return *weights_; }

    CharacteristicPair with_signs(std::vector<int> signs) const;

private:
    SimplePolytope polytope_;
    IntegerMatrix lambda_;
    std::vector<int> signs_;
    std::shared_ptr<const std::vector<VertexWeightData>> weights_;
};

std::int64_t euler_characteristic(const CharacteristicPair& pair);
CharacteristicPair product_pair(const CharacteristicPair& a, const CharacteristicPair& b);

struct LocalizationOptions {
    std::uint64_t seed = 0x5eedcafef00dULL;
    int max_retries = 16;
};

std::shared_ptr<const IndexModel> to_index_model(const CharacteristicPair& pair,
                                                 const LocalizationOptions& options = {});

// Standard pairs.
CharacteristicPair projective_space(std::size_t n);  // simplex, lambda = e_1..e_n, -(1,...,1)
CharacteristicPair cube_pair(std::size_t n);         // (CP^1)^n: lambda = e_j on x_j=0, -e_j on x_j=1
CharacteristicPair polygon_pair(std::size_t k);      // alternating e_1, e_2 (last row e_1+e_2 when k is odd)
CharacteristicPair hirzebruch(int k);                // square, lambda = (1,0),(0,1),(-1,k),(0,-1)

}  // namespace qtoric
