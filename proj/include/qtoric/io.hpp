#pragma once

// JSON reading and writing of polytopes, characteristic pairs and bundle
// specs, and the built-in family generator.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qtoric/charpair.hpp"
#include "qtoric/cohomology.hpp"
#include "qtoric/polytope.hpp"

namespace qtoric {

using Json = nlohmann::ordered_json;

// A manifold document: a polytope, optionally with lambda and signs.
struct ManifoldDocument {
    PolytopeData polytope;
    std::optional<IntegerMatrix> lambda;
    std::vector<int> signs;
};

// Throws ValidationError naming the offending location (e.g. "vertices[2][1]").
ManifoldDocument parse_manifold(const Json& doc);
ManifoldDocument parse_manifold_text(const std::string& text);

CharacteristicPair to_pair(const ManifoldDocument& doc);

Json polytope_to_json(const SimplePolytope& p);
Json pair_to_json(const CharacteristicPair& pair);

// Families: cube:n, simplex:n, polygon:k, prism:k, hirzebruch:k; "*" forms products.
CharacteristicPair generate(const std::string& spec);

// A list of integer coefficient vectors, each of length `generators`.
BundleSpec parse_bundle(const Json& doc, std::size_t generators, const std::string& what);

Json rational_to_json(const Rational& r);
Json series_to_json(const std::vector<Rational>& series);
// "c0 + c1 q + ... + cN q^N"
std::string series_to_string(const std::vector<Rational>& series);

}  // namespace qtoric
