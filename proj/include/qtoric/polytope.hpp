#pragma once

// Combinatorial simple polytopes given by vertex-facet incidences.
//
// A vertex is identified with the sorted set of the n facets meeting in it.
// Convex realizability is never checked: only the necessary combinatorial
// conditions on the boundary complex are enforced.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qtoric {

// Raw, unvalidated input.
struct PolytopeData {
    std::size_t dim = 0;
    std::size_t facet_count = 0;
    std::vector<std::vector<int>> vertices;
    std::string name;
    std::vector<std::string> facet_names;
};

struct ValidationItem {
    std::string check;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationItem> items;

    bool ok() const;
    // First failing check, or "ok".
    std::string summary() const;
};

struct TwoFace {
    std::vector<int> facet_complement;  // the n-2 facets containing the face
    std::vector<int> cycle;             // vertex ids in cyclic order
};

struct Edge {
    int a = 0;
    int b = 0;
    int dropped_facet = 0;  // facet of `a` not containing the edge
    int added_facet = 0;    // facet of `b` not containing the edge
};

// Throws ValidationError on structural malformation (facet index out of
// range, repeated vertex, negative sizes); all other invariants are reported.
ValidationReport validate_polytope(const PolytopeData& data);

class SimplePolytope {
public:
    // Validates; throws ValidationError carrying the first failed check.
    explicit SimplePolytope(PolytopeData data);

    std::size_t dim() const noexcept { return data_.dim; }
    std::size_t facet_count() const noexcept { return data_.facet_count; }
    std::size_t vertex_count() const noexcept { return data_.vertices.size(); }
    const std::vector<std::vector<int>>& vertices() const noexcept { return data_.vertices; }
    const std::vector<int>& vertex(std::size_t i) const { return data_.vertices.at(i); }
    const std::string& name() const noexcept { return data_.name; }
    const std::vector<std::string>& facet_names() const noexcept { return data_.facet_names; }
    const PolytopeData& data() const noexcept { return data_; }

    const std::vector<Edge>& edges() const noexcept { return derived_->edges; }
    const std::vector<std::vector<int>>& vertex_neighbors() const noexcept { return derived_->neighbors; }
    const std::vector<TwoFace>& two_faces() const noexcept { return derived_->two_faces; }
    // Sign of the sorted facet order at each vertex relative to a fixed
    // orientation of the polytope, normalized to +1 at vertex 0.
    const std::vector<int>& vertex_orientation() const noexcept { return derived_->orientation; }

    // Does some vertex contain every facet in `facets`?
    bool is_face(const std::vector<int>& facets) const;
    std::optional<std::size_t> find_vertex(std::vector<int> facets) const;

private:
    struct Derived {
        std::vector<Edge> edges;
        std::vector<std::vector<int>> neighbors;
        std::vector<TwoFace> two_faces;
        std::vector<int> orientation;
    };

    PolytopeData data_;
    std::shared_ptr<const Derived> derived_;
};

// Graph on facets; {i,j} is an edge iff the facets meet.
struct FacetGraph {
    std::size_t node_count = 0;
    std::vector<std::vector<int>> neighbors;

    bool adjacent(int i, int j) const;
    std::size_t edge_count() const;
};

struct FacetColoring {
    std::vector<int> colors;  // colors[i] in [0, color_count)
    int color_count = 0;
};

struct ColoringOptions {
    std::uint64_t node_budget = 5'000'000;
};

FacetGraph adjacency(const SimplePolytope& p);
bool is_even(const SimplePolytope& p);
bool is_vertex_graph_bipartite(const SimplePolytope& p);

// Minimum proper facet coloring by exact backtracking, or nullopt when it
// needs more than `max_colors`. Throws ColoringInconclusive on budget exhaustion.
std::optional<FacetColoring> facet_chromatic(const SimplePolytope& p, int max_colors,
                                             const ColoringOptions& options = {});
bool is_proper_coloring(const FacetGraph& g, const FacetColoring& coloring);

SimplePolytope product(const SimplePolytope& a, const SimplePolytope& b);

// h-vector (h_0, ..., h_n) of the polytope.
std::vector<std::int64_t> h_vector(const SimplePolytope& p);

// Built-in families.
SimplePolytope cube(std::size_t n);
SimplePolytope simplex(std::size_t n);
SimplePolytope polygon(std::size_t k);

}  // namespace qtoric
