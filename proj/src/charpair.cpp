#include "qtoric/charpair.hpp"

#include <numeric>

#include "qtoric/cohomology.hpp"
#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

void check_shape(const SimplePolytope& p, const IntegerMatrix& lambda, const std::vector<int>& signs) {
    if (lambda.size() != p.facet_count()) {
        throw ValidationError("lambda: " + std::to_string(lambda.size()) + " rows for " +
                              std::to_string(p.facet_count()) + " facets");
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i].size() != p.dim()) {
            throw ValidationError("lambda row " + std::to_string(i) + ": length " + std::to_string(lambda[i].size()) +
                                  ", expected " + std::to_string(p.dim()));
        }
    }
    if (!signs.empty() && signs.size() != p.facet_count()) {
        throw ValidationError("signs: " + std::to_string(signs.size()) + " entries for " +
                              std::to_string(p.facet_count()) + " facets");
    }
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1) {
            throw ValidationError("signs entry " + std::to_string(i) + " must be +1 or -1");
        }
    }
}

IntegerMatrix vertex_block(const IntegerMatrix& lambda, const std::vector<int>& facets) {
    IntegerMatrix block;
    for (int f : facets) block.push_back(lambda[f]);
    return block;
}

std::string format_vertex(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

}  // namespace

ValidationReport validate_pair(const SimplePolytope& polytope, const IntegerMatrix& lambda,
                               const std::vector<int>& signs) {
    check_shape(polytope, lambda, signs);
    ValidationReport report;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        std::int64_t g = 0;
        for (auto x : lambda[i]) g = std::gcd(g, x);
        report.items.push_back({"primitive row " + std::to_string(i), g == 1,
                                g == 1 ? "" : "gcd of entries is " + std::to_string(g)});
    }
    for (std::size_t v = 0; v < polytope.vertex_count(); ++v) {
        const Rational det = determinant(vertex_block(lambda, polytope.vertex(v)));
        const bool unimodular = det == 1 || det == -1;
        report.items.push_back({"unimodular vertex " + std::to_string(v), unimodular,
                                unimodular ? ""
                                           : "vertex " + std::to_string(v) + " " + format_vertex(polytope.vertex(v)) +
                                                 ": det = " + det.get_str()});
    }
    return report;
}

CharacteristicPair::CharacteristicPair(SimplePolytope polytope, IntegerMatrix lambda, std::vector<int> signs)
    : polytope_(std::move(polytope)), lambda_(std::move(lambda)), signs_(std::move(signs)) {
    const auto report = validate_pair(polytope_, lambda_, signs_);
    if (!report.ok()) throw ValidationError("characteristic pair invalid: " + report.summary());
    if (signs_.empty()) signs_.assign(polytope_.facet_count(), 1);

    const std::size_t n = polytope_.dim();
    auto data = std::make_shared<std::vector<VertexWeightData>>();
    data->reserve(polytope_.vertex_count());
    for (std::size_t v = 0; v < polytope_.vertex_count(); ++v) {
        const auto& facets = polytope_.vertex(v);
        const IntegerMatrix block = vertex_block(lambda_, facets);
        const auto inv = inverse(block);  // exists: det = +-1
        VertexWeightData w;
        w.vertex = v;
        w.facets = facets;
        w.determinant = determinant(block) == 1 ? 1 : -1;
        // weights = rows of (block^-1)^T
        w.weights.assign(n, std::vector<std::int64_t>(n));
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& x = (*inv)[j][k];
                if (x.get_den() != 1) throw InternalConsistencyError("non-integral tangent weight");
                w.weights[k][j] = x.get_num().get_si();
            }
        }
        data->push_back(std::move(w));
    }
    // Orient M so that the fixed point at vertex 0 counts positively.
    const int base = data->front().determinant;
    for (auto& w : *data) w.local_sign = polytope_.vertex_orientation()[w.vertex] * w.determinant * base;
    weights_ = std::move(data);
}

CharacteristicPair CharacteristicPair::with_signs(std::vector<int> signs) const {
    return CharacteristicPair(polytope_, lambda_, std::move(signs));
}

std::int64_t euler_characteristic(const CharacteristicPair& pair) {
    return static_cast<std::int64_t>(pair.polytope().vertex_count());
}

CharacteristicPair product_pair(const CharacteristicPair& a, const CharacteristicPair& b) {
    SimplePolytope p = product(a.polytope(), b.polytope());
    const std::size_t n1 = a.dim();
    const std::size_t n2 = b.dim();
    IntegerMatrix lambda;
    for (const auto& row : a.lambda()) {
        auto r = row;
        r.resize(n1 + n2, 0);
        lambda.push_back(std::move(r));
    }
    for (const auto& row : b.lambda()) {
        std::vector<std::int64_t> r(n1, 0);
        r.insert(r.end(), row.begin(), row.end());
        lambda.push_back(std::move(r));
    }
    auto signs = a.signs();
    signs.insert(signs.end(), b.signs().begin(), b.signs().end());
    return CharacteristicPair(std::move(p), std::move(lambda), std::move(signs));
}

std::shared_ptr<const IndexModel> to_index_model(const CharacteristicPair& pair, const LocalizationOptions& options) {
    return std::make_shared<QuasitoricModel>(pair, options);
}

CharacteristicPair projective_space(std::size_t n) {
    IntegerMatrix lambda;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> row(n, 0);
        row[i] = 1;
        lambda.push_back(std::move(row));
    }
    lambda.emplace_back(n, -1);
    PolytopeData d = simplex(n).data();
    d.name = "CP" + std::to_string(n);
    return CharacteristicPair(SimplePolytope(std::move(d)), std::move(lambda));
}

CharacteristicPair cube_pair(std::size_t n) {
    IntegerMatrix lambda(2 * n, std::vector<std::int64_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        lambda[j][j] = 1;
        lambda[j + n][j] = -1;
    }
    return CharacteristicPair(cube(n), std::move(lambda));
}

CharacteristicPair polygon_pair(std::size_t k) {
    IntegerMatrix lambda;
    for (std::size_t i = 0; i < k; ++i) {
        if (k % 2 == 1 && i == k - 1) {
            lambda.push_back({1, 1});
        } else {
            lambda.push_back(i % 2 == 0 ? std::vector<std::int64_t>{1, 0} : std::vector<std::int64_t>{0, 1});
        }
    }
    return CharacteristicPair(polygon(k), std::move(lambda));
}

CharacteristicPair hirzebruch(int k) {
    PolytopeData d = polygon(4).data();
    d.name = "hirzebruch:" + std::to_string(k);
    IntegerMatrix lambda{{1, 0}, {0, 1}, {-1, k}, {0, -1}};
    return CharacteristicPair(SimplePolytope(std::move(d)), std::move(lambda));
}

}  // namespace qtoric
