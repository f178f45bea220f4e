#include "qtoric/io.hpp"

#include <charconv>

#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& doc, const char* key) {
    if (!doc.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

const Json& require_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ValidationError(path + ": expected an array");
    return j;
}

std::int64_t require_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ValidationError(path + ": expected an integer");
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_row(const Json& j, const std::string& path) {
    require_array(j, path);
    std::vector<std::int64_t> row;
    for (std::size_t i = 0; i < j.size(); ++i) row.push_back(require_int(j[i], at(path, i)));
    return row;
}

std::size_t parse_size(const std::string& text, const std::string& spec) {
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size()) {
        throw ValidationError("generate: bad parameter \"" + text + "\" in \"" + spec + "\"");
    }
    return v;
}

CharacteristicPair generate_one(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ValidationError("generate: expected family:parameter, got \"" + spec + "\"");
    const std::string family = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (family == "hirzebruch") {
        int k = 0;
        const auto [p, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
        if (ec != std::errc() || p != arg.data() + arg.size()) {
            throw ValidationError("generate: bad parameter \"" + arg + "\" in \"" + spec + "\"");
        }
        return hirzebruch(k);
    }
    const std::size_t n = parse_size(arg, spec);
    if (family == "cube") {
        if (n < 1) throw ValidationError("generate: cube needs n >= 1");
        return cube_pair(n);
    }
    if (family == "simplex") {
        if (n < 1) throw ValidationError("generate: simplex needs n >= 1");
        return projective_space(n);
    }
    if (family == "polygon") {
        if (n < 3) throw ValidationError("generate: polygon needs k >= 3");
        return polygon_pair(n);
    }
    if (family == "prism") {
        if (n < 3) throw ValidationError("generate: prism needs k >= 3");
        return product_pair(polygon_pair(n), cube_pair(1));
    }
    throw ValidationError("generate: unknown family \"" + family + "\"");
}

}  // namespace

ManifoldDocument parse_manifold(const Json& doc) {
    if (!doc.is_object()) throw ValidationError("manifold document: expected a JSON object");
    ManifoldDocument out;
    auto& p = out.polytope;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ValidationError("name: expected a string");
        p.name = doc["name"].get<std::string>();
    }
    const std::int64_t dim = require_int(require(doc, "dim"), "dim");
    if (dim < 1) throw ValidationError("dim: must be >= 1");
    p.dim = static_cast<std::size_t>(dim);

    const Json& facets = require(doc, "facets");
    if (facets.is_number_integer()) {
        const std::int64_t m = facets.get<std::int64_t>();
        if (m < 1) throw ValidationError("facets: must be >= 1");
        p.facet_count = static_cast<std::size_t>(m);
    } else {
        require_array(facets, "facets");
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (!facets[i].is_string()) throw ValidationError(at("facets", i) + ": expected a string");
            p.facet_names.push_back(facets[i].get<std::string>());
        }
        p.facet_count = p.facet_names.size();
    }

    const Json& vertices = require_array(require(doc, "vertices"), "vertices");
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto path = at("vertices", v);
        const auto row = int_row(vertices[v], path);
        std::vector<int> vertex;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] < 0 || row[k] >= static_cast<std::int64_t>(p.facet_count)) {
                throw ValidationError(at(path, k) + ": unknown facet " + std::to_string(row[k]) + " (have " +
                                      std::to_string(p.facet_count) + " facets)");
            }
            vertex.push_back(static_cast<int>(row[k]));
        }
        p.vertices.push_back(std::move(vertex));
    }

    if (doc.contains("lambda")) {
        const Json& lambda = require_array(doc["lambda"], "lambda");
        IntegerMatrix rows;
        for (std::size_t i = 0; i < lambda.size(); ++i) rows.push_back(int_row(lambda[i], at("lambda", i)));
        out.lambda = std::move(rows);
    }
    if (doc.contains("signs")) {
        const auto row = int_row(doc["signs"], "signs");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] != 1 && row[i] != -1) throw ValidationError(at("signs", i) + ": must be +1 or -1");
            out.signs.push_back(static_cast<int>(row[i]));
        }
    }
    return out;
}

ManifoldDocument parse_manifold_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return parse_manifold(doc);
}

CharacteristicPair to_pair(const ManifoldDocument& doc) {
    if (!doc.lambda) throw ValidationError("missing field \"lambda\"");
    return CharacteristicPair(SimplePolytope(doc.polytope), *doc.lambda, doc.signs);
}

Json polytope_to_json(const SimplePolytope& p) {
    Json j;
    j["name"] = p.name();
    j["dim"] = p.dim();
    if (p.facet_names().empty()) {
        Json names = Json::array();
        for (std::size_t i = 0; i < p.facet_count(); ++i) names.push_back("F" + std::to_string(i));
        j["facets"] = names;
    } else {
        j["facets"] = p.facet_names();
    }
    j["vertices"] = p.vertices();
    return j;
}

Json pair_to_json(const CharacteristicPair& pair) {
    Json j = polytope_to_json(pair.polytope());
    j["lambda"] = pair.lambda();
    j["signs"] = pair.signs();
    return j;
}

CharacteristicPair generate(const std::string& spec) {
    if (spec.empty()) throw ValidationError("generate: empty family spec");
    std::optional<CharacteristicPair> result;
    std::size_t start = 0;
    while (true) {
        const auto star = spec.find('*', start);
        auto factor = generate_one(spec.substr(start, star == std::string::npos ? std::string::npos : star - start));
        result = result ? product_pair(*result, factor) : std::move(factor);
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return *result;
}

BundleSpec parse_bundle(const Json& doc, std::size_t generators, const std::string& what) {
    require_array(doc, what);
    BundleSpec out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        auto row = int_row(doc[i], at(what, i));
        if (row.size() != generators) {
            throw ValidationError(at(what, i) + ": " + std::to_string(row.size()) + " coefficients, expected " +
                                  std::to_string(generators));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json rational_to_json(const Rational& r) { return to_fraction_string(r); }

Json series_to_json(const std::vector<Rational>& series) {
    Json j = Json::array();
    for (const auto& c : series) j.push_back(rational_to_json(c));
    return j;
}

std::string series_to_string(const std::vector<Rational>& series) {
    std::string out;
    for (std::size_t k = 0; k < series.size(); ++k) {
        if (k) out += " + ";
        out += series[k].get_str();
        if (k == 1) out += " q";
        if (k > 1) out += " q^" + std::to_string(k);
    }
    return out;
}

}  // namespace qtoric
