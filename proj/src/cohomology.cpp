#include "qtoric/cohomology.hpp"

#include <algorithm>
#include <mutex>
#include <random>

#include "qtoric/errors.hpp"

namespace qtoric {

std::vector<std::string> IndexModel::generator_labels() const {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < generator_count(); ++i) labels.push_back("g" + std::to_string(i));
    return labels;
}

Rational IndexModel::pairing(const Monomial& m) const {
    if (m.degree() != half_dimension()) return 0;
    for (auto g : m.factors()) {
        if (g >= generator_count()) {
            throw std::out_of_range("pairing: generator " + std::to_string(g) + " out of range for model '" +
                                    name() + "'");
        }
    }
    {
        std::shared_lock lock(memo_mutex_);
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    }
    Rational value = compute_pairing(m);
    std::unique_lock lock(memo_mutex_);
    memo_.emplace(m, value);
    return value;
}

LineClass first_chern_class(const IndexModel& model) {
    LineClass c(model.generator_count(), 0);
    for (const auto& root : model.tangent_roots())
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += root.at(i);
    return c;
}

GradedPolynomial first_pontryagin_class(const IndexModel& model) {
    GradedPolynomial p;
    for (const auto& root : model.tangent_roots()) {
        const auto x = GradedPolynomial::linear(root);
        p += x * x;
    }
    return p;
}

Rational pair_top(const IndexModel& model, const GradedPolynomial& poly) {
    const std::size_t n = model.half_dimension();
    Rational total = 0;
    for (const auto& [m, c] : poly.terms()) {
        if (m.degree() != n) continue;
        total += c * model.pairing(m);
    }
    return total;
}

bool is_zero_class(const IndexModel& model, const GradedPolynomial& poly, std::size_t degree) {
    if (!poly.is_homogeneous(degree)) {
        throw std::invalid_argument("is_zero_class: polynomial is not homogeneous of degree " + std::to_string(degree));
    }
    const std::size_t n = model.half_dimension();
    if (degree > n || poly.is_zero()) return true;
    for (const auto& w : monomials_of_degree(model.generator_count(), n - degree)) {
        if (sgn(pair_top(model, poly * GradedPolynomial::from_monomial(w))) != 0) return false;
    }
    return true;
}

bool is_even_class(const IndexModel& model, const LineClass& a) { return model.mod2_zero(a); }

std::size_t pairing_rank(const IndexModel& model, std::size_t k) {
    const std::size_t n = model.half_dimension();
    if (k > n) return 0;
    const auto rows = monomials_of_degree(model.generator_count(), k);
    const auto cols = monomials_of_degree(model.generator_count(), n - k);
    RationalMatrix mat;
    for (const auto& a : rows) {
        std::vector<Rational> row;
        row.reserve(cols.size());
        for (const auto& b : cols) row.push_back(model.pairing(a * b));
        mat.push_back(std::move(row));
    }
    return rank(mat);
}

namespace {

LineClass checked_sum(const BundleSpec& spec, std::size_t generators, const char* what) {
    LineClass c(generators, 0);
    for (const auto& cls : spec) {
        if (cls.size() != generators) {
            throw std::invalid_argument(std::string(what) + ": class has " + std::to_string(cls.size()) +
                                        " coefficients, model has " + std::to_string(generators) + " generators");
        }
        for (std::size_t i = 0; i < generators; ++i) c[i] += cls[i];
    }
    return c;
}

GradedPolynomial sum_of_squares(const BundleSpec& spec) {
    GradedPolynomial p;
    for (const auto& cls : spec) {
        const auto x = GradedPolynomial::linear(cls);
        p += x * x;
    }
    return p;
}

}  // namespace

AdmissibilityReport check_admissible(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                                     const std::optional<LineClass>& c1c) {
    const std::size_t g = model.generator_count();
    AdmissibilityReport r;
    r.c1_v = checked_sum(v, g, "V");
    r.c1_w = checked_sum(w, g, "W");
    r.c1_m = first_chern_class(model);
    LineClass spin_c = v.empty() && c1c ? *c1c : r.c1_v;
    if (spin_c.size() != g) throw std::invalid_argument("c1c: wrong number of coefficients");
    LineClass diff(g);
    for (std::size_t i = 0; i < g; ++i) diff[i] = spin_c[i] - r.c1_m[i];
    r.c1_matches = model.mod2_zero(diff);
    r.w_spin = model.mod2_zero(r.c1_w);
    r.p1_difference = sum_of_squares(v) + sum_of_squares(w) - first_pontryagin_class(model);
    r.p1_balanced = is_zero_class(model, r.p1_difference, 2);
    return r;
}

LocalizationOracle::LocalizationOracle(const CharacteristicPair& pair, const LocalizationOptions& options)
    : pair_(pair) {
    const std::size_t n = pair_.dim();
    const auto& data = pair_.vertex_data();
    facet_position_.assign(data.size(), std::vector<int>(pair_.facet_count(), -1));
    for (std::size_t v = 0; v < data.size(); ++v)
        for (std::size_t k = 0; k < n; ++k) facet_position_[v][data[v].facets[k]] = static_cast<int>(k);

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::int64_t> entry(1000, 1000000);
    for (std::size_t p = 0; p < 2; ++p) {
        bool generic = false;
        for (int attempt = 0; attempt <= options.max_retries && !generic; ++attempt) {
            std::vector<std::int64_t> t(n);
            for (auto& x : t) x = entry(rng);
            if (p == 1 && t == points_[0]) continue;
            std::vector<std::vector<mpz_class>> values(data.size(), std::vector<mpz_class>(n));
            std::vector<mpz_class> euler(data.size(), 1);
            generic = true;
            for (std::size_t v = 0; v < data.size() && generic; ++v) {
                for (std::size_t k = 0; k < n; ++k) {
                    mpz_class s = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        s += mpz_class(static_cast<long>(data[v].weights[k][j])) * static_cast<long>(t[j]);
                    if (s == 0) {
                        generic = false;
                        break;
                    }
                    euler[v] *= s;
                    values[v][k] = std::move(s);
                }
            }
            if (generic) {
                points_[p] = std::move(t);
                weight_values_[p] = std::move(values);
                euler_values_[p] = std::move(euler);
            }
        }
        if (!generic) {
            throw InternalConsistencyError("localization: no generic point found after " +
                                           std::to_string(options.max_retries + 1) + " draws");
        }
    }
}

Rational LocalizationOracle::evaluate(const Monomial& m, std::size_t point) const {
    const auto& data = pair_.vertex_data();
    Rational total = 0;
    for (std::size_t v = 0; v < data.size(); ++v) {
        mpz_class numerator = data[v].local_sign;
        bool vanishes = false;
        for (auto g : m.factors()) {
            const int pos = facet_position_[v][g];
            if (pos < 0) {
                vanishes = true;
                break;
            }
            numerator *= weight_values_[point][v][pos];
        }
        if (vanishes) continue;
        Rational term(numerator, euler_values_[point][v]);
        term.canonicalize();
        total += term;
    }
    return total;
}

Rational LocalizationOracle::pair(const Monomial& m) const {
    if (m.degree() != pair_.dim()) return 0;
    for (auto g : m.factors()) {
        if (g >= pair_.facet_count()) throw std::out_of_range("localization: generator out of range");
    }
    const Rational first = evaluate(m, 0);
    const Rational second = evaluate(m, 1);
    if (first != second) {
        throw InternalConsistencyError("localization: generic evaluations disagree for " + m.to_string() + " on '" +
                                       pair_.name() + "': " + first.get_str() + " vs " + second.get_str());
    }
    return first;
}

Rational localization_pairing(const CharacteristicPair& pair, const Monomial& m, const LocalizationOptions& options) {
    if (m.degree() != pair.dim()) return 0;
    return LocalizationOracle(pair, options).pair(m);
}

RingReductionOracle::RingReductionOracle(const CharacteristicPair& pair, const RingReductionOptions& options)
    : dim_(pair.dim()), facet_count_(pair.facet_count()) {
    const std::size_t n = dim_;
    const std::size_t m = facet_count_;
    if (n > options.max_dim) {
        throw OracleUnavailable("ring reduction: dimension " + std::to_string(n) + " exceeds budget " +
                                std::to_string(options.max_dim));
    }
    const auto all_monomials = monomials_of_degree(m, n);
    if (all_monomials.size() > options.max_monomials) {
        throw OracleUnavailable("ring reduction: " + std::to_string(all_monomials.size()) +
                                " top-degree monomials exceed budget");
    }

    const auto& polytope = pair.polytope();
    const auto& reference = polytope.vertex(0);
    std::vector<int> rest;
    std::vector<int> rest_index(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        if (std::find(reference.begin(), reference.end(), static_cast<int>(i)) == reference.end()) {
            rest_index[i] = static_cast<int>(rest.size());
            rest.push_back(static_cast<int>(i));
        }
    }

    // J: sum_i lambda_ij u_i = 0 for each j, so A^T u_ref = -B^T u_rest.
    const auto& lambda = pair.lambda();
    IntegerMatrix a_transposed(n, std::vector<std::int64_t>(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) a_transposed[j][k] = lambda[reference[k]][j];
    const auto inv = inverse(a_transposed);
    if (!inv) throw InternalConsistencyError("ring reduction: singular reference vertex");

    substitution_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (rest_index[i] >= 0) substitution_[i] = GradedPolynomial::generator(rest_index[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        GradedPolynomial expr;
        for (std::size_t b = 0; b < rest.size(); ++b) {
            Rational coeff = 0;
            for (std::size_t j = 0; j < n; ++j) coeff -= (*inv)[k][j] * static_cast<long>(lambda[rest[b]][j]);
            expr.add_term(Monomial::generator(b), coeff);
        }
        substitution_[reference[k]] = std::move(expr);
    }

    const auto targets = monomials_of_degree(rest.size(), n);
    for (std::size_t i = 0; i < targets.size(); ++i) target_index_.emplace(targets[i], i);
    relations_ = std::make_unique<EchelonBasis>(targets.size());

    // I in top degree: every monomial whose support is not a face.
    for (const auto& mono : all_monomials) {
        std::vector<int> support;
        for (auto g : mono.support()) support.push_back(g);
        if (!polytope.is_face(support)) relations_->insert(image(mono));
    }
    const std::size_t quotient = targets.size() - relations_->rank();
    if (quotient != 1) {
        throw InternalConsistencyError("ring reduction: top-degree quotient has dimension " + std::to_string(quotient));
    }
    const auto& pivots = relations_->pivots();
    while (std::find(pivots.begin(), pivots.end(), free_column_) != pivots.end()) ++free_column_;

    std::vector<std::uint16_t> ref_factors(reference.begin(), reference.end());
    reference_value_ = relations_->reduce(image(Monomial(ref_factors)))[free_column_];
    if (sgn(reference_value_) == 0) throw InternalConsistencyError("ring reduction: reference monomial vanishes");
}

std::vector<Rational> RingReductionOracle::image(const Monomial& m) const {
    GradedPolynomial p = GradedPolynomial::constant(1);
    for (auto g : m.factors()) p = p.multiply(substitution_[g], dim_);
    std::vector<Rational> v(target_index_.size());
    for (const auto& [mono, c] : p.terms()) {
        if (mono.degree() == dim_) v[target_index_.at(mono)] = c;
    }
    return v;
}

Rational RingReductionOracle::pair(const Monomial& m) const {
    if (m.degree() != dim_) return 0;
    for (auto g : m.factors()) {
        if (g >= facet_count_) throw std::out_of_range("ring reduction: generator out of range");
    }
    return relations_->reduce(image(m))[free_column_] / reference_value_;
}

Rational ring_reduction_pairing(const CharacteristicPair& pair, const Monomial& m,
                                const RingReductionOptions& options) {
    if (m.degree() != pair.dim()) return 0;
    return RingReductionOracle(pair, options).pair(m);
}

QuasitoricModel::QuasitoricModel(CharacteristicPair pair, const LocalizationOptions& options)
    : pair_(std::move(pair)), oracle_(pair_, options) {
    const std::size_t m = pair_.facet_count();
    for (std::size_t i = 0; i < m; ++i) {
        LineClass root(m, 0);
        root[i] = pair_.signs()[i];
        roots_.push_back(std::move(root));
    }
}

std::vector<std::string> QuasitoricModel::generator_labels() const {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < pair_.facet_count(); ++i) labels.push_back("u" + std::to_string(i));
    return labels;
}

bool QuasitoricModel::mod2_zero(const LineClass& a) const {
    const std::size_t m = pair_.facet_count();
    if (a.size() != m) throw std::invalid_argument("mod2_zero: wrong number of coefficients");
    // a is zero mod 2 iff a = lambda * mu (mod 2) for some mu in F2^n
    std::vector<std::vector<std::uint8_t>> columns(pair_.dim(), std::vector<std::uint8_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < pair_.dim(); ++j) columns[j][i] = static_cast<std::uint8_t>(pair_.lambda()[i][j] & 1);
    std::vector<std::uint8_t> target(m);
    for (std::size_t i = 0; i < m; ++i) target[i] = static_cast<std::uint8_t>(a[i] & 1);
    return in_f2_span(columns, std::move(target));
}

std::optional<std::int64_t> QuasitoricModel::euler_characteristic() const {
    return qtoric::euler_characteristic(pair_);
}

Rational QuasitoricModel::compute_pairing(const Monomial& m) const { return oracle_.pair(m); }

}  // namespace qtoric
