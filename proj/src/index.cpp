#include "qtoric/index.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "qtoric/errors.hpp"

namespace qtoric {

bool IndexResult::is_zero() const {
    return std::all_of(series.begin(), series.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool IndexResult::is_constant() const {
    return std::all_of(series.begin() + (series.empty() ? 0 : 1), series.end(),
                       [](const Rational& c) { return sgn(c) == 0; });
}

namespace {

void check_classes(const IndexModel& model, const BundleSpec& spec, const char* what) {
    for (const auto& cls : spec) {
        if (cls.size() != model.generator_count()) {
            throw std::invalid_argument(std::string(what) + ": class has " + std::to_string(cls.size()) +
                                        " coefficients, model '" + model.name() + "' has " +
                                        std::to_string(model.generator_count()) + " generators");
        }
    }
}

bool is_zero_line(const LineClass& c) {
    return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

bool series_is_zero(const QSeries& s) {
    return std::all_of(s.coefficients().begin(), s.coefficients().end(),
                       [](const GradedPolynomial& p) { return p.is_zero(); });
}

void multiply_roots(QSeries& out, const RootSeries& f, const std::vector<LineClass>& roots, std::size_t n) {
    for (const auto& r : roots) {
        if (series_is_zero(out)) return;
        out *= substitute(f, GradedPolynomial::linear(r), n);
    }
}

// Q1(TM) A(TM) Q3(W), the factors shared by both integrand forms.
void multiply_common(QSeries& out, const IndexModel& model, const BundleSpec& w, std::size_t q_order) {
    const std::size_t n = model.half_dimension();
    const RootSeries tangent = root_series(RootFactorKind::Q1, q_order, n) * root_series(RootFactorKind::AHat, q_order, n);
    multiply_roots(out, tangent, model.tangent_roots(), n);
    multiply_roots(out, root_series(RootFactorKind::Q3, q_order, n), w, n);
}

void multiply_exp_half(QSeries& out, const LineClass& c, std::size_t q_order, std::size_t n) {
    if (is_zero_line(c)) return;
    out *= substitute(root_series(RootFactorKind::ExpHalf, q_order, n), GradedPolynomial::linear(c), n);
}

std::vector<Rational> pair_series(const IndexModel& model, const QSeries& integrand, unsigned threads) {
    const std::size_t count = integrand.q_order() + 1;
    std::vector<Rational> out(count);
    const std::size_t n = model.half_dimension();
    auto work = [&](std::size_t k) { out[k] = pair_top(model, integrand.coefficient(k).homogeneous_part(n)); };
    if (threads <= 1 || count == 1) {
        for (std::size_t k = 0; k < count; ++k) work(k);
        return out;
    }
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(threads, count);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t k = t; k < count; k += workers) work(k);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

IndexResult finish(const IndexModel& model, const BundleSpec& v, const BundleSpec& w, const IndexOptions& options,
                   const QSeries& integrand) {
    IndexResult r;
    r.series = pair_series(model, integrand, options.threads);
    r.admissibility = check_admissible(model, v, w, v.empty() ? options.c1c : std::nullopt);
    r.model_name = model.name();
    r.v = v;
    r.w = w;
    r.q_order = options.q_order;
    if (v.empty() && w.empty() && !options.c1c && !model.mod2_zero(first_chern_class(model))) {
        r.warnings.push_back("c1(M) is not even; using c1c = 0");
    }
    return r;
}

Rational power_of_two(std::size_t e) {
    Rational r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 2;
    return r;
}

std::vector<Rational> scaled(const std::vector<Rational>& s, const Rational& c) {
    std::vector<Rational> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] * c;
    return out;
}

std::vector<std::size_t> split_right(const Monomial& m, std::size_t offset, Monomial& left, Monomial& right) {
    std::vector<std::size_t> unused;
    for (auto g : m.factors()) {
        if (g < offset) {
            left = left * Monomial::generator(g);
        } else {
            right = right * Monomial::generator(g - offset);
        }
    }
    return unused;
}

LineClass embed(const LineClass& a, std::size_t offset, std::size_t total) {
    LineClass out(total, 0);
    for (std::size_t i = 0; i < a.size(); ++i) out.at(offset + i) = a[i];
    return out;
}

std::pair<LineClass, LineClass> split_class(const LineClass& a, std::size_t left_count) {
    return {LineClass(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(left_count)),
            LineClass(a.begin() + static_cast<std::ptrdiff_t>(left_count), a.end())};
}

std::vector<std::string> joined_labels(const IndexModel& a, const IndexModel& b) {
    auto labels = a.generator_labels();
    for (auto l : b.generator_labels()) labels.push_back(l + "'");
    return labels;
}

std::vector<LineClass> joined_roots(const IndexModel& a, const IndexModel& b) {
    const std::size_t total = a.generator_count() + b.generator_count();
    std::vector<LineClass> roots;
    for (const auto& r : a.tangent_roots()) roots.push_back(embed(r, 0, total));
    for (const auto& r : b.tangent_roots()) roots.push_back(embed(r, a.generator_count(), total));
    return roots;
}

}  // namespace

QSeries index_integrand(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                        const IndexOptions& options) {
    check_classes(model, v, "V");
    check_classes(model, w, "W");
    const std::size_t n = model.half_dimension();
    const std::size_t q = options.q_order;
    QSeries out = QSeries::constant(GradedPolynomial::constant(1), q, n);
    if (!v.empty()) {
        // x Q2'(x) per root, so the product carries e(V)
        multiply_roots(out, root_series(RootFactorKind::Q2Prime, q, n).times_x(), v, n);
    } else if (options.c1c) {
        multiply_exp_half(out, *options.c1c, q, n);
    }
    if (!series_is_zero(out)) multiply_common(out, model, w, q);
    return out;
}

QSeries index_integrand_exponential(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                                    const IndexOptions& options) {
    check_classes(model, v, "V");
    check_classes(model, w, "W");
    const std::size_t n = model.half_dimension();
    const std::size_t q = options.q_order;
    QSeries out = QSeries::constant(GradedPolynomial::constant(1), q, n);
    if (!v.empty()) {
        LineClass c(model.generator_count(), 0);
        for (const auto& cls : v)
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += cls[i];
        multiply_exp_half(out, c, q, n);
        multiply_roots(out, root_series(RootFactorKind::Q2, q, n), v, n);
    } else if (options.c1c) {
        multiply_exp_half(out, *options.c1c, q, n);
    }
    if (!series_is_zero(out)) multiply_common(out, model, w, q);
    return out;
}

IndexResult phi_c(const IndexModel& model, const BundleSpec& v, const BundleSpec& w, const IndexOptions& options) {
    return finish(model, v, w, options, index_integrand(model, v, w, options));
}

IndexResult phi_c_exponential(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                              const IndexOptions& options) {
    return finish(model, v, w, options, index_integrand_exponential(model, v, w, options));
}

IndexResult witten_genus(const IndexModel& model, const IndexOptions& options) {
    IndexOptions o = options;
    o.c1c.reset();
    return phi_c(model, {}, {}, o);
}

IndexResult elliptic_genus(const IndexModel& model, const IndexOptions& options) {
    if (!model.mod2_zero(first_chern_class(model))) {
        throw PreconditionError("elliptic genus needs a Spin manifold: c1(" + model.name() + ") is not even");
    }
    IndexOptions o = options;
    o.c1c.reset();
    const BundleSpec w = model.tangent_roots();
    IndexResult r = phi_c(model, {}, w, o);
    const std::size_t m = w.size();
    const std::size_t n = model.half_dimension();
    const Rational factor = m >= n ? 1 / power_of_two(m - n) : power_of_two(n - m);
    r.series = scaled(r.series, factor);
    return r;
}

BundleSpec colored_bundle(const IndexModel& model, const FacetColoring& coloring, const std::vector<int>& signs) {
    const std::size_t g = model.generator_count();
    if (coloring.colors.size() != g) {
        throw std::invalid_argument("coloring has " + std::to_string(coloring.colors.size()) + " entries, model has " +
                                    std::to_string(g) + " generators");
    }
    if (!signs.empty() && signs.size() != g) {
        throw std::invalid_argument("sign vector has " + std::to_string(signs.size()) + " entries, expected " +
                                    std::to_string(g));
    }
    BundleSpec v(static_cast<std::size_t>(coloring.color_count), LineClass(g, 0));
    for (std::size_t j = 0; j < g; ++j) {
        const int c = coloring.colors[j];
        if (c < 0 || c >= coloring.color_count) throw std::invalid_argument("coloring: color out of range");
        v[static_cast<std::size_t>(c)][j] += signs.empty() ? 1 : signs[j];
    }
    return v;
}

ColoredIndex colored_index(const QuasitoricModel& model, const FacetColoring& coloring, const std::vector<int>& signs,
                           const IndexOptions& options) {
    const auto& p = model.pair().polytope();
    if (coloring.color_count != static_cast<int>(p.dim())) {
        throw PreconditionError("colored index needs exactly n = " + std::to_string(p.dim()) + " colors, got " +
                                std::to_string(coloring.color_count));
    }
    if (coloring.colors.size() != p.facet_count() || !is_proper_coloring(adjacency(p), coloring)) {
        throw PreconditionError("coloring is not a proper facet coloring of " + p.name());
    }
    ColoredIndex out;
    out.v = colored_bundle(model, coloring, signs);
    IndexOptions o = options;
    o.c1c.reset();
    out.index = phi_c(model, out.v, {}, o);
    GradedPolynomial e = GradedPolynomial::constant(1);
    for (const auto& cls : out.v) e = e.multiply(GradedPolynomial::linear(cls), model.half_dimension());
    out.euler_pairing = pair_top(model, e);
    out.matches_euler_pairing = out.index.is_constant() && !out.index.series.empty() &&
                                out.index.series[0] == out.euler_pairing;
    return out;
}

SignSearchResult exists_nonvanishing_signs(const QuasitoricModel& model, const FacetColoring& coloring,
                                           const IndexOptions& options) {
    const std::size_t m = coloring.colors.size();
    std::vector<std::size_t> free;
    std::set<int> seen;
    for (std::size_t j = 0; j < m; ++j) {
        if (!seen.insert(coloring.colors[j]).second) free.push_back(j);
    }
    if (free.size() > 30) throw std::invalid_argument("sign search: too many facets");
    SignSearchResult result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        std::vector<int> signs(m, 1);
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask >> b & 1) signs[free[b]] = -1;
        ++result.candidates_tried;
        ColoredIndex ci = colored_index(model, coloring, signs, options);
        if (ci.index.is_constant() && sgn(ci.index.series[0]) != 0) {
            result.found = true;
            result.signs = std::move(signs);
            result.witness = std::move(ci);
            return result;
        }
    }
    throw InternalConsistencyError("no sign vector gives a nonvanishing colored index on " + model.name() + " (" +
                                   std::to_string(result.candidates_tried) + " candidates)");
}

ProductModel::ProductModel(ModelPtr left, ModelPtr right) : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw std::invalid_argument("product_model: null factor");
    roots_ = joined_roots(*left_, *right_);
}

std::string ProductModel::name() const { return left_->name() + "*" + right_->name(); }
std::size_t ProductModel::half_dimension() const { return left_->half_dimension() + right_->half_dimension(); }
std::size_t ProductModel::generator_count() const { return left_->generator_count() + right_->generator_count(); }
std::vector<std::string> ProductModel::generator_labels() const { return joined_labels(*left_, *right_); }

bool ProductModel::mod2_zero(const LineClass& a) const {
    const auto [l, r] = split_class(a, left_->generator_count());
    return left_->mod2_zero(l) && right_->mod2_zero(r);
}

std::optional<std::int64_t> ProductModel::euler_characteristic() const {
    const auto a = left_->euler_characteristic();
    const auto b = right_->euler_characteristic();
    if (!a || !b) return std::nullopt;
    return *a * *b;
}

LineClass ProductModel::embed_left(const LineClass& a) const { return embed(a, 0, generator_count()); }
LineClass ProductModel::embed_right(const LineClass& b) const {
    return embed(b, left_->generator_count(), generator_count());
}

Rational ProductModel::compute_pairing(const Monomial& m) const {
    Monomial l, r;
    split_right(m, left_->generator_count(), l, r);
    if (l.degree() != left_->half_dimension() || r.degree() != right_->half_dimension()) return 0;
    return left_->pairing(l) * right_->pairing(r);
}

std::shared_ptr<const ProductModel> product_model(ModelPtr m1, ModelPtr m2) {
    return std::make_shared<ProductModel>(std::move(m1), std::move(m2));
}

SumModel::SumModel(ModelPtr left, ModelPtr right, int orientation_sign)
    : left_(std::move(left)), right_(std::move(right)), sign_(orientation_sign) {
    if (!left_ || !right_) throw std::invalid_argument("connected_sum_model: null summand");
    if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("connected_sum_model: orientation sign must be +1 or -1");
    if (left_->half_dimension() != right_->half_dimension()) {
        throw PreconditionError("connected sum needs equal dimensions (" + std::to_string(left_->half_dimension()) +
                                " vs " + std::to_string(right_->half_dimension()) + ")");
    }
    if (left_->half_dimension() < 2) throw PreconditionError("connected sum model needs complex dimension n >= 2");
    roots_ = joined_roots(*left_, *right_);
}

std::string SumModel::name() const { return left_->name() + "#" + right_->name(); }
std::size_t SumModel::half_dimension() const { return left_->half_dimension(); }
std::size_t SumModel::generator_count() const { return left_->generator_count() + right_->generator_count(); }
std::vector<std::string> SumModel::generator_labels() const { return joined_labels(*left_, *right_); }

bool SumModel::mod2_zero(const LineClass& a) const {
    const auto [l, r] = split_class(a, left_->generator_count());
    return left_->mod2_zero(l) && right_->mod2_zero(r);
}

std::optional<std::int64_t> SumModel::euler_characteristic() const {
    const auto a = left_->euler_characteristic();
    const auto b = right_->euler_characteristic();
    if (!a || !b) return std::nullopt;
    return *a + *b - 2;
}

LineClass SumModel::embed_left(const LineClass& a) const { return embed(a, 0, generator_count()); }
LineClass SumModel::embed_right(const LineClass& b) const {
    return embed(b, left_->generator_count(), generator_count());
}

Rational SumModel::compute_pairing(const Monomial& m) const {
    Monomial l, r;
    split_right(m, left_->generator_count(), l, r);
    if (r.is_one()) return left_->pairing(l);
    if (l.is_one()) return sign_ * right_->pairing(r);
    return 0;
}

std::shared_ptr<const SumModel> connected_sum_model(ModelPtr m1, ModelPtr m2, int orientation_sign) {
    return std::make_shared<SumModel>(std::move(m1), std::move(m2), orientation_sign);
}

BundleSpec tensor_extend(const SumModel& sum, const BundleSpec& v1, const BundleSpec& v2) {
    const std::size_t k = std::max(v1.size(), v2.size());
    BundleSpec out;
    for (std::size_t j = 0; j < k; ++j) {
        LineClass c(sum.generator_count(), 0);
        if (j < v1.size()) {
            const auto a = sum.embed_left(v1[j]);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += a[i];
        }
        if (j < v2.size()) {
            const auto b = sum.embed_right(v2[j]);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
        }
        out.push_back(std::move(c));
    }
    return out;
}

ProductFormulaReport verify_product_formula(ModelPtr m1, const BundleSpec& v1, const BundleSpec& w1, ModelPtr m2,
                                            const BundleSpec& v2, const BundleSpec& w2, const IndexOptions& options) {
    IndexOptions o = options;
    o.c1c.reset();
    const auto prod = product_model(m1, m2);
    ProductFormulaReport rep;
    rep.left = phi_c(*m1, v1, w1, o);
    rep.right = phi_c(*m2, v2, w2, o);
    BundleSpec v, w;
    for (const auto& c : v1) v.push_back(prod->embed_left(c));
    for (const auto& c : v2) v.push_back(prod->embed_right(c));
    for (const auto& c : w1) w.push_back(prod->embed_left(c));
    for (const auto& c : w2) w.push_back(prod->embed_right(c));
    rep.product = phi_c(*prod, v, w, o);
    const std::size_t count = o.q_order + 1;
    rep.expected.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; i + j < count; ++j) rep.expected[i + j] += rep.left.series[i] * rep.right.series[j];
    rep.holds = rep.expected == rep.product.series;
    return rep;
}

ConnectedSumReport verify_connected_sum_formula(ModelPtr m1, const BundleSpec& v1, const BundleSpec& w1, ModelPtr m2,
                                                const BundleSpec& v2, const BundleSpec& w2, int orientation_sign,
                                                const IndexOptions& options) {
    IndexOptions o = options;
    o.c1c.reset();
    const auto sum = connected_sum_model(m1, m2, orientation_sign);
    ConnectedSumReport rep;
    rep.left = phi_c(*m1, v1, w1, o);
    rep.right = phi_c(*m2, v2, w2, o);
    rep.summands_admissible = rep.left.hypotheses_met() && rep.right.hypotheses_met();
    const BundleSpec v = tensor_extend(*sum, v1, v2);
    BundleSpec w;
    for (const auto& c : w1) w.push_back(sum->embed_left(c));
    for (const auto& c : w2) w.push_back(sum->embed_right(c));
    rep.sum = phi_c(*sum, v, w, o);

    const std::size_t count = o.q_order + 1;
    rep.expected.assign(count, 0);
    const Rational left_weight = power_of_two(w2.size());
    const Rational right_weight = power_of_two(w1.size()) * orientation_sign;
    const bool use_left = v1.size() >= v2.size();
    const bool use_right = v2.size() >= v1.size();
    rep.formula = use_left && use_right ? "equal-rank" : "single-term";
    for (std::size_t k = 0; k < count; ++k) {
        if (use_left) rep.expected[k] += left_weight * rep.left.series[k];
        if (use_right) rep.expected[k] += right_weight * rep.right.series[k];
    }
    rep.holds = rep.expected == rep.sum.series;
    return rep;
}

SplitReport verify_exhaustive_split_vanishing(const QuasitoricModel& model, const std::vector<std::size_t>& subset,
                                              const IndexOptions& options) {
    const auto& roots = model.tangent_roots();
    std::vector<bool> in_v(roots.size(), false);
    for (auto i : subset) {
        if (i >= roots.size()) {
            throw std::invalid_argument("split: facet index " + std::to_string(i) + " out of range (model has " +
                                        std::to_string(roots.size()) + " facets)");
        }
        if (in_v[i]) throw std::invalid_argument("split: facet index " + std::to_string(i) + " repeated");
        in_v[i] = true;
    }
    BundleSpec v, w;
    for (std::size_t i = 0; i < roots.size(); ++i) (in_v[i] ? v : w).push_back(roots[i]);
    IndexOptions o = options;
    o.c1c.reset();
    SplitReport rep;
    rep.subset = subset;
    std::sort(rep.subset.begin(), rep.subset.end());
    rep.index = phi_c(model, v, w, o);
    rep.hypotheses_met = rep.index.hypotheses_met();
    rep.vanishes = rep.index.is_zero();
    return rep;
}

std::vector<std::vector<std::size_t>> admissible_splits(const QuasitoricModel& model) {
    const auto& roots = model.tangent_roots();
    if (roots.size() > 20) throw std::invalid_argument("admissible_splits: too many facets to enumerate");
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << roots.size()); ++mask) {
        BundleSpec v, w;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (mask >> i & 1) {
                v.push_back(roots[i]);
                s.push_back(i);
            } else {
                w.push_back(roots[i]);
            }
        }
        if (check_admissible(model, v, w).all()) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace qtoric
