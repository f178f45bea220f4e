#pragma once

// The twisted index phi^c(M; V, W) as a truncated q-series, the genera it
// specializes to, and the product / connected-sum model combinators.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/cohomology.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/qseries.hpp"

namespace qtoric {

struct IndexOptions {
    std::size_t q_order = 4;
    // Spin^c class used when V is empty; zero when absent.
    std::optional<LineClass> c1c;
    // Worker threads for the per-q-power pairings; 0 or 1 runs inline.
    unsigned threads = 1;
};

struct IndexResult {
    std::vector<Rational> series;  // coefficients of q^0 .. q^N
    AdmissibilityReport admissibility;
    std::string model_name;
    BundleSpec v;
    BundleSpec w;
    std::size_t q_order = 0;
    std::vector<std::string> warnings;

    bool hypotheses_met() const noexcept { return admissibility.all(); }
    bool is_zero() const;
    bool is_constant() const;
};

// The integrand e(V) Q2'(V) Q1(TM) Q3(W) A(TM) (or e^{c/2} in place of the V
// factor when V is empty) up to q^N, truncated at degree n.
QSeries index_integrand(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                        const IndexOptions& options = {});
// The same integrand in the form e^{c1(V)/2} Q2(V) Q1(TM) Q3(W) A(TM).
QSeries index_integrand_exponential(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                                    const IndexOptions& options = {});

IndexResult phi_c(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                  const IndexOptions& options = {});
IndexResult phi_c_exponential(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                              const IndexOptions& options = {});

IndexResult witten_genus(const IndexModel& model, const IndexOptions& options = {});
// Throws PreconditionError unless c1(M) is even.
IndexResult elliptic_genus(const IndexModel& model, const IndexOptions& options = {});

// V = sum over colors i of the line bundle with c1 = sum_{f(j)=i} signs_j u_j.
BundleSpec colored_bundle(const IndexModel& model, const FacetColoring& coloring, const std::vector<int>& signs);

struct ColoredIndex {
    IndexResult index;
    BundleSpec v;
    Rational euler_pairing;  // <prod of color classes, [M]>
    bool matches_euler_pairing = false;
};

// Throws PreconditionError unless the coloring is proper with exactly n colors.
ColoredIndex colored_index(const QuasitoricModel& model, const FacetColoring& coloring, const std::vector<int>& signs,
                           const IndexOptions& options = {});

struct SignSearchResult {
    bool found = false;
    std::vector<int> signs;
    ColoredIndex witness;
    std::size_t candidates_tried = 0;
};

// Enumerates sign vectors with the first facet of each color fixed to +1,
// starting from all-plus. Exhausting the search throws InternalConsistencyError.
SignSearchResult exists_nonvanishing_signs(const QuasitoricModel& model, const FacetColoring& coloring,
                                           const IndexOptions& options = {});

class ProductModel final : public IndexModel {
public:
    ProductModel(ModelPtr left, ModelPtr right);

    std::string name() const override;
    std::size_t half_dimension() const override;
    std::size_t generator_count() const override;
    std::vector<std::string> generator_labels() const override;
    const std::vector<LineClass>& tangent_roots() const override { return roots_; }
    bool mod2_zero(const LineClass& a) const override;
    std::optional<std::int64_t> euler_characteristic() const override;

    LineClass embed_left(const LineClass& a) const;
    LineClass embed_right(const LineClass& b) const;

protected:
    Rational compute_pairing(const Monomial& m) const override;

private:
    ModelPtr left_;
    ModelPtr right_;
    std::vector<LineClass> roots_;
};

std::shared_ptr<const ProductModel> product_model(ModelPtr m1, ModelPtr m2);

class SumModel final : public IndexModel {
public:
    // Throws PreconditionError unless both halves have the same n >= 2.
    SumModel(ModelPtr left, ModelPtr right, int orientation_sign = 1);

    std::string name() const override;
    std::size_t half_dimension() const override;
    std::size_t generator_count() const override;
    std::vector<std::string> generator_labels() const override;
    const std::vector<LineClass>& tangent_roots() const override { return roots_; }
    bool mod2_zero(const LineClass& a) const override;
    std::optional<std::int64_t> euler_characteristic() const override;

    int orientation_sign() const noexcept { return sign_; }
    LineClass embed_left(const LineClass& a) const;
    LineClass embed_right(const LineClass& b) const;

protected:
    Rational compute_pairing(const Monomial& m) const override;

private:
    ModelPtr left_;
    ModelPtr right_;
    int sign_;
    std::vector<LineClass> roots_;
};

std::shared_ptr<const SumModel> connected_sum_model(ModelPtr m1, ModelPtr m2, int orientation_sign = 1);

// Class j pairs as V1[j] on the left and V2[j] on the right; the shorter list
// is padded with trivial bundles.
BundleSpec tensor_extend(const SumModel& sum, const BundleSpec& v1, const BundleSpec& v2);

struct ProductFormulaReport {
    IndexResult left;
    IndexResult right;
    IndexResult product;
    std::vector<Rational> expected;  // coefficient-wise product of the factor series
    bool holds = false;
};

ProductFormulaReport verify_product_formula(ModelPtr m1, const BundleSpec& v1, const BundleSpec& w1, ModelPtr m2,
                                            const BundleSpec& v2, const BundleSpec& w2,
                                            const IndexOptions& options = {});

struct ConnectedSumReport {
    IndexResult left;
    IndexResult right;
    IndexResult sum;
    std::vector<Rational> expected;
    // "equal-rank" (both summands contribute) or "single-term" (rank V1 > rank V2, or the reverse)
    std::string formula;
    bool summands_admissible = false;
    bool holds = false;
};

ConnectedSumReport verify_connected_sum_formula(ModelPtr m1, const BundleSpec& v1, const BundleSpec& w1, ModelPtr m2,
                                                const BundleSpec& v2, const BundleSpec& w2, int orientation_sign = 1,
                                                const IndexOptions& options = {});

struct SplitReport {
    std::vector<std::size_t> subset;  // facet indices carried by V
    IndexResult index;
    bool hypotheses_met = false;
    bool vanishes = false;
};

// V = sum_{i in S} L_i, W = sum_{i not in S} L_i with c1(L_i) = signs_i u_i.
SplitReport verify_exhaustive_split_vanishing(const QuasitoricModel& model, const std::vector<std::size_t>& subset,
                                              const IndexOptions& options = {});

// All subsets S whose split passes the admissibility checks.
std::vector<std::vector<std::size_t>> admissible_splits(const QuasitoricModel& model);

}  // namespace qtoric
