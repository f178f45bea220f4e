#pragma once

// Rational cohomology models generated in degree two.
//
// An IndexModel exposes exactly what the index computations need: the
// half-dimension n, a set of degree-two generators, the pairing of
// degree-n monomials with the fundamental class, stable tangent roots, and a
// test for vanishing of integral degree-two classes modulo 2.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "qtoric/charpair.hpp"
#include "qtoric/linalg.hpp"
#include "qtoric/polynomial.hpp"

namespace qtoric {

// Sum of complex line bundles, one integral first Chern class per summand.
using BundleSpec = std::vector<LineClass>;

class IndexModel {
public:
    IndexModel() = default;
    IndexModel(const IndexModel&) = delete;
    IndexModel& operator=(const IndexModel&) = delete;
    virtual ~IndexModel() = default;

    virtual std::string name() const = 0;
    virtual std::size_t half_dimension() const = 0;
    virtual std::size_t generator_count() const = 0;
    virtual std::vector<std::string> generator_labels() const;
    virtual const std::vector<LineClass>& tangent_roots() const = 0;
    // Is the class sum a_i g_i zero in H^2(M; Z/2)?
    virtual bool mod2_zero(const LineClass& a) const = 0;
    virtual std::optional<std::int64_t> euler_characteristic() const { return std::nullopt; }

    // <m, [M]>; zero unless deg m == n. Memoized, safe for concurrent callers.
    Rational pairing(const Monomial& m) const;

protected:
    virtual Rational compute_pairing(const Monomial& m) const = 0;

private:
    mutable std::shared_mutex memo_mutex_;
    mutable std::map<Monomial, Rational> memo_;
};

using ModelPtr = std::shared_ptr<const IndexModel>;

LineClass first_chern_class(const IndexModel& model);
GradedPolynomial first_pontryagin_class(const IndexModel& model);

// Linear extension of the pairing; terms of degree != n contribute nothing.
Rational pair_top(const IndexModel& model, const GradedPolynomial& poly);

// Rational Poincare duality test: poly (homogeneous of degree k) is zero iff
// it pairs to zero with every monomial of degree n - k.
bool is_zero_class(const IndexModel& model, const GradedPolynomial& poly, std::size_t degree);
bool is_even_class(const IndexModel& model, const LineClass& a);

// Rank of the pairing matrix between degree-k and degree-(n-k) monomials.
std::size_t pairing_rank(const IndexModel& model, std::size_t k);

struct AdmissibilityReport {
    bool c1_matches = false;   // c1(V) (or the requested c1^c) = c1(M) mod 2
    bool w_spin = false;       // c1(W) = 0 mod 2
    bool p1_balanced = false;  // p1(V) + p1(W) - p1(M) = 0 rationally
    LineClass c1_v;
    LineClass c1_w;
    LineClass c1_m;
    GradedPolynomial p1_difference;

    bool all() const noexcept { return c1_matches && w_spin && p1_balanced; }
};

// When V is empty the Spin^c class defaults to `c1c` (zero if absent).
AdmissibilityReport check_admissible(const IndexModel& model, const BundleSpec& v, const BundleSpec& w,
                                     const std::optional<LineClass>& c1c = std::nullopt);

// Fixed-point evaluation of top pairings for a characteristic pair. Each sum is
// evaluated exactly at two independent generic integer points and the two
// values must agree.
class LocalizationOracle {
public:
    LocalizationOracle(const CharacteristicPair& pair, const LocalizationOptions& options = {});

    Rational pair(const Monomial& m) const;
    const std::array<std::vector<std::int64_t>, 2>& points() const noexcept { return points_; }

private:
    Rational evaluate(const Monomial& m, std::size_t point) const;

    CharacteristicPair pair_;
    std::array<std::vector<std::int64_t>, 2> points_;
    // weight_values_[p][v][k] = <weight k at vertex v, point p>
    std::array<std::vector<std::vector<mpz_class>>, 2> weight_values_;
    std::array<std::vector<mpz_class>, 2> euler_values_;
    std::vector<std::vector<int>> facet_position_;  // [v][facet] -> position or -1
};

Rational localization_pairing(const CharacteristicPair& pair, const Monomial& m,
                              const LocalizationOptions& options = {});

struct RingReductionOptions {
    std::size_t max_dim = 3;
    std::size_t max_monomials = 50'000;
};

// Top-degree pairing from the presentation Z[u]/(I + J): eliminate the
// generators of a reference vertex through the linear relations, reduce by
// the Stanley-Reisner monomials, and normalize the reference vertex monomial
// to pair to +1.
class RingReductionOracle {
public:
    RingReductionOracle(const CharacteristicPair& pair, const RingReductionOptions& options = {});

    Rational pair(const Monomial& m) const;

private:
    std::vector<Rational> image(const Monomial& m) const;

    std::size_t dim_;
    std::size_t facet_count_;
    std::vector<GradedPolynomial> substitution_;  // u_i in the remaining variables
    std::map<Monomial, std::size_t> target_index_;
    std::unique_ptr<EchelonBasis> relations_;
    std::size_t free_column_ = 0;
    Rational reference_value_;
};

Rational ring_reduction_pairing(const CharacteristicPair& pair, const Monomial& m,
                                const RingReductionOptions& options = {});

class QuasitoricModel final : public IndexModel {
public:
    QuasitoricModel(CharacteristicPair pair, const LocalizationOptions& options = {});

    std::string name() const override { return pair_.name(); }
    std::size_t half_dimension() const override { return pair_.dim(); }
    std::size_t generator_count() const override { return pair_.facet_count(); }
    std::vector<std::string> generator_labels() const override;
    const std::vector<LineClass>& tangent_roots() const override { return roots_; }
    bool mod2_zero(const LineClass& a) const override;
    std::optional<std::int64_t> euler_characteristic() const override;

    const CharacteristicPair& pair() const noexcept { return pair_; }

protected:
    Rational compute_pairing(const Monomial& m) const override;

private:
    CharacteristicPair pair_;
    LocalizationOracle oracle_;
    std::vector<LineClass> roots_;
};

// The one-point space: n = 0, no generators, <1,[pt]> = 1.
class PointModel final : public IndexModel {
public:
    std::string name() const override { return "point"; }
    std::size_t half_dimension() const override { return 0; }
    std::size_t generator_count() const override { return 0; }
    const std::vector<LineClass>& tangent_roots() const override { return roots_; }
    bool mod2_zero(const LineClass&) const override { return true; }
    std::optional<std::int64_t> euler_characteristic() const override { return 1; }

protected:
    Rational compute_pairing(const Monomial& m) const override { return m.is_one() ? 1 : 0; }

private:
    std::vector<LineClass> roots_;
};

}  // namespace qtoric
