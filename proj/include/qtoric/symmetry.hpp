#pragma once

// Compact simple Lie group data and the degree-of-symmetry bounds that follow
// from a nonvanishing twisted index.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qtoric/polynomial.hpp"

namespace qtoric {

class CharacteristicPair;

enum class LieFamily { A, B, C, D, G2, F4, E6, E7, E8 };

std::string to_string(LieFamily family);

// Simply connected form; low-rank coincidences appear once, under `name`,
// with the other names kept as aliases (SU(2) = Spin(3), Spin(5) = Sp(2), SU(4) = Spin(6)).
struct GroupRecord {
    LieFamily family;
    int rank = 0;
    std::int64_t dim = 0;
    mpz_class weyl_order;
    std::string name;
    std::vector<std::string> aliases;

    bool known_as(const std::string& n) const;
    bool operator==(const GroupRecord& o) const { return family == o.family && rank == o.rank; }
};

// All simple simply connected compact groups of rank <= max_rank, ordered by rank.
std::vector<GroupRecord> simple_groups(int max_rank);

struct AlphaValue {
    Rational value;
    std::vector<GroupRecord> witnesses;  // rank exactly l with dim = value * l
};

// max dim G / rank G over simple G with rank G <= l.
AlphaValue alpha(int l);

// Simple groups of rank <= max_rank whose Weyl group order divides chi.
// Throws std::invalid_argument for chi = 0.
std::vector<GroupRecord> divisibility_candidates(std::int64_t chi, int max_rank);

// alpha(alpha+1)/2 + (2n-alpha)(2n-alpha+1)/2
std::int64_t kmss_bound(int alpha_deg, int n);

struct SemisimpleCandidate {
    std::vector<GroupRecord> factors;
    int rank = 0;
    std::int64_t dim = 0;
    mpz_class weyl_order;

    std::string name() const;
};

// Products of simple candidates with total rank <= n, total Weyl order dividing
// chi, and dim - rank <= 2n (dim - rank = 2n only with rank >= torus_rank when known).
std::vector<SemisimpleCandidate> semisimple_candidates(std::int64_t chi, int n,
                                                       std::optional<int> torus_rank = std::nullopt);

struct BoundRule {
    std::string id;
    std::string statement;
    bool fired = false;
    std::optional<std::int64_t> ceiling;
    std::string note;  // equality case when fired, reason when skipped
};

struct SymmetryReport {
    int n = 0;
    std::int64_t chi = 0;
    bool index_nonvanishing = false;
    std::optional<std::int64_t> n_max;
    std::vector<BoundRule> rules;
    bool divisibility_applied = false;
    std::vector<GroupRecord> simple_candidates;
    std::vector<SemisimpleCandidate> semisimple;
    std::string semisimple_note;
};

struct ReportInput {
    int n = 0;
    std::int64_t chi = 0;
    bool index_nonvanishing = false;
    // The orbit polytope is a simplex, so M may be CP^n.
    bool maybe_projective_space = false;
    std::optional<int> torus_rank;
};

SymmetryReport symmetry_report(const ReportInput& input);
SymmetryReport symmetry_report(const CharacteristicPair& pair, bool index_nonvanishing);

}  // namespace qtoric
