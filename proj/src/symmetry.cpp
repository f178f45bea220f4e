#include "qtoric/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qtoric/charpair.hpp"

namespace qtoric {

std::string to_string(LieFamily family) {
    switch (family) {
        case LieFamily::A: return "A";
        case LieFamily::B: return "B";
        case LieFamily::C: return "C";
        case LieFamily::D: return "D";
        case LieFamily::G2: return "G2";
        case LieFamily::F4: return "F4";
        case LieFamily::E6: return "E6";
        case LieFamily::E7: return "E7";
        case LieFamily::E8: return "E8";
    }
    return "?";
}

bool GroupRecord::known_as(const std::string& n) const {
    return n == name || std::find(aliases.begin(), aliases.end(), n) != aliases.end();
}

namespace {

mpz_class factorial(int k) {
    mpz_class r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

mpz_class two_power(int k) {
    mpz_class r = 1;
    r <<= static_cast<mp_bitcnt_t>(k);
    return r;
}

GroupRecord classical(LieFamily f, int l) {
    GroupRecord g;
    g.family = f;
    g.rank = l;
    const std::int64_t L = l;
    switch (f) {
        case LieFamily::A:
            g.dim = L * L + 2 * L;
            g.weyl_order = factorial(l + 1);
            g.name = "SU(" + std::to_string(l + 1) + ")";
            if (l == 1) g.aliases = {"Spin(3)", "Sp(1)"};
            if (l == 3) g.aliases = {"Spin(6)"};
            break;
        case LieFamily::B:
            g.dim = 2 * L * L + L;
            g.weyl_order = two_power(l) * factorial(l);
            g.name = "Spin(" + std::to_string(2 * l + 1) + ")";
            if (l == 2) g.aliases = {"Sp(2)"};
            break;
        case LieFamily::C:
            g.dim = 2 * L * L + L;
            g.weyl_order = two_power(l) * factorial(l);
            g.name = "Sp(" + std::to_string(l) + ")";
            break;
        case LieFamily::D:
            g.dim = 2 * L * L - L;
            g.weyl_order = two_power(l - 1) * factorial(l);
            g.name = "Spin(" + std::to_string(2 * l) + ")";
            break;
        default:
            throw std::logic_error("classical: exceptional family");
    }
    return g;
}

GroupRecord exceptional(LieFamily f, int rank, std::int64_t dim, long weyl, const char* name) {
    GroupRecord g;
    g.family = f;
    g.rank = rank;
    g.dim = dim;
    g.weyl_order = weyl;
    g.name = name;
    return g;
}

bool divides(const mpz_class& d, std::int64_t chi) {
    mpz_class c(static_cast<long>(chi));
    return mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

std::vector<GroupRecord> simple_groups(int max_rank) {
    if (max_rank < 1) throw std::invalid_argument("simple_groups: max_rank must be >= 1");
    std::vector<GroupRecord> out;
    for (int l = 1; l <= max_rank; ++l) {
        out.push_back(classical(LieFamily::A, l));
        if (l >= 2) out.push_back(classical(LieFamily::B, l));
        if (l >= 3) out.push_back(classical(LieFamily::C, l));
        if (l >= 4) out.push_back(classical(LieFamily::D, l));
        if (l == 2) out.push_back(exceptional(LieFamily::G2, 2, 14, 12, "G2"));
        if (l == 4) out.push_back(exceptional(LieFamily::F4, 4, 52, 1152, "F4"));
        if (l == 6) out.push_back(exceptional(LieFamily::E6, 6, 78, 51840, "E6"));
        if (l == 7) out.push_back(exceptional(LieFamily::E7, 7, 133, 2903040, "E7"));
        if (l == 8) out.push_back(exceptional(LieFamily::E8, 8, 248, 696729600, "E8"));
    }
    return out;
}

AlphaValue alpha(int l) {
    const auto groups = simple_groups(l);
    AlphaValue a;
    a.value = 0;
    for (const auto& g : groups) {
        Rational ratio(mpz_class(static_cast<long>(g.dim)), mpz_class(g.rank));
        ratio.canonicalize();
        a.value = std::max(a.value, ratio);
    }
    for (const auto& g : groups) {
        if (g.rank == l && Rational(static_cast<long>(g.dim)) == a.value * l) a.witnesses.push_back(g);
    }
    return a;
}

std::vector<GroupRecord> divisibility_candidates(std::int64_t chi, int max_rank) {
    if (chi == 0) throw std::invalid_argument("divisibility_candidates: chi must be nonzero");
    std::vector<GroupRecord> out;
    if (max_rank < 1) return out;
    for (auto& g : simple_groups(max_rank))
        if (divides(g.weyl_order, chi)) out.push_back(std::move(g));
    return out;
}

std::int64_t kmss_bound(int alpha_deg, int n) {
    if (alpha_deg < 0 || alpha_deg > 2 * n) throw std::invalid_argument("kmss_bound: need 0 <= alpha <= 2n");
    const std::int64_t a = alpha_deg;
    const std::int64_t b = 2 * static_cast<std::int64_t>(n) - a;
    return a * (a + 1) / 2 + b * (b + 1) / 2;
}

std::string SemisimpleCandidate::name() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factors[i].name;
    return s;
}

std::vector<SemisimpleCandidate> semisimple_candidates(std::int64_t chi, int n, std::optional<int> torus_rank) {
    std::vector<SemisimpleCandidate> out;
    if (n < 1) return out;
    const auto simple = divisibility_candidates(chi, n);
    const std::int64_t budget = 2 * static_cast<std::int64_t>(n);
    SemisimpleCandidate cur;
    cur.weyl_order = 1;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        for (std::size_t i = from; i < simple.size(); ++i) {
            const auto& g = simple[i];
            if (cur.rank + g.rank > n) continue;
            const mpz_class w = cur.weyl_order * g.weyl_order;
            if (!divides(w, chi)) continue;
            const std::int64_t excess = cur.dim - cur.rank + g.dim - g.rank;
            if (excess > budget) continue;
            SemisimpleCandidate saved = cur;
            cur.factors.push_back(g);
            cur.rank += g.rank;
            cur.dim += g.dim;
            cur.weyl_order = w;
            const bool excluded = excess == budget && torus_rank && cur.rank < *torus_rank;
            if (!excluded) out.push_back(cur);
            extend(i);
            cur = std::move(saved);
        }
    };
    extend(0);
    return out;
}

namespace {

BoundRule make_rule(std::string id, std::string statement) {
    BoundRule r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    return r;
}

}  // namespace

SymmetryReport symmetry_report(const ReportInput& in) {
    SymmetryReport r;
    r.n = in.n;
    r.chi = in.chi;
    r.index_nonvanishing = in.index_nonvanishing;
    const std::int64_t n = in.n;
    const bool index_rules = in.index_nonvanishing && in.chi != 0;
    const std::string index_reason =
        !in.index_nonvanishing ? "no nonvanishing twisted index known" : "Euler characteristic is zero";

    BoundRule three_n = make_rule("index-3n", "nonvanishing twisted index and chi(M) != 0 imply dim G <= 3n");
    if (index_rules) {
        three_n.fired = true;
        three_n.ceiling = 3 * n;
        three_n.note = "equality only for a product of 2-spheres";
    } else {
        three_n.note = index_reason;
    }
    r.rules.push_back(three_n);

    BoundRule cpn = make_rule("quasitoric-cpn", "a quasitoric manifold of dimension 2n has N(M) <= n^2 + 2n");
    cpn.fired = true;
    cpn.ceiling = n * n + 2 * n;
    cpn.note = "equality only for CP^n";
    r.rules.push_back(cpn);

    BoundRule kmss = make_rule("kmss", "H^a(M;Q) != 0 with 0 < a < 2n and M != CP^n imply N(M) <= a(a+1)/2 + (2n-a)(2n-a+1)/2");
    if (in.maybe_projective_space) {
        kmss.note = "orbit polytope is a simplex; M may be CP^n";
    } else if (n < 2) {
        kmss.note = "needs n >= 2";
    } else {
        // rational cohomology lives in even degrees; take the even degree nearest n
        const int a = static_cast<int>(n % 2 == 0 ? n : n - 1);
        kmss.fired = true;
        kmss.ceiling = kmss_bound(a, static_cast<int>(n));
        kmss.note = "a = " + std::to_string(a);
    }
    r.rules.push_back(kmss);

    BoundRule weyl = make_rule("weyl-divisibility", "nonvanishing twisted index implies #W(G) | chi(M) for every simple factor");
    BoundRule ss = make_rule("semisimple-filter",
                 "nonvanishing twisted index excludes dim G - rank G > 2n and dim G - rank G = 2n with rank G < T(M)");
    if (index_rules) {
        weyl.fired = true;
        ss.fired = true;
        r.divisibility_applied = true;
        r.simple_candidates = divisibility_candidates(in.chi, in.n);
        r.semisimple = semisimple_candidates(in.chi, in.n, in.torus_rank);
        if (r.semisimple.empty()) {
            r.semisimple_note = "N^ss(M)=0: no semisimple compact Lie group acts almost effectively";
        } else {
            std::int64_t best = 0;
            for (const auto& c : r.semisimple) best = std::max(best, c.dim);
            r.semisimple_note = "largest admissible semisimple dimension " + std::to_string(best);
        }
    } else {
        weyl.note = index_reason;
        ss.note = index_reason;
    }
    r.rules.push_back(weyl);
    r.rules.push_back(ss);

    for (const auto& rule : r.rules) {
        if (rule.fired && rule.ceiling) r.n_max = r.n_max ? std::min(*r.n_max, *rule.ceiling) : *rule.ceiling;
    }
    return r;
}

SymmetryReport symmetry_report(const CharacteristicPair& pair, bool index_nonvanishing) {
    ReportInput in;
    in.n = static_cast<int>(pair.dim());
    in.chi = euler_characteristic(pair);
    in.index_nonvanishing = index_nonvanishing;
    in.maybe_projective_space = pair.facet_count() == pair.dim() + 1;
    in.torus_rank = in.n;
    return symmetry_report(in);
}

}  // namespace qtoric
