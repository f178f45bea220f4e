#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "qtoric/charpair.hpp"
#include "qtoric/symmetry.hpp"

using namespace qtoric;

namespace {

std::vector<std::string> names(const std::vector<GroupRecord>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.name);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("closed forms") {
    for (const auto& g : simple_groups(10)) {
        const long l = g.rank;
        switch (g.family) {
            case LieFamily::A:
                CHECK(g.dim == l * l + 2 * l);
                CHECK(Rational(g.weyl_order) == oracle::factorial(l + 1));
                break;
            case LieFamily::B:
            case LieFamily::C:
                CHECK(g.dim == 2 * l * l + l);
                CHECK(Rational(g.weyl_order) == oracle::factorial(l) * Rational(mpz_class(1) << l));
                break;
            case LieFamily::D:
                CHECK(g.dim == 2 * l * l - l);
                CHECK(Rational(g.weyl_order) == oracle::factorial(l) * Rational(mpz_class(1) << (l - 1)));
                break;
            default:
                break;
        }
        CHECK(Rational(static_cast<long>(g.dim)) <= alpha(g.rank).value * l);
    }
}

TEST_CASE("low-rank groups") {
    const auto r1 = simple_groups(1);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].name == "SU(2)");
    CHECK(r1[0].known_as("Spin(3)"));
    CHECK(r1[0].dim == 3);
    CHECK(r1[0].weyl_order == 2);
    const auto r2 = simple_groups(2);
    const auto g2 = std::find_if(r2.begin(), r2.end(), [](const GroupRecord& g) { return g.name == "G2"; });
    REQUIRE(g2 != r2.end());
    CHECK(g2->dim == 14);
    CHECK(g2->weyl_order == 12);
    const auto r4 = simple_groups(4);
    const auto f4 = std::find_if(r4.begin(), r4.end(), [](const GroupRecord& g) { return g.name == "F4"; });
    REQUIRE(f4 != r4.end());
    CHECK(f4->dim == 52);
    CHECK(f4->weyl_order == 1152);
    // one record per isomorphism class
    for (int l = 1; l <= 6; ++l) {
        const auto gs = simple_groups(l);
        for (std::size_t i = 0; i < gs.size(); ++i)
            for (std::size_t j = i + 1; j < gs.size(); ++j)
                CHECK_FALSE((gs[i].rank == gs[j].rank && gs[i].dim == gs[j].dim && gs[i].weyl_order == gs[j].weyl_order &&
                             gs[i].family != LieFamily::B && gs[i].family != LieFamily::C));
    }
}

TEST_CASE("alpha values") {
    CHECK(alpha(1).value == 3);
    CHECK(names(alpha(1).witnesses) == std::vector<std::string>{"SU(2)"});
    CHECK(alpha(4).value == 13);
    CHECK(names(alpha(4).witnesses) == std::vector<std::string>{"F4"});
    CHECK(alpha(5).witnesses.empty());
    CHECK(alpha(8).value == 31);
    for (int l = 15; l <= 25; ++l) CHECK(alpha(l).value == 2 * l + 1);
}

TEST_CASE("Weyl divisibility") {
    // |W(Spin(5))| = 8
    CHECK(names(divisibility_candidates(4, 2)) == std::vector<std::string>{"SU(2)"});
    for (int n = 3; n <= 12; ++n)
        CHECK(names(divisibility_candidates(std::int64_t{1} << n, n)) == std::vector<std::string>{"SU(2)", "Spin(5)"});
    CHECK(names(divisibility_candidates(46, 20)) == std::vector<std::string>{"SU(2)"});
    CHECK(divisibility_candidates(7, 10).empty());
    CHECK_THROWS(divisibility_candidates(0, 3));
    for (std::int64_t chi : {6, 12, 24, 36, 48}) {
        const auto small = names(divisibility_candidates(chi, 6));
        const auto big = names(divisibility_candidates(2 * chi, 6));
        CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
}

TEST_CASE("Betti-degree bound arithmetic") {
    CHECK(kmss_bound(10, 10) == 110);
    CHECK(kmss_bound(9, 10) == 111);
    CHECK(kmss_bound(0, 4) == 4 * 9);
    CHECK_THROWS(kmss_bound(21, 10));
}

TEST_CASE("semisimple candidates") {
    CHECK(semisimple_candidates(9, 4).empty());
    const auto c = semisimple_candidates(8, 3, 3);
    std::vector<std::string> got;
    for (const auto& s : c) got.push_back(s.name());
    std::sort(got.begin(), got.end());
    // Spin(5) has dim - rank = 8 > 2n
    CHECK(got == std::vector<std::string>{"SU(2)", "SU(2) x SU(2)", "SU(2) x SU(2) x SU(2)"});
}

TEST_CASE("symmetry reports") {
    const auto cube = symmetry_report(cube_pair(3), true);
    CHECK(cube.n_max == 9);
    CHECK(names(cube.simple_candidates) == std::vector<std::string>{"SU(2)", "Spin(5)"});

    const auto cp3 = symmetry_report(projective_space(3), false);
    CHECK(cp3.n_max == 15);
    CHECK_FALSE(cp3.rules[0].fired);
    CHECK_FALSE(cp3.divisibility_applied);
    CHECK(cp3.rules[1].note.find("CP^n") != std::string::npos);

    ReportInput odd;
    odd.n = 2;
    odd.chi = 3;
    odd.index_nonvanishing = true;
    const auto r = symmetry_report(odd);
    CHECK(r.semisimple.empty());
    CHECK(r.semisimple_note.find("N^ss(M)=0") != std::string::npos);
}
