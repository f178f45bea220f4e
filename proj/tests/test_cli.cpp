#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "qtoric/cli.hpp"

using qtoric::run;
using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate piped into chi") {
    const auto gen = call({"generate", "cube:3"});
    REQUIRE(gen.code == 0);
    const auto chi = call({"chi", "--format", "text"}, gen.out);
    CHECK(chi.code == 0);
    CHECK(chi.out == "8\n");
}

TEST_CASE("colored index of a Hirzebruch surface") {
    const auto gen = call({"generate", "hirzebruch:2"});
    const auto r = call({"color-index", "--signs", "++++"}, gen.out);
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["series"] == Json::array({"4/1", "0/1", "0/1", "0/1", "0/1"}));
    CHECK(j["matches_euler_pairing"] == true);
}

TEST_CASE("alpha table dump") {
    const auto r = call({"alpha", "--max-rank", "8", "--format", "text"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == "1\t3\tSU(2)");
    CHECK(rows[4] == "5\t13\tnone");
    CHECK(rows[7] == "8\t31\tE8");
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"index", "-m", "builtin:simplex:3", "--V", "[[1,0,0,0],[0,1,0,0]]", "--W",
                                        "[[0,0,1,0],[0,0,0,1]]", "--seed", "42"};
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["flags"].dump().find("vanishes") != std::string::npos);
    auto other_seed = args;
    other_seed.back() = "43";
    CHECK(Json::parse(call(other_seed).out)["series"] == Json::parse(a.out)["series"]);
}

TEST_CASE("files and pipes round-trip") {
    const auto gen = call({"generate", "polygon:6*cube:1"});
    const auto piped = call({"symmetry-report"}, gen.out);
    const auto direct = call({"symmetry-report", "-m", "builtin:polygon:6*cube:1"});
    CHECK(piped.code == 0);
    CHECK(piped.out == direct.out);
    const auto regen = call({"generate", "polygon:6*cube:1"});
    CHECK(regen.out == gen.out);
}

TEST_CASE("exit codes") {
    CHECK(call({"chi"}, "{not json").code == 2);
    const auto bad_facet = call({"chi"}, R"({"dim":2,"facets":3,"vertices":[[0,1],[1,2],[2,5]]})");
    CHECK(bad_facet.code == 2);
    CHECK(bad_facet.err.find("vertices[2][1]") != std::string::npos);
    CHECK(call({"genus", "-m", "builtin:simplex:2", "--kind", "elliptic"}).code == 3);
    CHECK(call({"verify", "-m", "builtin:simplex:3", "--theorem", "split", "--subset", "0"}).code == 3);
    CHECK(call({"verify", "-m", "builtin:simplex:3", "--theorem", "split", "--subset", "0,1"}).code == 0);
    CHECK(call({"color-index", "-m", "builtin:simplex:2"}).code == 3);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"generate", "dodecahedron:3"}).code == 2);
}

TEST_CASE("validate reports the failing vertex") {
    const auto r = call({"validate"}, R"({"dim":2,"facets":4,"vertices":[[0,1],[1,2],[2,3],[0,3]],
        "lambda":[[1,0],[0,1],[1,0],[0,2]]})");
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out)["ok"] == false);
    CHECK(call({"validate", "-m", "builtin:hirzebruch:1"}).code == 0);
}

TEST_CASE("verify subcommands") {
    const auto product = call({"verify", "-m", "builtin:cube:2", "--theorem", "product", "--manifold2",
                               "builtin:simplex:1", "--V", "colored", "--W2", "tangent"});
    CHECK(product.code == 0);
    CHECK(Json::parse(product.out)["holds"] == true);
    const auto connsum = call({"verify", "-m", "builtin:cube:2", "--theorem", "connsum", "--manifold2",
                               "builtin:cube:2", "--V", "colored", "--V2", "colored"});
    CHECK(connsum.code == 0);
    CHECK(Json::parse(connsum.out)["lhs"][0] == "8/1");
    const auto splits = call({"verify", "-m", "builtin:cube:2", "--theorem", "split", "--all"});
    CHECK(splits.code == 0);
    CHECK(Json::parse(splits.out)["admissible_splits"] == 4);
}

TEST_CASE("analyze cross-checks evenness") {
    const auto r = call({"analyze", "-m", "builtin:polygon:7"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["even"] == false);
    CHECK(j["facet_chromatic_number"] == 3);
    CHECK(j["evenness_consistent"] == true);
}
