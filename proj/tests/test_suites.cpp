#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <z2c/suites.hpp>

#include <algorithm>
#include <set>

using namespace z2c;

namespace {

std::vector<std::string> ids_of(const std::vector<Check>& checks) {
    std::vector<std::string> out;
    for (const auto& c : checks) out.push_back(c.id);
    return out;
}

} // namespace

TEST_CASE("the full suite assembles a deterministic check list") {
    SuiteOptions opts;
    auto checks = build_checks(opts);
    auto ids = ids_of(checks);
    CHECK(ids.size() == 71);
    // stable prefix: the four weyl-group reports come first
    REQUIRE(ids.size() > 4);
    CHECK(ids[0] == "f4/invariance");
    CHECK(ids[1] == "f4/tops");
    CHECK(ids[2] == "f4/independence");
    CHECK(ids[3] == "f4/bidegrees");
    // every id unique
    std::set<std::string> uniq(ids.begin(), ids.end());
    CHECK(uniq.size() == ids.size());
    // spot membership across the suites
    for (const char* want :
         {"good-gens/gl(3,3)", "good-gens/so(6,3)", "negcontrol/power-traces/so(4,1)",
          "negcontrol/power-traces/so(5,2)", "bidegree-bound/so(6,3)", "tables/gl(1,1)",
          "index/k(gl(2,2))", "index/heisenberg", "nregular/system/n=1",
          "nregular/span/n=3/random", "dimstab/k(gl(2,1))", "dimstab/k(so(4,3))",
          "uslovie/2n=12", "uslovie/centralizer-dims"}) {
        CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
    }
    // assembling twice gives the same list
    CHECK(ids_of(build_checks(opts)) == ids);
}

TEST_CASE("the f4 suite is exactly four reports") {
    SuiteOptions opts;
    opts.suite = "f4";
    auto ids = ids_of(build_checks(opts));
    CHECK(ids == std::vector<std::string>{"f4/invariance", "f4/tops", "f4/independence",
                                          "f4/bidegrees"});
}

TEST_CASE("single-pair selection") {
    SuiteOptions opts;
    opts.suite = "good-gens";
    opts.family = "gl";
    opts.n = 2;
    opts.m = 1;
    auto ids = ids_of(build_checks(opts));
    CHECK(ids == std::vector<std::string>{"good-gens/gl(2,1)", "bidegree-bound/gl(2,1)"});

    // the negative control rides along only with its so pairs
    opts.family = "so";
    opts.n = 4;
    opts.m = 1;
    ids = ids_of(build_checks(opts));
    CHECK(ids == std::vector<std::string>{"good-gens/so(4,1)", "negcontrol/power-traces/so(4,1)",
                                          "bidegree-bound/so(4,1)"});

    // heisenberg focus shrinks the index suite to its one check
    SuiteOptions h;
    h.suite = "index";
    h.family = "heisenberg";
    ids = ids_of(build_checks(h));
    CHECK(ids == std::vector<std::string>{"index/heisenberg"});
}

TEST_CASE("option validation") {
    SuiteOptions opts;
    opts.suite = "nope";
    CHECK_THROWS_AS(build_checks(opts), std::invalid_argument);

    SuiteOptions fam;
    fam.family = "e8";
    CHECK_THROWS_AS(build_checks(fam), std::invalid_argument);

    SuiteOptions sp;
    sp.family = "sp";
    CHECK_THROWS_AS(build_checks(sp), ConjecturalRequest);

    SuiteOptions lonely_n;
    lonely_n.family = "gl";
    lonely_n.n = 2; // --m missing
    CHECK_THROWS_AS(build_checks(lonely_n), std::invalid_argument);

    SuiteOptions no_family;
    no_family.n = 2;
    no_family.m = 1; // family missing
    CHECK_THROWS_AS(build_checks(no_family), std::invalid_argument);

    SuiteOptions beyond;
    beyond.family = "gl";
    beyond.n = 7;
    beyond.m = 1; // beyond the default cap
    CHECK_THROWS_AS(build_checks(beyond), std::invalid_argument);

    SuiteOptions inverted;
    inverted.family = "gl";
    inverted.n = 1;
    inverted.m = 2; // n < m
    CHECK_THROWS_AS(build_checks(inverted), std::invalid_argument);

    SuiteOptions deep;
    deep.suite = "uslovie";
    deep.n = 20; // 2n = 40 beyond the cap
    CHECK_THROWS_AS(build_checks(deep), std::invalid_argument);
}

TEST_CASE("cap overrides") {
    Caps def = parse_caps({});
    CHECK(def.gl_n == 3);
    CHECK(def.so_n == 6);
    CHECK(def.nregular == 3);
    CHECK(def.uslovie == 12);

    Caps c = parse_caps({"gl=4,2", "uslovie=8", "nregular=2"});
    CHECK(c.gl_n == 4);
    CHECK(c.gl_m == 2);
    CHECK(c.uslovie == 8);
    CHECK(c.nregular == 2);

    CHECK_THROWS_AS(parse_caps({"gl=4"}), std::invalid_argument);       // missing m
    CHECK_THROWS_AS(parse_caps({"bogus=3"}), std::invalid_argument);    // unknown key
    CHECK_THROWS_AS(parse_caps({"uslovie=7"}), std::invalid_argument);  // odd
    CHECK_THROWS_AS(parse_caps({"nregular"}), std::invalid_argument);   // no '='

    // a tightened cap prunes the default pair lists
    SuiteOptions opts;
    opts.suite = "tables";
    opts.caps = parse_caps({"gl=2,2", "so=3,2"});
    auto ids = ids_of(build_checks(opts));
    CHECK(ids == std::vector<std::string>{"tables/gl(1,1)", "tables/gl(2,1)", "tables/gl(2,2)",
                                          "tables/so(2,1)", "tables/so(3,2)"});
}

TEST_CASE("parallel execution reproduces the serial reports byte for byte") {
    SuiteOptions opts;
    opts.suite = "index";
    opts.seed = 7;
    auto checks = build_checks(opts);
    auto serial = run_checks(checks, false, true);
    auto parallel = run_checks(checks, true, true);
    REQUIRE(serial.size() == parallel.size());
    CHECK(reports_to_json(serial).dump(2) == reports_to_json(parallel).dump(2));
    // construction order is preserved
    for (std::size_t i = 0; i < checks.size(); ++i) CHECK(serial[i].check_id == checks[i].id);
    // and the heisenberg verdict carries its distinguishing witness
    const VerificationReport& h = serial.back();
    REQUIRE(h.check_id == "index/heisenberg");
    CHECK(h.status == CheckStatus::Pass);
    CHECK(h.witness == "ind = 1, degree-sum bound violated: codim-2 property absent");
}

TEST_CASE("elapsed time is zeroed only in deterministic mode") {
    SuiteOptions opts;
    opts.suite = "uslovie";
    opts.n = 1; // single cheap scan
    auto checks = build_checks(opts);
    auto det = run_checks(checks, false, true);
    for (const auto& r : det) CHECK(r.elapsed_ms == 0);
    auto timed = run_checks(checks, false, false);
    for (const auto& r : timed) CHECK(r.elapsed_ms >= 0);
}

TEST_CASE("structure constant export") {
    CHECK(dump_structure_constants("heisenberg", std::nullopt, std::nullopt, false) ==
          "0 1 2 1\n");
    // contracted pair: no line may couple two One-part coordinates
    std::string pair_dump = dump_structure_constants("gl", 1, 1, true);
    CHECK(pair_dump.find("1 2 ") == std::string::npos); // [E12, E21] contracted away
    std::string ambient_dump = dump_structure_constants("gl", 1, 1, false);
    CHECK(ambient_dump.find("1 2 0 1") != std::string::npos); // [E12, E21] = E11 - E22
    CHECK(ambient_dump.find("1 2 3 -1") != std::string::npos);
    CHECK_THROWS_AS(dump_structure_constants("heisenberg", std::nullopt, std::nullopt, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(dump_structure_constants("gl", std::nullopt, std::nullopt, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(dump_structure_constants("sp", 2, 1, false), std::invalid_argument);
}
