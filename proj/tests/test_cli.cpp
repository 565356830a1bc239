#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "isospec/cli.hpp"
#include "isospec/report.hpp"
#include "support.hpp"

using namespace isospec;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "isospec-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("spectrum of the 2-sphere") {
    auto r = run({"spectrum", "--group", "A1", "--subgroup", "maps/torus.map", "--cutoff", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("isospec-report 1\n", 0) == 0);
    CHECK(contains(r.out, "eigenvalue 0  multiplicity 1  contributors [0](1x1)\n"));
    CHECK(contains(r.out, "eigenvalue 4  multiplicity 3  contributors [2](3x1)\n"));
    CHECK(contains(r.out, "eigenvalue 12  multiplicity 5  contributors [4](5x1)\n"));
    CHECK(contains(r.out, "line-count: 3\n"));
}

TEST_CASE("reports are deterministic") {
    std::vector<std::string> args{"spectrum", "-g", "A2", "-s", "maps/aw_1_2.map", "-c", "30", "--jobs", "4"};
    auto a = run(args);
    args.back() = "1";
    auto b = run(args);
    CHECK(a.out == b.out);
    args.insert(args.begin(), {"--format", "json"});
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("spectrum reports round trip in both formats") {
    for (const char* fmt : {"text", "json"}) {
        auto path = temp_file(std::string("aw.") + fmt);
        auto r = run({"spectrum", "-g", "A2", "-s", "maps/aw_1_1.map", "-c", "40", "--format", fmt, "-o",
                      path.string()});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        auto s = report::load_spectrum(path);
        CHECK(s.group == "A2");
        CHECK(s.cutoff == Rational(40));
        CHECK(compare_spectra(s, s).verdict == SpectrumVerdict::Isospectral);
        auto c = run({"compare", path.string(), path.string()});
        CHECK(c.code == 0);
        CHECK(contains(c.out, "verdict: Isospectral"));
    }
}

TEST_CASE("compare exit codes") {
    auto p11 = temp_file("w11.txt"), p12 = temp_file("w12.txt"), p11s = temp_file("w11s.txt");
    REQUIRE(run({"spectrum", "-g", "A2", "-s", "maps/aw_1_1.map", "-c", "60", "-o", p11.string()}).code == 0);
    REQUIRE(run({"spectrum", "-g", "A2", "-s", "maps/aw_1_2.map", "-c", "60", "-o", p12.string()}).code == 0);
    REQUIRE(run({"spectrum", "-g", "A2", "-s", "maps/aw_1_1.map", "-c", "30", "-o", p11s.string()}).code == 0);
    auto differ = run({"compare", p11.string(), p12.string()});
    CHECK(differ.code == 1);
    CHECK(contains(differ.out, "first-discrepancy:"));
    CHECK(run({"compare", p11.string(), p11s.string()}).code == 2);
    CHECK(run({"compare", p11.string(), "missing.txt"}).code == 3);
}

TEST_CASE("gassmann command") {
    auto r = run({"gassmann", "--group", "data/gl3f2.grp", "--sub1", "data/point_stab.grp", "--sub2",
                  "data/plane_stab.grp"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "almost-conjugate: yes; conjugate: no"));
    auto s4 = run({"gassmann", "-g", "s4.grp", "--sub1", "s4_transposition.grp", "--sub2",
                   "s4_double_transposition.grp"});
    CHECK(s4.code == 1);
}

TEST_CASE("equivalence commands") {
    auto k = run({"kequiv", "-g", "D4", "--k", "maps/b3_in_d4.map", "--h1", "maps/u4_in_d4.map", "--h2",
                  "maps/c2_in_d4.map", "-c", "40"});
    CHECK(k.code == 0);
    CHECK(contains(k.out, "equivalent: yes"));
    auto r = run({"repequiv", "-g", "D4", "--h1", "maps/u4_in_d4.map", "--h2", "maps/c2_in_d4.map", "-c", "40"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "witness:"));
    auto same = run({"repequiv", "-g", "A1", "--h1", "@trivial", "--h2", "maps/a1_trivial.map", "-c", "20"});
    CHECK(same.code == 0);
}

TEST_CASE("dimension data commands") {
    auto d = run({"dimdata", "-s", "maps/su3_in_su6_33.map", "-c", "10", "--format", "json"});
    CHECK(d.code == 0);
    auto doc = report::Doc::parse(d.out);
    CHECK(doc["kind"] == "dimension-datum");
    CHECK(doc["ambient"] == "A5");
    CHECK(doc["entries"][0]["fixed_dim"] == 1);
    CHECK(run({"dimdata-compare", "--h1", "maps/su3_in_su6_33.map", "--h2", "maps/su3_in_su6_3b3b.map", "-c",
               "20"})
              .code == 0);
    CHECK(run({"dimdata-compare", "--h1", "maps/su3_in_su6_33.map", "--h2", "maps/su3_in_su6_33b.map", "-c",
               "20"})
              .code == 1);
    auto a = run({"autconj", "--h1", "maps/su3_in_su6_33.map", "--h2", "maps/su3_in_su6_3b3b.map"});
    CHECK(a.code == 0);
    CHECK(contains(a.out, "verdict: DualEquivalent"));
    CHECK(run({"autconj", "--h1", "maps/su3_in_su6_33.map", "--h2", "maps/su3_in_su6_33b.map"}).code == 2);
    CHECK(run({"dimdata", "-s", "maps/b3_in_d4.map", "-c", "10"}).code == 3);
}

TEST_CASE("remaining commands") {
    auto f = run({"fiber-types", "-g", "A1", "-s", "maps/torus.map", "-c", "20"});
    CHECK(f.code == 0);
    CHECK(contains(f.out, "count: 1"));
    auto s = run({"subsystems", "--rank", "1"});
    CHECK(s.code == 0);
    CHECK(contains(s.out, "class-count: 3"));
    CHECK(run({"subsystems", "--rank", "5"}).code == 3);
    auto lp = run({"construct-lp", "--grid", "grids/r2_rank1.grid"});
    CHECK(lp.code == 0);
    CHECK(contains(lp.out, "characters-equal: no"));
}

TEST_CASE("input errors") {
    CHECK(run({}).code == 3);
    CHECK(run({"spectrum", "-g", "A1", "-s", "maps/torus.map"}).code == 3);
    CHECK(run({"spectrum", "-g", "A1", "-s", "maps/torus.map", "-c", "-1"}).code == 3);
    CHECK(run({"spectrum", "-g", "A1", "-s", "maps/torus.map", "-c", "1", "--format", "xml"}).code == 3);
    CHECK(run({"spectrum", "-g", "A2", "-s", "maps/torus.map", "-c", "4"}).code == 3);
    CHECK(run({"nosuchcommand"}).code == 3);

    auto bad = temp_file("bad.map");
    std::ofstream(bad) << "source=A1 target=T1\n1 zz\n";
    auto r = run({"spectrum", "-g", "A1", "-s", bad.string(), "-c", "4"});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "bad.map:2"));
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("data directory override") {
    auto dir = std::filesystem::temp_directory_path() / "isospec-cli-data";
    std::filesystem::create_directories(dir / "maps");
    std::ofstream(dir / "maps" / "only_here.map") << "source=A1 target=T1\nlabel: override\n1 -1\n";
    ::setenv("ISOSPEC_DATA_DIR", dir.c_str(), 1);
    auto r = run({"spectrum", "-g", "A1", "-s", "maps/only_here.map", "-c", "4"});
    ::unsetenv("ISOSPEC_DATA_DIR");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "subgroup: override"));
    CHECK(run({"spectrum", "-g", "A1", "-s", "maps/only_here.map", "-c", "4"}).code == 3);
}
