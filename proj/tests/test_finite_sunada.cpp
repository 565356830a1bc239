#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "isospec/perm_group.hpp"
#include "support.hpp"

using namespace isospec;

namespace {

PermGroup load_group(const std::string& name) {
    auto f = load_group_file(testing::data_path(name));
    return PermGroup(f.degree, f.generators);
}

SubgroupHandle load_sub(const PermGroup& g, const std::string& name) {
    return g.subgroup(load_group_file(testing::data_path(name)).generators);
}

}  // namespace

TEST_CASE("cycle notation") {
    auto p = parse_cycles("(1,2,3)(4,5)", 6);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(5) == 5);
    CHECK(format_cycles(p) == "(1,2,3)(4,5)");
    CHECK(format_cycles(Permutation::identity(4)) == "()");
    CHECK(parse_cycles("()", 3).is_identity());
    CHECK(parse_cycles("(1, 2) (3 ,4)", 4) == parse_cycles("(1,2)(3,4)", 4));
    CHECK_THROWS(parse_cycles("(1,2,1)", 3));
    CHECK_THROWS(parse_cycles("(1,4)", 3));
    CHECK_THROWS(parse_cycles("1,2", 3));
    CHECK(p.cycle_type() == std::vector<std::size_t>{1, 2, 3});
    CHECK((p * p.inverse()).is_identity());
}

TEST_CASE("group closure and orders") {
    CHECK(PermGroup::symmetric(1).order() == 1);
    CHECK(PermGroup::symmetric(4).order() == 24);
    CHECK(PermGroup::symmetric(6).order() == 720);
    auto gl = load_group("gl3f2.grp");
    CHECK(gl.order() == 168);
    CHECK(gl.elements().front().is_identity());
    CHECK(load_sub(gl, "point_stab.grp").order() == 24);
    CHECK(load_sub(gl, "plane_stab.grp").order() == 24);
}

TEST_CASE("order bound") {
    auto s = PermGroup::symmetric(5);
    CHECK_THROWS_AS(PermGroup(5, s.generators(), 100), OrderBoundError);
}

TEST_CASE("conjugacy classes") {
    auto s3 = PermGroup::symmetric(3);
    auto cls = conjugacy_classes(s3);
    std::multiset<std::size_t> sizes;
    for (const auto& c : cls) sizes.insert(c.size);
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

    // Abelian: every class is a singleton.
    PermGroup cyc(6, {parse_cycles("(1,2,3,4,5,6)", 6)});
    CHECK(conjugacy_classes(cyc).size() == 6);

    for (const char* name : {"s4.grp", "s5.grp", "gl3f2.grp"}) {
        auto g = load_group(name);
        std::size_t total = 0;
        for (const auto& c : conjugacy_classes(g)) total += c.size;
        CHECK(total == g.order());
    }
    CHECK(conjugacy_classes(load_group("gl3f2.grp")).size() == 6);
    CHECK(conjugacy_classes(load_group("s5.grp")).size() == 7);
}

TEST_CASE("almost conjugacy") {
    auto s4 = load_group("s4.grp");
    auto t = load_sub(s4, "s4_transposition.grp");
    auto dt = load_sub(s4, "s4_double_transposition.grp");
    CHECK_FALSE(almost_conjugate(s4, t, dt));
    auto t2 = s4.subgroup({parse_cycles("(3,4)", 4)});
    CHECK(almost_conjugate(s4, t, t2));
    CHECK(are_conjugate_subgroups(s4, t, t2));

    auto gl = load_group("gl3f2.grp");
    auto pt = load_sub(gl, "point_stab.grp");
    auto pl = load_sub(gl, "plane_stab.grp");
    CHECK(almost_conjugate(gl, pt, pl));
    CHECK_FALSE(are_conjugate_subgroups(gl, pt, pl));
    CHECK(are_conjugate_subgroups(gl, pt, pt));

    auto small = s4.subgroup({});
    CHECK_FALSE(almost_conjugate(s4, t, small));
    CHECK_FALSE(are_conjugate_subgroups(s4, t, small));
}

TEST_CASE("subgroups must lie in the group") {
    PermGroup a3(3, {parse_cycles("(1,2,3)", 3)});
    CHECK_THROWS(a3.subgroup({parse_cycles("(1,2)", 3)}));
}

TEST_CASE("permutation characters") {
    auto s4 = load_group("s4.grp");
    auto whole = s4.subgroup(s4.generators());
    for (const auto& v : permutation_character(s4, whole)) CHECK(v.fixed_cosets == 1);
    auto triv = s4.subgroup({});
    for (const auto& v : permutation_character(s4, triv))
        CHECK(v.fixed_cosets == (v.representative.is_identity() ? 24U : 0U));

    auto gl = load_group("gl3f2.grp");
    auto pt = load_sub(gl, "point_stab.grp");
    auto pl = load_sub(gl, "plane_stab.grp");
    auto c1 = permutation_character(gl, pt);
    auto c2 = permutation_character(gl, pl);
    REQUIRE(c1.size() == c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i) CHECK(c1[i].fixed_cosets == c2[i].fixed_cosets);
    CHECK(c1.front().fixed_cosets == 7);
    // The point stabilizer's coset action is the action on the 7 points.
    for (const auto& v : c1) {
        std::uint64_t fixed_points = 0;
        for (std::uint32_t x = 0; x < 7; ++x) fixed_points += v.representative(x) == x ? 1 : 0;
        CHECK(v.fixed_cosets == fixed_points);
    }
}

TEST_CASE("group files") {
    std::istringstream good("# comment\ndegree 4\n(1,2)\n(1,2,3,4)\n");
    auto f = parse_group_file(good, "g");
    CHECK(f.degree == 4);
    CHECK(f.generators.size() == 2);
    std::istringstream bad("degree 3\n(1,5)\n");
    try {
        parse_group_file(bad, "bad.grp");
        FAIL("expected a parse error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("bad.grp:2") != std::string::npos);
    }
    std::istringstream nodeg("(1,2)\n");
    CHECK_THROWS(parse_group_file(nodeg, "g"));
}
