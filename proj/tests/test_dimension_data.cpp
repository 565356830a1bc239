#include <doctest.h>

#include <set>
#include <sstream>

#include "isospec/dimension_data.hpp"
#include "isospec/lp_construction.hpp"
#include "support.hpp"

using namespace isospec;
using testing::labels;
using testing::load_map;

namespace {

FormalCharacter rank1(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    FormalCharacter chi;
    for (auto [w, m] : terms) chi.add(Weight{w}, m);
    return chi;
}

}  // namespace

TEST_CASE("dimension datum of SU(n) itself") {
    auto a3 = Group::parse("A3");
    auto d = dimension_datum(RestrictionMap::identity(a3), Rational(30));
    REQUIRE(!d.entries.empty());
    CHECK(d.entries.front().fixed_dim == 1);
    for (std::size_t i = 1; i < d.entries.size(); ++i) CHECK(d.entries[i].fixed_dim == 0);
}

TEST_CASE("dimension datum of the circle in SU(2)") {
    auto d = dimension_datum(load_map("torus.map"), Rational(60));
    for (const auto& e : d.entries) {
        auto k = e.sigma[0] - e.sigma[1];
        CHECK(e.fixed_dim == (k.to_integer() % 2 == 0 ? 1U : 0U));
    }
}

TEST_CASE("dimension datum of 3+3 in SU(6)") {
    auto a5 = Group::parse("A5");
    auto d = dimension_datum(load_map("su3_in_su6_33.map"), Rational(20));
    const auto* e = d.find(labels(a5, {1, 0, 0, 0, 0}));
    REQUIRE(e != nullptr);
    CHECK(e->fixed_dim == 0);
    // Lambda^3(V+V) = 2 Lambda^3 V + 2 (Lambda^2 V x V), each summand with one invariant line.
    const auto* l3 = d.find(labels(a5, {0, 0, 1, 0, 0}));
    REQUIRE(l3 != nullptr);
    CHECK(l3->fixed_dim == 4);
    CHECK(d.find(labels(a5, {9, 0, 0, 0, 0})) == nullptr);
}

TEST_CASE("dimension datum requires a type A ambient") {
    CHECK_THROWS(dimension_datum(load_map("b3_in_d4.map"), Rational(10)));
}

TEST_CASE("comparing dimension data") {
    auto d33 = dimension_datum(load_map("su3_in_su6_33.map"), Rational(30));
    auto dbb = dimension_datum(load_map("su3_in_su6_3b3b.map"), Rational(30));
    CHECK(compare_dimension_data(d33, d33).verdict == DatumVerdict::Equal);
    CHECK(compare_dimension_data(d33, dbb).verdict == DatumVerdict::Equal);
    auto d3b = dimension_datum(load_map("su3_in_su6_33b.map"), Rational(30));
    auto c = compare_dimension_data(d33, d3b);
    CHECK(c.verdict == DatumVerdict::Differ);
    REQUIRE(c.first_left);
    CHECK(c.first_left->fixed_dim != c.first_right->fixed_dim);

    auto a1 = Group::parse("A1");
    auto torus = dimension_datum(load_map("torus.map"), Rational(20));
    auto full = dimension_datum(RestrictionMap::identity(a1), Rational(20));
    auto tc = compare_dimension_data(torus, full);
    CHECK(tc.verdict == DatumVerdict::Differ);
    CHECK(tc.first_left->labels == "[2]");
    CHECK(tc.first_left->fixed_dim == 1);
    CHECK(tc.first_right->fixed_dim == 0);

    auto shorter = dimension_datum(load_map("torus.map"), Rational(10));
    CHECK(compare_dimension_data(torus, shorter).verdict == DatumVerdict::Incomparable);
    CHECK_THROWS(compare_dimension_data(torus, d33));
}

TEST_CASE("diagram automorphisms") {
    CHECK(diagram_automorphisms(Group::parse("A1")).size() == 1);
    CHECK(diagram_automorphisms(Group::parse("A2")).size() == 2);
    CHECK(diagram_automorphisms(Group::parse("D4")).size() == 6);
    CHECK(diagram_automorphisms(Group::parse("D5")).size() == 2);
    CHECK(diagram_automorphisms(Group::parse("A2xT1")).size() == 4);
    auto d4 = Group::parse("D4");
    // Every D4 twist permutes the three 8-dimensional representations.
    std::set<Weight> eights{labels(d4, {1, 0, 0, 0}), labels(d4, {0, 0, 1, 0}), labels(d4, {0, 0, 0, 1})};
    for (const auto& a : diagram_automorphisms(d4)) {
        for (const auto& w : eights) {
            Weight img(4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t k = 0; k < 4; ++k) img[i] += a.matrix[i][k] * w[k];
            CHECK(eights.contains(d4.dominant_representative(img)));
        }
    }
}

TEST_CASE("Aut(SU(n)) conjugacy") {
    auto m33 = load_map("su3_in_su6_33.map");
    auto mbb = load_map("su3_in_su6_3b3b.map");
    auto m3b = load_map("su3_in_su6_33b.map");
    auto autos = diagram_automorphisms(m33.target());
    CHECK(aut_conjugacy_test(m33, m33, autos).verdict == AutConjugacy::Equivalent);
    auto dual = aut_conjugacy_test(m33, mbb, autos);
    CHECK(dual.verdict == AutConjugacy::DualEquivalent);
    CHECK(dual.twist == "id");
    CHECK(aut_conjugacy_test(m33, m3b, autos).verdict == AutConjugacy::NeitherDetected);
    CHECK(aut_conjugacy_test(m3b, m3b.dual_twist(), autos).verdict != AutConjugacy::NeitherDetected);
    CHECK_THROWS(aut_conjugacy_test(m33, load_map("torus.map"), autos));
    DiagramAutomorphism bad{"bad", RationalMatrix(2, std::vector<Rational>(2))};
    CHECK_THROWS(aut_conjugacy_test(m33, mbb, {bad}));
}

TEST_CASE("alternating construction for r = 2") {
    AlternatingTensorSpec spec{2, 1, {{rank1({{1, 1}, {-1, 1}}), rank1({{0, 2}})},
                                      {rank1({{2, 1}, {-2, 1}}), rank1({{3, 1}, {-3, 1}})}}};
    auto [even, odd] = alternating_construction(spec);
    CHECK(even == spec.grid[0][0].outer(spec.grid[1][1]));
    CHECK(odd == spec.grid[0][1].outer(spec.grid[1][0]));
    CHECK(even.mass() == odd.mass());
    CHECK(even != odd);
    CHECK(self_dual_check(even));
    CHECK(self_dual_check(odd));
}

TEST_CASE("alternating construction with equal entries") {
    auto chi = rank1({{1, 1}, {-1, 1}, {0, 1}});
    AlternatingTensorSpec spec{3, 1, std::vector<std::vector<FormalCharacter>>(3, std::vector<FormalCharacter>(3, chi))};
    auto [even, odd] = alternating_construction(spec);
    CHECK(even == odd);
    CHECK(even.mass() == 3 * 27);
}

TEST_CASE("alternating construction rejects invalid grids") {
    auto sym = rank1({{1, 1}, {-1, 1}});
    auto asym = rank1({{1, 1}, {0, 1}});
    auto big = rank1({{1, 1}, {-1, 1}, {0, 1}});
    CHECK_THROWS(alternating_construction({1, 1, {{sym}}}));
    CHECK_THROWS(alternating_construction({2, 1, {{sym, sym}, {asym, sym}}}));
    CHECK_THROWS(alternating_construction({2, 1, {{sym, sym}, {big, sym}}}));
    CHECK_THROWS(alternating_construction({2, 1, {{sym, sym}}}));
}

TEST_CASE("signed permutation invariance") {
    FormalCharacter chi;
    for (int a : {-1, 1})
        for (int b : {-2, 2}) {
            chi.add(Weight{a, b}, 1);
            chi.add(Weight{b, a}, 1);
        }
    CHECK(is_signed_permutation_invariant(chi, 2));
    chi.add(Weight{1, 2}, 1);
    CHECK_FALSE(is_signed_permutation_invariant(chi, 2));
}

TEST_CASE("self duality") {
    auto a1 = Group::parse("A1");
    for (int k = 0; k < 6; ++k) CHECK(self_dual_check(weight_multiplicities(labels(a1, {k}), a1)));
    auto a2 = Group::parse("A2");
    CHECK_FALSE(self_dual_check(weight_multiplicities(labels(a2, {1, 0}), a2)));
    CHECK(self_dual_check(weight_multiplicities(labels(a2, {1, 1}), a2)));
}

TEST_CASE("grid files") {
    auto spec = load_grid(testing::data_path("grids/r2_rank1.grid"));
    CHECK(spec.r == 2);
    CHECK(spec.n == 1);
    CHECK(spec.grid[0][1].multiplicity(Weight{0}) == 2);
    std::istringstream missing("r 2\nn 1\nentry 1 1\n1 : 1\n-1 : 1\n");
    CHECK_THROWS(parse_grid(missing, "g"));
    std::istringstream early("r 2\nn 1\n1 : 1\n");
    try {
        parse_grid(early, "g.grid");
        FAIL("expected a parse error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("g.grid:3") != std::string::npos);
    }
}

TEST_CASE("maximal rank subsystems of BC_n") {
    auto one = bcn_maximal_rank_subsystems(1);
    REQUIRE(one.size() == 3);
    std::set<std::string> types;
    for (const auto& s : one) types.insert(s.type);
    CHECK(types == std::set<std::string>{"A1-long", "A1-short", "BC1"});

    auto two = bcn_maximal_rank_subsystems(2);
    bool found = false;
    for (const auto& s : two)
        if (std::set<Weight>(s.roots.begin(), s.roots.end()) ==
            std::set<Weight>{Weight{2, 0}, Weight{-2, 0}, Weight{0, 2}, Weight{0, -2}}) {
            found = true;
            CHECK(s.type == "A1-long x A1-long");
        }
    CHECK(found);

    for (int n = 1; n <= 3; ++n) {
        auto bc = RootSystem::build(Family::BC, n);
        std::size_t total = 0;
        for (const auto& s : bcn_maximal_rank_subsystems(n)) {
            std::set<Weight> set(s.roots.begin(), s.roots.end());
            for (const auto& a : s.roots)
                for (const auto& b : s.roots) CHECK(set.contains(bc.reflect(b, a)));
            CHECK(rank_of(s.roots) == static_cast<std::size_t>(n));
            total += s.class_size;
        }
        CHECK(total > 0);
    }
    CHECK_THROWS(bcn_maximal_rank_subsystems(0));
    CHECK_THROWS(bcn_maximal_rank_subsystems(4));
}
