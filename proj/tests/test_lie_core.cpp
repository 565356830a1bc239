#include <doctest.h>

#include <algorithm>
#include <set>

#include "isospec/group.hpp"
#include "support.hpp"

using namespace isospec;

namespace {

/// Root set written out from the classical definitions, in ambient coordinates.
std::set<Weight> textbook_roots(Family f, int n) {
    const auto dim = static_cast<std::size_t>(f == Family::A ? n + 1 : n);
    std::set<Weight> out;
    auto e = [&](std::size_t i) {
        Weight w(dim);
        w[i] = 1;
        return w;
    };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j) continue;
            Weight d = e(i);
            d -= e(j);
            out.insert(d);
            if (f != Family::A && i < j) {
                Weight s = e(i);
                s += e(j);
                out.insert(s);
                out.insert(-s);
            }
        }
    if (f == Family::B || f == Family::BC)
        for (std::size_t i = 0; i < dim; ++i) {
            out.insert(e(i));
            out.insert(-e(i));
        }
    if (f == Family::C || f == Family::BC)
        for (std::size_t i = 0; i < dim; ++i) {
            Weight two = e(i);
            two *= Rational(2);
            out.insert(two);
            out.insert(-two);
        }
    return out;
}

}  // namespace

TEST_CASE("root counts and explicit root sets") {
    struct Case {
        Family f;
        int n;
        std::size_t count;
    };
    for (auto c : {Case{Family::A, 1, 2}, Case{Family::A, 2, 6}, Case{Family::A, 5, 30}, Case{Family::B, 3, 18},
                   Case{Family::C, 2, 8}, Case{Family::C, 3, 18}, Case{Family::D, 4, 24}, Case{Family::BC, 1, 4},
                   Case{Family::BC, 2, 12}, Case{Family::BC, 3, 24}}) {
        auto rs = RootSystem::build(c.f, c.n);
        CAPTURE(rs.name());
        CHECK(rs.roots().size() == c.count);
        std::set<Weight> got(rs.roots().begin(), rs.roots().end());
        CHECK(got == textbook_roots(c.f, c.n));
    }
    auto bc = RootSystem::build(Family::BC, 4);
    CHECK(bc.roots().size() == 2 * 16 + 2 * 4);
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS(RootSystem::build(Family::A, 0));
    CHECK_THROWS(RootSystem::build(Family::D, 1));
    CHECK_THROWS(RootSystem::parse("E8"));
    CHECK_THROWS(RootSystem::parse("A"));
    CHECK_THROWS(Group::parse("A2x"));
    CHECK(RootSystem::parse("bc2") == RootSystem::build(Family::BC, 2));
    CHECK(RootSystem::parse("d4").name() == "D4");
}

TEST_CASE("A1 Weyl vector and inner products") {
    auto a1 = RootSystem::build(Family::A, 1);
    CHECK(a1.weyl_vector() == Weight{Rational(1, 2), Rational(-1, 2)});
    CHECK(a1.inner_product(a1.weyl_vector(), a1.weyl_vector()) == Rational(1, 2));
    Weight zero(2);
    CHECK(a1.inner_product(zero, a1.simple_roots()[0]).is_zero());
    CHECK_THROWS(a1.inner_product(Weight{1, 0, 0}, zero));
}

TEST_CASE("long roots have squared length 2") {
    for (const char* spec : {"A1", "A3", "B2", "B3", "C2", "C3", "D4", "BC1", "BC2"}) {
        auto rs = RootSystem::parse(spec);
        Rational longest;
        for (const auto& a : rs.roots()) longest = std::max(longest, rs.inner_product(a, a));
        CAPTURE(spec);
        CHECK(longest == Rational(2));
    }
}

TEST_CASE("Weyl vector pairs to one with every simple coroot") {
    for (const char* spec : {"A1", "A2", "A5", "B2", "B3", "C2", "C3", "D4", "D5"}) {
        auto rs = RootSystem::parse(spec);
        for (const auto& a : rs.simple_roots())
            CHECK(Rational(2) * rs.inner_product(rs.weyl_vector(), a) / rs.inner_product(a, a) == Rational(1));
    }
}

TEST_CASE("root systems are symmetric and reflection closed") {
    for (const char* spec : {"A3", "B3", "C3", "D4", "BC2", "BC3"}) {
        auto rs = RootSystem::parse(spec);
        std::set<Weight> roots(rs.roots().begin(), rs.roots().end());
        for (const auto& a : rs.roots()) {
            CHECK(roots.contains(-a));
            for (const auto& b : rs.roots()) CHECK(roots.contains(rs.reflect(b, a)));
        }
    }
}

TEST_CASE("Weyl orbits") {
    auto a2 = RootSystem::build(Family::A, 2);
    CHECK(a2.weyl_orbit(Weight(3)).size() == 1);
    CHECK(a2.weyl_orbit(a2.fundamental_weights()[0]).size() == 3);
    auto bc2 = RootSystem::build(Family::BC, 2);
    auto orbit = bc2.weyl_orbit(Weight{1, 0});
    std::set<Weight> expected{Weight{1, 0}, Weight{-1, 0}, Weight{0, 1}, Weight{0, -1}};
    CHECK(std::set<Weight>(orbit.begin(), orbit.end()) == expected);
    auto d4 = RootSystem::build(Family::D, 4);
    CHECK(d4.weyl_orbit(Weight{1, 0, 0, 0}).size() == 8);
    CHECK(d4.weyl_orbit(d4.weyl_vector()).size() == d4.weyl_group_order());
    CHECK(d4.weyl_group_order() == 192);
    CHECK(RootSystem::build(Family::BC, 3).weyl_group_order() == 48);
    CHECK(RootSystem::build(Family::A, 5).weyl_group_order() == 720);
}

TEST_CASE("dominant representatives") {
    auto a1 = RootSystem::build(Family::A, 1);
    CHECK(a1.dominant_representative(testing::labels(a1, {-1})) == testing::labels(a1, {1}));
    auto b3 = RootSystem::build(Family::B, 3);
    Weight w{Rational(-3), Rational(1), Rational(-2)};
    auto d = b3.dominant_representative(w);
    CHECK(d == Weight{3, 2, 1});
    CHECK(b3.dominant_representative(d) == d);
    auto d4 = RootSystem::build(Family::D, 4);
    // Only even sign changes: one negative entry must survive.
    CHECK(d4.dominant_representative(Weight{-1, 2, 3, 4}) == Weight{4, 3, 2, -1});
    CHECK(d4.dominant_representative(Weight{-1, -2, 3, 4}) == Weight{4, 3, 2, 1});
}

TEST_CASE("fundamental weights are dual to simple coroots") {
    for (const char* spec : {"A4", "B3", "C3", "D4"}) {
        auto rs = RootSystem::parse(spec);
        for (std::size_t i = 0; i < rs.simple_roots().size(); ++i)
            for (std::size_t j = 0; j < rs.simple_roots().size(); ++j) {
                const auto& a = rs.simple_roots()[j];
                CHECK(Rational(2) * rs.inner_product(rs.fundamental_weights()[i], a) / rs.inner_product(a, a) ==
                      Rational(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("weight lattice membership") {
    auto d4 = RootSystem::build(Family::D, 4);
    CHECK(d4.in_weight_lattice(Weight{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}));
    CHECK_FALSE(d4.in_weight_lattice(Weight{Rational(1, 2), 0, 0, 0}));
    auto a2 = RootSystem::build(Family::A, 2);
    CHECK(a2.in_weight_lattice(a2.fundamental_weights()[1]));
    CHECK_FALSE(a2.in_weight_lattice(Weight{Rational(1, 2), Rational(-1, 2), 0}));
    CHECK(a2.canonical(Weight{1, 1, 1}) == Weight(3));
}

TEST_CASE("group specs") {
    auto g = Group::parse("A3xT1");
    CHECK(g.dim() == 5);
    CHECK(g.label_count() == 4);
    CHECK(g.spec() == "A3xT1");
    CHECK(Group::parse("trivial").is_trivial());
    CHECK(Group::parse("T0").spec() == "T0");
    auto w = testing::labels(g, {1, 0, 0, 2});
    CHECK(g.format_labels(w) == "[1,0,0;2]");
    CHECK(g.parse_labels("[1,0,0;2]") == w);
    CHECK(g.weyl_group_order() == 24);
}
