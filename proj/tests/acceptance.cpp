// Acceptance suite: one PASS/FAIL line per criterion. All numerical checks
// are exact; the only tolerances are the wall-clock budgets below.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "isospec/dimension_data.hpp"
#include "isospec/perm_group.hpp"
#include "isospec/spectra.hpp"
#include "support.hpp"

using namespace isospec;
using testing::load_map;

namespace {

using Seconds = std::chrono::duration<double>;

constexpr double kSphereBudget = 1.0;
constexpr double kPeterWeylBudget = 1.0;
constexpr double kS7Budget = 60.0;
constexpr double kKEquivalenceBudget = 600.0;
constexpr double kGassmannBudget = 5.0;
constexpr double kPipelineBudget = 600.0;
constexpr double kAloffWallachBudget = 30.0;
constexpr double kPropertyBudget = 900.0;

/// A criterion body returns an empty string on success, or the reason it failed.
using Body = std::function<std::string()>;

bool run_criterion(int n, const std::string& title, double budget, const Body& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
        failure = body();
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    const double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && elapsed >= budget) {
        std::ostringstream os;
        os << "over budget (" << budget << " s)";
        failure = os.str();
    }
    std::cout << (failure.empty() ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " [" << elapsed
              << " s]";
    if (!failure.empty()) std::cout << " -- " << failure;
    std::cout << '\n' << std::flush;
    return failure.empty();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string mismatch(const std::string& what, std::size_t index) {
    return what + " mismatch at line " + std::to_string(index);
}

std::string sphere() {
    auto a1 = Group::parse("A1");
    constexpr int jmax = 10;
    auto s = homogeneous_spectrum(a1, load_map("torus.map"), Rational(2 * jmax * (jmax + 1)));
    if (s.lines.size() != jmax + 1) return "expected " + std::to_string(jmax + 1) + " lines";
    const Rational first = s.lines[1].eigenvalue;
    for (std::size_t j = 0; j < s.lines.size(); ++j) {
        const auto jj = static_cast<std::int64_t>(j);
        if (s.lines[j].multiplicity != 2 * j + 1) return mismatch("multiplicity", j);
        if (s.lines[j].eigenvalue / first != Rational(jj * (jj + 1), 2)) return mismatch("eigenvalue ratio", j);
    }
    return {};
}

std::string peter_weyl() {
    auto a1 = Group::parse("A1");
    constexpr int kmax = 10;
    const Rational first = casimir_eigenvalue(testing::labels(a1, {1}), a1);
    auto s = homogeneous_spectrum(a1, RestrictionMap::to_trivial(a1), first * Rational(kmax * (kmax + 2), 3));
    if (s.lines.size() != kmax + 1) return "expected " + std::to_string(kmax + 1) + " lines";
    if (s.lines[1].eigenvalue != first) return "first nonzero line is not the spin-1/2 line";
    for (std::size_t k = 0; k < s.lines.size(); ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        if (s.lines[k].multiplicity != (k + 1) * (k + 1)) return mismatch("multiplicity", k);
        if (s.lines[k].eigenvalue / first != Rational(kk * (kk + 2), 3)) return mismatch("eigenvalue ratio", k);
    }
    return {};
}

std::string s7() {
    auto d4 = Group::parse("D4");
    constexpr int kmax = 6;
    // Harmonics of degree k sit at k(k + 6) for the round metric of this normalization.
    auto s = homogeneous_spectrum(d4, load_map("b3_in_d4.map"), Rational(kmax * (kmax + 6)));
    if (s.lines.size() != kmax + 1) return "expected " + std::to_string(kmax + 1) + " lines";
    for (std::size_t k = 1; k < s.lines.size(); ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        if (s.lines[k].multiplicity != binomial(k + 7, 7) - binomial(k + 5, 7)) return mismatch("multiplicity", k);
        if (s.lines[k].eigenvalue != Rational(kk * (kk + 6))) return mismatch("eigenvalue", k);
    }
    return {};
}

std::string k_equivalence() {
    auto d4 = Group::parse("D4");
    auto k = load_map("b3_in_d4.map");
    auto h1 = load_map("u4_in_d4.map");
    auto h2 = load_map("c2_in_d4.map");
    const Rational cutoff(91);
    auto r = k_equivalence_check(d4, k, h1, h2, cutoff);
    if (!r.equivalent) return "K-equivalence failed at " + r.violation->labels;
    if (r.checked.size() < 8) return "only " + std::to_string(r.checked.size()) + " spherical types";
    auto full = representation_equivalence_check(d4, h1, h2, cutoff);
    if (full.equivalent) return "representation equivalence unexpectedly holds";
    if (!full.violation || full.violation->fixed1 == full.violation->fixed2) return "no explicit witness";
    return {};
}

std::string gassmann() {
    const auto gf = load_group_file(testing::data_path("gl3f2.grp"));
    const PermGroup g(gf.degree, gf.generators);
    if (g.order() != 168) return "group order " + std::to_string(g.order());
    auto h1 = g.subgroup(load_group_file(testing::data_path("point_stab.grp")).generators);
    auto h2 = g.subgroup(load_group_file(testing::data_path("plane_stab.grp")).generators);
    if (!almost_conjugate(g, h1, h2)) return "not almost conjugate";
    if (are_conjugate_subgroups(g, h1, h2)) return "subgroups are conjugate";
    auto c1 = permutation_character(g, h1);
    auto c2 = permutation_character(g, h2);
    if (c1.size() != c2.size()) return "class counts differ";
    for (std::size_t i = 0; i < c1.size(); ++i)
        if (c1[i].fixed_cosets != c2[i].fixed_cosets) return "permutation characters differ";
    return {};
}

std::string pipeline() {
    auto a5 = Group::parse("A5");
    auto h1 = load_map("su3_in_su6_33.map");
    auto h2 = load_map("su3_in_su6_3b3b.map");
    const Rational cutoff(40);
    auto d1 = dimension_datum(h1, cutoff);
    auto d2 = dimension_datum(h2, cutoff);
    if (d1.entries.size() < 20) return "only " + std::to_string(d1.entries.size()) + " dominant weights";
    if (compare_dimension_data(d1, d2).verdict != DatumVerdict::Equal) return "dimension data differ";
    if (!representation_equivalence_check(a5, h1, h2, cutoff).equivalent) return "not representation equivalent";
    auto c = compare_spectra(homogeneous_spectrum(a5, h1, cutoff), homogeneous_spectrum(a5, h2, cutoff));
    if (c.verdict != SpectrumVerdict::Isospectral) return "spectra are not isospectral";
    auto a = aut_conjugacy_test(h1, h2, diagram_automorphisms(h1.target()));
    if (a.verdict != AutConjugacy::DualEquivalent) return "conjugacy verdict " + std::string(verdict_name(a.verdict));
    return {};
}

std::string aloff_wallach() {
    auto a2 = Group::parse("A2");
    const Rational cutoff(60);
    auto c = compare_spectra(homogeneous_spectrum(a2, load_map("aw_1_1.map"), cutoff),
                             homogeneous_spectrum(a2, load_map("aw_1_2.map"), cutoff));
    if (c.verdict != SpectrumVerdict::Differ) return "spectra do not differ";
    if (!c.first_discrepancy) return "no discrepancy reported";
    const auto& d = *c.first_discrepancy;
    std::cout << "  first discrepancy at eigenvalue " << d.eigenvalue.str() << ": " << d.multiplicity1 << " vs "
              << d.multiplicity2 << '\n';
    return {};
}

std::string properties(int argc, char** argv) {
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    ctx.setOption("minimal", true);
    const int rc = ctx.run();
    return rc == 0 ? std::string{} : "property failures";
}

}  // namespace

int main(int argc, char** argv) {
    bool ok = true;
    ok &= run_criterion(1, "2-sphere spectrum", kSphereBudget, sphere);
    ok &= run_criterion(2, "SU(2) Peter-Weyl spectrum", kPeterWeylBudget, peter_weyl);
    ok &= run_criterion(3, "7-sphere as SO(8)/SO(7)", kS7Budget, s7);
    ok &= run_criterion(4, "SO(8) K-equivalence without representation equivalence", kKEquivalenceBudget,
                        k_equivalence);
    ok &= run_criterion(5, "Gassmann triple in GL(3,2)", kGassmannBudget, gassmann);
    ok &= run_criterion(6, "SU(3) in SU(6) pipeline", kPipelineBudget, pipeline);
    ok &= run_criterion(7, "Aloff-Wallach spaces", kAloffWallachBudget, aloff_wallach);
    ok &= run_criterion(8, "property suites", kPropertyBudget, [&] { return properties(argc, argv); });
    return ok ? 0 : 1;
}
