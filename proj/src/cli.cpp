#include "isospec/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "isospec/parallel.hpp"
#include "isospec/report.hpp"

#ifndef ISOSPEC_DEFAULT_DATA_DIR
#define ISOSPEC_DEFAULT_DATA_DIR "data"
#endif

namespace isospec::cli {

namespace fs = std::filesystem;

fs::path resolve_data_path(const std::string& path) {
    const fs::path p(path);
    if (fs::exists(p) || p.is_absolute()) return p;
    std::vector<fs::path> roots;
    if (const char* env = std::getenv("ISOSPEC_DATA_DIR"); env != nullptr && *env != '\0') roots.emplace_back(env);
    roots.emplace_back(ISOSPEC_DEFAULT_DATA_DIR);
    std::optional<fs::path> stripped;
    if (auto it = p.begin(); it != p.end() && *it == "data") {
        fs::path rest;
        for (++it; it != p.end(); ++it) rest /= *it;
        if (!rest.empty()) stripped = rest;
    }
    for (const auto& root : roots) {
        if (fs::exists(root / p)) return root / p;
        if (stripped && fs::exists(root / *stripped)) return root / *stripped;
    }
    return p;
}

namespace {

struct Common {
    std::string format = "text";
    std::string output;
    unsigned jobs = 0;
};

Rational parse_cutoff(const std::string& text) {
    Rational c = Rational::parse(text);
    if (c.sign() < 0) throw std::invalid_argument("cutoff must be non-negative, got " + text);
    return c;
}

/// "@identity", "@trivial", or a map file path.
RestrictionMap load_subgroup(const std::string& spec, const std::optional<Group>& group) {
    if (spec == "@identity" || spec == "@trivial") {
        if (!group) throw std::invalid_argument(spec + " needs --group");
        return spec == "@identity" ? RestrictionMap::identity(*group) : RestrictionMap::to_trivial(*group);
    }
    RestrictionMap m = RestrictionMap::load(resolve_data_path(spec));
    if (group && !(m.source() == *group))
        throw std::invalid_argument("map " + spec + " has source " + m.source().spec() + ", expected " + group->spec());
    return m;
}

std::optional<Group> optional_group(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    return Group::parse(spec);
}

void emit(const report::Doc& doc, const Common& c, std::ostream& out) {
    const std::string text = report::render(doc, report::parse_format(c.format));
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.output);
    f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra, branching and isospectrality checks for compact Lie groups", "isospec"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output,-o", common.output, "Write the report to this file instead of stdout");
    app.add_option("--jobs,-j", common.jobs, "Worker threads (0 = all cores)");

    std::function<int()> action;
    std::string group, sub, sub1, sub2, kmap, cutoff, left, right, grid, grp;
    int rank = 0;

    auto* spectrum = app.add_subcommand("spectrum", "Laplace spectrum of G/H up to a Casimir cutoff");
    spectrum->add_option("--group,-g", group, "Ambient group, e.g. A1 or D4")->required();
    spectrum->add_option("--subgroup,-s", sub, "Map file, @identity or @trivial")->required();
    spectrum->add_option("--cutoff,-c", cutoff, "Casimir cutoff (exact rational)")->required();
    spectrum->callback([&] {
        action = [&] {
            Group g = Group::parse(group);
            auto m = load_subgroup(sub, g);
            emit(report::spectrum(homogeneous_spectrum(g, m, parse_cutoff(cutoff), common.jobs)), common, out);
            return int{Same};
        };
    });

    auto* compare = app.add_subcommand("compare", "Compare two spectrum reports");
    compare->add_option("left", left, "First spectrum report")->required();
    compare->add_option("right", right, "Second spectrum report")->required();
    compare->callback([&] {
        action = [&] {
            auto s1 = report::load_spectrum(left);
            auto s2 = report::load_spectrum(right);
            auto c = compare_spectra(s1, s2);
            emit(report::spectrum_comparison(c, s1, s2), common, out);
            return int{c.verdict == SpectrumVerdict::Isospectral ? Same
                       : c.verdict == SpectrumVerdict::Differ  ? Differ
                                                               : Inconclusive};
        };
    });

    auto* kequiv = app.add_subcommand("kequiv", "K-equivalence of two subgroups up to a cutoff");
    kequiv->add_option("--group,-g", group, "Ambient group")->required();
    kequiv->add_option("--k", kmap, "Map file of K")->required();
    kequiv->add_option("--h1", sub1, "Map file of H1")->required();
    kequiv->add_option("--h2", sub2, "Map file of H2")->required();
    kequiv->add_option("--cutoff,-c", cutoff, "Casimir cutoff")->required();
    kequiv->callback([&] {
        action = [&] {
            Group g = Group::parse(group);
            auto r = k_equivalence_check(g, load_subgroup(kmap, g), load_subgroup(sub1, g), load_subgroup(sub2, g),
                                         parse_cutoff(cutoff), common.jobs);
            emit(report::equivalence("k-equivalence", g, r), common, out);
            return int{r.equivalent ? Same : Differ};
        };
    });

    auto* repequiv = app.add_subcommand("repequiv", "Representation equivalence of two subgroups up to a cutoff");
    repequiv->add_option("--group,-g", group, "Ambient group")->required();
    repequiv->add_option("--h1", sub1, "Map file of H1")->required();
    repequiv->add_option("--h2", sub2, "Map file of H2")->required();
    repequiv->add_option("--cutoff,-c", cutoff, "Casimir cutoff")->required();
    repequiv->callback([&] {
        action = [&] {
            Group g = Group::parse(group);
            auto r = representation_equivalence_check(g, load_subgroup(sub1, g), load_subgroup(sub2, g),
                                                      parse_cutoff(cutoff), common.jobs);
            emit(report::equivalence("representation-equivalence", g, r), common, out);
            return int{r.equivalent ? Same : Differ};
        };
    });

    auto* dimdata = app.add_subcommand("dimdata", "Dimension datum of a subgroup of SU(n)");
    dimdata->add_option("--group,-g", group, "Ambient group (defaults to the map source)");
    dimdata->add_option("--subgroup,-s", sub, "Map file, @identity or @trivial")->required();
    dimdata->add_option("--cutoff,-c", cutoff, "Casimir cutoff")->required();
    dimdata->callback([&] {
        action = [&] {
            auto m = load_subgroup(sub, optional_group(group));
            emit(report::dimension_datum(dimension_datum(m, parse_cutoff(cutoff), common.jobs), m.label()), common,
                 out);
            return int{Same};
        };
    });

    auto* dimcmp = app.add_subcommand("dimdata-compare", "Compare the dimension data of two subgroups of SU(n)");
    dimcmp->add_option("--group,-g", group, "Ambient group (defaults to the map sources)");
    dimcmp->add_option("--h1", sub1, "Map file of H1")->required();
    dimcmp->add_option("--h2", sub2, "Map file of H2")->required();
    dimcmp->add_option("--cutoff,-c", cutoff, "Casimir cutoff")->required();
    dimcmp->callback([&] {
        action = [&] {
            auto g = optional_group(group);
            auto m1 = load_subgroup(sub1, g);
            auto m2 = load_subgroup(sub2, g);
            const Rational c = parse_cutoff(cutoff);
            auto d1 = dimension_datum(m1, c, common.jobs);
            auto d2 = dimension_datum(m2, c, common.jobs);
            auto cmp = compare_dimension_data(d1, d2);
            emit(report::datum_comparison(cmp, d1, d2), common, out);
            return int{cmp.verdict == DatumVerdict::Equal ? Same : cmp.verdict == DatumVerdict::Differ ? Differ
                                                                                                      : Inconclusive};
        };
    });

    auto* autconj = app.add_subcommand("autconj", "Conjugacy of two subgroups of SU(n) under Aut(SU(n))");
    autconj->add_option("--h1", sub1, "Map file of H1")->required();
    autconj->add_option("--h2", sub2, "Map file of H2")->required();
    autconj->callback([&] {
        action = [&] {
            auto m1 = load_subgroup(sub1, std::nullopt);
            auto m2 = load_subgroup(sub2, std::nullopt);
            auto r = aut_conjugacy_test(m1, m2, diagram_automorphisms(m1.target()));
            emit(report::aut_conjugacy(r, m1, m2), common, out);
            return int{r.verdict == AutConjugacy::NeitherDetected ? Inconclusive : Same};
        };
    });

    auto* gassmann = app.add_subcommand("gassmann", "Almost conjugacy and conjugacy of two permutation subgroups");
    gassmann->add_option("--group,-g", grp, "Group file")->required();
    gassmann->add_option("--sub1", sub1, "Subgroup file")->required();
    gassmann->add_option("--sub2", sub2, "Subgroup file")->required();
    gassmann->callback([&] {
        action = [&] {
            auto gf = load_group_file(resolve_data_path(grp));
            auto f1 = load_group_file(resolve_data_path(sub1));
            auto f2 = load_group_file(resolve_data_path(sub2));
            if (f1.degree != gf.degree || f2.degree != gf.degree)
                throw std::invalid_argument("subgroup files must have the degree of the group file");
            PermGroup g(gf.degree, gf.generators);
            auto h1 = g.subgroup(f1.generators);
            auto h2 = g.subgroup(f2.generators);
            bool almost = almost_conjugate(g, h1, h2);
            bool conj = are_conjugate_subgroups(g, h1, h2, common.jobs);
            auto chi1 = permutation_character(g, h1, common.jobs);
            auto chi2 = permutation_character(g, h2, common.jobs);
            emit(report::gassmann(g, h1, h2, almost, conj, chi1, chi2), common, out);
            return int{almost ? Same : Differ};
        };
    });

    auto* fiber = app.add_subcommand("fiber-types", "Irreducibles of K on which a subgroup H acts trivially");
    fiber->add_option("--group,-g", group, "The group K")->required();
    fiber->add_option("--subgroup,-s", sub, "Map file of H in K, @identity or @trivial")->required();
    fiber->add_option("--cutoff,-c", cutoff, "Casimir cutoff")->required();
    fiber->callback([&] {
        action = [&] {
            Group k = Group::parse(group);
            auto m = load_subgroup(sub, k);
            const Rational c = parse_cutoff(cutoff);
            emit(report::fiber_types(k, m, c, trivial_fiber_types(k, m, c, common.jobs)), common, out);
            return int{Same};
        };
    });

    auto* subsys = app.add_subcommand("subsystems", "Maximal-rank subsystems of BC_n up to conjugacy");
    subsys->add_option("--rank,-n", rank, "n, between 1 and 3")->required();
    subsys->callback([&] {
        action = [&] {
            emit(report::subsystems(rank, bcn_maximal_rank_subsystems(rank)), common, out);
            return int{Same};
        };
    });

    auto* lp = app.add_subcommand("construct-lp", "Alternating tensor construction from a character grid");
    lp->add_option("--grid", grid, "Grid file")->required();
    lp->callback([&] {
        action = [&] {
            auto spec = load_grid(resolve_data_path(grid));
            auto [chi1, chi2] = alternating_construction(spec);
            emit(report::lp_construction(spec, chi1, chi2), common, out);
            return int{Same};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : int{InputError};
    }
    if (!action) return int{InputError};
    try {
        return action();
    } catch (const std::exception& e) {
        err << "isospec: " << e.what() << "\n";
        return int{InputError};
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace isospec::cli
