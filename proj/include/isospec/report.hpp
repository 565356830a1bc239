#pragma once

/**
 * @file report.hpp
 * @brief Report documents for every engine result, rendered either as
 * human-readable text or as JSON. Both forms start with a versioned header
 * and contain only exact fractions and integers.
 *
 * Spectrum reports can be read back from either form.
 */

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "isospec/dimension_data.hpp"
#include "isospec/lp_construction.hpp"
#include "isospec/perm_group.hpp"
#include "isospec/spectra.hpp"

namespace isospec::report {

using Doc = nlohmann::ordered_json;

inline constexpr int kVersion = 1;
inline constexpr std::string_view kTextHeader = "isospec-report 1";

enum class Format { Text, Json };

/// "text" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// Text: header line, then "key: value" records with nested blocks indented
/// by two spaces. JSON: the document itself, pretty-printed.
std::string render(const Doc& doc, Format format);

Doc spectrum(const Spectrum& s);
Doc spectrum_comparison(const SpectrumComparison& c, const Spectrum& s1, const Spectrum& s2);
Doc equivalence(std::string_view kind, const Group& g, const EquivalenceReport& r);
Doc dimension_datum(const DimensionDatum& d, std::string_view map_label);
Doc datum_comparison(const DatumComparison& c, const DimensionDatum& d1, const DimensionDatum& d2);
Doc aut_conjugacy(const AutConjugacyResult& r, const RestrictionMap& h1, const RestrictionMap& h2);
Doc gassmann(const PermGroup& g, const SubgroupHandle& h1, const SubgroupHandle& h2, bool almost, bool conjugate,
             const std::vector<PermutationCharacterValue>& chi1, const std::vector<PermutationCharacterValue>& chi2);
Doc fiber_types(const Group& k, const RestrictionMap& h_map, const Rational& cutoff, const std::vector<Weight>& types);
Doc subsystems(int n, const std::vector<RootSubsystem>& classes);
Doc lp_construction(const AlternatingTensorSpec& spec, const FormalCharacter& chi1, const FormalCharacter& chi2);

/// Reads a spectrum report in either format (detected from the first
/// non-blank character). Errors carry `origin` and, for text, the line.
Spectrum parse_spectrum(std::string_view content, const std::string& origin);
Spectrum load_spectrum(const std::filesystem::path& path);

}  // namespace isospec::report
