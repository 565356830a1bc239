#include "isospec/report.hpp"

#include <fstream>
#include <sstream>

#include "isospec/restriction_map.hpp"

namespace isospec::report {

namespace {

Doc header(std::string_view kind) {
    Doc d;
    d["format"] = "isospec-report";
    d["version"] = kVersion;
    d["kind"] = std::string(kind);
    return d;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string scalar_text(const Doc& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return yes_no(v.get<bool>());
    if (v.is_null()) return "none";
    return v.dump();
}

bool is_scalar_array(const Doc& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_structured()) return false;
    return true;
}

void render_object(const Doc& obj, std::size_t indent, std::string& out);

void render_value(const std::string& key, const Doc& v, std::size_t indent, std::string& out) {
    const std::string pad(indent, ' ');
    if (!v.is_structured()) {
        out += pad + key + ": " + scalar_text(v) + "\n";
    } else if (is_scalar_array(v)) {
        out += pad + key + ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
        out += "]\n";
    } else if (v.is_object()) {
        out += pad + key + ":\n";
        render_object(v, indent + 2, out);
    } else {
        out += pad + key + ":\n";
        for (const auto& e : v) {
            std::string item;
            if (e.is_object()) {
                render_object(e, indent + 4, item);
            } else {
                render_value("value", e, indent + 4, item);
            }
            if (item.empty()) item = std::string(indent + 4, ' ') + "{}\n";
            item.replace(indent + 2, 2, "- ");
            out += item;
        }
    }
}

void render_object(const Doc& obj, std::size_t indent, std::string& out) {
    for (const auto& [k, v] : obj.items()) render_value(k, v, indent, out);
}

std::string contributor_text(const Doc& c) {
    return c["labels"].get<std::string>() + "(" + std::to_string(c["dimension"].get<std::uint64_t>()) + "x" +
           std::to_string(c["fixed_dim"].get<std::uint64_t>()) + ")";
}

std::string render_spectrum_text(const Doc& d) {
    std::string out(kTextHeader);
    out += "\n";
    for (const auto& [k, v] : d.items()) {
        if (k == "format" || k == "version" || k == "lines") continue;
        render_value(k, v, 0, out);
    }
    out += "lines:\n";
    for (const auto& line : d["lines"]) {
        out += "  eigenvalue " + line["eigenvalue"].get<std::string>() + "  multiplicity " +
               std::to_string(line["multiplicity"].get<std::uint64_t>()) + "  contributors";
        for (const auto& c : line["contributors"]) out += " " + contributor_text(c);
        out += "\n";
    }
    return out;
}

Doc weight_entry(const Group& g, const Weight& w) {
    Doc e;
    e["labels"] = g.format_labels(w);
    e["casimir"] = casimir_eigenvalue(w, g).str();
    e["dimension"] = weyl_dimension(w, g);
    return e;
}

Doc witness(const FixedDimWitness& w) {
    Doc e;
    e["labels"] = w.labels;
    e["casimir"] = w.casimir.str();
    e["k_fixed"] = w.k_fixed;
    e["fixed1"] = w.fixed1;
    e["fixed2"] = w.fixed2;
    return e;
}

Doc character(const FormalCharacter& chi) {
    Doc terms = Doc::array();
    for (const auto& [w, m] : chi.terms()) {
        Doc t;
        t["weight"] = w.str();
        t["multiplicity"] = m;
        terms.push_back(std::move(t));
    }
    return terms;
}

Doc map_info(const RestrictionMap& m) {
    Doc d;
    d["label"] = m.label();
    d["source"] = m.source().spec();
    d["target"] = m.target().spec();
    d["hash"] = m.hash();
    return d;
}

Doc cycles(const std::vector<Permutation>& perms) {
    Doc a = Doc::array();
    for (const auto& p : perms) a.push_back(format_cycles(p));
    return a;
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "' (expected text or json)");
}

std::string render(const Doc& doc, Format format) {
    if (format == Format::Json) return doc.dump(2) + "\n";
    if (doc.value("kind", "") == "spectrum") return render_spectrum_text(doc);
    std::string out(kTextHeader);
    out += "\n";
    for (const auto& [k, v] : doc.items()) {
        if (k == "format" || k == "version") continue;
        render_value(k, v, 0, out);
    }
    return out;
}

Doc spectrum(const Spectrum& s) {
    Doc d = header("spectrum");
    d["group"] = s.group;
    d["subgroup"] = s.map_label;
    d["map-hash"] = s.map_hash;
    d["cutoff"] = s.cutoff.str();
    d["line-count"] = s.lines.size();
    Doc lines = Doc::array();
    for (const auto& l : s.lines) {
        Doc line;
        line["eigenvalue"] = l.eigenvalue.str();
        line["multiplicity"] = l.multiplicity;
        Doc contrib = Doc::array();
        for (const auto& c : l.contributors) {
            Doc e;
            e["labels"] = c.labels;
            e["dimension"] = c.dimension;
            e["fixed_dim"] = c.fixed_dim;
            contrib.push_back(std::move(e));
        }
        line["contributors"] = std::move(contrib);
        lines.push_back(std::move(line));
    }
    d["lines"] = std::move(lines);
    return d;
}

Doc spectrum_comparison(const SpectrumComparison& c, const Spectrum& s1, const Spectrum& s2) {
    Doc d = header("spectrum-comparison");
    d["verdict"] = std::string(verdict_name(c.verdict));
    d["common-cutoff"] = c.common_cutoff.str();
    d["left"] = {{"group", s1.group}, {"subgroup", s1.map_label}, {"cutoff", s1.cutoff.str()}};
    d["right"] = {{"group", s2.group}, {"subgroup", s2.map_label}, {"cutoff", s2.cutoff.str()}};
    if (c.first_discrepancy) {
        d["first-discrepancy"] = {{"eigenvalue", c.first_discrepancy->eigenvalue.str()},
                                  {"multiplicity1", c.first_discrepancy->multiplicity1},
                                  {"multiplicity2", c.first_discrepancy->multiplicity2}};
    }
    return d;
}

Doc equivalence(std::string_view kind, const Group& g, const EquivalenceReport& r) {
    Doc d = header(kind);
    d["group"] = g.spec();
    d["cutoff"] = r.cutoff.str();
    d["equivalent"] = r.equivalent;
    d["checked-count"] = r.checked.size();
    if (r.violation) d["witness"] = witness(*r.violation);
    Doc checked = Doc::array();
    for (const auto& w : r.checked) checked.push_back(witness(w));
    d["checked"] = std::move(checked);
    return d;
}

Doc dimension_datum(const DimensionDatum& dd, std::string_view map_label) {
    Doc d = header("dimension-datum");
    d["ambient"] = dd.ambient.spec();
    d["subgroup"] = std::string(map_label);
    d["cutoff"] = dd.cutoff.str();
    d["entry-count"] = dd.entries.size();
    Doc entries = Doc::array();
    for (const auto& e : dd.entries) {
        Doc x;
        x["labels"] = e.labels;
        x["casimir"] = e.casimir.str();
        x["fixed_dim"] = e.fixed_dim;
        entries.push_back(std::move(x));
    }
    d["entries"] = std::move(entries);
    return d;
}

Doc datum_comparison(const DatumComparison& c, const DimensionDatum& d1, const DimensionDatum& d2) {
    Doc d = header("dimension-datum-comparison");
    d["verdict"] = std::string(verdict_name(c.verdict));
    d["ambient"] = d1.ambient.spec();
    d["common-cutoff"] = c.common_cutoff.str();
    d["entries-compared"] = std::min(d1.entries.size(), d2.entries.size());
    if (c.first_left && c.first_right) {
        d["first-difference"] = {{"labels", c.first_left->labels},
                                 {"casimir", c.first_left->casimir.str()},
                                 {"fixed1", c.first_left->fixed_dim},
                                 {"fixed2", c.first_right->fixed_dim}};
    }
    return d;
}

Doc aut_conjugacy(const AutConjugacyResult& r, const RestrictionMap& h1, const RestrictionMap& h2) {
    Doc d = header("aut-conjugacy");
    d["verdict"] = std::string(verdict_name(r.verdict));
    d["twist"] = r.twist.empty() ? Doc(nullptr) : Doc(r.twist);
    d["h1"] = map_info(h1);
    d["h2"] = map_info(h2);
    return d;
}

Doc gassmann(const PermGroup& g, const SubgroupHandle& h1, const SubgroupHandle& h2, bool almost, bool conjugate,
             const std::vector<PermutationCharacterValue>& chi1, const std::vector<PermutationCharacterValue>& chi2) {
    Doc d = header("gassmann");
    d["summary"] = "almost-conjugate: " + yes_no(almost) + "; conjugate: " + yes_no(conjugate);
    d["almost-conjugate"] = almost;
    d["conjugate"] = conjugate;
    bool same = chi1.size() == chi2.size();
    for (std::size_t i = 0; same && i < chi1.size(); ++i) same = chi1[i].fixed_cosets == chi2[i].fixed_cosets;
    d["permutation-characters-equal"] = same;
    d["group"] = {{"degree", g.degree()}, {"order", g.order()}, {"generators", cycles(g.generators())}};
    d["sub1"] = {{"order", h1.order()}, {"generators", cycles(h1.generators())}};
    d["sub2"] = {{"order", h2.order()}, {"generators", cycles(h2.generators())}};
    auto part = class_partition(g);
    auto n1 = class_intersections(part, h1);
    auto n2 = class_intersections(part, h2);
    Doc classes = Doc::array();
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
        Doc c;
        c["representative"] = format_cycles(part.classes[i].representative);
        c["size"] = part.classes[i].size;
        c["meets1"] = n1[i];
        c["meets2"] = n2[i];
        if (i < chi1.size()) c["chi1"] = chi1[i].fixed_cosets;
        if (i < chi2.size()) c["chi2"] = chi2[i].fixed_cosets;
        classes.push_back(std::move(c));
    }
    d["classes"] = std::move(classes);
    return d;
}

Doc fiber_types(const Group& k, const RestrictionMap& h_map, const Rational& cutoff, const std::vector<Weight>& types) {
    Doc d = header("fiber-types");
    d["group"] = k.spec();
    d["subgroup"] = h_map.label();
    d["cutoff"] = cutoff.str();
    d["count"] = types.size();
    Doc arr = Doc::array();
    for (const auto& w : types) arr.push_back(weight_entry(k, w));
    d["types"] = std::move(arr);
    return d;
}

Doc subsystems(int n, const std::vector<RootSubsystem>& classes) {
    Doc d = header("bc-subsystems");
    d["rank"] = n;
    d["definition"] = "reflection-closed subsets of BC_n of rank n, up to signed permutations";
    d["class-count"] = classes.size();
    Doc arr = Doc::array();
    for (const auto& c : classes) {
        Doc x;
        x["type"] = c.type;
        x["root-count"] = c.roots.size();
        x["class-size"] = c.class_size;
        Doc roots = Doc::array();
        for (const auto& r : c.roots) roots.push_back(r.str());
        x["roots"] = std::move(roots);
        arr.push_back(std::move(x));
    }
    d["classes"] = std::move(arr);
    return d;
}

Doc lp_construction(const AlternatingTensorSpec& spec, const FormalCharacter& chi1, const FormalCharacter& chi2) {
    Doc d = header("alternating-construction");
    d["r"] = spec.r;
    d["n"] = spec.n;
    d["torus-rank"] = spec.r * spec.n;
    bool grid_self_dual = true;
    for (const auto& row : spec.grid)
        for (const auto& chi : row) grid_self_dual = grid_self_dual && self_dual_check(chi);
    d["grid-self-dual"] = grid_self_dual;
    d["characters-equal"] = chi1 == chi2;
    d["chi1"] = {{"dimension", chi1.mass()}, {"self-dual", self_dual_check(chi1)}, {"terms", character(chi1)}};
    d["chi2"] = {{"dimension", chi2.mass()}, {"self-dual", self_dual_check(chi2)}, {"terms", character(chi2)}};
    return d;
}

// ---------------------------------------------------------------------------
// Reading spectra back

namespace {

Spectrum spectrum_from_json(const Doc& d, const std::string& origin) {
    if (d.value("format", "") != "isospec-report" || d.value("kind", "") != "spectrum")
        throw ParseError(origin + ": not a spectrum report");
    if (d.value("version", 0) != kVersion)
        throw ParseError(origin + ": unsupported report version " + std::to_string(d.value("version", 0)));
    Spectrum s;
    s.group = d.at("group").get<std::string>();
    s.map_label = d.at("subgroup").get<std::string>();
    s.map_hash = d.at("map-hash").get<std::string>();
    s.cutoff = Rational::parse(d.at("cutoff").get<std::string>());
    const Group g = Group::parse(s.group);
    for (const auto& l : d.at("lines")) {
        SpectralLine line{Rational::parse(l.at("eigenvalue").get<std::string>()),
                          l.at("multiplicity").get<std::uint64_t>(),
                          {}};
        for (const auto& c : l.at("contributors")) {
            auto labels = c.at("labels").get<std::string>();
            line.contributors.push_back(Contributor{g.parse_labels(labels), labels,
                                                    c.at("dimension").get<std::uint64_t>(),
                                                    c.at("fixed_dim").get<std::uint64_t>()});
        }
        s.lines.push_back(std::move(line));
    }
    return s;
}

Spectrum spectrum_from_text(std::string_view content, const std::string& origin) {
    std::istringstream in{std::string(content)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { return ParseError(origin + ":" + std::to_string(lineno) + ": " + msg); };
    if (!std::getline(in, line)) throw ParseError(origin + ": empty report");
    ++lineno;
    if (line != kTextHeader) throw fail("expected header '" + std::string(kTextHeader) + "'");
    std::map<std::string, std::string> fields;
    bool in_lines = false;
    Spectrum s;
    std::optional<Group> g;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            if (!in_lines) {
                auto colon = line.find(':');
                if (colon == std::string::npos) throw fail("expected 'key: value'");
                std::string key = line.substr(0, colon);
                std::string value = colon + 2 <= line.size() ? line.substr(colon + 2) : "";
                if (key == "lines") {
                    for (const char* k : {"kind", "group", "subgroup", "map-hash", "cutoff"})
                        if (!fields.contains(k)) throw fail(std::string("missing field '") + k + "'");
                    if (fields["kind"] != "spectrum") throw fail("not a spectrum report");
                    s.group = fields["group"];
                    s.map_label = fields["subgroup"];
                    s.map_hash = fields["map-hash"];
                    s.cutoff = Rational::parse(fields["cutoff"]);
                    g = Group::parse(s.group);
                    in_lines = true;
                } else {
                    fields[key] = value;
                }
                continue;
            }
            std::istringstream ls(line);
            std::string kw1, ev, kw2, kw3, tok;
            std::uint64_t mult = 0;
            if (!(ls >> kw1 >> ev >> kw2 >> mult >> kw3) || kw1 != "eigenvalue" || kw2 != "multiplicity" ||
                kw3 != "contributors")
                throw fail("expected 'eigenvalue <q>  multiplicity <n>  contributors ...'");
            SpectralLine sl{Rational::parse(ev), mult, {}};
            while (ls >> tok) {
                auto open = tok.rfind('(');
                auto x = tok.find('x', open);
                if (open == std::string::npos || x == std::string::npos || tok.back() != ')')
                    throw fail("bad contributor '" + tok + "'");
                std::string labels = tok.substr(0, open);
                std::uint64_t dim = std::stoull(tok.substr(open + 1, x - open - 1));
                std::uint64_t fixed = std::stoull(tok.substr(x + 1, tok.size() - x - 2));
                sl.contributors.push_back(Contributor{g->parse_labels(labels), labels, dim, fixed});
            }
            s.lines.push_back(std::move(sl));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw fail(e.what());
        }
    }
    if (!in_lines) throw ParseError(origin + ": missing 'lines:' section");
    if (fields.contains("line-count") && fields["line-count"] != std::to_string(s.lines.size()))
        throw ParseError(origin + ": line-count says " + fields["line-count"] + " but " +
                         std::to_string(s.lines.size()) + " lines follow");
    return s;
}

}  // namespace

Spectrum parse_spectrum(std::string_view content, const std::string& origin) {
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && content[first] == '{') {
        Doc d;
        try {
            d = Doc::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(origin + ": " + e.what());
        }
        try {
            return spectrum_from_json(d, origin);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(origin + ": " + e.what());
        }
    }
    return spectrum_from_text(content, origin);
}

Spectrum load_spectrum(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open report");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spectrum(buf.str(), path.string());
}

}  // namespace isospec::report
