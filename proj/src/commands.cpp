#include "terqf/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "terqf/automorphs.hpp"
#include "terqf/binaryqf.hpp"
#include "terqf/configs.hpp"
#include "terqf/errors.hpp"
#include "terqf/forms.hpp"
#include "terqf/identities.hpp"
#include "terqf/localdensity.hpp"
#include "terqf/prelist.hpp"
#include "terqf/reproduce.hpp"

namespace terqf {

namespace {

using Json = nlohmann::ordered_json;

enum class Format
{
    json,
    csv
};

/// A command renders either a JSON document or CSV rows.
struct Output
{
    Json json;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

template <typename... T>
std::vector<std::string> row(T const &... v)
{
    std::vector<std::string> r;
    auto put = [&](auto const & x) {
        if constexpr (std::is_convertible_v<decltype(x), std::string>)
            r.emplace_back(x);
        else
            r.push_back(std::to_string(x));
    };
    (put(v), ...);
    return r;
}

void emit(Output const & o, Format f, std::ostream & out)
{
    if (f == Format::json) {
        out << o.json.dump(2) << "\n";
        return;
    }
    auto line = [&](std::vector<std::string> const & cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
            if (i)
                out << ',';
            if (quote) {
                out << '"';
                for (char ch : cells[i])
                    out << (ch == '"' ? std::string("\"\"") : std::string(1, ch));
                out << '"';
            }
            else
                out << cells[i];
        }
        out << "\n";
    };
    line(o.csv_header);
    for (auto const & r : o.csv_rows)
        line(r);
}

Json vec_json(Vec3 const & v)
{
    return Json(v);
}

Json matrix_json(Mat3 const & m)
{
    return Json::array({Json(m[0]), Json(m[1]), Json(m[2])});
}

ClassNumberCatalog load_catalog(std::string const & path)
{
    if (path.empty())
        return default_catalog();
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        }
        catch (nlohmann::json::exception const & e) {
            throw ParseError("catalog file " + path + ": " + e.what());
        }
        ClassNumberCatalog c = catalog_from_json(j);
        if (c.bound < 8)
            throw PreconditionError("catalog file " + path + " has bound "
                                    + std::to_string(c.bound) + ", need 8");
        return c;
    }
    ClassNumberCatalog c = catalog_h_le(8);
    std::ofstream file(path);
    if (!file)
        throw PreconditionError("cannot write catalog cache " + path);
    file << catalog_to_json(c).dump(1) << "\n";
    return c;
}

struct Flags
{
    std::string form;
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::optional<int> k;
    std::int64_t N = 0;
    std::int64_t D = 0;
    int bound = 8;
    std::int64_t ceiling = 0;
    std::string format = "json";
    std::string catalog;
    std::string target;
    bool explain = false;
    bool odd = false;
    bool timing = false;
};

Output cmd_repr(Flags const & f)
{
    TernaryForm form = parse_form(f.form);
    RepresentationSet r = enumerate_representations(form, f.n);
    Output o;
    o.json["form"] = format_form(form);
    o.json["n"] = f.n;
    o.json["count"] = r.size();
    o.json["triples"] = Json::array();
    o.csv_header = {"x", "y", "z"};
    for (auto const & v : r.triples) {
        o.json["triples"].push_back(vec_json(v));
        o.csv_rows.push_back(row(v[0], v[1], v[2]));
    }
    return o;
}

Output cmd_orbits(Flags const & f)
{
    TernaryForm form = parse_form(f.form);
    AutomorphGroup G = automorph_group(form);
    OrbitPartition P = orbit_partition(G, f.n);
    Output o;
    std::size_t count = 0;
    Json orbits = Json::array();
    o.csv_header = {"orbit", "x", "y", "z"};
    for (std::size_t i = 0; i < P.orbits.size(); ++i) {
        Json orb = Json::array();
        for (auto const & v : P.orbits[i]) {
            orb.push_back(vec_json(v));
            o.csv_rows.push_back(row(i + 1, v[0], v[1], v[2]));
        }
        count += P.orbits[i].size();
        orbits.push_back(orb);
    }
    o.json["form"] = format_form(form);
    o.json["n"] = f.n;
    o.json["count"] = count;
    o.json["aut_order"] = G.order();
    o.json["orbit_count"] = P.size();
    o.json["essentially_unique"] = P.size() == 1;
    o.json["orbits"] = orbits;
    return o;
}

Output cmd_aut(Flags const & f)
{
    TernaryForm form = parse_form(f.form);
    AutomorphGroup G = automorph_group(form);
    Output o;
    o.json["form"] = format_form(form);
    o.json["order"] = G.order();
    o.json["automorphs"] = Json::array();
    o.csv_header = {"index", "m11", "m12", "m13", "m21", "m22", "m23", "m31", "m32", "m33"};
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        auto const & m = G.elements[i].m;
        o.json["automorphs"].push_back(matrix_json(m));
        o.csv_rows.push_back(row(i + 1, m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2],
                                 m[2][0], m[2][1], m[2][2]));
    }
    return o;
}

Output cmd_theta(Flags const & f)
{
    TernaryForm form = parse_form(f.form);
    if (f.N < 0)
        throw PreconditionError("--N must be non-negative");
    QSeries t = theta_coefficients(form, f.N);
    Output o;
    o.json["form"] = format_form(form);
    o.json["N"] = f.N;
    o.json["coefficients"] = t.coefficients();
    o.csv_header = {"n", "count"};
    for (std::int64_t n = 0; n <= f.N; ++n)
        o.csv_rows.push_back(row(n, t[n]));
    return o;
}

Output cmd_density(Flags const & f)
{
    TernaryForm form = parse_form(f.form);
    Output o;
    o.json["form"] = format_form(form);
    o.json["p"] = f.p;
    o.json["n"] = f.n;
    o.csv_header = {"p", "n", "k", "density"};
    if (f.k) {
        mpq_class d = local_density_finite(form, f.p, f.n, *f.k);
        o.json["k"] = *f.k;
        o.json["density"] = rational_string(d);
        o.csv_rows.push_back(row(f.p, f.n, *f.k, rational_string(d)));
    }
    else {
        LocalDensityValue d = local_density(form, f.p, f.n);
        o.json["k_used"] = d.k_used;
        o.json["density"] = rational_string(d.value);
        o.csv_rows.push_back(row(f.p, f.n, d.k_used, rational_string(d.value)));
    }
    return o;
}

Output cmd_classnum(Flags const & f)
{
    std::int64_t h = class_number(f.D);
    Output o;
    o.json["D"] = f.D;
    o.json["h"] = h;
    o.csv_header = {"D", "h"};
    o.csv_rows.push_back(row(f.D, h));
    return o;
}

Output cmd_classgroup(Flags const & f)
{
    ClassGroup G = class_group(f.D);
    Output o;
    o.json["D"] = f.D;
    o.json["h"] = G.order();
    o.json["structure"] = G.label();
    o.json["invariants"] = G.structure;
    o.json["forms"] = Json::array();
    o.csv_header = {"A", "B", "C", "order"};
    for (std::size_t i = 0; i < G.representatives.size(); ++i) {
        auto const & g = G.representatives[i];
        o.json["forms"].push_back(
            {{"form", {g.A, g.B, g.C}}, {"order", G.element_order(i)}});
        o.csv_rows.push_back(row(g.A, g.B, g.C, G.element_order(i)));
    }
    return o;
}

Output cmd_siegel(Flags const & f)
{
    TernaryForm form = parse_form(f.form);
    Output o;
    o.csv_header = {"form", "n", "count"};
    if (f.explain) {
        SiegelAssembly a = siegel_assembly(form, f.n);
        o.json = a.to_json();
        o.csv_header = {"factor", "value"};
        o.csv_rows = {row("l_value", a.l_value.str()),
                      row("prefactor", rational_string(a.prefactor)),
                      row("p_correction", rational_string(a.p_factor))};
        for (auto const & d : a.bad_primes)
            o.csv_rows.push_back(row("density_" + std::to_string(d.p), rational_string(d.value)));
        o.csv_rows.push_back(row("odd_factor", rational_string(a.odd_factor)));
        o.csv_rows.push_back(row("count", rational_string(a.count)));
        if (a.count.get_den() != 1)
            throw InconsistencyError("non-integral Siegel count " + rational_string(a.count));
        return o;
    }
    std::int64_t c = siegel_count(form, f.n);
    o.json["form"] = format_form(form);
    o.json["n"] = f.n;
    o.json["count"] = c;
    o.csv_rows.push_back(row(format_form(form), f.n, c));
    return o;
}

Output cmd_prelist(Flags const & f)
{
    TernaryForm form = parse_form(f.form);
    PrelistConfig const * config = find_config(form);
    if (!config)
        throw PreconditionError("no prelist configuration shipped for " + format_form(form));
    PrelistResult r = compute_prelist(*config, load_catalog(f.catalog));
    Output o;
    o.json = r.to_json();
    o.json["config"] = config_to_json(*config);
    o.csv_header = {"n", "count", "status"};
    for (std::int64_t n : r.candidates)
        o.csv_rows.push_back(row(n, r.counts.at(n), r.counts.at(n) <= r.aut_order ? "prelist" : "spurious"));
    return o;
}

Output cmd_unique(Flags const & f)
{
    TernaryForm form = parse_form(f.form);
    std::int64_t bound = f.N > 0 ? f.N : 5000;
    UniqueSpec const * spec = find_unique_spec(form);
    UniqueResult r = spec && !f.odd ? compute_unique(*spec, load_catalog(f.catalog), bound)
                                    : scan_unique(form, bound, f.odd);
    Output o;
    o.json = r.to_json();
    o.csv_header = {"n"};
    for (std::int64_t n : r.base)
        o.csv_rows.push_back(row(n));
    return o;
}

Output cmd_catalog(Flags const & f)
{
    ClassNumberCatalog c = f.bound == 8 ? load_catalog(f.catalog) : catalog_h_le(f.bound);
    Output o;
    o.json = catalog_to_json(c);
    if (f.ceiling > 0)
        o.json["omissions_below"] = {{"ceiling", f.ceiling},
                                     {"omissions", catalog_omissions(c, f.ceiling)}};
    o.csv_header = {"D", "h", "structure"};
    for (auto const & e : c.entries)
        o.csv_rows.push_back(row(e.D, e.h, e.label()));
    return o;
}

Output cmd_identities(Flags const & f)
{
    std::int64_t N = f.N > 0 ? f.N : 500;
    auto rels = builtin_catalog();
    std::vector<RelationVerdict> verdicts;
    SeriesCache cache;
    for (auto const & r : rels)
        verdicts.push_back(verify_relation(r, N, cache));
    Output o;
    o.json["N"] = N;
    o.json["relations"] = catalog_relations_to_json(rels, verdicts);
    o.csv_header = {"name", "holds", "anchor"};
    for (std::size_t i = 0; i < rels.size(); ++i)
        o.csv_rows.push_back(row(rels[i].name, verdicts[i].holds ? "true" : "false", rels[i].anchor));
    return o;
}

}  // namespace

int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"terqf: representations by positive ternary quadratic forms", "terqf"};
    app.require_subcommand(1);
    Flags flags;
    Format format = Format::json;
    int status = exit_ok;
    std::function<void()> action;

    auto add_format = [&](CLI::App * sub) {
        sub->add_option("--format", flags.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto simple = [&](std::string name, std::string help, Output (*fn)(Flags const &)) {
        CLI::App * sub = app.add_subcommand(name, help);
        add_format(sub);
        sub->callback([&, fn] { action = [&, fn] { emit(fn(flags), format, out); }; });
        return sub;
    };

    auto * repr = simple("repr", "all solutions of f(x,y,z) = n", cmd_repr);
    repr->add_option("--form", flags.form, "a,b,c,d,e,f")->required();
    repr->add_option("--n", flags.n)->required();

    auto * orbits = simple("orbits", "automorph orbits on the solutions of f = n", cmd_orbits);
    orbits->add_option("--form", flags.form)->required();
    orbits->add_option("--n", flags.n)->required();

    auto * aut = simple("aut", "automorph group", cmd_aut);
    aut->add_option("--form", flags.form)->required();

    auto * theta = simple("theta", "theta series coefficients up to N", cmd_theta);
    theta->add_option("--form", flags.form)->required();
    theta->add_option("--N", flags.N)->required();

    auto * density = simple("density", "p-adic local density", cmd_density);
    density->add_option("--form", flags.form)->required();
    density->add_option("--p", flags.p)->required();
    density->add_option("--n", flags.n)->required();
    density->add_option("--k", flags.k, "fixed modulus exponent instead of the stable value");

    auto * classnum = simple("classnum", "class number h(D)", cmd_classnum);
    classnum->add_option("--D", flags.D, "negative discriminant")->required();

    auto * classgroup = simple("classgroup", "class group structure", cmd_classgroup);
    classgroup->add_option("--D", flags.D)->required();

    auto * siegel = simple("siegel", "count from the mass formula", cmd_siegel);
    siegel->add_option("--form", flags.form)->required();
    siegel->add_option("--n", flags.n)->required();
    siegel->add_flag("--explain", flags.explain, "factor breakdown");

    auto * prelist = simple("prelist", "n with 0 < R(n) <= |Aut|", cmd_prelist);
    prelist->add_option("--form", flags.form)->required();
    prelist->add_option("--catalog", flags.catalog, "class number catalog cache (JSON)");

    auto * unique = simple("unique", "integers represented in essentially one way", cmd_unique);
    unique->add_option("--form", flags.form)->required();
    unique->add_option("--N", flags.N, "scan bound (default 5000)");
    unique->add_flag("--odd", flags.odd, "odd n only, by enumeration");
    unique->add_option("--catalog", flags.catalog, "class number catalog cache (JSON)");

    auto * catalog = simple("catalog", "discriminants with small class number", cmd_catalog);
    catalog->add_option("--catalog", flags.catalog, "cache file to read or create");
    catalog->add_option("--bound", flags.bound, "class number bound")->check(CLI::Range(1, 8));
    catalog->add_option("--ceiling", flags.ceiling, "also search for omissions below this |D|");

    auto * identities = simple("identities", "verify the built-in theta relations", cmd_identities);
    identities->add_option("--N", flags.N, "indices checked (default 500)");

    CLI::App * rep = app.add_subcommand("reproduce", "recompute a result and diff it against the embedded data");
    add_format(rep);
    rep->add_option("target", flags.target, "target id")->required();
    rep->add_option("--catalog", flags.catalog, "class number catalog cache (JSON)");
    rep->add_flag("--timing", flags.timing, "include runtime in the report");
    rep->callback([&] {
        action = [&] {
            ReproduceOptions opts;
            ClassNumberCatalog cat;
            if (!flags.catalog.empty()) {
                cat = load_catalog(flags.catalog);
                opts.catalog = &cat;
            }
            ReproductionReport r = reproduce(flags.target, opts);
            Output o;
            o.json = r.to_json(flags.timing);
            o.csv_header = {"check", "verdict"};
            for (auto const & c : r.checks)
                o.csv_rows.push_back(row(c.name, c.pass ? "pass" : "fail"));
            emit(o, format, out);
            if (!r.pass()) {
                err << r.diff();
                status = exit_mismatch;
            }
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    format = flags.format == "csv" ? Format::csv : Format::json;
    try {
        if (action)
            action();
    }
    catch (ParseError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (PreconditionError const & e) {
        err << "error: " << e.what() << "\n";
        return exit_precondition;
    }
    catch (InconsistencyError const & e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return exit_internal;
    }
    catch (std::exception const & e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return status;
}

}  // namespace terqf
