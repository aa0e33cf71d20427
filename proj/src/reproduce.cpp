#include "terqf/reproduce.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "terqf/arith.hpp"
#include "terqf/automorphs.hpp"
#include "terqf/configs.hpp"
#include "terqf/errors.hpp"
#include "terqf/identities.hpp"
#include "terqf/localdensity.hpp"
#include "terqf/prelist.hpp"

namespace terqf {

nlohmann::json const & reference_data()
{
    static nlohmann::json const data = [] {
        nlohmann::json j = nlohmann::json::parse(reference_json);
        if (j.value("format", "") != "terqf-reference" || j.value("version", 0) != 1)
            throw InconsistencyError("embedded reference data has an unexpected format");
        return j;
    }();
    return data;
}

ClassNumberCatalog const & default_catalog()
{
    static ClassNumberCatalog const catalog = catalog_h_le(8);
    return catalog;
}

bool ReproductionReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](Check const & c) { return c.pass; });
}

nlohmann::ordered_json ReproductionReport::to_json(bool with_runtime) const
{
    nlohmann::ordered_json j;
    j["target"] = target;
    j["verdict"] = pass() ? "pass" : "fail";
    std::size_t failed = 0;
    for (auto const & c : checks)
        failed += !c.pass;
    j["checks_total"] = checks.size();
    j["checks_failed"] = failed;
    if (with_runtime)
        j["runtime_seconds"] = runtime_seconds;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto const & c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"anchor", c.anchor},
                               {"verdict", c.pass ? "pass" : "fail"},
                               {"expected", c.expected},
                               {"computed", c.computed}});
    return j;
}

std::string ReproductionReport::diff() const
{
    std::string out;
    for (auto const & c : checks)
        if (!c.pass)
            out += "MISMATCH " + c.name + "\n  expected: " + c.expected.dump()
                   + "\n  computed: " + c.computed.dump() + "\n";
    return out;
}

namespace {

using Json = nlohmann::ordered_json;
using Ints = std::vector<std::int64_t>;
using Task = std::function<std::vector<Check>()>;

TernaryForm const sum3{1, 1, 1, 0, 0, 0};

Check check(std::string name, std::string anchor, Json expected, Json computed)
{
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.pass = expected == computed;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    return c;
}

Check predicate(std::string name, std::string anchor, bool ok, Json detail)
{
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.pass = ok;
    c.expected = true;
    c.computed = ok ? Json(true) : std::move(detail);
    return c;
}

std::vector<Check> run_parallel(std::vector<Task> const & tasks)
{
    std::vector<std::vector<Check>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < tasks.size();) {
                try {
                    results[i] = tasks[i]();
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto & t : pool)
        t.join();
    std::vector<Check> out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.insert(out.end(), results[i].begin(), results[i].end());
    }
    return out;
}

// ---------------------------------------------------------------- bands

std::vector<Task> band_tasks(ReproduceOptions const & o)
{
    return {[o] {
        auto const & ref = reference_data()["bands"];
        TernaryForm form = parse_form(ref["form"].get<std::string>());
        QSeries theta = theta_coefficients(form, o.scan_bound);
        PrelistResult pre = compute_prelist(*find_config(form), *o.catalog);
        std::vector<Check> out;
        std::set<std::int64_t> covered;
        for (auto const & row : ref["rows"]) {
            std::int64_t lo = row["low"], hi = row["high"];
            bool lo_in = row["low_inclusive"], hi_in = row["high_inclusive"];
            auto in_band = [&](std::int64_t R) {
                return (lo_in ? R >= lo : R > lo) && (hi_in ? R <= hi : R < hi) && R > 0;
            };
            Ints scanned, listed;
            for (std::int64_t n = 1; n <= o.scan_bound; ++n)
                if (n % 4 != 0 && in_band(theta[n]))
                    scanned.push_back(n);
            for (std::int64_t n : pre.values)
                if (in_band(pre.counts.at(n)))
                    listed.push_back(n);
            covered.insert(listed.begin(), listed.end());
            out.push_back(check("bands " + row["label"].get<std::string>(),
                                ref["anchor"].get<std::string>() + ": " + row["label"].get<std::string>(),
                                row["values"], scanned));
            out.push_back(check("bands " + row["label"].get<std::string>() + " via bound cascade",
                                "the same band read off the complete candidate list",
                                row["values"], listed));
        }
        out.push_back(check("bands cover the prelist", "every band member has 0 < R <= 48",
                            pre.values, Ints(covered.begin(), covered.end())));
        return out;
    }};
}

// ---------------------------------------------------------------- automorphs

Json matrix_json(Mat3 const & m)
{
    return Json::array({Json(m[0]), Json(m[1]), Json(m[2])});
}

std::vector<Task> automorph_tasks(ReproduceOptions const &)
{
    std::vector<Task> tasks;
    auto const & ref = reference_data()["automorphs"];
    for (auto const & row : ref["orders"])
        tasks.push_back([row] {
            TernaryForm f = parse_form(row["form"].get<std::string>());
            return std::vector<Check>{check("|Aut" + format_form(f) + "|",
                                            "automorph group order",
                                            row["order"], automorph_group(f).order())};
        });
    tasks.push_back([&ref] {
        auto const & m = ref["matrices"];
        TernaryForm f = parse_form(m["form"].get<std::string>());
        std::set<Json> expected, computed;
        for (auto const & e : m["elements"])
            expected.insert(Json(e));
        for (auto const & a : automorph_group(f).elements)
            computed.insert(matrix_json(a.m));
        Json je = Json::array(), jc = Json::array();
        for (auto const & e : expected)
            je.push_back(e);
        for (auto const & c : computed)
            jc.push_back(c);
        auto const & orb = ref["orbits"];
        OrbitPartition P = orbit_partition(parse_form(orb["form"].get<std::string>()),
                                           orb["n"].get<std::int64_t>());
        Json jo = Json::array();
        for (auto const & o : P.orbits)
            jo.push_back(o);
        return std::vector<Check>{
            check("Aut" + format_form(f) + " matrices", m["anchor"], je, jc),
            check("orbits of " + std::to_string(orb["n"].get<std::int64_t>()), orb["anchor"],
                  orb["orbits"], jo)};
    });
    return tasks;
}

// ---------------------------------------------------------------- siegel

std::vector<Task> siegel_tasks(ReproduceOptions const & o)
{
    std::vector<Task> tasks;
    auto const & ref = reference_data()["siegel"];
    for (auto const & fs : ref["forms"])
        tasks.push_back([o, text = fs.get<std::string>(), anchor = ref["anchor"].get<std::string>()] {
            TernaryForm f = parse_form(text);
            QSeries theta = theta_coefficients(f, o.siegel_bound);
            Json mismatches = Json::array();
            for (std::int64_t n = 1; n <= o.siegel_bound; ++n) {
                std::int64_t s = siegel_count(f, n);
                if (s != theta[n] && mismatches.size() < 10)
                    mismatches.push_back({{"n", n}, {"siegel", s}, {"enumerated", theta[n]}});
            }
            return std::vector<Check>{check("siegel = enumeration for " + format_form(f)
                                                + ", n <= " + std::to_string(o.siegel_bound),
                                            anchor, Json::array(), mismatches)};
        });
    return tasks;
}

// ---------------------------------------------------------------- densities

std::vector<Task> density_tasks(ReproduceOptions const &)
{
    std::vector<Task> tasks;
    for (auto const & spec : reference_data()["densities"])
        tasks.push_back([&spec] {
            TernaryForm f = parse_form(spec["form"].get<std::string>());
            std::int64_t p = spec["p"], base = spec["split_base"];
            int a_top = spec["a_top"];
            std::int64_t v_top = spec["v_top"];
            bool odd_only = spec.value("odd_only", false);
            Json mismatches = Json::array();
            std::int64_t checked = 0;
            Ints uncovered;
            for (int a = 0; a <= a_top; ++a)
                for (std::int64_t v = 1; v <= v_top; ++v) {
                    if (v % base == 0 || (odd_only && v % 2 == 0))
                        continue;
                    std::int64_t n = ipow(base, a) * v;
                    nlohmann::json const * hit = nullptr;
                    for (auto const & c : spec["cases"]) {
                        int amin = c["a_min"], amax = c["a_max"];
                        auto res = c["residues"].get<Ints>();
                        if (a < amin || (amax >= 0 && a > amax))
                            continue;
                        if (std::find(res.begin(), res.end(), mod<std::int64_t>(v, c["modulus"]))
                            == res.end())
                            continue;
                        if (hit)
                            throw InconsistencyError("overlapping density cases in "
                                                     + spec["name"].get<std::string>());
                        hit = &c;
                    }
                    if (!hit) {
                        uncovered.push_back(n);
                        continue;
                    }
                    mpq_class expected =
                        mpq_class((*hit)["alpha"].get<std::string>())
                        + mpq_class((*hit)["beta"].get<std::string>())
                              * rational_pow(p, (*hit)["sign"].get<int>() * a);
                    expected.canonicalize();
                    mpq_class got = local_density(f, p, n).value;
                    ++checked;
                    if (got != expected && mismatches.size() < 10)
                        mismatches.push_back({{"n", n},
                                              {"expected", rational_string(expected)},
                                              {"computed", rational_string(got)}});
                }
            std::string name = spec["name"];
            return std::vector<Check>{
                check(name + " closed form (" + std::to_string(checked) + " values)",
                      spec["anchor"], Json::array(), mismatches),
                check(name + " cases cover every argument", spec["anchor"], Ints{}, uncovered)};
        });
    return tasks;
}

// ---------------------------------------------------------------- identities

std::vector<Check> verify_relations(std::vector<ThetaRelation> const & rels, std::int64_t N)
{
    // One cache per chunk; chunks run in parallel.
    std::size_t chunks = std::max(1u, std::thread::hardware_concurrency());
    std::vector<Task> tasks;
    for (std::size_t c = 0; c < chunks && c < rels.size(); ++c)
        tasks.push_back([&rels, c, chunks, N] {
            SeriesCache cache;
            std::vector<Check> out;
            for (std::size_t i = c; i < rels.size(); i += chunks) {
                RelationVerdict v = verify_relation(rels[i], N, cache);
                Json computed = Json::array();
                if (!v.holds)
                    computed.push_back({{"n", *v.index}, {"lhs", v.lhs_value}, {"rhs", v.rhs_value}});
                out.push_back(check(rels[i].name, rels[i].anchor, Json::array(), computed));
            }
            return out;
        });
    std::vector<Check> mixed = run_parallel(tasks);
    std::map<std::string, Check> byname;
    for (auto & c : mixed)
        byname.emplace(c.name, std::move(c));
    std::vector<Check> out;
    for (auto const & r : rels)
        out.push_back(byname.at(r.name));
    return out;
}

std::vector<Task> identity_tasks(ReproduceOptions const & o)
{
    return {[o] {
        auto rels = builtin_catalog();
        std::int64_t minimum = reference_data()["identities"]["min_relations"];
        std::vector<Check> out{predicate("relation catalog size", "at least the required number of relations",
                                         static_cast<std::int64_t>(rels.size()) >= minimum,
                                         static_cast<std::int64_t>(rels.size()))};
        auto verified = verify_relations(rels, o.identity_bound);
        out.insert(out.end(), verified.begin(), verified.end());
        return out;
    }};
}

// ---------------------------------------------------------------- class groups

std::vector<Task> class_group_tasks(ReproduceOptions const & o)
{
    std::vector<Task> tasks;
    auto const & ref = reference_data()["class_groups"];
    tasks.push_back([o, &ref] {
        ClassNumberCatalog const & cat = *o.catalog;
        std::vector<Check> out;
        out.push_back(check("catalog size", ref["anchor"], ref["total"], cat.entries.size()));
        out.push_back(check("largest |D|", ref["anchor"], ref["largest"],
                            cat.entries.empty() ? 0 : -cat.entries.back().D));
        auto by = cat.by_structure();
        std::set<std::string> labels;
        for (auto const & [label, list] : ref["by_structure"].items())
            labels.insert(label);
        for (auto const & [label, list] : by)
            labels.insert(label);
        for (auto const & label : labels) {
            Json expected = ref["by_structure"].contains(label) ? Json(ref["by_structure"][label])
                                                                 : Json::array();
            Json computed = by.count(label) ? Json(by.at(label)) : Json::array();
            out.push_back(check("H(D) = " + label, ref["anchor"], expected, computed));
        }
        for (auto const & e : reference_data()["examples"]["class_numbers"]) {
            std::int64_t D = e["D"];
            ClassGroup G = class_group(D);
            Json exp = {{"h", e["h"]}}, got = {{"h", G.order()}};
            if (e.contains("structure")) {
                exp["structure"] = e["structure"];
                got["structure"] = G.label();
            }
            out.push_back(check("class group of " + std::to_string(D), "worked example", exp, got));
        }
        return out;
    });
    tasks.push_back([o, &ref] {
        std::int64_t ceiling = ref["ceiling"];
        return std::vector<Check>{check("no omissions below " + std::to_string(ceiling),
                                        "exhaustive h(D) for |D| up to the ceiling",
                                        Ints{}, catalog_omissions(*o.catalog, ceiling))};
    });
    return tasks;
}

// ---------------------------------------------------------------- prelists

std::vector<Task> prelist_tasks(ReproduceOptions const & o, std::set<std::string> const * only = nullptr)
{
    std::vector<Task> tasks;
    for (auto const & row : reference_data()["prelists"]) {
        if (only && !only->count(row["form"].get<std::string>()))
            continue;
        tasks.push_back([o, &row] {
            TernaryForm f = parse_form(row["form"].get<std::string>());
            PrelistResult r = compute_prelist(*find_config(f), *o.catalog);
            std::vector<Check> out{check("prelist " + format_form(f), row["anchor"], row["values"], r.values)};
            if (row.contains("spurious")) {
                // Every quoted spurious value must be flagged; the cascade may flag more.
                Ints quoted = row["spurious"], flagged;
                for (std::int64_t n : quoted)
                    if (std::find(r.spurious.begin(), r.spurious.end(), n) != r.spurious.end())
                        flagged.push_back(n);
                out.push_back(check("spurious " + format_form(f) + " flagged",
                                    "bound admits but the count exceeds |Aut|", quoted, flagged));
                Json extra = Json::object();
                for (std::int64_t n : r.spurious)
                    extra[std::to_string(n)] = r.counts.at(n);
                out.push_back(predicate("spurious " + format_form(f) + " exceed |Aut|",
                                        "all flagged values have R > |Aut|",
                                        std::all_of(r.spurious.begin(), r.spurious.end(),
                                                    [&](std::int64_t n) { return r.counts.at(n) > r.aut_order; }),
                                        extra));
            }
            return out;
        });
    }
    if (only)
        return tasks;
    tasks.push_back([o] {
        PrelistResult sos = compute_prelist(*find_config(sum3), *o.catalog);
        std::vector<Check> out;
        for (auto const & row : reference_data()["derived_candidates"]) {
            TernaryForm f = parse_form(row["form"].get<std::string>());
            bool odd = row["parity"] == "odd";
            Ints got;
            for (std::int64_t n : derived_candidates(f, sos))
                if ((n % 2 == 1) == odd)
                    got.push_back(n);
            out.push_back(check("derived " + row["parity"].get<std::string>() + " candidates "
                                    + format_form(f),
                                row["anchor"], row["values"], got));
        }
        return out;
    });
    return tasks;
}

// ---------------------------------------------------------------- unique lists

nlohmann::json const * unique_reference(TernaryForm const & f)
{
    for (auto const & row : reference_data()["unique"])
        if (parse_form(row["form"].get<std::string>()) == f)
            return &row;
    return nullptr;
}

std::vector<Check> unique_checks(UniqueSpec const & spec, ReproduceOptions const & o)
{
    UniqueResult r = compute_unique(spec, *o.catalog, o.scan_bound);
    std::string tag = format_form(spec.form);
    std::vector<Check> out;
    nlohmann::json const * ref = unique_reference(spec.form);
    if (ref)
        out.push_back(check("unique " + tag, "integers represented in essentially one way",
                            (*ref)["values"], r.base));
    out.push_back(predicate("unique " + tag + " agrees with a scan to " + std::to_string(o.scan_bound),
                            "plain enumeration with the same base rule", r.scan_agrees, r.scan_base));
    std::set<std::int64_t> cand(r.candidates.begin(), r.candidates.end());
    Ints outside;
    for (std::int64_t u : r.unique)
        if (!cand.count(u))
            outside.push_back(u);
    out.push_back(check("unique " + tag + " within candidates", "unique lists refine prelists",
                        Ints{}, outside));
    if (!spec.family_relation.empty())
        out.push_back(check("family " + tag, "scaling identity to the scan bound plus closure of the base list",
                            "identity-backed", r.family_status()));
    return out;
}

std::vector<Task> unique_tasks(ReproduceOptions const & o, std::vector<TernaryForm> const & forms)
{
    std::vector<Task> tasks;
    for (auto const & f : forms) {
        UniqueSpec const * spec = find_unique_spec(f);
        if (!spec)
            throw PreconditionError("no unique-list target for " + format_form(f));
        tasks.push_back([o, spec] { return unique_checks(*spec, o); });
    }
    return tasks;
}

std::vector<TernaryForm> all_unique_forms()
{
    std::vector<TernaryForm> out;
    for (auto const & s : unique_specs())
        if (s.source != CandidateSource::scan)
            out.push_back(s.form);
    return out;
}

// ---------------------------------------------------------------- outlook

std::vector<Task> outlook_tasks(ReproduceOptions const & o)
{
    std::vector<Task> tasks;
    tasks.push_back([o] {
        std::vector<ThetaRelation> rels;
        for (auto const & r : builtin_catalog())
            if (r.name.rfind("133101-", 0) == 0 || r.name.rfind("genus-mates", 0) == 0)
                rels.push_back(r);
        return verify_relations(rels, o.identity_bound);
    });
    tasks.push_back([o] {
        auto const & ref = reference_data()["outlook"];
        TernaryForm f = parse_form(ref["form"].get<std::string>());
        TernaryForm mate = parse_form(ref["mate"].get<std::string>());
        UniqueResult r = scan_unique(f, ref["scan"].get<std::int64_t>(), false);
        return std::vector<Check>{
            check("|Aut" + format_form(mate) + "|", "genus mate automorph order", ref["mate_aut"],
                  automorph_group(mate).order()),
            check("unique " + format_form(f) + " to " + std::to_string(ref["scan"].get<std::int64_t>()),
                  "only n = 1 has one orbit", ref["unique"], r.unique)};
    });
    return tasks;
}

// ---------------------------------------------------------------- properties

std::vector<TernaryForm> property_forms()
{
    std::vector<TernaryForm> out;
    for (auto const & row : reference_data()["automorphs"]["orders"])
        out.push_back(parse_form(row["form"].get<std::string>()));
    return out;
}

Json group_axiom_failures(AutomorphGroup const & G)
{
    Json bad = Json::array();
    GramMatrix g = gram_matrix(G.form);
    for (auto const & x : G.elements) {
        std::int64_t det = determinant(x.m);
        if (det != 1 && det != -1)
            bad.push_back("determinant");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::int64_t s = 0;
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        s += x.m[k][i] * g[k][l] * x.m[l][j];
                if (s != g[i][j]) {
                    bad.push_back("not an automorph");
                    i = 3;
                    break;
                }
            }
        bool has_inverse = false;
        for (auto const & y : G.elements) {
            if (!G.contains(x * y))
                bad.push_back("not closed");
            has_inverse |= (x * y).m == identity_automorph().m;
        }
        if (!has_inverse)
            bad.push_back("missing inverse");
    }
    if (!G.contains(identity_automorph()))
        bad.push_back("missing identity");
    return bad;
}

Json class_group_failures(ClassGroup const & G)
{
    Json bad = Json::array();
    std::size_t h = G.representatives.size();
    std::int64_t prod = 1;
    for (auto d : G.structure)
        prod *= d;
    if (prod != G.order() || G.order() != class_number(G.D))
        bad.push_back("order");
    for (std::size_t i = 0; i < h; ++i) {
        if (G.table[G.identity][i] != i)
            bad.push_back("identity");
        bool inv = false;
        for (std::size_t j = 0; j < h; ++j) {
            if (G.table[i][j] != G.table[j][i])
                bad.push_back("commutativity");
            inv |= G.table[i][j] == G.identity;
            for (std::size_t k = 0; k < h; ++k)
                if (G.table[G.table[i][j]][k] != G.table[i][G.table[j][k]]) {
                    bad.push_back("associativity");
                    k = h;
                }
        }
        if (!inv)
            bad.push_back("inverse");
    }
    return bad;
}

BinaryForm transform(BinaryForm g, std::int64_t t, bool lower)
{
    if (!lower)
        return {g.A, g.B + 2 * g.A * t, g.A * t * t + g.B * t + g.C};
    return {g.A + g.B * t + g.C * t * t, g.B + 2 * g.C * t, g.C};
}

std::vector<Task> property_tasks(ReproduceOptions const & o)
{
    std::vector<Task> tasks;
    tasks.push_back([] {
        std::vector<Check> out;
        for (auto const & f : property_forms()) {
            AutomorphGroup G = automorph_group(f);
            Json bad = group_axiom_failures(G);
            out.push_back(check("group axioms Aut" + format_form(f), "automorphs form a group",
                                Json::array(), bad));
            Json div = Json::array();
            QSeries theta = theta_coefficients(f, 200);
            for (std::int64_t n = 1; n <= 200; ++n) {
                if (theta[n] == 0)
                    continue;
                OrbitPartition P = orbit_partition(G, n);
                std::int64_t total = 0;
                for (auto const & orb : P.orbits) {
                    total += static_cast<std::int64_t>(orb.size());
                    std::int64_t stab = stabilizer_order(G, orb.front());
                    if (static_cast<std::int64_t>(G.order()) % static_cast<std::int64_t>(orb.size()) != 0
                        || stab * static_cast<std::int64_t>(orb.size()) != static_cast<std::int64_t>(G.order()))
                        div.push_back(n);
                }
                if (total != theta[n])
                    div.push_back(n);
            }
            out.push_back(check("orbit sizes divide |Aut" + format_form(f) + "|, n <= 200",
                                "orbit-stabilizer", Json::array(), div));
        }
        return out;
    });
    tasks.push_back([o] {
        Json bad = Json::array();
        for (auto const & e : o.catalog->entries) {
            Json b = class_group_failures(class_group(e.D));
            if (!b.empty())
                bad.push_back({{"D", e.D}, {"failures", b}});
        }
        return std::vector<Check>{check("class group axioms for the catalog",
                                        "composition table is an abelian group", Json::array(), bad)};
    });
    tasks.push_back([] {
        Json bad = Json::array();
        for (std::int64_t D = -3; D >= -2000; --D) {
            if (mod<std::int64_t>(D, 4) > 1)
                continue;
            auto forms = reduced_forms(D);
            for (auto const & g1 : forms)
                for (auto const & g2 : forms) {
                    if (!g1.is_primitive() || !g2.is_primitive())
                        continue;
                    BinaryForm ref = reduce(compose(g1, g2));
                    for (std::int64_t t : {1, -2, 3}) {
                        BinaryForm h1 = transform(transform(g1, t, false), -t + 1, true);
                        BinaryForm h2 = transform(transform(g2, 2 * t, true), t, false);
                        if (reduce(compose(h1, h2)) != ref && bad.size() < 10)
                            bad.push_back({{"D", D}, {"g1", {g1.A, g1.B, g1.C}}, {"g2", {g2.A, g2.B, g2.C}}});
                    }
                }
        }
        return std::vector<Check>{check("composition respects equivalence, |D| <= 2000",
                                        "class composition is well defined", Json::array(), bad)};
    });
    tasks.push_back([] {
        Json bad = Json::array();
        for (std::int64_t D = -3; D >= -10000; --D) {
            if (mod<std::int64_t>(D, 4) > 1)
                continue;
            FundamentalDecomposition fd = fundamental_decomposition(D);
            if (class_number_via_conductor(fd.d, fd.conductor) != class_number(D) && bad.size() < 10)
                bad.push_back(D);
        }
        return std::vector<Check>{check("conductor formula, |D| <= 10000",
                                        "h(d f^2) from h(d)", Json::array(), bad)};
    });
    tasks.push_back([] {
        Json bad = Json::array();
        for (std::int64_t n = 1; n <= 500; ++n) {
            mpq_class base = p_correction(n, 1);
            for (std::int64_t delta = 4; delta <= 4096; delta *= 4)
                if (p_correction(n, delta) != base && bad.size() < 10)
                    bad.push_back({{"n", n}, {"delta", delta}});
        }
        return std::vector<Check>{check("P(n, 4^k) = P(n, 1), n <= 500",
                                        "powers of 4 leave the correction factor unchanged",
                                        Json::array(), bad)};
    });
    return tasks;
}

// ---------------------------------------------------------------- dispatch

std::vector<Task> tasks_for(std::string const & target, ReproduceOptions const & o)
{
    if (target == "bands")
        return band_tasks(o);
    if (target == "automorphs")
        return automorph_tasks(o);
    if (target == "siegel")
        return siegel_tasks(o);
    if (target == "densities")
        return density_tasks(o);
    if (target == "identities")
        return identity_tasks(o);
    if (target == "class-groups")
        return class_group_tasks(o);
    if (target == "prelists")
        return prelist_tasks(o);
    if (target == "unique")
        return unique_tasks(o, all_unique_forms());
    if (target == "kaplansky") {
        std::set<std::string> forms{"1,3,3,0,0,0", "1,2,3,0,0,0"};
        auto t = prelist_tasks(o, &forms);
        auto u = unique_tasks(o, {{1, 3, 3, 0, 0, 0}, {1, 1, 3, 0, 0, 0}, {1, 2, 3, 0, 0, 0}});
        t.insert(t.end(), u.begin(), u.end());
        return t;
    }
    if (target == "outlook")
        return outlook_tasks(o);
    if (target == "properties")
        return property_tasks(o);
    if (target.rfind("unique:", 0) == 0)
        return unique_tasks(o, {parse_form(target.substr(7))});
    if (target == "all") {
        std::vector<Task> all;
        for (auto const & t : reproduction_targets())
            if (t != "all") {
                auto part = tasks_for(t, o);
                all.insert(all.end(), part.begin(), part.end());
            }
        return all;
    }
    throw PreconditionError("unknown reproduction target '" + target + "'");
}

}  // namespace

std::vector<std::string> const & reproduction_targets()
{
    static std::vector<std::string> const targets = {
        "bands",    "automorphs", "siegel",  "densities",  "identities", "class-groups",
        "prelists", "unique",     "kaplansky", "outlook", "properties", "all"};
    return targets;
}

ReproductionReport reproduce(std::string const & target, ReproduceOptions const & options)
{
    auto start = std::chrono::steady_clock::now();
    ReproduceOptions o = options;
    if (!o.catalog)
        o.catalog = &default_catalog();
    ReproductionReport report;
    report.target = target;
    report.checks = run_parallel(tasks_for(target, o));
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace terqf
