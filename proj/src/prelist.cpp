#include "terqf/prelist.hpp"

#include <algorithm>
#include <set>

#include "terqf/arith.hpp"
#include "terqf/automorphs.hpp"
#include "terqf/configs.hpp"
#include "terqf/errors.hpp"
#include "terqf/identities.hpp"

namespace terqf {

namespace {

constexpr std::int64_t candidate_ceiling = 1'000'000'000'000'000;  // 1e15
constexpr int max_exponent = 60;

TernaryForm const sum3{1, 1, 1, 0, 0, 0};

std::vector<std::int64_t> sorted_unique(std::set<std::int64_t> const & s)
{
    return {s.begin(), s.end()};
}

bool free_of(std::int64_t x, std::int64_t period)
{
    return period <= 1 || x % period != 0;
}

/// Walks a over [a_min, a_max] while the coefficient stays <= |Aut|, calling
/// visit(a, n) with n = base^a * v.
template <typename Visit>
void walk_exponents(PrelistConfig const & config, BoundCase const & c, std::int64_t v,
                    Visit && visit)
{
    mpq_class previous = c.coefficient(c.a_min, config.coef_base);
    std::int64_t n = v;
    for (int i = 0; i < c.a_min; ++i) {
        if (n > candidate_ceiling / config.split_base)
            return;
        n *= config.split_base;
    }
    for (int a = c.a_min; a <= max_exponent; ++a) {
        if (c.a_max >= 0 && a > c.a_max)
            return;
        mpq_class coef = c.coefficient(a, config.coef_base);
        if (coef < previous)
            throw InconsistencyError("coefficient of case '" + c.label
                                     + "' decreases in a; generation would be incomplete");
        previous = coef;
        if (coef > config.aut_order)
            return;
        visit(a, n, coef);
        if (n > candidate_ceiling / config.split_base)
            return;
        n *= config.split_base;
    }
}

PrelistResult filter_exact(TernaryForm const & form, std::int64_t aut,
                           std::set<std::int64_t> const & candidates)
{
    PrelistResult r;
    r.form = form;
    r.aut_order = aut;
    r.candidates = sorted_unique(candidates);
    for (std::int64_t n : r.candidates) {
        std::int64_t R = representation_count(form, n);
        r.counts[n] = R;
        if (R == 0)
            throw InconsistencyError("bound admits n = " + std::to_string(n)
                                     + " but the form does not represent it");
        (R <= aut ? r.values : r.spurious).push_back(n);
    }
    return r;
}

PrelistResult transferred_prelist(PrelistConfig const & config,
                                  ClassNumberCatalog const & catalog)
{
    std::int64_t t = config.transfer_scale;
    if (config.strip_period != t * t || config.transfer->strip_period != t * t)
        throw PreconditionError("transfer needs strip period equal to the squared scale");
    PrelistResult source = compute_prelist(*config.transfer, catalog);
    // R(n) = R_source(t n); t n is period-free up to one factor t^2.
    std::set<std::int64_t> mapped;
    for (std::int64_t s : source.candidates)
        mapped.insert(s % t == 0 ? s / t : s * t);
    PrelistResult r = filter_exact(config.form, config.aut_order, mapped);
    for (std::int64_t n : r.candidates) {
        std::int64_t s = n * t;
        if (s % (t * t) == 0)
            s /= t * t;
        if (source.counts.at(s) != r.counts.at(n))
            throw InconsistencyError("transfer identity fails at n = " + std::to_string(n));
    }
    return r;
}

}  // namespace

nlohmann::ordered_json PrelistResult::to_json() const
{
    nlohmann::ordered_json j;
    j["form"] = format_form(form);
    j["aut_order"] = aut_order;
    j["prelist"] = values;
    j["spurious"] = spurious;
    j["candidates"] = candidates;
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (auto const & [n, R] : counts)
        c[std::to_string(n)] = R;
    j["counts"] = c;
    return j;
}

void check_catalog_sufficient(PrelistConfig const & config, ClassNumberCatalog const & catalog)
{
    if (config.transfer) {
        check_catalog_sufficient(*config.transfer, catalog);
        return;
    }
    for (auto const & c : config.cases) {
        if (c.kind != BoundKind::class_number)
            continue;
        mpq_class coef = c.coefficient(c.a_min, config.coef_base);
        if (coef <= 0)
            throw InconsistencyError("case '" + c.label + "' has a non-positive coefficient");
        if (mpq_class(config.aut_order) / coef > catalog.bound)
            throw InconsistencyError("case '" + c.label + "' needs class numbers above "
                                     + std::to_string(catalog.bound));
    }
}

PrelistResult compute_prelist(PrelistConfig const & config, ClassNumberCatalog const & catalog)
{
    if (config.transfer)
        return transferred_prelist(config, catalog);
    check_catalog_sufficient(config, catalog);

    std::set<std::int64_t> candidates;
    for (auto const & c : config.cases) {
        switch (c.kind) {
        case BoundKind::zero:
            break;
        case BoundKind::constant:
            if (c.v_equals == 0)
                throw InconsistencyError("constant case '" + c.label + "' needs a fixed v");
            walk_exponents(config, c, c.v_equals, [&](int a, std::int64_t n, mpq_class const &) {
                if (&case_for(config, a, c.v_equals) == &c)
                    candidates.insert(n);
            });
            break;
        case BoundKind::class_number:
            for (auto const & e : catalog.entries) {
                std::int64_t scaled = -e.D * c.disc_den;
                if (scaled % c.disc_num != 0)
                    continue;
                std::int64_t x = scaled / c.disc_num;
                if (c.variable == TemplateVariable::n) {
                    if ((config.odd_only && x % 2 == 0) || !free_of(x, config.strip_period))
                        continue;
                    SplitArgument s = split_argument(config, x);
                    if (&case_for(config, s.a, s.v) == &c
                        && c.coefficient(s.a, config.coef_base) * e.h <= config.aut_order)
                        candidates.insert(x);
                    continue;
                }
                std::int64_t v = x;
                if (v % config.split_base == 0 || !free_of(v, config.strip_period)
                    || (config.odd_only && v % 2 == 0))
                    continue;
                walk_exponents(config, c, v, [&](int a, std::int64_t n, mpq_class const & coef) {
                    if (&case_for(config, a, v) == &c && coef * e.h <= config.aut_order)
                        candidates.insert(n);
                });
            }
            break;
        }
    }
    return filter_exact(config.form, config.aut_order, candidates);
}

std::vector<std::int64_t> base_values(std::vector<std::int64_t> const & unique,
                                      std::int64_t period)
{
    std::set<std::int64_t> U(unique.begin(), unique.end());
    std::vector<std::int64_t> out;
    for (std::int64_t u : U)
        if (period <= 1 || u % period != 0 || !U.count(u / period))
            out.push_back(u);
    return out;
}

std::vector<UniqueSpec> const & unique_specs()
{
    static std::vector<UniqueSpec> const specs = {
        {{1, 1, 1, 0, 0, 0}, CandidateSource::prelist, 4, "111-scale4", false},
        {{1, 1, 1, 1, 1, 1}, CandidateSource::derived, 4, "111111-scale4", false},
        {{3, 3, 3, -2, 2, 2}, CandidateSource::derived, 4, "333-scale4", false},
        {{1, 3, 3, 2, 0, 0}, CandidateSource::derived, 1, "", false},
        {{5, 13, 20, -12, 4, 2}, CandidateSource::prelist, 1, "", false},
        {{7, 15, 23, 10, 2, 6}, CandidateSource::prelist, 1, "", false},
        {{1, 3, 3, 0, 0, 0}, CandidateSource::prelist, 9, "133-scale9", false},
        {{1, 1, 3, 0, 0, 0}, CandidateSource::prelist, 9, "113-scale9", false},
        {{1, 2, 3, 0, 0, 0}, CandidateSource::prelist, 1, "", true},
        {{1, 3, 3, 1, 0, 1}, CandidateSource::scan, 1, "", false},
    };
    return specs;
}

UniqueSpec const * find_unique_spec(TernaryForm const & form)
{
    for (auto const & s : unique_specs())
        if (s.form == form)
            return &s;
    return nullptr;
}

std::vector<std::int64_t> derived_candidates(TernaryForm const & form,
                                             PrelistResult const & sos)
{
    if (sos.form != sum3)
        throw PreconditionError("derived candidates need the three-squares prelist");
    std::set<std::int64_t> out;
    auto const & P = sos.values;
    if (form == TernaryForm{1, 1, 1, 1, 1, 1}) {
        // R(2n) = S(n), R(2n+1) = S(4n+2)
        for (std::int64_t p : P) {
            out.insert(2 * p);
            if (p % 4 == 2)
                out.insert(p / 2);
        }
    }
    else if (form == TernaryForm{3, 3, 3, -2, 2, 2}) {
        // R(4n) = S(n), R(8n+3) = S(8n+3), zero on other classes not divisible by 4
        for (std::int64_t p : P) {
            out.insert(4 * p);
            if (p % 8 == 3)
                out.insert(p);
        }
    }
    else if (form == TernaryForm{1, 3, 3, 2, 0, 0}) {
        // R(8n) = S(n), R(8n+4) = S(4n+2), R(4n+2) = 0, 6 R(2n+1) = S(4n+2), |Aut| = 8
        for (std::int64_t p : P) {
            std::int64_t s = sos.counts.at(p);
            if (s <= 8)
                out.insert(8 * p);
            if (p % 4 == 2) {
                if (s <= 8)
                    out.insert(2 * p);
                out.insert(p / 2);
            }
        }
    }
    else
        throw PreconditionError("no derivation for form " + format_form(form));
    return {out.begin(), out.end()};
}

std::string UniqueResult::family_status() const
{
    if (family_relation.empty())
        return "none";
    return family_identity_holds && closure_holds ? "identity-backed" : "unverified";
}

nlohmann::ordered_json UniqueResult::to_json() const
{
    nlohmann::ordered_json j;
    j["form"] = format_form(form);
    j["aut_order"] = aut_order;
    j["source"] = source == CandidateSource::prelist   ? "prelist"
                  : source == CandidateSource::derived ? "derived"
                                                       : "scan";
    j["odd_only"] = odd_only;
    j["candidates"] = candidates;
    j["unique"] = unique;
    j["period"] = period;
    j["base"] = base;
    j["scan_bound"] = scan_bound;
    j["scan_base"] = scan_base;
    j["scan_agrees"] = scan_agrees;
    nlohmann::ordered_json f;
    f["status"] = family_status();
    if (!family_relation.empty()) {
        f["relation"] = family_relation;
        f["identity_verified_to"] = scan_bound;
        f["identity_holds"] = family_identity_holds;
        f["closure_holds"] = closure_holds;
        f["closure_failures"] = closure_failures;
    }
    j["family"] = f;
    return j;
}

UniqueResult scan_unique(TernaryForm const & form, std::int64_t scan_bound, bool odd_only,
                         std::int64_t period)
{
    if (scan_bound < 1)
        throw PreconditionError("scan bound must be positive");
    AutomorphGroup G = automorph_group(form);
    QSeries theta = theta_coefficients(form, scan_bound);
    UniqueResult r;
    r.form = form;
    r.aut_order = static_cast<std::int64_t>(G.order());
    r.odd_only = odd_only;
    r.period = period;
    r.scan_bound = scan_bound;
    for (std::int64_t n = 1; n <= scan_bound; ++n) {
        if (odd_only && n % 2 == 0)
            continue;
        std::int64_t R = theta[n];
        if (R == 0 || R > r.aut_order)
            continue;
        r.candidates.push_back(n);
        if (is_essentially_unique(G, n))
            r.unique.push_back(n);
    }
    r.base = base_values(r.unique, period);
    r.scan_base = r.base;
    return r;
}

UniqueResult compute_unique(UniqueSpec const & spec, ClassNumberCatalog const & catalog,
                            std::int64_t scan_bound)
{
    UniqueResult scan = scan_unique(spec.form, scan_bound, spec.odd_only, spec.period);
    if (spec.source == CandidateSource::scan)
        return scan;

    UniqueResult r;
    r.form = spec.form;
    r.source = spec.source;
    r.odd_only = spec.odd_only;
    r.period = spec.period;
    r.scan_bound = scan_bound;
    r.scan_base = scan.base;
    r.family_relation = spec.family_relation;

    AutomorphGroup G = automorph_group(spec.form);
    r.aut_order = static_cast<std::int64_t>(G.order());
    if (spec.source == CandidateSource::prelist) {
        PrelistConfig const * config = find_config(spec.form);
        if (!config)
            throw PreconditionError("no shipped config for " + format_form(spec.form));
        if (config->aut_order != r.aut_order)
            throw InconsistencyError("config automorph order disagrees with the computed group");
        r.candidates = compute_prelist(*config, catalog).values;
    }
    else {
        PrelistConfig const * sos = find_config(sum3);
        std::vector<std::int64_t> raw = derived_candidates(spec.form, compute_prelist(*sos, catalog));
        for (std::int64_t n : raw) {
            std::int64_t R = representation_count(spec.form, n);
            if (R > 0 && R <= r.aut_order)
                r.candidates.push_back(n);
        }
    }
    for (std::int64_t n : r.candidates)
        if (is_essentially_unique(G, n))
            r.unique.push_back(n);
    r.base = base_values(r.unique, spec.period);

    std::vector<std::int64_t> below;
    for (std::int64_t u : r.base)
        if (u <= scan_bound)
            below.push_back(u);
    r.scan_agrees = below == scan.base;

    if (!spec.family_relation.empty()) {
        auto rels = builtin_catalog();
        auto it = std::find_if(rels.begin(), rels.end(),
                               [&](ThetaRelation const & t) { return t.name == spec.family_relation; });
        if (it == rels.end())
            throw InconsistencyError("unknown family relation " + spec.family_relation);
        r.family_identity_holds = verify_relation(*it, scan_bound).holds;
        std::set<std::int64_t> all(scan.unique.begin(), scan.unique.end());
        for (std::int64_t u : r.base)
            if (spec.period * u <= scan_bound && !all.count(spec.period * u))
                r.closure_failures.push_back(spec.period * u);
        r.closure_holds = r.closure_failures.empty();
    }
    return r;
}

}  // namespace terqf
