#ifndef TERQF_PRELIST_HPP
#define TERQF_PRELIST_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "terqf/binaryqf.hpp"
#include "terqf/bounds.hpp"

namespace terqf {

struct PrelistResult
{
    TernaryForm form;
    std::int64_t aut_order = 0;
    std::vector<std::int64_t> candidates;  // lower bound <= |Aut|
    std::vector<std::int64_t> values;      // exact 0 < R <= |Aut|
    std::vector<std::int64_t> spurious;    // bound admits, exact count exceeds |Aut|
    std::map<std::int64_t, std::int64_t> counts;

    nlohmann::ordered_json to_json() const;
};

/// Throws InconsistencyError when some case would need class numbers
/// beyond the catalog's bound.
void check_catalog_sufficient(PrelistConfig const & config, ClassNumberCatalog const & catalog);

/// Period-free n with 0 < R_f(n) <= |Aut(f)|, complete given the catalog.
PrelistResult compute_prelist(PrelistConfig const & config, ClassNumberCatalog const & catalog);

/// u in U is dropped when period | u and u / period is in U.
std::vector<std::int64_t> base_values(std::vector<std::int64_t> const & unique,
                                      std::int64_t period);

enum class CandidateSource
{
    prelist,   // shipped config
    derived,   // from the three-squares prelist via reduction identities
    scan,      // plain enumeration to the scan bound
};

struct UniqueSpec
{
    TernaryForm form;
    CandidateSource source = CandidateSource::scan;
    std::int64_t period = 1;
    std::string family_relation;  // catalog relation certifying R(period n) = R(n)
    bool odd_only = false;
};

std::vector<UniqueSpec> const & unique_specs();
UniqueSpec const * find_unique_spec(TernaryForm const & form);

struct UniqueResult
{
    TernaryForm form;
    std::int64_t aut_order = 0;
    CandidateSource source = CandidateSource::scan;
    bool odd_only = false;
    std::vector<std::int64_t> candidates;
    std::vector<std::int64_t> unique;  // candidates with one automorph orbit
    std::vector<std::int64_t> base;
    std::int64_t period = 1;
    std::int64_t scan_bound = 0;
    std::vector<std::int64_t> scan_base;  // base list from plain enumeration
    bool scan_agrees = true;
    std::string family_relation;
    bool family_identity_holds = true;
    bool closure_holds = true;
    std::vector<std::int64_t> closure_failures;

    /// "identity-backed" when a family is claimed and both checks pass.
    std::string family_status() const;
    nlohmann::ordered_json to_json() const;
};

/// Candidates that a derived spec filters, built from the three-squares prelist.
std::vector<std::int64_t> derived_candidates(TernaryForm const & form,
                                             PrelistResult const & sum_of_squares);

UniqueResult compute_unique(UniqueSpec const & spec, ClassNumberCatalog const & catalog,
                            std::int64_t scan_bound = 5000);

/// Enumeration-only variant for forms without a spec.
UniqueResult scan_unique(TernaryForm const & form, std::int64_t scan_bound, bool odd_only,
                         std::int64_t period = 1);

}  // namespace terqf

#endif
