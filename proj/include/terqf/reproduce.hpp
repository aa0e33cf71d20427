#ifndef TERQF_REPRODUCE_HPP
#define TERQF_REPRODUCE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "terqf/binaryqf.hpp"

namespace terqf {

extern const std::string_view reference_json;

/// Parsed copy of the embedded expected data.
nlohmann::json const & reference_data();

/// Catalog with h <= 8, built on first use.
ClassNumberCatalog const & default_catalog();

struct Check
{
    std::string name;
    std::string anchor;
    nlohmann::ordered_json expected;
    nlohmann::ordered_json computed;
    bool pass = false;
};

struct ReproductionReport
{
    std::string target;
    std::vector<Check> checks;
    double runtime_seconds = 0;

    bool pass() const;
    /// Runtime is left out unless asked for, keeping output byte-stable.
    nlohmann::ordered_json to_json(bool with_runtime = false) const;
    /// One line per failing check with expected vs computed.
    std::string diff() const;
};

struct ReproduceOptions
{
    ClassNumberCatalog const * catalog = nullptr;
    std::int64_t siegel_bound = 500;
    std::int64_t identity_bound = 500;
    std::int64_t scan_bound = 5000;
    std::int64_t catalog_ceiling = 24300;
};

/// bands, automorphs, siegel, densities, identities, class-groups, prelists,
/// unique, kaplansky, outlook, properties, all; plus unique:<form>.
std::vector<std::string> const & reproduction_targets();

/// Throws PreconditionError on an unknown target.
ReproductionReport reproduce(std::string const & target, ReproduceOptions const & options = {});

}  // namespace terqf

#endif
