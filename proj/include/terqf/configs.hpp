#ifndef TERQF_CONFIGS_HPP
#define TERQF_CONFIGS_HPP

#include <vector>

#include "terqf/bounds.hpp"

namespace terqf {

/// Bound cascades shipped with the tool, one per configured form.
std::vector<PrelistConfig> const & shipped_configs();

/// nullptr when the form has no shipped config.
PrelistConfig const * find_config(TernaryForm const & form);

}  // namespace terqf

#endif
