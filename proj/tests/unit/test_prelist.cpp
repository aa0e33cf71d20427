#include <algorithm>

#include "doctest.h"
#include "terqf/automorphs.hpp"
#include "terqf/configs.hpp"
#include "terqf/errors.hpp"
#include "terqf/prelist.hpp"
#include "terqf/reproduce.hpp"

using namespace terqf;

TEST_CASE("three-squares prelist")
{
    auto const * cfg = find_config({1, 1, 1, 0, 0, 0});
    REQUIRE(cfg != nullptr);
    auto res = compute_prelist(*cfg, default_catalog());
    CHECK(res.values.size() == 53);
    for (std::int64_t s : {49, 75, 99})
        CHECK(std::binary_search(res.spurious.begin(), res.spurious.end(), s));
    for (auto v : res.values) {
        CHECK(res.counts.at(v) <= 48);
        CHECK(v % 4 != 0);
    }
    // completeness against plain enumeration below 2000
    for (std::int64_t n = 1; n <= 2000; ++n) {
        if (n % 4 == 0)
            continue;
        std::int64_t r = representation_count(cfg->form, n);
        bool listed = std::binary_search(res.values.begin(), res.values.end(), n);
        CHECK(listed == (r > 0 && r <= 48));
    }
}

TEST_CASE("catalog too small is refused")
{
    auto const * cfg = find_config({1, 1, 1, 0, 0, 0});
    REQUIRE(cfg != nullptr);
    auto small = catalog_h_le(1);
    CHECK_THROWS_AS(check_catalog_sufficient(*cfg, small), InconsistencyError);
}

TEST_CASE("base values")
{
    CHECK(base_values({1, 2, 3, 4, 8, 12, 6}, 4) == std::vector<std::int64_t>{1, 2, 3, 6});
}

TEST_CASE("unique list for three squares")
{
    auto const * spec = find_unique_spec({1, 1, 1, 0, 0, 0});
    REQUIRE(spec != nullptr);
    auto res = compute_unique(*spec, default_catalog(), 2000);
    CHECK(res.scan_agrees);
    CHECK(res.family_status() == "identity-backed");
    for (auto u : res.unique)
        CHECK(is_essentially_unique(spec->form, u));
}

TEST_CASE("scan-only unique list")
{
    auto res = scan_unique({1, 3, 3, 1, 0, 1}, 5000, false);
    CHECK(res.base == std::vector<std::int64_t>{1});
    CHECK(res.family_status() == "none");
}
