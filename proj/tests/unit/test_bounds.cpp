#include "doctest.h"
#include "terqf/automorphs.hpp"
#include "terqf/configs.hpp"
#include "terqf/errors.hpp"

using namespace terqf;

TEST_CASE("every shipped case table is total and unambiguous")
{
    for (auto const & cfg : shipped_configs()) {
        if (cfg.transfer)
            continue;
        for (std::int64_t n = 1; n <= 4000; ++n) {
            if (cfg.odd_only && n % 2 == 0)
                continue;
            auto s = split_argument(cfg, n);
            CHECK_NOTHROW(case_for(cfg, s.a, s.v));
        }
    }
}

TEST_CASE("lower bounds are sound")
{
    for (auto const & cfg : shipped_configs()) {
        INFO(format_form(cfg.form));
        CHECK(automorph_group(cfg.form).order() == static_cast<std::size_t>(cfg.aut_order));
        for (std::int64_t n = 1; n <= 500; ++n) {
            if (cfg.odd_only && n % 2 == 0)
                continue;
            auto lb = lower_bound_count(cfg.form, n, cfg);
            std::int64_t r = representation_count(cfg.form, n);
            INFO(n);
            CHECK(lb.value <= r);
            CHECK(lb.density_zero == (r == 0));
        }
    }
}

TEST_CASE("config guards")
{
    auto const & cfgs = shipped_configs();
    REQUIRE(!cfgs.empty());
    CHECK(find_config({1, 1, 1, 0, 0, 0}) != nullptr);
    CHECK(find_config({1, 1, 5, 0, 0, 0}) == nullptr);
    auto const * odd = find_config({1, 2, 3, 0, 0, 0});
    REQUIRE(odd != nullptr);
    CHECK_THROWS_AS(split_argument(*odd, 4), PreconditionError);
    CHECK_THROWS_AS(lower_bound_count({1, 1, 5, 0, 0, 0}, 3, cfgs.front()), PreconditionError);
    auto j = config_to_json(cfgs.front());
    CHECK(j.contains("form"));
}
