#include <set>

#include "doctest.h"
#include "terqf/errors.hpp"
#include "terqf/identities.hpp"

using namespace terqf;

TEST_CASE("catalog is large, unique-named and holds")
{
    auto cat = builtin_catalog();
    CHECK(cat.size() >= 30);
    std::set<std::string> names;
    SeriesCache cache;
    for (auto const & rel : cat) {
        CHECK(names.insert(rel.name).second);
        CHECK_FALSE(rel.anchor.empty());
        auto v = verify_relation(rel, 200, cache);
        INFO(rel.name);
        CHECK(v.holds);
        CHECK(v.checked_to == 200);
    }
}

TEST_CASE("a false relation is rejected at its first failure")
{
    ThetaRelation bad;
    bad.name = "wrong";
    bad.anchor = "R(1,1,1; n) = R(1,1,2; n)";
    bad.lhs = {1, SeriesSource::theta({1, 1, 1, 0, 0, 0}), 1, 0};
    bad.rhs = {1, SeriesSource::theta({1, 1, 2, 0, 0, 0}), 1, 0};
    auto v = verify_relation(bad, 50);
    CHECK_FALSE(v.holds);
    REQUIRE(v.index.has_value());
    CHECK(*v.index == 1);
    CHECK(v.lhs_value == 6);
    CHECK(v.rhs_value == 4);
}

TEST_CASE("scaling relation for three squares")
{
    ThetaRelation rel;
    rel.name = "scale";
    rel.lhs = {1, SeriesSource::theta({1, 1, 1, 0, 0, 0}), 4, 0};
    rel.rhs = {1, SeriesSource::theta({1, 1, 1, 0, 0, 0}), 1, 0};
    CHECK(verify_relation(rel, 300).holds);
}

TEST_CASE("congruence theta and combination sources")
{
    auto odd = SeriesSource::congruence_theta(
        {{1, 1, 1, 0, 0, 0}}, 2,
        residue_classes(2, [](auto x, auto, auto) { return x == 1; }));
    auto even = SeriesSource::congruence_theta(
        {{1, 1, 1, 0, 0, 0}}, 2,
        residue_classes(2, [](auto x, auto, auto) { return x == 0; }));
    auto both = SeriesSource::sum({{1, odd}, {1, even}});
    CHECK(both.series(100) == SeriesSource::theta({1, 1, 1, 0, 0, 0}).series(100));
    CHECK(odd.key() != even.key());
}

TEST_CASE("truncated inputs are refused")
{
    SeriesTerm a{1, SeriesSource::theta({1, 1, 1, 0, 0, 0}), 4, 0};
    SeriesTerm b{1, SeriesSource::theta({1, 1, 1, 0, 0, 0}), 1, 0};
    auto sa = a.source.series(40);
    auto sb = b.source.series(40);
    CHECK_THROWS_AS(compare_terms(a, sa, b, sb, 40), PreconditionError);
}
