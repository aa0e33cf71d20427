#include <map>
#include <set>

#include "doctest.h"
#include "terqf/automorphs.hpp"

using namespace terqf;

namespace {

void check_group_axioms(AutomorphGroup const & g)
{
    auto G = gram_matrix(g.form);
    CHECK(g.contains(identity_automorph()));
    for (auto const & x : g.elements) {
        std::int64_t det = determinant(x.m);
        CHECK((det == 1 || det == -1));
        // M^T G M = G
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::int64_t s = 0;
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        s += x.m[k][i] * G[k][l] * x.m[l][j];
                CHECK(s == G[i][j]);
            }
        bool has_inverse = false;
        for (auto const & y : g.elements) {
            CHECK(g.contains(x * y));
            if (x * y == identity_automorph())
                has_inverse = true;
        }
        CHECK(has_inverse);
    }
}

}  // namespace

TEST_CASE("known group orders")
{
    CHECK(automorph_group({1, 1, 1, 0, 0, 0}).order() == 48);
    CHECK(automorph_group({1, 1, 2, 0, 0, 0}).order() == 16);
    CHECK(automorph_group({1, 2, 3, 0, 0, 0}).order() == 8);
    CHECK(automorph_group({1, 3, 4, 3, 1, 0}).order() == 8);
    CHECK(automorph_group({1, 1, 1, 1, 1, 1}).order() == 12 * 2 * 2);
}

TEST_CASE("group axioms")
{
    for (TernaryForm f : {TernaryForm{1, 1, 1, 0, 0, 0}, TernaryForm{1, 3, 4, 3, 1, 0},
                          TernaryForm{3, 3, 3, -2, 2, 2}, TernaryForm{5, 13, 20, 12, 4, 2},
                          TernaryForm{1, 3, 3, 2, 0, 0}})
        check_group_axioms(automorph_group(f));
}

TEST_CASE("orbits partition the solutions and divide the group order")
{
    TernaryForm f{1, 3, 4, 3, 1, 0};
    auto g = automorph_group(f);
    for (std::int64_t n = 1; n <= 120; ++n) {
        auto part = orbit_partition(g, n);
        std::set<Vec3> seen;
        std::size_t total = 0;
        for (auto const & orbit : part.orbits) {
            CHECK(g.order() % orbit.size() == 0);
            CHECK(orbit.size() * stabilizer_order(g, orbit.front()) == g.order());
            for (auto const & v : orbit)
                seen.insert(v);
            total += orbit.size();
        }
        CHECK(total == seen.size());
        CHECK(static_cast<std::int64_t>(total) == representation_count(f, n));
        CHECK(essential_count(g, n) == static_cast<std::int64_t>(part.size()));
    }
}

TEST_CASE("orbits at 19 for the discriminant-36 form")
{
    auto part = orbit_partition(TernaryForm{1, 3, 4, 3, 1, 0}, 19);
    std::multiset<std::size_t> sizes;
    for (auto const & o : part.orbits)
        sizes.insert(o.size());
    CHECK(sizes == std::multiset<std::size_t>{4, 8});
}

TEST_CASE("three squares: 1, 2, 3 are essentially unique, 9 is not")
{
    TernaryForm f{1, 1, 1, 0, 0, 0};
    CHECK(is_essentially_unique(f, 1));
    CHECK(is_essentially_unique(f, 2));
    CHECK(is_essentially_unique(f, 3));
    CHECK_FALSE(is_essentially_unique(f, 9));
    CHECK_FALSE(is_essentially_unique(f, 7));
}
