#include "doctest.h"
#include "oracle.hpp"
#include "terqf/binaryqf.hpp"
#include "terqf/errors.hpp"

using namespace terqf;

TEST_CASE("class numbers against a naive count")
{
    for (std::int64_t D = -3; D >= -3000; --D) {
        if (D % 4 != 0 && D % 4 != -3)
            continue;
        CHECK(class_number(D) == oracle::class_number(D));
    }
    CHECK_THROWS_AS(class_number(-5), PreconditionError);
    CHECK_THROWS_AS(class_number(8), PreconditionError);
}

TEST_CASE("reduction keeps discriminant and yields reduced forms")
{
    for (std::int64_t A = 1; A < 20; ++A)
        for (std::int64_t B = -25; B < 25; ++B)
            for (std::int64_t C = 1; C < 20; ++C) {
                BinaryForm g{A, B, C};
                if (g.discriminant() >= 0)
                    continue;
                auto r = reduce(g);
                CHECK(r.is_reduced());
                CHECK(r.discriminant() == g.discriminant());
            }
}

TEST_CASE("composition is a well-defined abelian group law")
{
    for (std::int64_t D : {-23, -56, -84, -420, -1155, -3315, -5460}) {
        auto G = class_group(D);
        CHECK(G.order() == class_number(D));
        auto e = principal_form(D);
        CHECK(G.representatives[G.identity] == reduce(e));
        std::int64_t prod = 1;
        for (auto d : G.structure)
            prod *= d;
        CHECK(prod == G.order());
        for (auto const & x : G.representatives) {
            CHECK(compose(x, inverse(x)) == reduce(e));
            for (auto const & y : G.representatives) {
                CHECK(compose(x, y) == compose(y, x));
                // well-defined on classes: an equivalent non-reduced input
                BinaryForm x2{x.A, x.B + 2 * x.A, x.A + x.B + x.C};
                CHECK(compose(x2, y) == compose(x, y));
                for (auto const & z : G.representatives)
                    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
            }
        }
    }
}

TEST_CASE("structure labels")
{
    CHECK(structure_label({}) == "Z1");
    CHECK(structure_label({2, 4}) == "Z2xZ4");
    CHECK(class_group(-420).label() == "Z2xZ2xZ2");
    CHECK(class_group(-23).label() == "Z3");
    CHECK(class_group(-4).label() == "Z1");
}

TEST_CASE("conductor formula")
{
    for (std::int64_t D = -3; D >= -10000; --D) {
        if (D % 4 != 0 && D % 4 != -3)
            continue;
        auto fd = fundamental_decomposition(D);
        CHECK(fd.d * fd.conductor * fd.conductor == D);
        CHECK(is_fundamental_discriminant(fd.d));
        CHECK(class_number_via_conductor(fd.d, fd.conductor) == class_number(D));
    }
    CHECK(unit_count(-3) == 6);
    CHECK(unit_count(-4) == 4);
    CHECK(unit_count(-12) == 2);
}

TEST_CASE("n decomposition")
{
    auto dec = decompose_n(16 * 3 * 25);
    CHECK(dec.four_power == 2);
    CHECK(dec.squarefree == 3);
    CHECK(dec.odd_square_root == 5);
    CHECK(dec.four_free() == 75);
}

TEST_CASE("catalog for h <= 2 matches a direct scan")
{
    auto cat = catalog_h_le(2);
    std::vector<std::int64_t> direct;
    for (std::int64_t D = -3; D >= -2000; --D)
        if ((D % 4 == 0 || D % 4 == -3) && class_number(D) <= 2)
            direct.push_back(-D);
    std::vector<std::int64_t> listed;
    for (auto const & e : cat.entries)
        if (-e.D <= 2000)
            listed.push_back(-e.D);
    CHECK(listed == direct);
    CHECK(catalog_omissions(cat, 5000).empty());
    auto round = catalog_from_json(catalog_to_json(cat));
    CHECK(round.entries.size() == cat.entries.size());
    CHECK(cat.find(-4) != nullptr);
    CHECK(cat.find(-23) == nullptr);
}
