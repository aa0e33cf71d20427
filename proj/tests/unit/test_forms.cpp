#include "doctest.h"
#include "oracle.hpp"
#include "terqf/errors.hpp"
#include "terqf/forms.hpp"

using namespace terqf;

TEST_CASE("parse and format")
{
    auto f = parse_form("1,3,4,3,1,0");
    CHECK(f == TernaryForm{1, 3, 4, 3, 1, 0});
    CHECK(format_form(f) == "1,3,4,3,1,0");
    CHECK(parse_form("3,3,3,-2,2,2").d == -2);
    CHECK_THROWS_AS(parse_form("1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_form("1,2,3,4,5,x"), ParseError);
    CHECK_THROWS_AS(parse_form("1, 2,3,0,0,0"), ParseError);
}

TEST_CASE("discriminant and definiteness")
{
    CHECK(discriminant({1, 1, 1, 0, 0, 0}) == 4);
    CHECK(discriminant({1, 3, 4, 3, 1, 0}) == 4 * 12 - 9 - 3);
    CHECK(is_positive_definite({1, 1, 1, 0, 0, 0}));
    CHECK_FALSE(is_positive_definite({1, 1, -1, 0, 0, 0}));
    CHECK_FALSE(is_positive_definite({1, 1, 1, 0, 0, 3}));
    auto G = gram_matrix({1, 3, 4, 3, 1, 0});
    CHECK(G[0][0] == 2);
    CHECK(G[1][2] == 3);
}

TEST_CASE("representation counts match a box search")
{
    std::vector<TernaryForm> forms = {
        {1, 1, 1, 0, 0, 0}, {1, 3, 4, 3, 1, 0}, {3, 3, 3, -2, 2, 2},
        {1, 2, 3, 0, 0, 0}, {5, 13, 20, 12, 4, 2}, {1, 1, 1, 1, 1, 1}};
    for (auto const & f : forms)
        for (std::int64_t n = 0; n <= 60; ++n)
            CHECK(representation_count(f, n) == oracle::count(f, n, 9));
}

TEST_CASE("theta sweep agrees with per-n counts")
{
    TernaryForm f{1, 3, 3, 2, 0, 0};
    auto th = theta_coefficients(f, 200);
    for (std::int64_t n = 0; n <= 200; ++n)
        CHECK(th[n] == representation_count(f, n));
    CHECK(representation_count(f, -1) == 0);
}

TEST_CASE("enumerated triples are sorted solutions")
{
    TernaryForm f{1, 1, 1, 0, 0, 0};
    auto rs = enumerate_representations(f, 9);
    CHECK(rs.size() == 30);
    CHECK(std::is_sorted(rs.triples.begin(), rs.triples.end()));
    for (auto const & v : rs.triples)
        CHECK(evaluate(f, v) == 9);
}

TEST_CASE("shifted polynomial enumeration")
{
    // x^2 + x + y^2 + z^2 <= 20, against a box
    QuadraticPolynomial P{{1, 1, 1, 0, 0, 0}, 1, 0, 0, 0};
    std::int64_t fast = 0, slow = 0;
    for_each_point_up_to(P, 20, [&](Vec3 const &, std::int64_t) { ++fast; });
    for (int x = -8; x <= 8; ++x)
        for (int y = -8; y <= 8; ++y)
            for (int z = -8; z <= 8; ++z)
                if (x * x + x + y * y + z * z <= 20)
                    ++slow;
    CHECK(fast == slow);
}
