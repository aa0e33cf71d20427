#include "doctest.h"
#include "terqf/arith.hpp"
#include "terqf/errors.hpp"
#include "terqf/localdensity.hpp"

using namespace terqf;

TEST_CASE("tree count agrees with a full residue scan")
{
    std::vector<TernaryForm> forms = {{1, 1, 1, 0, 0, 0}, {1, 3, 4, 3, 1, 0},
                                      {5, 13, 20, -12, 4, 2}, {1, 2, 3, 0, 0, 0}};
    for (auto const & f : forms)
        for (std::int64_t p : {2, 3})
            for (int k = 1; ipow(p, 3 * k) <= 1'000'000; ++k)
                for (std::int64_t n = 1; n <= 40; ++n)
                    CHECK(local_density_finite(f, p, n, k) == local_density_scan(f, p, n, k));
    CHECK_THROWS_AS(local_density_scan({1, 1, 1, 0, 0, 0}, 2, 1, 8), PreconditionError);
}

TEST_CASE("three squares at 2")
{
    TernaryForm f{1, 1, 1, 0, 0, 0};
    CHECK(local_density(f, 2, 1).value == mpq_class(3, 2));
    CHECK(local_density(f, 2, 2).value == mpq_class(3, 2));
    CHECK(local_density(f, 2, 3).value == 1);
    CHECK(local_density(f, 2, 7).value == 0);
    CHECK(local_density(f, 2, 28).value == 0);
    // 4n halves the density
    for (std::int64_t n : {1, 2, 3, 5, 6})
        CHECK(local_density(f, 2, 4 * n).value == local_density(f, 2, n).value / 2);
    CHECK_THROWS_AS(local_density(f, 2, 0), PreconditionError);
}

TEST_CASE("good primes: closed form equals the lifted density")
{
    TernaryForm f{1, 1, 1, 0, 0, 0};
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t n = 1; n <= 200; ++n)
            CHECK(good_prime_density(discriminant(f), p, n) == local_density(f, p, n).value);
}

TEST_CASE("L values")
{
    auto L1 = l_value(1);
    CHECK(L1.rational() == mpq_class(1, 4));
    CHECK(L1.radicand() == 1);
    for (std::int64_t m : {1, 2, 3, 5, 6, 7, 10, 11, 14}) {
        double approx = l_value(m).approx();
        CHECK(approx == doctest::Approx(l_value_partial_sum(m, 2'000'000)).epsilon(1e-4));
    }
    for (std::int64_t n : {4, 9, 12, 18, 25, 27})
        CHECK(l_value_general(n).approx()
              == doctest::Approx(l_value_partial_sum(n, 2'000'000)).epsilon(1e-4));
}

TEST_CASE("P(n, 4^k) does not depend on k")
{
    for (std::int64_t n = 1; n <= 500; ++n)
        for (int k = 1; k <= 5; ++k)
            CHECK(p_correction(n, ipow(4, k)) == p_correction(n, 4));
    CHECK(p_correction(9, 4) != 1);
    CHECK(p_correction(7, 4) == 1);
}

TEST_CASE("Siegel count for three squares")
{
    TernaryForm f{1, 1, 1, 0, 0, 0};
    for (std::int64_t n = 1; n <= 150; ++n)
        CHECK(siegel_count(f, n) == representation_count(f, n));
    auto s = siegel_assembly(f, 9);
    CHECK(s.count == 30);
}

TEST_CASE("Siegel on a non-idoneal form is caught")
{
    // one genus, two classes: the mass formula averages, so some n disagree
    TernaryForm f{1, 1, 16, 0, 0, 0};
    bool differs = false;
    for (std::int64_t n = 1; n <= 100 && !differs; ++n) {
        try {
            differs = siegel_count(f, n) != representation_count(f, n);
        } catch (InconsistencyError const &) {
            differs = true;
        }
    }
    CHECK(differs);
}

TEST_CASE("rational formatting")
{
    CHECK(rational_string(mpq_class(3, 2)) == "3/2");
    CHECK(rational_string(mpq_class(4)) == "4");
}
