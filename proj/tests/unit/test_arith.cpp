#include "doctest.h"
#include "terqf/arith.hpp"

using namespace terqf;

TEST_CASE("isqrt and squares")
{
    for (std::int64_t x = 0; x < 5000; ++x) {
        std::int64_t r = isqrt(x);
        CHECK(r * r <= x);
        CHECK((r + 1) * (r + 1) > x);
        CHECK(is_square(x) == (r * r == x));
    }
    CHECK(isqrt(std::int64_t{4'000'000'000'000'000'000}) == 2'000'000'000);
}

TEST_CASE("floor division and mod")
{
    CHECK(floor_div<std::int64_t>(-7, 2) == -4);
    CHECK(floor_div<std::int64_t>(7, -2) == -4);
    CHECK(mod<std::int64_t>(-7, 3) == 2);
    CHECK(mod<std::int64_t>(7, 3) == 1);
}

TEST_CASE("factorization round trip")
{
    for (std::int64_t n = 1; n < 3000; ++n) {
        std::int64_t prod = 1;
        bool sqfree = true;
        for (auto [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            CHECK(valuation(n, p) == e);
            prod *= ipow(p, e);
            if (e > 1)
                sqfree = false;
        }
        CHECK(prod == n);
        CHECK(is_squarefree(n) == sqfree);
    }
}

TEST_CASE("primes and gcd")
{
    auto ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    CHECK(ps.back() == 97);
    std::int64_t x = 0, y = 0;
    std::int64_t g = xgcd(240, 46, x, y);
    CHECK(g == 2);
    CHECK(240 * x + 46 * y == 2);
    CHECK(gcd(0, 5) == 5);
}

TEST_CASE("kronecker symbol")
{
    CHECK(kronecker(-4, 3) == -1);
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-3, 2) == -1);
    CHECK(kronecker(-7, 2) == 1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(-8, 3) == 1);
    CHECK(kronecker(6, 3) == 0);
    // multiplicativity in the top argument
    for (std::int64_t a = -30; a <= 30; ++a)
        for (std::int64_t b = -30; b <= 30; ++b)
            for (std::int64_t n : {3, 5, 7, 11, 15, 21})
                CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
}

TEST_CASE("rational powers")
{
    CHECK(rational_pow(2, 3) == 8);
    CHECK(rational_pow(3, -2) == mpq_class(1, 9));
    CHECK(to_integer(mpq_class(12)) == 12);
}
