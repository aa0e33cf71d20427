#ifndef TERQF_ARITH_HPP
#define TERQF_ARITH_HPP

// Small exact integer helpers shared by every module.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace terqf {

using i128 = __int128;

/// floor(sqrt(x)) for x >= 0.
std::int64_t isqrt(std::int64_t x);
i128 isqrt(i128 x);
bool is_square(std::int64_t x);

/// Division rounding toward -infinity.
template <typename T>
constexpr T floor_div(T a, T b)
{
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// Non-negative residue.
template <typename T>
constexpr T mod(T a, T m)
{
    T r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Extended gcd: returns g = gcd(a,b) >= 0 and sets x, y with a*x + b*y = g.
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t & x,
                  std::int64_t & y);

bool is_prime(std::int64_t n);

/// Trial-division factorization of |n|, n != 0: (prime, exponent) pairs,
/// primes increasing.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_squarefree(std::int64_t n);

/// p-adic valuation; n != 0.
int valuation(std::int64_t n, std::int64_t p);

std::int64_t ipow(std::int64_t base, int exp);

/// p^e as an exact rational, e of either sign.
mpq_class rational_pow(std::int64_t p, int e);

/// Kronecker symbol (a/n) for all integers a, n.
int kronecker(std::int64_t a, std::int64_t n);

/// Primes p <= bound by sieve.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Exact conversion; throws if the rational is not an integer.
std::int64_t to_integer(mpq_class const & q);

}  // namespace terqf

#endif
