#include "terqf/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "terqf/errors.hpp"

namespace terqf {

std::int64_t isqrt(std::int64_t x)
{
    if (x < 0)
        throw PreconditionError("isqrt of negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && static_cast<i128>(r) * r > x)
        --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

i128 isqrt(i128 x)
{
    if (x < 0)
        throw PreconditionError("isqrt of negative number");
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    // long double has a 64-bit mantissa; Newton steps fix the last bits.
    if (r > 0) {
        for (int i = 0; i < 4; ++i)
            r = (r + x / r) / 2;
    }
    while (r > 0 && r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

bool is_square(std::int64_t x)
{
    if (x < 0)
        return false;
    std::int64_t r = isqrt(x);
    return r * r == x;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t & x,
                  std::int64_t & y)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n == 0)
        throw PreconditionError("factorize(0)");
    n = std::llabs(n);
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(std::int64_t n)
{
    for (auto const & [p, e] : factorize(n))
        if (e > 1)
            return false;
    return true;
}

int valuation(std::int64_t n, std::int64_t p)
{
    if (n == 0)
        throw PreconditionError("valuation of 0");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t ipow(std::int64_t base, int exp)
{
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

mpq_class rational_pow(std::int64_t p, int e)
{
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
        return mpq_class(z);
    mpq_class q(mpz_class(1), z);
    q.canonicalize();
    return q;
}

int kronecker(std::int64_t a, std::int64_t n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0)
        return 0;
    int result = 1;
    // Strip the sign and the power of 2 from n.
    if (n < 0) {
        n = -n;
        if (a < 0)
            result = -result;
    }
    int v2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v2;
    }
    if (v2 % 2 == 1) {
        // (a/2) = 0 for even a (excluded above), +1 for a = +-1 mod 8, -1 for +-3
        std::int64_t r = mod<std::int64_t>(a, 8);
        if (r == 3 || r == 5)
            result = -result;
    }
    // Jacobi symbol (a/n) for odd n > 0.
    a = mod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound)
{
    std::vector<std::int64_t> primes;
    if (bound < 2)
        return primes;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return primes;
}

std::int64_t to_integer(mpq_class const & q)
{
    if (q.get_den() != 1)
        throw InconsistencyError("expected an integer, got " + q.get_str());
    if (!q.get_num().fits_slong_p())
        throw InconsistencyError("integer out of range: " + q.get_str());
    return q.get_num().get_si();
}

}  // namespace terqf
