#ifndef TERQF_TEST_ORACLE_HPP
#define TERQF_TEST_ORACLE_HPP

// Deliberately naive reference computations, independent of the library.

#include <cmath>
#include <cstdint>
#include <set>
#include <tuple>

#include "terqf/forms.hpp"

namespace oracle {

inline std::int64_t q(terqf::TernaryForm const & f, std::int64_t x, std::int64_t y, std::int64_t z)
{
    return f.a * x * x + f.b * y * y + f.c * z * z + f.d * y * z + f.e * x * z + f.f * x * y;
}

/// Box search; the box half-width must cover the ellipsoid.
inline std::int64_t count(terqf::TernaryForm const & f, std::int64_t n, std::int64_t box)
{
    std::int64_t r = 0;
    for (std::int64_t x = -box; x <= box; ++x)
        for (std::int64_t y = -box; y <= box; ++y)
            for (std::int64_t z = -box; z <= box; ++z)
                if (q(f, x, y, z) == n)
                    ++r;
    return r;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Reduced primitive forms of discriminant D < 0, counted directly.
inline std::int64_t class_number(std::int64_t D)
{
    std::int64_t h = 0;
    for (std::int64_t A = 1; 3 * A * A <= -D; ++A)
        for (std::int64_t B = -A + 1; B <= A; ++B) {
            std::int64_t num = B * B - D;
            if (num % (4 * A))
                continue;
            std::int64_t C = num / (4 * A);
            if (C < A)
                continue;
            if (C == A && B < 0)
                continue;
            if (gcd(gcd(A, B), C) != 1)
                continue;
            ++h;
        }
    return h;
}

}  // namespace oracle

#endif
