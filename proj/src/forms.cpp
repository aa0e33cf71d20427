#include "terqf/forms.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "terqf/arith.hpp"
#include "terqf/errors.hpp"

namespace terqf {

GramMatrix gram_matrix(TernaryForm const & q)
{
    return {{{2 * q.a, q.f, q.e}, {q.f, 2 * q.b, q.d}, {q.e, q.d, 2 * q.c}}};
}

std::int64_t discriminant(TernaryForm const & q)
{
    return 4 * q.a * q.b * q.c + q.d * q.e * q.f - q.a * q.d * q.d
           - q.b * q.e * q.e - q.c * q.f * q.f;
}

bool is_positive_definite(TernaryForm const & q)
{
    // Minors of G: 2a, 4ab - f^2, 2*disc.
    return q.a > 0 && 4 * q.a * q.b - q.f * q.f > 0 && discriminant(q) > 0;
}

std::int64_t evaluate(TernaryForm const & q, std::int64_t x, std::int64_t y,
                      std::int64_t z)
{
    return q.a * x * x + q.b * y * y + q.c * z * z + q.d * y * z + q.e * x * z
           + q.f * x * y;
}

std::int64_t evaluate(TernaryForm const & q, Vec3 const & v)
{
    return evaluate(q, v[0], v[1], v[2]);
}

std::int64_t gram_pairing(TernaryForm const & q, Vec3 const & u, Vec3 const & v)
{
    GramMatrix G = gram_matrix(q);
    std::int64_t s = 0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            s += u[r] * G[r][c] * v[c];
    return s;
}

TernaryForm parse_form(std::string_view text)
{
    std::array<std::int64_t, 6> vals{};
    std::size_t pos = 0;
    for (int idx = 0; idx < 6; ++idx) {
        if (idx > 0) {
            if (pos >= text.size() || text[pos] != ',')
                throw ParseError("form must have six comma-separated integers: '"
                                 + std::string(text) + "'");
            ++pos;
        }
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
        }
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos,
                                         text.data() + text.size(), v);
        if (ec != std::errc() || ptr == text.data() + pos)
            throw ParseError("bad integer in form '" + std::string(text) + "'");
        pos = static_cast<std::size_t>(ptr - text.data());
        vals[static_cast<std::size_t>(idx)] = negative ? -v : v;
    }
    if (pos != text.size())
        throw ParseError("trailing characters in form '" + std::string(text) + "'");
    return {vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
}

std::string format_form(TernaryForm const & q)
{
    return std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c)
           + "," + std::to_string(q.d) + "," + std::to_string(q.e) + ","
           + std::to_string(q.f);
}

std::int64_t QuadraticPolynomial::operator()(Vec3 const & v) const
{
    return evaluate(quadratic, v) + g * v[0] + h * v[1] + i * v[2] + k;
}

namespace {

constexpr std::int64_t coefficient_limit = 1'000'000;
constexpr std::int64_t bound_limit = 1'000'000'000'000;

void check_ranges(QuadraticPolynomial const & P, std::int64_t bound)
{
    TernaryForm const & q = P.quadratic;
    if (!is_positive_definite(q))
        throw PreconditionError("form " + format_form(q) + " is not positive definite");
    for (std::int64_t c : {q.a, q.b, q.c, q.d, q.e, q.f, P.g, P.h, P.i, P.k})
        if (std::llabs(c) > coefficient_limit)
            throw PreconditionError("coefficient too large for exact enumeration");
    if (std::llabs(bound) > bound_limit)
        throw PreconditionError("bound too large for exact enumeration");
}

/// Walks the integers t where a concave quadratic (given by a callback) is
/// non-negative; vertex is the real maximiser. Concavity makes the feasible
/// integers contiguous and adjacent to floor(vertex) or floor(vertex)+1.
template <typename Feasible, typename Body>
void walk_interval(i128 vertex_floor, Feasible && feasible, Body && body)
{
    for (i128 t = vertex_floor; feasible(t); --t)
        body(t);
    for (i128 t = vertex_floor + 1; feasible(t); ++t)
        body(t);
}

/// Drives the elimination: inner(y, z, Bx, C) is called for every (y, z)
/// pair whose x-discriminant Bx^2 - 4aC is non-negative, where the remaining
/// condition on x is a x^2 + Bx x + C <= 0.
template <typename Inner>
void sweep(QuadraticPolynomial const & P, std::int64_t bound, Inner && inner)
{
    check_ranges(P, bound);
    TernaryForm const & q = P.quadratic;
    const i128 a = q.a, b = q.b, c = q.c, d = q.d, e = q.e, f = q.f;
    const i128 g = P.g, h = P.h, i = P.i;
    const i128 k = static_cast<i128>(P.k) - bound;
    const i128 delta = discriminant(q);

    const i128 alpha_y = 4 * a * b - f * f;
    const i128 p1 = 2 * f * e - 4 * a * d;
    const i128 p0 = 2 * f * g - 4 * a * h;
    const i128 q1 = 2 * e * g - 4 * a * i;
    const i128 beta_z = 2 * p1 * p0 + 4 * alpha_y * q1;

    auto y_coeffs = [&](i128 z, i128 & beta_y, i128 & gamma_y, i128 & u, i128 & w,
                        i128 & r) {
        u = e * z + g;
        w = d * z + h;
        r = c * z * z + i * z + k;
        beta_y = 2 * f * u - 4 * a * w;
        gamma_y = u * u - 4 * a * r;
    };
    auto z_feasible = [&](i128 z) {
        i128 beta_y, gamma_y, u, w, r;
        y_coeffs(z, beta_y, gamma_y, u, w, r);
        return beta_y * beta_y + 4 * alpha_y * gamma_y >= 0;
    };

    walk_interval(floor_div<i128>(beta_z, 32 * a * delta), z_feasible, [&](i128 z) {
        i128 beta_y, gamma_y, u, w, r;
        y_coeffs(z, beta_y, gamma_y, u, w, r);
        auto y_feasible = [&](i128 y) {
            return -alpha_y * y * y + beta_y * y + gamma_y >= 0;
        };
        walk_interval(floor_div<i128>(beta_y, 2 * alpha_y), y_feasible, [&](i128 y) {
            i128 Bx = f * y + u;
            i128 C = b * y * y + w * y + r;
            inner(static_cast<std::int64_t>(y), static_cast<std::int64_t>(z), Bx, C);
        });
    });
}

}  // namespace

void for_each_point_up_to(QuadraticPolynomial const & P, std::int64_t bound,
                          std::function<void(Vec3 const &, std::int64_t)> const & visit)
{
    const i128 a = P.quadratic.a;
    sweep(P, bound, [&](std::int64_t y, std::int64_t z, i128 Bx, i128 C) {
        auto x_feasible = [&](i128 x) { return a * x * x + Bx * x + C <= 0; };
        walk_interval(floor_div<i128>(-Bx, 2 * a), x_feasible, [&](i128 x) {
            auto value = static_cast<std::int64_t>(a * x * x + Bx * x + C + bound);
            visit(Vec3{static_cast<std::int64_t>(x), y, z}, value);
        });
    });
}

RepresentationSet enumerate_representations(TernaryForm const & form, std::int64_t n)
{
    RepresentationSet out;
    out.n = n;
    if (n < 0)
        return out;
    QuadraticPolynomial P{form, 0, 0, 0, 0};
    const i128 a = form.a;
    // With the bound equal to n, solutions are the roots of a x^2 + Bx x + C.
    sweep(P, n, [&](std::int64_t y, std::int64_t z, i128 Bx, i128 C) {
        i128 disc = Bx * Bx - 4 * a * C;
        i128 s = isqrt(disc);
        if (s * s != disc)
            return;
        for (i128 num : {-Bx - s, -Bx + s}) {
            if (num % (2 * a) != 0)
                continue;
            out.triples.push_back({static_cast<std::int64_t>(num / (2 * a)), y, z});
            if (s == 0)
                break;
        }
    });
    std::sort(out.triples.begin(), out.triples.end());
    return out;
}

std::int64_t representation_count(TernaryForm const & form, std::int64_t n)
{
    if (n < 0)
        return 0;
    return static_cast<std::int64_t>(enumerate_representations(form, n).size());
}

QSeries theta_coefficients(TernaryForm const & form, std::int64_t N)
{
    if (N < 0)
        throw PreconditionError("negative truncation");
    QSeries out(N);
    const i128 a = form.a;
    QuadraticPolynomial P{form, 0, 0, 0, 0};
    sweep(P, N, [&](std::int64_t, std::int64_t, i128 Bx, i128 C) {
        auto x_feasible = [&](i128 x) { return a * x * x + Bx * x + C <= 0; };
        walk_interval(floor_div<i128>(-Bx, 2 * a), x_feasible, [&](i128 x) {
            out.at(static_cast<std::int64_t>(a * x * x + Bx * x + C + N)) += 1;
        });
    });
    return out;
}

}  // namespace terqf
