#ifndef TERQF_FORMS_HPP
#define TERQF_FORMS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "terqf/qseries.hpp"

namespace terqf {

using Vec3 = std::array<std::int64_t, 3>;
using Mat3 = std::array<std::array<std::int64_t, 3>, 3>;

/// The ternary form a x^2 + b y^2 + c z^2 + d yz + e xz + f xy.
struct TernaryForm
{
    std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

    friend auto operator<=>(TernaryForm const &, TernaryForm const &) = default;
};

/// Symmetric matrix with v^T G v = 2 Q(v):
///   2a f e / f 2b d / e d 2c.  det(G) = 2 * discriminant.
using GramMatrix = Mat3;

GramMatrix gram_matrix(TernaryForm const & form);

/// 4abc + def - ad^2 - be^2 - cf^2.
std::int64_t discriminant(TernaryForm const & form);

/// All three leading principal minors of the Gram matrix positive.
bool is_positive_definite(TernaryForm const & form);

std::int64_t evaluate(TernaryForm const & form, std::int64_t x, std::int64_t y,
                      std::int64_t z);
std::int64_t evaluate(TernaryForm const & form, Vec3 const & v);

/// u^T G v, the bilinear form attached to the Gram matrix.
std::int64_t gram_pairing(TernaryForm const & form, Vec3 const & u, Vec3 const & v);

/// "a,b,c,d,e,f": optionally signed decimal integers, commas, no spaces.
TernaryForm parse_form(std::string_view text);
std::string format_form(TernaryForm const & form);

/// All solutions of form(v) = n, lexicographically sorted.
struct RepresentationSet
{
    std::int64_t n = 0;
    std::vector<Vec3> triples;

    std::size_t size() const { return triples.size(); }
};

RepresentationSet enumerate_representations(TernaryForm const & form,
                                            std::int64_t n);

/// R_f(n); 0 for negative n.
std::int64_t representation_count(TernaryForm const & form, std::int64_t n);

/// [R_f(0), ..., R_f(N)] from a single sweep of the ellipsoid Q <= N.
QSeries theta_coefficients(TernaryForm const & form, std::int64_t N);

/// Q(v) + g x + h y + i z + k with Q positive definite. Used for the shifted
/// and congruence-restricted theta series of the identity checker.
struct QuadraticPolynomial
{
    TernaryForm quadratic;
    std::int64_t g = 0, h = 0, i = 0;
    std::int64_t k = 0;

    std::int64_t operator()(Vec3 const & v) const;
};

/// Calls visit(v, value) for every integer v with value = P(v) <= bound.
///
/// The search region is carved out by successive elimination of x, then y:
/// each coordinate interval is the exact set where the discriminant of the
/// remaining quadratic is non-negative, found by walking outward from the
/// integer vertex. No floating point is involved.
void for_each_point_up_to(QuadraticPolynomial const & poly, std::int64_t bound,
                          std::function<void(Vec3 const &, std::int64_t)> const & visit);

}  // namespace terqf

#endif
