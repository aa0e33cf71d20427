#ifndef TERQF_AUTOMORPHS_HPP
#define TERQF_AUTOMORPHS_HPP

#include <cstdint>
#include <vector>

#include "terqf/forms.hpp"

namespace terqf {

/// Integer matrix M with det(M) = +-1 and M^T G M = G; acts on column
/// vectors, v -> M v.
struct Automorph
{
    Mat3 m{};

    friend auto operator<=>(Automorph const &, Automorph const &) = default;
};

Automorph identity_automorph();
Automorph operator*(Automorph const & x, Automorph const & y);
std::int64_t determinant(Mat3 const & m);

Vec3 apply(Automorph const & aut, Vec3 const & v);

/// Elements kept sorted (lexicographic on the matrix entries).
struct AutomorphGroup
{
    TernaryForm form;
    std::vector<Automorph> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(Automorph const & m) const;
};

/// Complete automorph group. Columns of an automorph are representations of
/// a, b, c whose Gram pairings equal f, e, d, so the search is finite.
AutomorphGroup automorph_group(TernaryForm const & form);

struct OrbitPartition
{
    std::int64_t n = 0;
    /// Each orbit sorted; orbits ordered by their least element.
    std::vector<std::vector<Vec3>> orbits;

    std::size_t size() const { return orbits.size(); }
};

OrbitPartition orbit_partition(AutomorphGroup const & group, std::int64_t n);
OrbitPartition orbit_partition(TernaryForm const & form, std::int64_t n);

/// Number of automorph orbits on the solutions of form = n.
std::int64_t essential_count(AutomorphGroup const & group, std::int64_t n);
std::int64_t essential_count(TernaryForm const & form, std::int64_t n);

bool is_essentially_unique(AutomorphGroup const & group, std::int64_t n);
bool is_essentially_unique(TernaryForm const & form, std::int64_t n);

/// Number of automorphs fixing v.
std::int64_t stabilizer_order(AutomorphGroup const & group, Vec3 const & v);

}  // namespace terqf

#endif
