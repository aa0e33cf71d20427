#include "terqf/automorphs.hpp"

#include <algorithm>
#include <set>

#include "terqf/errors.hpp"

namespace terqf {

Automorph identity_automorph()
{
    Automorph id;
    for (int i = 0; i < 3; ++i)
        id.m[i][i] = 1;
    return id;
}

Automorph operator*(Automorph const & x, Automorph const & y)
{
    Automorph r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                r.m[i][j] += x.m[i][k] * y.m[k][j];
    return r;
}

std::int64_t determinant(Mat3 const & m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Vec3 apply(Automorph const & aut, Vec3 const & v)
{
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        r[i] = aut.m[i][0] * v[0] + aut.m[i][1] * v[1] + aut.m[i][2] * v[2];
    return r;
}

bool AutomorphGroup::contains(Automorph const & m) const
{
    return std::binary_search(elements.begin(), elements.end(), m);
}

AutomorphGroup automorph_group(TernaryForm const & form)
{
    if (!is_positive_definite(form))
        throw PreconditionError("automorph group needs a positive definite form");
    auto cols_a = enumerate_representations(form, form.a).triples;
    auto cols_b = enumerate_representations(form, form.b).triples;
    auto cols_c = enumerate_representations(form, form.c).triples;

    AutomorphGroup group;
    group.form = form;
    for (auto const & u : cols_a) {
        for (auto const & v : cols_b) {
            if (gram_pairing(form, u, v) != form.f)
                continue;
            for (auto const & w : cols_c) {
                if (gram_pairing(form, u, w) != form.e
                    || gram_pairing(form, v, w) != form.d)
                    continue;
                Automorph m;
                for (int i = 0; i < 3; ++i) {
                    m.m[i][0] = u[i];
                    m.m[i][1] = v[i];
                    m.m[i][2] = w[i];
                }
                // M^T G M = G already holds; det^2 * det(G) = det(G) forces
                // det = +-1, checked anyway.
                std::int64_t det = determinant(m.m);
                if (det == 1 || det == -1)
                    group.elements.push_back(m);
            }
        }
    }
    std::sort(group.elements.begin(), group.elements.end());
    return group;
}

OrbitPartition orbit_partition(AutomorphGroup const & group, std::int64_t n)
{
    OrbitPartition part;
    part.n = n;
    auto reps = enumerate_representations(group.form, n).triples;
    std::set<Vec3> seen;
    for (auto const & v : reps) {  // reps are sorted, so v is the orbit minimum
        if (seen.count(v))
            continue;
        std::set<Vec3> orbit;
        for (auto const & m : group.elements)
            orbit.insert(apply(m, v));
        seen.insert(orbit.begin(), orbit.end());
        part.orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return part;
}

OrbitPartition orbit_partition(TernaryForm const & form, std::int64_t n)
{
    return orbit_partition(automorph_group(form), n);
}

std::int64_t essential_count(AutomorphGroup const & group, std::int64_t n)
{
    if (n < 0)
        return 0;
    return static_cast<std::int64_t>(orbit_partition(group, n).size());
}

std::int64_t essential_count(TernaryForm const & form, std::int64_t n)
{
    return essential_count(automorph_group(form), n);
}

bool is_essentially_unique(AutomorphGroup const & group, std::int64_t n)
{
    return essential_count(group, n) == 1;
}

bool is_essentially_unique(TernaryForm const & form, std::int64_t n)
{
    return essential_count(form, n) == 1;
}

std::int64_t stabilizer_order(AutomorphGroup const & group, Vec3 const & v)
{
    return std::count_if(group.elements.begin(), group.elements.end(),
                         [&](Automorph const & m) { return apply(m, v) == v; });
}

}  // namespace terqf
