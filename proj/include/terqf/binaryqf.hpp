#ifndef TERQF_BINARYQF_HPP
#define TERQF_BINARYQF_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace terqf {

/*
 * Positive definite binary form A x^2 + B xy + C y^2 with B^2 - 4AC < 0.
 * Reduced means |B| <= A <= C, and B >= 0 whenever |B| = A or A = C; every
 * class of primitive forms has exactly one reduced member.
 */
struct BinaryForm
{
    std::int64_t A = 0, B = 0, C = 0;

    std::int64_t discriminant() const { return B * B - 4 * A * C; }
    bool is_reduced() const;
    bool is_primitive() const;

    friend auto operator<=>(BinaryForm const &, BinaryForm const &) = default;
};

/// Throws unless D < 0 and D = 0, 1 (mod 4).
void check_negative_discriminant(std::int64_t D);

BinaryForm reduce(BinaryForm g);

/// Principal form of discriminant D.
BinaryForm principal_form(std::int64_t D);

/// All reduced primitive forms of discriminant D, sorted.
std::vector<BinaryForm> reduced_forms(std::int64_t D);

/// h(D); cached.
std::int64_t class_number(std::int64_t D);

/// Dirichlet composition, returned reduced.
BinaryForm compose(BinaryForm const & g1, BinaryForm const & g2);

/// Inverse class: (A, -B, C), reduced.
BinaryForm inverse(BinaryForm const & g);

/// Elementary divisors d_1 | d_2 | ... rendered as "Z2xZ4"; "Z1" if trivial.
std::string structure_label(std::vector<std::int64_t> const & divisors);

struct ClassGroup
{
    std::int64_t D = 0;
    std::vector<BinaryForm> representatives;  // reduced, sorted
    std::vector<std::int64_t> structure;      // elementary divisors, ascending
    /// table[i][j] = index of representatives[i] * representatives[j]
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;

    std::int64_t order() const { return static_cast<std::int64_t>(representatives.size()); }
    std::string label() const { return structure_label(structure); }
    std::int64_t element_order(std::size_t i) const;
};

ClassGroup class_group(std::int64_t D);

/// D = d f^2 with d a fundamental discriminant; w_D is the number of units
/// of the order of discriminant D.
struct FundamentalDecomposition
{
    std::int64_t D = 0;
    std::int64_t d = 0;
    std::int64_t conductor = 1;
    std::int64_t unit_factor = 2;
};

bool is_fundamental_discriminant(std::int64_t d);
std::int64_t unit_count(std::int64_t D);
FundamentalDecomposition fundamental_decomposition(std::int64_t D);

/// h(d f^2) from h(d) through the conductor formula, in exact arithmetic.
std::int64_t class_number_via_conductor(std::int64_t d, std::int64_t conductor);

/// n = 4^a * m * d^2 with m squarefree and d odd.
struct ArithmeticDecomposition
{
    std::int64_t n = 1;
    int four_power = 0;
    std::int64_t squarefree = 1;
    std::int64_t odd_square_root = 1;

    /// 4-free part m * d^2.
    std::int64_t four_free() const { return squarefree * odd_square_root * odd_square_root; }
};

ArithmeticDecomposition decompose_n(std::int64_t n);

struct CatalogEntry
{
    std::int64_t D = 0;  // negative
    std::int64_t h = 0;
    std::vector<std::int64_t> structure;

    std::string label() const { return structure_label(structure); }
};

/// Every negative discriminant with class number <= bound, fundamental or
/// not, with its class group structure.
struct ClassNumberCatalog
{
    int bound = 0;
    std::vector<CatalogEntry> entries;  // ordered by |D|

    /// label -> ascending list of |D|
    std::map<std::string, std::vector<std::int64_t>> by_structure() const;
    CatalogEntry const * find(std::int64_t D) const;
};

/// Largest |d| of a fundamental discriminant with h(d) <= 8.
inline constexpr std::int64_t fundamental_search_bound = 6307;

/// Largest conductor reachable with h <= 8 for d = -3, d = -4, |d| > 4.
std::int64_t max_conductor(std::int64_t d);

/// Fundamental discriminants up to the search bound, extended by conductors.
ClassNumberCatalog catalog_h_le(int bound);

/// |D| <= ceiling with h(D) <= catalog.bound found by direct class number
/// computation but missing from the catalog (expected: none).
std::vector<std::int64_t> catalog_omissions(ClassNumberCatalog const & catalog,
                                            std::int64_t ceiling);

/// Versioned JSON cache: {"format", "version", "bound", "entries": [{D,h,structure}]}.
nlohmann::ordered_json catalog_to_json(ClassNumberCatalog const & catalog);
ClassNumberCatalog catalog_from_json(nlohmann::json const & j);

}  // namespace terqf

#endif
