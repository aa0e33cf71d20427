#ifndef TERQF_LOCALDENSITY_HPP
#define TERQF_LOCALDENSITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "terqf/forms.hpp"

namespace terqf {

struct LocalDensityValue
{
    mpq_class value;
    std::int64_t p = 2;
    int k_used = 0;
};

/// Default cap on the lift depth of local_density.
inline constexpr int default_max_depth = 40;

/// p^{-2k} #{v mod p^k : form(v) = n mod p^k}, counted on the tree of
/// residue classes: a class whose gradient has p-adic valuation s below its
/// level is lifted in closed form, only singular classes are refined.
mpq_class local_density_finite(TernaryForm const & form, std::int64_t p,
                               std::int64_t n, int k);

/// Same quantity by scanning all (p^k)^3 residues; refuses p^{3k} > 10^6.
mpq_class local_density_scan(TernaryForm const & form, std::int64_t p,
                             std::int64_t n, int k);

/// Smallest k > ord_p(4 n Δ) at which two consecutive finite densities agree,
/// cross-checked against the exact limit of the lifting tree.
LocalDensityValue local_density(TernaryForm const & form, std::int64_t p,
                                std::int64_t n, int max_depth = default_max_depth);

/// Closed form for p not dividing 2Δ.
mpq_class good_prime_density(std::int64_t delta, std::int64_t p, std::int64_t n);

/// r * pi / sqrt(m), m squarefree; normalized on construction.
class SymbolicReal
{
    mpq_class r_;
    std::int64_t m_ = 1;

    public:
    SymbolicReal() = default;
    SymbolicReal(mpq_class r, std::int64_t m);

    mpq_class const & rational() const { return r_; }
    std::int64_t radicand() const { return m_; }
    double approx() const;
    std::string str() const;

    friend SymbolicReal operator*(SymbolicReal const & x, mpq_class const & q);
    friend bool operator==(SymbolicReal const & x, SymbolicReal const & y)
    {
        return x.r_ == y.r_ && x.m_ == y.m_;
    }
};

/// L(1, chi(m)) for squarefree m, chi(m) = (-4m / .), via class numbers.
SymbolicReal l_value(std::int64_t m);

/// L(1, chi(n)) for any n >= 1.
SymbolicReal l_value_general(std::int64_t n);

/// Partial sum of the defining series to the given number of terms.
double l_value_partial_sum(std::int64_t n, std::int64_t terms);

/// P(n, Δ): product over p not dividing 2Δ with p^2 | n.
mpq_class p_correction(std::int64_t n, std::int64_t delta);

struct SiegelAssembly
{
    TernaryForm form;
    std::int64_t n = 0;
    std::int64_t delta = 0;
    SymbolicReal l_value;      // L(1, chi(Δ n))
    mpq_class prefactor;       // 32 sqrt(n) / (pi sqrt(Δ)) * L, after cancellation
    mpq_class p_factor;        // P(n, Δ)
    std::vector<LocalDensityValue> bad_primes;  // p | 2Δ
    mpq_class odd_factor;      // prod_{2<p|Δ} 1/(1 - p^-2)
    mpq_class count;

    nlohmann::ordered_json to_json() const;
};

/// Every factor of the Siegel count for a form declared idoneal.
SiegelAssembly siegel_assembly(TernaryForm const & form, std::int64_t n);

/// Exact count; throws InconsistencyError (with the breakdown) when the
/// assembled value is not a non-negative integer.
std::int64_t siegel_count(TernaryForm const & form, std::int64_t n);

std::string rational_string(mpq_class const & q);

}  // namespace terqf

#endif
