#ifndef TERQF_BOUNDS_HPP
#define TERQF_BOUNDS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "terqf/forms.hpp"

namespace terqf {

enum class BoundKind
{
    zero,          // local density vanishes: R = 0
    constant,      // bound independent of class numbers (small v)
    class_number,  // coefficient * h(D)
};

/// Which integer the discriminant template multiplies.
enum class TemplateVariable
{
    v,  // the base-free part of n
    n,  // n itself, after stripping the period
};

/*
 * One row of a lower-bound cascade. With n (period stripped) written as
 * base^a * v, base not dividing v, the row applies when a lies in
 * [a_min, a_max] (a_max < 0 means unbounded), v mod modulus is one of
 * residues, v == v_equals (if nonzero) and v > v_greater.
 *
 * coefficient(a) = alpha + beta * coef_base^(exponent_sign * a)
 * D = -(disc_num / disc_den) * x, x being v or n.
 */
struct BoundCase
{
    std::string label;
    int a_min = 0;
    int a_max = -1;
    std::int64_t modulus = 1;
    std::vector<std::int64_t> residues{0};
    std::int64_t v_equals = 0;
    std::int64_t v_greater = 0;
    BoundKind kind = BoundKind::zero;
    mpq_class alpha = 0;
    mpq_class beta = 0;
    int exponent_sign = 0;
    std::int64_t disc_num = 1;
    std::int64_t disc_den = 1;
    TemplateVariable variable = TemplateVariable::v;

    bool matches(int a, std::int64_t v) const;
    mpq_class coefficient(int a, std::int64_t coef_base) const;
};

struct PrelistConfig
{
    TernaryForm form;
    std::int64_t aut_order = 0;
    /// R(period * n) = R(n); candidates are period-free.
    std::int64_t strip_period = 1;
    std::int64_t split_base = 4;
    std::int64_t coef_base = 2;
    bool odd_only = false;
    std::vector<BoundCase> cases;

    /// Set for a form whose counts are those of another configured form at
    /// a scaled argument: R(n) = R_source(transfer_scale * n).
    std::shared_ptr<PrelistConfig const> transfer;
    std::int64_t transfer_scale = 1;
};

/// n with the period stripped, then split as base^a * v.
struct SplitArgument
{
    std::int64_t stripped = 0;
    int a = 0;
    std::int64_t v = 0;
};

SplitArgument split_argument(PrelistConfig const & config, std::int64_t n);

/// The unique case covering (a, v); throws InconsistencyError if none or
/// several match.
BoundCase const & case_for(PrelistConfig const & config, int a, std::int64_t v);

struct LowerBound
{
    mpq_class value;
    bool density_zero = false;
    std::string case_label;
    std::int64_t discriminant = 0;  // 0 unless a class number is used
    std::int64_t class_number = 0;
};

/// Certified lower bound for R_f(n) from the config's case table (P >= 1).
LowerBound lower_bound_count(TernaryForm const & form, std::int64_t n,
                             PrelistConfig const & config);

nlohmann::ordered_json config_to_json(PrelistConfig const & config);

}  // namespace terqf

#endif
