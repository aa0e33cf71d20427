#include "terqf/bounds.hpp"

#include <algorithm>

#include "terqf/arith.hpp"
#include "terqf/binaryqf.hpp"
#include "terqf/errors.hpp"
#include "terqf/localdensity.hpp"

namespace terqf {

bool BoundCase::matches(int a, std::int64_t v) const
{
    if (a < a_min || (a_max >= 0 && a > a_max))
        return false;
    if (std::find(residues.begin(), residues.end(), mod(v, modulus)) == residues.end())
        return false;
    if (v_equals != 0 && v != v_equals)
        return false;
    return v > v_greater;
}

mpq_class BoundCase::coefficient(int a, std::int64_t coef_base) const
{
    return alpha + beta * rational_pow(coef_base, exponent_sign * a);
}

SplitArgument split_argument(PrelistConfig const & config, std::int64_t n)
{
    if (n < 1)
        throw PreconditionError("bounds need n >= 1");
    if (config.odd_only && n % 2 == 0)
        throw PreconditionError("configuration covers odd n only");
    SplitArgument s;
    s.stripped = n;
    if (config.strip_period > 1)
        while (s.stripped % config.strip_period == 0)
            s.stripped /= config.strip_period;
    s.v = s.stripped;
    while (s.v % config.split_base == 0) {
        s.v /= config.split_base;
        ++s.a;
    }
    return s;
}

BoundCase const & case_for(PrelistConfig const & config, int a, std::int64_t v)
{
    BoundCase const * found = nullptr;
    for (auto const & c : config.cases)
        if (c.matches(a, v)) {
            if (found)
                throw InconsistencyError("cases '" + found->label + "' and '" + c.label
                                         + "' overlap at a = " + std::to_string(a)
                                         + ", v = " + std::to_string(v));
            found = &c;
        }
    if (!found)
        throw InconsistencyError("no bound case covers a = " + std::to_string(a)
                                 + ", v = " + std::to_string(v));
    return *found;
}

LowerBound lower_bound_count(TernaryForm const & form, std::int64_t n,
                             PrelistConfig const & config)
{
    if (form != config.form)
        throw PreconditionError("configuration is for form " + format_form(config.form));
    if (config.transfer)
        return lower_bound_count(config.transfer->form, config.transfer_scale * n,
                                 *config.transfer);

    SplitArgument s = split_argument(config, n);
    BoundCase const & c = case_for(config, s.a, s.v);
    LowerBound out;
    out.case_label = c.label;
    switch (c.kind) {
    case BoundKind::zero:
        out.value = 0;
        out.density_zero = true;
        return out;
    case BoundKind::constant:
        out.value = c.coefficient(s.a, config.coef_base);
        return out;
    case BoundKind::class_number:
        break;
    }
    std::int64_t x = c.variable == TemplateVariable::v ? s.v : s.stripped;
    if ((c.disc_num * x) % c.disc_den != 0)
        throw InconsistencyError("discriminant template of case '" + c.label
                                 + "' is not integral at " + std::to_string(x));
    out.discriminant = -(c.disc_num * x) / c.disc_den;
    out.class_number = class_number(out.discriminant);
    out.value = c.coefficient(s.a, config.coef_base) * out.class_number;
    return out;
}

nlohmann::ordered_json config_to_json(PrelistConfig const & config)
{
    nlohmann::ordered_json j;
    j["form"] = format_form(config.form);
    j["aut_order"] = config.aut_order;
    if (config.transfer) {
        j["transfer_from"] = format_form(config.transfer->form);
        j["transfer_scale"] = config.transfer_scale;
        return j;
    }
    j["strip_period"] = config.strip_period;
    j["split_base"] = config.split_base;
    j["coef_base"] = config.coef_base;
    j["odd_only"] = config.odd_only;
    j["cases"] = nlohmann::ordered_json::array();
    for (auto const & c : config.cases) {
        nlohmann::ordered_json row;
        row["label"] = c.label;
        row["a_min"] = c.a_min;
        row["a_max"] = c.a_max;
        row["modulus"] = c.modulus;
        row["residues"] = c.residues;
        if (c.v_equals)
            row["v_equals"] = c.v_equals;
        if (c.v_greater)
            row["v_greater"] = c.v_greater;
        row["kind"] = c.kind == BoundKind::zero       ? "zero"
                      : c.kind == BoundKind::constant ? "constant"
                                                      : "class_number";
        if (c.kind != BoundKind::zero) {
            row["alpha"] = rational_string(c.alpha);
            row["beta"] = rational_string(c.beta);
            row["exponent_sign"] = c.exponent_sign;
        }
        if (c.kind == BoundKind::class_number) {
            row["disc_num"] = c.disc_num;
            row["disc_den"] = c.disc_den;
            row["variable"] = c.variable == TemplateVariable::v ? "v" : "n";
        }
        j["cases"].push_back(row);
    }
    return j;
}

}  // namespace terqf
