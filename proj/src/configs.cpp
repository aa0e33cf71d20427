#include "terqf/configs.hpp"

#include <memory>

namespace terqf {

namespace {

struct CaseBuilder
{
    BoundCase c;

    explicit CaseBuilder(std::string label) { c.label = std::move(label); }
    CaseBuilder & a(int lo, int hi = -1)
    {
        c.a_min = lo;
        c.a_max = hi;
        return *this;
    }
    CaseBuilder & mod(std::int64_t m, std::vector<std::int64_t> r)
    {
        c.modulus = m;
        c.residues = std::move(r);
        return *this;
    }
    CaseBuilder & equals(std::int64_t v)
    {
        c.v_equals = v;
        return *this;
    }
    CaseBuilder & above(std::int64_t v)
    {
        c.v_greater = v;
        return *this;
    }
    BoundCase zero()
    {
        c.kind = BoundKind::zero;
        return c;
    }
    BoundCase constant(mpq_class alpha, mpq_class beta = 0, int sign = 0)
    {
        c.kind = BoundKind::constant;
        c.alpha = alpha;
        c.beta = beta;
        c.exponent_sign = sign;
        return c;
    }
    // coefficient * h(-(num/den) x)
    BoundCase h(std::int64_t num, std::int64_t den, mpq_class alpha, mpq_class beta = 0,
                int sign = 0, TemplateVariable var = TemplateVariable::v)
    {
        c.kind = BoundKind::class_number;
        c.disc_num = num;
        c.disc_den = den;
        c.alpha = alpha;
        c.beta = beta;
        c.exponent_sign = sign;
        c.variable = var;
        return c;
    }
};

CaseBuilder when(std::string label)
{
    return CaseBuilder(std::move(label));
}

PrelistConfig sum_of_squares()
{
    PrelistConfig c;
    c.form = {1, 1, 1, 0, 0, 0};
    c.aut_order = 48;
    c.strip_period = 4;
    c.cases = {
        when("v=1").a(0, 0).equals(1).constant(6),
        when("v=3").a(0, 0).equals(3).constant(8),
        when("v=7 mod 8").a(0, 0).mod(8, {7}).zero(),
        when("v=3 mod 8, v>3").a(0, 0).mod(8, {3}).above(3).h(1, 1, 24),
        when("v=1,2 mod 4, v>1").a(0, 0).mod(4, {1, 2}).above(1).h(4, 1, 12),
    };
    return c;
}

PrelistConfig form_4096()
{
    PrelistConfig c;
    c.form = {5, 13, 20, -12, 4, 2};
    c.aut_order = 4;
    c.cases = {
        when("a=0, v=5 mod 8").a(0, 0).mod(8, {5}).h(4, 1, 1),
        when("a=1, v=5 mod 8").a(1, 1).mod(8, {5}).h(4, 1, 4),
        when("a<=1, v=1,2,3,6 mod 8").a(0, 1).mod(8, {1, 2, 3, 6}).zero(),
        when("v=7 mod 8").mod(8, {7}).zero(),
        when("a=2, v=1").a(2, 2).equals(1).constant(2),
        when("a=2, v=3").a(2, 2).equals(3).constant(8),
        when("a=2, v=3 mod 8, v>3").a(2, 2).mod(8, {3}).above(3).h(1, 1, 24),
        when("a=2, v=1,2 mod 4, v>1").a(2, 2).mod(4, {1, 2}).above(1).h(4, 1, 4),
        when("a>=3, v=1").a(3).equals(1).constant(6),
        when("a>=3, v=3").a(3).equals(3).constant(8),
        when("a>=3, v=3 mod 8, v>3").a(3).mod(8, {3}).above(3).h(1, 1, 24),
        when("a>=3, v=1,2 mod 4, v>1").a(3).mod(4, {1, 2}).above(1).h(4, 1, 12),
    };
    return c;
}

PrelistConfig form_8192()
{
    PrelistConfig c;
    c.form = {7, 15, 23, 10, 2, 6};
    c.aut_order = 2;
    c.cases = {
        when("a=0, v=7 mod 8").a(0, 0).mod(8, {7}).h(8, 1, mpq_class(1, 2)),
        when("a=1, v=7 mod 8").a(1, 1).mod(8, {7}).h(8, 1, 2),
        when("a<=1, v=1,3,5 mod 8").a(0, 1).mod(8, {1, 3, 5}).zero(),
        when("a=2, v odd").a(2, 2).mod(2, {1}).h(8, 1, 2),
        when("a=3, v odd").a(3, 3).mod(2, {1}).h(8, 1, 4),
        when("a>=4, v odd").a(4).mod(2, {1}).h(8, 1, 12),
        when("v=14 mod 16").mod(16, {14}).zero(),
        when("a<=1, v=2,6,10 mod 16").a(0, 1).mod(16, {2, 6, 10}).zero(),
        when("a=2, v=2").a(2, 2).equals(2).constant(2),
        when("a>=3, v=2").a(3).equals(2).constant(6),
        when("a=2, v=2 mod 8, v>2").a(2, 2).mod(8, {2}).above(2).h(2, 1, 4),
        when("a>=3, v=2 mod 8, v>2").a(3).mod(8, {2}).above(2).h(2, 1, 12),
        when("a>=2, v=6").a(2).equals(6).constant(8),
        when("a>=2, v=6 mod 16, v>6").a(2).mod(16, {6}).above(6).h(1, 2, 24),
    };
    return c;
}

PrelistConfig form_133()
{
    PrelistConfig c;
    c.form = {1, 3, 3, 0, 0, 0};
    c.aut_order = 16;
    c.strip_period = 9;
    c.cases = {
        when("v=2 mod 3").mod(3, {2}).zero(),
        when("v=1").equals(1).constant(-6, 8, 1),
        when("v=3").equals(3).constant(-4, 8, 1),
        when("v=19 mod 24").mod(24, {19}).h(1, 1, -24, 48, 1),
        when("v=7 mod 24").mod(24, {7}).h(1, 1, 0, 16, 1),
        when("v=1,10 mod 12, v>1").mod(12, {1, 10}).above(1).h(4, 1, -12, 16, 1),
        when("v=3,51 mod 72, v>3").mod(72, {3, 51}).above(3).h(1, 1, -12, 24, 1),
        when("v=15,39 mod 72").mod(72, {15, 39}).h(1, 1, 0, 8, 1),
        when("v=6,21,30,33 mod 36").mod(36, {6, 21, 30, 33}).h(4, 1, -6, 8, 1),
    };
    return c;
}

PrelistConfig form_123()
{
    PrelistConfig c;
    c.form = {1, 2, 3, 0, 0, 0};
    c.aut_order = 8;
    c.split_base = 9;
    c.coef_base = 3;
    c.odd_only = true;
    auto const n = TemplateVariable::n;
    c.cases = {
        when("v=1,2 mod 3").mod(3, {1, 2}).h(24, 1, 3, -2, -1, n),
        when("v=3 mod 9").mod(9, {3}).h(24, 1, 3, 0, 0, n),
        when("v=6 mod 9").mod(9, {6}).h(24, 1, 3, -1, -1, n),
    };
    return c;
}

std::vector<PrelistConfig> build()
{
    std::vector<PrelistConfig> out{sum_of_squares(), form_4096(), form_8192(), form_133(),
                                   form_123()};
    // R(1,1,3; n) = R(1,3,3; 3n)
    PrelistConfig t;
    t.form = {1, 1, 3, 0, 0, 0};
    t.aut_order = 16;
    t.strip_period = 9;
    t.transfer = std::make_shared<PrelistConfig const>(form_133());
    t.transfer_scale = 3;
    out.push_back(std::move(t));
    return out;
}

}  // namespace

std::vector<PrelistConfig> const & shipped_configs()
{
    static std::vector<PrelistConfig> const configs = build();
    return configs;
}

PrelistConfig const * find_config(TernaryForm const & form)
{
    for (auto const & c : shipped_configs())
        if (c.form == form)
            return &c;
    return nullptr;
}

}  // namespace terqf
