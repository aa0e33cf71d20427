#include "terqf/binaryqf.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "terqf/arith.hpp"
#include "terqf/errors.hpp"

namespace terqf {

bool BinaryForm::is_reduced() const
{
    if (A <= 0 || std::llabs(B) > A || A > C)
        return false;
    if ((std::llabs(B) == A || A == C) && B < 0)
        return false;
    return true;
}

bool BinaryForm::is_primitive() const
{
    return gcd(gcd(A, B), C) == 1;
}

void check_negative_discriminant(std::int64_t D)
{
    if (D >= 0)
        throw PreconditionError("discriminant must be negative, got " + std::to_string(D));
    std::int64_t r = mod<std::int64_t>(D, 4);
    if (r != 0 && r != 1)
        throw PreconditionError("discriminant must be 0 or 1 mod 4, got "
                                + std::to_string(D));
}

BinaryForm reduce(BinaryForm g)
{
    if (g.A <= 0 || g.discriminant() >= 0)
        throw PreconditionError("reduce needs a positive definite binary form");
    for (;;) {
        // x -> x + r y puts B into (-A, A].
        std::int64_t r = floor_div(g.A - g.B, 2 * g.A);
        g.C = g.A * r * r + g.B * r + g.C;
        g.B += 2 * g.A * r;
        if (g.A > g.C) {
            g = {g.C, -g.B, g.A};
            continue;
        }
        if (g.A == g.C && g.B < 0)
            g.B = -g.B;
        return g;
    }
}

BinaryForm principal_form(std::int64_t D)
{
    check_negative_discriminant(D);
    std::int64_t b = mod<std::int64_t>(D, 2);
    return {1, b, (b * b - D) / 4};
}

std::vector<BinaryForm> reduced_forms(std::int64_t D)
{
    check_negative_discriminant(D);
    std::vector<BinaryForm> out;
    // A <= sqrt(|D|/3) for reduced forms.
    for (std::int64_t A = 1; 3 * A * A <= -D; ++A) {
        for (std::int64_t B = -A + 1; B <= A; ++B) {
            if (mod<std::int64_t>(B - D, 2) != 0)
                continue;
            std::int64_t num = B * B - D;
            if (num % (4 * A) != 0)
                continue;
            std::int64_t C = num / (4 * A);
            if (C < A || (C == A && B < 0))
                continue;
            if (gcd(gcd(A, B), C) != 1)
                continue;
            out.push_back({A, B, C});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t class_number(std::int64_t D)
{
    static std::mutex lock;
    static std::unordered_map<std::int64_t, std::int64_t> cache;
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(D);
        if (it != cache.end())
            return it->second;
    }
    auto h = static_cast<std::int64_t>(reduced_forms(D).size());
    std::lock_guard<std::mutex> guard(lock);
    cache.emplace(D, h);
    return h;
}

BinaryForm compose(BinaryForm const & g1, BinaryForm const & g2)
{
    std::int64_t D = g1.discriminant();
    if (g2.discriminant() != D)
        throw PreconditionError("compose: discriminants differ");
    if (!g1.is_primitive() || !g2.is_primitive())
        throw PreconditionError("compose: forms must be primitive");
    std::int64_t s = (g1.B + g2.B) / 2;
    // u a1 + v a2 + w s = e = gcd(a1, a2, s)
    std::int64_t x1, y1, x2, y2;
    std::int64_t g = xgcd(g1.A, g2.A, x1, y1);
    std::int64_t e = xgcd(g, s, x2, y2);
    i128 u = static_cast<i128>(x1) * x2;
    i128 v = static_cast<i128>(y1) * x2;
    i128 w = y2;
    i128 A3 = static_cast<i128>(g1.A) * g2.A / (static_cast<i128>(e) * e);
    i128 num = u * g1.A * g2.B + v * g2.A * g1.B
               + w * ((static_cast<i128>(g1.B) * g2.B + D) / 2);
    if (num % e != 0)
        throw InconsistencyError("compose: united-form congruence failed");
    i128 B3 = mod<i128>(num / e, 2 * A3);
    i128 Cnum = B3 * B3 - D;
    if (Cnum % (4 * A3) != 0)
        throw InconsistencyError("compose: non-integral third coefficient");
    return reduce({static_cast<std::int64_t>(A3), static_cast<std::int64_t>(B3),
                   static_cast<std::int64_t>(Cnum / (4 * A3))});
}

BinaryForm inverse(BinaryForm const & g)
{
    return reduce({g.A, -g.B, g.C});
}

std::string structure_label(std::vector<std::int64_t> const & divisors)
{
    if (divisors.empty())
        return "Z1";
    std::string s;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (i)
            s += "x";
        s += "Z" + std::to_string(divisors[i]);
    }
    return s;
}

std::int64_t ClassGroup::element_order(std::size_t i) const
{
    std::int64_t k = 1;
    std::size_t x = i;
    while (x != identity) {
        x = table[x][i];
        ++k;
    }
    return k;
}

namespace {

std::size_t power(ClassGroup const & G, std::size_t x, std::int64_t e)
{
    std::size_t r = G.identity;
    for (std::int64_t i = 0; i < e; ++i)
        r = G.table[r][x];
    return r;
}

/// Invariant factors of a finite abelian group from the number of solutions
/// of x^(p^k) = 1 for each prime p | h.
std::vector<std::int64_t> invariant_factors(ClassGroup const & G)
{
    std::int64_t h = G.order();
    // For each prime, exponents of the p-primary cyclic factors, descending.
    std::vector<std::vector<std::int64_t>> primary;
    for (auto const & [p, e] : (h > 1 ? factorize(h) : std::vector<std::pair<std::int64_t, int>>{})) {
        std::vector<int> at_least;  // at_least[k-1] = #factors with exponent >= k
        int prev = 0;
        for (int k = 1; k <= e; ++k) {
            std::int64_t pk = ipow(p, k);
            std::int64_t count = 0;
            for (std::size_t x = 0; x < G.representatives.size(); ++x)
                if (power(G, x, pk) == G.identity)
                    ++count;
            int s = valuation(count, p);
            at_least.push_back(s - prev);
            prev = s;
        }
        std::vector<std::int64_t> sizes;  // p^exponent per cyclic factor, descending
        for (int k = e; k >= 1; --k) {
            int exactly = at_least[static_cast<std::size_t>(k - 1)]
                          - (k < e ? at_least[static_cast<std::size_t>(k)] : 0);
            for (int j = 0; j < exactly; ++j)
                sizes.push_back(ipow(p, k));
        }
        primary.push_back(sizes);
    }
    // Largest invariant factor multiplies the largest factor of each prime.
    std::vector<std::int64_t> factors;
    for (std::size_t i = 0;; ++i) {
        std::int64_t d = 1;
        bool any = false;
        for (auto const & sizes : primary)
            if (i < sizes.size()) {
                d *= sizes[i];
                any = true;
            }
        if (!any)
            break;
        factors.push_back(d);
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

}  // namespace

ClassGroup class_group(std::int64_t D)
{
    ClassGroup G;
    G.D = D;
    G.representatives = reduced_forms(D);
    std::size_t h = G.representatives.size();
    auto index_of = [&](BinaryForm const & g) {
        auto it = std::lower_bound(G.representatives.begin(), G.representatives.end(), g);
        if (it == G.representatives.end() || *it != g)
            throw InconsistencyError("composition left the set of reduced forms");
        return static_cast<std::size_t>(it - G.representatives.begin());
    };
    G.identity = index_of(principal_form(D));
    G.table.assign(h, std::vector<std::size_t>(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            G.table[i][j] = index_of(compose(G.representatives[i], G.representatives[j]));
    G.structure = invariant_factors(G);
    return G;
}

bool is_fundamental_discriminant(std::int64_t d)
{
    if (d == 1 || d == 0)
        return false;
    std::int64_t r = mod<std::int64_t>(d, 4);
    if (r == 1)
        return is_squarefree(d);
    if (r != 0)
        return false;
    std::int64_t m = d / 4;
    std::int64_t rm = mod<std::int64_t>(m, 4);
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

std::int64_t unit_count(std::int64_t D)
{
    if (D == -3)
        return 6;
    if (D == -4)
        return 4;
    return 2;
}

FundamentalDecomposition fundamental_decomposition(std::int64_t D)
{
    check_negative_discriminant(D);
    std::int64_t core = 1, root = 1;
    for (auto const & [p, e] : factorize(D)) {
        if (e % 2)
            core *= p;
        root *= ipow(p, e / 2);
    }
    FundamentalDecomposition out;
    out.D = D;
    if (mod<std::int64_t>(-core, 4) == 1) {
        out.d = -core;
        out.conductor = root;
    } else {
        out.d = -4 * core;
        out.conductor = root / 2;
    }
    out.unit_factor = unit_count(D);
    if (out.d * out.conductor * out.conductor != D || !is_fundamental_discriminant(out.d))
        throw InconsistencyError("fundamental decomposition failed for "
                                 + std::to_string(D));
    return out;
}

std::int64_t class_number_via_conductor(std::int64_t d, std::int64_t conductor)
{
    if (!is_fundamental_discriminant(d) || d >= 0)
        throw PreconditionError(std::to_string(d) + " is not a negative fundamental discriminant");
    if (conductor < 1)
        throw PreconditionError("conductor must be positive");
    std::int64_t D = d * conductor * conductor;
    mpq_class h(class_number(d) * conductor);
    h *= mpq_class(unit_count(D), unit_count(d));
    if (conductor > 1)
        for (auto const & [p, e] : factorize(conductor))
            h *= mpq_class(1) - mpq_class(kronecker(d, p), p);
    h.canonicalize();
    return to_integer(h);
}

ArithmeticDecomposition decompose_n(std::int64_t n)
{
    if (n < 1)
        throw PreconditionError("decompose_n needs n >= 1");
    ArithmeticDecomposition out;
    out.n = n;
    while (n % 4 == 0) {
        n /= 4;
        ++out.four_power;
    }
    if (n > 1)
        for (auto const & [p, e] : factorize(n)) {
            if (e % 2)
                out.squarefree *= p;
            out.odd_square_root *= ipow(p, e / 2);  // p = 2 has e <= 1 here
        }
    return out;
}

std::map<std::string, std::vector<std::int64_t>> ClassNumberCatalog::by_structure() const
{
    std::map<std::string, std::vector<std::int64_t>> out;
    for (auto const & e : entries)
        out[e.label()].push_back(-e.D);
    for (auto & [label, list] : out)
        std::sort(list.begin(), list.end());
    return out;
}

CatalogEntry const * ClassNumberCatalog::find(std::int64_t D) const
{
    for (auto const & e : entries)
        if (e.D == D)
            return &e;
    return nullptr;
}

std::int64_t max_conductor(std::int64_t d)
{
    if (d == -3)
        return 90;
    if (d == -4)
        return 60;
    return 30;
}

ClassNumberCatalog catalog_h_le(int bound)
{
    if (bound < 1 || bound > 8)
        throw PreconditionError("catalog bound must be in 1..8");
    ClassNumberCatalog cat;
    cat.bound = bound;
    for (std::int64_t d = -3; d >= -fundamental_search_bound; --d) {
        if (!is_fundamental_discriminant(d) || class_number(d) > bound)
            continue;
        for (std::int64_t f = 1; f <= max_conductor(d); ++f) {
            std::int64_t h = class_number_via_conductor(d, f);
            if (h > bound)
                continue;
            std::int64_t D = d * f * f;
            cat.entries.push_back({D, h, class_group(D).structure});
        }
    }
    std::sort(cat.entries.begin(), cat.entries.end(),
              [](CatalogEntry const & x, CatalogEntry const & y) { return x.D > y.D; });
    return cat;
}

std::vector<std::int64_t> catalog_omissions(ClassNumberCatalog const & catalog,
                                            std::int64_t ceiling)
{
    std::vector<std::int64_t> missing;
    for (std::int64_t D = -3; D >= -ceiling; --D) {
        std::int64_t r = mod<std::int64_t>(D, 4);
        if (r != 0 && r != 1)
            continue;
        if (class_number(D) <= catalog.bound && catalog.find(D) == nullptr)
            missing.push_back(-D);
    }
    return missing;
}

nlohmann::ordered_json catalog_to_json(ClassNumberCatalog const & catalog)
{
    nlohmann::ordered_json j;
    j["format"] = "terqf-class-catalog";
    j["version"] = 1;
    j["bound"] = catalog.bound;
    j["entries"] = nlohmann::ordered_json::array();
    for (auto const & e : catalog.entries) {
        nlohmann::ordered_json row;
        row["D"] = e.D;
        row["h"] = e.h;
        row["structure"] = e.label();
        j["entries"].push_back(row);
    }
    return j;
}

namespace {

std::vector<std::int64_t> parse_label(std::string const & label)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(label);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part.size() < 2 || part[0] != 'Z')
            throw ParseError("bad structure label '" + label + "'");
        out.push_back(std::stoll(part.substr(1)));
    }
    if (out == std::vector<std::int64_t>{1})
        out.clear();
    return out;
}

}  // namespace

ClassNumberCatalog catalog_from_json(nlohmann::json const & j)
{
    try {
        if (j.at("format") != "terqf-class-catalog" || j.at("version") != 1)
            throw ParseError("unsupported catalog format or version");
        ClassNumberCatalog cat;
        cat.bound = j.at("bound").get<int>();
        for (auto const & row : j.at("entries"))
            cat.entries.push_back({row.at("D").get<std::int64_t>(),
                                   row.at("h").get<std::int64_t>(),
                                   parse_label(row.at("structure").get<std::string>())});
        return cat;
    } catch (nlohmann::json::exception const & ex) {
        throw ParseError(std::string("malformed catalog: ") + ex.what());
    }
}

}  // namespace terqf
