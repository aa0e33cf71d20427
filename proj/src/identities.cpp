#include "terqf/identities.hpp"

#include <algorithm>
#include <set>

#include "terqf/arith.hpp"
#include "terqf/errors.hpp"

namespace terqf {

QSeries eta_coefficients(std::int64_t N)
{
    if (N < 0)
        throw PreconditionError("negative truncation");
    QSeries e(N);
    // sum over k in Z of (-1)^k q^{k(3k-1)/2}
    for (std::int64_t k = 0;; ++k) {
        std::int64_t sign = k % 2 ? -1 : 1;
        std::int64_t p1 = k * (3 * k - 1) / 2;
        std::int64_t p2 = k * (3 * k + 1) / 2;
        if (p1 > N)
            break;
        e.at(p1) += sign;
        if (k > 0 && p2 <= N)
            e.at(p2) += sign;
    }
    return e;
}

QSeries eta_product(std::vector<std::pair<std::int64_t, int>> const & factors,
                    std::int64_t shift, std::int64_t N)
{
    if (shift < 0 || N < 0)
        throw PreconditionError("eta product needs shift >= 0 and N >= 0");
    if (shift > N)
        return QSeries(N);
    std::int64_t M = N - shift;
    QSeries prod = QSeries::one(M);
    for (auto const & [t, e] : factors) {
        if (t < 1 || e < 1)
            throw PreconditionError("eta factors need positive dilation and exponent");
        QSeries E = eta_coefficients(M / t).dilated(t).truncated(M);
        for (int i = 0; i < e; ++i)
            prod = prod * E;
    }
    return prod.shifted(shift);
}

SeriesSource SeriesSource::theta(TernaryForm const & f)
{
    SeriesSource s;
    s.kind = Kind::form_theta;
    s.form = f;
    return s;
}

SeriesSource SeriesSource::polynomial_theta(QuadraticPolynomial const & p)
{
    SeriesSource s;
    s.kind = Kind::polynomial;
    s.poly = p;
    return s;
}

SeriesSource SeriesSource::congruence_theta(QuadraticPolynomial const & p, std::int64_t modulus,
                                            std::vector<std::array<std::int64_t, 3>> residues)
{
    if (modulus < 1)
        throw PreconditionError("congruence modulus must be positive");
    SeriesSource s = polynomial_theta(p);
    s.modulus = modulus;
    std::sort(residues.begin(), residues.end());
    s.residues = std::move(residues);
    return s;
}

SeriesSource SeriesSource::eta(std::int64_t scalar, std::int64_t shift,
                               std::vector<std::pair<std::int64_t, int>> factors)
{
    SeriesSource s;
    s.kind = Kind::eta_product;
    s.eta_scalar = scalar;
    s.eta_shift = shift;
    s.eta_factors = std::move(factors);
    return s;
}

SeriesSource SeriesSource::nothing()
{
    return {};
}

SeriesSource SeriesSource::sum(std::vector<WeightedSource> terms)
{
    SeriesSource s;
    s.kind = Kind::combination;
    s.terms = std::move(terms);
    return s;
}

QSeries SeriesSource::series(std::int64_t N) const
{
    switch (kind) {
    case Kind::form_theta:
        return theta_coefficients(form, N);
    case Kind::polynomial: {
        QSeries out(N);
        std::set<std::array<std::int64_t, 3>> allowed(residues.begin(), residues.end());
        for_each_point_up_to(poly, N, [&](Vec3 const & v, std::int64_t value) {
            if (modulus > 0
                && !allowed.count({mod(v[0], modulus), mod(v[1], modulus), mod(v[2], modulus)}))
                return;
            if (value < 0)
                throw PreconditionError("polynomial takes negative values");
            out.at(value) += 1;
        });
        return out;
    }
    case Kind::eta_product:
        return eta_product(eta_factors, eta_shift, N).scaled(eta_scalar);
    case Kind::zero:
        return QSeries(N);
    case Kind::combination: {
        QSeries out(N);
        for (auto const & t : terms)
            out = out + t.source.series(N).scaled(t.weight);
        return out;
    }
    }
    throw InconsistencyError("unknown series kind");
}

namespace {

std::string poly_string(QuadraticPolynomial const & p)
{
    return "Q(" + format_form(p.quadratic) + ")+" + std::to_string(p.g) + "x+"
           + std::to_string(p.h) + "y+" + std::to_string(p.i) + "z+" + std::to_string(p.k);
}

}  // namespace

std::string SeriesSource::key() const
{
    switch (kind) {
    case Kind::form_theta:
        return "theta[" + format_form(form) + "]";
    case Kind::polynomial: {
        std::string s = "poly[" + poly_string(poly);
        if (modulus > 0) {
            s += " | mod " + std::to_string(modulus) + ":";
            for (auto const & r : residues)
                s += " (" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ","
                     + std::to_string(r[2]) + ")";
        }
        return s + "]";
    }
    case Kind::eta_product: {
        std::string s = "eta[" + std::to_string(eta_scalar) + " q^" + std::to_string(eta_shift);
        for (auto const & [t, e] : eta_factors)
            s += " E(q^" + std::to_string(t) + ")^" + std::to_string(e);
        return s + "]";
    }
    case Kind::zero:
        return "zero";
    case Kind::combination: {
        std::string s = "sum[";
        for (std::size_t i = 0; i < terms.size(); ++i)
            s += (i ? " + " : "") + std::to_string(terms[i].weight) + "*" + terms[i].source.key();
        return s + "]";
    }
    }
    return "?";
}

nlohmann::ordered_json SeriesSource::to_json() const
{
    nlohmann::ordered_json j;
    switch (kind) {
    case Kind::form_theta:
        j["kind"] = "form_theta";
        j["form"] = format_form(form);
        break;
    case Kind::polynomial:
        j["kind"] = "polynomial";
        j["quadratic"] = format_form(poly.quadratic);
        j["linear"] = {poly.g, poly.h, poly.i};
        j["constant"] = poly.k;
        if (modulus > 0) {
            j["modulus"] = modulus;
            j["residues"] = residues;
        }
        break;
    case Kind::eta_product:
        j["kind"] = "eta_product";
        j["scalar"] = eta_scalar;
        j["shift"] = eta_shift;
        j["factors"] = nlohmann::ordered_json::array();
        for (auto const & [t, e] : eta_factors)
            j["factors"].push_back({{"dilation", t}, {"exponent", e}});
        break;
    case Kind::zero:
        j["kind"] = "zero";
        break;
    case Kind::combination:
        j["kind"] = "combination";
        j["terms"] = nlohmann::ordered_json::array();
        for (auto const & t : terms)
            j["terms"].push_back({{"weight", t.weight}, {"source", t.source.to_json()}});
        break;
    }
    return j;
}

namespace {

nlohmann::ordered_json term_json(SeriesTerm const & t)
{
    nlohmann::ordered_json j;
    j["coefficient"] = t.coefficient;
    j["step"] = t.step;
    j["offset"] = t.offset;
    j["source"] = t.source.to_json();
    return j;
}

std::int64_t required_truncation(SeriesTerm const & t, std::int64_t N)
{
    if (t.step < 1 || t.offset < 0)
        throw PreconditionError("bad progression in relation");
    return t.step * N + t.offset;
}

}  // namespace

nlohmann::ordered_json ThetaRelation::to_json() const
{
    nlohmann::ordered_json j;
    j["name"] = name;
    j["anchor"] = anchor;
    j["lhs"] = term_json(lhs);
    j["rhs"] = term_json(rhs);
    return j;
}

RelationVerdict compare_terms(SeriesTerm const & lhs, QSeries const & lhs_series,
                              SeriesTerm const & rhs, QSeries const & rhs_series,
                              std::int64_t N)
{
    if (lhs_series.truncation() < required_truncation(lhs, N)
        || rhs_series.truncation() < required_truncation(rhs, N))
        throw PreconditionError("series truncation too small to verify to N = "
                                + std::to_string(N));
    RelationVerdict v;
    v.checked_to = N;
    for (std::int64_t n = 0; n <= N; ++n) {
        std::int64_t l = lhs.coefficient * lhs_series[lhs.step * n + lhs.offset];
        std::int64_t r = rhs.coefficient * rhs_series[rhs.step * n + rhs.offset];
        if (l != r) {
            v.holds = false;
            v.index = n;
            v.lhs_value = l;
            v.rhs_value = r;
            return v;
        }
    }
    return v;
}

QSeries const & SeriesCache::get(SeriesSource const & source, std::int64_t N)
{
    std::string k = source.key();
    auto it = cache_.find(k);
    if (it != cache_.end() && it->second.truncation() >= N)
        return it->second;
    QSeries s = source.series(N);
    cache_.insert_or_assign(k, std::move(s));
    return cache_.at(k);
}

RelationVerdict verify_relation(ThetaRelation const & rel, std::int64_t N, SeriesCache & cache)
{
    if (N < 0)
        throw PreconditionError("negative verification bound");
    QSeries lhs = cache.get(rel.lhs.source, required_truncation(rel.lhs, N));
    QSeries const & rhs = cache.get(rel.rhs.source, required_truncation(rel.rhs, N));
    return compare_terms(rel.lhs, lhs, rel.rhs, rhs, N);
}

RelationVerdict verify_relation(ThetaRelation const & rel, std::int64_t N)
{
    SeriesCache cache;
    return verify_relation(rel, N, cache);
}

nlohmann::ordered_json catalog_relations_to_json(std::vector<ThetaRelation> const & rels,
                                                 std::vector<RelationVerdict> const & verdicts)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rels.size(); ++i) {
        nlohmann::ordered_json row = rels[i].to_json();
        if (i < verdicts.size()) {
            auto const & v = verdicts[i];
            row["holds"] = v.holds;
            row["verified_to"] = v.holds ? v.checked_to : (v.index ? *v.index - 1 : -1);
            if (!v.holds)
                row["counterexample"] = {{"n", *v.index}, {"lhs", v.lhs_value}, {"rhs", v.rhs_value}};
        }
        j.push_back(row);
    }
    return j;
}

namespace {

TernaryForm const sum3{1, 1, 1, 0, 0, 0};

std::string progression_string(std::int64_t step, std::int64_t offset)
{
    std::string s;
    if (step != 1)
        s = std::to_string(step);
    s += "n";
    if (offset)
        s += "+" + std::to_string(offset);
    return s;
}

SeriesTerm R(TernaryForm const & f, std::int64_t step, std::int64_t offset,
             std::int64_t coefficient = 1)
{
    return {coefficient, SeriesSource::theta(f), step, offset};
}

SeriesTerm Zero()
{
    return {1, SeriesSource::nothing(), 1, 0};
}

std::string describe(SeriesTerm const & t, std::string const & label)
{
    std::string s = t.coefficient != 1 ? std::to_string(t.coefficient) + " " : "";
    if (t.source.kind == SeriesSource::Kind::form_theta)
        return s + "R(" + format_form(t.source.form) + "; "
               + progression_string(t.step, t.offset) + ")";
    if (t.source.kind == SeriesSource::Kind::zero)
        return "0";
    return s + "[q^(" + progression_string(t.step, t.offset) + ")] " + label;
}

ThetaRelation relation(std::string name, SeriesTerm lhs, SeriesTerm rhs,
                       std::string const & lhs_label = "", std::string const & rhs_label = "")
{
    ThetaRelation r;
    r.name = std::move(name);
    r.anchor = describe(lhs, lhs_label) + " = " + describe(rhs, rhs_label);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

/// Whole series equality sum_i w_i source_i = sum_j w_j source_j.
ThetaRelation series_relation(std::string name, SeriesSource lhs, std::string lhs_label,
                              SeriesSource rhs, std::string rhs_label, std::int64_t lhs_coeff = 1)
{
    ThetaRelation r;
    r.name = std::move(name);
    r.anchor = (lhs_coeff != 1 ? std::to_string(lhs_coeff) + " " : std::string()) + lhs_label
               + " = " + rhs_label;
    r.lhs = {lhs_coeff, std::move(lhs), 1, 0};
    r.rhs = {1, std::move(rhs), 1, 0};
    return r;
}

QuadraticPolynomial P(TernaryForm f, std::int64_t g = 0, std::int64_t h = 0, std::int64_t i = 0,
                      std::int64_t k = 0)
{
    return {f, g, h, i, k};
}

void kaplansky(std::vector<ThetaRelation> & out)
{
    TernaryForm k112{1, 1, 2, 0, 0, 0}, k122{1, 2, 2, 0, 0, 0}, k124{1, 2, 4, 0, 0, 0};
    out.push_back(relation("112-even", R(k112, 2, 0), R(sum3, 1, 0)));
    out.push_back(relation("112-odd", R(k112, 2, 1, 3), R(sum3, 4, 2)));
    out.push_back(relation("122-0mod4", R(k122, 4, 0), R(sum3, 1, 0)));
    out.push_back(relation("122-1mod4", R(k122, 4, 1, 3), R(sum3, 4, 1)));
    out.push_back(relation("122-2mod4", R(k122, 4, 2, 3), R(sum3, 4, 2)));
    out.push_back(relation("122-3mod4", R(k122, 4, 3), R(sum3, 4, 3)));
    out.push_back(relation("124-0mod8", R(k124, 8, 0), R(sum3, 1, 0)));
    out.push_back(relation("124-2mod8", R(k124, 8, 2, 3), R(sum3, 4, 1)));
    out.push_back(relation("124-4mod8", R(k124, 8, 4, 3), R(sum3, 4, 2)));
    out.push_back(relation("124-6mod8", R(k124, 8, 6), R(sum3, 4, 3)));
    out.push_back(relation("124-odd", R(k124, 2, 1, 6), R(sum3, 4, 2)));
}

void sum_of_three_squares(std::vector<ThetaRelation> & out)
{
    out.push_back(relation("111-scale4", R(sum3, 4, 0), R(sum3, 1, 0)));
    out.push_back(relation("111-7mod8", R(sum3, 8, 7), Zero()));
}

void form_111111(std::vector<ThetaRelation> & out)
{
    TernaryForm f{1, 1, 1, 1, 1, 1};
    QuadraticPolynomial q = P(f);
    auto parity = [&](auto pred) {
        return SeriesSource::congruence_theta(q, 2, residue_classes(2, pred));
    };
    SeriesSource all_equal = parity([](auto x, auto y, auto z) { return x == y && y == z; });
    SeriesSource mix_z = parity([](auto x, auto y, auto z) { return x == y && y != z; });
    SeriesSource mix_y = parity([](auto x, auto y, auto z) { return x == z && y != z; });
    SeriesSource mix_x = parity([](auto x, auto y, auto z) { return y == z && x != z; });
    SeriesSource doubled = SeriesSource::theta({2, 2, 2, 0, 0, 0});
    SeriesSource shifted = SeriesSource::polynomial_theta(P({2, 2, 2, 0, 0, 0}, 0, 2, 2, 1));
    std::string const fs = "sum q^{x^2+y^2+z^2+yz+xz+xy}";
    std::string const dbl = "sum q^{2(x^2+y^2+z^2)}";
    std::string const sh = "q sum q^{2(x^2+y^2+z^2)+2(y+z)}";

    out.push_back(series_relation("111111-mixed-parity-xz", mix_z, fs + " over x=y!=z (mod 2)",
                                  mix_y, fs + " over x=z!=y (mod 2)"));
    out.push_back(series_relation("111111-mixed-parity-yz", mix_z, fs + " over x=y!=z (mod 2)",
                                  mix_x, fs + " over y=z!=x (mod 2)"));
    out.push_back(series_relation(
        "111111-parity-split", SeriesSource::theta(f), fs,
        SeriesSource::sum({{1, all_equal}, {3, mix_z}}),
        fs + " over x=y=z (mod 2) + 3 " + fs + " over x=y!=z (mod 2)"));
    out.push_back(series_relation(
        "111111-parity-classes", SeriesSource::theta(f), fs,
        SeriesSource::sum({{1, all_equal}, {1, mix_x}, {1, mix_y}, {1, mix_z}}),
        "sum of the four parity-class subsums"));
    out.push_back(series_relation("111111-equal-parity", all_equal, fs + " over x=y=z (mod 2)",
                                  doubled, dbl));
    out.push_back(series_relation("111111-mixed-parity", mix_z, fs + " over x=y!=z (mod 2)",
                                  shifted, sh));
    out.push_back(series_relation("111111-theta", SeriesSource::theta(f), fs,
                                  SeriesSource::sum({{1, doubled}, {3, shifted}}),
                                  dbl + " + 3" + sh));
    out.push_back(relation("111111-odd", R(f, 2, 1), R(sum3, 4, 2)));
    out.push_back(relation("111111-even", R(f, 2, 0), R(sum3, 1, 0)));
    out.push_back(relation("111111-scale4", R(f, 4, 0), R(f, 1, 0)));
}

void form_333(std::vector<ThetaRelation> & out)
{
    TernaryForm g{3, 3, 3, -2, 2, 2};
    QuadraticPolynomial q = P(g);
    SeriesSource even = SeriesSource::congruence_theta(
        q, 2, residue_classes(2, [](auto x, auto y, auto z) { return (x + y + z) % 2 == 0; }));
    SeriesSource odd = SeriesSource::congruence_theta(
        q, 2, residue_classes(2, [](auto x, auto y, auto z) { return (x + y + z) % 2 == 1; }));
    SeriesSource quadrupled = SeriesSource::theta({4, 4, 4, 0, 0, 0});
    SeriesSource odd_squares = SeriesSource::polynomial_theta(P({4, 4, 4, 0, 0, 0}, 4, 4, 4, 3));
    std::string const gs = "sum q^{3x^2+3y^2+3z^2-2yz+2xz+2xy}";
    std::string const quad = "sum q^{4(x^2+y^2+z^2)}";
    std::string const os = "sum q^{(2x+1)^2+(2y+1)^2+(2z+1)^2}";

    out.push_back(series_relation("333-even-sum", even, gs + " over x+y+z even", quadrupled, quad));
    out.push_back(series_relation("333-odd-sum", odd, gs + " over x+y+z odd", odd_squares, os));
    out.push_back(series_relation("333-theta", SeriesSource::theta(g), gs,
                                  SeriesSource::sum({{1, quadrupled}, {1, odd_squares}}),
                                  quad + " + " + os));
    out.push_back(relation("333-0mod4", R(g, 4, 0), R(sum3, 1, 0)));
    out.push_back(relation("333-3mod8", R(g, 8, 3), R(sum3, 8, 3)));
    for (std::int64_t r : {1, 2, 5, 6, 7})
        out.push_back(relation("333-" + std::to_string(r) + "mod8", R(g, 8, r), Zero()));
    out.push_back(relation("333-scale4", R(g, 16, 0), R(g, 4, 0)));
}

void form_133200(std::vector<ThetaRelation> & out)
{
    TernaryForm h{1, 3, 3, 2, 0, 0};
    QuadraticPolynomial k112 = P({1, 1, 2, 0, 0, 0});
    SeriesSource y_eq_z = SeriesSource::congruence_theta(
        k112, 2, residue_classes(2, [](auto, auto y, auto z) { return y == z; }));
    SeriesSource yz_odd = SeriesSource::congruence_theta(
        k112, 2, residue_classes(2, [](auto, auto y, auto z) { return y == 1 && z == 1; }));
    SeriesSource all_odd = SeriesSource::congruence_theta(
        k112, 2, residue_classes(2, [](auto x, auto y, auto z) { return x + y + z == 3; }));
    SeriesSource x_odd_124 = SeriesSource::congruence_theta(
        P({1, 2, 4, 0, 0, 0}), 2, residue_classes(2, [](auto x, auto, auto) { return x == 1; }));
    SeriesSource x_odd_4_8_16 = SeriesSource::congruence_theta(
        P({4, 8, 16, 0, 0, 0}), 2, residue_classes(2, [](auto x, auto, auto) { return x == 1; }));
    SeriesSource odd_odd_even = SeriesSource::congruence_theta(
        P({2, 2, 2, 0, 0, 0}), 2,
        residue_classes(2, [](auto x, auto y, auto z) { return x == 1 && y == 1 && z == 0; }));
    std::string const s112 = "sum q^{x^2+y^2+2z^2}";

    out.push_back(series_relation("133200-theta", SeriesSource::theta(h),
                                  "sum q^{x^2+3y^2+3z^2+2yz}", y_eq_z, s112 + " over y=z (mod 2)"));
    out.push_back(series_relation(
        "133200-split-odd", y_eq_z, s112 + " over y=z (mod 2)",
        SeriesSource::sum({{1, SeriesSource::theta({1, 4, 8, 0, 0, 0})}, {1, yz_odd}}),
        "sum q^{x^2+4y^2+8z^2} + " + s112 + " over y,z odd"));
    out.push_back(series_relation(
        "133200-split-x", y_eq_z, s112 + " over y=z (mod 2)",
        SeriesSource::sum({{1, x_odd_124}, {1, SeriesSource::theta({4, 4, 8, 0, 0, 0})},
                           {1, all_odd}}),
        "sum q^{x^2+2y^2+4z^2} over x odd + sum q^{4(x^2+y^2+2z^2)} + " + s112
            + " over x,y,z odd"));
    out.push_back(series_relation(
        "133200-collapse", y_eq_z, s112 + " over y=z (mod 2)",
        SeriesSource::sum({{2, x_odd_124}, {2, SeriesSource::theta({8, 8, 8, 0, 0, 0})},
                           {3, all_odd}}),
        "2 sum q^{x^2+2y^2+4z^2} over x odd + 2 sum q^{8(x^2+y^2+z^2)} + 3 " + s112
            + " over x,y,z odd",
        2));
    out.push_back(series_relation("133200-odd-112", x_odd_4_8_16,
                                  "sum q^{4(x^2+2y^2+4z^2)} over x odd", all_odd,
                                  s112 + " over x,y,z odd", 4));
    out.push_back(series_relation("133200-odd-222", all_odd, s112 + " over x,y,z odd",
                                  SeriesSource::sum({{2, odd_odd_even}}),
                                  "2 sum q^{2(x^2+y^2+z^2)} over x,y odd, z even"));
    out.push_back(relation("133200-0mod8", R(h, 8, 0), R(sum3, 1, 0)));
    out.push_back(relation("133200-4mod8", R(h, 8, 4), R(sum3, 4, 2)));
    out.push_back(relation("133200-2mod4", R(h, 4, 2), Zero()));
    out.push_back(relation("133200-odd", R(h, 2, 1, 6), R(sum3, 4, 2)));
}

void form_4096(std::vector<ThetaRelation> & out)
{
    TernaryForm f{5, 13, 20, -12, 4, 2};
    out.push_back(relation("4096-0mod64", R(f, 64, 0), R(sum3, 1, 0)));
    out.push_back(relation("4096-32mod64", R(f, 64, 32, 3), R(sum3, 64, 32)));
    out.push_back(relation("4096-16mod64", R(f, 64, 16, 3), R(sum3, 64, 16)));
    out.push_back(relation("4096-48mod64", R(f, 64, 48), R(sum3, 64, 48)));
    out.push_back(relation("4096-20mod32", R(f, 32, 20, 3), R(sum3, 8, 5)));
    out.push_back(relation("4096-5mod8", R(f, 8, 5, 12), R(sum3, 8, 5)));
    for (auto [step, r] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {8, 1}, {8, 2}, {8, 3}, {8, 6}, {8, 7}, {32, 4}, {32, 12}, {32, 28}, {16, 8}})
        out.push_back(relation("4096-" + std::to_string(r) + "mod" + std::to_string(step),
                               R(f, step, r), Zero()));
}

void form_8192(std::vector<ThetaRelation> & out)
{
    TernaryForm g{7, 15, 23, 10, 2, 6};
    out.push_back(relation("8192-0mod128", R(g, 128, 0), R(sum3, 1, 0)));
    out.push_back(relation("8192-64mod128", R(g, 128, 64, 3), R(sum3, 4, 2)));
    out.push_back(relation("8192-32mod128", R(g, 128, 32, 3), R(sum3, 4, 1)));
    out.push_back(relation("8192-96mod128", R(g, 128, 96), R(sum3, 4, 3)));
    out.push_back(relation("8192-16mod32", R(g, 32, 16, 6), R(sum3, 4, 2)));
    out.push_back(relation("8192-28mod32", R(g, 32, 28, 6), R(sum3, 16, 14)));
    out.push_back(relation("8192-7mod8", R(g, 8, 7, 24), R(sum3, 16, 14)));
    for (auto [step, r] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {8, 1}, {8, 3}, {8, 5}, {4, 2}, {32, 4}, {32, 12}, {32, 20}, {16, 8}})
        out.push_back(relation("8192-" + std::to_string(r) + "mod" + std::to_string(step),
                               R(g, step, r), Zero()));
}

void discriminant_36(std::vector<ThetaRelation> & out)
{
    TernaryForm a{1, 3, 3, 0, 0, 0}, b{1, 1, 3, 0, 0, 0};
    out.push_back(relation("133-113-triple", R(a, 3, 0), R(b, 1, 0)));
    out.push_back(relation("113-133-triple", R(b, 3, 0), R(a, 1, 0)));
    out.push_back(relation("133-scale9", R(a, 9, 0), R(a, 1, 0)));
    out.push_back(relation("113-scale9", R(b, 9, 0), R(b, 1, 0)));
    out.push_back(relation("133-2mod3", R(a, 3, 2), Zero()));
}

void non_idoneal(std::vector<ThetaRelation> & out)
{
    TernaryForm h{1, 3, 3, 1, 0, 1}, t{1, 1, 11, 1, 1, 1};
    out.push_back(relation("133101-0mod32", R(h, 32, 0), R(sum3, 1, 0)));
    out.push_back(relation("133101-16mod32", R(h, 32, 16), R(sum3, 4, 2)));
    out.push_back(relation("133101-8mod16", R(h, 16, 8), Zero()));
    out.push_back(relation("133101-4mod8", R(h, 8, 4, 2), R(sum3, 4, 2)));
    out.push_back(relation("133101-2mod4", R(h, 4, 2), Zero()));
    out.push_back(relation("133101-3mod4", R(h, 4, 3, 4), R(sum3, 8, 6)));
    for (std::int64_t r : {0, 2, 3})
        out.push_back(relation("genus-mates-" + std::to_string(r) + "mod4", R(t, 4, r),
                               R(h, 4, r)));
    {
        SeriesTerm lhs{1,
                       SeriesSource::sum({{3, SeriesSource::theta(h)}, {1, SeriesSource::theta(t)}}),
                       4, 1};
        ThetaRelation r;
        r.name = "genus-mates-1mod4";
        r.anchor = "3 R(1,3,3,1,0,1; 4n+1) + R(1,1,11,1,1,1; 4n+1) = R(1,1,1,0,0,0; 8n+2)";
        r.lhs = lhs;
        r.rhs = R(sum3, 8, 2);
        out.push_back(r);
    }
    out.push_back(series_relation(
        "genus-mates-eta",
        SeriesSource::sum({{1, SeriesSource::theta(t)}, {-1, SeriesSource::theta(h)}}),
        "theta(1,1,11,1,1,1) - theta(1,3,3,1,0,1)",
        SeriesSource::eta(4, 1, {{4, 2}, {16, 1}}), "4q E(q^4)^2 E(q^16)"));
}

}  // namespace

std::vector<ThetaRelation> builtin_catalog()
{
    std::vector<ThetaRelation> out;
    kaplansky(out);
    sum_of_three_squares(out);
    form_111111(out);
    form_333(out);
    form_133200(out);
    form_4096(out);
    form_8192(out);
    discriminant_36(out);
    non_idoneal(out);
    return out;
}

}  // namespace terqf
