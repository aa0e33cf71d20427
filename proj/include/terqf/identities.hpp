#ifndef TERQF_IDENTITIES_HPP
#define TERQF_IDENTITIES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "terqf/forms.hpp"
#include "terqf/qseries.hpp"

namespace terqf {

/// prod_{n>=1} (1 - q^n) to q^N, by the pentagonal number theorem.
QSeries eta_coefficients(std::int64_t N);

/// q^shift * prod E(q^t)^e over the (t, e) pairs, truncated at N.
QSeries eta_product(std::vector<std::pair<std::int64_t, int>> const & factors,
                    std::int64_t shift, std::int64_t N);

struct WeightedSource;

/// A q-series given declaratively.
struct SeriesSource
{
    enum class Kind
    {
        form_theta,   // sum q^{form(v)}
        polynomial,   // sum q^{P(v)}, optionally over v in given classes mod M
        eta_product,  // scalar * q^shift * prod E(q^t)^e
        zero,
        combination,  // sum of weighted sources
    };

    Kind kind = Kind::zero;
    TernaryForm form;
    QuadraticPolynomial poly;
    std::int64_t modulus = 0;  // 0: no congruence filter
    std::vector<std::array<std::int64_t, 3>> residues;
    std::vector<std::pair<std::int64_t, int>> eta_factors;
    std::int64_t eta_scalar = 1;
    std::int64_t eta_shift = 0;
    std::vector<WeightedSource> terms;

    static SeriesSource theta(TernaryForm const & f);
    static SeriesSource polynomial_theta(QuadraticPolynomial const & p);
    static SeriesSource congruence_theta(QuadraticPolynomial const & p, std::int64_t modulus,
                                         std::vector<std::array<std::int64_t, 3>> residues);
    static SeriesSource eta(std::int64_t scalar, std::int64_t shift,
                            std::vector<std::pair<std::int64_t, int>> factors);
    static SeriesSource nothing();
    static SeriesSource sum(std::vector<WeightedSource> terms);

    /// Exact series to q^N.
    QSeries series(std::int64_t N) const;
    std::string key() const;
    nlohmann::ordered_json to_json() const;
};

struct WeightedSource
{
    std::int64_t weight = 1;
    SeriesSource source;
};

/// All residue triples mod m satisfying a predicate, for congruence thetas.
template <typename Pred>
std::vector<std::array<std::int64_t, 3>> residue_classes(std::int64_t m, Pred && keep)
{
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y)
            for (std::int64_t z = 0; z < m; ++z)
                if (keep(x, y, z))
                    out.push_back({x, y, z});
    return out;
}

/// coefficient * [q^{step n + offset}] source, as a sequence in n.
struct SeriesTerm
{
    std::int64_t coefficient = 1;
    SeriesSource source;
    std::int64_t step = 1;
    std::int64_t offset = 0;
};

/// lhs(n) = rhs(n) for all n >= 0.
struct ThetaRelation
{
    std::string name;
    std::string anchor;  // the identity in words
    SeriesTerm lhs;
    SeriesTerm rhs;

    nlohmann::ordered_json to_json() const;
};

struct RelationVerdict
{
    bool holds = true;
    std::int64_t checked_to = 0;
    std::optional<std::int64_t> index;  // smallest failing n
    std::int64_t lhs_value = 0;
    std::int64_t rhs_value = 0;
};

/// Compares two precomputed series along their progressions for n <= N;
/// throws PreconditionError when a series is truncated below what N needs.
RelationVerdict compare_terms(SeriesTerm const & lhs, QSeries const & lhs_series,
                              SeriesTerm const & rhs, QSeries const & rhs_series,
                              std::int64_t N);

/// Caches series by source key; a longer cached series serves shorter requests.
class SeriesCache
{
    std::map<std::string, QSeries> cache_;

    public:
    QSeries const & get(SeriesSource const & source, std::int64_t N);
};

RelationVerdict verify_relation(ThetaRelation const & rel, std::int64_t N);
RelationVerdict verify_relation(ThetaRelation const & rel, std::int64_t N, SeriesCache & cache);

std::vector<ThetaRelation> builtin_catalog();

nlohmann::ordered_json catalog_relations_to_json(std::vector<ThetaRelation> const & rels,
                                                 std::vector<RelationVerdict> const & verdicts);

}  // namespace terqf

#endif
