#ifndef TERQF_QSERIES_HPP
#define TERQF_QSERIES_HPP

#include <cstdint>
#include <vector>

namespace terqf {

/// Integer power series c_0 + c_1 q + ... known exactly up to q^N.
///
/// Every operation propagates the validity bound: binary operations keep
/// the smaller one, dilation q -> q^t scales it, a shift by q^s moves it.
class QSeries
{
    std::vector<std::int64_t> coeffs_;  // size truncation()+1

    public:
    QSeries() : coeffs_(1, 0) {}
    explicit QSeries(std::int64_t truncation);
    explicit QSeries(std::vector<std::int64_t> coeffs);

    static QSeries one(std::int64_t truncation);

    std::int64_t truncation() const
    {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    std::vector<std::int64_t> const & coefficients() const { return coeffs_; }

    /// Coefficient of q^n; throws if n is beyond the truncation.
    std::int64_t operator[](std::int64_t n) const;
    std::int64_t & at(std::int64_t n);

    QSeries truncated(std::int64_t n) const;
    QSeries scaled(std::int64_t k) const;
    /// q -> q^t
    QSeries dilated(std::int64_t t) const;
    /// multiply by q^s
    QSeries shifted(std::int64_t s) const;
    /// n -> c_{A n + B}
    QSeries progression(std::int64_t step, std::int64_t offset) const;

    friend QSeries operator+(QSeries const & x, QSeries const & y);
    friend QSeries operator-(QSeries const & x, QSeries const & y);
    friend QSeries operator*(QSeries const & x, QSeries const & y);
    friend bool operator==(QSeries const & x, QSeries const & y) = default;
};

}  // namespace terqf

#endif
