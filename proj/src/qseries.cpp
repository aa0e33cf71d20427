#include "terqf/qseries.hpp"

#include <algorithm>
#include <string>

#include "terqf/errors.hpp"

namespace terqf {

QSeries::QSeries(std::int64_t truncation)
{
    if (truncation < 0)
        throw PreconditionError("negative truncation");
    coeffs_.assign(static_cast<std::size_t>(truncation) + 1, 0);
}

QSeries::QSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw PreconditionError("empty coefficient vector");
}

QSeries QSeries::one(std::int64_t truncation)
{
    QSeries s(truncation);
    s.coeffs_[0] = 1;
    return s;
}

std::int64_t QSeries::operator[](std::int64_t n) const
{
    if (n < 0 || n > truncation())
        throw PreconditionError("coefficient index " + std::to_string(n)
                                + " outside truncation "
                                + std::to_string(truncation()));
    return coeffs_[static_cast<std::size_t>(n)];
}

std::int64_t & QSeries::at(std::int64_t n)
{
    if (n < 0 || n > truncation())
        throw PreconditionError("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

QSeries QSeries::truncated(std::int64_t n) const
{
    if (n > truncation())
        throw PreconditionError("cannot extend a truncated series");
    return QSeries(std::vector<std::int64_t>(
        coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

QSeries QSeries::scaled(std::int64_t k) const
{
    QSeries r = *this;
    for (auto & c : r.coeffs_)
        c *= k;
    return r;
}

QSeries QSeries::dilated(std::int64_t t) const
{
    if (t < 1)
        throw PreconditionError("dilation factor must be positive");
    // c_{N+1} is unknown, so q^{t(N+1)} is the first unknown term.
    QSeries r(t * (truncation() + 1) - 1);
    for (std::int64_t n = 0; n <= truncation(); ++n)
        r.coeffs_[static_cast<std::size_t>(n * t)] = coeffs_[static_cast<std::size_t>(n)];
    return r;
}

QSeries QSeries::shifted(std::int64_t s) const
{
    if (s < 0)
        throw PreconditionError("negative shift");
    QSeries r(truncation() + s);
    std::copy(coeffs_.begin(), coeffs_.end(),
              r.coeffs_.begin() + static_cast<std::ptrdiff_t>(s));
    return r;
}

QSeries QSeries::progression(std::int64_t step, std::int64_t offset) const
{
    if (step < 1 || offset < 0)
        throw PreconditionError("bad arithmetic progression");
    if (offset > truncation())
        throw PreconditionError("progression offset beyond truncation");
    std::int64_t len = (truncation() - offset) / step;
    QSeries r(len);
    for (std::int64_t n = 0; n <= len; ++n)
        r.coeffs_[static_cast<std::size_t>(n)] =
            coeffs_[static_cast<std::size_t>(step * n + offset)];
    return r;
}

QSeries operator+(QSeries const & x, QSeries const & y)
{
    QSeries r(std::min(x.truncation(), y.truncation()));
    for (std::int64_t n = 0; n <= r.truncation(); ++n)
        r.at(n) = x[n] + y[n];
    return r;
}

QSeries operator-(QSeries const & x, QSeries const & y)
{
    return x + y.scaled(-1);
}

QSeries operator*(QSeries const & x, QSeries const & y)
{
    std::int64_t N = std::min(x.truncation(), y.truncation());
    QSeries r(N);
    auto const & xc = x.coefficients();
    auto const & yc = y.coefficients();
    for (std::int64_t i = 0; i <= N; ++i) {
        std::int64_t xi = xc[static_cast<std::size_t>(i)];
        if (xi == 0)
            continue;
        for (std::int64_t j = 0; i + j <= N; ++j)
            r.at(i + j) += xi * yc[static_cast<std::size_t>(j)];
    }
    return r;
}

}  // namespace terqf
