#include "doctest.h"
#include "terqf/errors.hpp"
#include "terqf/identities.hpp"
#include "terqf/qseries.hpp"

using namespace terqf;

TEST_CASE("truncation propagates")
{
    QSeries a(std::vector<std::int64_t>{1, 1, 1, 1, 1});
    QSeries b(std::vector<std::int64_t>{1, 2, 3});
    CHECK((a + b).truncation() == 2);
    CHECK((a * b).truncation() == 2);
    CHECK(a.dilated(3).truncation() == 14);
    CHECK(a.shifted(2).truncation() == 6);
    CHECK(a.dilated(2)[4] == 1);
    CHECK(a.dilated(2)[3] == 0);
    CHECK_THROWS(a[5]);
}

TEST_CASE("arithmetic")
{
    QSeries a(std::vector<std::int64_t>{1, -1, 0, 0});
    QSeries geom(std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(a * geom == QSeries::one(3));
    CHECK((geom - geom) == QSeries(3));
    CHECK(geom.scaled(3)[2] == 3);
    QSeries c(std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7});
    auto prog = c.progression(2, 1);
    CHECK(prog[0] == 1);
    CHECK(prog[3] == 7);
    CHECK(prog.truncation() == 3);
}

TEST_CASE("pentagonal eta agrees with the product")
{
    const std::int64_t N = 200;
    QSeries prod = QSeries::one(N);
    for (std::int64_t k = 1; k <= N; ++k) {
        QSeries factor = QSeries::one(N);
        factor.at(k) = -1;
        prod = prod * factor;
    }
    CHECK(eta_coefficients(N) == prod);
}

TEST_CASE("eta products: Jacobi's cube")
{
    // E(q)^3 = sum (-1)^k (2k+1) q^{k(k+1)/2}
    const std::int64_t N = 300;
    auto cube = eta_product({{1, 3}}, 0, N);
    QSeries expected(N);
    for (std::int64_t k = 0; k * (k + 1) / 2 <= N; ++k)
        expected.at(k * (k + 1) / 2) = (k % 2 ? -1 : 1) * (2 * k + 1);
    CHECK(cube == expected);
    auto shifted = eta_product({{2, 1}}, 3, N);
    CHECK(shifted[3] == 1);
    CHECK(shifted[5] == -1);
    CHECK_THROWS(eta_product({{1, -1}}, 0, N));
}
