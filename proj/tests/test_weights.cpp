#include "oracles.hpp"

#include "sshl/suite.hpp"
#include "sshl/weights.hpp"

#include <doctest.h>

using namespace sshl;
using oracle::rat;

namespace {

const Q kX = rat("1/4");
const Q kY = rat("1/5");

} // namespace

TEST_CASE("L matches the transcribed table on every label with I, K <= 6")
{
    for (int pt = 0; pt < kFixturePoints; ++pt) {
        const Params p = fixture_point(pt);
        for (int I = 0; I <= 6; ++I)
            for (int K = 0; K <= 6; ++K)
                for (int j = 0; j <= 1; ++j)
                    for (int l = 0; l <= 1; ++l) {
                        CHECK(L(I, j, K, l, kX, p) == oracle::table_L(I, j, K, l, kX, p.q, p.s));
                        CHECK(M(I, j, K, l, kX, p) == oracle::table_M(I, j, K, l, kX, p.q, p.s));
                    }
    }
}

TEST_CASE("L examples")
{
    const Params p = fixture_point(0);
    CHECK(L(0, 0, 0, 0, kX, p) == 1);
    CHECK(L(0, 0, 0, 0, rat("7/9"), p) == 1);
    for (int I = 0; I <= 4; ++I)
        CHECK(L(I, 0, I, 0, kX, p) == (1 - p.s * kX * oracle::power(p.q, I)) / (1 - p.s * kX));
    // (x - s q^2)/(1 - s x) = (11/36)/(9/8).
    CHECK(L(2, 1, 2, 1, kX, p) == rat("22/81"));
    CHECK(rat("11/36") / rat("9/8") == rat("22/81"));
}

TEST_CASE("M examples")
{
    const Params p = fixture_point(1);
    CHECK(M(0, 1, 0, 1, kX, p) == 1);
    CHECK(M(0, 1, 1, 0, kX, p) == kX * (1 - p.q) / (1 - p.s * kX));
    Params s0 = p;
    s0.s = 0;
    CHECK(M(0, 0, 0, 0, kX, s0) == kX);
}

TEST_CASE("Mstar table and the column-0 sentinel")
{
    const Params p = fixture_point(2);
    const Q d = 1 - p.s * kX;
    CHECK(Mstar(0, 0, 0, 0, kX, p) == 1);
    for (int I = 0; I <= 5; ++I) {
        const Q qi = oracle::power(p.q, I);
        CHECK(Mstar(I + 1, 1, I, 0, kX, p) == (1 - p.s * p.s * qi) / d);
        CHECK(Mstar(I, 0, I + 1, 1, kX, p) == kX * (1 - qi * p.q) / d);
        CHECK(Mstar(I, 0, I, 0, kX, p) == (1 - p.s * kX * qi) / d);
        CHECK(Mstar(I, 1, I, 1, kX, p) == (kX - p.s * qi) / d);
        CHECK(Mstar(I, 1, I + 1, 0, kX, p) == 0);
    }
    const Occ inf = Occ::infinite();
    for (int l = 0; l <= 1; ++l) {
        CHECK(Mstar(inf, 1, inf, l, kX, p) == (l ? kX : Q(1)));
        CHECK(Mstar(inf, 0, inf, l, kX, p) == (l ? kX : Q(1)));
    }
    CHECK(Mstar(inf, 0, 3, 0, kX, p) == 0);
}

TEST_CASE("L0 and M0 are the s = 0 specialisations")
{
    const Params p = fixture_point(0);
    Params s0 = p;
    s0.s = 0;
    for (int I = 0; I <= 6; ++I) {
        CHECK(L0(I, 1, I + 1, 0, kX, p) == 1 - oracle::power(p.q, I + 1));
        CHECK(M0(I, 1, I + 1, 0, kX, p) == kX * (1 - oracle::power(p.q, I + 1)));
        for (int K = 0; K <= 6; ++K)
            for (int j = 0; j <= 1; ++j)
                for (int l = 0; l <= 1; ++l) {
                    CHECK(L0(I, j, K, l, kX, p) == L(I, j, K, l, kX, s0));
                    CHECK(M0(I, j, K, l, kX, p) == M(I, j, K, l, kX, s0));
                }
    }
}

TEST_CASE("finite-occupation weights vanish off conservation")
{
    const Params p = fixture_point(1);
    for (int I = 0; I <= 6; ++I)
        for (int K = 0; K <= 6; ++K)
            for (int j = 0; j <= 1; ++j)
                for (int l = 0; l <= 1; ++l) {
                    if (I + j == K + l)
                        continue;
                    CHECK(L(I, j, K, l, kX, p) == 0);
                    CHECK(M(I, j, K, l, kX, p) == 0);
                }
    // Mstar is read downward: the top occupation enters.
    for (int I = 0; I <= 6; ++I)
        for (int K = 0; K <= 6; ++K)
            for (int j = 0; j <= 1; ++j)
                for (int l = 0; l <= 1; ++l)
                    if (K + j != I + l)
                        CHECK(Mstar(I, j, K, l, kX, p) == 0);
    CHECK(L(0, 2, 2, 0, kX, p) == 0);
    CHECK(M(1, 0, 0, 2, kX, p) == 0);
}

TEST_CASE("R table, stochasticity and conservation")
{
    for (int pt = 0; pt < kFixturePoints; ++pt) {
        const Params p = fixture_point(pt);
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 1; ++j) {
                Q sum = 0;
                for (int k = 0; k <= 1; ++k)
                    for (int l = 0; l <= 1; ++l) {
                        const Q w = R(i, j, k, l, kX, kY, p);
                        CHECK(w == oracle::table_R(i, j, k, l, kX, kY, p.q));
                        if (i + j != k + l)
                            CHECK(w == 0);
                        sum += w;
                    }
                CHECK(sum == 1);
            }
    }
    const Params p = fixture_point(0);
    const Q z = kX * kY;
    CHECK(R(0, 1, 0, 1, kX, kY, p) == (1 - z) / (1 - p.q * z));
    CHECK(R(0, 0, 1, 1, kX, kY, p) == 0);
}

TEST_CASE("Rstar table")
{
    const Params p = fixture_point(0);
    const Q z = kX * kY;
    CHECK(Rstar(1, 1, 1, 1, kX, kY, p) == p.q);
    CHECK(Rstar(0, 0, 0, 0, kX, kY, p) == 1);
    CHECK(Rstar(1, 0, 1, 0, kX, kY, p) == (1 - p.q * z) / (1 - z));
    CHECK(Rstar(1, 1, 0, 0, kX, kY, p) == (1 - p.q) / (1 - z));
    CHECK(Rstar(0, 0, 1, 1, kX, kY, p) == (1 - p.q) * z / (1 - z));
    CHECK(Rstar(0, 1, 0, 1, kX, kY, p) == (1 - p.q * z) / (1 - z));
    int nonzero = 0;
    for (int i = 0; i <= 1; ++i)
        for (int j = 0; j <= 1; ++j)
            for (int k = 0; k <= 1; ++k)
                for (int l = 0; l <= 1; ++l)
                    if (Rstar(i, j, k, l, kX, kY, p) != 0) {
                        ++nonzero;
                        // Paths enter on the i and l edges and leave on j and k.
                        CHECK(i + l == j + k);
                    }
    CHECK(nonzero == 6);
}

TEST_CASE("all weights are non-negative on sampled probabilistic points")
{
    const std::vector<Q> xs{0, rat("1/10"), rat("1/4"), rat("1/2"), rat("9/10")};
    for (int pt = 0; pt < kFixturePoints; ++pt) {
        const Params p = fixture_point(pt);
        for (const Q& x : xs)
            for (const Q& y : xs) {
                for (int i = 0; i <= 1; ++i)
                    for (int j = 0; j <= 1; ++j)
                        for (int k = 0; k <= 1; ++k)
                            for (int l = 0; l <= 1; ++l) {
                                CHECK(R(i, j, k, l, x, y, p) >= 0);
                                CHECK(Rstar(i, j, k, l, x, y, p) >= 0);
                            }
                for (int I = 0; I <= 5; ++I)
                    for (int K = 0; K <= 5; ++K)
                        for (int j = 0; j <= 1; ++j)
                            for (int l = 0; l <= 1; ++l) {
                                CHECK(L(I, j, K, l, x, p) >= 0);
                                CHECK(M(I, j, K, l, x, p) >= 0);
                                CHECK(Mstar(I, j, K, l, x, p) >= 0);
                            }
            }
    }
}

TEST_CASE("zero denominators raise invalid_params")
{
    Params p = fixture_point(0);
    p.s = rat("1/2");
    CHECK_THROWS_AS(L(0, 0, 0, 0, 2, p), invalid_params);
    CHECK_THROWS_AS(R(0, 1, 0, 1, 3, 1, p), invalid_params);
    CHECK_THROWS_AS(Rstar(0, 1, 0, 1, 1, 1, p), invalid_params);
}

TEST_CASE("fault hook corrupts exactly the documented entry")
{
    const Params p = fixture_point(0);
    const Q clean = L(2, 1, 2, 1, kX, p);
    set_weight_fault(true);
    CHECK(weight_fault());
    CHECK(L(2, 1, 2, 1, kX, p) == 2 * clean);
    CHECK(L(2, 0, 2, 0, kX, p) == oracle::table_L(2, 0, 2, 0, kX, p.q, p.s));
    set_weight_fault(false);
    CHECK(L(2, 1, 2, 1, kX, p) == clean);
}
