#include <stdexcept>
#include <doctest.h>

#include <random>

#include "munits/closedform.hpp"
#include "munits/qseries.hpp"

using namespace munits;

namespace {

ExponentVector vec(const Level& lv, std::vector<RawEntry> raws) {
    return ExponentVector::from_entries(lv, raws);
}

CycNumber random_cyc(const Level& lv, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-5, 5);
    std::vector<Rat> coeffs(lv.phi());
    for (auto& c : coeffs) c = dist(rng);
    return CycNumber::from_coeffs(lv, std::move(coeffs));
}

QSeries random_series(const Level& lv, long long trunc, std::mt19937& rng,
                      bool unit_constant = false) {
    QSeries s(lv, trunc);
    for (long long k = 0; k <= trunc; ++k) s.set(k, random_cyc(lv, rng));
    if (unit_constant) s.set(0, CycNumber::one(lv));
    return s;
}

// Naive integer polynomial: multiply out (1 - q^k)^e factors by repeated
// linear passes. Completely independent of QSeries.
std::vector<Int> naive_product(const std::vector<std::pair<long long, long long>>& factors,
                               long long trunc) {
    std::vector<Int> poly(trunc + 1);
    poly[0] = 1;
    for (const auto& [k, e] : factors)
        for (long long rep = 0; rep < e; ++rep)
            for (long long n = trunc; n >= k; --n) poly[n] -= poly[n - k];
    return poly;
}

}  // namespace

TEST_CASE("series basics") {
    Level l5 = Level::make(5, 1);
    QSeries one = QSeries::one(l5, 10);
    CHECK(one.truncation() == 10);
    CHECK(one[0] == CycNumber::one(l5));
    CHECK(one[5].is_zero());

    QSeries mono = QSeries::monomial(l5, CycNumber::root_of_unity(l5, 2), 3, 10);
    CHECK(mono[3] == CycNumber::root_of_unity(l5, 2));
    CHECK((one + mono)[3] == mono[3]);
    CHECK((one - mono)[3] == -mono[3]);

    // truncation shortens to the smaller operand
    QSeries longer = QSeries::one(l5, 20);
    CHECK((one * longer).truncation() == 10);

    Level l7 = Level::make(7, 1);
    CHECK_THROWS_AS(one * QSeries::one(l7, 10), std::invalid_argument);
}

TEST_CASE("geometric series inverse") {
    Level l5 = Level::make(5, 1);
    QSeries lin = QSeries::one(l5, 12);
    lin.set(1, -CycNumber::one(l5));  // 1 - q
    QSeries geo = lin.inverse();
    for (long long k = 0; k <= 12; ++k) CHECK(geo[k] == CycNumber::one(l5));
    CHECK(lin * geo == QSeries::one(l5, 12));

    // (1 - q)^-2 = sum (k+1) q^k
    QSeries sq = lin.pow(-2);
    for (long long k = 0; k <= 12; ++k)
        CHECK(sq[k] == CycNumber::from_rat(l5, make_rat(k + 1, 1)));

    QSeries no_const(l5, 5);
    CHECK_THROWS_AS(no_const.inverse(), std::domain_error);
}

TEST_CASE("random inverses and powers") {
    Level l5 = Level::make(5, 1);
    std::mt19937 rng(31337);
    for (int i = 0; i < 25; ++i) {
        QSeries s = random_series(l5, 8, rng, /*unit_constant=*/true);
        CHECK(s * s.inverse() == QSeries::one(l5, 8));
        CHECK(s.pow(3) == s * s * s);
        CHECK(s.pow(0) == QSeries::one(l5, 8));
        CHECK(s.pow(-2) * s.pow(2) == QSeries::one(l5, 8));
    }
}

TEST_CASE("theta is a derivation") {
    Level l5 = Level::make(5, 1);
    std::mt19937 rng(40);
    CHECK(QSeries::one(l5, 6).theta() == QSeries(l5, 6));
    for (int i = 0; i < 25; ++i) {
        QSeries f = random_series(l5, 9, rng);
        QSeries g = random_series(l5, 9, rng);
        CHECK((f * g).theta() == f.theta() * g + f * g.theta());
    }
    QSeries mono = QSeries::monomial(l5, CycNumber::one(l5), 4, 9);
    CHECK(mono.theta() == QSeries::monomial(l5, CycNumber::from_rat(l5, Rat(4)), 4, 9));
}

TEST_CASE("mul_one_minus agrees with explicit multiplication") {
    Level l5 = Level::make(5, 1);
    std::mt19937 rng(41);
    for (long long k : {0LL, 1LL, 3LL, 7LL}) {
        QSeries s = random_series(l5, 7, rng);
        CycNumber c = random_cyc(l5, rng);
        QSeries direct = s;
        direct.mul_one_minus(c, k);
        QSeries factor = QSeries::one(l5, 7) - QSeries::monomial(l5, c, k, 7);
        CHECK(direct == s * factor);
    }
}

TEST_CASE("siegel factor structure") {
    Level l5 = Level::make(5, 1);
    CycNumber z = CycNumber::root_of_unity(l5, 1);
    CycNumber one = CycNumber::one(l5);

    // (1,1): factors (1 - q z)(1 - q^4 z^-1)(1 - q^6 z) through q^6
    QSeries f = siegel_factor(l5, make_point(l5, 1, 1), 6);
    CHECK(f[0] == one);
    CHECK(f[1] == -z);
    CHECK(f[2].is_zero());
    CHECK(f[3].is_zero());
    CHECK(f[4] == -z.pow(4));
    CHECK(f[5] == one);
    CHECK(f[6] == -z);

    // r = 0 starts with the constant factor (1 - z^s)
    QSeries g = siegel_factor(l5, make_point(l5, 0, 1), 5);
    CHECK(g[0] == one - z);
    CHECK(g[5] == -(one - z) * (z + z.pow(4)));

    CHECK_THROWS_AS(siegel_factor(l5, make_point(l5, 4, 0), 6), std::invalid_argument);
}

TEST_CASE("unit series against a naive polynomial expansion") {
    Level l5 = Level::make(5, 1);
    long long trunc = 40;

    // exponents +-1 mod 5, all to the 60th power
    std::vector<std::pair<long long, long long>> factors;
    for (long long k = 1; k <= trunc; ++k)
        if (k % 5 == 1 || k % 5 == 4) factors.push_back({k, 60});
    auto expect = naive_product(factors, trunc);

    QSeries u = unit_series(vec(l5, {{1, 0, 60}}), trunc);
    for (long long k = 0; k <= trunc; ++k)
        CHECK(u[k] == CycNumber::from_rat(l5, Rat(expect[k])));

    // frozen leading coefficients of (1 - q)^60 * (1 - q^4)^60 * ...
    CHECK(expect[0] == 1);
    CHECK(expect[1] == -60);
    CHECK(expect[2] == 1770);
    CHECK(expect[3] == -34220);
    CHECK(expect[4] == 487575);
}

TEST_CASE("unit series with negative exponents") {
    Level l5 = Level::make(5, 1);
    ExponentVector v4 = vec(l5, {{1, 0, 60}, {2, 0, -60}});
    QSeries u = unit_series(v4, 20);
    CHECK(u[0] == CycNumber::one(l5));
    CHECK(u[1] == CycNumber::from_rat(l5, Rat(-60)));
    CHECK(u[2] == CycNumber::from_rat(l5, Rat(1830)));

    // multiplying back by the denominator factors recovers the numerator
    std::vector<std::pair<long long, long long>> denom, numer;
    for (long long k = 1; k <= 20; ++k) {
        if (k % 5 == 1 || k % 5 == 4) numer.push_back({k, 60});
        if (k % 5 == 2 || k % 5 == 3) denom.push_back({k, 60});
    }
    QSeries dseries = QSeries::one(l5, 20);
    for (const auto& [k, e] : denom)
        for (long long rep = 0; rep < e; ++rep)
            dseries.mul_one_minus(CycNumber::one(l5), k);
    auto nexpect = naive_product(numer, 20);
    QSeries prod = u * dseries;
    for (long long k = 0; k <= 20; ++k)
        CHECK(prod[k] == CycNumber::from_rat(l5, Rat(nexpect[k])));
}

TEST_CASE("unit series validity gate") {
    Level l5 = Level::make(5, 1);
    ExponentVector bad = vec(l5, {{1, 0, 12}});
    CHECK_THROWS_AS(unit_series(bad, 10), std::domain_error);
    QSeries forced = unit_series(bad, 10, /*require_valid=*/false);
    CHECK(forced[0] == CycNumber::one(l5));
    CHECK(forced[1] == CycNumber::from_rat(l5, Rat(-12)));
}

TEST_CASE("series route and closed form agree") {
    Level l5 = Level::make(5, 1);
    Level l25 = Level::make(5, 2);
    struct Case {
        Level lv;
        std::vector<RawEntry> raws;
        long long nmax;
    };
    for (const auto& tc : {Case{l5, {{1, 0, 60}}, 30},
                           Case{l5, {{1, 1, 60}}, 30},
                           Case{l5, {{0, 1, 60}}, 30},
                           Case{l5, {{1, 0, 60}, {2, 0, -60}}, 30},
                           Case{l25, {{5, 1, 300}}, 30}}) {
        ExponentVector v = vec(tc.lv, tc.raws);
        auto series = oracle_c(v, tc.nmax);
        ExponentCalculator calc(v);
        for (long long n = 1; n <= tc.nmax; ++n) CHECK(series[n - 1] == calc.c(n));
    }
}

TEST_CASE("oracle on the plain support gives the residue pattern") {
    Level l5 = Level::make(5, 1);
    auto series = oracle_c(vec(l5, {{1, 0, 60}}), 30);
    for (long long n = 1; n <= 30; ++n) {
        long long res = n % 5;
        bool hit = res == 1 || res == 4;
        CHECK(series[n - 1] == CycNumber::from_rat(l5, Rat(hit ? 60 : 0)));
    }
}

TEST_CASE("oracle rejects invalid vectors") {
    Level l5 = Level::make(5, 1);
    CHECK_THROWS_AS(oracle_c(vec(l5, {{1, 0, 12}}), 10), std::domain_error);
}
