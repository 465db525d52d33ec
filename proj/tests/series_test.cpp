#include "bernsym/series.hpp"

#include "bernsym/bernoulli.hpp"

#include "gtest/gtest.h"

#include <random>

using bernsym::exp_linear;
using bernsym::expm1_over_t;
using bernsym::factorial;
using bernsym::gen_bernoulli;
using bernsym::gen_power_sum;
using bernsym::power_sum;
using bernsym::Rational;
using bernsym::series_div;
using bernsym::TruncSeries;

namespace {

TruncSeries make(std::initializer_list<Rational> coeffs) {
    std::vector<Rational> c(coeffs);
    unsigned order = static_cast<unsigned>(c.size()) - 1;
    return TruncSeries(order, std::move(c));
}

std::mt19937 rng(424242);

TruncSeries random_series(unsigned order, bool unit_constant) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    TruncSeries s(order);
    for (unsigned i = 0; i <= order; ++i)
        s.set_coeff(i, Rational(num(rng), den(rng)));
    if (unit_constant && s.coeff(0).is_zero())
        s.set_coeff(0, Rational(1));
    return s;
}

} // namespace

TEST(ExpLinear, Examples) {
    EXPECT_EQ(exp_linear(Rational(0), 5),
              make({1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(exp_linear(Rational(1), 2), make({Rational(1), Rational(1), Rational(1, 2)}));
    EXPECT_EQ(exp_linear(Rational(2), 2), make({Rational(1), Rational(2), Rational(2)}));
}

TEST(Expm1OverT, Examples) {
    EXPECT_EQ(expm1_over_t(Rational(1), 2),
              make({Rational(1), Rational(1, 2), Rational(1, 6)}));
    EXPECT_EQ(expm1_over_t(Rational(0), 2), make({0, 0, 0}));
    EXPECT_EQ(expm1_over_t(Rational(2), 1), make({Rational(2), Rational(2)}));
}

TEST(SeriesDiv, Examples) {
    TruncSeries d = random_series(6, true);
    EXPECT_EQ(series_div(d, d), TruncSeries::one(6));
    // geometric series 1/(1-t)
    EXPECT_EQ(series_div(TruncSeries::one(3), make({1, -1, 0, 0})), make({1, 1, 1, 1}));
}

TEST(SeriesDiv, RoundTrip) {
    for (int iter = 0; iter < 200; ++iter) {
        TruncSeries num = random_series(8, false);
        TruncSeries den = random_series(8, true);
        EXPECT_EQ(series_div(num * den, den), num);
        EXPECT_EQ(series_div(num, den) * den, num);
    }
}

TEST(SeriesDiv, ZeroConstantTermRejected) {
    EXPECT_THROW(series_div(TruncSeries::one(3), make({0, 1, 0, 0})), std::domain_error);
}

TEST(TruncSeries, OrderMismatchRejected) {
    TruncSeries a(3), b(4);
    EXPECT_THROW(a + b, std::invalid_argument);
    EXPECT_THROW(a - b, std::invalid_argument);
    EXPECT_THROW(a * b, std::invalid_argument);
    EXPECT_THROW(series_div(a, b), std::invalid_argument);
    EXPECT_THROW(TruncSeries(3, {Rational(1)}), std::invalid_argument);
}

TEST(GenBernoulli, SmallCoefficients) {
    EXPECT_EQ(gen_bernoulli(0), make({1}));
    auto g = gen_bernoulli(4);
    EXPECT_EQ(g.coeff(0), Rational(1));
    EXPECT_EQ(g.coeff(1), Rational(-1, 2)); // B_1/1!
    EXPECT_EQ(g.coeff(2), Rational(1, 12)); // B_2/2!
    EXPECT_EQ(g.coeff(3), Rational(0));
}

// gen_bernoulli(N) * (e^t - 1)/t = 1 exactly.
TEST(GenBernoulli, InverseOfExpm1OverT) {
    for (unsigned N = 0; N <= 32; ++N)
        EXPECT_EQ(gen_bernoulli(N) * expm1_over_t(Rational(1), N), TruncSeries::one(N));
}

TEST(GenPowerSum, Examples) {
    EXPECT_EQ(gen_power_sum(1, 3), make({1, 0, 0, 0}));
    EXPECT_EQ(gen_power_sum(2, 2), make({Rational(2), Rational(1), Rational(1, 2)}));
}

// Three routes to S_k(w-1): the exponential sum, the quotient
// (e^{wt}-1)/(e^t-1), and direct summation.
TEST(GenPowerSum, ThreeWayAgreement) {
    for (long w = 1; w <= 6; ++w)
        for (unsigned N = 0; N <= 20; ++N) {
            TruncSeries direct = gen_power_sum(w, N);
            TruncSeries quotient =
                series_div(expm1_over_t(Rational(w), N), expm1_over_t(Rational(1), N));
            EXPECT_EQ(direct, quotient) << "w=" << w << " N=" << N;
            for (unsigned k = 0; k <= N; ++k)
                EXPECT_EQ(direct.coeff(k) * Rational(factorial(k)),
                          power_sum(k, static_cast<unsigned>(w - 1)))
                    << "w=" << w << " k=" << k;
        }
}
