#include "bernsym/combinatorics.hpp"

#include "gtest/gtest.h"

using bernsym::BigInt;
using bernsym::binomial;
using bernsym::factorial;
using bernsym::multinomial;

TEST(Binomial, SmallCases) {
    EXPECT_EQ(binomial(4, 2), BigInt(6));
    EXPECT_EQ(binomial(3, 5), BigInt(0)); // k > n convention
    for (unsigned n = 0; n <= 20; ++n)
        EXPECT_EQ(binomial(n, 0), BigInt(1));
    EXPECT_EQ(binomial(52, 5), BigInt(2598960));
}

TEST(Binomial, PascalRule) {
    for (unsigned n = 1; n <= 40; ++n)
        for (unsigned k = 1; k <= n; ++k)
            EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Multinomial, Examples) {
    EXPECT_EQ(multinomial(3, 1, 1, 1), BigInt(6));
    EXPECT_EQ(multinomial(5, 5, 0, 0), BigInt(1));
    EXPECT_EQ(multinomial(4, 2, 1, 1), BigInt(12));
}

TEST(Multinomial, ContractViolation) {
    EXPECT_THROW(multinomial(4, 2, 1, 0), std::invalid_argument);
    EXPECT_THROW(multinomial(2, 1, 1, 1), std::invalid_argument);
}

// multinomial(n;k,l,m) = C(n,k) * C(n-k,l) for every composition of n <= 30.
TEST(Multinomial, FactorsThroughBinomials) {
    for (unsigned n = 0; n <= 30; ++n)
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned l = 0; l + k <= n; ++l) {
                unsigned m = n - k - l;
                EXPECT_EQ(multinomial(n, k, l, m), binomial(n, k) * binomial(n - k, l));
            }
}

TEST(Factorial, GrowsOnDemand) {
    EXPECT_EQ(factorial(0), BigInt(1));
    EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
    // beyond the seeded table
    EXPECT_EQ(factorial(70) / factorial(69), BigInt(70));
}
