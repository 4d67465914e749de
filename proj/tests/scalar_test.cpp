#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include <hopcum/scalar.hpp>

using hopcum::Scalar;

TEST(Scalar, CanonicalForm) {
    EXPECT_EQ(Scalar(2, 4).str(), "1/2");
    EXPECT_EQ(Scalar(3, -6).str(), "-1/2");
    EXPECT_EQ(Scalar(6, 3).str(), "2");
    EXPECT_EQ(Scalar(0, 5).str(), "0");
    EXPECT_EQ(Scalar(2, 4), Scalar(1, 2));
}

TEST(Scalar, ZeroDenominatorThrows) {
    EXPECT_THROW(Scalar(1, 0), std::invalid_argument);
    EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
}

TEST(Scalar, ParseAcceptsCanonicalAndReducible) {
    EXPECT_EQ(Scalar::parse("3/7"), Scalar(3, 7));
    EXPECT_EQ(Scalar::parse("-4/6"), Scalar(-2, 3));
    EXPECT_EQ(Scalar::parse("12"), Scalar(12));
    EXPECT_EQ(Scalar::parse("0"), Scalar(0));
}

TEST(Scalar, ParseRejectsMalformed) {
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1//2", " 1", "1/2/3", "--1"}) {
        EXPECT_THROW(Scalar::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Scalar, Arithmetic) {
    EXPECT_EQ(Scalar(1, 2) + Scalar(1, 3), Scalar(5, 6));
    EXPECT_EQ(Scalar(1, 2) - Scalar(1, 3), Scalar(1, 6));
    EXPECT_EQ(Scalar(2, 3) * Scalar(9, 4), Scalar(3, 2));
    EXPECT_EQ(Scalar(2, 3) / Scalar(4, 9), Scalar(3, 2));
    EXPECT_EQ(-Scalar(1, 2), Scalar(-1, 2));
    Scalar acc(1);
    acc.add_product(Scalar(1, 2), Scalar(1, 3));
    EXPECT_EQ(acc, Scalar(7, 6));
    EXPECT_LT(Scalar(1, 3), Scalar(1, 2));
    EXPECT_EQ(hopcum::factorial(5), Scalar(120));
    EXPECT_EQ(hopcum::factorial(0), Scalar(1));
    EXPECT_EQ(hopcum::power(Scalar(2, 3), 3), Scalar(8, 27));
    EXPECT_EQ(hopcum::power(Scalar(5), 0), Scalar(1));
}

TEST(Scalar, PrintParseRoundTrip) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        const Scalar x(num(rng), den(rng));
        EXPECT_EQ(Scalar::parse(x.str()), x);
        EXPECT_EQ(Scalar::parse(x.str()).str(), x.str());
    }
}
