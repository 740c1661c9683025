#include <gtest/gtest.h>

#include "hahnlab/parse.hpp"

using hahnlab::GaussianRational;
using hahnlab::parse_number;

namespace {

GaussianRational q(long p, long r = 1) { return GaussianRational::fraction(p, r); }
GaussianRational gi(long p, long r = 1) { return GaussianRational::fraction(p, r) * GaussianRational::i(); }

} // namespace

TEST(Parse, Reals)
{
    EXPECT_EQ(parse_number("1/2"), q(1, 2));
    EXPECT_EQ(parse_number("-3"), q(-3));
    EXPECT_EQ(parse_number("+7"), q(7));
    EXPECT_EQ(parse_number("0.25"), q(1, 4));
    EXPECT_EQ(parse_number("-.5"), q(-1, 2));
    EXPECT_EQ(parse_number("2."), q(2));
    EXPECT_EQ(parse_number("4/6"), q(2, 3));
    EXPECT_EQ(parse_number(" 1 / 2 "), q(1, 2));
}

TEST(Parse, Imaginary)
{
    EXPECT_EQ(parse_number("i"), gi(1));
    EXPECT_EQ(parse_number("-i"), gi(-1));
    EXPECT_EQ(parse_number("+i"), gi(1));
    EXPECT_EQ(parse_number("3/4i"), gi(3, 4));
    EXPECT_EQ(parse_number("-0.5i"), gi(-1, 2));
}

TEST(Parse, Complex)
{
    EXPECT_EQ(parse_number("1/2+3/4i"), q(1, 2) + gi(3, 4));
    EXPECT_EQ(parse_number("2-1/3i"), q(2) - gi(1, 3));
    EXPECT_EQ(parse_number("-1-i"), q(-1) - gi(1));
    EXPECT_EQ(parse_number("0.5+i"), q(1, 2) + gi(1));
    EXPECT_EQ(parse_number("1/2 + 1/4 i"), q(1, 2) + gi(1, 4));
    const auto z = hahnlab::parse_complex("1/2-1/4i");
    EXPECT_EQ(z, hahnlab::Complex(0.5, -0.25));
}

TEST(Parse, Errors)
{
    for (const char* bad : {"", "  ", "1/0", "abc", "1/2+", "1//2", "1e3", "1/2.5", "ii", "1+2", "--1", ".", "1/-2",
                            "1+2i+3i", "/2"}) {
        EXPECT_THROW(parse_number(bad), hahnlab::parse_error) << "input '" << bad << "'";
    }
}
