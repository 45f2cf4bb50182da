#include <gtest/gtest.h>

#include <random>

#include "delegation/error.hpp"
#include "delegation/xnum.hpp"
#include "test_support.hpp"

namespace delegation {
namespace {

using testing::Q;
using testing::X;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("24/7"), Q(24, 7));
  EXPECT_EQ(parse_rational("-6/4"), Q(-3, 2));
  EXPECT_EQ(parse_rational("5"), Q(5));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("8/4")), "2");
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "1/", "/2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
}

TEST(XNum, LexicographicOrder) {
  EXPECT_LT(X(1), X(1, 1));
  EXPECT_LT(X(1, 1000), X(2, -1000));
  EXPECT_GT(X(0, 1), X(0));
  EXPECT_EQ(X(3, 2) <=> X(3, 2), std::strong_ordering::equal);
}

TEST(XNum, OrderEmbedsRationals) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const Rational a(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
    const Rational b(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
    Rational ca = a, cb = b;
    ca.canonicalize();
    cb.canonicalize();
    EXPECT_EQ(XNum(ca) < XNum(cb), ca < cb);
    EXPECT_EQ(XNum(ca) == XNum(cb), ca == cb);
  }
}

TEST(XNum, ComparisonIsTotal) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const XNum a(static_cast<long>(rng() % 5), static_cast<long>(rng() % 5) - 2);
    const XNum b(static_cast<long>(rng() % 5), static_cast<long>(rng() % 5) - 2);
    EXPECT_EQ((a < b) + (a == b) + (a > b), 1);
  }
}

TEST(XNum, LinearArithmetic) {
  const XNum a(Q(1, 2), Q(3));
  const XNum b(Q(1, 3), Q(-1));
  EXPECT_EQ(a + b, XNum(Q(5, 6), Q(2)));
  EXPECT_EQ(a - b, XNum(Q(1, 6), Q(4)));
  EXPECT_EQ(-a, XNum(Q(-1, 2), Q(-3)));
  EXPECT_EQ(a * Q(2, 3), XNum(Q(1, 3), Q(2)));
  EXPECT_EQ(a / Q(2), XNum(Q(1, 4), Q(3, 2)));
  EXPECT_THROW(a / Q(0), SemanticError);
}

TEST(XNum, TextRoundTrip) {
  for (const XNum& x : {X(0), X(3), X(-2), X(0, 1), X(0, -1), X(4, -1), XNum(Q(14, 7), Q(9, 7)),
                        XNum(Q(-1, 3), Q(5, 2)), XNum(0, Q(-3, 4))}) {
    EXPECT_EQ(parse_xnum(to_string(x)), x) << to_string(x);
  }
  EXPECT_EQ(to_string(XNum(Q(2), Q(9, 7))), "2+9/7i");
  EXPECT_EQ(to_string(X(4, -1)), "4-i");
  EXPECT_EQ(parse_xnum("4-1i"), X(4, -1));
  EXPECT_EQ(parse_xnum("-i"), X(0, -1));
  EXPECT_THROW(parse_xnum("4+xi"), InputError);
}

}  // namespace
}  // namespace delegation
