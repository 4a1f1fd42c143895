#include <gtest/gtest.h>

#include <numeric>

#include <json.hpp>

#include "nilcomplete/nilcomplete.hpp"
#include "support/oracle.hpp"

using nilc::IntMatrix;
using nilc::LaurentMatrix;
using nilc::Partition;

TEST(Emit, SlopeOneOverN) {
  for (int n = 2; n <= 9; ++n) {
    const auto c = nilc::emit(n, 1, Partition{n});
    LaurentMatrix expect = LaurentMatrix::monomial(nilc::make_er(n, 1), -1);
    expect.add_term(0, nilc::make_nr(n, 1));
    EXPECT_EQ(c.coeff, expect);
    EXPECT_EQ(nilc::residue(c), nilc::make_nr(n, 1));
  }
}

TEST(Emit, CompletionEntersTheResidue) {
  const auto c = nilc::emit(10, 3, {5, 4, 1});
  LaurentMatrix expect = LaurentMatrix::monomial(nilc::make_er(10, 3), -1);
  expect.add_term(0, nilc::make_nr(10, 3) + nilc::unit_matrix(10, 2, 6));
  EXPECT_EQ(c.coeff, expect);
  EXPECT_EQ(nilc::residue(c), nilc::make_nr(10, 3) + nilc::unit_matrix(10, 2, 6));
  EXPECT_EQ(c.slope_num, 3);
  EXPECT_EQ(c.slope_den, 10);
}

// omega^-(n+1) = z^-1 omega^-1, so the form is z^-2 E_1 + z^-1 N_1 + J.
TEST(Emit, SlopeAboveOne) {
  for (int n = 2; n <= 7; ++n) {
    const auto c = nilc::emit(n, n + 1, Partition{n});
    LaurentMatrix expect = LaurentMatrix::monomial(nilc::make_er(n, 1), -2);
    expect.add_term(-1, nilc::make_nr(n, 1));
    expect.add_term(0, nilc::jordan_block_matrix(Partition{n}));
    EXPECT_EQ(c.coeff, expect);
  }
}

TEST(Emit, Errors) {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const nilc::Error& e) {
      return e.kind();
    }
    return nilc::ErrorKind::ParseError;
  };
  EXPECT_EQ(kind([] { nilc::emit(10, 4, {4, 3, 3}); }), nilc::ErrorKind::NotCoprime);
  EXPECT_EQ(kind([] { nilc::emit(10, 3, {3, 3, 3, 1}); }), nilc::ErrorKind::NoCompletionExists);
}

TEST(Residue, NoConstantTermGivesZero) {
  nilc::ConnectionForm c;
  c.n = 3;
  c.coeff = LaurentMatrix::monomial(nilc::make_er(3, 1), -1);
  EXPECT_TRUE(nilc::residue(c).is_zero());
}

TEST(Residue, NegatedResidueHasTargetType) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r < n; ++r) {
      if (std::gcd(n, r) != 1) continue;
      for (const auto& lam : nilc::partitions_of(n, r)) {
        const auto c = nilc::emit(n, r, lam);
        ASSERT_EQ(oracle::jordan_type(-nilc::residue(c)), lam);
        for (const auto& [k, m] : c.coeff.coeffs()) {
          ASSERT_GE(k, -((r + n - 1) / n));
          ASSERT_LE(k, 0);
        }
      }
    }
}

TEST(Output, JsonAndText) {
  const auto c = nilc::emit(10, 3, {5, 4, 1});
  const auto j = nlohmann::json::parse(nilc::to_json(c));
  EXPECT_EQ(j["n"], 10);
  EXPECT_EQ(j["slope"], "3/10");
  EXPECT_EQ(j["coeff"]["n"], 10);
  EXPECT_TRUE(j["coeff"]["coeffs"].contains("-1"));
  EXPECT_TRUE(j["coeff"]["coeffs"].contains("0"));
  EXPECT_EQ(j["coeff"]["coeffs"]["0"][1][5], 1);
  const std::string text = nilc::render_text(c);
  EXPECT_EQ(text, "d + (E_3 z^-1 + N_3 + X) dz/z\nX (i j v):\n2 6 1\n");
}
