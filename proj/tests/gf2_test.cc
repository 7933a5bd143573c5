// Copyright 2026 The unpop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unpop/gf2.h"

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "unpop/errors.h"

namespace unpop {
namespace {

// Schoolbook shift-and-add multiplication, written independently of the
// library's carry-less helpers.
std::uint64_t Schoolbook(std::uint64_t a, std::uint64_t b, std::uint64_t poly,
                         int bits) {
  std::uint64_t acc = 0;
  for (int i = bits - 1; i >= 0; --i) {
    acc <<= 1;
    if ((acc >> bits) & 1) acc ^= poly;
    if ((b >> i) & 1) acc ^= a;
  }
  return acc;
}

int Deg(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t Rem(std::uint64_t a, std::uint64_t m) {
  while (Deg(a) >= Deg(m)) a ^= m << (Deg(a) - Deg(m));
  return a;
}

// Irreducible iff no polynomial of degree 1..deg/2 divides it.
bool TrialDivision(std::uint64_t poly) {
  const int d = Deg(poly);
  for (std::uint64_t q = 2; Deg(q) <= d / 2; ++q) {
    if (Rem(poly, q) == 0) return false;
  }
  return true;
}

constexpr std::uint64_t kAes = 0x11b;          // x^8+x^4+x^3+x+1
constexpr std::uint64_t kGf32 = 0x10000008dULL;  // x^32+x^7+x^3+x^2+1

TEST(Gf2Test, SplitTablesMatchSchoolbookOnAllOfGf256) {
  const FieldSpec f(8, kAes);
  for (std::uint64_t a = 0; a < 256; ++a) {
    for (std::uint64_t b = 0; b < 256; ++b) {
      ASSERT_EQ(f.Mul(a, b), Schoolbook(a, b, kAes, 8)) << a << " * " << b;
    }
  }
}

TEST(Gf2Test, KnownAesProducts) {
  const FieldSpec f(8, kAes);
  EXPECT_EQ(f.Mul(0x57, 0x83), 0xc1u);
  EXPECT_EQ(f.Mul(0x57, 0x13), 0xfeu);
}

TEST(Gf2Test, SplitTablesMatchSchoolbookOnRandomGf32Pairs) {
  const FieldSpec f(32, kGf32);
  Rng rng(7);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t a = rng() & f.mask();
    const std::uint64_t b = rng() & f.mask();
    ASSERT_EQ(f.Mul(a, b), Schoolbook(a, b, kGf32, 32));
  }
}

TEST(Gf2Test, OddWidthsMatchSchoolbook) {
  for (int bits : {3, 9, 13, 21, 47, 63}) {
    const FieldSpec f = FieldSpec::Random(bits, 100 + bits);
    Rng rng(bits);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t a = f.Random(rng);
      const std::uint64_t b = f.Random(rng);
      ASSERT_EQ(f.Mul(a, b), Schoolbook(a, b, f.irreducible(), bits))
          << "bits=" << bits;
      ASSERT_EQ(f.Mul(a, b), f.MulSlow(a, b));
    }
  }
}

TEST(Gf2Test, RabinAgreesWithTrialDivision) {
  for (int bits = 2; bits <= 10; ++bits) {
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << bits); ++low) {
      const std::uint64_t poly = (std::uint64_t{1} << bits) | low;
      ASSERT_EQ(IsIrreducible(poly, bits), TrialDivision(poly)) << poly;
    }
  }
}

TEST(Gf2Test, DegreeThreeIrreduciblesAreExactlyTwo) {
  std::vector<std::uint64_t> found;
  for (std::uint64_t p = 8; p < 16; ++p) {
    if (IsIrreducible(p, 3)) found.push_back(p);
  }
  EXPECT_EQ(found, (std::vector<std::uint64_t>{0b1011, 0b1101}));
}

TEST(Gf2Test, RejectsReduciblePolynomial) {
  EXPECT_THROW(FieldSpec(8, 0x100), InvalidInput);
  EXPECT_THROW(FieldSpec(1, 0b11), InvalidInput);
  EXPECT_THROW(FieldSpec(64, 0), InvalidInput);
}

TEST(Gf2Test, RandomFieldIsIrreducibleAndSeedStable) {
  const FieldSpec a = FieldSpec::Random(32, 5);
  const FieldSpec b = FieldSpec::Random(32, 5);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(IsIrreducible(a.irreducible(), 32));
}

class FieldAxiomTest : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxiomTest, Axioms) {
  const int bits = GetParam();
  const FieldSpec f = FieldSpec::Random(bits, 11);
  Rng rng(bits * 31);
  const std::uint64_t order_minus_2 = (std::uint64_t{1} << bits) - 2;
  for (int i = 0; i < 500; ++i) {
    const FieldElement a = f.Random(rng);
    const FieldElement b = f.Random(rng);
    const FieldElement c = f.Random(rng);
    ASSERT_EQ(f.Mul(a, b), f.Mul(b, a));
    ASSERT_EQ(f.Mul(f.Mul(a, b), c), f.Mul(a, f.Mul(b, c)));
    ASSERT_EQ(f.Mul(a, FieldSpec::Add(b, c)),
              FieldSpec::Add(f.Mul(a, b), f.Mul(a, c)));
    ASSERT_EQ(f.Mul(a, 1), a);
    ASSERT_EQ(f.Mul(a, 0), 0u);
    ASSERT_EQ(FieldSpec::Add(a, a), 0u);
    ASSERT_LE(f.Mul(a, b), f.mask());
    const FieldElement nz = f.RandomNonzero(rng);
    ASSERT_EQ(f.Mul(nz, f.Pow(nz, order_minus_2)), 1u);
    ASSERT_NE(f.Mul(nz, f.RandomNonzero(rng)), 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(Widths, FieldAxiomTest,
                         ::testing::Values(2, 5, 8, 16, 32, 61));

TEST(Gf2Test, RandomNonzeroIsUniform) {
  const FieldSpec f = FieldSpec::Random(4, 3);
  Rng rng(99);
  std::vector<int> counts(16, 0);
  const int draws = 150000;
  for (int i = 0; i < draws; ++i) ++counts[f.RandomNonzero(rng)];
  EXPECT_EQ(counts[0], 0);
  const double expected = draws / 15.0;
  double chi2 = 0;
  for (int v = 1; v < 16; ++v) {
    chi2 += (counts[v] - expected) * (counts[v] - expected) / expected;
  }
  // 14 degrees of freedom; 36.12 is the 0.001 upper quantile.
  EXPECT_LT(chi2, 36.12);
}

TEST(Gf2Test, MinimumFieldBits) {
  EXPECT_EQ(MinimumFieldBits(1), 2);
  EXPECT_EQ(MinimumFieldBits(4), 5);    // 2^5 = 32 > 16
  EXPECT_EQ(MinimumFieldBits(10), 7);   // 128 > 100
  EXPECT_EQ(MinimumFieldBits(16), 9);   // 512 > 256
}

}  // namespace
}  // namespace unpop
