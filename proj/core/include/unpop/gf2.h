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

#ifndef UNPOP_GF2_H_
#define UNPOP_GF2_H_

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

namespace unpop {

// An element of GF(2^s): the coefficient bits of a polynomial over GF(2) of
// degree < s. Kept as a plain word so the dynamic programs can store dense
// tables of them.
using FieldElement = std::uint64_t;

// Deterministic 64-bit generator used across the library.
using Rng = std::mt19937_64;

// Carry-less product of two polynomials of degree < 64, as (high, low) words.
struct WideProduct {
  std::uint64_t hi;
  std::uint64_t lo;
};
WideProduct ClMul(std::uint64_t a, std::uint64_t b);

// Reduces the 128-bit polynomial (hi, lo) modulo `modulus` of degree `bits`.
std::uint64_t ReduceWide(WideProduct p, std::uint64_t modulus, int bits);

// Rabin's irreducibility test for a polynomial of exact degree `bits`.
bool IsIrreducible(std::uint64_t poly, int bits);

// GF(2^s) with split-table multiplication.
//
// Elements are split into r = ceil(s/8) chunks of C = 8 bits. Table j holds
// (a * b * x^(8j)) mod p for all chunk pairs (a, b), for j = 0..2r-2, so a
// product costs r^2 lookups and XORs. Immutable after construction; copies
// share the tables.
class FieldSpec {
 public:
  static constexpr int kChunkBits = 8;
  static constexpr int kMinBits = 2;
  static constexpr int kMaxBits = 63;

  // Builds the field from a known irreducible polynomial (bit `bits` set).
  // Throws InvalidInput if the polynomial is reducible or the width is out
  // of range.
  FieldSpec(int bits, std::uint64_t irreducible);

  // Samples random monic degree-`bits` polynomials from a generator seeded
  // with `seed` until one is irreducible.
  static FieldSpec Random(int bits, std::uint64_t seed);

  int bits() const { return bits_; }
  std::uint64_t irreducible() const { return irreducible_; }
  std::uint64_t mask() const { return mask_; }
  int chunks() const { return chunks_; }
  int table_count() const { return 2 * chunks_ - 1; }

  static FieldElement Add(FieldElement a, FieldElement b) { return a ^ b; }

  FieldElement Mul(FieldElement a, FieldElement b) const {
    const std::uint64_t* t = tables_->data();
    FieldElement out = 0;
    for (int i = 0; i < chunks_; ++i) {
      const std::uint64_t ai = (a >> (kChunkBits * i)) & 0xff;
      if (ai == 0) continue;
      for (int j = 0; j < chunks_; ++j) {
        const std::uint64_t bj = (b >> (kChunkBits * j)) & 0xff;
        out ^= t[(static_cast<std::size_t>(i + j) << 16) | (ai << 8) | bj];
      }
    }
    return out;
  }

  FieldElement Square(FieldElement a) const { return Mul(a, a); }
  FieldElement Pow(FieldElement a, std::uint64_t e) const;

  // Uniform over the 2^s - 1 nonzero elements (rejection sampling on s bits).
  FieldElement RandomNonzero(Rng& rng) const;
  // Uniform over all elements.
  FieldElement Random(Rng& rng) const;

  // Bitwise shift-and-reduce product; used to fill the tables.
  FieldElement MulSlow(FieldElement a, FieldElement b) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.bits_ == b.bits_ && a.irreducible_ == b.irreducible_;
  }

 private:
  int bits_;
  std::uint64_t irreducible_;
  std::uint64_t mask_;
  int chunks_;
  std::shared_ptr<const std::vector<std::uint64_t>> tables_;
};

// Smallest field width s with 2^s > n^2, clamped to [kMinBits, kMaxBits].
int MinimumFieldBits(std::size_t n);

}  // namespace unpop

#endif  // UNPOP_GF2_H_
