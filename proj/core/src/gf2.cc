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

#include <string>

#include "unpop/errors.h"

namespace unpop {
namespace {

int Degree(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

// Polynomial product modulo `mod` (degree `bits`), bit-serial.
std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t mod,
                     int bits) {
  return ReduceWide(ClMul(a, b), mod, bits);
}

std::uint64_t PolyMod(std::uint64_t a, std::uint64_t m) {
  const int dm = Degree(m);
  for (int d = Degree(a); d >= dm; d = Degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint64_t PolyGcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = PolyMod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<int> PrimeFactors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(2^k) mod p by k repeated squarings of x.
std::uint64_t FrobeniusPower(int k, std::uint64_t p, int bits) {
  std::uint64_t r = 0b10;
  if (bits == 1) r = PolyMod(r, p);
  for (int i = 0; i < k; ++i) r = MulMod(r, r, p, bits);
  return r;
}

}  // namespace

WideProduct ClMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  for (std::uint64_t rest = b; rest != 0; rest &= rest - 1) {
    const int i = __builtin_ctzll(rest);
    lo ^= a << i;
    if (i != 0) hi ^= a >> (64 - i);
  }
  return {hi, lo};
}

std::uint64_t ReduceWide(WideProduct p, std::uint64_t modulus, int bits) {
  // Clear bits from the top down; modulus has bit `bits` set.
  const int top = p.hi != 0 ? 127 - __builtin_clzll(p.hi) : Degree(p.lo);
  for (int d = top; d >= bits; --d) {
    const bool set = d >= 64 ? ((p.hi >> (d - 64)) & 1) : ((p.lo >> d) & 1);
    if (!set) continue;
    const int shift = d - bits;
    if (shift >= 64) {
      p.hi ^= modulus << (shift - 64);
    } else if (shift == 0) {
      p.lo ^= modulus;
    } else {
      p.lo ^= modulus << shift;
      p.hi ^= modulus >> (64 - shift);
    }
  }
  return p.lo;
}

bool IsIrreducible(std::uint64_t poly, int bits) {
  if (bits < 1 || bits > 63 || Degree(poly) != bits) return false;
  if (bits == 1) return true;
  if ((poly & 1) == 0) return false;
  if (FrobeniusPower(bits, poly, bits) != 0b10) return false;
  for (int t : PrimeFactors(bits)) {
    const std::uint64_t h = FrobeniusPower(bits / t, poly, bits) ^ 0b10;
    if (PolyGcd(poly, h) != 1) return false;
  }
  return true;
}

FieldSpec::FieldSpec(int bits, std::uint64_t irreducible)
    : bits_(bits), irreducible_(irreducible) {
  if (bits < kMinBits || bits > kMaxBits) {
    throw InvalidInput("field bits must be in [2, 63], got " +
                       std::to_string(bits));
  }
  if (!IsIrreducible(irreducible, bits)) {
    throw InvalidInput("polynomial is not irreducible of degree " +
                       std::to_string(bits));
  }
  mask_ = (std::uint64_t{1} << bits) - 1;
  chunks_ = (bits + kChunkBits - 1) / kChunkBits;
  auto tables = std::make_shared<std::vector<std::uint64_t>>(
      static_cast<std::size_t>(table_count()) << 16);
  auto times_x = [this](std::uint64_t v) {
    v <<= 1;
    if ((v >> bits_) & 1) v ^= irreducible_;
    return v;
  };
  for (std::uint64_t a = 0; a < 256; ++a) {
    for (std::uint64_t b = 0; b < 256; ++b) {
      std::uint64_t v = ReduceWide(ClMul(a, b), irreducible_, bits_);
      for (int j = 0; j < table_count(); ++j) {
        if (j > 0) {
          for (int s = 0; s < kChunkBits; ++s) v = times_x(v);
        }
        (*tables)[(static_cast<std::size_t>(j) << 16) | (a << 8) | b] = v;
      }
    }
  }
  tables_ = std::move(tables);
}

FieldSpec FieldSpec::Random(int bits, std::uint64_t seed) {
  if (bits < kMinBits || bits > kMaxBits) {
    throw InvalidInput("field bits must be in [2, 63], got " +
                       std::to_string(bits));
  }
  Rng rng(seed);
  const std::uint64_t top = std::uint64_t{1} << bits;
  const std::uint64_t middle = (top - 1) & ~std::uint64_t{1};
  for (;;) {
    const std::uint64_t candidate = top | (rng() & middle) | 1;
    if (IsIrreducible(candidate, bits)) return FieldSpec(bits, candidate);
  }
}

FieldElement FieldSpec::MulSlow(FieldElement a, FieldElement b) const {
  return ReduceWide(ClMul(a, b), irreducible_, bits_);
}

FieldElement FieldSpec::Pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = 1;
  while (e != 0) {
    if (e & 1) result = Mul(result, a);
    a = Mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement FieldSpec::RandomNonzero(Rng& rng) const {
  for (;;) {
    const FieldElement x = rng() >> (64 - bits_);
    if (x != 0) return x;
  }
}

FieldElement FieldSpec::Random(Rng& rng) const { return rng() >> (64 - bits_); }

int MinimumFieldBits(std::size_t n) {
  const long double n2 = static_cast<long double>(n) * n;
  int s = FieldSpec::kMinBits;
  while (s < FieldSpec::kMaxBits &&
         static_cast<long double>(std::uint64_t{1} << s) <= n2) {
    ++s;
  }
  return s;
}

}  // namespace unpop
