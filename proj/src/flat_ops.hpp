/* Copyright 2026 The cwprimes Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Internal helpers for flat residue vectors. Not installed.

#ifndef CWPRIMES_SRC_FLAT_OPS_HPP_
#define CWPRIMES_SRC_FLAT_OPS_HPP_

#include <cstddef>
#include <cstdint>

namespace cwprimes::flat {

using Word = std::uint32_t;

inline Word addmod(Word a, Word b, Word p) {
  Word s = a + b;  // p < 2^31, no overflow
  return s >= p ? s - p : s;
}

inline Word submod(Word a, Word b, Word p) { return b > a ? a + p - b : a - b; }

inline Word mulmod(Word a, Word b, Word p) {
  return static_cast<Word>((static_cast<std::uint64_t>(a) * b) % p);
}

inline Word powmod_u32(Word a, std::uint64_t e, Word p) {
  std::uint64_t r = 1 % p, base = a % p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Word>(r);
}

// Inverse mod prime p via extended Euclid.
inline Word invmod(Word a, Word p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<Word>(t);
}

inline void vec_add(Word* dst, const Word* a, const Word* b, std::size_t n, Word p) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = addmod(a[k], b[k], p);
}

inline void vec_add_into(Word* dst, const Word* src, std::size_t n, Word p) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = addmod(dst[k], src[k], p);
}

inline void vec_sub(Word* dst, const Word* a, const Word* b, std::size_t n, Word p) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = submod(a[k], b[k], p);
}

inline void vec_neg(Word* dst, const Word* a, std::size_t n, Word p) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = a[k] == 0 ? 0 : p - a[k];
}

inline void vec_zero(Word* dst, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = 0;
}

inline bool vec_is_zero(const Word* a, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != 0) return false;
  return true;
}

inline bool vec_equal(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

// Lexicographic with index 0 most significant.
inline bool vec_less(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

// dst += c * src (c a residue).
inline void vec_add_scaled(Word* dst, const Word* src, Word c, std::size_t n, Word p) {
  if (c == 0) return;
  for (std::size_t k = 0; k < n; ++k)
    dst[k] = addmod(dst[k], mulmod(c, src[k], p), p);
}

}  // namespace cwprimes::flat

#endif  // CWPRIMES_SRC_FLAT_OPS_HPP_
