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

// Internal dense linear algebra over F_p. Not installed.

#ifndef CWPRIMES_SRC_LINALG_HPP_
#define CWPRIMES_SRC_LINALG_HPP_

#include <optional>
#include <vector>

#include "cwprimes/field.hpp"
#include "flat_ops.hpp"

namespace cwprimes {

// One solution of A x = b over F_p by Gaussian elimination, or nullopt when
// the system is inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Word>> solve_linear_fp(const FpMatrix& a_in,
                                                        const std::vector<Word>& b_in, Word p) {
  const std::size_t n = a_in.dim();
  // Augmented row-major matrix.
  std::vector<Word> m(n * (n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r * (n + 1) + c] = a_in.at(r, c);
    m[r * (n + 1) + n] = b_in[r];
  }
  std::vector<std::size_t> pivot_col(n, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = SIZE_MAX;
    for (std::size_t r = rank; r < n; ++r)
      if (m[r * (n + 1) + c] != 0) {
        piv = r;
        break;
      }
    if (piv == SIZE_MAX) continue;
    for (std::size_t k = 0; k <= n; ++k) std::swap(m[piv * (n + 1) + k], m[rank * (n + 1) + k]);
    const Word inv = flat::invmod(m[rank * (n + 1) + c], p);
    for (std::size_t k = c; k <= n; ++k)
      m[rank * (n + 1) + k] = flat::mulmod(m[rank * (n + 1) + k], inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank) continue;
      const Word factor = m[r * (n + 1) + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k <= n; ++k)
        m[r * (n + 1) + k] =
            flat::submod(m[r * (n + 1) + k], flat::mulmod(factor, m[rank * (n + 1) + k], p), p);
    }
    pivot_col[rank] = c;
    ++rank;
  }
  for (std::size_t r = rank; r < n; ++r)
    if (m[r * (n + 1) + n] != 0) return std::nullopt;
  std::vector<Word> x(n, 0);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = m[r * (n + 1) + n];
  return x;
}

// The matrix of x -> c*x on the field, an F_p-linear map.
inline FpMatrix mul_by_matrix(const FqElement& c) {
  const FieldPtr& K = c.field();
  const std::size_t n = K->abs_degree();
  FpMatrix m(n, K->characteristic());
  std::vector<Word> e(n, 0), img(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::fill(e.begin(), e.end(), 0);
    e[k] = 1;
    K->mul(ConstWordSpan(e), c.flat(), WordSpan(img));
    for (std::size_t r = 0; r < n; ++r) m.at(r, k) = img[r];
  }
  return m;
}

// The matrix of the F_p-linear map x -> x^(p^pk) - c*x on the field.
inline FpMatrix frobenius_minus_mul_matrix(const FieldPtr& K, std::uint64_t pk,
                                           const FqElement& c) {
  FpMatrix frob = K->frobenius_matrix(pk);
  FpMatrix mul = mul_by_matrix(c);
  const std::size_t n = K->abs_degree();
  const Word p = K->characteristic();
  FpMatrix out(n, p);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col)
      out.at(r, col) = flat::submod(frob.at(r, col), mul.at(r, col), p);
  return out;
}

}  // namespace cwprimes

#endif  // CWPRIMES_SRC_LINALG_HPP_
