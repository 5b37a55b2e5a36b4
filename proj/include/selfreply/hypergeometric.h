// Copyright 2026 The Selfreply Authors.
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

// Hypergeometric distribution X ~ H(N, K, n): the number of marked items in
// a draw of n from a population of N containing K marked items.
//
// Tails are evaluated in log space. The smaller tail (relative to the mode)
// is summed directly; the larger one is obtained as log1p(-smaller), so both
// keep full relative precision even when the probability is close to 1 or
// far below the smallest representable double.

#ifndef SELFREPLY_HYPERGEOMETRIC_H_
#define SELFREPLY_HYPERGEOMETRIC_H_

#include <cstdint>

namespace selfreply {

// Throws DomainError unless 0 <= n <= N, 0 <= K <= N and 0 <= k.
void CheckHypergeometricDomain(int64_t k, int64_t n, int64_t K, int64_t N);

// Natural log of P(X = k); -inf outside the support.
long double HypergeometricLogPmf(int64_t k, int64_t n, int64_t K, int64_t N);

// Natural logs of P(X >= k) and P(X <= k).
long double HypergeometricLogUpperTail(int64_t k, int64_t n, int64_t K,
                                       int64_t N);
long double HypergeometricLogLowerTail(int64_t k, int64_t n, int64_t K,
                                       int64_t N);

// P(X >= k). Requires k <= min(n, K).
double HypergeometricUpperTail(int64_t k, int64_t n, int64_t K, int64_t N);
// P(X <= k).
double HypergeometricLowerTail(int64_t k, int64_t n, int64_t K, int64_t N);

}  // namespace selfreply

#endif  // SELFREPLY_HYPERGEOMETRIC_H_
