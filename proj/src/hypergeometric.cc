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

#include "selfreply/hypergeometric.h"

#include <math.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "selfreply/errors.h"

namespace selfreply {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
constexpr long double kNegligible = 1e-22L;

// Reentrant variant: std::lgamma writes the global signgam.
long double LogFactorial(int64_t n) {
  int sign;
  return lgammal_r(static_cast<long double>(n) + 1, &sign);
}

long double LogChoose(int64_t n, int64_t k) {
  return LogFactorial(n) - LogFactorial(k) - LogFactorial(n - k);
}

int64_t SupportLow(int64_t n, int64_t K, int64_t N) {
  return std::max<int64_t>(0, n + K - N);
}

int64_t SupportHigh(int64_t n, int64_t K) { return std::min(n, K); }

int64_t Mode(int64_t n, int64_t K, int64_t N) {
  __int128 num = static_cast<__int128>(n + 1) * (K + 1);
  return static_cast<int64_t>(num / (N + 2));
}

// log P(X >= start) for start above the mode: terms decrease upward.
long double LogSumUp(int64_t start, int64_t n, int64_t K, int64_t N) {
  int64_t high = SupportHigh(n, K);
  long double term = 1, total = 1;
  for (int64_t x = start; x < high; ++x) {
    term *= static_cast<long double>(K - x) * (n - x) /
            (static_cast<long double>(x + 1) * (N - K - n + x + 1));
    total += term;
    if (term < total * kNegligible) break;
  }
  return HypergeometricLogPmf(start, n, K, N) + std::log(total);
}

// log P(X <= start) for start below the mode: terms decrease downward.
long double LogSumDown(int64_t start, int64_t n, int64_t K, int64_t N) {
  int64_t low = SupportLow(n, K, N);
  long double term = 1, total = 1;
  for (int64_t x = start; x > low; --x) {
    term *= static_cast<long double>(x) * (N - K - n + x) /
            (static_cast<long double>(K - x + 1) * (n - x + 1));
    total += term;
    if (term < total * kNegligible) break;
  }
  return HypergeometricLogPmf(start, n, K, N) + std::log(total);
}

}  // namespace

void CheckHypergeometricDomain(int64_t k, int64_t n, int64_t K, int64_t N) {
  if (N < 0 || n < 0 || K < 0 || k < 0 || n > N || K > N) {
    throw DomainError("hypergeometric parameters out of domain: k=" +
                      std::to_string(k) + " n=" + std::to_string(n) +
                      " K=" + std::to_string(K) + " N=" + std::to_string(N));
  }
}

long double HypergeometricLogPmf(int64_t k, int64_t n, int64_t K, int64_t N) {
  CheckHypergeometricDomain(k, n, K, N);
  if (k < SupportLow(n, K, N) || k > SupportHigh(n, K)) return kNegInf;
  return LogChoose(K, k) + LogChoose(N - K, n - k) - LogChoose(N, n);
}

long double HypergeometricLogUpperTail(int64_t k, int64_t n, int64_t K,
                                       int64_t N) {
  CheckHypergeometricDomain(k, n, K, N);
  if (k <= SupportLow(n, K, N)) return 0;
  if (k > SupportHigh(n, K)) return kNegInf;
  if (k > Mode(n, K, N)) return LogSumUp(k, n, K, N);
  long double below = std::exp(LogSumDown(k - 1, n, K, N));
  return std::log1p(-below);
}

long double HypergeometricLogLowerTail(int64_t k, int64_t n, int64_t K,
                                       int64_t N) {
  CheckHypergeometricDomain(k, n, K, N);
  if (k >= SupportHigh(n, K)) return 0;
  if (k < SupportLow(n, K, N)) return kNegInf;
  if (k < Mode(n, K, N)) return LogSumDown(k, n, K, N);
  long double above = std::exp(LogSumUp(k + 1, n, K, N));
  return std::log1p(-above);
}

double HypergeometricUpperTail(int64_t k, int64_t n, int64_t K, int64_t N) {
  if (k > std::min(n, K)) {
    CheckHypergeometricDomain(k, n, K, N);
    throw DomainError("k exceeds min(n, K)");
  }
  return static_cast<double>(std::exp(HypergeometricLogUpperTail(k, n, K, N)));
}

double HypergeometricLowerTail(int64_t k, int64_t n, int64_t K, int64_t N) {
  return static_cast<double>(std::exp(HypergeometricLogLowerTail(k, n, K, N)));
}

}  // namespace selfreply
