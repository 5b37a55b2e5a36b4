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

// Reference implementations used to check the library. They trade speed
// for obviousness and share no code with the code under test.

#ifndef SELFREPLY_TESTS_SUPPORT_ORACLES_H_
#define SELFREPLY_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "selfreply/corpus-model.h"
#include "selfreply/thread-analysis.h"

namespace selfreply::testing {

// Exact P(X >= k) for X ~ Hypergeometric(N, K, n), as -log10. Uses
// arbitrary precision integers for every binomial and the tail sum.
// Limited to N <= 400.
double ExactMinusLog10UpperTail(int64_t k, int64_t n, int64_t K, int64_t N);
double ExactMinusLog10LowerTail(int64_t k, int64_t n, int64_t K, int64_t N);

// The signed, clamped specificity score computed from the exact tails.
double ExactSpecificity(int64_t f, int64_t t, int64_t F, int64_t T);

// Counts recomputed from author keys: equal keys mean same author,
// unsigned posts get a key of their own.
StatsReport BruteForceStats(const Corpus &corpus);

// Relative difference with an absolute floor for values near zero.
bool NearlyEqual(double got, double want, double relative);

}  // namespace selfreply::testing

#endif  // SELFREPLY_TESTS_SUPPORT_ORACLES_H_
