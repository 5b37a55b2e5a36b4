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

// Agreement between two labelings of the same items: confusion matrix,
// Cohen's kappa, one-vs-rest precision/recall/F1 and macro-averaged F1.
// Labels are plain integers; the annotation layer uses category numbers.

#ifndef SELFREPLY_AGREEMENT_H_
#define SELFREPLY_AGREEMENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace selfreply {

// item id -> label.
using Labeling = std::map<std::string, int>;

struct ConfusionMatrix {
  // Sorted, distinct.
  std::vector<int> labels;
  // counts[i][j]: items labeled labels[i] by the reference (rows) and
  // labels[j] by the candidate (columns).
  std::vector<std::vector<int64_t>> counts;
  int64_t n = 0;

  // Index of a label, or -1.
  int IndexOf(int label) const;
  int64_t Cell(int row_label, int column_label) const;
  int64_t RowSum(size_t i) const;
  int64_t ColumnSum(size_t j) const;
  ConfusionMatrix Transposed() const;
};

// Tallies items present in both labelings. Throws ItemMismatchError listing
// the symmetric difference of the item sets when they differ. When
// `labels` is given every label must belong to it (DomainError otherwise);
// by default the label set is the union of the labels used.
ConfusionMatrix BuildConfusionMatrix(
    const Labeling &reference, const Labeling &candidate,
    const std::optional<std::vector<int>> &labels = std::nullopt);

// Positional variant: item i is labeled reference[i] and candidate[i].
ConfusionMatrix BuildConfusionMatrix(
    const std::vector<int> &reference, const std::vector<int> &candidate,
    const std::optional<std::vector<int>> &labels = std::nullopt);

// Observed and chance agreement.
double ObservedAgreement(const ConfusionMatrix &m);
double ChanceAgreement(const ConfusionMatrix &m);

// (po - pe) / (1 - pe). Throws UndefinedAgreementError on an empty matrix,
// or when pe == 1 and po < 1. Returns 1 when pe == po == 1.
double CohenKappa(const ConfusionMatrix &m);

struct LabelScores {
  int label = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  int64_t reference_count = 0;
  int64_t candidate_count = 0;
  // Absent from both labelings; all scores are 0 by convention.
  bool unsupported = false;
};

// One-vs-rest scores for every label of the matrix plus every label in
// `extra_labels` (unsupported if absent from the matrix). Rows are the
// reference. 0/0 is 0.
std::vector<LabelScores> PerCategoryF1(
    const ConfusionMatrix &m, const std::vector<int> &extra_labels = {});

// Unweighted mean F1 over `categories`; a category without a row in
// `scores` counts as F1 0. Throws DomainError if categories is empty.
double MacroF1(const std::vector<LabelScores> &scores,
               const std::vector<int> &categories);

struct AgreementReport {
  ConfusionMatrix matrix;
  double po = 0;
  double pe = 0;
  // nullopt when undefined.
  std::optional<double> kappa;
  std::vector<LabelScores> per_label;
  std::vector<int> macro_categories;
  double macro_f1 = 0;
};

// Builds the full report. Scores are listed for the matrix labels and for
// every macro category.
AgreementReport MakeAgreementReport(const ConfusionMatrix &m,
                                    const std::vector<int> &macro_categories);

// `label_names` maps labels to display names; unnamed labels print as
// numbers.
nlohmann::ordered_json AgreementToJson(
    const AgreementReport &report,
    const std::map<int, std::string> &label_names = {});

// A table with one F1 column per report, one row per macro category and a
// final macro-average row, followed by the kappa of each column.
std::string RenderF1Table(
    const std::vector<std::pair<std::string, AgreementReport>> &columns,
    const std::map<int, std::string> &label_names = {});

}  // namespace selfreply

#endif  // SELFREPLY_AGREEMENT_H_
