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

#include "selfreply/agreement.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "selfreply/errors.h"

namespace selfreply {

namespace {

std::string JoinIds(const std::vector<std::string> &ids) {
  std::string out;
  for (const std::string &id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

double Ratio(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

ConfusionMatrix EmptyMatrix(std::vector<int> labels) {
  ConfusionMatrix m;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  m.labels = std::move(labels);
  m.counts.assign(m.labels.size(), std::vector<int64_t>(m.labels.size(), 0));
  return m;
}

void Tally(ConfusionMatrix *m, int a, int b) {
  int i = m->IndexOf(a), j = m->IndexOf(b);
  if (i < 0 || j < 0) {
    throw DomainError("label " + std::to_string(i < 0 ? a : b) +
                      " is not in the label set");
  }
  m->counts[i][j]++;
  m->n++;
}

std::string LabelText(int label, const std::map<int, std::string> &names) {
  auto it = names.find(label);
  return it == names.end() ? std::to_string(label) : it->second;
}

std::string Fixed(double value, int digits) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

ItemMismatchError::ItemMismatchError(std::vector<std::string> difference)
    : Error("labelings cover different items: " + JoinIds(difference)),
      difference_(std::move(difference)) {}

MissingGoldError::MissingGoldError(std::vector<std::string> ids)
    : Error("no gold label for: " + JoinIds(ids)), ids_(std::move(ids)) {}

int ConfusionMatrix::IndexOf(int label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return -1;
  return static_cast<int>(it - labels.begin());
}

int64_t ConfusionMatrix::Cell(int row_label, int column_label) const {
  int i = IndexOf(row_label), j = IndexOf(column_label);
  return i < 0 || j < 0 ? 0 : counts[i][j];
}

int64_t ConfusionMatrix::RowSum(size_t i) const {
  int64_t sum = 0;
  for (int64_t c : counts[i]) sum += c;
  return sum;
}

int64_t ConfusionMatrix::ColumnSum(size_t j) const {
  int64_t sum = 0;
  for (const auto &row : counts) sum += row[j];
  return sum;
}

ConfusionMatrix ConfusionMatrix::Transposed() const {
  ConfusionMatrix t = *this;
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = 0; j < labels.size(); ++j) t.counts[i][j] = counts[j][i];
  }
  return t;
}

ConfusionMatrix BuildConfusionMatrix(
    const Labeling &reference, const Labeling &candidate,
    const std::optional<std::vector<int>> &labels) {
  std::vector<std::string> difference;
  for (const auto &[id, label] : reference) {
    if (!candidate.count(id)) difference.push_back(id);
  }
  for (const auto &[id, label] : candidate) {
    if (!reference.count(id)) difference.push_back(id);
  }
  if (!difference.empty()) {
    std::sort(difference.begin(), difference.end());
    throw ItemMismatchError(std::move(difference));
  }
  std::vector<int> used;
  if (labels) {
    used = *labels;
  } else {
    for (const auto &[id, label] : reference) used.push_back(label);
    for (const auto &[id, label] : candidate) used.push_back(label);
  }
  ConfusionMatrix m = EmptyMatrix(std::move(used));
  for (const auto &[id, label] : reference) Tally(&m, label, candidate.at(id));
  return m;
}

ConfusionMatrix BuildConfusionMatrix(
    const std::vector<int> &reference, const std::vector<int> &candidate,
    const std::optional<std::vector<int>> &labels) {
  if (reference.size() != candidate.size()) {
    throw ItemMismatchError({"item count " + std::to_string(reference.size()) +
                             " vs " + std::to_string(candidate.size())});
  }
  std::vector<int> used;
  if (labels) {
    used = *labels;
  } else {
    used = reference;
    used.insert(used.end(), candidate.begin(), candidate.end());
  }
  ConfusionMatrix m = EmptyMatrix(std::move(used));
  for (size_t i = 0; i < reference.size(); ++i) {
    Tally(&m, reference[i], candidate[i]);
  }
  return m;
}

double ObservedAgreement(const ConfusionMatrix &m) {
  int64_t diagonal = 0;
  for (size_t i = 0; i < m.labels.size(); ++i) diagonal += m.counts[i][i];
  return Ratio(diagonal, m.n);
}

double ChanceAgreement(const ConfusionMatrix &m) {
  if (m.n == 0) return 0;
  // Sum of products of marginals over n^2, in integers until the division.
  long double products = 0;
  for (size_t i = 0; i < m.labels.size(); ++i) {
    products += static_cast<long double>(m.RowSum(i)) * m.ColumnSum(i);
  }
  long double n = static_cast<long double>(m.n);
  return static_cast<double>(products / (n * n));
}

double CohenKappa(const ConfusionMatrix &m) {
  if (m.n == 0) throw UndefinedAgreementError("kappa of an empty matrix");
  double po = ObservedAgreement(m);
  double pe = ChanceAgreement(m);
  if (pe == 1.0) {
    if (po == 1.0) return 1.0;
    throw UndefinedAgreementError("kappa undefined: chance agreement is 1");
  }
  return (po - pe) / (1.0 - pe);
}

std::vector<LabelScores> PerCategoryF1(const ConfusionMatrix &m,
                                       const std::vector<int> &extra_labels) {
  std::set<int> all(m.labels.begin(), m.labels.end());
  all.insert(extra_labels.begin(), extra_labels.end());
  std::vector<LabelScores> scores;
  for (int label : all) {
    LabelScores s;
    s.label = label;
    int i = m.IndexOf(label);
    if (i >= 0) {
      int64_t tp = m.counts[i][i];
      s.reference_count = m.RowSum(i);
      s.candidate_count = m.ColumnSum(i);
      s.precision = Ratio(tp, s.candidate_count);
      s.recall = Ratio(tp, s.reference_count);
      double sum = s.precision + s.recall;
      s.f1 = sum == 0 ? 0 : 2 * s.precision * s.recall / sum;
    }
    s.unsupported = s.reference_count == 0 && s.candidate_count == 0;
    scores.push_back(s);
  }
  return scores;
}

double MacroF1(const std::vector<LabelScores> &scores,
               const std::vector<int> &categories) {
  if (categories.empty()) throw DomainError("macro F1 over no categories");
  double sum = 0;
  for (int category : categories) {
    for (const LabelScores &s : scores) {
      if (s.label == category) {
        sum += s.f1;
        break;
      }
    }
  }
  return sum / static_cast<double>(categories.size());
}

AgreementReport MakeAgreementReport(const ConfusionMatrix &m,
                                    const std::vector<int> &macro_categories) {
  AgreementReport report;
  report.matrix = m;
  report.po = ObservedAgreement(m);
  report.pe = ChanceAgreement(m);
  try {
    report.kappa = CohenKappa(m);
  } catch (const UndefinedAgreementError &) {
    report.kappa.reset();
  }
  report.per_label = PerCategoryF1(m, macro_categories);
  report.macro_categories = macro_categories;
  report.macro_f1 = macro_categories.empty()
                        ? 0
                        : MacroF1(report.per_label, macro_categories);
  return report;
}

nlohmann::ordered_json AgreementToJson(
    const AgreementReport &report,
    const std::map<int, std::string> &label_names) {
  using nlohmann::ordered_json;
  ordered_json out;
  ordered_json labels = ordered_json::array();
  for (int label : report.matrix.labels) {
    labels.push_back(
        {{"label", label}, {"name", LabelText(label, label_names)}});
  }
  out["labels"] = labels;
  out["matrix"] = report.matrix.counts;
  out["n"] = report.matrix.n;
  out["po"] = report.po;
  out["pe"] = report.pe;
  out["kappa"] = report.kappa ? ordered_json(*report.kappa) : ordered_json();
  ordered_json per_label = ordered_json::array();
  for (const LabelScores &s : report.per_label) {
    per_label.push_back({{"label", s.label},
                         {"name", LabelText(s.label, label_names)},
                         {"precision", s.precision},
                         {"recall", s.recall},
                         {"f1", s.f1},
                         {"reference_count", s.reference_count},
                         {"candidate_count", s.candidate_count},
                         {"unsupported", s.unsupported}});
  }
  out["per_label"] = per_label;
  out["macro_categories"] = report.macro_categories;
  out["macro_f1"] = report.macro_f1;
  return out;
}

std::string RenderF1Table(
    const std::vector<std::pair<std::string, AgreementReport>> &columns,
    const std::map<int, std::string> &label_names) {
  std::ostringstream out;
  constexpr int kFirstWidth = 20;
  auto cell = [](const std::string &text, size_t width) {
    return text +
           std::string(width > text.size() ? width - text.size() : 1, ' ');
  };
  std::vector<size_t> widths;
  out << cell("Category", kFirstWidth);
  for (const auto &[name, report] : columns) {
    widths.push_back(std::max<size_t>(name.size() + 2, 8));
    out << cell(name, widths.back());
  }
  out << '\n';
  std::vector<int> rows;
  if (!columns.empty()) rows = columns.front().second.macro_categories;
  for (int label : rows) {
    out << cell(LabelText(label, label_names), kFirstWidth);
    for (size_t c = 0; c < columns.size(); ++c) {
      double f1 = 0;
      for (const LabelScores &s : columns[c].second.per_label) {
        if (s.label == label) f1 = s.f1;
      }
      out << cell(Fixed(f1, 2), widths[c]);
    }
    out << '\n';
  }
  out << cell("Macro-average F1", kFirstWidth);
  for (size_t c = 0; c < columns.size(); ++c) {
    out << cell(Fixed(columns[c].second.macro_f1, 2), widths[c]);
  }
  out << '\n' << cell("Cohen's kappa", kFirstWidth);
  for (size_t c = 0; c < columns.size(); ++c) {
    const auto &kappa = columns[c].second.kappa;
    out << cell(kappa ? Fixed(*kappa, 3) : "undefined", widths[c]);
  }
  out << '\n';
  std::string text = out.str();
  // Drop trailing padding on each line.
  std::string cleaned;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    std::string line = text.substr(start, end - start);
    line.erase(line.find_last_not_of(' ') + 1);
    cleaned += line + '\n';
    start = end + 1;
  }
  return cleaned;
}

}  // namespace selfreply
