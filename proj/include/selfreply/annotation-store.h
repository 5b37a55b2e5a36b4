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

// Annotation records, samples of threads to annotate and gold datasets.

#ifndef SELFREPLY_ANNOTATION_STORE_H_
#define SELFREPLY_ANNOTATION_STORE_H_

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "selfreply/categories.h"
#include "selfreply/corpus-model.h"
#include "selfreply/timestamp.h"

namespace selfreply {

// Annotator ids with this prefix denote model runs; they alone may record
// Null.
inline constexpr std::string_view kModelAnnotatorPrefix = "llm:";
// The annotator whose records form the gold dataset.
inline constexpr std::string_view kGoldAnnotator = "gold";
// The annotator recording manual readings of ambiguous model answers.
inline constexpr std::string_view kManualLlmAnnotator = "manual-llm";

bool IsModelAnnotator(std::string_view annotator_id);

struct AnnotationRecord {
  std::string thread_id;
  std::string annotator_id;
  CategoryLabel label = CategoryLabel::kError;
  Timestamp noted_at;
  std::optional<std::string> comment;

  bool operator==(const AnnotationRecord &other) const = default;
};

nlohmann::ordered_json RecordToJson(const AnnotationRecord &record);
// Throws Error on missing or invalid fields.
AnnotationRecord RecordFromJson(const nlohmann::json &value);

// Append-only store of annotation records. A later record for the same
// (thread, annotator) supersedes the earlier one in the current view while
// the history keeps both. With a log path every accepted record is
// appended to the file before Record returns. Writes are serialized;
// readers get consistent snapshots.
class AnnotationStore {
 public:
  // known_threads: ids that may be annotated. log_path: JSONL file, loaded
  // if it exists, created otherwise; empty keeps the store in memory.
  AnnotationStore(std::unordered_set<std::string> known_threads,
                  const std::string &log_path = "");

  AnnotationStore(const AnnotationStore &) = delete;
  AnnotationStore &operator=(const AnnotationStore &) = delete;

  // Throws UnknownThreadError, or RejectedLabelError for Null from a human
  // annotator or an empty annotator id. Returns false (and stores nothing)
  // when the record repeats the current label and comment of its
  // (thread, annotator).
  bool Record(const AnnotationRecord &record);

  // Every accepted record in arrival order.
  std::vector<AnnotationRecord> History() const;
  // Latest record per (thread, annotator), ordered by first submission.
  std::vector<AnnotationRecord> Current() const;
  std::optional<AnnotationRecord> Latest(const std::string &thread_id,
                                         const std::string &annotator_id) const;
  // thread id -> current label of one annotator.
  std::map<std::string, CategoryLabel> LabelsOf(
      const std::string &annotator_id) const;

  // The current view as JSONL, one record per line.
  std::string ExportJsonl() const;

  bool IsKnownThread(const std::string &thread_id) const {
    return known_threads_.count(thread_id) > 0;
  }

 private:
  using Key = std::pair<std::string, std::string>;

  void Validate(const AnnotationRecord &record) const;
  void Apply(const AnnotationRecord &record);

  std::unordered_set<std::string> known_threads_;
  mutable std::shared_mutex mutex_;
  std::vector<AnnotationRecord> history_;
  // Index into history_ of the current record for each key.
  std::map<Key, size_t> current_;
  // Keys in order of first submission.
  std::vector<Key> order_;
  std::unique_ptr<std::ofstream> log_;
};

// Reads an annotation JSONL file (the store log or an export).
std::vector<AnnotationRecord> ReadAnnotationRecords(const std::string &path);

// A uniform sample of the threads opening with a self-reply.
struct Sample {
  uint64_t seed = 0;
  size_t n = 0;
  std::vector<std::string> thread_ids;

  bool operator==(const Sample &other) const = default;
};

// Samples n eligible threads without replacement, in shuffled order.
// Deterministic for fixed (corpus, n, seed) on every platform. Throws
// InsufficientPopulationError when fewer than n threads are eligible.
Sample SampleThreads(const Corpus &corpus, size_t n, uint64_t seed);

// Header {"seed", "n"} followed by one {"thread_id"} line per thread.
std::string SampleToJsonl(const Sample &sample);
Sample ReadSample(const std::string &path);
Sample ParseSample(std::string_view jsonl, const std::string &name);

struct GoldDataset {
  std::string language;
  std::map<std::string, CategoryLabel> entries;
  std::string source_sample;

  bool operator==(const GoldDataset &other) const = default;
};

// Gold from the current records of the gold annotator.
GoldDataset GoldFromStore(const AnnotationStore &store, std::string language,
                          std::string source_sample,
                          std::string_view annotator = kGoldAnnotator);

// Throws UnknownThreadError for threads missing from the corpus, and
// RejectedLabelError for Null labels.
void ValidateGold(const GoldDataset &gold, const Corpus &corpus);

// One {"thread_id", "label"} line per entry, sorted by thread id.
std::string ExportGold(const GoldDataset &gold);
// Accepts gold lines or annotation records (for which `annotator` selects
// the records; by default the gold annotator if present, else the single
// annotator in the file).
GoldDataset ImportGold(std::string_view jsonl, const std::string &name,
                       std::optional<std::string> annotator = std::nullopt);
GoldDataset ReadGold(const std::string &path,
                     std::optional<std::string> annotator = std::nullopt);

// Counts indexed by label number (index 0 unused).
using LabelCounts = std::array<int64_t, kLastLabel + 1>;
LabelCounts LabelDistribution(const GoldDataset &gold);

}  // namespace selfreply

#endif  // SELFREPLY_ANNOTATION_STORE_H_
