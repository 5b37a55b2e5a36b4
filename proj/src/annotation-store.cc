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

#include "selfreply/annotation-store.h"

#include <filesystem>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"
#include "selfreply/thread-analysis.h"

namespace selfreply {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool IsModelAnnotator(std::string_view annotator_id) {
  return annotator_id.substr(0, kModelAnnotatorPrefix.size()) ==
         kModelAnnotatorPrefix;
}

ordered_json RecordToJson(const AnnotationRecord &record) {
  ordered_json out;
  out["thread_id"] = record.thread_id;
  out["annotator_id"] = record.annotator_id;
  out["label"] = LabelNumber(record.label);
  out["noted_at"] = record.noted_at.ToIso();
  out["comment"] =
      record.comment ? ordered_json(*record.comment) : ordered_json();
  return out;
}

AnnotationRecord RecordFromJson(const json &value) {
  try {
    AnnotationRecord record;
    record.thread_id = value.at("thread_id").get<std::string>();
    record.annotator_id = value.at("annotator_id").get<std::string>();
    auto label = LabelFromNumber(value.at("label").get<int>());
    if (!label) throw Error("label out of range");
    record.label = *label;
    record.noted_at =
        Timestamp::ParseIso(value.at("noted_at").get<std::string>());
    if (value.contains("comment") && !value["comment"].is_null()) {
      record.comment = value["comment"].get<std::string>();
    }
    return record;
  } catch (const json::exception &e) {
    throw Error(e.what());
  }
}

namespace {

std::vector<AnnotationRecord> ParseRecords(std::string_view text,
                                           const std::string &name) {
  std::vector<AnnotationRecord> records;
  int number = 0;
  for (const std::string &line : SplitLines(text)) {
    number++;
    if (TrimView(line).empty()) continue;
    try {
      records.push_back(RecordFromJson(json::parse(line)));
    } catch (const json::exception &e) {
      throw FormatError(name, number, e.what());
    } catch (const Error &e) {
      throw FormatError(name, number, e.what());
    }
  }
  return records;
}

}  // namespace

AnnotationStore::AnnotationStore(std::unordered_set<std::string> known_threads,
                                 const std::string &log_path)
    : known_threads_(std::move(known_threads)) {
  if (log_path.empty()) return;
  if (std::filesystem::exists(log_path)) {
    for (const AnnotationRecord &record :
         ParseRecords(ReadFile(log_path), log_path)) {
      Validate(record);
      Apply(record);
    }
  }
  log_ = std::make_unique<std::ofstream>(log_path,
                                         std::ios::binary | std::ios::app);
  if (!*log_) throw Error("cannot open annotation log " + log_path);
}

void AnnotationStore::Validate(const AnnotationRecord &record) const {
  if (TrimView(record.annotator_id).empty()) {
    throw RejectedLabelError("annotator id is empty");
  }
  if (!IsKnownThread(record.thread_id)) {
    throw UnknownThreadError(record.thread_id);
  }
  if (record.label == CategoryLabel::kNull &&
      !IsModelAnnotator(record.annotator_id)) {
    throw RejectedLabelError("Null is not a valid label for annotator " +
                             record.annotator_id);
  }
}

void AnnotationStore::Apply(const AnnotationRecord &record) {
  Key key{record.thread_id, record.annotator_id};
  history_.push_back(record);
  auto [it, inserted] = current_.emplace(key, history_.size() - 1);
  if (inserted) {
    order_.push_back(key);
  } else {
    it->second = history_.size() - 1;
  }
}

bool AnnotationStore::Record(const AnnotationRecord &record) {
  Validate(record);
  std::unique_lock lock(mutex_);
  auto it = current_.find(Key{record.thread_id, record.annotator_id});
  if (it != current_.end()) {
    const AnnotationRecord &latest = history_[it->second];
    if (latest.label == record.label && latest.comment == record.comment) {
      return false;
    }
  }
  if (log_) {
    *log_ << RecordToJson(record).dump() << '\n';
    log_->flush();
    if (!*log_) throw Error("cannot append to annotation log");
  }
  Apply(record);
  return true;
}

std::vector<AnnotationRecord> AnnotationStore::History() const {
  std::shared_lock lock(mutex_);
  return history_;
}

std::vector<AnnotationRecord> AnnotationStore::Current() const {
  std::shared_lock lock(mutex_);
  std::vector<AnnotationRecord> records;
  records.reserve(order_.size());
  for (const Key &key : order_) records.push_back(history_[current_.at(key)]);
  return records;
}

std::optional<AnnotationRecord> AnnotationStore::Latest(
    const std::string &thread_id, const std::string &annotator_id) const {
  std::shared_lock lock(mutex_);
  auto it = current_.find(Key{thread_id, annotator_id});
  if (it == current_.end()) return std::nullopt;
  return history_[it->second];
}

std::map<std::string, CategoryLabel> AnnotationStore::LabelsOf(
    const std::string &annotator_id) const {
  std::map<std::string, CategoryLabel> labels;
  for (const AnnotationRecord &record : Current()) {
    if (record.annotator_id == annotator_id) {
      labels[record.thread_id] = record.label;
    }
  }
  return labels;
}

std::string AnnotationStore::ExportJsonl() const {
  std::string out;
  for (const AnnotationRecord &record : Current()) {
    out += RecordToJson(record).dump() + "\n";
  }
  return out;
}

std::vector<AnnotationRecord> ReadAnnotationRecords(const std::string &path) {
  return ParseRecords(ReadFile(path), path);
}

namespace {

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementations.
uint64_t UniformBelow(std::mt19937_64 *rng, uint64_t bound) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    uint64_t x = (*rng)();
    if (x < limit) return x % bound;
  }
}

}  // namespace

Sample SampleThreads(const Corpus &corpus, size_t n, uint64_t seed) {
  std::vector<std::string> eligible;
  for (const Thread &thread : corpus.threads) {
    if (StartsWithSelfReply(thread)) eligible.push_back(thread.id);
  }
  if (n > eligible.size()) {
    throw InsufficientPopulationError(n, eligible.size());
  }
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < n; ++i) {
    size_t j = i + UniformBelow(&rng, eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
  }
  eligible.resize(n);
  return Sample{seed, n, std::move(eligible)};
}

std::string SampleToJsonl(const Sample &sample) {
  ordered_json header;
  header["seed"] = sample.seed;
  header["n"] = sample.n;
  std::string out = header.dump() + "\n";
  for (const std::string &id : sample.thread_ids) {
    out += ordered_json{{"thread_id", id}}.dump() + "\n";
  }
  return out;
}

Sample ParseSample(std::string_view jsonl, const std::string &name) {
  Sample sample;
  bool header = false;
  int number = 0;
  std::set<std::string> seen;
  for (const std::string &line : SplitLines(jsonl)) {
    number++;
    if (TrimView(line).empty()) continue;
    try {
      json value = json::parse(line);
      if (!header) {
        sample.seed = value.at("seed").get<uint64_t>();
        sample.n = value.at("n").get<size_t>();
        header = true;
        continue;
      }
      std::string id = value.at("thread_id").get<std::string>();
      if (!seen.insert(id).second) throw DuplicateIdError(id);
      sample.thread_ids.push_back(std::move(id));
    } catch (const json::exception &e) {
      throw FormatError(name, number, e.what());
    }
  }
  if (!header) throw FormatError(name, 1, "missing sample header");
  if (sample.thread_ids.size() != sample.n) {
    throw FormatError(
        name, number,
        "sample lists " + std::to_string(sample.thread_ids.size()) +
            " threads but declares n=" + std::to_string(sample.n));
  }
  return sample;
}

Sample ReadSample(const std::string &path) {
  return ParseSample(ReadFile(path), path);
}

GoldDataset GoldFromStore(const AnnotationStore &store, std::string language,
                          std::string source_sample,
                          std::string_view annotator) {
  GoldDataset gold;
  gold.language = std::move(language);
  gold.source_sample = std::move(source_sample);
  gold.entries = store.LabelsOf(std::string(annotator));
  return gold;
}

void ValidateGold(const GoldDataset &gold, const Corpus &corpus) {
  std::unordered_set<std::string> ids;
  for (const Thread &thread : corpus.threads) ids.insert(thread.id);
  for (const auto &[id, label] : gold.entries) {
    if (!ids.count(id)) throw UnknownThreadError(id);
    if (label == CategoryLabel::kNull) {
      throw RejectedLabelError("gold label for " + id + " is Null");
    }
  }
}

std::string ExportGold(const GoldDataset &gold) {
  ordered_json header;
  header["language"] = gold.language;
  header["source_sample"] = gold.source_sample;
  std::string out = header.dump() + "\n";
  for (const auto &[id, label] : gold.entries) {
    ordered_json line;
    line["thread_id"] = id;
    line["label"] = LabelNumber(label);
    out += line.dump() + "\n";
  }
  return out;
}

GoldDataset ImportGold(std::string_view jsonl, const std::string &name,
                       std::optional<std::string> annotator) {
  GoldDataset gold;
  std::map<std::string, std::map<std::string, CategoryLabel>> by_annotator;
  int number = 0;
  for (const std::string &line : SplitLines(jsonl)) {
    number++;
    if (TrimView(line).empty()) continue;
    try {
      json value = json::parse(line);
      if (!value.contains("thread_id")) {
        if (value.contains("language")) {
          gold.language = value["language"].get<std::string>();
        }
        if (value.contains("source_sample")) {
          gold.source_sample = value["source_sample"].get<std::string>();
        }
        continue;
      }
      if (value.contains("annotator_id")) {
        AnnotationRecord record = RecordFromJson(value);
        by_annotator[record.annotator_id][record.thread_id] = record.label;
        continue;
      }
      std::string id = value.at("thread_id").get<std::string>();
      auto label = LabelFromNumber(value.at("label").get<int>());
      if (!label || *label == CategoryLabel::kNull) {
        throw Error("gold labels must be 1-8");
      }
      if (!gold.entries.emplace(id, *label).second) throw DuplicateIdError(id);
    } catch (const json::exception &e) {
      throw FormatError(name, number, e.what());
    } catch (const DuplicateIdError &) {
      throw;
    } catch (const Error &e) {
      throw FormatError(name, number, e.what());
    }
  }
  if (!by_annotator.empty()) {
    if (!gold.entries.empty()) {
      throw Error(name + ": mixes gold lines and annotation records");
    }
    std::string chosen;
    if (annotator) {
      chosen = *annotator;
    } else if (by_annotator.count(std::string(kGoldAnnotator))) {
      chosen = kGoldAnnotator;
    } else if (by_annotator.size() == 1) {
      chosen = by_annotator.begin()->first;
    } else {
      throw Error(name + ": several annotators, choose one");
    }
    auto it = by_annotator.find(chosen);
    if (it == by_annotator.end()) {
      throw Error(name + ": no records by annotator " + chosen);
    }
    gold.entries = it->second;
  }
  return gold;
}

GoldDataset ReadGold(const std::string &path,
                     std::optional<std::string> annotator) {
  return ImportGold(ReadFile(path), path, std::move(annotator));
}

LabelCounts LabelDistribution(const GoldDataset &gold) {
  LabelCounts counts{};
  for (const auto &[id, label] : gold.entries) counts[LabelNumber(label)]++;
  return counts;
}

}  // namespace selfreply
