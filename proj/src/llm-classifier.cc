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

#include "selfreply/llm-classifier.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>

#include "selfreply/errors.h"
#include "selfreply/text-util.h"
#include "selfreply/timestamp.h"

namespace selfreply {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::vector<std::string> AmbiguousThreads(const RunManifest &manifest) {
  std::vector<std::string> ids;
  for (const ManifestEntry &entry : manifest.entries) {
    if (entry.answer.kind == AnswerKind::kAmbiguous) {
      ids.push_back(entry.thread_id);
    }
  }
  return ids;
}

std::string ManifestToJsonl(const RunManifest &manifest) {
  auto dump = [](const ordered_json &value) {
    return value.dump(-1, ' ', false, json::error_handler_t::replace);
  };
  ordered_json header;
  header["model"] = manifest.model;
  header["endpoint"] = manifest.endpoint;
  header["settings"] = {{"temperature", manifest.temperature},
                        {"concurrency", manifest.concurrency},
                        {"max_retries", manifest.max_retries}};
  header["template_hash"] = manifest.template_hash;
  header["started_at"] = manifest.started_at;
  header["complete"] = manifest.complete;
  header["abort_reason"] = manifest.abort_reason;
  std::string out = dump(header) + "\n";
  for (const ManifestEntry &entry : manifest.entries) {
    ordered_json line;
    line["thread_id"] = entry.thread_id;
    line["raw"] = entry.answer.raw;
    line["parsed"] = entry.answer.ParsedName();
    line["latency_ms"] = entry.latency_ms;
    line["retries"] = entry.retries;
    out += dump(line) + "\n";
  }
  return out;
}

RunManifest ParseManifest(std::string_view jsonl, const std::string &name) {
  RunManifest manifest;
  bool header = false;
  int number = 0;
  std::unordered_map<std::string, int> seen;
  for (const std::string &line : SplitLines(jsonl)) {
    number++;
    if (TrimView(line).empty()) continue;
    try {
      json value = json::parse(line);
      if (!header) {
        manifest.model = value.at("model").get<std::string>();
        manifest.endpoint = value.at("endpoint").get<std::string>();
        const json &settings = value.at("settings");
        manifest.temperature = settings.value("temperature", 0.0);
        manifest.concurrency = settings.value("concurrency", 1);
        manifest.max_retries = settings.value("max_retries", 3);
        manifest.template_hash = value.at("template_hash").get<std::string>();
        manifest.started_at = value.value("started_at", "");
        manifest.complete = value.value("complete", true);
        manifest.abort_reason = value.value("abort_reason", "");
        header = true;
        continue;
      }
      ManifestEntry entry;
      entry.thread_id = value.at("thread_id").get<std::string>();
      std::string raw = value.at("raw").get<std::string>();
      std::string parsed = value.at("parsed").get<std::string>();
      // Re-deriving keeps the rationale span; the stored value wins when
      // they differ (a malformed payload is stored as ambiguous).
      entry.answer = ParseLlmAnswer(raw);
      if (entry.answer.ParsedName() != parsed) {
        entry.answer = AnswerFromParsedName(raw, parsed);
      }
      entry.latency_ms = value.value("latency_ms", int64_t{0});
      entry.retries = value.value("retries", 0);
      if (seen[entry.thread_id]++ > 0) throw DuplicateIdError(entry.thread_id);
      manifest.entries.push_back(std::move(entry));
    } catch (const json::exception &e) {
      throw FormatError(name, number, e.what());
    } catch (const DuplicateIdError &) {
      throw;
    } catch (const Error &e) {
      throw FormatError(name, number, e.what());
    }
  }
  if (!header) throw FormatError(name, 1, "missing manifest header");
  return manifest;
}

RunManifest ReadManifest(const std::string &path) {
  return ParseManifest(ReadFile(path), path);
}

RunManifest ClassifyCorpus(
    ChatClient &client, const Corpus &corpus,
    const std::vector<std::string> &thread_ids,
    const PromptTemplate &prompt_template, const ClassifySettings &settings,
    const std::function<void(size_t done, size_t total)> &progress) {
  std::unordered_map<std::string, const Thread *> by_id;
  for (const Thread &thread : corpus.threads) by_id[thread.id] = &thread;
  std::vector<Prompt> prompts;
  for (const std::string &id : thread_ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw UnknownThreadError(id);
    prompts.push_back(prompt_template.Build(*it->second));
  }

  RunManifest manifest;
  manifest.model = settings.model;
  manifest.endpoint = client.endpoint();
  manifest.temperature = settings.temperature;
  manifest.concurrency = settings.concurrency;
  manifest.max_retries = settings.max_retries;
  manifest.template_hash = prompt_template.Hash();
  manifest.started_at = Timestamp::Now().ToIso();

  std::vector<std::optional<ManifestEntry>> results(thread_ids.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> aborted{false};
  std::mutex mutex;
  size_t done = 0;

  auto classify = [&](size_t i) -> bool {
    ChatRequest request;
    request.model = settings.model;
    request.system = prompts[i].system;
    request.user = prompts[i].user;
    request.temperature = settings.temperature;
    ManifestEntry entry;
    entry.thread_id = thread_ids[i];
    for (int attempt = 0;; ++attempt) {
      auto start = std::chrono::steady_clock::now();
      try {
        std::string reply = client.Complete(request);
        entry.answer = ParseLlmAnswer(reply);
      } catch (const MalformedReplyError &e) {
        entry.answer = LlmAnswer{};
        entry.answer.raw = e.payload();
        entry.answer.kind = AnswerKind::kAmbiguous;
      } catch (const TransportError &e) {
        if (attempt >= settings.max_retries || aborted) {
          std::lock_guard<std::mutex> lock(mutex);
          if (!aborted.exchange(true)) {
            manifest.abort_reason = "thread " + thread_ids[i] + ": " + e.what();
          }
          return false;
        }
        entry.retries = attempt + 1;
        std::this_thread::sleep_for(settings.backoff * (int64_t{1} << attempt));
        continue;
      }
      entry.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      break;
    }
    std::lock_guard<std::mutex> lock(mutex);
    results[i] = std::move(entry);
    done++;
    if (progress) progress(done, thread_ids.size());
    return true;
  };

  auto work = [&]() {
    while (!aborted) {
      size_t i = next.fetch_add(1);
      if (i >= thread_ids.size()) return;
      if (!classify(i)) return;
    }
  };
  size_t workers = std::clamp<size_t>(settings.concurrency, 1,
                                      std::max<size_t>(thread_ids.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) threads.emplace_back(work);
    for (std::thread &t : threads) t.join();
  }

  manifest.complete = !aborted;
  for (auto &result : results) {
    if (result) manifest.entries.push_back(std::move(*result));
  }
  return manifest;
}

AgreementReport EvaluateRun(const RunManifest &manifest,
                            const GoldDataset &gold,
                            const EvaluationOptions &options) {
  std::vector<std::string> missing;
  Labeling reference, candidate;
  for (const ManifestEntry &entry : manifest.entries) {
    auto it = gold.entries.find(entry.thread_id);
    if (it == gold.entries.end()) {
      missing.push_back(entry.thread_id);
      continue;
    }
    if (it->second == CategoryLabel::kError && !options.include_error_gold) {
      continue;
    }
    CategoryLabel predicted = CategoryLabel::kNull;
    auto resolved = options.resolutions.find(entry.thread_id);
    if (resolved != options.resolutions.end()) {
      predicted = resolved->second;
    } else if (entry.answer.kind == AnswerKind::kLabel) {
      predicted = *entry.answer.label;
    }
    reference[entry.thread_id] = LabelNumber(it->second);
    candidate[entry.thread_id] = LabelNumber(predicted);
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    throw MissingGoldError(std::move(missing));
  }
  return MakeAgreementReport(BuildConfusionMatrix(reference, candidate),
                             TypologyLabelNumbers());
}

const std::map<int, std::string> &CategoryNames() {
  static const std::map<int, std::string> kNames = [] {
    std::map<int, std::string> names;
    for (int i = kFirstLabel; i <= kLastLabel; ++i) {
      names[i] = CategoryName(*LabelFromNumber(i));
    }
    return names;
  }();
  return kNames;
}

std::vector<int> TypologyLabelNumbers() {
  std::vector<int> numbers;
  for (CategoryLabel label : TypologyLabels()) {
    numbers.push_back(LabelNumber(label));
  }
  return numbers;
}

}  // namespace selfreply
