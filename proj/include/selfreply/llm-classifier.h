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

// Zero-shot classification runs and their evaluation against gold labels.

#ifndef SELFREPLY_LLM_CLASSIFIER_H_
#define SELFREPLY_LLM_CLASSIFIER_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "selfreply/agreement.h"
#include "selfreply/annotation-store.h"
#include "selfreply/chat-client.h"
#include "selfreply/corpus-model.h"
#include "selfreply/llm-answer.h"
#include "selfreply/prompt.h"

namespace selfreply {

struct ClassifySettings {
  std::string model;
  double temperature = 0;
  int concurrency = 1;
  // Retries after the first attempt, on transport errors only.
  int max_retries = 3;
  // Delay before retry r (1-based) is backoff * 2^(r-1).
  std::chrono::milliseconds backoff{500};
};

struct ManifestEntry {
  std::string thread_id;
  LlmAnswer answer;
  int64_t latency_ms = 0;
  int retries = 0;
};

struct RunManifest {
  std::string model;
  std::string endpoint;
  double temperature = 0;
  int concurrency = 1;
  int max_retries = 3;
  std::string template_hash;
  std::string started_at;
  // False when the run stopped early; entries then hold the threads
  // finished before the failure.
  bool complete = true;
  std::string abort_reason;
  // In sample order; each thread at most once.
  std::vector<ManifestEntry> entries;
};

// Threads whose answers need a manual reading.
std::vector<std::string> AmbiguousThreads(const RunManifest &manifest);

// Header line then one line per entry:
//   {"model", "endpoint", "settings": {...}, "template_hash", "started_at",
//    "complete", "abort_reason"}
//   {"thread_id", "raw", "parsed", "latency_ms", "retries"}
std::string ManifestToJsonl(const RunManifest &manifest);
RunManifest ParseManifest(std::string_view jsonl, const std::string &name);
RunManifest ReadManifest(const std::string &path);

// Classifies the given threads with one independent request each, up to
// settings.concurrency at a time. Transport errors are retried with
// exponential backoff; when a thread still fails the run stops and the
// returned manifest is marked incomplete. Malformed replies are recorded as
// Ambiguous answers carrying the raw payload. Throws UnknownThreadError
// for ids missing from the corpus and Error for threads with fewer than two
// posts, before any request is sent.
RunManifest ClassifyCorpus(
    ChatClient &client, const Corpus &corpus,
    const std::vector<std::string> &thread_ids,
    const PromptTemplate &prompt_template, const ClassifySettings &settings,
    const std::function<void(size_t done, size_t total)> &progress = nullptr);

struct EvaluationOptions {
  // Keep pairs whose gold label is Error; they can never be predicted.
  bool include_error_gold = false;
  // Manual readings (thread id -> label) replacing parsed answers.
  std::map<std::string, CategoryLabel> resolutions;
};

// Pairs each manifest entry with its gold label and scores the run.
// Unresolved Ambiguous answers count as Null. Macro F1 is over the seven
// typology labels. Throws MissingGoldError listing threads without gold.
AgreementReport EvaluateRun(const RunManifest &manifest,
                            const GoldDataset &gold,
                            const EvaluationOptions &options = {});

// Display names for label numbers 1-9.
const std::map<int, std::string> &CategoryNames();

// The typology label numbers 1-7.
std::vector<int> TypologyLabelNumbers();

}  // namespace selfreply

#endif  // SELFREPLY_LLM_CLASSIFIER_H_
