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

#include "selfreply/cli.h"

#include <filesystem>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfreply/agreement.h"
#include "selfreply/annotation-api.h"
#include "selfreply/annotation-store.h"
#include "selfreply/corpus-io.h"
#include "selfreply/errors.h"
#include "selfreply/ingest.h"
#include "selfreply/keyness.h"
#include "selfreply/llm-classifier.h"
#include "selfreply/text-util.h"
#include "selfreply/thread-analysis.h"

namespace selfreply {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

int DefaultJobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

struct Config {
  // Shared.
  std::string in;
  std::string out;
  std::string lang = "en";
  std::string bots_file;
  int jobs = DefaultJobs();
  bool no_filter = false;
  bool keep_unsigned_undated = false;
  bool keep_signed_undated = false;
  bool keep_bots = false;
  // ingest
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string locales_dir = LocaleProfile::DefaultDirectory();
  bool all_namespaces = false;
  // keyness
  int64_t min_freq = 5;
  std::string reference = "onset-pairs";
  size_t top = 0;
  // sample
  size_t n = 0;
  uint64_t seed = 0;
  // serve
  std::string sample;
  std::string store;
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  // classify
  std::string endpoint;
  std::string model;
  int concurrency = 1;
  double temperature = 0;
  int max_retries = 3;
  int timeout_ms = 120000;
  int backoff_ms = 500;
  // evaluate
  std::string gold;
  std::string pred;
  std::optional<std::string> gold_annotator;
  std::optional<std::string> pred_annotator;
  bool include_error = false;
  std::string resolutions;
};

class Runner {
 public:
  Runner(const Config &config, std::ostream &out, std::ostream &err)
      : c_(config), out_(out), err_(err) {}

  int Ingest();
  int Stats();
  int Keyness();
  int SampleCommand();
  int Serve();
  int Classify();
  int Evaluate();

 private:
  // Machine output to --out (summary to stdout) or, without --out, to
  // stdout (summary to stderr).
  void Emit(const std::string &machine, const std::string &summary) {
    if (!c_.out.empty()) {
      WriteFile(c_.out, machine);
      out_ << summary;
    } else {
      out_ << machine;
      err_ << summary;
    }
  }

  // The heuristic plus the --bots list, or the shipped list when present.
  BotRuleset Bots() const {
    if (!c_.bots_file.empty()) return BotRuleset::LoadFile(c_.bots_file);
    std::string shipped = BotRuleset::DefaultListPath();
    if (std::filesystem::exists(shipped)) return BotRuleset::LoadFile(shipped);
    return BotRuleset::Default();
  }

  Corpus LoadCorpus(const BotRuleset &bots) const {
    Corpus corpus = ReadCorpus(c_.in);
    if (c_.no_filter) return corpus;
    FilterPolicy policy;
    policy.exclude_unsigned_undated = !c_.keep_unsigned_undated;
    policy.exclude_signed_undated = !c_.keep_signed_undated;
    policy.exclude_bot_threads = !c_.keep_bots;
    policy.bots = &bots;
    size_t before = corpus.threads.size();
    corpus = FilterValidThreads(corpus, policy);
    err_ << "filter: kept " << corpus.threads.size() << " of " << before
         << " threads\n";
    return corpus;
  }

  const Config &c_;
  std::ostream &out_;
  std::ostream &err_;
};

int Runner::Ingest() {
  IngestOptions options;
  options.language = ParseLanguage(c_.lang);
  options.format = ParseInputFormat(c_.format);
  options.bots = Bots();
  options.jobs = c_.jobs;
  if (c_.all_namespaces) options.dump_namespace.reset();
  options.progress = [this](size_t pages) {
    if (pages % 1000 == 0) err_ << "ingest: " << pages << " pages\n";
  };
  LocaleProfile locale = LocaleProfile::Load(c_.locales_dir, options.language);
  size_t pages = 0;
  Corpus corpus = IngestPaths(c_.inputs, locale, options, &pages);
  ValidateCorpus(corpus);
  std::ostringstream machine;
  WriteCorpus(corpus, machine);
  size_t posts = 0;
  for (const Thread &thread : corpus.threads) posts += thread.posts.size();
  std::ostringstream summary;
  summary << "ingested " << pages << " pages: " << corpus.threads.size()
          << " threads, " << posts << " posts\n";
  Emit(machine.str(), summary.str());
  return kExitOk;
}

int Runner::Stats() {
  BotRuleset bots = Bots();
  Corpus corpus = LoadCorpus(bots);
  StatsReport report = CorpusStats(corpus, c_.jobs);
  Emit(StatsToJson(report).dump(2) + "\n", RenderStatsText(report));
  return kExitOk;
}

int Runner::Keyness() {
  BotRuleset bots = Bots();
  Corpus corpus = LoadCorpus(bots);
  KeynessOptions options;
  options.min_frequency = c_.min_freq;
  options.reference = ParseReferenceSet(c_.reference);
  options.top_n = c_.top;
  options.jobs = c_.jobs;
  std::vector<SpecificityScore> table = KeynessTable(corpus, options);
  std::ostringstream summary;
  summary << table.size() << " tokens scored (reference: "
          << ReferenceSetName(options.reference) << ")\n";
  for (size_t i = 0; i < table.size() && i < 20; ++i) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-20s %10.2f\n", table[i].token.c_str(),
                  table[i].score);
    summary << line;
  }
  Emit(KeynessToTsv(table), summary.str());
  return kExitOk;
}

int Runner::SampleCommand() {
  BotRuleset bots = Bots();
  Corpus corpus = LoadCorpus(bots);
  Sample sample = SampleThreads(corpus, c_.n, c_.seed);
  std::ostringstream summary;
  summary << "sampled " << sample.thread_ids.size()
          << " threads opening with a self-reply (seed " << sample.seed
          << ")\n";
  Emit(SampleToJsonl(sample), summary.str());
  return kExitOk;
}

int Runner::Serve() {
  Corpus corpus = ReadCorpus(c_.in);
  Sample sample = ReadSample(c_.sample);
  std::unordered_set<std::string> ids;
  for (const Thread &thread : corpus.threads) ids.insert(thread.id);
  AnnotationStore store(std::move(ids), c_.store);
  AnnotationService service(&corpus, std::move(sample), &store);
  AnnotationServer server(&service, c_.static_dir);
  int port = server.Bind(c_.bind, c_.port);
  out_ << "serving " << c_.in << " on http://" << c_.bind << ":" << port
       << "/\n"
       << std::flush;
  server.Serve();
  return kExitOk;
}

int Runner::Classify() {
  if (c_.endpoint.empty()) {
    err_ << "classify: no endpoint (use --endpoint or SELFREPLY_ENDPOINT)\n";
    return kExitUsage;
  }
  Corpus corpus = ReadCorpus(c_.in);
  Sample sample = ReadSample(c_.sample);
  HttpChatClient client(c_.endpoint, std::chrono::milliseconds(c_.timeout_ms));
  ClassifySettings settings;
  settings.model = c_.model;
  settings.temperature = c_.temperature;
  settings.concurrency = c_.concurrency;
  settings.max_retries = c_.max_retries;
  settings.backoff = std::chrono::milliseconds(c_.backoff_ms);
  RunManifest manifest = ClassifyCorpus(
      client, corpus, sample.thread_ids, PromptTemplate::Default(), settings,
      [this](size_t done, size_t total) {
        err_ << "classify: " << done << "/" << total << "\n";
      });
  std::map<std::string, int> counts;
  for (const ManifestEntry &entry : manifest.entries) {
    counts[entry.answer.ParsedName()]++;
  }
  std::ostringstream summary;
  summary << "classified " << manifest.entries.size() << " of "
          << sample.thread_ids.size() << " threads with " << manifest.model
          << "\n";
  for (const auto &[parsed, count] : counts) {
    summary << "  " << parsed << ": " << count << "\n";
  }
  if (!manifest.complete) {
    summary << "run aborted: " << manifest.abort_reason << "\n";
  }
  Emit(ManifestToJsonl(manifest), summary.str());
  return manifest.complete ? kExitOk : kExitData;
}

// First non-empty line of a file, parsed.
json FirstRecord(const std::string &path) {
  for (const std::string &line : SplitLines(ReadFile(path))) {
    if (!TrimView(line).empty()) {
      json value = json::parse(line, nullptr, false);
      return value.is_discarded() ? json() : value;
    }
  }
  return json();
}

int Runner::Evaluate() {
  GoldDataset gold = ReadGold(c_.gold, c_.gold_annotator);
  json first = FirstRecord(c_.pred);
  AgreementReport report;
  std::string column = fs::path(c_.pred).stem().string();
  if (first.is_object() && first.contains("template_hash")) {
    RunManifest manifest = ReadManifest(c_.pred);
    EvaluationOptions options;
    options.include_error_gold = c_.include_error;
    if (!c_.resolutions.empty()) {
      for (const AnnotationRecord &record :
           ReadAnnotationRecords(c_.resolutions)) {
        if (record.annotator_id == kManualLlmAnnotator) {
          options.resolutions[record.thread_id] = record.label;
        }
      }
    }
    report = EvaluateRun(manifest, gold, options);
    column = manifest.model;
  } else {
    GoldDataset pred = ReadGold(c_.pred, c_.pred_annotator);
    Labeling reference, candidate;
    for (const auto &[id, label] : gold.entries) {
      reference[id] = LabelNumber(label);
    }
    for (const auto &[id, label] : pred.entries) {
      candidate[id] = LabelNumber(label);
    }
    report = MakeAgreementReport(BuildConfusionMatrix(reference, candidate),
                                 TypologyLabelNumbers());
  }
  std::ostringstream summary;
  summary << "items: " << report.matrix.n << "\n"
          << RenderF1Table({{column, report}}, CategoryNames());
  Emit(AgreementToJson(report, CategoryNames()).dump(2) + "\n", summary.str());
  return kExitOk;
}

void AddFilterFlags(CLI::App *command, Config *c) {
  command->add_flag("--no-filter", c->no_filter,
                    "Use every thread, skipping the validity filter");
  command->add_flag("--keep-unsigned-undated", c->keep_unsigned_undated,
                    "Keep threads with posts neither signed nor dated");
  command->add_flag("--keep-signed-undated", c->keep_signed_undated,
                    "Keep threads with signed posts lacking a readable date");
  command->add_flag("--keep-bots", c->keep_bots,
                    "Keep threads with bot-authored posts");
  command
      ->add_option("--bots", c->bots_file,
                   "Bot name list, one per line (default: the shipped list)")
      ->check(CLI::ExistingFile);
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  Config c;
  CLI::App app("Self-reply analysis of Wikipedia talk page threads",
               "selfreply");
  app.require_subcommand(1);

  auto *ingest =
      app.add_subcommand("ingest", "Wikitext, dumps or TEI to JSONL");
  ingest->add_option("inputs", c.inputs, "Files or directories")
      ->required()
      ->check(CLI::ExistingPath);
  ingest->add_option("--lang", c.lang, "Language: en, fr or de")
      ->check(CLI::IsMember({"en", "fr", "de"}));
  ingest->add_option("--format", c.format, "auto, wiki, dir, dump or tei")
      ->check(CLI::IsMember({"auto", "wiki", "dir", "dump", "tei"}));
  ingest->add_option("--locales", c.locales_dir, "Locale profile directory")
      ->check(CLI::ExistingDirectory);
  ingest
      ->add_option("--bots", c.bots_file,
                   "Bot name list, one per line (default: the shipped list)")
      ->check(CLI::ExistingFile);
  ingest->add_flag("--all-namespaces", c.all_namespaces,
                   "Read every dump page, not only talk pages");
  ingest->add_option("--jobs", c.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  ingest->add_option("--out", c.out, "Corpus JSONL");

  auto *stats = app.add_subcommand("stats", "Thread statistics");
  stats->add_option("--in", c.in, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--jobs", c.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  stats->add_option("--out", c.out, "Report JSON");
  AddFilterFlags(stats, &c);

  auto *keyness =
      app.add_subcommand("keyness", "Specificity of second messages");
  keyness->add_option("--in", c.in, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  keyness->add_option("--min-freq", c.min_freq, "Minimum whole frequency")
      ->check(CLI::NonNegativeNumber);
  keyness->add_option("--reference", c.reference, "onset-pairs or corpus")
      ->check(CLI::IsMember({"onset-pairs", "corpus"}));
  keyness->add_option("--top", c.top, "Rows to keep (0: all)");
  keyness->add_option("--jobs", c.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  keyness->add_option("--out", c.out, "Table TSV");
  AddFilterFlags(keyness, &c);

  auto *sample = app.add_subcommand("sample", "Sample threads for annotation");
  sample->add_option("--in", c.in, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  sample->add_option("--n", c.n, "Sample size")->required();
  sample->add_option("--seed", c.seed, "Random seed")->required();
  sample->add_option("--out", c.out, "Sample manifest JSONL");
  AddFilterFlags(sample, &c);

  auto *serve = app.add_subcommand("serve", "Annotation HTTP service");
  serve->add_option("--in", c.in, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  serve->add_option("--sample", c.sample, "Sample manifest")
      ->required()
      ->check(CLI::ExistingFile);
  serve->add_option("--store", c.store, "Annotation log JSONL")->required();
  serve->add_option("--bind", c.bind, "Address to bind");
  serve->add_option("--port", c.port, "Port")->check(CLI::Range(0, 65535));
  serve->add_option("--static", c.static_dir, "Directory served at /")
      ->check(CLI::ExistingDirectory);

  auto *classify = app.add_subcommand("classify", "Zero-shot LLM run");
  classify->add_option("--in", c.in, "Corpus JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  classify->add_option("--sample", c.sample, "Sample manifest")
      ->required()
      ->check(CLI::ExistingFile);
  classify->add_option("--endpoint", c.endpoint, "Chat completion URL")
      ->envname("SELFREPLY_ENDPOINT");
  classify->add_option("--model", c.model, "Model name")->required();
  classify->add_option("--concurrency", c.concurrency, "Parallel requests")
      ->check(CLI::PositiveNumber);
  classify->add_option("--temperature", c.temperature, "Sampling temperature");
  classify->add_option("--max-retries", c.max_retries, "Retries per thread")
      ->check(CLI::NonNegativeNumber);
  classify->add_option("--timeout-ms", c.timeout_ms, "Request timeout")
      ->check(CLI::PositiveNumber);
  classify->add_option("--backoff-ms", c.backoff_ms, "First retry delay")
      ->check(CLI::NonNegativeNumber);
  classify->add_option("--out", c.out, "Run manifest JSONL");

  auto *evaluate = app.add_subcommand("evaluate", "Agreement with gold labels");
  evaluate->add_option("--gold", c.gold, "Gold JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--pred", c.pred, "Labels, annotations or run manifest")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--gold-annotator", c.gold_annotator,
                       "Annotator of gold records");
  evaluate->add_option("--annotator", c.pred_annotator,
                       "Annotator of predicted records");
  evaluate->add_flag("--include-error", c.include_error,
                     "Keep gold Error items when scoring a run");
  evaluate
      ->add_option("--resolutions", c.resolutions,
                   "Annotation log with manual-llm readings")
      ->check(CLI::ExistingFile);
  evaluate->add_option("--out", c.out, "Report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner runner(c, out, err);
  try {
    if (*ingest) return runner.Ingest();
    if (*stats) return runner.Stats();
    if (*keyness) return runner.Keyness();
    if (*sample) return runner.SampleCommand();
    if (*serve) return runner.Serve();
    if (*classify) return runner.Classify();
    if (*evaluate) return runner.Evaluate();
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace selfreply
