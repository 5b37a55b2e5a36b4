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

// Local HTTP service for annotating a sample of threads.
//
//   POST /api/session     {"annotator_id"} -> {"annotator_id", "progress"}
//   GET  /api/next        [?annotator=ID]  -> thread payload or {"done": true}
//   POST /api/annotation  {"thread_id", "label": 1-8, "comment"?}
//   GET  /api/export      current records as JSONL
//   GET  /api/progress    {"annotator_id", "done", "total"}
//
// Everything else is served from the static directory, if any.

#ifndef SELFREPLY_ANNOTATION_API_H_
#define SELFREPLY_ANNOTATION_API_H_

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "selfreply/annotation-store.h"
#include "selfreply/corpus-model.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace selfreply {

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Request handling independent of the transport. Thread-safe.
class AnnotationService {
 public:
  // The corpus and store must outlive the service. Throws
  // UnknownThreadError if the sample names a thread missing from the
  // corpus.
  AnnotationService(const Corpus *corpus, Sample sample,
                    AnnotationStore *store);

  ApiResponse StartSession(const std::string &body);
  ApiResponse Next(const std::optional<std::string> &annotator);
  ApiResponse Annotate(const std::string &body);
  ApiResponse Export() const;
  ApiResponse Progress(const std::optional<std::string> &annotator) const;

  // Sample threads with a current record by the annotator.
  size_t DoneCount(const std::string &annotator) const;

 private:
  // The annotator named in the request, else the session's.
  std::optional<std::string> Resolve(
      const std::optional<std::string> &annotator) const;
  nlohmann::ordered_json ProgressJson(const std::string &annotator) const;

  const Corpus *corpus_;
  Sample sample_;
  AnnotationStore *store_;
  std::unordered_map<std::string, const Thread *> threads_;
  mutable std::mutex session_mutex_;
  std::optional<std::string> annotator_;
};

// HTTP/1.1 front end of an AnnotationService.
class AnnotationServer {
 public:
  // static_dir: files served at / (skipped when empty).
  AnnotationServer(AnnotationService *service, const std::string &static_dir);
  ~AnnotationServer();

  AnnotationServer(const AnnotationServer &) = delete;
  AnnotationServer &operator=(const AnnotationServer &) = delete;

  // Binds host:port (port 0 picks a free port) and returns the bound port.
  // Throws Error when binding fails.
  int Bind(const std::string &host, int port);
  // Serves until Stop; blocks.
  void Serve();
  // Bind then serve on a background thread.
  int Start(const std::string &host, int port);
  void Stop();

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace selfreply

#endif  // SELFREPLY_ANNOTATION_API_H_
