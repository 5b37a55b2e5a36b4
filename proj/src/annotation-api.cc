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

#include "selfreply/annotation-api.h"

#include "httplib.h"
#include "selfreply/errors.h"
#include "selfreply/text-util.h"
#include "selfreply/timestamp.h"

namespace selfreply {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

ApiResponse JsonResponse(int status, const ordered_json &body) {
  return ApiResponse{status, "application/json",
                     body.dump(-1, ' ', false, json::error_handler_t::replace)};
}

ApiResponse ErrorResponse(int status, const std::string &message) {
  return JsonResponse(status, ordered_json{{"error", message}});
}

ordered_json AuthorJson(const Post &post) {
  if (!post.author) return nullptr;
  return {{"kind", UserKindName(post.author->kind)},
          {"value", post.author->value}};
}

}  // namespace

AnnotationService::AnnotationService(const Corpus *corpus, Sample sample,
                                     AnnotationStore *store)
    : corpus_(corpus), sample_(std::move(sample)), store_(store) {
  for (const Thread &thread : corpus_->threads) threads_[thread.id] = &thread;
  for (const std::string &id : sample_.thread_ids) {
    if (!threads_.count(id)) throw UnknownThreadError(id);
  }
}

std::optional<std::string> AnnotationService::Resolve(
    const std::optional<std::string> &annotator) const {
  if (annotator && !annotator->empty()) return annotator;
  std::lock_guard<std::mutex> lock(session_mutex_);
  return annotator_;
}

size_t AnnotationService::DoneCount(const std::string &annotator) const {
  size_t done = 0;
  for (const std::string &id : sample_.thread_ids) {
    if (store_->Latest(id, annotator)) done++;
  }
  return done;
}

ordered_json AnnotationService::ProgressJson(
    const std::string &annotator) const {
  return {{"done", DoneCount(annotator)}, {"total", sample_.thread_ids.size()}};
}

ApiResponse AnnotationService::StartSession(const std::string &body) {
  json request = json::parse(body, nullptr, false);
  if (request.is_discarded() || !request.is_object() ||
      !request.contains("annotator_id") ||
      !request["annotator_id"].is_string()) {
    return ErrorResponse(400, "expected {\"annotator_id\": string}");
  }
  std::string annotator = Trim(request["annotator_id"].get<std::string>());
  if (annotator.empty()) return ErrorResponse(400, "annotator_id is empty");
  if (IsModelAnnotator(annotator)) {
    return ErrorResponse(400, "annotator ids starting with \"" +
                                  std::string(kModelAnnotatorPrefix) +
                                  "\" are reserved for model runs");
  }
  {
    std::lock_guard<std::mutex> lock(session_mutex_);
    annotator_ = annotator;
  }
  ordered_json out;
  out["annotator_id"] = annotator;
  out["progress"] = ProgressJson(annotator);
  return JsonResponse(200, out);
}

ApiResponse AnnotationService::Next(
    const std::optional<std::string> &annotator) {
  auto who = Resolve(annotator);
  if (!who) return ErrorResponse(409, "no annotation session");
  for (const std::string &id : sample_.thread_ids) {
    if (store_->Latest(id, *who)) continue;
    const Thread &thread = *threads_.at(id);
    ordered_json posts = ordered_json::array();
    for (const Post &post : thread.posts) {
      posts.push_back({{"author", AuthorJson(post)},
                       {"when", post.when ? ordered_json(post.when->ToIso())
                                          : ordered_json()},
                       {"body", post.body}});
    }
    ordered_json out;
    out["thread_id"] = thread.id;
    out["heading"] = thread.heading;
    out["page"] = thread.page;
    out["posts"] = std::move(posts);
    out["progress"] = ProgressJson(*who);
    return JsonResponse(200, out);
  }
  ordered_json out;
  out["done"] = true;
  out["progress"] = ProgressJson(*who);
  return JsonResponse(200, out);
}

ApiResponse AnnotationService::Annotate(const std::string &body) {
  auto who = Resolve(std::nullopt);
  json request = json::parse(body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) {
    return ErrorResponse(400, "expected a JSON object");
  }
  if (request.contains("annotator_id") && request["annotator_id"].is_string()) {
    who = request["annotator_id"].get<std::string>();
  }
  if (!who) return ErrorResponse(409, "no annotation session");
  if (IsModelAnnotator(*who)) {
    return ErrorResponse(400, "annotator ids starting with \"" +
                                  std::string(kModelAnnotatorPrefix) +
                                  "\" are reserved for model runs");
  }
  if (!request.contains("thread_id") || !request["thread_id"].is_string()) {
    return ErrorResponse(400, "thread_id must be a string");
  }
  if (!request.contains("label") || !request["label"].is_number_integer()) {
    return ErrorResponse(400, "label must be an integer");
  }
  std::string thread_id = request["thread_id"].get<std::string>();
  int label = request["label"].get<int>();
  if (label == static_cast<int>(CategoryLabel::kNull)) {
    return ErrorResponse(422, "label 9 (Null) is reserved for model answers");
  }
  if (label < kFirstLabel || label > kLastHumanLabel) {
    return ErrorResponse(400, "label must be between 1 and 8");
  }
  bool in_sample = false;
  for (const std::string &id : sample_.thread_ids) {
    if (id == thread_id) in_sample = true;
  }
  if (!in_sample)
    return ErrorResponse(404, "thread not in sample: " + thread_id);
  if (request.contains("comment") && !request["comment"].is_null() &&
      !request["comment"].is_string()) {
    return ErrorResponse(400, "comment must be a string");
  }

  AnnotationRecord record;
  record.thread_id = thread_id;
  record.annotator_id = *who;
  record.label = static_cast<CategoryLabel>(label);
  record.noted_at = Timestamp::Now();
  if (request.contains("comment") && request["comment"].is_string()) {
    std::string comment = request["comment"].get<std::string>();
    if (!TrimView(comment).empty()) record.comment = comment;
  }
  bool stored;
  try {
    stored = store_->Record(record);
  } catch (const UnknownThreadError &e) {
    return ErrorResponse(404, e.what());
  } catch (const RejectedLabelError &e) {
    return ErrorResponse(422, e.what());
  }
  ordered_json out;
  out["ok"] = true;
  out["stored"] = stored;
  out["progress"] = ProgressJson(*who);
  return JsonResponse(200, out);
}

ApiResponse AnnotationService::Export() const {
  return ApiResponse{200, "application/x-ndjson", store_->ExportJsonl()};
}

ApiResponse AnnotationService::Progress(
    const std::optional<std::string> &annotator) const {
  auto who = Resolve(annotator);
  if (!who) return ErrorResponse(409, "no annotation session");
  ordered_json out;
  out["annotator_id"] = *who;
  out["done"] = DoneCount(*who);
  out["total"] = sample_.thread_ids.size();
  return JsonResponse(200, out);
}

AnnotationServer::AnnotationServer(AnnotationService *service,
                                   const std::string &static_dir)
    : server_(std::make_unique<httplib::Server>()) {
  auto reply = [](httplib::Response &res, const ApiResponse &api) {
    res.status = api.status;
    res.set_content(api.body, api.content_type);
  };
  auto annotator_param = [](const httplib::Request &req) {
    std::optional<std::string> annotator;
    if (req.has_param("annotator"))
      annotator = req.get_param_value("annotator");
    return annotator;
  };
  server_->Post("/api/session",
                [=](const httplib::Request &req, httplib::Response &res) {
                  reply(res, service->StartSession(req.body));
                });
  server_->Get("/api/next",
               [=](const httplib::Request &req, httplib::Response &res) {
                 reply(res, service->Next(annotator_param(req)));
               });
  server_->Post("/api/annotation",
                [=](const httplib::Request &req, httplib::Response &res) {
                  reply(res, service->Annotate(req.body));
                });
  server_->Get("/api/export",
               [=](const httplib::Request &, httplib::Response &res) {
                 reply(res, service->Export());
               });
  server_->Get("/api/progress",
               [=](const httplib::Request &req, httplib::Response &res) {
                 reply(res, service->Progress(annotator_param(req)));
               });
  server_->set_exception_handler([](const httplib::Request &,
                                    httplib::Response &res,
                                    std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception &e) {
      message = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(ordered_json{{"error", message}}.dump(),
                    "application/json");
  });
  if (!static_dir.empty() && !server_->set_mount_point("/", static_dir)) {
    throw Error("static directory not found: " + static_dir);
  }
}

AnnotationServer::~AnnotationServer() { Stop(); }

int AnnotationServer::Bind(const std::string &host, int port) {
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    throw Error("cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void AnnotationServer::Serve() { server_->listen_after_bind(); }

int AnnotationServer::Start(const std::string &host, int port) {
  int bound = Bind(host, port);
  thread_ = std::thread([this] { Serve(); });
  server_->wait_until_ready();
  return bound;
}

void AnnotationServer::Stop() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace selfreply
