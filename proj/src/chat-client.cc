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

#include "selfreply/chat-client.h"

#include "httplib.h"
#include "json.hpp"
#include "selfreply/errors.h"

namespace selfreply {

using json = nlohmann::json;

HttpChatClient::HttpChatClient(std::string url,
                               std::chrono::milliseconds timeout)
    : url_(std::move(url)), timeout_(timeout) {
  constexpr std::string_view kScheme = "http://";
  if (url_.compare(0, kScheme.size(), kScheme) != 0) {
    throw Error("endpoint must be an http:// URL: " + url_);
  }
  std::string rest = url_.substr(kScheme.size());
  size_t slash = rest.find('/');
  std::string authority = rest.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : rest.substr(slash);
  size_t colon = authority.rfind(':');
  if (colon != std::string::npos && authority.find(']') == std::string::npos) {
    host_ = authority.substr(0, colon);
    try {
      port_ = std::stoi(authority.substr(colon + 1));
    } catch (const std::exception &) {
      throw Error("bad port in endpoint: " + url_);
    }
  } else {
    host_ = authority;
  }
  if (host_.empty()) throw Error("endpoint has no host: " + url_);
}

std::string HttpChatClient::Complete(const ChatRequest &request) {
  json body;
  body["model"] = request.model;
  body["messages"] =
      json::array({{{"role", "system"}, {"content", request.system}},
                   {{"role", "user"}, {"content", request.user}}});
  body["temperature"] = request.temperature;
  // Ollama reads sampling settings from "options".
  body["options"] = {{"temperature", request.temperature}};
  body["stream"] = false;
  if (request.max_tokens) body["max_tokens"] = *request.max_tokens;

  httplib::Client client(host_, port_);
  auto seconds = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  auto micros =
      std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  auto result = client.Post(
      path_, body.dump(-1, ' ', false, json::error_handler_t::replace),
      "application/json");
  if (!result) {
    throw TransportError("request to " + url_ +
                         " failed: " + httplib::to_string(result.error()));
  }
  if (result->status >= 500 || result->status == 429) {
    throw TransportError("endpoint " + url_ + " answered HTTP " +
                         std::to_string(result->status));
  }
  if (result->status != 200) {
    throw MalformedReplyError(
        "endpoint answered HTTP " + std::to_string(result->status),
        result->body);
  }
  return ExtractChatContent(result->body);
}

std::string ExtractChatContent(const std::string &body) {
  json reply = json::parse(body, nullptr, false);
  if (reply.is_discarded() || !reply.is_object()) {
    throw MalformedReplyError("reply is not a JSON object", body);
  }
  const json *message = nullptr;
  if (reply.contains("choices") && reply["choices"].is_array() &&
      !reply["choices"].empty() && reply["choices"][0].is_object()) {
    const json &choice = reply["choices"][0];
    if (choice.contains("message")) {
      message = &choice["message"];
    } else if (choice.contains("text") && choice["text"].is_string()) {
      return choice["text"].get<std::string>();
    }
  } else if (reply.contains("message")) {
    message = &reply["message"];
  } else if (reply.contains("response") && reply["response"].is_string()) {
    return reply["response"].get<std::string>();
  }
  if (message == nullptr || !message->is_object() ||
      !message->contains("content") || !(*message)["content"].is_string()) {
    throw MalformedReplyError("reply has no message content", body);
  }
  return (*message)["content"].get<std::string>();
}

}  // namespace selfreply
