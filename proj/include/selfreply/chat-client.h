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

// Chat-completion clients. Each call is an independent single-turn request.

#ifndef SELFREPLY_CHAT_CLIENT_H_
#define SELFREPLY_CHAT_CLIENT_H_

#include <chrono>
#include <optional>
#include <string>

namespace selfreply {

struct ChatRequest {
  std::string model;
  std::string system;
  std::string user;
  double temperature = 0;
  std::optional<int> max_tokens;
};

class ChatClient {
 public:
  virtual ~ChatClient() = default;

  // Returns the reply text. Throws TransportError when the endpoint cannot
  // be reached, times out or answers with a server error (worth retrying),
  // and MalformedReplyError when it answers with something that is not a
  // chat reply.
  virtual std::string Complete(const ChatRequest &request) = 0;

  // Endpoint description recorded in run manifests.
  virtual std::string endpoint() const = 0;
};

// POSTs {"model", "messages", "temperature", "stream": false} as JSON to an
// http:// URL and reads either an OpenAI-style reply
// (choices[0].message.content) or an Ollama /api/chat reply
// (message.content).
class HttpChatClient : public ChatClient {
 public:
  // Throws Error for URLs that are not http://host[:port]/path.
  explicit HttpChatClient(std::string url, std::chrono::milliseconds timeout =
                                               std::chrono::seconds(120));

  std::string Complete(const ChatRequest &request) override;
  std::string endpoint() const override { return url_; }

 private:
  std::string url_;
  std::string host_;
  int port_ = 80;
  std::string path_;
  std::chrono::milliseconds timeout_;
};

// Extracts the reply text from an endpoint response body. Throws
// MalformedReplyError carrying the body.
std::string ExtractChatContent(const std::string &body);

}  // namespace selfreply

#endif  // SELFREPLY_CHAT_CLIENT_H_
