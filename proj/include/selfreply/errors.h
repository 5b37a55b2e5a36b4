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

#ifndef SELFREPLY_ERRORS_H_
#define SELFREPLY_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace selfreply {

// Base class for all errors raised by the toolkit. The command line maps
// these to the "data error" exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidAuthorError : public Error {
 public:
  using Error::Error;
};

// Unparseable timestamp. Carries the offending text.
class TimestampFormatError : public Error {
 public:
  explicit TimestampFormatError(std::string text)
      : Error("unparseable timestamp: \"" + text + "\""),
        text_(std::move(text)) {}
  const std::string &text() const { return text_; }

 private:
  std::string text_;
};

class XmlParseError : public Error {
 public:
  XmlParseError(const std::string &message, int line, int column)
      : Error("XML error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Malformed line in a JSONL file. Line numbers are 1-based.
class FormatError : public Error {
 public:
  FormatError(const std::string &path, int line, const std::string &message)
      : Error(path + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(const std::string &id)
      : Error("duplicate thread id: " + id), id_(id) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InsufficientPopulationError : public Error {
 public:
  InsufficientPopulationError(size_t requested, size_t available)
      : Error("requested " + std::to_string(requested) + " threads but only " +
              std::to_string(available) + " are eligible"),
        requested_(requested),
        available_(available) {}
  size_t requested() const { return requested_; }
  size_t available() const { return available_; }

 private:
  size_t requested_;
  size_t available_;
};

class UnknownThreadError : public Error {
 public:
  explicit UnknownThreadError(const std::string &id)
      : Error("unknown thread: " + id), id_(id) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

class RejectedLabelError : public Error {
 public:
  using Error::Error;
};

// Two annotations do not cover the same items.
class ItemMismatchError : public Error {
 public:
  explicit ItemMismatchError(std::vector<std::string> difference);
  const std::vector<std::string> &difference() const { return difference_; }

 private:
  std::vector<std::string> difference_;
};

class MissingGoldError : public Error {
 public:
  explicit MissingGoldError(std::vector<std::string> ids);
  const std::vector<std::string> &ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

class UndefinedAgreementError : public Error {
 public:
  using Error::Error;
};

// Network-level failure talking to a chat endpoint. Retryable.
class TransportError : public Error {
 public:
  using Error::Error;
};

// The endpoint answered but the payload could not be interpreted.
class MalformedReplyError : public Error {
 public:
  MalformedReplyError(const std::string &message, std::string payload)
      : Error(message), payload_(std::move(payload)) {}
  const std::string &payload() const { return payload_; }

 private:
  std::string payload_;
};

}  // namespace selfreply

#endif  // SELFREPLY_ERRORS_H_
