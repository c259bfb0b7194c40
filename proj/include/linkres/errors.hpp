/*
 * Copyright (C) 2026 The linkres Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace linkres {

/// A registry record could not be parsed or has no package name.
class MalformedRecord : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A link string has no recognizable host or contains inner whitespace.
class MalformedUrl : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Host is an IP address or a bare public suffix.
class UninferableHost : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Network failure, rate-limit exhaustion or an unexpected response from the
/// repository host. A package hitting this is marked unprocessed.
class GatewayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The host answered "not found" for a resource that was expected to exist
/// (e.g. the repository vanished between two calls).
class NotFoundError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

/// Failure while fetching an external web page.
class FetchError : public GatewayError {
 public:
  enum class Kind { Dns, Timeout, Status, TooLarge, TooManyRedirects, Network };

  FetchError(Kind kind, const std::string& what)
      : GatewayError(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(FetchError::Kind kind) noexcept;

/// Offline replay hit a request with no stored response. Never swallowed:
/// aborts the whole run.
class MissingFixture : public std::runtime_error {
 public:
  explicit MissingFixture(std::string request_key)
      : std::runtime_error("MissingFixture: " + request_key),
        request_key_(std::move(request_key)) {}

  const std::string& request_key() const noexcept { return request_key_; }

 private:
  std::string request_key_;
};

/// A review decision names an item the result does not have.
class UnknownReviewItem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A review decision contradicts one already applied to the same result.
class ConflictingReviewDecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedResults : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linkres
