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

#include <chrono>
#include <cstddef>
#include <map>
#include <string>

namespace linkres {

/// Header names are stored lowercase.
using HeaderMap = std::map<std::string, std::string>;

struct HttpResponse {
  int status = 0;
  HeaderMap headers;  // only the subset in kKeptHeaders
  std::string body;

  bool operator==(const HttpResponse&) const = default;
};

/// Response headers worth keeping in the cache.
inline constexpr const char* kKeptHeaders[] = {
    "location", "content-type", "link", "retry-after",
    "x-ratelimit-remaining", "x-ratelimit-reset",
};

/// One plain GET without redirect following. Implementations throw
/// FetchError for failures below HTTP (DNS, timeouts, oversized bodies).
class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResponse get(const std::string& url, const HeaderMap& headers) = 0;
};

/// Real network access through cpp-httplib (HTTPS via OpenSSL).
class HttpTransport final : public Transport {
 public:
  struct Options {
    std::chrono::seconds connect_timeout{10};
    std::chrono::seconds read_timeout{30};
    std::size_t max_body_bytes = 8 * 1024 * 1024;
  };

  HttpTransport() = default;
  explicit HttpTransport(Options options) : options_(options) {}

  HttpResponse get(const std::string& url, const HeaderMap& headers) override;

 private:
  Options options_;
};

}  // namespace linkres
