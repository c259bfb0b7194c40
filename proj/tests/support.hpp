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

// Helpers shared by the unit tests: a scripted transport, scratch
// directories and gateways over the committed fixture cache.

#pragma once

#include <atomic>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "linkres/classifier.hpp"
#include "linkres/gateway.hpp"
#include "linkres/transport.hpp"

#ifndef LINKRES_FIXTURE_DIR
#error "LINKRES_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace linkres::testing {

inline std::filesystem::path fixture_dir() { return LINKRES_FIXTURE_DIR; }
inline std::filesystem::path fixture_cache() { return fixture_dir() / "cache"; }

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("linkres-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Rows of a tab-separated fixture; '#' lines and blank lines skipped.
/// Missing trailing columns come back empty.
inline std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path& path,
                                                      std::size_t columns) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> row;
    std::size_t start = 0;
    while (row.size() + 1 < columns) {
      const auto tab = line.find('\t', start);
      if (tab == std::string::npos) break;
      row.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    row.push_back(start <= line.size() ? line.substr(start) : std::string());
    row.resize(columns);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Compact description of a category's payload, the third column of
/// link_vectors.tsv.
inline std::string payload(const LinkCategory& category) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, category::GoodRepo> ||
                      std::is_same_v<T, category::IssuesLink>) {
          return c.ref.full_name();
        } else if constexpr (std::is_same_v<T, category::GitHubPage> ||
                             std::is_same_v<T, category::UserProfile>) {
          return c.username;
        } else if constexpr (std::is_same_v<T, category::SubDirectory>) {
          std::string out = c.ref.full_name() + ":";
          for (std::size_t i = 0; i < c.extra_path.size(); ++i) {
            out += (i ? "/" : "") + c.extra_path[i];
          }
          return out;
        } else if constexpr (std::is_same_v<T, category::ExternalSite>) {
          return c.host;
        } else {
          return "";
        }
      },
      category);
}

/// Transport answering from a script. A URL may have a queue of responses;
/// the last one repeats. Unscripted URLs get 404.
class FakeTransport final : public Transport {
 public:
  void on(const std::string& url, HttpResponse response) {
    std::lock_guard lock(mutex_);
    script_[url].push_back(std::move(response));
  }
  void fail(const std::string& url, FetchError::Kind kind) {
    std::lock_guard lock(mutex_);
    failures_[url].push_back(kind);
  }

  HttpResponse get(const std::string& url, const HeaderMap& headers) override {
    std::lock_guard lock(mutex_);
    requests_.push_back(url);
    last_headers_ = headers;
    if (auto f = failures_.find(url); f != failures_.end() && !f->second.empty()) {
      const auto kind = f->second.front();
      f->second.pop_front();
      throw FetchError(kind, "scripted failure for " + url);
    }
    auto it = script_.find(url);
    if (it == script_.end()) return HttpResponse{404, {}, R"({"message":"Not Found"})"};
    auto& queue = it->second;
    auto response = queue.front();
    if (queue.size() > 1) queue.pop_front();
    return response;
  }

  std::vector<std::string> requests() const {
    std::lock_guard lock(mutex_);
    return requests_;
  }
  HeaderMap last_headers() const {
    std::lock_guard lock(mutex_);
    return last_headers_;
  }

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::deque<HttpResponse>> script_;
  std::map<std::string, std::deque<FetchError::Kind>> failures_;
  std::vector<std::string> requests_;
  HeaderMap last_headers_;
};

inline HttpResponse json_response(int status, const std::string& body) {
  return HttpResponse{status, {{"content-type", "application/json"}}, body};
}

/// Online gateway over a fake transport with sleeping disabled.
struct ScriptedGateway {
  explicit ScriptedGateway(const std::filesystem::path& cache_dir)
      : transport(std::make_shared<FakeTransport>()) {
    GatewayOptions options;
    options.offline = false;
    options.cache_dir = cache_dir;
    options.rate_per_hour = 1000;
    options.sleep = [this](std::chrono::milliseconds d) { slept.push_back(d); };
    gateway = std::make_unique<Gateway>(options, transport);
  }
  std::shared_ptr<FakeTransport> transport;
  std::vector<std::chrono::milliseconds> slept;
  std::unique_ptr<Gateway> gateway;
};

/// Offline gateway over the committed fixture cache.
inline Gateway fixture_gateway() {
  GatewayOptions options;
  options.offline = true;
  options.cache_dir = fixture_cache();
  return Gateway(options);
}

}  // namespace linkres::testing
