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
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linkres/rate_budget.hpp"
#include "linkres/response_cache.hpp"
#include "linkres/transport.hpp"
#include "linkres/url.hpp"

namespace linkres {

namespace repo_status {
struct Exists {
  RepoRef canonical;  // host spelling
};
struct Renamed {
  RepoRef requested;
  RepoRef current;
};
struct NotFound {};
}  // namespace repo_status

using RepoStatus =
    std::variant<repo_status::Exists, repo_status::Renamed, repo_status::NotFound>;

enum class AccountKind { User, Organization };

namespace account_status {
struct Exists {
  std::string name;
  AccountKind kind = AccountKind::User;
  std::optional<std::string> website;
  std::optional<std::string> avatar;
};
struct NotFound {};
}  // namespace account_status

using AccountStatus = std::variant<account_status::Exists, account_status::NotFound>;

/// One HTTP-level request made through the gateway.
struct GatewayCall {
  std::string operation;  // "repo_status", "fetch_page", ...
  std::string request_key;
  bool from_cache = false;
};

struct GatewayOptions {
  /// Offline: replay only, a cache miss throws MissingFixture.
  bool offline = true;
  std::filesystem::path cache_dir;
  std::string api_base = "https://api.github.com";
  std::optional<std::string> token;
  std::uint32_t rate_per_hour = 60;
  int max_retries = 3;
  std::chrono::milliseconds backoff_base{500};
  int max_redirects = 5;
  std::size_t max_page_bytes = 2 * 1024 * 1024;
  /// Defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;
  RateBudget::Clock clock;
};

/// The only component that talks to the network.
///
/// Every request goes through the response cache first. In offline mode no
/// transport exists at all, so a miss is a hard MissingFixture error. In
/// online mode misses are fetched, retried with exponential backoff on
/// transient failures, and stored. Shareable across threads.
class Gateway {
 public:
  /// `transport` is ignored when options.offline is set; when null in
  /// online mode an HttpTransport is created.
  explicit Gateway(GatewayOptions options, std::shared_ptr<Transport> transport = nullptr);

  /// Follows redirects; a changed full name is reported as Renamed.
  RepoStatus repo_status(const RepoRef& ref);
  AccountStatus account_status(std::string_view name);
  /// All repositories of the account, every page, in host order.
  /// Throws NotFoundError for a missing account.
  std::vector<RepoRef> list_repos(std::string_view name);
  /// Throws FetchError for HTTP errors, oversized bodies and more than
  /// `max_redirects` redirects.
  std::string fetch_page(const NormalizedUrl& url);
  /// Names at the repository root on the default branch. Throws
  /// NotFoundError when the repository is gone.
  std::vector<std::string> fetch_repo_root_listing(const RepoRef& ref);

  std::vector<GatewayCall> call_log() const;
  void clear_call_log();

  bool offline() const noexcept { return options_.offline; }
  const GatewayOptions& options() const noexcept { return options_; }

  static constexpr int kPerPage = 100;

 private:
  HttpResponse request(std::string_view operation, const std::string& url, bool api);
  HttpResponse live_request(const std::string& key, const std::string& url, bool api);
  /// GET with redirects followed, for API endpoints.
  HttpResponse api_get(std::string_view operation, std::string url);
  std::string api_url(std::initializer_list<std::string_view> segments) const;

  GatewayOptions options_;
  std::shared_ptr<Transport> transport_;
  ResponseCache cache_;
  std::unique_ptr<RateBudget> budget_;
  mutable std::mutex log_mutex_;
  std::vector<GatewayCall> log_;
};

/// Resolves a possibly relative Location header against `base`.
std::string resolve_location(const std::string& base, const std::string& location);

}  // namespace linkres
