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

#include "linkres/gateway.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <ctime>
#include <thread>

#include <json.hpp>

#include "linkres/errors.hpp"

namespace linkres {

namespace {

constexpr const char* kUserAgent = "linkres/1.0";

bool is_redirect(int status) {
  return status == 301 || status == 302 || status == 303 || status == 307 ||
         status == 308;
}

bool is_gone(int status) { return status == 404 || status == 410 || status == 451; }

std::string percent_encode_segment(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

std::optional<std::int64_t> header_int(const HttpResponse& r, const std::string& name) {
  const auto it = r.headers.find(name);
  if (it == r.headers.end()) return std::nullopt;
  std::int64_t value = 0;
  const auto* begin = it->second.data();
  const auto* end = begin + it->second.size();
  if (std::from_chars(begin, end, value).ec != std::errc{}) return std::nullopt;
  return value;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  ::gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json parse_body(const HttpResponse& r, const std::string& what) {
  try {
    return nlohmann::json::parse(r.body);
  } catch (const nlohmann::json::parse_error&) {
    throw GatewayError("malformed JSON in " + what + " response");
  }
}

std::optional<RepoRef> split_full_name(std::string_view full_name) {
  const auto slash = full_name.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == full_name.size()) {
    return std::nullopt;
  }
  return RepoRef{std::string(full_name.substr(0, slash)),
                 std::string(full_name.substr(slash + 1))};
}

std::string string_field(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  return it != doc.end() && it->is_string() ? it->get<std::string>() : std::string{};
}

}  // namespace

std::string resolve_location(const std::string& base, const std::string& location) {
  if (location.find("://") != std::string::npos) return location;
  const auto scheme_end = base.find("://");
  const auto origin_end = base.find('/', scheme_end + 3);
  const auto origin = base.substr(0, origin_end);
  if (location.rfind("//", 0) == 0) return base.substr(0, scheme_end + 1) + location;
  if (!location.empty() && location.front() == '/') return origin + location;
  // relative to the current directory
  auto path = origin_end == std::string::npos ? std::string("/") : base.substr(origin_end);
  path = path.substr(0, path.rfind('/') + 1);
  return origin + path + location;
}

Gateway::Gateway(GatewayOptions options, std::shared_ptr<Transport> transport)
    : options_(std::move(options)), cache_(options_.cache_dir) {
  if (!options_.sleep) {
    options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
  if (!options_.offline) {
    transport_ = transport ? std::move(transport) : std::make_shared<HttpTransport>();
    const auto state = options_.cache_dir.empty()
                           ? std::filesystem::path{}
                           : options_.cache_dir / "rate_budget.state";
    budget_ = std::make_unique<RateBudget>(options_.rate_per_hour, state, options_.clock);
  }
}

std::vector<GatewayCall> Gateway::call_log() const {
  std::lock_guard lock(log_mutex_);
  return log_;
}

void Gateway::clear_call_log() {
  std::lock_guard lock(log_mutex_);
  log_.clear();
}

std::string Gateway::api_url(std::initializer_list<std::string_view> segments) const {
  std::string url = options_.api_base;
  for (auto seg : segments) {
    url += '/';
    url += percent_encode_segment(seg);
  }
  return url;
}

HttpResponse Gateway::request(std::string_view operation, const std::string& url, bool api) {
  const auto key = request_key("GET", url);
  auto cached = cache_.find(key);
  {
    std::lock_guard lock(log_mutex_);
    log_.push_back(GatewayCall{std::string(operation), key, cached.has_value()});
  }
  if (cached) return std::move(*cached);
  if (options_.offline) throw MissingFixture(key);
  return live_request(key, url, api);
}

HttpResponse Gateway::live_request(const std::string& key, const std::string& url, bool api) {
  HeaderMap headers{{"user-agent", kUserAgent}};
  if (api) {
    headers["accept"] = "application/vnd.github+json";
    headers["x-github-api-version"] = "2022-11-28";
    if (options_.token) headers["authorization"] = "Bearer " + *options_.token;
  } else {
    headers["accept"] = "text/html,application/xhtml+xml,*/*;q=0.8";
  }

  for (int attempt = 0;; ++attempt) {
    const bool can_retry = attempt < options_.max_retries;
    const auto backoff = options_.backoff_base * (1LL << attempt);

    if (api && !budget_->try_acquire()) {
      throw GatewayError("rate budget exhausted before " + key);
    }

    HttpResponse response;
    try {
      response = transport_->get(url, headers);
    } catch (const FetchError& e) {
      if (e.kind() == FetchError::Kind::TooLarge || !can_retry) throw;
      options_.sleep(backoff);
      continue;
    }

    if (api) {
      budget_->observe(header_int(response, "x-ratelimit-remaining"),
                       header_int(response, "x-ratelimit-reset"));
    }
    const auto remaining = response.headers.find("x-ratelimit-remaining");
    const bool throttled =
        response.status == 429 ||
        (response.status == 403 && remaining != response.headers.end() &&
         remaining->second == "0");
    if (throttled || response.status >= 500) {
      if (!can_retry) {
        throw GatewayError("HTTP " + std::to_string(response.status) + " after " +
                           std::to_string(attempt + 1) + " attempts: " + key);
      }
      auto wait = backoff;
      if (auto retry_after = header_int(response, "retry-after")) {
        wait = std::min(std::chrono::milliseconds(*retry_after * 1000),
                        std::chrono::milliseconds(60'000));
      }
      options_.sleep(wait);
      continue;
    }

    cache_.store(CacheEntry{key, response, utc_timestamp()});
    return response;
  }
}

HttpResponse Gateway::api_get(std::string_view operation, std::string url) {
  for (int hops = 0;; ++hops) {
    auto response = request(operation, url, true);
    if (!is_redirect(response.status)) return response;
    const auto location = response.headers.find("location");
    if (location == response.headers.end()) {
      throw GatewayError("redirect without location from " + url);
    }
    if (hops >= options_.max_redirects) throw GatewayError("too many redirects from " + url);
    url = resolve_location(url, location->second);
  }
}

RepoStatus Gateway::repo_status(const RepoRef& ref) {
  const auto response = api_get("repo_status", api_url({"repos", ref.owner, ref.repo}));
  if (is_gone(response.status)) return repo_status::NotFound{};
  if (response.status != 200) {
    throw GatewayError("unexpected HTTP " + std::to_string(response.status) +
                       " for repository " + ref.full_name());
  }
  const auto doc = parse_body(response, "repository");
  const auto current = split_full_name(string_field(doc, "full_name"));
  if (!current) throw GatewayError("repository response without full_name");
  if (*current == ref) return repo_status::Exists{*current};
  return repo_status::Renamed{ref, *current};
}

AccountStatus Gateway::account_status(std::string_view name) {
  const auto response = api_get("account_status", api_url({"users", name}));
  if (is_gone(response.status)) return account_status::NotFound{};
  if (response.status != 200) {
    throw GatewayError("unexpected HTTP " + std::to_string(response.status) +
                       " for account " + std::string(name));
  }
  const auto doc = parse_body(response, "account");
  account_status::Exists out;
  out.name = string_field(doc, "login");
  if (out.name.empty()) throw GatewayError("account response without login");
  out.kind = string_field(doc, "type") == "Organization" ? AccountKind::Organization
                                                         : AccountKind::User;
  if (auto blog = string_field(doc, "blog"); !blog.empty()) out.website = blog;
  if (auto avatar = string_field(doc, "avatar_url"); !avatar.empty()) out.avatar = avatar;
  return out;
}

std::vector<RepoRef> Gateway::list_repos(std::string_view name) {
  std::vector<RepoRef> repos;
  const auto base = api_url({"users", name, "repos"});
  for (int page = 1;; ++page) {
    const auto url = base + "?per_page=" + std::to_string(kPerPage) +
                     "&page=" + std::to_string(page);
    const auto response = api_get("list_repos", url);
    if (is_gone(response.status)) {
      throw NotFoundError("account not found: " + std::string(name));
    }
    if (response.status != 200) {
      throw GatewayError("unexpected HTTP " + std::to_string(response.status) +
                         " listing repositories of " + std::string(name));
    }
    const auto doc = parse_body(response, "repository listing");
    if (!doc.is_array()) throw GatewayError("repository listing is not an array");
    for (const auto& item : doc) {
      if (auto ref = split_full_name(string_field(item, "full_name"))) {
        repos.push_back(std::move(*ref));
      } else if (auto repo = string_field(item, "name"); !repo.empty()) {
        repos.push_back(RepoRef{std::string(name), repo});
      }
    }
    if (doc.size() < static_cast<std::size_t>(kPerPage)) break;
  }
  return repos;
}

std::string Gateway::fetch_page(const NormalizedUrl& url) {
  auto current = request_url(url);
  for (int redirects = 0;; ++redirects) {
    const auto response = request("fetch_page", current, false);
    if (is_redirect(response.status)) {
      const auto location = response.headers.find("location");
      if (location == response.headers.end()) {
        throw FetchError(FetchError::Kind::Status,
                         "redirect without location from " + current);
      }
      if (redirects >= options_.max_redirects) {
        throw FetchError(FetchError::Kind::TooManyRedirects,
                         "more than " + std::to_string(options_.max_redirects) +
                             " redirects from " + request_url(url));
      }
      current = resolve_location(current, location->second);
      continue;
    }
    if (response.status < 200 || response.status >= 300) {
      throw FetchError(FetchError::Kind::Status,
                       "HTTP " + std::to_string(response.status) + " from " + current);
    }
    if (response.body.size() > options_.max_page_bytes) {
      throw FetchError(FetchError::Kind::TooLarge, "page too large: " + current);
    }
    return response.body;
  }
}

std::vector<std::string> Gateway::fetch_repo_root_listing(const RepoRef& ref) {
  const auto response =
      api_get("repo_root_listing", api_url({"repos", ref.owner, ref.repo, "contents"}));
  if (is_gone(response.status)) {
    // The host answers 404 for a repository without commits.
    if (response.status == 404 &&
        response.body.find("repository is empty") != std::string::npos) {
      return {};
    }
    throw NotFoundError("repository not found: " + ref.full_name());
  }
  if (response.status != 200) {
    throw GatewayError("unexpected HTTP " + std::to_string(response.status) +
                       " listing " + ref.full_name());
  }
  const auto doc = parse_body(response, "contents");
  if (!doc.is_array()) throw GatewayError("contents listing is not an array");
  std::vector<std::string> names;
  for (const auto& item : doc) {
    if (auto n = string_field(item, "name"); !n.empty()) names.push_back(std::move(n));
  }
  return names;
}

const char* to_string(FetchError::Kind kind) noexcept {
  switch (kind) {
    case FetchError::Kind::Dns:
      return "dns";
    case FetchError::Kind::Timeout:
      return "timeout";
    case FetchError::Kind::Status:
      return "status";
    case FetchError::Kind::TooLarge:
      return "too_large";
    case FetchError::Kind::TooManyRedirects:
      return "too_many_redirects";
    case FetchError::Kind::Network:
      break;
  }
  return "network";
}

}  // namespace linkres
