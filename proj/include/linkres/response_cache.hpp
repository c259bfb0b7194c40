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

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include <json.hpp>

#include "linkres/transport.hpp"

namespace linkres {

/// Canonical request key: method, one space, absolute URL.
std::string request_key(std::string_view method, std::string_view url);

struct CacheEntry {
  std::string request_key;
  HttpResponse response;
  std::string fetched_at;  // ISO-8601 UTC; informational only
};

/// Parses one fixture document. The body is either "body" (a string, kept
/// byte for byte) or "json" (any JSON value, serialized compactly), so
/// fixtures can be written by hand.
CacheEntry parse_cache_entry(const nlohmann::json& doc);
nlohmann::json to_json(const CacheEntry& entry);

/// Directory of response fixtures, one JSON file per request key.
///
/// Loads every *.json file at construction. Stores are atomic
/// (write to a temp file, then rename) and immediately visible to lookups.
/// Safe to share between threads.
class ResponseCache {
 public:
  /// Throws ConfigError on unreadable or duplicate fixtures.
  explicit ResponseCache(std::filesystem::path dir);

  std::optional<HttpResponse> find(const std::string& key) const;
  void store(const CacheEntry& entry);

  std::size_t size() const;
  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// File name a stored key is written under: a readable slug of the key
  /// plus a hash suffix. Hand-written fixtures may use any *.json name.
  static std::string file_name_for(const std::string& key);

 private:
  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, HttpResponse> entries_;
};

/// Writes `content` to `path` via a sibling temp file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace linkres
