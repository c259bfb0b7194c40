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

#include "linkres/response_cache.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <openssl/evp.h>
#include <unistd.h>

#include "linkres/errors.hpp"
#include "linkres/url.hpp"

namespace linkres {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Same acceptance rules as the JSON serializer (no overlongs, no surrogates).
bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    unsigned char lo = 0x80;
    unsigned char hi = 0xBF;
    if (c < 0x80) {
      ++i;
      continue;
    } else if (c >= 0xC2 && c <= 0xDF) {
      extra = 1;
    } else if (c >= 0xE0 && c <= 0xEF) {
      extra = 2;
      if (c == 0xE0) lo = 0xA0;
      if (c == 0xED) hi = 0x9F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      extra = 3;
      if (c == 0xF0) lo = 0x90;
      if (c == 0xF4) hi = 0x8F;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    const auto second = static_cast<unsigned char>(s[i + 1]);
    if (second < lo || second > hi) return false;
    for (std::size_t k = 2; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string base64_encode(std::string_view bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3) + 1, '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(bytes.data()),
                                static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::string base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw ConfigError("fixture \"body_base64\" is not base64");
  std::string out(3 * text.size() / 4 + 1, '\0');
  const int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(text.data()),
                                static_cast<int>(text.size()));
  if (n < 0) throw ConfigError("fixture \"body_base64\" is not base64");
  std::size_t len = static_cast<std::size_t>(n);
  // EVP_DecodeBlock counts padding as zero bytes
  if (!text.empty() && text.back() == '=') --len;
  if (text.size() >= 2 && text[text.size() - 2] == '=') --len;
  out.resize(len);
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string request_key(std::string_view method, std::string_view url) {
  std::string key(method);
  key += ' ';
  key += url;
  return key;
}

CacheEntry parse_cache_entry(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("request") || !doc["request"].is_string() ||
      !doc.contains("status") || !doc["status"].is_number_integer()) {
    throw ConfigError("fixture needs a string \"request\" and an integer \"status\"");
  }
  CacheEntry entry;
  entry.request_key = doc["request"].get<std::string>();
  entry.response.status = doc["status"].get<int>();
  if (auto it = doc.find("headers"); it != doc.end() && it->is_object()) {
    for (const auto& [name, value] : it->items()) {
      entry.response.headers[to_lower(name)] =
          value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  if (auto it = doc.find("body"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("fixture \"body\" must be a string");
    entry.response.body = it->get<std::string>();
  } else if (auto b64 = doc.find("body_base64"); b64 != doc.end()) {
    if (!b64->is_string()) throw ConfigError("fixture \"body_base64\" must be a string");
    entry.response.body = base64_decode(b64->get<std::string>());
  } else if (auto js = doc.find("json"); js != doc.end()) {
    entry.response.body = js->dump();
  }
  if (auto it = doc.find("fetched_at"); it != doc.end() && it->is_string()) {
    entry.fetched_at = it->get<std::string>();
  }
  return entry;
}

nlohmann::json to_json(const CacheEntry& entry) {
  nlohmann::json doc;
  doc["request"] = entry.request_key;
  doc["status"] = entry.response.status;
  doc["headers"] = entry.response.headers;
  if (valid_utf8(entry.response.body)) {
    doc["body"] = entry.response.body;
  } else {
    doc["body_base64"] = base64_encode(entry.response.body);
  }
  if (!entry.fetched_at.empty()) doc["fetched_at"] = entry.fetched_at;
  return doc;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  std::ostringstream tmp_name;
  tmp_name << "." << path.filename().string() << ".tmp." << ::getpid() << "."
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
           << counter++;
  const auto tmp = path.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw ConfigError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ConfigError("cannot move cache file into place: " + path.string());
  }
}

ResponseCache::ResponseCache(fs::path dir) : dir_(std::move(dir)) {
  if (!fs::exists(dir_)) return;
  if (!fs::is_directory(dir_)) throw ConfigError(dir_.string() + " is not a directory");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const auto& p = entry.path();
    if (entry.is_regular_file() && p.extension() == ".json" &&
        p.filename().string().front() != '.') {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(file));
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(file.string() + ": " + e.what());
    }
    // Non-fixture state files (e.g. the rate budget) live alongside.
    if (!doc.is_object() || !doc.contains("request")) continue;
    CacheEntry entry;
    try {
      entry = parse_cache_entry(doc);
    } catch (const ConfigError& e) {
      throw ConfigError(file.string() + ": " + e.what());
    }
    if (!entries_.emplace(entry.request_key, std::move(entry.response)).second) {
      throw ConfigError("duplicate fixture for \"" + entry.request_key + "\" in " +
                        file.string());
    }
  }
}

std::optional<HttpResponse> ResponseCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

void ResponseCache::store(const CacheEntry& entry) {
  std::unique_lock lock(mutex_);
  fs::create_directories(dir_);
  write_file_atomic(dir_ / file_name_for(entry.request_key), to_json(entry).dump(2) + "\n");
  entries_[entry.request_key] = entry.response;
}

std::size_t ResponseCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::string ResponseCache::file_name_for(const std::string& key) {
  std::string slug;
  for (char c : key) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-';
    if (keep) {
      slug += c;
    } else if (slug.empty() || slug.back() != '_') {
      slug += '_';
    }
    if (slug.size() >= 100) break;
  }
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a(key)));
  return slug + "-" + hash + ".json";
}

}  // namespace linkres
