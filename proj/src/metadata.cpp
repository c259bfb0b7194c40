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

#include "linkres/metadata.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "linkres/errors.hpp"

namespace linkres {

namespace {

constexpr std::array<std::string_view, kLinkFieldCount> kFieldNames = {
    "project_uri",      "homepage_uri",    "wiki_uri",        "documentation_uri",
    "mailing_list_uri", "source_code_uri", "bug_tracker_uri",
};

bool is_blank(std::string_view s) { return trim(s).empty(); }

}  // namespace

std::string_view to_string(LinkField field) noexcept {
  return kFieldNames[static_cast<std::size_t>(field)];
}

std::optional<LinkField> parse_link_field(std::string_view key) noexcept {
  for (std::size_t i = 0; i < kFieldNames.size(); ++i) {
    if (kFieldNames[i] == key) return kAllLinkFields[i];
  }
  return std::nullopt;
}

std::string_view trim(std::string_view s) noexcept {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::size_t PackageMetadata::populated_count() const {
  return static_cast<std::size_t>(std::count_if(
      links.begin(), links.end(), [](const auto& v) { return v.has_value(); }));
}

PackageMetadata package_from_json(const nlohmann::json& record) {
  if (!record.is_object()) {
    throw MalformedRecord("registry record is not a JSON object");
  }
  const auto name_it = record.find("name");
  if (name_it == record.end() || !name_it->is_string()) {
    throw MalformedRecord("registry record has no package name");
  }
  PackageMetadata pkg;
  pkg.name = name_it->get<std::string>();
  if (is_blank(pkg.name)) {
    throw MalformedRecord("registry record has a blank package name");
  }
  for (LinkField field : kAllLinkFields) {
    const auto it = record.find(std::string(to_string(field)));
    if (it == record.end() || !it->is_string()) continue;
    auto value = it->get<std::string>();
    if (is_blank(value)) continue;
    pkg.link(field) = std::move(value);
  }
  return pkg;
}

PackageMetadata parse_package_record(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedRecord(std::string("unparseable registry record: ") + e.what());
  }
  return package_from_json(doc);
}

std::vector<RawLink> collect_links(const PackageMetadata& pkg) {
  std::vector<RawLink> out;
  for (LinkField field : kAllLinkFields) {
    const auto& value = pkg.link(field);
    if (!value) continue;
    const auto url = trim(*value);
    if (url.empty()) continue;
    auto existing = std::find_if(out.begin(), out.end(),
                                 [&](const RawLink& l) { return l.url == url; });
    if (existing == out.end()) {
      out.push_back(RawLink{std::string(url), {field}});
    } else {
      existing->fields.push_back(field);
    }
  }
  return out;
}

std::vector<PackageMetadata> load_records(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<PackageMetadata> out;

  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      std::ifstream in(file, std::ios::binary);
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        out.push_back(parse_package_record(buf.str()));
      } catch (const MalformedRecord& e) {
        throw MalformedRecord(file.string() + ": " + e.what());
      }
    }
    return out;
  }

  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedRecord("cannot open input " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    try {
      out.push_back(parse_package_record(line));
    } catch (const MalformedRecord& e) {
      throw MalformedRecord(path.string() + ":" + std::to_string(line_no) +
                            ": " + e.what());
    }
  }
  return out;
}

}  // namespace linkres
