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

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace linkres {

/// The seven link-bearing fields of a registry record, in declaration order.
enum class LinkField {
  ProjectUri,
  HomepageUri,
  WikiUri,
  DocumentationUri,
  MailingListUri,
  SourceCodeUri,
  BugTrackerUri,
};

inline constexpr std::size_t kLinkFieldCount = 7;

inline constexpr std::array<LinkField, kLinkFieldCount> kAllLinkFields = {
    LinkField::ProjectUri,     LinkField::HomepageUri,
    LinkField::WikiUri,        LinkField::DocumentationUri,
    LinkField::MailingListUri, LinkField::SourceCodeUri,
    LinkField::BugTrackerUri,
};

/// Registry key name, e.g. "homepage_uri".
std::string_view to_string(LinkField field) noexcept;
std::optional<LinkField> parse_link_field(std::string_view key) noexcept;

/// One registry record. Every field slot always exists; absent values are
/// empty optionals.
struct PackageMetadata {
  std::string name;
  std::array<std::optional<std::string>, kLinkFieldCount> links;

  const std::optional<std::string>& link(LinkField field) const {
    return links[static_cast<std::size_t>(field)];
  }
  std::optional<std::string>& link(LinkField field) {
    return links[static_cast<std::size_t>(field)];
  }

  std::size_t populated_count() const;

  bool operator==(const PackageMetadata&) const = default;
};

/// A distinct (trimmed) link string and every field it appeared in.
struct RawLink {
  std::string url;
  std::vector<LinkField> fields;  // field-declaration order, no duplicates

  bool operator==(const RawLink&) const = default;
};

/// Throws MalformedRecord when the document is not a JSON object, or the
/// name is missing, not a string, or blank. Unknown keys are ignored;
/// non-string and whitespace-only link values are treated as absent.
PackageMetadata package_from_json(const nlohmann::json& record);
PackageMetadata parse_package_record(std::string_view text);

std::vector<RawLink> collect_links(const PackageMetadata& pkg);

/// Reads a JSONL dump (one record per non-blank line) or, when `path` is a
/// directory, every `*.json` file in it sorted by file name.
std::vector<PackageMetadata> load_records(const std::filesystem::path& path);

std::string_view trim(std::string_view s) noexcept;

}  // namespace linkres
