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

#include <string>
#include <string_view>
#include <vector>

namespace linkres {

enum class Scheme { None, Http, Https };

std::string_view to_string(Scheme scheme) noexcept;

/// A link reduced to the parts that matter for classification.
///
/// The host is lowercased, the query and fragment are dropped, userinfo is
/// dropped and runs of slashes in the path are collapsed. A "www." prefix
/// is kept; classification decides what it means.
struct NormalizedUrl {
  Scheme scheme = Scheme::None;
  std::string host;
  std::string port;  // digits only, empty when absent
  std::vector<std::string> path_segments;
  bool had_trailing_slash = false;
  std::string raw;  // original string, kept for provenance only

  /// Equality on everything except `raw`.
  bool same_location(const NormalizedUrl& other) const;
};

/// Throws MalformedUrl for blank input, inner whitespace, a scheme other
/// than http/https, a non-numeric port, or a host that is neither a dotted
/// domain name nor an IPv4 address.
NormalizedUrl normalize_url(std::string_view raw);

/// Canonical string form. normalize_url(render(u)) is the same location
/// as u.
std::string render(const NormalizedUrl& url);

/// The URL to request when fetching: scheme-less links get "http://" and
/// an empty path becomes "/".
std::string request_url(const NormalizedUrl& url);

bool is_ipv4(std::string_view host) noexcept;

std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b) noexcept;
bool iends_with(std::string_view s, std::string_view suffix) noexcept;

/// An (account, repository) pair on the code host. Comparison is
/// case-insensitive; the stored spelling is kept as given.
struct RepoRef {
  std::string owner;
  std::string repo;

  bool operator==(const RepoRef& other) const noexcept {
    return iequals(owner, other.owner) && iequals(repo, other.repo);
  }

  bool same_spelling(const RepoRef& other) const noexcept {
    return owner == other.owner && repo == other.repo;
  }

  /// "owner/repo"
  std::string full_name() const { return owner + "/" + repo; }
  /// "https://github.com/owner/repo"
  std::string url() const { return "https://github.com/" + full_name(); }
};

}  // namespace linkres
