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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linkres/url.hpp"

namespace linkres {

namespace category {

/// Explicit, well-formed repository link.
struct GoodRepo {
  RepoRef ref;
};
/// Link to the issue tracker of a repository.
struct IssuesLink {
  RepoRef ref;
};
/// <username>.github.io
struct GitHubPage {
  std::string username;
};
/// github.com/<username>
struct UserProfile {
  std::string username;
};
/// github.com/<owner>/<repo>/<more...>; never investigated further.
struct SubDirectory {
  RepoRef ref;
  std::vector<std::string> extra_path;
};
struct IrrelevantOrGeneric {};
/// Anything else: a personal or company site that may lead to a repository.
struct ExternalSite {
  std::string host;
};
struct Malformed {
  std::string reason;
};

}  // namespace category

using LinkCategory =
    std::variant<category::GoodRepo, category::IssuesLink, category::GitHubPage,
                 category::UserProfile, category::SubDirectory,
                 category::IrrelevantOrGeneric, category::ExternalSite,
                 category::Malformed>;

/// Stable snake_case tag used in output files, e.g. "good_repo".
std::string_view category_tag(const LinkCategory& category) noexcept;

/// Every tag in variant order.
const std::vector<std::string_view>& all_category_tags();

/// Hosts whose links are generic and never investigated.
class Denylist {
 public:
  /// google.com, www.google.com, php.net, github.com, www.github.com,
  /// slideshare.net
  static Denylist defaults();

  /// One host per line; '#' starts a comment; blank lines skipped.
  static Denylist parse(std::string_view text);
  static Denylist load(const std::filesystem::path& path);

  Denylist() = default;
  explicit Denylist(std::set<std::string> hosts);

  bool contains(std::string_view host) const;
  const std::set<std::string>& hosts() const noexcept { return hosts_; }

 private:
  std::set<std::string> hosts_;
};

bool is_github_host(std::string_view host) noexcept;

/// http(s)://github.com/<owner>/<repo>[.git|/]. A ".git" suffix is
/// removed from the returned repo name.
std::optional<RepoRef> match_repo_regex(const NormalizedUrl& url);

/// http(s)://github.com/<owner>/<repo>/issues[/]
std::optional<RepoRef> match_issues_regex(const NormalizedUrl& url);

/// Username of a <username>.github.io host, any scheme and path.
std::optional<std::string> detect_github_page(const NormalizedUrl& url);

/// The only path segment of a github.com link with exactly one segment.
std::optional<std::string> detect_user_profile(const NormalizedUrl& url);

/// Total: every normalized URL maps to exactly one category.
///
/// Order: generic (denylisted host, or a GitHub host with an empty path),
/// repository, issues, GitHub page, user profile, sub-directory, external.
/// GitHub hosts on the denylist only mark the bare site as generic.
LinkCategory classify(const NormalizedUrl& url, const Denylist& denylist);

/// Normalizes then classifies; normalization failures become Malformed.
LinkCategory classify_raw(std::string_view raw, const Denylist& denylist);

}  // namespace linkres
