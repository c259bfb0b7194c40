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

#include "linkres/classifier.hpp"

#include <fstream>
#include <sstream>

#include "linkres/errors.hpp"
#include "linkres/metadata.hpp"

namespace linkres {

namespace {

constexpr std::string_view kGitHub = "github.com";
constexpr std::string_view kPagesSuffix = ".github.io";

bool has_web_scheme(const NormalizedUrl& url) {
  return url.scheme == Scheme::Http || url.scheme == Scheme::Https;
}

// Host must be exactly github.com; a port or "www." disqualifies the link.
bool is_canonical_github(const NormalizedUrl& url) {
  return has_web_scheme(url) && url.host == kGitHub && url.port.empty();
}

std::string strip_git_suffix(std::string_view repo) {
  if (iends_with(repo, ".git")) repo.remove_suffix(4);
  return std::string(repo);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view category_tag(const LinkCategory& category) noexcept {
  return std::visit(
      Overloaded{
          [](const category::GoodRepo&) { return std::string_view("good_repo"); },
          [](const category::IssuesLink&) { return std::string_view("issues_link"); },
          [](const category::GitHubPage&) { return std::string_view("github_page"); },
          [](const category::UserProfile&) { return std::string_view("user_profile"); },
          [](const category::SubDirectory&) { return std::string_view("sub_directory"); },
          [](const category::IrrelevantOrGeneric&) {
            return std::string_view("irrelevant");
          },
          [](const category::ExternalSite&) { return std::string_view("external_site"); },
          [](const category::Malformed&) { return std::string_view("malformed"); },
      },
      category);
}

const std::vector<std::string_view>& all_category_tags() {
  static const std::vector<std::string_view> tags = {
      "good_repo",  "issues_link",   "github_page",  "user_profile",
      "sub_directory", "irrelevant", "external_site", "malformed",
  };
  return tags;
}

Denylist::Denylist(std::set<std::string> hosts) : hosts_(std::move(hosts)) {}

Denylist Denylist::defaults() {
  return Denylist({"google.com", "www.google.com", "php.net", "github.com",
                   "www.github.com", "slideshare.net"});
}

Denylist Denylist::parse(std::string_view text) {
  std::set<std::string> hosts;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = line;
    if (const auto hash = entry.find('#'); hash != std::string_view::npos) {
      entry = entry.substr(0, hash);
    }
    entry = trim(entry);
    if (!entry.empty()) hosts.insert(to_lower(entry));
  }
  return Denylist(std::move(hosts));
}

Denylist Denylist::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read denylist " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool Denylist::contains(std::string_view host) const {
  return hosts_.count(std::string(host)) != 0;
}

bool is_github_host(std::string_view host) noexcept {
  return host == kGitHub || host == "www.github.com";
}

std::optional<RepoRef> match_repo_regex(const NormalizedUrl& url) {
  if (!is_canonical_github(url) || url.path_segments.size() != 2) {
    return std::nullopt;
  }
  RepoRef ref{url.path_segments[0], strip_git_suffix(url.path_segments[1])};
  if (ref.repo.empty()) return std::nullopt;
  return ref;
}

std::optional<RepoRef> match_issues_regex(const NormalizedUrl& url) {
  if (!is_canonical_github(url) || url.path_segments.size() != 3 ||
      url.path_segments[2] != "issues") {
    return std::nullopt;
  }
  RepoRef ref{url.path_segments[0], strip_git_suffix(url.path_segments[1])};
  if (ref.repo.empty()) return std::nullopt;
  return ref;
}

std::optional<std::string> detect_github_page(const NormalizedUrl& url) {
  const std::string_view host = url.host;
  if (host.size() <= kPagesSuffix.size() || !host.ends_with(kPagesSuffix)) {
    return std::nullopt;
  }
  const auto label = host.substr(0, host.size() - kPagesSuffix.size());
  if (label.empty() || label.find('.') != std::string_view::npos) {
    return std::nullopt;
  }
  return std::string(label);
}

std::optional<std::string> detect_user_profile(const NormalizedUrl& url) {
  if (url.host != kGitHub || url.path_segments.size() != 1) return std::nullopt;
  return url.path_segments.front();
}

LinkCategory classify(const NormalizedUrl& url, const Denylist& denylist) {
  const bool generic = is_github_host(url.host) ? url.path_segments.empty()
                                                : denylist.contains(url.host);
  if (generic) return category::IrrelevantOrGeneric{};
  if (auto ref = match_repo_regex(url)) return category::GoodRepo{std::move(*ref)};
  if (auto ref = match_issues_regex(url)) return category::IssuesLink{std::move(*ref)};
  if (auto user = detect_github_page(url)) return category::GitHubPage{std::move(*user)};
  if (auto user = detect_user_profile(url)) return category::UserProfile{std::move(*user)};
  if (url.host == kGitHub && url.path_segments.size() >= 3) {
    return category::SubDirectory{
        RepoRef{url.path_segments[0], url.path_segments[1]},
        std::vector<std::string>(url.path_segments.begin() + 2, url.path_segments.end())};
  }
  return category::ExternalSite{url.host};
}

LinkCategory classify_raw(std::string_view raw, const Denylist& denylist) {
  try {
    return classify(normalize_url(raw), denylist);
  } catch (const MalformedUrl& e) {
    return category::Malformed{e.what()};
  }
}

}  // namespace linkres
