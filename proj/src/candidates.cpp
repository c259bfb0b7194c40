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

#include "linkres/candidates.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "linkres/domain.hpp"
#include "linkres/errors.hpp"

namespace linkres {

namespace {

// First path segments on github.com that are site pages, not accounts.
const std::set<std::string, std::less<>> kSitePaths = {
    "about",       "apps",        "blog",          "codespaces",   "collections",
    "contact",     "customer-stories", "dashboard", "enterprise",  "events",
    "explore",     "features",    "git-guides",    "home",         "issues",
    "join",        "login",       "logout",        "marketplace",  "mobile",
    "new",         "nonprofit",   "notifications", "password_reset", "premium-support",
    "pricing",     "pulls",       "readme",        "resources",    "search",
    "security",    "settings",    "signup",        "site",         "solutions",
    "stars",       "team",        "topics",        "trending",     "watching",
};

// Segments after which the next segment names an account.
const std::set<std::string, std::less<>> kAccountPrefixes = {"orgs", "sponsors", "users"};

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '"' || c == '\'' ||
         c == '<' || c == '>' || c == '(' || c == ')' || c == '[' || c == ']' ||
         c == '{' || c == '}' || c == '=' || c == ',' || c == ';' || c == '\\' ||
         c == '`';
}

std::string join_fields(const std::vector<LinkField>& fields) {
  std::string out;
  for (auto f : fields) {
    if (!out.empty()) out += ",";
    out += to_string(f);
  }
  return out;
}

std::string account_url(std::string_view account) {
  return "https://github.com/" + std::string(account);
}

template <class T, class Eq>
void push_unique(std::vector<T>& v, T value, Eq eq) {
  if (std::none_of(v.begin(), v.end(), [&](const T& x) { return eq(x, value); })) {
    v.push_back(std::move(value));
  }
}

// "git@github.com:owner/repo.git" -> "github.com/owner/repo.git"
std::string rewrite_scp_form(std::string token) {
  const auto at = token.find("@github.com:");
  if (at == std::string::npos) return token;
  return "github.com/" + token.substr(at + 12);
}

void absorb_token(std::string token, PageLinks& out) {
  while (!token.empty() && std::string_view(".,:;!?").find(token.back()) != std::string_view::npos) {
    token.pop_back();
  }
  token = rewrite_scp_form(std::move(token));
  NormalizedUrl url;
  try {
    url = normalize_url(token);
  } catch (const MalformedUrl&) {
    return;
  }
  if (!is_github_host(url.host) || url.path_segments.empty()) return;

  auto segs = url.path_segments;
  if (kAccountPrefixes.count(segs.front()) != 0) {
    if (segs.size() < 2) return;
    segs = {segs[1]};
  }
  if (kSitePaths.count(segs.front()) != 0) return;

  const auto& account = segs.front();
  if (segs.size() >= 2) {
    auto repo = segs[1];
    if (iends_with(repo, ".git")) repo.resize(repo.size() - 4);
    if (!repo.empty()) {
      push_unique(out.repos, RepoRef{account, repo},
                  [](const RepoRef& a, const RepoRef& b) { return a == b; });
    }
  }
  push_unique(out.accounts, account,
              [](const std::string& a, const std::string& b) { return iequals(a, b); });
}

}  // namespace

std::vector<CandidateRepo> candidates_from_category(const LinkCategory& category,
                                                    std::string_view package_name,
                                                    const RawLink& origin) {
  const EvidenceStep origin_step{EvidenceKind::FieldLink,
                                 join_fields(origin.fields) + ": " + origin.url, origin.url};
  const std::string package(package_name);

  if (const auto* good = std::get_if<category::GoodRepo>(&category)) {
    return {CandidateRepo{good->ref, CandidateSource::Explicit, {origin_step}}};
  }
  if (const auto* issues = std::get_if<category::IssuesLink>(&category)) {
    return {CandidateRepo{issues->ref, CandidateSource::IssuesLink, {origin_step}}};
  }
  if (const auto* page = std::get_if<category::GitHubPage>(&category)) {
    return {CandidateRepo{RepoRef{page->username, package},
                          CandidateSource::GitHubPage,
                          {origin_step}}};
  }
  if (const auto* profile = std::get_if<category::UserProfile>(&category)) {
    return {CandidateRepo{RepoRef{profile->username, package},
                          CandidateSource::UserProfile,
                          {origin_step}}};
  }
  return {};
}

PageLinks extract_github_accounts(std::string_view page_text) {
  PageLinks out;
  constexpr std::string_view kNeedle = "github.com";
  std::size_t pos = 0;
  while (pos + kNeedle.size() <= page_text.size()) {
    // case-insensitive search
    std::size_t hit = std::string_view::npos;
    for (std::size_t i = pos; i + kNeedle.size() <= page_text.size(); ++i) {
      if (iequals(page_text.substr(i, kNeedle.size()), kNeedle)) {
        hit = i;
        break;
      }
    }
    if (hit == std::string_view::npos) break;

    std::size_t begin = hit;
    while (begin > 0 && !is_delimiter(page_text[begin - 1])) --begin;
    std::size_t end = hit + kNeedle.size();
    while (end < page_text.size() && !is_delimiter(page_text[end])) ++end;

    absorb_token(std::string(page_text.substr(begin, end - begin)), out);
    pos = end;
  }
  return out;
}

AccountVerification verify_account(std::string_view account, const NormalizedUrl& homepage,
                                   Gateway& gateway) {
  AccountVerification out;
  const auto status = gateway.account_status(account);
  if (std::holds_alternative<account_status::NotFound>(status)) {
    out.outcome = Verification::Rejected;
    out.evidence.push_back({EvidenceKind::AccountNotFound,
                            "no GitHub account named " + std::string(account),
                            account_url(account)});
    return out;
  }

  const auto& profile = std::get<account_status::Exists>(status);
  out.account = profile.name;
  out.website = profile.website;
  out.avatar = profile.avatar;

  const auto home_domain = registrable_domain(homepage.host);
  if (profile.website && home_domain) {
    try {
      const auto site = normalize_url(*profile.website);
      const auto site_domain = registrable_domain(site.host);
      out.backlink_match = site_domain && *site_domain == *home_domain;
    } catch (const MalformedUrl&) {
      out.backlink_match = false;
    }
  }

  if (out.backlink_match) {
    out.outcome = Verification::Verified;
    out.evidence.push_back({EvidenceKind::BacklinkConfirmed,
                            "account " + profile.name + " links back to " + *home_domain +
                                " via " + *profile.website,
                            account_url(profile.name)});
  } else {
    out.outcome = Verification::NeedsReview;
    std::string why = profile.website ? "account website " + *profile.website +
                                            " does not match " + homepage.host
                                      : "account declares no website";
    out.evidence.push_back({EvidenceKind::LogoPending,
                            why + "; compare the account avatar with the homepage logo",
                            profile.avatar ? profile.avatar : account_url(profile.name)});
  }
  return out;
}

std::optional<CandidateRepo> find_repo_by_name(std::string_view account,
                                               std::string_view package_name,
                                               Gateway& gateway,
                                               CandidateSource source) {
  std::vector<RepoRef> repos;
  try {
    repos = gateway.list_repos(account);
  } catch (const NotFoundError&) {
    return std::nullopt;
  }
  const auto match = std::find_if(repos.begin(), repos.end(), [&](const RepoRef& r) {
    return iequals(r.repo, package_name);
  });
  if (match == repos.end()) return std::nullopt;
  return CandidateRepo{*match,
                       source,
                       {{EvidenceKind::RepoNameMatch,
                         "repository " + match->full_name() + " has the package name",
                         match->url()}}};
}

ImplicitResolution resolve_implicit(const NormalizedUrl& external_url,
                                    std::string_view package_name, Gateway& gateway) {
  ImplicitResolution out;
  const auto page_url = request_url(external_url);

  std::string page;
  try {
    page = gateway.fetch_page(external_url);
  } catch (const FetchError& e) {
    out.notes.push_back({EvidenceKind::PageFetchFailed,
                         std::string(to_string(e.kind())) + ": " + e.what(), page_url});
    return out;
  }
  const EvidenceStep fetched{EvidenceKind::PageFetched, "fetched " + page_url, page_url};
  const auto links = extract_github_accounts(page);

  for (const auto& repo : links.repos) {
    if (!iequals(repo.repo, package_name)) continue;
    out.candidates.push_back(CandidateRepo{
        repo,
        CandidateSource::HomepageScrape,
        {fetched,
         {EvidenceKind::AccountLinkFound, "page links to repository " + repo.full_name(),
          repo.url()}}});
  }
  if (!out.candidates.empty()) return out;

  if (!links.accounts.empty()) {
    for (const auto& account : links.accounts) {
      auto found =
          find_repo_by_name(account, package_name, gateway, CandidateSource::HomepageScrape);
      if (!found) continue;
      std::vector<EvidenceStep> trail = {
          fetched,
          {EvidenceKind::AccountLinkFound, "page links to account " + account,
           account_url(account)}};
      trail.insert(trail.end(), found->evidence.begin(), found->evidence.end());
      found->evidence = std::move(trail);
      out.candidates.push_back(std::move(*found));
    }
    if (out.candidates.empty()) {
      out.notes.push_back(fetched);
      out.notes.push_back({EvidenceKind::AccountLinkFound,
                           "no linked account has a repository named " +
                               std::string(package_name),
                           std::nullopt});
    }
    return out;
  }

  std::string guess;
  try {
    guess = infer_account_name(external_url.host);
  } catch (const UninferableHost& e) {
    out.notes.push_back(fetched);
    out.notes.push_back({EvidenceKind::AccountNotFound, e.what(), std::nullopt});
    return out;
  }
  const EvidenceStep inferred{EvidenceKind::AccountInferred,
                              "no GitHub link on page; guessed account " + guess +
                                  " from " + external_url.host,
                              account_url(guess)};

  auto verification = verify_account(guess, external_url, gateway);
  if (verification.outcome == Verification::Rejected) {
    out.notes.push_back(fetched);
    out.notes.push_back(inferred);
    out.notes.insert(out.notes.end(), verification.evidence.begin(),
                     verification.evidence.end());
    return out;
  }

  auto found = find_repo_by_name(verification.account, package_name, gateway,
                                 CandidateSource::InferredAccount);
  if (!found) {
    out.notes.push_back(fetched);
    out.notes.push_back(inferred);
    out.notes.push_back({EvidenceKind::RepoNameMatch,
                         "account " + verification.account + " has no repository named " +
                             std::string(package_name),
                         account_url(verification.account)});
    return out;
  }

  std::vector<EvidenceStep> trail = {fetched, inferred};
  trail.insert(trail.end(), verification.evidence.begin(), verification.evidence.end());
  trail.insert(trail.end(), found->evidence.begin(), found->evidence.end());
  found->evidence = std::move(trail);

  if (verification.outcome == Verification::Verified) {
    out.candidates.push_back(std::move(*found));
    return out;
  }

  ReviewItem item;
  item.kind = ReviewKind::LogoPending;
  item.id = review_item_id(item.kind, found->ref);
  item.reason = "account " + verification.account +
                " has no back-link to the homepage; logo comparison required";
  item.links.emplace_back("homepage", page_url);
  item.links.emplace_back("account", account_url(verification.account));
  if (verification.avatar) item.links.emplace_back("avatar", *verification.avatar);
  item.candidate = std::move(*found);
  out.review = std::move(item);
  return out;
}

}  // namespace linkres
