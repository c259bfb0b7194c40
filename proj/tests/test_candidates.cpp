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

#include <doctest.h>

#include <json.hpp>

#include "linkres/candidates.hpp"
#include "linkres/errors.hpp"
#include "support.hpp"

using namespace linkres;

namespace {

RawLink origin(const std::string& url) { return RawLink{url, {LinkField::HomepageUri}}; }

std::vector<CandidateRepo> from(const std::string& url, const std::string& pkg) {
  return candidates_from_category(classify_raw(url, Denylist::defaults()), pkg, origin(url));
}

bool calls_only(const Gateway& gw, const std::string& operation) {
  for (const auto& call : gw.call_log()) {
    if (call.operation != operation) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("candidates per category") {
  const auto page = from("https://alice.github.io", "foo");
  REQUIRE(page.size() == 1);
  CHECK(page[0].ref.same_spelling(RepoRef{"alice", "foo"}));
  CHECK(page[0].source == CandidateSource::GitHubPage);

  CHECK(from("https://github.com/u/r/tree/master/subgem", "subgem").empty());
  CHECK(from("http://php.net/", "x").empty());
  CHECK(from("http://www.futureworkshops.com", "x").empty());

  const auto issues = from("https://github.com/a/b/issues", "b");
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].source == CandidateSource::IssuesLink);

  const auto profile = from("https://github.com/bob", "tool");
  REQUIRE(profile.size() == 1);
  CHECK(profile[0].ref.same_spelling(RepoRef{"bob", "tool"}));

  for (const auto& c : {page[0], issues[0], profile[0]}) {
    REQUIRE_FALSE(c.evidence.empty());
    CHECK(c.evidence.front().kind == EvidenceKind::FieldLink);
  }
}

TEST_CASE("issues links point at the enclosing repository") {
  // ten hand-built links; the oracle strips "/issues[/]" textually
  const std::vector<std::string> urls = {
      "https://github.com/a/b/issues",          "https://github.com/a/b/issues/",
      "http://github.com/rails/rails/issues",   "https://github.com/Foo/Bar/issues",
      "https://github.com/x-y/z_z/issues/",     "https://github.com/a.b/c.d/issues",
      "https://github.com/1/2/issues",          "https://github.com/issues/issues/issues",
      "https://GITHUB.com/o/r/issues",          "https://github.com/o/r.js/issues/",
  };
  for (const auto& u : urls) {
    CAPTURE(u);
    auto stripped = u.substr(0, u.rfind("/issues"));
    const auto repo = match_repo_regex(normalize_url(stripped));
    const auto got = from(u, "pkg");
    REQUIRE(repo);
    REQUIRE(got.size() == 1);
    CHECK(got[0].ref.same_spelling(*repo));
    CHECK(got[0].source == CandidateSource::IssuesLink);
  }
}

TEST_CASE("page extraction fixtures") {
  const auto dir = testing::fixture_dir() / "pages";
  const auto expected = nlohmann::json::parse(testing::read_text(dir / "expected.json"));
  REQUIRE(expected.size() == 5);
  for (const auto& [file, want] : expected.items()) {
    CAPTURE(file);
    const auto got = extract_github_accounts(testing::read_text(dir / file));
    CHECK(got.accounts == want["accounts"].get<std::vector<std::string>>());
    std::vector<std::vector<std::string>> repos;
    for (const auto& r : got.repos) repos.push_back({r.owner, r.repo});
    CHECK(repos == want["repos"].get<std::vector<std::vector<std::string>>>());
  }
}

TEST_CASE("account verification") {
  auto gw = testing::fixture_gateway();
  const auto home = normalize_url("http://www.futureworkshops.com");

  const auto fw = verify_account("futureworkshops", home, gw);
  CHECK(fw.outcome == Verification::Verified);
  CHECK(fw.backlink_match);
  CHECK_FALSE(fw.logo_checked);
  CHECK(contains_kind(fw.evidence, EvidenceKind::BacklinkConfirmed));

  const auto plain = verify_account("plainuser", normalize_url("https://plainuser.dev"), gw);
  CHECK(plain.outcome == Verification::NeedsReview);
  CHECK(contains_kind(plain.evidence, EvidenceKind::LogoPending));

  const auto missing = verify_account("somehost", normalize_url("http://somehost.org"), gw);
  CHECK(missing.outcome == Verification::Rejected);
}

TEST_CASE("repository search by package name") {
  auto gw = testing::fixture_gateway();
  const auto fw = find_repo_by_name("futureworkshops", "notifiable-rails", gw,
                                    CandidateSource::InferredAccount);
  REQUIRE(fw);
  CHECK(fw->ref.same_spelling(RepoRef{"FutureWorkshops", "notifiable-rails"}));

  CHECK_FALSE(find_repo_by_name("casey", "c", gw, CandidateSource::InferredAccount));
  for (const char* spelling : {"foo", "FOO"}) {
    const auto hit = find_repo_by_name("casey", spelling, gw, CandidateSource::InferredAccount);
    REQUIRE(hit);
    CHECK(hit->ref.same_spelling(RepoRef{"casey", "Foo"}));
  }
  CHECK_FALSE(find_repo_by_name("emptyhand", "x", gw, CandidateSource::InferredAccount));
}

TEST_CASE("implicit resolution walk-through") {
  auto gw = testing::fixture_gateway();
  const auto r = resolve_implicit(normalize_url("http://www.futureworkshops.com"),
                                  "notifiable-rails", gw);
  REQUIRE(r.candidates.size() == 1);
  const auto& c = r.candidates[0];
  CHECK(c.ref.same_spelling(RepoRef{"FutureWorkshops", "notifiable-rails"}));
  CHECK(c.source == CandidateSource::InferredAccount);
  CHECK(c.evidence.front().kind == EvidenceKind::PageFetched);
  CHECK(contains_kind(c.evidence, EvidenceKind::AccountInferred));
  CHECK(contains_kind(c.evidence, EvidenceKind::BacklinkConfirmed));
  CHECK(contains_kind(c.evidence, EvidenceKind::RepoNameMatch));
  CHECK_FALSE(r.review);
}

TEST_CASE("direct repository link on the page short-circuits") {
  auto gw = testing::fixture_gateway();
  const auto r = resolve_implicit(normalize_url("https://blog.example.org/"), "widget", gw);
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.candidates[0].ref.same_spelling(RepoRef{"acme", "widget"}));
  CHECK(r.candidates[0].source == CandidateSource::HomepageScrape);
  CHECK(calls_only(gw, "fetch_page"));
}

TEST_CASE("missing account stops the search") {
  auto gw = testing::fixture_gateway();
  const auto r = resolve_implicit(normalize_url("http://somehost.org"), "anything", gw);
  CHECK(r.candidates.empty());
  CHECK_FALSE(r.review);
  CHECK(contains_kind(r.notes, EvidenceKind::AccountNotFound));
}

TEST_CASE("unreachable page leaves a note") {
  auto gw = testing::fixture_gateway();
  const auto r = resolve_implicit(normalize_url("http://missing.example.com"), "x", gw);
  CHECK(r.candidates.empty());
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].kind == EvidenceKind::PageFetchFailed);
}

TEST_CASE("account without back-link goes to logo review") {
  auto gw = testing::fixture_gateway();
  const auto r = resolve_implicit(normalize_url("http://www.acme-widgets.io"), "gizmo", gw);
  CHECK(r.candidates.empty());
  REQUIRE(r.review);
  CHECK(r.review->kind == ReviewKind::LogoPending);
  CHECK(r.review->id == "logo_pending:acme-widgets/gizmo");
  CHECK(r.review->links.size() == 3);
}
