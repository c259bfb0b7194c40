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

// Randomized checks with fixed seeds so failures reproduce.

#include <doctest.h>

#include <random>

#include "linkres/candidates.hpp"
#include "linkres/classifier.hpp"
#include "linkres/errors.hpp"
#include "linkres/metadata.hpp"
#include "support.hpp"

using namespace linkres;

namespace {

std::string random_segment(std::mt19937& rng) {
  static const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_.~";
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) s += alphabet[pick(rng)];
  return s;
}

std::string random_url(std::mt19937& rng) {
  static const std::vector<std::string> schemes = {"http://", "https://", "HTTPS://", ""};
  static const std::vector<std::string> hosts = {
      "github.com", "www.github.com", "GitHub.com", "alice.github.io", "example.org",
      "www.futureworkshops.com", "php.net", "a.b.c.co.uk", "10.1.2.3", "github.io"};
  std::uniform_int_distribution<int> segs(0, 5);
  std::string url = schemes[rng() % schemes.size()] + hosts[rng() % hosts.size()];
  const int n = segs(rng);
  for (int i = 0; i < n; ++i) url += (rng() % 5 == 0 ? "//" : "/") + random_segment(rng);
  if (rng() % 3 == 0) url += "/";
  if (rng() % 7 == 0) url += "?q=" + random_segment(rng);
  if (rng() % 7 == 0) url += "#" + random_segment(rng);
  return url;
}

}  // namespace

TEST_CASE("issues links always contain a repository link") {
  std::mt19937 rng(20261019);
  int accepted = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto owner = random_segment(rng);
    const auto repo = random_segment(rng);
    const auto base = "https://github.com/" + owner + "/" + repo;
    const auto issues = base + "/issues" + (rng() % 2 ? "/" : "");
    CAPTURE(issues);
    const auto via_issues = match_issues_regex(normalize_url(issues));
    if (!via_issues) continue;
    ++accepted;
    const auto via_repo = match_repo_regex(normalize_url(base));
    REQUIRE(via_repo);
    CHECK(via_repo->same_spelling(*via_issues));
  }
  CHECK(accepted > 900);
}

TEST_CASE("normalization is idempotent") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto raw = random_url(rng);
    CAPTURE(raw);
    NormalizedUrl once;
    try {
      once = normalize_url(raw);
    } catch (const MalformedUrl&) {
      continue;
    }
    const auto twice = normalize_url(render(once));
    CHECK(once.same_location(twice));
  }
}

TEST_CASE("classification is deterministic and never produces candidates for dead ends") {
  std::mt19937 rng(99);
  const auto deny = Denylist::defaults();
  for (int i = 0; i < 2000; ++i) {
    const auto raw = random_url(rng);
    CAPTURE(raw);
    const auto a = classify_raw(raw, deny);
    const auto b = classify_raw(raw, deny);
    CHECK(a.index() == b.index());
    CHECK(testing::payload(a) == testing::payload(b));
    if (std::holds_alternative<category::SubDirectory>(a) ||
        std::holds_alternative<category::IrrelevantOrGeneric>(a) ||
        std::holds_alternative<category::Malformed>(a)) {
      CHECK(candidates_from_category(a, "pkg", RawLink{raw, {LinkField::HomepageUri}}).empty());
    }
  }
}

TEST_CASE("link extraction never invents accounts") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    std::string page;
    for (int j = 0; j < 8; ++j) page += "<a href=\"" + random_url(rng) + "\">x</a> ";
    const auto links = extract_github_accounts(page);
    for (const auto& account : links.accounts) {
      CHECK(page.find(account) != std::string::npos);
    }
    for (const auto& r : links.repos) {
      CHECK(std::any_of(links.accounts.begin(), links.accounts.end(),
                        [&](const std::string& a) { return iequals(a, r.owner); }));
    }
  }
}
