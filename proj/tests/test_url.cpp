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

#include "linkres/errors.hpp"
#include "linkres/url.hpp"

using namespace linkres;

TEST_CASE("case and trailing slash are normalized") {
  const auto u = normalize_url("HTTPS://GitHub.com/A/B/");
  CHECK(u.scheme == Scheme::Https);
  CHECK(u.host == "github.com");
  CHECK(u.path_segments == std::vector<std::string>{"A", "B"});
  CHECK(u.had_trailing_slash);
  CHECK(u.raw == "HTTPS://GitHub.com/A/B/");
}

TEST_CASE("scheme-less host") {
  const auto u = normalize_url("www.google.com");
  CHECK(u.scheme == Scheme::None);
  CHECK(u.host == "www.google.com");
  CHECK(u.path_segments.empty());
}

TEST_CASE("bare site with slash") {
  const auto u = normalize_url("http://php.net/");
  CHECK(u.scheme == Scheme::Http);
  CHECK(u.host == "php.net");
  CHECK(u.path_segments.empty());
}

TEST_CASE("query, fragment, userinfo and doubled slashes are dropped") {
  const auto u = normalize_url("  https://user:pw@Example.org:8080//a///b?x=1#top  ");
  CHECK(u.host == "example.org");
  CHECK(u.port == "8080");
  CHECK(u.path_segments == std::vector<std::string>{"a", "b"});
  CHECK_FALSE(u.had_trailing_slash);
  CHECK(render(u) == "https://example.org:8080/a/b");
}

TEST_CASE("malformed links") {
  for (const char* bad : {"", "   ", "http://exa mple.com", "ftp://files.example.org/x",
                          "mailto:someone@example.org", "http://example.org:80a/",
                          "https://", "not a url", "localhost", "http://under_score!.org"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(normalize_url(bad), MalformedUrl);
  }
}

TEST_CASE("IPv4 hosts are accepted") {
  const auto u = normalize_url("http://192.168.0.1/admin");
  CHECK(is_ipv4(u.host));
  CHECK_FALSE(is_ipv4("192.168.0"));
  CHECK_FALSE(is_ipv4("256.1.1.1"));
}

TEST_CASE("render then normalize is stable") {
  for (const char* raw : {"HTTPS://GitHub.com/A/B/", "www.google.com", "http://php.net/",
                          "https://github.com/a/b.git", "https://alice.github.io/project",
                          "http://x.org:81//p//q/?a#b", "github.com/a/b"}) {
    CAPTURE(raw);
    const auto once = normalize_url(raw);
    const auto twice = normalize_url(render(once));
    CHECK(once.same_location(twice));
    CHECK(render(twice) == render(once));
  }
}

TEST_CASE("request_url fills in scheme and root path") {
  CHECK(request_url(normalize_url("www.google.com")) == "http://www.google.com/");
  CHECK(request_url(normalize_url("https://a.org/x/")) == "https://a.org/x/");
  CHECK(request_url(normalize_url("https://a.org/x")) == "https://a.org/x");
}

TEST_CASE("RepoRef compares without case but keeps spelling") {
  const RepoRef a{"FutureWorkshops", "notifiable-rails"};
  const RepoRef b{"futureworkshops", "Notifiable-Rails"};
  CHECK(a == b);
  CHECK_FALSE(a.same_spelling(b));
  CHECK(a.url() == "https://github.com/FutureWorkshops/notifiable-rails");
}
