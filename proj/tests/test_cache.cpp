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
#include "linkres/rate_budget.hpp"
#include "linkres/response_cache.hpp"
#include "support.hpp"

using namespace linkres;

TEST_CASE("fixture documents") {
  const auto j = parse_cache_entry(nlohmann::json::parse(
      R"({"request":"GET https://x/","status":200,"headers":{"Content-Type":"a/b"},"json":{"k":[1,2]}})"));
  CHECK(j.request_key == "GET https://x/");
  CHECK(j.response.body == R"({"k":[1,2]})");
  CHECK(j.response.headers.at("content-type") == "a/b");

  const auto b = parse_cache_entry(nlohmann::json::parse(
      R"({"request":"GET https://y/","status":404,"body":"  raw\ntext "})"));
  CHECK(b.response.body == "  raw\ntext ");

  CHECK_THROWS(parse_cache_entry(nlohmann::json::parse(R"({"status":200})")));
}

TEST_CASE("entries round trip, including non-UTF-8 bodies") {
  for (std::string body : {std::string("plain"), std::string("\xff\x00\x01", 3),
                           std::string("\xc0\xaf"), std::string("ok \xe2\x82\xac")}) {
    CacheEntry e{"GET http://z/", HttpResponse{200, {{"link", "<a>"}}, body}, "2026-01-01T00:00:00Z"};
    const auto back = parse_cache_entry(to_json(e));
    CHECK(back.response == e.response);
    CHECK(back.request_key == e.request_key);
  }
}

TEST_CASE("cache directory") {
  testing::TempDir dir;
  {
    ResponseCache cache(dir.path());
    CHECK(cache.size() == 0);
    cache.store(CacheEntry{"GET http://a/", HttpResponse{200, {}, "A"}, ""});
    CHECK(cache.find("GET http://a/")->body == "A");
    CHECK_FALSE(cache.find("GET http://b/"));
  }
  ResponseCache reloaded(dir.path());
  CHECK(reloaded.size() == 1);
  CHECK(reloaded.find("GET http://a/")->body == "A");

  testing::write_text(dir / "dup.json", R"({"request":"GET http://a/","status":200,"body":"B"})");
  CHECK_THROWS_AS(ResponseCache(dir.path()), ConfigError);
}

TEST_CASE("stored file names are stable and distinct") {
  const auto a = ResponseCache::file_name_for("GET https://api.github.com/repos/a/b");
  CHECK(a == ResponseCache::file_name_for("GET https://api.github.com/repos/a/b"));
  CHECK(a != ResponseCache::file_name_for("GET https://api.github.com/repos/A/b"));
  CHECK(a.size() > 5);
  CHECK(a.substr(a.size() - 5) == ".json");
}

TEST_CASE("committed fixture cache loads") {
  ResponseCache cache(testing::fixture_cache());
  CHECK(cache.size() > 50);
  CHECK(cache.find("GET http://www.futureworkshops.com/"));
}

TEST_CASE("hourly budget") {
  std::int64_t now = 1'000'000;
  RateBudget budget(2, {}, [&] { return now; });
  CHECK(budget.try_acquire());
  CHECK(budget.try_acquire());
  CHECK_FALSE(budget.try_acquire());
  now += RateBudget::kWindowSeconds;
  CHECK(budget.try_acquire());
  CHECK(budget.used() == 1);
}

TEST_CASE("host-reported exhaustion blocks until reset") {
  std::int64_t now = 5'000;
  RateBudget budget(100, {}, [&] { return now; });
  budget.observe(0, now + 30);
  CHECK_FALSE(budget.try_acquire());
  now += 31;
  CHECK(budget.try_acquire());
  budget.observe(10, now + 999);
  CHECK(budget.try_acquire());
}

TEST_CASE("budget state survives restarts") {
  testing::TempDir dir;
  std::int64_t now = 42'000;
  const auto clock = [&] { return now; };
  {
    RateBudget budget(3, dir / "state", clock);
    CHECK(budget.try_acquire());
    CHECK(budget.try_acquire());
  }
  RateBudget again(3, dir / "state", clock);
  CHECK(again.used() == 2);
  CHECK(again.try_acquire());
  CHECK_FALSE(again.try_acquire());
}
