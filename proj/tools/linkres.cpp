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

// Command-line front end: `linkres resolve` and `linkres stats`.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "linkres/errors.hpp"
#include "linkres/pipeline.hpp"

namespace {

int run_resolve(const linkres::RunConfig& config) {
  if (config.review_in) {
    const auto merged = linkres::merge_reviews(config);
    for (const auto& w : merged.warnings) std::cerr << "warning: " << w << "\n";
    std::cerr << "applied " << merged.applied << " review decision(s)\n";
    return 0;
  }
  const auto outcome = linkres::run_batch(config);
  std::cerr << linkres::render_text(outcome.stats);
  if (outcome.unprocessed != 0) {
    std::cerr << outcome.unprocessed << " package(s) left unprocessed\n";
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolve package metadata links to source repositories"};
  app.require_subcommand(1);

  linkres::RunConfig config;
  std::string input, output, review_out, review_in, cache, denylist;
  auto* resolve = app.add_subcommand("resolve", "Resolve a batch of package records");
  resolve->add_option("--input", input, "JSONL file or directory of package records");
  resolve->add_option("--output", output, "Results JSONL")->required();
  resolve->add_option("--review-out", review_out, "Pending review queue JSONL")->required();
  resolve->add_option("--review-in", review_in,
                      "Review decisions to merge into existing results");
  resolve->add_option("--cache", cache, "Response cache / fixture directory");
  resolve->add_flag("--offline", config.offline, "Serve only from the cache");
  resolve->add_option("--denylist", denylist, "Generic-host denylist file");
  resolve->add_option("--concurrency", config.concurrency, "Worker threads")
      ->check(CLI::PositiveNumber);
  resolve->add_option("--rate-limit", config.rate_limit, "API requests per hour");

  std::string results;
  bool as_json = false;
  auto* stats = app.add_subcommand("stats", "Summarize a results file");
  stats->add_option("--results", results, "Results JSONL")->required();
  stats->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*resolve) {
      config.input = input;
      config.output = output;
      config.review_out = review_out;
      config.cache_dir = cache;
      if (!review_in.empty()) config.review_in = review_in;
      if (!denylist.empty()) config.denylist = denylist;
      return run_resolve(config);
    }
    const auto s = linkres::report_stats(results);
    if (as_json) {
      std::cout << linkres::to_json(s).dump(2) << "\n";
    } else {
      std::cout << linkres::render_text(s);
    }
    return 0;
  } catch (const linkres::MissingFixture& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
