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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkres/gateway.hpp"
#include "linkres/records.hpp"
#include "linkres/validator.hpp"

namespace linkres {

/// Environment variable holding the repository-host API token.
inline constexpr const char* kTokenEnv = "GITHUB_TOKEN";

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path output;
  std::filesystem::path review_out;
  std::optional<std::filesystem::path> review_in;
  std::filesystem::path cache_dir;
  bool offline = false;
  std::optional<std::filesystem::path> denylist;
  unsigned concurrency = 1;
  /// Requests per hour; 0 picks the host default (5000 with a token, 60
  /// without).
  std::uint32_t rate_limit = 0;
  std::optional<std::string> token;

  /// Throws ConfigError.
  void validate(bool merging = false) const;
};

GatewayOptions gateway_options(const RunConfig& config);

struct RunStats {
  std::size_t total = 0;
  std::map<std::string, std::size_t> by_status;    // every status, zero-filled
  std::map<std::string, std::size_t> by_category;  // distinct links per category
  std::size_t explicit_resolved = 0;

  /// Share of packages resolved through an explicit repository link.
  double explicit_fraction() const {
    return total == 0 ? 0.0 : static_cast<double>(explicit_resolved) / static_cast<double>(total);
  }
};

RunStats compute_stats(const std::vector<ResolutionResult>& results);
std::string render_text(const RunStats& stats);
ordered_json to_json(const RunStats& stats);

struct BatchOutcome {
  int exit_code = 0;  // 0, or 2 when some package is unprocessed
  std::size_t unprocessed = 0;
  RunStats stats;
};

/// Resolves every package of `config.input` and writes, in input order:
/// the results JSONL (`output`), the pending review items (`review_out`),
/// `<output>.stats.json` and `<output>.manifest.json` (the only file with
/// timestamps). Outputs appear atomically when the run completes.
/// MissingFixture aborts the run and leaves previous outputs untouched.
BatchOutcome run_batch(const RunConfig& config);
BatchOutcome run_batch(const RunConfig& config, Gateway& gateway);

struct MergeOutcome {
  std::size_t applied = 0;
  std::vector<std::string> warnings;
};

/// Applies `review_in` decisions to the existing results in `output`,
/// rewriting it and `review_out`. Unaffected lines are copied verbatim;
/// bad decisions become warnings.
MergeOutcome merge_reviews(const RunConfig& config);

std::vector<ResolutionResult> read_results(const std::filesystem::path& path);

/// Throws MalformedResults.
RunStats report_stats(const std::filesystem::path& results);

std::filesystem::path stats_path(const std::filesystem::path& output);
std::filesystem::path manifest_path(const std::filesystem::path& output);

}  // namespace linkres
