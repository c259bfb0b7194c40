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

#include "linkres/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "linkres/errors.hpp"
#include "linkres/metadata.hpp"

namespace linkres {

namespace fs = std::filesystem;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  ::gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

fs::path sibling_temp(const fs::path& path) {
  return path.parent_path() / ("." + path.filename().string() + ".partial");
}

void ensure_parent(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
}

void commit(const fs::path& tmp, const fs::path& path) {
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw ConfigError("cannot write " + path.string() + ": " + ec.message());
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

void write_review_queue(std::ostream& out, const ResolutionResult& r) {
  if (r.status != ResolutionStatus::NeedsReview) return;
  for (const auto& item : r.review_items) {
    if (item.verdict == Verdict::Pending) out << to_line(review_queue_entry(r.package, item)) << '\n';
  }
}

void write_stats_file(const fs::path& output, const RunStats& stats) {
  write_file_atomic(stats_path(output), to_json(stats).dump(2) + "\n");
}

// Collects per-package results from workers and writes them in input
// order as soon as every earlier package is done.
class OrderedWriter {
 public:
  OrderedWriter(std::size_t count, std::ostream& results, std::ostream& reviews)
      : slots_(count), results_(results), reviews_(reviews) {}

  void deliver(std::size_t index, ResolutionResult result) {
    std::lock_guard lock(mutex_);
    slots_[index] = std::move(result);
    while (next_ < slots_.size() && slots_[next_]) {
      auto& r = *slots_[next_];
      results_ << to_line(to_json(r)) << '\n';
      write_review_queue(reviews_, r);
      summaries_.push_back(summarize(r));
      slots_[next_].reset();
      ++next_;
    }
  }

  /// Lightweight copies kept for statistics.
  const std::vector<ResolutionResult>& summaries() const { return summaries_; }

 private:
  static ResolutionResult summarize(const ResolutionResult& r) {
    ResolutionResult s;
    s.package = r.package;
    s.status = r.status;
    s.method = r.method;
    s.links = r.links;
    return s;
  }

  std::mutex mutex_;
  std::vector<std::optional<ResolutionResult>> slots_;
  std::size_t next_ = 0;
  std::ostream& results_;
  std::ostream& reviews_;
  std::vector<ResolutionResult> summaries_;
};

}  // namespace

void RunConfig::validate(bool merging) const {
  if (!merging) {
    if (input.empty()) throw ConfigError("--input is required");
    if (!fs::exists(input)) throw ConfigError("input does not exist: " + input.string());
    if (cache_dir.empty()) throw ConfigError("--cache is required");
    if (offline && !fs::is_directory(cache_dir)) {
      throw ConfigError("offline mode needs an existing cache directory: " +
                        cache_dir.string());
    }
  }
  if (output.empty()) throw ConfigError("--output is required");
  if (review_out.empty()) throw ConfigError("--review-out is required");
  if (concurrency < 1) throw ConfigError("--concurrency must be at least 1");
  if (denylist && !fs::exists(*denylist)) {
    throw ConfigError("denylist does not exist: " + denylist->string());
  }
  if (merging) {
    if (!review_in || !fs::exists(*review_in)) {
      throw ConfigError("review decisions file does not exist");
    }
    if (!fs::exists(output)) {
      throw ConfigError("no prior results to merge reviews into: " + output.string());
    }
  }
}

GatewayOptions gateway_options(const RunConfig& config) {
  GatewayOptions options;
  options.offline = config.offline;
  options.cache_dir = config.cache_dir;
  options.token = config.token;
  if (!options.token) {
    if (const char* env = std::getenv(kTokenEnv); env != nullptr && *env != '\0') {
      options.token = std::string(env);
    }
  }
  options.rate_per_hour =
      config.rate_limit != 0 ? config.rate_limit : (options.token ? 5000u : 60u);
  return options;
}

fs::path stats_path(const fs::path& output) {
  return output.parent_path() / (output.filename().string() + ".stats.json");
}

fs::path manifest_path(const fs::path& output) {
  return output.parent_path() / (output.filename().string() + ".manifest.json");
}

RunStats compute_stats(const std::vector<ResolutionResult>& results) {
  RunStats stats;
  for (auto status : {ResolutionStatus::Resolved, ResolutionStatus::Discarded,
                      ResolutionStatus::NeedsReview, ResolutionStatus::Unprocessed}) {
    stats.by_status[std::string(to_string(status))] = 0;
  }
  for (auto tag : all_category_tags()) stats.by_category[std::string(tag)] = 0;

  for (const auto& r : results) {
    ++stats.total;
    ++stats.by_status[std::string(to_string(r.status))];
    if (r.status == ResolutionStatus::Resolved && r.method == CandidateSource::Explicit) {
      ++stats.explicit_resolved;
    }
    std::set<std::string> seen;
    for (const auto& link : r.links) {
      if (seen.insert(link.url).second) ++stats.by_category[link.category];
    }
  }
  return stats;
}

std::string render_text(const RunStats& stats) {
  std::ostringstream out;
  out << "packages: " << stats.total << "\n";
  out << "status:\n";
  for (const auto& [name, n] : stats.by_status) {
    out << "  " << std::left << std::setw(16) << name << n << "\n";
  }
  out << "link categories:\n";
  for (const auto& [name, n] : stats.by_category) {
    out << "  " << std::left << std::setw(16) << name << n << "\n";
  }
  out << "resolved via explicit link: " << stats.explicit_resolved << " of " << stats.total
      << " (" << std::fixed << std::setprecision(4) << stats.explicit_fraction() << ")\n";
  return out.str();
}

ordered_json to_json(const RunStats& stats) {
  ordered_json out;
  out["packages"] = stats.total;
  out["status"] = stats.by_status;
  out["categories"] = stats.by_category;
  out["explicit_resolved"] = stats.explicit_resolved;
  out["explicit_fraction"] = stats.explicit_fraction();
  return out;
}

BatchOutcome run_batch(const RunConfig& config) {
  config.validate();
  Gateway gateway(gateway_options(config));
  return run_batch(config, gateway);
}

BatchOutcome run_batch(const RunConfig& config, Gateway& gateway) {
  config.validate();
  const auto started = utc_now();
  const auto packages = load_records(config.input);
  ResolverConfig resolver;
  if (config.denylist) resolver.denylist = Denylist::load(*config.denylist);

  ensure_parent(config.output);
  ensure_parent(config.review_out);
  const auto results_tmp = sibling_temp(config.output);
  const auto review_tmp = sibling_temp(config.review_out);

  BatchOutcome outcome;
  {
    std::ofstream results_out(results_tmp, std::ios::binary | std::ios::trunc);
    std::ofstream review_out(review_tmp, std::ios::binary | std::ios::trunc);
    if (!results_out || !review_out) throw ConfigError("cannot open output files");

    OrderedWriter writer(packages.size(), results_out, review_out);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
      while (!abort) {
        const auto i = next++;
        if (i >= packages.size()) break;
        try {
          ResolutionResult r;
          try {
            r = resolve_package(packages[i], resolver, gateway);
          } catch (const MissingFixture&) {
            throw;
          } catch (const GatewayError& e) {
            r = unprocessed_result(packages[i], resolver, e.what());
          }
          writer.deliver(i, std::move(r));
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          abort = true;
        }
      }
    };

    const auto width = std::min<std::size_t>(config.concurrency,
                                             std::max<std::size_t>(packages.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < width; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    if (failure) {
      results_out.close();
      review_out.close();
      std::error_code ec;
      fs::remove(results_tmp, ec);
      fs::remove(review_tmp, ec);
      std::rethrow_exception(failure);
    }
    results_out.flush();
    review_out.flush();
    if (!results_out || !review_out) throw ConfigError("failed writing outputs");
    outcome.stats = compute_stats(writer.summaries());
  }
  commit(results_tmp, config.output);
  commit(review_tmp, config.review_out);
  write_stats_file(config.output, outcome.stats);

  outcome.unprocessed = outcome.stats.by_status["unprocessed"];
  outcome.exit_code = outcome.unprocessed == 0 ? 0 : 2;

  ordered_json manifest;
  manifest["started_at"] = started;
  manifest["finished_at"] = utc_now();
  manifest["input"] = config.input.string();
  manifest["offline"] = config.offline;
  manifest["concurrency"] = config.concurrency;
  manifest["packages"] = outcome.stats.total;
  manifest["unprocessed"] = outcome.unprocessed;
  write_file_atomic(manifest_path(config.output), manifest.dump(2) + "\n");
  return outcome;
}

std::vector<ResolutionResult> read_results(const fs::path& path) {
  std::vector<ResolutionResult> out;
  std::size_t line_no = 0;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedResults("cannot read results " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(result_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw MalformedResults(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const MalformedResults& e) {
      throw MalformedResults(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

RunStats report_stats(const fs::path& results) { return compute_stats(read_results(results)); }

MergeOutcome merge_reviews(const RunConfig& config) {
  config.validate(true);
  MergeOutcome outcome;

  auto lines = read_lines(config.output);
  std::vector<ResolutionResult> results;
  std::unordered_map<std::string, std::size_t> by_package;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      results.push_back(result_from_json(nlohmann::json::parse(lines[i])));
    } catch (const nlohmann::json::exception& e) {
      throw MalformedResults(config.output.string() + ": " + e.what());
    }
    by_package.emplace(results.back().package, i);
  }

  const auto decision_lines = read_lines(*config.review_in);
  for (std::size_t n = 0; n < decision_lines.size(); ++n) {
    const auto where = config.review_in->string() + ":" + std::to_string(n + 1) + ": ";
    ReviewDecision decision;
    try {
      decision = decision_from_json(nlohmann::json::parse(decision_lines[n]));
    } catch (const std::exception& e) {
      outcome.warnings.push_back(where + e.what());
      continue;
    }
    const auto it = by_package.find(decision.package);
    if (it == by_package.end()) {
      outcome.warnings.push_back(where + "unknown package " + decision.package);
      continue;
    }
    auto& result = results[it->second];
    try {
      auto updated = apply_review_decision(result, decision);
      const auto line = to_line(to_json(updated));
      if (line != to_line(to_json(result))) {
        lines[it->second] = line;
        result = std::move(updated);
        ++outcome.applied;
      }
    } catch (const UnknownReviewItem& e) {
      outcome.warnings.push_back(where + e.what());
    } catch (const ConflictingReviewDecision& e) {
      outcome.warnings.push_back(where + e.what());
    }
  }

  std::string results_text;
  std::ostringstream review_text;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    results_text += lines[i];
    results_text += '\n';
    write_review_queue(review_text, results[i]);
  }
  ensure_parent(config.review_out);
  write_file_atomic(config.output, results_text);
  write_file_atomic(config.review_out, review_text.str());
  write_stats_file(config.output, compute_stats(results));
  return outcome;
}

}  // namespace linkres
