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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>

namespace linkres {

/// Hourly request budget for the repository-host API, shared by all workers
/// and persisted so consecutive runs do not overspend the same window.
class RateBudget {
 public:
  using Clock = std::function<std::int64_t()>;  // unix seconds

  static constexpr std::int64_t kWindowSeconds = 3600;

  /// `state_file` may be empty for an in-memory budget.
  RateBudget(std::uint32_t requests_per_hour, std::filesystem::path state_file,
             Clock clock = {});

  /// Takes one request from the budget; false when it is spent or the host
  /// asked us to wait.
  bool try_acquire();

  /// Feed back x-ratelimit-remaining / x-ratelimit-reset from a response.
  void observe(std::optional<std::int64_t> remaining, std::optional<std::int64_t> reset_at);

  std::uint32_t used() const;
  std::uint32_t limit() const noexcept { return limit_; }

 private:
  void roll_window(std::int64_t now);
  void persist() const;

  std::uint32_t limit_;
  std::filesystem::path state_file_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::int64_t window_start_ = 0;
  std::uint32_t used_ = 0;
  std::int64_t blocked_until_ = 0;
};

}  // namespace linkres
