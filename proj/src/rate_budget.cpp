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

#include "linkres/rate_budget.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "linkres/response_cache.hpp"

namespace linkres {

namespace {

std::int64_t system_now() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

RateBudget::RateBudget(std::uint32_t requests_per_hour, std::filesystem::path state_file,
                       Clock clock)
    : limit_(requests_per_hour),
      state_file_(std::move(state_file)),
      clock_(clock ? std::move(clock) : Clock(system_now)) {
  window_start_ = clock_();
  if (state_file_.empty() || !std::filesystem::exists(state_file_)) return;
  std::ifstream in(state_file_);
  try {
    const auto doc = nlohmann::json::parse(in);
    window_start_ = doc.value("window_start", window_start_);
    used_ = doc.value("used", 0u);
    blocked_until_ = doc.value("blocked_until", std::int64_t{0});
  } catch (const nlohmann::json::exception&) {
    // unreadable state: start a fresh window
  }
}

void RateBudget::roll_window(std::int64_t now) {
  if (now - window_start_ >= kWindowSeconds || now < window_start_) {
    window_start_ = now;
    used_ = 0;
  }
}

bool RateBudget::try_acquire() {
  std::lock_guard lock(mutex_);
  const auto now = clock_();
  if (now < blocked_until_) return false;
  roll_window(now);
  if (used_ >= limit_) return false;
  ++used_;
  persist();
  return true;
}

void RateBudget::observe(std::optional<std::int64_t> remaining,
                         std::optional<std::int64_t> reset_at) {
  if (!remaining || *remaining > 0 || !reset_at) return;
  std::lock_guard lock(mutex_);
  blocked_until_ = std::max(blocked_until_, *reset_at);
  persist();
}

std::uint32_t RateBudget::used() const {
  std::lock_guard lock(mutex_);
  return used_;
}

void RateBudget::persist() const {
  if (state_file_.empty()) return;
  nlohmann::json doc = {{"window_start", window_start_},
                        {"used", used_},
                        {"blocked_until", blocked_until_}};
  std::filesystem::create_directories(state_file_.parent_path());
  write_file_atomic(state_file_, doc.dump() + "\n");
}

}  // namespace linkres
