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

#include <string>
#include <string_view>

#include <json.hpp>

#include "linkres/validator.hpp"

namespace linkres {

using ordered_json = nlohmann::ordered_json;

/// Results line:
///   {"package", "links":[{"field","url","category"}], "status",
///    "repo":{"owner","name","url"}?, "method"?, "renamed_from"?, "reason"?,
///    "evidence":[{"kind","detail","url"?}], "review_items"?}
ordered_json to_json(const ResolutionResult& result);
/// Throws MalformedResults.
ResolutionResult result_from_json(const nlohmann::json& doc);

ordered_json to_json(const ReviewItem& item);
ReviewItem review_item_from_json(const nlohmann::json& doc);

/// Review-queue line: {"package", "item_id", ...} for one pending item.
ordered_json review_queue_entry(const std::string& package, const ReviewItem& item);

/// {package, item_id, verdict: approve|reject, note}. Throws ConfigError.
ReviewDecision decision_from_json(const nlohmann::json& doc);

/// Compact single-line serialization used for every JSONL file.
std::string to_line(const ordered_json& doc);

}  // namespace linkres
