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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linkres/candidates.hpp"
#include "linkres/classifier.hpp"
#include "linkres/evidence.hpp"
#include "linkres/gateway.hpp"
#include "linkres/metadata.hpp"

namespace linkres {

namespace validation {
struct Validated {
  RepoRef canonical;
  std::optional<RepoRef> renamed_from;
};
struct Refuted {
  std::string reason;  // "deleted"
};
/// The repository exists but could not be confirmed automatically.
struct NeedsReview {
  std::string reason;  // "no_gemspec"
  RepoRef canonical;
  std::optional<RepoRef> renamed_from;
};
}  // namespace validation

struct ValidationOutcome {
  std::variant<validation::Validated, validation::Refuted, validation::NeedsReview> result;
  std::vector<EvidenceStep> evidence;

  bool validated() const {
    return std::holds_alternative<validation::Validated>(result);
  }
};

/// Checks the candidate against the host: a missing repository is refuted,
/// a renamed one is followed, and the repository root must hold
/// "<package>.gemspec" (any case) to validate.
ValidationOutcome validate_candidate(const CandidateRepo& candidate,
                                     std::string_view package_name, Gateway& gateway);

enum class ResolutionStatus { Resolved, Discarded, NeedsReview, Unprocessed };

std::string_view to_string(ResolutionStatus status) noexcept;
std::optional<ResolutionStatus> parse_resolution_status(std::string_view s) noexcept;

/// One metadata link as reported in results: one record per field.
struct LinkRecord {
  std::string field;
  std::string url;
  std::string category;

  bool operator==(const LinkRecord&) const = default;
};

struct ResolutionResult {
  std::string package;
  ResolutionStatus status = ResolutionStatus::Discarded;
  std::optional<RepoRef> repo;                 // Resolved only
  std::optional<CandidateSource> method;       // Resolved only
  std::optional<RepoRef> renamed_from;         // Resolved only
  std::string reason;                          // Discarded / NeedsReview / Unprocessed
  std::vector<LinkRecord> links;
  std::vector<EvidenceStep> evidence;
  std::vector<ReviewItem> review_items;
};

struct ResolverConfig {
  Denylist denylist = Denylist::defaults();
};

/// Classifies every link, then validates candidates tier by tier:
/// explicit, issues, GitHub page / user profile, implicit homepage search.
/// Stops at the first tier that validates. Within the explicit tier all
/// candidates are checked, and distinct validated repositories become a
/// conflict for review. GatewayError propagates (caller marks the package
/// unprocessed); MissingFixture propagates.
ResolutionResult resolve_package(const PackageMetadata& pkg, const ResolverConfig& config,
                                 Gateway& gateway);

/// Result for a package whose resolution failed with a gateway error.
ResolutionResult unprocessed_result(const PackageMetadata& pkg, const ResolverConfig& config,
                                    std::string_view error);

struct ReviewDecision {
  std::string package;
  std::string item_id;
  Verdict verdict = Verdict::Approve;  // Approve or Reject
  std::string note;
};

/// Approve resolves the package to the item's candidate; reject marks the
/// item, and once every item is rejected the package is discarded.
/// Re-applying a decision already recorded returns the result unchanged.
/// Throws UnknownReviewItem or ConflictingReviewDecision.
ResolutionResult apply_review_decision(ResolutionResult result,
                                       const ReviewDecision& decision);

}  // namespace linkres
