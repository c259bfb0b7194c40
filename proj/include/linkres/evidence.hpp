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
#include <vector>

#include "linkres/url.hpp"

namespace linkres {

/// How a candidate repository was obtained, most direct first.
enum class CandidateSource {
  Explicit,
  IssuesLink,
  GitHubPage,
  UserProfile,
  HomepageScrape,
  InferredAccount,
};

std::string_view to_string(CandidateSource source) noexcept;
std::optional<CandidateSource> parse_candidate_source(std::string_view s) noexcept;

enum class EvidenceKind {
  FieldLink,
  PageFetched,
  PageFetchFailed,
  AccountLinkFound,
  AccountInferred,
  AccountNotFound,
  BacklinkConfirmed,
  LogoPending,
  RepoNameMatch,
  RepoRenamed,
  RepoNotFound,
  GemspecFound,
  NoGemspec,
  ReviewApproved,
  ReviewRejected,
};

std::string_view to_string(EvidenceKind kind) noexcept;
std::optional<EvidenceKind> parse_evidence_kind(std::string_view s) noexcept;

struct EvidenceStep {
  EvidenceKind kind;
  std::string detail;
  std::optional<std::string> url;

  bool operator==(const EvidenceStep&) const = default;
};

bool contains_kind(const std::vector<EvidenceStep>& steps, EvidenceKind kind);

struct CandidateRepo {
  RepoRef ref;
  CandidateSource source = CandidateSource::Explicit;
  std::vector<EvidenceStep> evidence;  // never empty
};

enum class ReviewKind { LogoPending, Conflict, NoGemspec, Unverifiable };

std::string_view to_string(ReviewKind kind) noexcept;
std::optional<ReviewKind> parse_review_kind(std::string_view s) noexcept;

enum class Verdict { Pending, Approve, Reject };

std::string_view to_string(Verdict verdict) noexcept;
std::optional<Verdict> parse_verdict(std::string_view s) noexcept;

/// A decision deferred to a person, with everything needed to make it
/// offline: the candidate, its trail and the pages to look at.
struct ReviewItem {
  std::string id;  // "<kind>:<owner>/<repo>", unique within a package
  ReviewKind kind = ReviewKind::Unverifiable;
  std::string reason;
  CandidateRepo candidate;
  std::optional<RepoRef> renamed_from;
  std::vector<std::pair<std::string, std::string>> links;  // label, url
  Verdict verdict = Verdict::Pending;
  std::string note;
};

std::string review_item_id(ReviewKind kind, const RepoRef& ref);

}  // namespace linkres
