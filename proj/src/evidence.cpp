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

#include "linkres/evidence.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace linkres {

namespace {

template <class Enum, std::size_t N>
using NameTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr NameTable<CandidateSource, 6> kSources = {{
    {CandidateSource::Explicit, "explicit"},
    {CandidateSource::IssuesLink, "issues_link"},
    {CandidateSource::GitHubPage, "github_page"},
    {CandidateSource::UserProfile, "user_profile"},
    {CandidateSource::HomepageScrape, "homepage_scrape"},
    {CandidateSource::InferredAccount, "inferred_account"},
}};

constexpr NameTable<EvidenceKind, 15> kEvidenceKinds = {{
    {EvidenceKind::FieldLink, "field_link"},
    {EvidenceKind::PageFetched, "page_fetched"},
    {EvidenceKind::PageFetchFailed, "page_fetch_failed"},
    {EvidenceKind::AccountLinkFound, "account_link_found"},
    {EvidenceKind::AccountInferred, "account_inferred"},
    {EvidenceKind::AccountNotFound, "account_not_found"},
    {EvidenceKind::BacklinkConfirmed, "backlink_confirmed"},
    {EvidenceKind::LogoPending, "logo_pending"},
    {EvidenceKind::RepoNameMatch, "repo_name_match"},
    {EvidenceKind::RepoRenamed, "repo_renamed"},
    {EvidenceKind::RepoNotFound, "repo_not_found"},
    {EvidenceKind::GemspecFound, "gemspec_found"},
    {EvidenceKind::NoGemspec, "no_gemspec"},
    {EvidenceKind::ReviewApproved, "review_approved"},
    {EvidenceKind::ReviewRejected, "review_rejected"},
}};

constexpr NameTable<ReviewKind, 4> kReviewKinds = {{
    {ReviewKind::LogoPending, "logo_pending"},
    {ReviewKind::Conflict, "conflict"},
    {ReviewKind::NoGemspec, "no_gemspec"},
    {ReviewKind::Unverifiable, "unverifiable_candidate"},
}};

constexpr NameTable<Verdict, 3> kVerdicts = {{
    {Verdict::Pending, "pending"},
    {Verdict::Approve, "approve"},
    {Verdict::Reject, "reject"},
}};

template <class Enum, std::size_t N>
std::string_view name_of(const NameTable<Enum, N>& table, Enum value) noexcept {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "unknown";
}

template <class Enum, std::size_t N>
std::optional<Enum> value_of(const NameTable<Enum, N>& table, std::string_view s) noexcept {
  for (const auto& [e, name] : table) {
    if (name == s) return e;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(CandidateSource source) noexcept {
  return name_of(kSources, source);
}
std::optional<CandidateSource> parse_candidate_source(std::string_view s) noexcept {
  return value_of(kSources, s);
}

std::string_view to_string(EvidenceKind kind) noexcept {
  return name_of(kEvidenceKinds, kind);
}
std::optional<EvidenceKind> parse_evidence_kind(std::string_view s) noexcept {
  return value_of(kEvidenceKinds, s);
}

std::string_view to_string(ReviewKind kind) noexcept { return name_of(kReviewKinds, kind); }
std::optional<ReviewKind> parse_review_kind(std::string_view s) noexcept {
  return value_of(kReviewKinds, s);
}

std::string_view to_string(Verdict verdict) noexcept { return name_of(kVerdicts, verdict); }
std::optional<Verdict> parse_verdict(std::string_view s) noexcept {
  return value_of(kVerdicts, s);
}

bool contains_kind(const std::vector<EvidenceStep>& steps, EvidenceKind kind) {
  return std::any_of(steps.begin(), steps.end(),
                     [kind](const EvidenceStep& s) { return s.kind == kind; });
}

std::string review_item_id(ReviewKind kind, const RepoRef& ref) {
  return std::string(to_string(kind)) + ":" + ref.full_name();
}

}  // namespace linkres
