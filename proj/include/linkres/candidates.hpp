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

#include "linkres/classifier.hpp"
#include "linkres/evidence.hpp"
#include "linkres/gateway.hpp"
#include "linkres/metadata.hpp"

namespace linkres {

/// Candidates a single classified metadata link stands for. Only the
/// repository, issues, GitHub page and user profile categories produce
/// any; the first evidence step records the originating field(s).
std::vector<CandidateRepo> candidates_from_category(const LinkCategory& category,
                                                    std::string_view package_name,
                                                    const RawLink& origin);

/// GitHub accounts and repositories linked from a page, in order of first
/// appearance, without duplicates. A repository link also contributes its
/// owner to `accounts`.
struct PageLinks {
  std::vector<std::string> accounts;
  std::vector<RepoRef> repos;
};

/// Scans href values and bare URL tokens (including git@github.com:owner/repo
/// forms). Site pages such as github.com/about are skipped.
PageLinks extract_github_accounts(std::string_view page_text);

enum class Verification { Verified, NeedsReview, Rejected };

struct AccountVerification {
  Verification outcome = Verification::Rejected;
  bool backlink_match = false;
  bool logo_checked = false;  // never set by automated runs
  std::string account;        // host spelling when the account exists
  std::optional<std::string> website;
  std::optional<std::string> avatar;
  std::vector<EvidenceStep> evidence;
};

/// Verified only when the account's declared website shares a registrable
/// domain with `homepage`. Otherwise the logo has to be compared by a
/// person (NeedsReview). A missing account is Rejected.
AccountVerification verify_account(std::string_view account, const NormalizedUrl& homepage,
                                   Gateway& gateway);

/// Repository of `account` whose name equals `package_name` ignoring case,
/// spelled as the host spells it. A missing account yields nothing.
std::optional<CandidateRepo> find_repo_by_name(std::string_view account,
                                               std::string_view package_name,
                                               Gateway& gateway,
                                               CandidateSource source);

struct ImplicitResolution {
  std::vector<CandidateRepo> candidates;
  std::optional<ReviewItem> review;  // logo comparison pending
  std::vector<EvidenceStep> notes;   // why nothing (more) was found
};

/// Follows a personal or company homepage to a repository:
///  1. fetch the landing page;
///  2. a linked repository named like the package is taken directly;
///  3. otherwise every linked account is searched for such a repository;
///  4. with no accounts on the page, the account name is guessed from the
///     host, checked, verified by back-link, then searched.
/// A page that cannot be fetched yields an empty result with a note.
ImplicitResolution resolve_implicit(const NormalizedUrl& external_url,
                                    std::string_view package_name, Gateway& gateway);

}  // namespace linkres
