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

#include "linkres/validator.hpp"

#include <algorithm>

#include "linkres/errors.hpp"

namespace linkres {

namespace {

constexpr std::size_t kListingExcerpt = 12;

struct ClassifiedLink {
  RawLink link;
  std::optional<NormalizedUrl> url;
  LinkCategory category;
};

std::vector<ClassifiedLink> classify_links(const PackageMetadata& pkg,
                                           const ResolverConfig& config,
                                           std::vector<LinkRecord>& records) {
  std::vector<ClassifiedLink> out;
  for (auto& link : collect_links(pkg)) {
    ClassifiedLink entry{std::move(link), std::nullopt, category::Malformed{}};
    try {
      entry.url = normalize_url(entry.link.url);
      entry.category = classify(*entry.url, config.denylist);
    } catch (const MalformedUrl& e) {
      entry.category = category::Malformed{e.what()};
    }
    for (auto field : entry.link.fields) {
      records.push_back(LinkRecord{std::string(to_string(field)), entry.link.url,
                                   std::string(category_tag(entry.category))});
    }
    out.push_back(std::move(entry));
  }
  return out;
}

EvidenceStep field_step(const RawLink& link) {
  std::string fields;
  for (auto f : link.fields) {
    if (!fields.empty()) fields += ",";
    fields += to_string(f);
  }
  return {EvidenceKind::FieldLink, fields + ": " + link.url, link.url};
}

void append(std::vector<EvidenceStep>& to, const std::vector<EvidenceStep>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// Per-package resolution state.
class Resolution {
 public:
  Resolution(const PackageMetadata& pkg, Gateway& gateway, ResolutionResult& result)
      : pkg_(pkg), gateway_(gateway), result_(result) {}

  /// Validates unless the same repository was already tried.
  std::optional<ValidationOutcome> attempt(const CandidateRepo& candidate) {
    if (std::find(tried_.begin(), tried_.end(), candidate.ref) != tried_.end()) {
      return std::nullopt;
    }
    tried_.push_back(candidate.ref);
    any_candidate_ = true;
    auto outcome = validate_candidate(candidate, pkg_.name, gateway_);
    append(result_.evidence, candidate.evidence);
    append(result_.evidence, outcome.evidence);

    if (const auto* review = std::get_if<validation::NeedsReview>(&outcome.result)) {
      ReviewItem item;
      item.kind = ReviewKind::NoGemspec;
      item.id = review_item_id(item.kind, review->canonical);
      item.reason = "repository " + review->canonical.full_name() + " has no " +
                    pkg_.name + ".gemspec at its root";
      item.candidate = candidate;
      item.candidate.ref = review->canonical;
      append(item.candidate.evidence, outcome.evidence);
      item.renamed_from = review->renamed_from;
      item.links.emplace_back("repository", review->canonical.url());
      add_review(std::move(item));
    }
    return outcome;
  }

  /// Candidate whose confirmation is someone else's call (logo check).
  void attempt_for_review(ReviewItem item) {
    if (std::find(tried_.begin(), tried_.end(), item.candidate.ref) != tried_.end()) return;
    tried_.push_back(item.candidate.ref);
    any_candidate_ = true;
    const auto outcome = validate_candidate(item.candidate, pkg_.name, gateway_);
    append(result_.evidence, item.candidate.evidence);
    append(result_.evidence, outcome.evidence);
    if (const auto* ok = std::get_if<validation::Validated>(&outcome.result)) {
      item.candidate.ref = ok->canonical;
      item.renamed_from = ok->renamed_from;
    } else if (const auto* review = std::get_if<validation::NeedsReview>(&outcome.result)) {
      item.candidate.ref = review->canonical;
      item.renamed_from = review->renamed_from;
      item.reason += "; " + review->reason;
    } else {
      return;
    }
    append(item.candidate.evidence, outcome.evidence);
    item.id = review_item_id(item.kind, item.candidate.ref);
    add_review(std::move(item));
  }

  void add_review(ReviewItem item) {
    const bool dup = std::any_of(reviews_.begin(), reviews_.end(),
                                 [&](const ReviewItem& r) { return r.id == item.id; });
    if (!dup) reviews_.push_back(std::move(item));
  }

  void mark_candidate() { any_candidate_ = true; }
  bool tried(const RepoRef& ref) const {
    return std::find(tried_.begin(), tried_.end(), ref) != tried_.end();
  }

  void resolve(const CandidateRepo& candidate, const validation::Validated& v) {
    result_.status = ResolutionStatus::Resolved;
    result_.repo = v.canonical;
    result_.method = candidate.source;
    result_.renamed_from = v.renamed_from;
    result_.reason.clear();
    result_.review_items.clear();
  }

  void finish() {
    if (!reviews_.empty()) {
      result_.status = ResolutionStatus::NeedsReview;
      result_.reason = "review_required";
      result_.review_items = std::move(reviews_);
    } else {
      result_.status = ResolutionStatus::Discarded;
      result_.reason = any_candidate_ ? "all_candidates_refuted" : "no_usable_links";
    }
  }

  std::vector<ReviewItem>& reviews() { return reviews_; }

 private:
  const PackageMetadata& pkg_;
  Gateway& gateway_;
  ResolutionResult& result_;
  std::vector<RepoRef> tried_;
  std::vector<ReviewItem> reviews_;
  bool any_candidate_ = false;
};

// A GitHub-hosted link that is not in canonical form: no scheme, or the
// www host. Not guessed at; surfaced for review instead.
std::optional<CandidateRepo> noncanonical_github_candidate(const ClassifiedLink& entry,
                                                           std::string_view package) {
  const auto& segs = entry.url->path_segments;
  CandidateRepo c;
  c.evidence.push_back(field_step(entry.link));
  if (segs.size() == 2) {
    auto repo = segs[1];
    if (iends_with(repo, ".git")) repo.resize(repo.size() - 4);
    if (repo.empty()) return std::nullopt;
    c.ref = RepoRef{segs[0], repo};
    c.source = CandidateSource::Explicit;
    return c;
  }
  if (segs.size() == 1) {
    c.ref = RepoRef{segs[0], std::string(package)};
    c.source = CandidateSource::UserProfile;
    return c;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ResolutionStatus status) noexcept {
  switch (status) {
    case ResolutionStatus::Resolved:
      return "resolved";
    case ResolutionStatus::Discarded:
      return "discarded";
    case ResolutionStatus::NeedsReview:
      return "needs_review";
    case ResolutionStatus::Unprocessed:
      break;
  }
  return "unprocessed";
}

std::optional<ResolutionStatus> parse_resolution_status(std::string_view s) noexcept {
  for (auto status : {ResolutionStatus::Resolved, ResolutionStatus::Discarded,
                      ResolutionStatus::NeedsReview, ResolutionStatus::Unprocessed}) {
    if (to_string(status) == s) return status;
  }
  return std::nullopt;
}

ValidationOutcome validate_candidate(const CandidateRepo& candidate,
                                     std::string_view package_name, Gateway& gateway) {
  ValidationOutcome out{validation::Refuted{"deleted"}, {}};
  const auto gone = [&](const RepoRef& ref) {
    out.evidence.push_back({EvidenceKind::RepoNotFound,
                            "repository " + ref.full_name() + " no longer exists; link discarded",
                            ref.url()});
    out.result = validation::Refuted{"deleted"};
    return out;
  };

  RepoRef current = candidate.ref;
  std::optional<RepoRef> renamed_from;
  const auto status = gateway.repo_status(candidate.ref);
  if (std::holds_alternative<repo_status::NotFound>(status)) return gone(candidate.ref);
  if (const auto* renamed = std::get_if<repo_status::Renamed>(&status)) {
    current = renamed->current;
    renamed_from = renamed->requested;
    out.evidence.push_back({EvidenceKind::RepoRenamed,
                            "repository " + renamed->requested.full_name() +
                                " was renamed to " + renamed->current.full_name(),
                            renamed->current.url()});
  } else {
    current = std::get<repo_status::Exists>(status).canonical;
  }

  std::vector<std::string> listing;
  try {
    listing = gateway.fetch_repo_root_listing(current);
  } catch (const NotFoundError&) {
    return gone(current);
  }

  const auto gemspec = std::string(package_name) + ".gemspec";
  const auto hit = std::find_if(listing.begin(), listing.end(),
                                [&](const std::string& n) { return iequals(n, gemspec); });
  if (hit != listing.end()) {
    out.evidence.push_back({EvidenceKind::GemspecFound,
                            *hit + " at the root of " + current.full_name(), current.url()});
    out.result = validation::Validated{current, renamed_from};
    return out;
  }

  std::string excerpt;
  for (std::size_t i = 0; i < listing.size() && i < kListingExcerpt; ++i) {
    excerpt += (i == 0 ? "" : ", ") + listing[i];
  }
  if (listing.size() > kListingExcerpt) excerpt += ", ...";
  out.evidence.push_back({EvidenceKind::NoGemspec,
                          "no " + gemspec + " at the root of " + current.full_name() +
                              " (root: " + (excerpt.empty() ? "empty" : excerpt) + ")",
                          current.url()});
  out.result = validation::NeedsReview{"no_gemspec", current, renamed_from};
  return out;
}

ResolutionResult resolve_package(const PackageMetadata& pkg, const ResolverConfig& config,
                                 Gateway& gateway) {
  ResolutionResult result;
  result.package = pkg.name;
  const auto links = classify_links(pkg, config, result.links);
  Resolution state(pkg, gateway, result);

  auto tier = [&](auto&& wanted) {
    std::vector<CandidateRepo> out;
    for (const auto& entry : links) {
      if (!wanted(entry.category)) continue;
      auto cands = candidates_from_category(entry.category, pkg.name, entry.link);
      out.insert(out.end(), cands.begin(), cands.end());
    }
    return out;
  };

  // Explicit links: check them all so disagreeing links surface as a conflict.
  {
    std::vector<std::pair<CandidateRepo, validation::Validated>> validated;
    for (const auto& c : tier([](const LinkCategory& cat) {
           return std::holds_alternative<category::GoodRepo>(cat);
         })) {
      auto outcome = state.attempt(c);
      if (outcome && outcome->validated()) {
        validated.emplace_back(c, std::get<validation::Validated>(outcome->result));
      }
    }
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < validated.size(); ++i) {
      const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](std::size_t j) {
        return validated[j].second.canonical == validated[i].second.canonical;
      });
      if (!seen) distinct.push_back(i);
    }
    if (distinct.size() == 1) {
      state.resolve(validated.front().first, validated.front().second);
      return result;
    }
    if (distinct.size() > 1) {
      std::string names;
      for (auto i : distinct) {
        names += (names.empty() ? "" : ", ") + validated[i].second.canonical.full_name();
      }
      std::vector<ReviewItem> conflict;
      for (auto i : distinct) {
        ReviewItem item;
        item.kind = ReviewKind::Conflict;
        item.candidate = validated[i].first;
        item.candidate.ref = validated[i].second.canonical;
        item.renamed_from = validated[i].second.renamed_from;
        item.id = review_item_id(item.kind, item.candidate.ref);
        item.reason = "explicit links validate to different repositories: " + names;
        item.links.emplace_back("repository", item.candidate.ref.url());
        conflict.push_back(std::move(item));
      }
      result.status = ResolutionStatus::NeedsReview;
      result.reason = "conflict";
      result.review_items = std::move(conflict);
      for (auto& other : state.reviews()) result.review_items.push_back(std::move(other));
      return result;
    }
  }

  auto first_validated = [&](const std::vector<CandidateRepo>& candidates) {
    for (const auto& c : candidates) {
      auto outcome = state.attempt(c);
      if (outcome && outcome->validated()) {
        state.resolve(c, std::get<validation::Validated>(outcome->result));
        return true;
      }
    }
    return false;
  };

  if (first_validated(tier([](const LinkCategory& cat) {
        return std::holds_alternative<category::IssuesLink>(cat);
      }))) {
    return result;
  }
  if (first_validated(tier([](const LinkCategory& cat) {
        return std::holds_alternative<category::GitHubPage>(cat) ||
               std::holds_alternative<category::UserProfile>(cat);
      }))) {
    return result;
  }

  for (const auto& entry : links) {
    const auto* external = std::get_if<category::ExternalSite>(&entry.category);
    if (external == nullptr) continue;

    if (is_github_host(external->host)) {
      auto candidate = noncanonical_github_candidate(entry, pkg.name);
      if (!candidate || state.tried(candidate->ref)) continue;
      state.mark_candidate();
      ReviewItem item;
      item.kind = ReviewKind::Unverifiable;
      item.reason = "GitHub link not in canonical https://github.com form: " + entry.link.url;
      item.links.emplace_back("link", entry.link.url);
      item.candidate = std::move(*candidate);
      item.id = review_item_id(item.kind, item.candidate.ref);
      state.add_review(std::move(item));
      continue;
    }

    result.evidence.push_back(field_step(entry.link));
    auto implicit = resolve_implicit(*entry.url, pkg.name, gateway);
    append(result.evidence, implicit.notes);
    if (first_validated(implicit.candidates)) return result;
    if (implicit.review) state.attempt_for_review(std::move(*implicit.review));
  }

  state.finish();
  return result;
}

ResolutionResult unprocessed_result(const PackageMetadata& pkg, const ResolverConfig& config,
                                    std::string_view error) {
  ResolutionResult result;
  result.package = pkg.name;
  classify_links(pkg, config, result.links);
  result.status = ResolutionStatus::Unprocessed;
  result.reason = std::string(error);
  return result;
}

ResolutionResult apply_review_decision(ResolutionResult result,
                                       const ReviewDecision& decision) {
  auto item = std::find_if(result.review_items.begin(), result.review_items.end(),
                           [&](const ReviewItem& i) { return i.id == decision.item_id; });
  if (item == result.review_items.end()) {
    throw UnknownReviewItem("package " + result.package + " has no review item \"" +
                            decision.item_id + "\"");
  }
  if (decision.verdict == Verdict::Pending) {
    throw ConflictingReviewDecision("a review decision must approve or reject");
  }
  if (item->verdict == decision.verdict) return result;
  if (item->verdict != Verdict::Pending) {
    throw ConflictingReviewDecision("review item " + item->id + " was already decided: " +
                                    std::string(to_string(item->verdict)));
  }
  if (result.status != ResolutionStatus::NeedsReview) {
    throw ConflictingReviewDecision("package " + result.package + " is already " +
                                    std::string(to_string(result.status)));
  }

  item->verdict = decision.verdict;
  item->note = decision.note;
  const std::string note = decision.note.empty() ? "" : " (" + decision.note + ")";

  if (decision.verdict == Verdict::Approve) {
    result.evidence.push_back({EvidenceKind::ReviewApproved,
                               "review " + item->id + " approved" + note,
                               item->candidate.ref.url()});
    result.status = ResolutionStatus::Resolved;
    result.repo = item->candidate.ref;
    result.method = item->candidate.source;
    result.renamed_from = item->renamed_from;
    result.reason.clear();
    return result;
  }

  result.evidence.push_back({EvidenceKind::ReviewRejected,
                             "review " + item->id + " rejected" + note,
                             item->candidate.ref.url()});
  const bool all_rejected =
      std::all_of(result.review_items.begin(), result.review_items.end(),
                  [](const ReviewItem& i) { return i.verdict == Verdict::Reject; });
  if (all_rejected) {
    result.status = ResolutionStatus::Discarded;
    result.reason = "reviewed_rejected";
  }
  return result;
}

}  // namespace linkres
