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

#include "linkres/records.hpp"

#include <map>

#include "linkres/errors.hpp"

namespace linkres {

namespace {

ordered_json repo_json(const RepoRef& ref) {
  return ordered_json{{"owner", ref.owner}, {"name", ref.repo}, {"url", ref.url()}};
}

ordered_json evidence_json(const std::vector<EvidenceStep>& steps) {
  auto out = ordered_json::array();
  for (const auto& s : steps) {
    ordered_json step{{"kind", to_string(s.kind)}, {"detail", s.detail}};
    if (s.url) step["url"] = *s.url;
    out.push_back(std::move(step));
  }
  return out;
}

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw MalformedResults(std::string("missing \"") + key + "\"");
  return *it;
}

std::string require_string(const nlohmann::json& doc, const char* key) {
  const auto& v = require(doc, key);
  if (!v.is_string()) throw MalformedResults(std::string("\"") + key + "\" is not a string");
  return v.get<std::string>();
}

RepoRef repo_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw MalformedResults("repository is not an object");
  return RepoRef{require_string(doc, "owner"), require_string(doc, "name")};
}

std::vector<EvidenceStep> evidence_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw MalformedResults("\"evidence\" is not an array");
  std::vector<EvidenceStep> out;
  for (const auto& s : doc) {
    const auto kind = parse_evidence_kind(require_string(s, "kind"));
    if (!kind) throw MalformedResults("unknown evidence kind " + s["kind"].dump());
    EvidenceStep step{*kind, require_string(s, "detail"), std::nullopt};
    if (s.contains("url")) step.url = require_string(s, "url");
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace

ordered_json to_json(const ReviewItem& item) {
  ordered_json out;
  out["item_id"] = item.id;
  out["kind"] = to_string(item.kind);
  out["reason"] = item.reason;
  out["verdict"] = to_string(item.verdict);
  if (!item.note.empty()) out["note"] = item.note;
  auto candidate = repo_json(item.candidate.ref);
  candidate["source"] = to_string(item.candidate.source);
  out["candidate"] = std::move(candidate);
  if (item.renamed_from) out["renamed_from"] = repo_json(*item.renamed_from);
  // sorted by label so a parsed item serializes the same way again
  std::map<std::string, std::string> sorted(item.links.begin(), item.links.end());
  auto links = ordered_json::object();
  for (const auto& [label, url] : sorted) links[label] = url;
  out["links"] = std::move(links);
  out["evidence"] = evidence_json(item.candidate.evidence);
  return out;
}

ReviewItem review_item_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw MalformedResults("review item is not an object");
  ReviewItem item;
  item.id = require_string(doc, "item_id");
  const auto kind = parse_review_kind(require_string(doc, "kind"));
  if (!kind) throw MalformedResults("unknown review kind in " + item.id);
  item.kind = *kind;
  item.reason = require_string(doc, "reason");
  const auto verdict = parse_verdict(require_string(doc, "verdict"));
  if (!verdict) throw MalformedResults("unknown verdict in " + item.id);
  item.verdict = *verdict;
  if (doc.contains("note")) item.note = require_string(doc, "note");
  const auto& candidate = require(doc, "candidate");
  item.candidate.ref = repo_from_json(candidate);
  const auto source = parse_candidate_source(require_string(candidate, "source"));
  if (!source) throw MalformedResults("unknown candidate source in " + item.id);
  item.candidate.source = *source;
  if (doc.contains("renamed_from")) item.renamed_from = repo_from_json(doc["renamed_from"]);
  if (doc.contains("links")) {
    for (const auto& [label, url] : doc["links"].items()) {
      if (!url.is_string()) throw MalformedResults("review link is not a string");
      item.links.emplace_back(label, url.get<std::string>());
    }
  }
  item.candidate.evidence = evidence_from_json(require(doc, "evidence"));
  return item;
}

ordered_json to_json(const ResolutionResult& r) {
  ordered_json out;
  out["package"] = r.package;
  auto links = ordered_json::array();
  for (const auto& l : r.links) {
    links.push_back(ordered_json{{"field", l.field}, {"url", l.url}, {"category", l.category}});
  }
  out["links"] = std::move(links);
  out["status"] = to_string(r.status);
  if (r.repo) out["repo"] = repo_json(*r.repo);
  if (r.method) out["method"] = to_string(*r.method);
  if (r.renamed_from) out["renamed_from"] = repo_json(*r.renamed_from);
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["evidence"] = evidence_json(r.evidence);
  if (!r.review_items.empty()) {
    auto items = ordered_json::array();
    for (const auto& item : r.review_items) items.push_back(to_json(item));
    out["review_items"] = std::move(items);
  }
  return out;
}

ResolutionResult result_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw MalformedResults("result line is not an object");
  ResolutionResult r;
  r.package = require_string(doc, "package");
  const auto status = parse_resolution_status(require_string(doc, "status"));
  if (!status) throw MalformedResults("unknown status for " + r.package);
  r.status = *status;
  const auto& links = require(doc, "links");
  if (!links.is_array()) throw MalformedResults("\"links\" is not an array");
  for (const auto& l : links) {
    r.links.push_back(LinkRecord{require_string(l, "field"), require_string(l, "url"),
                                 require_string(l, "category")});
  }
  if (doc.contains("repo")) r.repo = repo_from_json(doc["repo"]);
  if (doc.contains("method")) {
    r.method = parse_candidate_source(require_string(doc, "method"));
    if (!r.method) throw MalformedResults("unknown method for " + r.package);
  }
  if (doc.contains("renamed_from")) r.renamed_from = repo_from_json(doc["renamed_from"]);
  if (doc.contains("reason")) r.reason = require_string(doc, "reason");
  r.evidence = evidence_from_json(require(doc, "evidence"));
  if (doc.contains("review_items")) {
    const auto& items = doc["review_items"];
    if (!items.is_array()) throw MalformedResults("\"review_items\" is not an array");
    for (const auto& item : items) r.review_items.push_back(review_item_from_json(item));
  }
  return r;
}

ordered_json review_queue_entry(const std::string& package, const ReviewItem& item) {
  ordered_json out;
  out["package"] = package;
  const auto fields = to_json(item);
  for (const auto& [key, value] : fields.items()) out[key] = value;
  return out;
}

ReviewDecision decision_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("review decision is not an object");
  const auto get = [&](const char* key, bool required) -> std::string {
    const auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) {
      if (required) throw ConfigError(std::string("review decision lacks \"") + key + "\"");
      return {};
    }
    if (!it->is_string()) throw ConfigError(std::string("\"") + key + "\" is not a string");
    return it->get<std::string>();
  };
  ReviewDecision d;
  d.package = get("package", true);
  d.item_id = get("item_id", true);
  const auto verdict = parse_verdict(get("verdict", true));
  if (!verdict || *verdict == Verdict::Pending) {
    throw ConfigError("verdict must be \"approve\" or \"reject\"");
  }
  d.verdict = *verdict;
  d.note = get("note", false);
  return d;
}

std::string to_line(const ordered_json& doc) {
  return doc.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

}  // namespace linkres
