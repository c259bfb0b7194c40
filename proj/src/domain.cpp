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

#include "linkres/domain.hpp"

#include <array>
#include <vector>

#include "linkres/errors.hpp"
#include "linkres/url.hpp"

namespace linkres {

namespace {

// Multi-label suffixes under which people register names. Not the full
// public suffix list; anything missing falls back to the last label.
constexpr std::string_view kMultiLabelSuffixes[] = {
    "co.uk",   "org.uk",  "ac.uk",   "gov.uk",  "me.uk",    "ltd.uk",
    "plc.uk",  "net.uk",  "com.au",  "net.au",  "org.au",   "edu.au",
    "gov.au",  "id.au",   "co.nz",   "org.nz",  "net.nz",   "co.jp",
    "ne.jp",   "or.jp",   "ac.jp",   "go.jp",   "com.br",   "net.br",
    "org.br",  "co.in",   "net.in",  "org.in",  "com.cn",   "net.cn",
    "org.cn",  "com.mx",  "co.za",   "com.ar",  "com.tr",   "co.kr",
    "or.kr",   "com.tw",  "com.hk",  "com.sg",  "com.my",   "co.id",
    "co.il",   "com.ua",  "co.at",   "or.at",   "com.pl",   "com.es",
    "com.pt",  "com.ru",  "com.co",  "com.vn",  "co.th",    "github.io",
    "gitlab.io", "herokuapp.com", "blogspot.com", "netlify.app", "pages.dev",
    "appspot.com", "readthedocs.io", "vercel.app",
};

std::vector<std::string_view> split_labels(std::string_view host) {
  std::vector<std::string_view> labels;
  std::size_t start = 0;
  while (true) {
    const auto dot = host.find('.', start);
    labels.push_back(host.substr(start, dot == host.npos ? host.npos : dot - start));
    if (dot == host.npos) break;
    start = dot + 1;
  }
  return labels;
}

std::string canonical_host(std::string_view host) {
  auto out = to_lower(host);
  while (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

}  // namespace

std::string public_suffix(std::string_view host) {
  const auto h = canonical_host(host);
  const auto labels = split_labels(h);
  if (labels.size() >= 2) {
    const auto tail = h.substr(h.size() - labels[labels.size() - 2].size() -
                               labels.back().size() - 1);
    for (auto suffix : kMultiLabelSuffixes) {
      if (tail == suffix) return std::string(suffix);
    }
  }
  return std::string(labels.back());
}

std::optional<std::string> registrable_domain(std::string_view host) {
  const auto h = canonical_host(host);
  if (h.empty() || is_ipv4(h)) return std::nullopt;
  const auto suffix = public_suffix(h);
  if (h.size() <= suffix.size()) return std::nullopt;
  // h ends with "." + suffix
  const std::string_view rest(h.data(), h.size() - suffix.size() - 1);
  if (rest.empty()) return std::nullopt;
  const auto dot = rest.rfind('.');
  const auto label = dot == std::string_view::npos ? rest : rest.substr(dot + 1);
  if (label.empty()) return std::nullopt;
  return std::string(label) + "." + suffix;
}

std::string infer_account_name(std::string_view host) {
  const auto domain = registrable_domain(host);
  if (!domain) {
    throw UninferableHost("cannot infer an account name from host " +
                          std::string(host));
  }
  return domain->substr(0, domain->find('.'));
}

}  // namespace linkres
