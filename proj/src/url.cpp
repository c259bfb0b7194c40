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

#include "linkres/url.hpp"

#include <algorithm>
#include <cctype>

#include "linkres/errors.hpp"
#include "linkres/metadata.hpp"

namespace linkres {

namespace {

bool istarts_with(std::string_view s, std::string_view prefix) noexcept {
  return s.size() >= prefix.size() && iequals(s.substr(0, prefix.size()), prefix);
}

bool is_space(char c) noexcept {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_host_char(char c) noexcept {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' ||
         c == '_';
}

bool all_digits(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

bool valid_host(std::string_view host) noexcept {
  if (host.empty() || host.find('.') == std::string_view::npos) return false;
  if (!std::all_of(host.begin(), host.end(), is_host_char)) return false;
  // no empty labels
  return host.front() != '.' && host.find("..") == std::string_view::npos;
}

}  // namespace

std::string_view to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::Http:
      return "http";
    case Scheme::Https:
      return "https";
    case Scheme::None:
      break;
  }
  return "none";
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool iequals(std::string_view a, std::string_view b) noexcept {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

bool iends_with(std::string_view s, std::string_view suffix) noexcept {
  return s.size() >= suffix.size() &&
         iequals(s.substr(s.size() - suffix.size()), suffix);
}

bool is_ipv4(std::string_view host) noexcept {
  int parts = 0;
  std::size_t start = 0;
  while (start <= host.size()) {
    const auto dot = host.find('.', start);
    const auto part = host.substr(start, dot == std::string_view::npos ? host.npos
                                                                       : dot - start);
    if (!all_digits(part) || part.size() > 3 || std::stoi(std::string(part)) > 255) {
      return false;
    }
    ++parts;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts == 4;
}

bool NormalizedUrl::same_location(const NormalizedUrl& other) const {
  return scheme == other.scheme && host == other.host && port == other.port &&
         path_segments == other.path_segments &&
         had_trailing_slash == other.had_trailing_slash;
}

NormalizedUrl normalize_url(std::string_view raw) {
  NormalizedUrl url;
  url.raw = std::string(raw);

  std::string_view s = trim(raw);
  if (s.empty()) throw MalformedUrl("empty link");
  if (std::any_of(s.begin(), s.end(), is_space)) {
    throw MalformedUrl("link contains whitespace: " + std::string(s));
  }

  if (const auto cut = s.find_first_of("?#"); cut != std::string_view::npos) {
    s = s.substr(0, cut);
  }

  if (istarts_with(s, "https://")) {
    url.scheme = Scheme::Https;
    s.remove_prefix(8);
  } else if (istarts_with(s, "http://")) {
    url.scheme = Scheme::Http;
    s.remove_prefix(7);
  } else {
    const auto sep = s.find("://");
    if (sep != std::string_view::npos && s.substr(0, sep).find('/') == s.npos) {
      throw MalformedUrl("unsupported scheme: " + std::string(s.substr(0, sep)));
    }
    // "mailto:x@y", "javascript:..." and friends; "host:8080" is a port
    if (const auto colon = s.find(':'); colon != std::string_view::npos) {
      const auto head = s.substr(0, colon);
      auto rest = s.substr(colon + 1);
      rest = rest.substr(0, rest.find('/'));
      const bool scheme_like =
          !head.empty() && std::isalpha(static_cast<unsigned char>(head.front())) &&
          std::all_of(head.begin(), head.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
          });
      if (scheme_like && !all_digits(rest)) {
        throw MalformedUrl("unsupported scheme: " + std::string(head));
      }
    }
    while (!s.empty() && s.front() == '/') s.remove_prefix(1);
  }

  const auto slash = s.find('/');
  std::string_view authority = s.substr(0, slash);
  const std::string_view path =
      slash == std::string_view::npos ? std::string_view{} : s.substr(slash);

  if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
    authority.remove_prefix(at + 1);
  }
  if (const auto colon = authority.find(':'); colon != std::string_view::npos) {
    const auto port = authority.substr(colon + 1);
    if (!port.empty()) {
      if (!all_digits(port)) {
        throw MalformedUrl("bad port in link: " + std::string(trim(raw)));
      }
      url.port = std::string(port);
    }
    authority = authority.substr(0, colon);
  }
  while (!authority.empty() && authority.back() == '.') authority.remove_suffix(1);

  url.host = to_lower(authority);
  if (!valid_host(url.host)) {
    throw MalformedUrl("no recognizable host in link: " + std::string(trim(raw)));
  }

  std::size_t pos = 0;
  while (pos < path.size()) {
    const auto next = path.find('/', pos);
    const auto seg = path.substr(pos, next == std::string_view::npos ? path.npos
                                                                     : next - pos);
    if (!seg.empty()) url.path_segments.emplace_back(seg);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  url.had_trailing_slash = !path.empty() && path.back() == '/';
  return url;
}

std::string render(const NormalizedUrl& url) {
  std::string out;
  if (url.scheme != Scheme::None) {
    out += to_string(url.scheme);
    out += "://";
  }
  out += url.host;
  if (!url.port.empty()) out += ":" + url.port;
  for (const auto& seg : url.path_segments) {
    out += '/';
    out += seg;
  }
  if (url.had_trailing_slash) out += '/';
  return out;
}

std::string request_url(const NormalizedUrl& url) {
  std::string out = url.scheme == Scheme::None ? "http" : std::string(to_string(url.scheme));
  out += "://";
  out += url.host;
  if (!url.port.empty()) out += ":" + url.port;
  for (const auto& seg : url.path_segments) {
    out += '/';
    out += seg;
  }
  if (url.path_segments.empty() || url.had_trailing_slash) out += '/';
  return out;
}

}  // namespace linkres
