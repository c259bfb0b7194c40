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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <netdb.h>

#include "linkres/errors.hpp"
#include "linkres/transport.hpp"
#include "linkres/url.hpp"

namespace linkres {

namespace {

bool host_resolves(const std::string& host) {
  addrinfo* info = nullptr;
  const int rc = ::getaddrinfo(host.c_str(), nullptr, nullptr, &info);
  if (info != nullptr) ::freeaddrinfo(info);
  return rc == 0;
}

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string host;
  std::string target;  // path + query
};

SplitUrl split(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw FetchError(FetchError::Kind::Network, "not an absolute URL: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  SplitUrl out;
  out.origin = url.substr(0, path_start);
  out.target = path_start == std::string::npos ? "/" : url.substr(path_start);
  auto authority = out.origin.substr(scheme_end + 3);
  out.host = authority.substr(0, authority.find(':'));
  return out;
}

}  // namespace

HttpResponse HttpTransport::get(const std::string& url, const HeaderMap& headers) {
  const auto parts = split(url);
  httplib::Client client(parts.origin);
  client.set_follow_location(false);
  client.set_connection_timeout(options_.connect_timeout);
  client.set_read_timeout(options_.read_timeout);

  httplib::Headers request_headers;
  for (const auto& [name, value] : headers) request_headers.emplace(name, value);

  HttpResponse out;
  bool too_large = false;
  auto result = client.Get(
      parts.target, request_headers,
      [&](const httplib::Response& response) {
        out.status = response.status;
        for (const char* name : kKeptHeaders) {
          if (response.has_header(name)) {
            out.headers[name] = response.get_header_value(name);
          }
        }
        return true;
      },
      [&](const char* data, std::size_t length) {
        if (out.body.size() + length > options_.max_body_bytes) {
          too_large = true;
          return false;
        }
        out.body.append(data, length);
        return true;
      });

  if (too_large) {
    throw FetchError(FetchError::Kind::TooLarge, "response too large: " + url);
  }
  if (!result) {
    const auto err = result.error();
    switch (err) {
      case httplib::Error::ConnectionTimeout:
      case httplib::Error::Read:
      case httplib::Error::Write:
        throw FetchError(FetchError::Kind::Timeout,
                         httplib::to_string(err) + ": " + url);
      case httplib::Error::Connection:
        if (!host_resolves(parts.host)) {
          throw FetchError(FetchError::Kind::Dns, "cannot resolve " + parts.host);
        }
        [[fallthrough]];
      default:
        throw FetchError(FetchError::Kind::Network,
                         httplib::to_string(err) + ": " + url);
    }
  }
  return out;
}

}  // namespace linkres
