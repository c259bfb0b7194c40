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

namespace linkres {

/// Longest known public suffix of `host` ("co.uk", "github.io", "com").
/// Any single last label counts as a suffix; a short built-in table covers
/// the common multi-label ones.
std::string public_suffix(std::string_view host);

/// Public suffix plus one label ("www.example.co.uk" -> "example.co.uk").
/// Empty for IP addresses and for hosts that are a bare suffix.
std::optional<std::string> registrable_domain(std::string_view host);

/// Leftmost label of the registrable domain, the guess for an account name
/// ("www.futureworkshops.com" -> "futureworkshops"). Throws UninferableHost.
std::string infer_account_name(std::string_view host);

}  // namespace linkres
