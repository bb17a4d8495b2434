/**
 * Copyright 2026 The biqutrit Authors
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
 */

// Versioned lookup tables: named single-photon states and city coordinates
// for globe-form input.

#ifndef BIQUTRIT_CATALOG_HPP
#define BIQUTRIT_CATALOG_HPP

#include <optional>
#include <span>
#include <string_view>

#include "biqutrit/polarization.hpp"

namespace biqutrit {

inline constexpr int kCatalogVersion = 1;

struct NamedCity {
  std::string_view name;
  GlobePoint location;
};

/// Cities usable by name. Lookup is case-insensitive.
std::span<const NamedCity> city_table();
std::optional<GlobePoint> find_city(std::string_view name);

/// H, V, D (+45), Dbar (-45), R (s3 = +1), L (s3 = -1). Case-insensitive;
/// "A" and "anti-diagonal" are accepted for Dbar.
std::optional<JonesVector> named_state(std::string_view name);

}  // namespace biqutrit

#endif  // BIQUTRIT_CATALOG_HPP
