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

#include "biqutrit/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

namespace biqutrit {

namespace {

// Degrees; east and north positive.
constexpr std::array<NamedCity, 4> kCities{{
    {"moscow", {55.75, 37.62}},
    {"turin", {45.07, 7.69}},
    {"baltimore", {39.29, -76.61}},
    {"bounty", {-47.75, 179.05}},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::span<const NamedCity> city_table() { return kCities; }

std::optional<GlobePoint> find_city(std::string_view name) {
  for (const auto& city : kCities) {
    if (iequals(city.name, name)) return city.location;
  }
  if (iequals(name, "bounty-islands") || iequals(name, "bounty_islands")) {
    return kCities[3].location;
  }
  return std::nullopt;
}

std::optional<JonesVector> named_state(std::string_view name) {
  const double r = std::sqrt(0.5);
  if (iequals(name, "H")) return JonesVector::horizontal();
  if (iequals(name, "V")) return JonesVector::vertical();
  if (iequals(name, "D")) return JonesVector::linear(45.0);
  if (iequals(name, "Dbar") || iequals(name, "A") || iequals(name, "anti-diagonal")) {
    return JonesVector::linear(-45.0);
  }
  if (iequals(name, "R")) return JonesVector{r, Complex{0.0, r}};
  if (iequals(name, "L")) return JonesVector{r, Complex{0.0, -r}};
  return std::nullopt;
}

}  // namespace biqutrit
