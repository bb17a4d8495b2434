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

#include "biqutrit/angles.hpp"

#include <cmath>

namespace biqutrit {

namespace {

// Reduces to [0, 360).
double reduce_360(double degrees) {
  double r = std::fmod(degrees, 360.0);
  if (r < 0.0) r += 360.0;
  return r;
}

}  // namespace

double sin_deg(double degrees) {
  const double r = reduce_360(degrees);
  if (r == 0.0 || r == 180.0) return 0.0;
  if (r == 90.0) return 1.0;
  if (r == 270.0) return -1.0;
  return std::sin(to_radians(r));
}

double cos_deg(double degrees) {
  const double r = reduce_360(degrees);
  if (r == 90.0 || r == 270.0) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 180.0) return -1.0;
  return std::cos(to_radians(r));
}

Complex unit_phase(double degrees) { return {cos_deg(degrees), sin_deg(degrees)}; }

double wrap_degrees(double degrees) {
  double r = std::fmod(degrees, 360.0);
  if (r > 180.0) r -= 360.0;
  if (r <= -180.0) r += 360.0;
  return r;
}

double arg_deg(Complex z) {
  if (z == Complex{0.0, 0.0}) return 0.0;
  return wrap_degrees(to_degrees(std::arg(z)));
}

}  // namespace biqutrit
