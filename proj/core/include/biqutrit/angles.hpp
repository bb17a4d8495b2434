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

#ifndef BIQUTRIT_ANGLES_HPP
#define BIQUTRIT_ANGLES_HPP

#include <complex>
#include <numbers>

namespace biqutrit {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDegree = kPi / 180.0;

inline constexpr double to_radians(double degrees) { return degrees * kDegree; }
inline constexpr double to_degrees(double radians) { return radians / kDegree; }

/// Sine of an angle in degrees. Exact (0, +-1) at integer multiples of 90 deg,
/// so that poles and basis states come out exactly.
double sin_deg(double degrees);
double cos_deg(double degrees);

/// e^{i*degrees}, exact at multiples of 90 deg.
Complex unit_phase(double degrees);

/// Wraps an angle into (-180, 180].
double wrap_degrees(double degrees);

/// Argument of a complex number in degrees, (-180, 180]. arg(0) is 0.
double arg_deg(Complex z);

}  // namespace biqutrit

#endif  // BIQUTRIT_ANGLES_HPP
