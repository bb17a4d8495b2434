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

// Operational orthogonality of biphoton states and the orthogonal-partner
// construction: given three polarization modes a, b, c, find d such that
// <vac| c d a^dag b^dag |vac> = 0.

#ifndef BIQUTRIT_ORTHOGONALITY_HPP
#define BIQUTRIT_ORTHOGONALITY_HPP

#include <stdexcept>

#include "biqutrit/biphoton.hpp"

namespace biqutrit {

inline constexpr double kDefaultOrthogonalityTolerance = 1e-9;

/// Below this norm of the constraint vector every d is a partner.
inline constexpr double kAnyPartnerThreshold = 1e-12;

struct OrthogonalityReport {
  Complex amplitude;
  double magnitude = 0.0;
  bool orthogonal = false;
};

/// Raised by orthogonal_partner when c is orthogonal to both a and b, so the
/// constraint is satisfied by every polarization d.
class AnyPartnerError : public std::runtime_error {
 public:
  AnyPartnerError() : std::runtime_error("every polarization is an orthogonal partner") {}
};

OrthogonalityReport is_orthogonal(const BiphotonQutrit& x, const BiphotonQutrit& y,
                                  double tol = kDefaultOrthogonalityTolerance);

/// The unique d with pair_amplitude(c, d, a, b) = 0.
///
/// pair_amplitude(c, d, a, b) = <d|w> with w = <c|a> b + <c|b> a, so d is the
/// state orthogonal to w. Throws AnyPartnerError when |w| < kAnyPartnerThreshold.
/// Symmetric in a and b.
JonesVector orthogonal_partner(const JonesVector& a, const JonesVector& b, const JonesVector& c);
PoincarePoint orthogonal_partner(const PoincarePoint& a, const PoincarePoint& b,
                                 const PoincarePoint& c);

}  // namespace biqutrit

#endif  // BIQUTRIT_ORTHOGONALITY_HPP
