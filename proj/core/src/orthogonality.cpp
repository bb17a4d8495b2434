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

#include "biqutrit/orthogonality.hpp"

#include <cmath>

namespace biqutrit {

OrthogonalityReport is_orthogonal(const BiphotonQutrit& x, const BiphotonQutrit& y, double tol) {
  OrthogonalityReport r;
  r.amplitude = qutrit_inner_product(x, y);
  r.magnitude = std::abs(r.amplitude);
  r.orthogonal = r.magnitude < tol;
  return r;
}

JonesVector orthogonal_partner(const JonesVector& a, const JonesVector& b, const JonesVector& c) {
  const Complex ca = overlap(c, a);
  const Complex cb = overlap(c, b);
  const Complex wh = ca * b.h() + cb * a.h();
  const Complex wv = ca * b.v() + cb * a.v();
  if (std::sqrt(std::norm(wh) + std::norm(wv)) < kAnyPartnerThreshold) {
    throw AnyPartnerError();
  }
  return {-std::conj(wv), std::conj(wh)};
}

PoincarePoint orthogonal_partner(const PoincarePoint& a, const PoincarePoint& b,
                                 const PoincarePoint& c) {
  return poincare_from_jones(
      orthogonal_partner(jones_from_poincare(a), jones_from_poincare(b), jones_from_poincare(c)));
}

}  // namespace biqutrit
