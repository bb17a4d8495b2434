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

// Polarization qutrit of a single-mode biphoton over the basis
// {|2,0>, |1,1>, |0,2>} (photons in H, photons in V).

#ifndef BIQUTRIT_BIPHOTON_HPP
#define BIQUTRIT_BIPHOTON_HPP

#include <array>
#include <string>

#include "biqutrit/polarization.hpp"

namespace biqutrit {

/// Normalized pure polarization state of a biphoton.
///
/// Canonical phase: the first nonzero amplitude is real and non-negative.
class BiphotonQutrit {
 public:
  /// Normalizes and rephases. Throws std::invalid_argument when the
  /// amplitudes have zero or non-finite norm.
  BiphotonQutrit(Complex c1, Complex c2, Complex c3);

  Complex c1() const { return c_[0]; }
  Complex c2() const { return c_[1]; }
  Complex c3() const { return c_[2]; }
  const std::array<Complex, 3>& amplitudes() const { return c_; }

  double d1() const;
  double d3() const;
  /// arg(c1) - arg(c2) in degrees; meaningless when c2 == 0.
  double phi1() const;
  /// arg(c3) - arg(c2) in degrees; meaningless when c2 == 0.
  double phi3() const;

  friend bool operator==(const BiphotonQutrit&, const BiphotonQutrit&) = default;

 private:
  std::array<Complex, 3> c_;
};

/// The two single-photon states ("halves") a biphoton factors into.
/// Ordered lexicographically on (theta, phi).
struct PairDecomposition {
  PoincarePoint p;
  PoincarePoint q;
};

/// Normalized state a^dag(a) a^dag(b)|vac>.
BiphotonQutrit qutrit_from_pair(const JonesVector& a, const JonesVector& b);
BiphotonQutrit qutrit_from_pair(const PoincarePoint& p, const PoincarePoint& q);

/// Norm of the unnormalized pair state, sqrt(1 + |<a|b>|^2).
double pair_norm(const JonesVector& a, const JonesVector& b);

/// Factors a qutrit into two Jones vectors by solving the homogeneous
/// quadratic c1 beta^2 - sqrt(2) c2 alpha beta + c3 alpha^2 = 0. Roots at
/// infinity (V photons) and double roots are handled without perturbation.
std::array<JonesVector, 2> factor_jones(const BiphotonQutrit& s);
PairDecomposition factor_qutrit(const BiphotonQutrit& s);

/// <vac| c d a^dag b^dag |vac>: the permanent of the 2x2 overlap matrix.
Complex pair_amplitude(const JonesVector& c, const JonesVector& d, const JonesVector& a,
                       const JonesVector& b);

Complex qutrit_inner_product(const BiphotonQutrit& x, const BiphotonQutrit& y);

/// Expectation of the Stokes operators divided by <S0> = 2, so a pair of
/// identical photons has unit length.
StokesVector stokes_expectation(const BiphotonQutrit& s);

/// Length of the per-photon Stokes vector, in [0, 1].
double polarization_degree(const BiphotonQutrit& s);

/// Angle (degrees) subtended at the sphere center by the two halves.
double subtense_angle(const BiphotonQutrit& s);

std::string to_string(const BiphotonQutrit& s);

}  // namespace biqutrit

#endif  // BIQUTRIT_BIPHOTON_HPP
