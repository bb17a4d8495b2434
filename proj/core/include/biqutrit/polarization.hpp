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

// Single-photon polarization calculus: Jones vectors, Stokes vectors,
// Poincare-sphere and globe coordinates, waveplates.
//
// Angle conventions (all public angles are in degrees):
//  * A Poincare point (theta, phi) maps to the Jones vector
//    (cos(theta/2), e^{i phi} sin(theta/2)) over the (H, V) modes.
//  * theta is the axial angle measured from the H pole; theta = 180 is V.
//  * phi = 0 points are linear polarizations at theta/2 to the horizontal,
//    phi = 180 points are linear at -theta/2, phi = +-90 points are
//    elliptical with H/V axes.
//  * The Cartesian image of (theta, phi) is the Stokes vector
//    (cos theta, sin theta cos phi, sin theta sin phi).
//  * Globe coordinates: latitude = 90 - theta, longitude = phi. The north
//    pole is H.
// Under this convention the points (74.5, 0) and (74.5, 180) are photons
// polarized linearly at +37.25 and -37.25 deg.

#ifndef BIQUTRIT_POLARIZATION_HPP
#define BIQUTRIT_POLARIZATION_HPP

#include <array>
#include <string>

#include "biqutrit/angles.hpp"

namespace biqutrit {

/// Normalized polarization amplitude of one photon over the (H, V) modes.
///
/// Always normalized and in canonical phase: h is real and non-negative,
/// and when h == 0, v is real and positive. Two JonesVectors describing the
/// same physical state therefore compare equal component-wise.
class JonesVector {
 public:
  /// Normalizes and rephases (h, v). Throws std::invalid_argument when the
  /// pair has zero or non-finite norm.
  JonesVector(Complex h, Complex v);

  static JonesVector horizontal() { return {1.0, 0.0}; }
  static JonesVector vertical() { return {0.0, 1.0}; }
  /// Linear polarization at `angle` degrees to the horizontal.
  static JonesVector linear(double angle);

  Complex h() const { return h_; }
  Complex v() const { return v_; }

  friend bool operator==(const JonesVector&, const JonesVector&) = default;

 private:
  Complex h_;
  Complex v_;
};

/// Point on the Poincare sphere. theta in [0, 180], phi in (-180, 180].
struct PoincarePoint {
  double theta = 0.0;
  double phi = 0.0;

  /// Clamps theta, wraps phi, and zeroes phi at the poles.
  PoincarePoint normalized() const;
};

/// Angular distance test that ignores phi at the poles.
bool same_point(const PoincarePoint& a, const PoincarePoint& b, double tol_degrees);

/// Per-photon normalized Stokes vector (s1, s2, s3).
struct StokesVector {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  double norm() const;
  double dot(const StokesVector& other) const;
  StokesVector cross(const StokesVector& other) const;
  StokesVector operator+(const StokesVector& other) const;
};

/// Geographic coordinates used as an alternative to (theta, phi).
struct GlobePoint {
  double latitude = 0.0;   // [-90, 90]
  double longitude = 0.0;  // (-180, 180]
};

/// 2x2 complex matrix acting on Jones vectors.
struct JonesMatrix {
  std::array<std::array<Complex, 2>, 2> m{};

  /// Applies the matrix and renormalizes into canonical phase.
  JonesVector operator*(const JonesVector& j) const;
  JonesMatrix operator*(const JonesMatrix& other) const;
  JonesMatrix adjoint() const;
};

JonesVector jones_from_poincare(const PoincarePoint& p);
PoincarePoint poincare_from_jones(const JonesVector& j);

/// <bra|ket> = conj(bra.h) ket.h + conj(bra.v) ket.v.
Complex overlap(const JonesVector& bra, const JonesVector& ket);

StokesVector stokes_from_jones(const JonesVector& j);
StokesVector stokes_from_poincare(const PoincarePoint& p);

/// Retarder with retardance `retardance` and fast axis at `axis_angle` to the
/// horizontal: R(axis) diag(1, e^{i retardance}) R(-axis). 180 is a half-wave
/// plate, 90 a quarter-wave plate.
JonesMatrix waveplate(double retardance, double axis_angle);

PoincarePoint globe_to_poincare(const GlobePoint& g);
GlobePoint poincare_to_globe(const PoincarePoint& p);

/// Great-circle angle between two points, degrees in [0, 180].
double great_circle_angle(const PoincarePoint& a, const PoincarePoint& b);

/// Single-photon state orthogonal to `j` (the antipode on the sphere).
JonesVector orthogonal_state(const JonesVector& j);

std::string to_string(const JonesVector& j);
std::string to_string(const PoincarePoint& p);
std::string to_string(const GlobePoint& g);
std::string to_string(const StokesVector& s);

}  // namespace biqutrit

#endif  // BIQUTRIT_POLARIZATION_HPP
