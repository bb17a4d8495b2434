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

#include "biqutrit/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace biqutrit {

JonesVector::JonesVector(Complex h, Complex v) {
  const double n = std::sqrt(std::norm(h) + std::norm(v));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("JonesVector: amplitudes are not normalizable");
  }
  // Already-canonical input is left bit-for-bit unchanged.
  if (std::abs(n - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) {
    h /= n;
    v /= n;
  }
  if (h != Complex{0.0, 0.0}) {
    if (h.imag() != 0.0 || h.real() < 0.0) {
      v *= std::conj(h) / std::abs(h);
      h = Complex{std::abs(h), 0.0};
    }
  } else {
    v = Complex{std::abs(v), 0.0};
  }
  h_ = h;
  v_ = v;
}

JonesVector JonesVector::linear(double angle) { return {cos_deg(angle), sin_deg(angle)}; }

PoincarePoint PoincarePoint::normalized() const {
  PoincarePoint p{std::clamp(theta, 0.0, 180.0), wrap_degrees(phi)};
  if (p.theta == 0.0 || p.theta == 180.0) p.phi = 0.0;
  return p;
}

double StokesVector::norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

double StokesVector::dot(const StokesVector& o) const { return s1 * o.s1 + s2 * o.s2 + s3 * o.s3; }

StokesVector StokesVector::cross(const StokesVector& o) const {
  return {s2 * o.s3 - s3 * o.s2, s3 * o.s1 - s1 * o.s3, s1 * o.s2 - s2 * o.s1};
}

StokesVector StokesVector::operator+(const StokesVector& o) const {
  return {s1 + o.s1, s2 + o.s2, s3 + o.s3};
}

JonesVector JonesMatrix::operator*(const JonesVector& j) const {
  return {m[0][0] * j.h() + m[0][1] * j.v(), m[1][0] * j.h() + m[1][1] * j.v()};
}

JonesMatrix JonesMatrix::operator*(const JonesMatrix& o) const {
  JonesMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) r.m[i][k] = m[i][0] * o.m[0][k] + m[i][1] * o.m[1][k];
  return r;
}

JonesMatrix JonesMatrix::adjoint() const {
  JonesMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) r.m[i][k] = std::conj(m[k][i]);
  return r;
}

JonesVector jones_from_poincare(const PoincarePoint& p) {
  const PoincarePoint n = p.normalized();
  return {cos_deg(n.theta / 2.0), unit_phase(n.phi) * sin_deg(n.theta / 2.0)};
}

PoincarePoint poincare_from_jones(const JonesVector& j) {
  const double theta = 2.0 * to_degrees(std::atan2(std::abs(j.v()), std::abs(j.h())));
  const double phi = (j.h() == Complex{0.0, 0.0}) ? 0.0 : arg_deg(j.v());
  return PoincarePoint{theta, phi}.normalized();
}

Complex overlap(const JonesVector& bra, const JonesVector& ket) {
  return std::conj(bra.h()) * ket.h() + std::conj(bra.v()) * ket.v();
}

StokesVector stokes_from_jones(const JonesVector& j) {
  const Complex hv = std::conj(j.h()) * j.v();
  return {std::norm(j.h()) - std::norm(j.v()), 2.0 * hv.real(), 2.0 * hv.imag()};
}

StokesVector stokes_from_poincare(const PoincarePoint& p) {
  const PoincarePoint n = p.normalized();
  const double st = sin_deg(n.theta);
  return {cos_deg(n.theta), st * cos_deg(n.phi), st * sin_deg(n.phi)};
}

JonesMatrix waveplate(double retardance, double axis_angle) {
  const double c = cos_deg(axis_angle);
  const double s = sin_deg(axis_angle);
  const Complex e = unit_phase(retardance);
  JonesMatrix w;
  w.m[0][0] = c * c + s * s * e;
  w.m[0][1] = c * s * (1.0 - e);
  w.m[1][0] = w.m[0][1];
  w.m[1][1] = s * s + c * c * e;
  return w;
}

PoincarePoint globe_to_poincare(const GlobePoint& g) {
  return PoincarePoint{90.0 - g.latitude, g.longitude}.normalized();
}

GlobePoint poincare_to_globe(const PoincarePoint& p) {
  const PoincarePoint n = p.normalized();
  return {90.0 - n.theta, n.phi};
}

double great_circle_angle(const PoincarePoint& a, const PoincarePoint& b) {
  const StokesVector sa = stokes_from_poincare(a);
  const StokesVector sb = stokes_from_poincare(b);
  return to_degrees(std::atan2(sa.cross(sb).norm(), sa.dot(sb)));
}

bool same_point(const PoincarePoint& a, const PoincarePoint& b, double tol_degrees) {
  return great_circle_angle(a, b) <= tol_degrees;
}

JonesVector orthogonal_state(const JonesVector& j) { return {-std::conj(j.v()), std::conj(j.h())}; }

namespace {

std::string format(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

std::string format_complex(Complex z) { return format("%.9f%+.9fi", z.real(), z.imag()); }

}  // namespace

std::string to_string(const JonesVector& j) {
  return "(" + format_complex(j.h()) + ", " + format_complex(j.v()) + ")";
}

std::string to_string(const PoincarePoint& p) {
  return format("(theta=%.6f, phi=%.6f)", p.theta, p.phi);
}

std::string to_string(const GlobePoint& g) {
  return format("(lat=%.6f, lon=%.6f)", g.latitude, g.longitude);
}

std::string to_string(const StokesVector& s) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.9f, %.9f, %.9f)", s.s1, s.s2, s.s3);
  return buf;
}

}  // namespace biqutrit
