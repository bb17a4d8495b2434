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

#include "biqutrit/biphoton.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace biqutrit {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr Complex kZero{0.0, 0.0};
constexpr double kUnitTolerance = 4.0 * std::numeric_limits<double>::epsilon();

}  // namespace

BiphotonQutrit::BiphotonQutrit(Complex c1, Complex c2, Complex c3) : c_{c1, c2, c3} {
  const double n = std::sqrt(std::norm(c1) + std::norm(c2) + std::norm(c3));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("BiphotonQutrit: amplitudes are not normalizable");
  }
  // Already-canonical input is left bit-for-bit unchanged.
  if (std::abs(n - 1.0) > kUnitTolerance) {
    for (Complex& c : c_) c /= n;
  }
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == kZero) continue;
    if (c_[k].imag() != 0.0 || c_[k].real() < 0.0) {
      const Complex phase = std::conj(c_[k]) / std::abs(c_[k]);
      for (Complex& c : c_) c *= phase;
      c_[k] = Complex{c_[k].real(), 0.0};
    }
    break;
  }
}

double BiphotonQutrit::d1() const { return std::abs(c_[0]); }
double BiphotonQutrit::d3() const { return std::abs(c_[2]); }
double BiphotonQutrit::phi1() const { return wrap_degrees(arg_deg(c_[0]) - arg_deg(c_[1])); }
double BiphotonQutrit::phi3() const { return wrap_degrees(arg_deg(c_[2]) - arg_deg(c_[1])); }

BiphotonQutrit qutrit_from_pair(const JonesVector& a, const JonesVector& b) {
  // a_H^dag^2 |vac> = sqrt(2)|2,0>, likewise for V.
  return {kSqrt2 * (a.h() * b.h()), a.h() * b.v() + a.v() * b.h(), kSqrt2 * (a.v() * b.v())};
}

BiphotonQutrit qutrit_from_pair(const PoincarePoint& p, const PoincarePoint& q) {
  return qutrit_from_pair(jones_from_poincare(p), jones_from_poincare(q));
}

double pair_norm(const JonesVector& a, const JonesVector& b) {
  return std::sqrt(1.0 + std::norm(overlap(a, b)));
}

std::array<JonesVector, 2> factor_jones(const BiphotonQutrit& s) {
  // Written as A x^2 + B x y + C y^2 = 0 in the better-conditioned
  // orientation: x = beta, y = alpha when |c1| >= |c3|, swapped otherwise.
  const bool beta_major = std::abs(s.c1()) >= std::abs(s.c3());
  const Complex a = beta_major ? s.c1() : s.c3();
  const Complex b = -kSqrt2 * s.c2();
  const Complex c = beta_major ? s.c3() : s.c1();

  const Complex sqrt_disc = std::sqrt(b * b - 4.0 * a * c);
  const double sign = (std::conj(b) * sqrt_disc).real() >= 0.0 ? 1.0 : -1.0;
  const Complex q = -0.5 * (b + sign * sqrt_disc);

  // Roots x/y = q/a and c/q as homogeneous pairs (y, x) = (a, q), (q, c).
  // q == 0 only for b == c == 0, a double root at x = 0.
  Complex y1 = a, x1 = q, y2 = q, x2 = c;
  if (q == kZero) {
    y2 = a;
    x2 = kZero;
  }
  if (beta_major) {
    return {JonesVector{y1, x1}, JonesVector{y2, x2}};
  }
  return {JonesVector{x1, y1}, JonesVector{x2, y2}};
}

PairDecomposition factor_qutrit(const BiphotonQutrit& s) {
  const auto halves = factor_jones(s);
  PoincarePoint p = poincare_from_jones(halves[0]);
  PoincarePoint q = poincare_from_jones(halves[1]);
  if (std::tie(q.theta, q.phi) < std::tie(p.theta, p.phi)) std::swap(p, q);
  return {p, q};
}

Complex pair_amplitude(const JonesVector& c, const JonesVector& d, const JonesVector& a,
                       const JonesVector& b) {
  return overlap(c, a) * overlap(d, b) + overlap(c, b) * overlap(d, a);
}

Complex qutrit_inner_product(const BiphotonQutrit& x, const BiphotonQutrit& y) {
  return std::conj(x.c1()) * y.c1() + std::conj(x.c2()) * y.c2() + std::conj(x.c3()) * y.c3();
}

StokesVector stokes_expectation(const BiphotonQutrit& s) {
  // In the {|2,0>, |1,1>, |0,2>} basis, a_H^dag a_V has the entries
  // <2,0|.|1,1> = <1,1|.|0,2> = sqrt(2), giving
  //   S1 = diag(2, 0, -2), S2 = A + A^dag, S3 = -i (A - A^dag).
  const Complex z = std::conj(s.c1()) * s.c2() + std::conj(s.c2()) * s.c3();
  return {std::norm(s.c1()) - std::norm(s.c3()), kSqrt2 * z.real(), kSqrt2 * z.imag()};
}

double polarization_degree(const BiphotonQutrit& s) { return stokes_expectation(s).norm(); }

double subtense_angle(const BiphotonQutrit& s) {
  const auto halves = factor_jones(s);
  return great_circle_angle(poincare_from_jones(halves[0]), poincare_from_jones(halves[1]));
}

std::string to_string(const BiphotonQutrit& s) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "(%.9f%+.9fi, %.9f%+.9fi, %.9f%+.9fi)", s.c1().real(),
                s.c1().imag(), s.c2().real(), s.c2().imag(), s.c3().real(), s.c3().imag());
  return buf;
}

}  // namespace biqutrit
