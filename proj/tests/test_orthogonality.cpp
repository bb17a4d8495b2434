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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "biqutrit/catalog.hpp"
#include "biqutrit/experiment.hpp"
#include "biqutrit/orthogonality.hpp"
#include "support/generators.hpp"

using namespace biqutrit;

namespace {

// Linear polarization angle of a state on the s3 = 0 great circle.
double linear_angle(const JonesVector& j) {
  const StokesVector s = stokes_from_jones(j);
  return 0.5 * to_degrees(std::atan2(s.s2, s.s1));
}

struct GridMinimum {
  PoincarePoint point;
  double value;
};

// Dense search over the globe for the d minimizing |pair_amplitude(c, d, a, b)|.
GridMinimum grid_partner(const JonesVector& a, const JonesVector& b, const JonesVector& c,
                         double step) {
  GridMinimum best{{}, INFINITY};
  for (double lat = -90.0; lat <= 90.0 + 1e-9; lat += step) {
    for (double lon = -180.0 + step; lon <= 180.0 + 1e-9; lon += step) {
      const PoincarePoint p = globe_to_poincare({lat, lon});
      const double v = std::abs(pair_amplitude(c, jones_from_poincare(p), a, b));
      if (v < best.value) best = {p, v};
    }
  }
  return best;
}

JonesVector named(const char* name) { return *named_state(name); }

}  // namespace

TEST_CASE("is_orthogonal on the zero-polarization basis") {
  const auto hv = qutrit_from_pair(named("H"), named("V"));
  const auto ddbar = qutrit_from_pair(named("D"), named("Dbar"));
  const auto rl = qutrit_from_pair(named("R"), named("L"));
  CHECK(is_orthogonal(hv, ddbar).orthogonal);
  CHECK(is_orthogonal(hv, rl).orthogonal);
  CHECK(is_orthogonal(ddbar, rl).orthogonal);

  const OrthogonalityReport self = is_orthogonal(hv, hv);
  CHECK_FALSE(self.orthogonal);
  CHECK(self.magnitude == doctest::Approx(1.0));

  // Tolerance is a strict bound on the magnitude.
  const BiphotonQutrit near_hv{1e-6, 1.0, 0.0};
  CHECK_FALSE(is_orthogonal(near_hv, BiphotonQutrit{1.0, 0.0, 0.0}).orthogonal);
  CHECK(is_orthogonal(near_hv, BiphotonQutrit{1.0, 0.0, 0.0}, 1e-5).orthogonal);
}

TEST_CASE("no photon of one basis biphoton is orthogonal to a photon of another") {
  const std::vector<std::pair<JonesVector, JonesVector>> basis{
      {named("H"), named("V")}, {named("D"), named("Dbar")}, {named("R"), named("L")}};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = i + 1; k < basis.size(); ++k) {
      for (const auto& x : {basis[i].first, basis[i].second}) {
        for (const auto& y : {basis[k].first, basis[k].second}) {
          CHECK(std::abs(overlap(x, y)) > 0.05);
        }
      }
    }
  }
}

TEST_CASE("orthogonal_partner reproduces the basis and the measured configurations") {
  const JonesVector dbar = orthogonal_partner(named("H"), named("V"), named("D"));
  CHECK(std::abs(std::abs(overlap(dbar, named("Dbar"))) - 1.0) < 1e-14);

  SUBCASE("linear halves at +-37.25 deg") {
    const JonesVector a = JonesVector::linear(37.25);
    const JonesVector b = JonesVector::linear(-37.25);
    const JonesVector d = orthogonal_partner(a, b, JonesVector::linear(45.0));
    CHECK(std::abs(stokes_from_jones(d).s3) < 1e-12);
    CHECK(std::abs(linear_angle(d) - 60.0) < 0.1);
    for (const auto& x : {a, b}) {
      for (const auto& y : {JonesVector::linear(45.0), d}) CHECK(std::abs(overlap(x, y)) > 0.05);
    }
  }

  SUBCASE("elliptical halves on the phi = +-90 meridian") {
    const auto halves = factor_jones(source_state({60.0, 180.0}));
    for (const auto& h : halves) CHECK(std::abs(stokes_from_jones(h).s2) < 1e-12);
    const JonesVector d = orthogonal_partner(halves[0], halves[1], JonesVector::linear(45.0));
    CHECK(std::abs(stokes_from_jones(d).s3) < 1e-12);
    CHECK(std::abs(linear_angle(d) + 60.0) < 0.1);
    for (const auto& x : halves) {
      for (const auto& y : {JonesVector::linear(45.0), d}) CHECK(std::abs(overlap(x, y)) > 0.05);
    }
  }
}

TEST_CASE("orthogonal_partner degenerate input") {
  CHECK_THROWS_AS(orthogonal_partner(named("H"), named("H"), named("V")), AnyPartnerError);
  CHECK_THROWS_AS(orthogonal_partner(named("R"), named("R"), named("L")), AnyPartnerError);
  CHECK_NOTHROW(orthogonal_partner(named("H"), named("V"), named("V")));
}

TEST_CASE("orthogonal_partner properties over random inputs") {
  gen::Random rnd(31);
  for (int i = 0; i < 1000; ++i) {
    const PoincarePoint a = rnd.point(), b = rnd.point(), c = rnd.point();
    const PoincarePoint d = orthogonal_partner(a, b, c);
    const double residual = std::abs(pair_amplitude(jones_from_poincare(c), jones_from_poincare(d),
                                                    jones_from_poincare(a), jones_from_poincare(b)));
    REQUIRE(residual < 1e-12);
    const PoincarePoint swapped = orthogonal_partner(b, a, c);
    REQUIRE(swapped.theta == d.theta);
    REQUIRE(swapped.phi == d.phi);
    REQUIRE(is_orthogonal(qutrit_from_pair(a, b), qutrit_from_pair(c, d)).orthogonal);
  }
}

TEST_CASE("the zero set of the pair amplitude is a single basin") {
  gen::Random rnd(32);
  for (int i = 0; i < 5; ++i) {
    const JonesVector a = rnd.jones(), b = rnd.jones(), c = rnd.jones();
    const JonesVector d = orthogonal_partner(a, b, c);
    const PoincarePoint dp = poincare_from_jones(d);
    // |amplitude(d')| = |w| sin(gamma/2) with gamma the sphere angle between d'
    // and d, so every grid point below 10% of the maximum lies within 11.5 deg.
    double scale = 0.0;
    const GridMinimum best = grid_partner(a, b, c, 2.0);
    for (double lat = -90.0; lat <= 90.0; lat += 2.0) {
      for (double lon = -178.0; lon <= 180.0; lon += 2.0) {
        const PoincarePoint p = globe_to_poincare({lat, lon});
        scale = std::max(scale, std::abs(pair_amplitude(c, jones_from_poincare(p), a, b)));
      }
    }
    for (double lat = -90.0; lat <= 90.0; lat += 2.0) {
      for (double lon = -178.0; lon <= 180.0; lon += 2.0) {
        const PoincarePoint p = globe_to_poincare({lat, lon});
        const double v = std::abs(pair_amplitude(c, jones_from_poincare(p), a, b));
        if (v < 0.1 * scale) REQUIRE(great_circle_angle(p, dp) < 15.0);
      }
    }
    CHECK(great_circle_angle(best.point, dp) < 2.0);
  }
}

TEST_CASE("globe construction lands near the Bounty Islands") {
  const JonesVector a = jones_from_poincare(globe_to_poincare(*find_city("Moscow")));
  const JonesVector b = jones_from_poincare(globe_to_poincare(*find_city("Turin")));
  const JonesVector c = jones_from_poincare(globe_to_poincare(*find_city("Baltimore")));
  const JonesVector d = orthogonal_partner(a, b, c);
  const GlobePoint g = poincare_to_globe(poincare_from_jones(d));

  CHECK(std::abs(pair_amplitude(c, d, a, b)) < 1e-12);
  CHECK(g.latitude < -40.0);
  CHECK(180.0 - std::abs(g.longitude) < 40.0);

  const GridMinimum best = grid_partner(a, b, c, 0.5);
  CHECK(great_circle_angle(best.point, poincare_from_jones(d)) < 0.5);
}
