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

#include <sstream>

#include "biqutrit/serialization.hpp"
#include "support/generators.hpp"

using namespace biqutrit;
using nlohmann::json;

TEST_CASE("qutrit JSON layout") {
  const BiphotonQutrit s{std::sqrt(0.75), 0.0, -0.5};
  const json j = s;
  CHECK(j.at("c1").size() == 2);
  CHECK(j.at("c3")[0].get<double>() == doctest::Approx(-0.5));
  CHECK(j.at("c2") == json::array({0.0, 0.0}));
  CHECK_THROWS(json::parse(R"({"c1":[0,0],"c2":[0,0],"c3":[0,0]})").get<BiphotonQutrit>());
  CHECK_THROWS(json::parse(R"({"c1":[1,0,0],"c2":[0,0],"c3":[0,0]})").get<BiphotonQutrit>());
}

TEST_CASE("value types survive a JSON round trip") {
  gen::Random rnd(51);
  for (int i = 0; i < 200; ++i) {
    const BiphotonQutrit q = rnd.qutrit();
    REQUIRE(json(q).get<BiphotonQutrit>() == q);
    const JonesVector v = rnd.jones();
    REQUIRE(json(v).get<JonesVector>() == v);
    const PoincarePoint p = rnd.point();
    const auto p2 = json(p).get<PoincarePoint>();
    REQUIRE((p2.theta == p.theta && p2.phi == p.phi));
    const GlobePoint g = rnd.globe();
    const auto g2 = json(g).get<GlobePoint>();
    REQUIRE((g2.latitude == g.latitude && g2.longitude == g.longitude));
  }
  const FilterSetting f{12.5, -33.0};
  const auto f2 = json(f).get<FilterSetting>();
  CHECK(f2.qwp_axis == 12.5);
  CHECK(f2.polarizer_angle == -33.0);

  const json partial = json::parse(R"({"pair_rate": 5.0})");
  const RateModel m = partial.get<RateModel>();
  CHECK(m.pair_rate == 5.0);
  CHECK(m.coincidence_window == 5.5e-9);
}

TEST_CASE("sweep CSV is byte-exact") {
  SweepResult r{"chi", RateModel{}, {{30.0, 500.0, 250.0, 0.0, 1.0}, {30.5, 1.0 / 3.0, 2e-7, 12345.678901234, 1.5}}};
  std::ostringstream os;
  write_csv(os, r);
  CHECK(os.str() ==
        "param,R1,R2,Rc,g2\n"
        "3.00000000e+01,5.00000000e+02,2.50000000e+02,0.00000000e+00,1.00000000e+00\n"
        "3.05000000e+01,3.33333333e-01,2.00000000e-07,1.23456789e+04,1.50000000e+00\n");

  const json j = r;
  const SweepResult back = j.get<SweepResult>();
  CHECK(back.rows.size() == 2);
  CHECK(back.rows[1].rc == r.rows[1].rc);
  CHECK(back.model.coincidence_window == r.model.coincidence_window);
  CHECK(j.at("rows")[0].contains("Rc"));
}

TEST_CASE("count CSV") {
  CountSweep c{"zeta1", RateModel{}, NoiseOptions{}, {{45.0, 10, 20, 3, 2.5}}};
  std::ostringstream os;
  write_csv(os, c);
  CHECK(os.str() == "param,N1,N2,Nc,g2\n4.50000000e+01,10,20,3,2.50000000e+00\n");
  const json j = c;
  CHECK(j.at("rows")[0].at("Nc") == 3);
}
