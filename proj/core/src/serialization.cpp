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

#include "biqutrit/serialization.hpp"

#include <cstdio>
#include <ostream>

namespace biqutrit {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex value must be [re, im]");
  }
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

void to_json(json& j, const PoincarePoint& p) { j = json{{"theta", p.theta}, {"phi", p.phi}}; }
void from_json(const json& j, PoincarePoint& p) {
  p.theta = j.at("theta").get<double>();
  p.phi = j.at("phi").get<double>();
}

void to_json(json& j, const GlobePoint& g) {
  j = json{{"latitude", g.latitude}, {"longitude", g.longitude}};
}
void from_json(const json& j, GlobePoint& g) {
  g.latitude = j.at("latitude").get<double>();
  g.longitude = j.at("longitude").get<double>();
}

void to_json(json& j, const StokesVector& s) { j = json{{"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}}; }
void from_json(const json& j, StokesVector& s) {
  s.s1 = j.at("s1").get<double>();
  s.s2 = j.at("s2").get<double>();
  s.s3 = j.at("s3").get<double>();
}

void to_json(json& j, const SourceSetting& s) {
  j = json{{"chi", s.chi}, {"delta_phi", s.delta_phi}};
}
void from_json(const json& j, SourceSetting& s) {
  s.chi = j.at("chi").get<double>();
  s.delta_phi = j.at("delta_phi").get<double>();
}

void to_json(json& j, const FilterSetting& f) {
  j = json{{"qwp_axis", f.qwp_axis}, {"polarizer_angle", f.polarizer_angle}};
}
void from_json(const json& j, FilterSetting& f) {
  f.qwp_axis = j.at("qwp_axis").get<double>();
  f.polarizer_angle = j.at("polarizer_angle").get<double>();
}

void to_json(json& j, const RateModel& m) {
  j = json{{"pair_rate", m.pair_rate},
           {"eta1", m.eta1},
           {"eta2", m.eta2},
           {"coincidence_window", m.coincidence_window},
           {"background1", m.background1},
           {"background2", m.background2}};
}

// Missing fields keep their defaults so configs may override a subset.
void from_json(const json& j, RateModel& m) {
  m.pair_rate = j.value("pair_rate", m.pair_rate);
  m.eta1 = j.value("eta1", m.eta1);
  m.eta2 = j.value("eta2", m.eta2);
  m.coincidence_window = j.value("coincidence_window", m.coincidence_window);
  m.background1 = j.value("background1", m.background1);
  m.background2 = j.value("background2", m.background2);
}

void to_json(json& j, const OrthogonalityReport& r) {
  j = json{{"amplitude", complex_to_json(r.amplitude)},
           {"magnitude", r.magnitude},
           {"orthogonal", r.orthogonal}};
}

void to_json(json& j, const SweepRow& r) {
  j = json{{"param", r.param}, {"R1", r.r1}, {"R2", r.r2}, {"Rc", r.rc}, {"g2", r.g2}};
}
void from_json(const json& j, SweepRow& r) {
  r.param = j.at("param").get<double>();
  r.r1 = j.at("R1").get<double>();
  r.r2 = j.at("R2").get<double>();
  r.rc = j.at("Rc").get<double>();
  r.g2 = j.at("g2").get<double>();
}

void to_json(json& j, const SweepResult& r) {
  j = json{{"parameter", r.parameter}, {"model", r.model}, {"rows", r.rows}};
}
void from_json(const json& j, SweepResult& r) {
  r.parameter = j.at("parameter").get<std::string>();
  r.model = j.at("model").get<RateModel>();
  r.rows = j.at("rows").get<std::vector<SweepRow>>();
}

void to_json(json& j, const CountRow& r) {
  j = json{{"param", r.param}, {"N1", r.n1}, {"N2", r.n2}, {"Nc", r.nc}, {"g2", r.g2}};
}

void to_json(json& j, const CountSweep& r) {
  j = json{{"parameter", r.parameter},
           {"model", r.model},
           {"duration", r.noise.duration},
           {"seed", r.noise.seed},
           {"drift", r.noise.drift},
           {"rows", r.rows}};
}

std::string format_fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8e", x);
  return buf;
}

void write_csv(std::ostream& os, const SweepResult& r) {
  os << "param,R1,R2,Rc,g2\n";
  for (const SweepRow& row : r.rows) {
    os << format_fixed9(row.param) << ',' << format_fixed9(row.r1) << ','
       << format_fixed9(row.r2) << ',' << format_fixed9(row.rc) << ','
       << format_fixed9(row.g2) << '\n';
  }
}

void write_csv(std::ostream& os, const CountSweep& r) {
  os << "param,N1,N2,Nc,g2\n";
  for (const CountRow& row : r.rows) {
    os << format_fixed9(row.param) << ',' << row.n1 << ',' << row.n2 << ',' << row.nc << ','
       << format_fixed9(row.g2) << '\n';
  }
}

}  // namespace biqutrit

namespace nlohmann {

void adl_serializer<biqutrit::JonesVector>::to_json(json& j, const biqutrit::JonesVector& v) {
  j = json{{"h", biqutrit::complex_to_json(v.h())}, {"v", biqutrit::complex_to_json(v.v())}};
}

biqutrit::JonesVector adl_serializer<biqutrit::JonesVector>::from_json(const json& j) {
  return {biqutrit::complex_from_json(j.at("h")), biqutrit::complex_from_json(j.at("v"))};
}

void adl_serializer<biqutrit::BiphotonQutrit>::to_json(json& j, const biqutrit::BiphotonQutrit& s) {
  j = json{{"c1", biqutrit::complex_to_json(s.c1())},
           {"c2", biqutrit::complex_to_json(s.c2())},
           {"c3", biqutrit::complex_to_json(s.c3())}};
}

biqutrit::BiphotonQutrit adl_serializer<biqutrit::BiphotonQutrit>::from_json(const json& j) {
  return {biqutrit::complex_from_json(j.at("c1")), biqutrit::complex_from_json(j.at("c2")),
          biqutrit::complex_from_json(j.at("c3"))};
}

}  // namespace nlohmann
