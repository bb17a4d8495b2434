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

// JSON and CSV encodings. All angles are degree-valued fields; complex
// amplitudes are [re, im] arrays.

#ifndef BIQUTRIT_SERIALIZATION_HPP
#define BIQUTRIT_SERIALIZATION_HPP

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "biqutrit/biphoton.hpp"
#include "biqutrit/experiment.hpp"
#include "biqutrit/orthogonality.hpp"
#include "biqutrit/polarization.hpp"

namespace biqutrit {

void to_json(nlohmann::json& j, const PoincarePoint& p);
void from_json(const nlohmann::json& j, PoincarePoint& p);
void to_json(nlohmann::json& j, const GlobePoint& g);
void from_json(const nlohmann::json& j, GlobePoint& g);
void to_json(nlohmann::json& j, const StokesVector& s);
void from_json(const nlohmann::json& j, StokesVector& s);
void to_json(nlohmann::json& j, const SourceSetting& s);
void from_json(const nlohmann::json& j, SourceSetting& s);
void to_json(nlohmann::json& j, const FilterSetting& f);
void from_json(const nlohmann::json& j, FilterSetting& f);
void to_json(nlohmann::json& j, const RateModel& m);
void from_json(const nlohmann::json& j, RateModel& m);
void to_json(nlohmann::json& j, const OrthogonalityReport& r);
void to_json(nlohmann::json& j, const SweepRow& r);
void from_json(const nlohmann::json& j, SweepRow& r);
void to_json(nlohmann::json& j, const SweepResult& r);
void from_json(const nlohmann::json& j, SweepResult& r);
void to_json(nlohmann::json& j, const CountRow& r);
void to_json(nlohmann::json& j, const CountSweep& r);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// Rates and angles in CSV output: 9 significant digits, scientific.
std::string format_fixed9(double x);

/// Header "param,R1,R2,Rc,g2".
void write_csv(std::ostream& os, const SweepResult& r);
/// Header "param,N1,N2,Nc,g2"; counts as integers.
void write_csv(std::ostream& os, const CountSweep& r);

}  // namespace biqutrit

namespace nlohmann {

template <>
struct adl_serializer<biqutrit::JonesVector> {
  static void to_json(json& j, const biqutrit::JonesVector& v);
  static biqutrit::JonesVector from_json(const json& j);
};

template <>
struct adl_serializer<biqutrit::BiphotonQutrit> {
  static void to_json(json& j, const biqutrit::BiphotonQutrit& s);
  static biqutrit::BiphotonQutrit from_json(const json& j);
};

}  // namespace nlohmann

#endif  // BIQUTRIT_SERIALIZATION_HPP
