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

// Model of the two-crystal anticorrelation experiment: a biphoton source with
// a pump half-wave plate (chi) and quartz-plate phase (delta_phi), a lossless
// 50/50 beamsplitter, and a QWP + polarizer filter in front of each detector.

#ifndef BIQUTRIT_EXPERIMENT_HPP
#define BIQUTRIT_EXPERIMENT_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "biqutrit/biphoton.hpp"

namespace biqutrit {

struct SourceSetting {
  double chi = 0.0;        // pump half-wave plate angle, degrees
  double delta_phi = 0.0;  // phase between |0,2> and |2,0>, degrees
};

/// Quarter-wave plate followed by a polarizer.
struct FilterSetting {
  double qwp_axis = 0.0;
  double polarizer_angle = 0.0;

  /// QWP aligned with the polarizer: a plain linear filter at `zeta`.
  static FilterSetting linear(double zeta) { return {zeta, zeta}; }
};

/// Absolute scale of the rates. Only coincidence_window has a measured value;
/// the rest are defaults chosen to give a realistic g2 contrast.
struct RateModel {
  double pair_rate = 1.0e4;             // pairs/s reaching the beamsplitter
  double eta1 = 0.1;                    // detector efficiencies
  double eta2 = 0.1;
  double coincidence_window = 5.5e-9;   // seconds
  double background1 = 0.0;             // counts/s
  double background2 = 0.0;

  /// Throws std::invalid_argument unless every field is non-negative and finite
  /// and the window is positive.
  void validate() const;
};

enum class Detector { kOne, kTwo };

/// Raised by g2 when a singles rate vanishes.
class ZeroSinglesError : public std::runtime_error {
 public:
  ZeroSinglesError() : std::runtime_error("g2 undefined: a singles rate is zero") {}
};

/// (sin 2chi, 0, e^{i delta_phi} cos 2chi) in canonical phase.
BiphotonQutrit source_state(const SourceSetting& s);

/// Input polarization transmitted by the QWP-then-polarizer filter.
JonesVector filter_jones(const FilterSetting& f);

/// True (signal) coincidence rate, counts/s. The pair splits with probability
/// 1/2; given a split, D1 behind f1 and D2 behind f2 both fire with
/// probability |<vac| c d a^dag b^dag |vac>|^2 / (2 N_ab^2).
double coincidence_rate(const BiphotonQutrit& state, const FilterSetting& f1,
                        const FilterSetting& f2, const RateModel& m);

/// [cos z1 cos z2 sin 2chi - sin z1 sin z2 cos 2chi]^2, the coincidence shape
/// for delta_phi = 180 with linear filters.
double rate_closed_form(double chi, double zeta1, double zeta2);

/// Mean photon flux reaching `detector` through `f` plus background, counts/s.
double singles_rate(const BiphotonQutrit& state, const FilterSetting& f, const RateModel& m,
                    Detector detector);

/// Normalized second-order correlation (Rc + R1 R2 Tc) / (R1 R2 Tc).
/// Throws ZeroSinglesError if R1 or R2 is zero.
double g2(const BiphotonQutrit& state, const FilterSetting& f1, const FilterSetting& f2,
          const RateModel& m);

struct SweepRow {
  double param = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double rc = 0.0;
  double g2 = 0.0;
};

struct SweepResult {
  std::string parameter;  // "chi", "zeta1" or "zeta2"
  RateModel model;
  std::vector<SweepRow> rows;

  /// First row with the smallest g2. Throws std::logic_error when empty.
  const SweepRow& min_g2_row() const;
};

/// start, start + step, ... up to stop inclusive (within step * 1e-9).
/// Throws std::invalid_argument for step <= 0 or stop < start.
std::vector<double> make_grid(double start, double stop, double step);

/// Sweeps the pump half-wave plate with both filters fixed.
SweepResult sweep_chi(const FilterSetting& f1, const FilterSetting& f2, double delta_phi,
                      const RateModel& m, std::span<const double> chi_grid);
SweepResult sweep_chi(double zeta1, double zeta2, double delta_phi, const RateModel& m,
                      std::span<const double> chi_grid);

enum class Polarizer { kP1, kP2 };

/// Sweeps the angle of one linear filter; the other stays at `other_zeta`.
SweepResult sweep_filter(double chi, double delta_phi, Polarizer which, double other_zeta,
                         const RateModel& m, std::span<const double> zeta_grid);

struct NoiseOptions {
  double duration = 1.0;  // seconds per point
  std::uint64_t seed = 0;
  /// Fractional pump-power loss reached at the last row, in [0, 1). Row i of n
  /// is scaled by 1 - drift * i / (n - 1).
  double drift = 0.0;
};

struct CountRow {
  double param = 0.0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t nc = 0;  // total coincidences, accidentals included
  double g2 = 0.0;       // nc * T / (n1 * n2 * Tc); NaN when n1 * n2 == 0
};

struct CountSweep {
  std::string parameter;
  RateModel model;
  NoiseOptions noise;
  std::vector<CountRow> rows;
};

/// Poisson counts for each row with mean rate * duration. Every row draws
/// from its own generator derived from (seed, row index), so the output does
/// not depend on evaluation order.
CountSweep simulate_counts(const SweepResult& result, const NoiseOptions& noise);

}  // namespace biqutrit

#endif  // BIQUTRIT_EXPERIMENT_HPP
