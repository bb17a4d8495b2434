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

#include "biqutrit/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace biqutrit {

void RateModel::validate() const {
  for (double x : {pair_rate, eta1, eta2, coincidence_window, background1, background2}) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("RateModel: fields must be finite and non-negative");
    }
  }
  if (!(coincidence_window > 0.0)) {
    throw std::invalid_argument("RateModel: coincidence window must be positive");
  }
}

BiphotonQutrit source_state(const SourceSetting& s) {
  return {sin_deg(2.0 * s.chi), 0.0, unit_phase(s.delta_phi) * cos_deg(2.0 * s.chi)};
}

JonesVector filter_jones(const FilterSetting& f) {
  return waveplate(90.0, f.qwp_axis).adjoint() * JonesVector::linear(f.polarizer_angle);
}

double coincidence_rate(const BiphotonQutrit& state, const FilterSetting& f1,
                        const FilterSetting& f2, const RateModel& m) {
  const JonesVector c = filter_jones(f1);
  const JonesVector d = filter_jones(f2);
  // pair_amplitude(c, d, a, b) / N_ab == N_cd <psi_cd|psi>, which avoids
  // factoring the state.
  const Complex amplitude = pair_norm(c, d) * qutrit_inner_product(qutrit_from_pair(c, d), state);
  const double given_split = 0.5 * std::norm(amplitude);
  return m.pair_rate * m.eta1 * m.eta2 * 0.5 * given_split;
}

double rate_closed_form(double chi, double zeta1, double zeta2) {
  const double bracket = cos_deg(zeta1) * cos_deg(zeta2) * sin_deg(2.0 * chi) -
                         sin_deg(zeta1) * sin_deg(zeta2) * cos_deg(2.0 * chi);
  return bracket * bracket;
}

double singles_rate(const BiphotonQutrit& state, const FilterSetting& f, const RateModel& m,
                    Detector detector) {
  // <n_f> = 1 + s_f . s_pair for a two-photon state; each photon reaches a
  // given output port with probability 1/2.
  const double photons = 1.0 + stokes_from_jones(filter_jones(f)).dot(stokes_expectation(state));
  const bool first = detector == Detector::kOne;
  const double eta = first ? m.eta1 : m.eta2;
  const double background = first ? m.background1 : m.background2;
  return m.pair_rate * eta * 0.5 * std::max(photons, 0.0) + background;
}

double g2(const BiphotonQutrit& state, const FilterSetting& f1, const FilterSetting& f2,
          const RateModel& m) {
  const double r1 = singles_rate(state, f1, m, Detector::kOne);
  const double r2 = singles_rate(state, f2, m, Detector::kTwo);
  if (r1 <= 0.0 || r2 <= 0.0) throw ZeroSinglesError();
  const double accidental = r1 * r2 * m.coincidence_window;
  return (coincidence_rate(state, f1, f2, m) + accidental) / accidental;
}

const SweepRow& SweepResult::min_g2_row() const {
  if (rows.empty()) throw std::logic_error("SweepResult: no rows");
  return *std::min_element(rows.begin(), rows.end(),
                           [](const SweepRow& a, const SweepRow& b) { return a.g2 < b.g2; });
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw std::invalid_argument("make_grid: need step > 0 and stop >= start");
  }
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

namespace {

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
  if (grid.size() < 2) return;
  const bool increasing = grid[1] > grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const bool ok = increasing ? grid[i] > grid[i - 1] : grid[i] < grid[i - 1];
    if (!ok) throw std::invalid_argument("sweep: grid must be strictly monotone");
  }
}

SweepRow evaluate(double param, const BiphotonQutrit& state, const FilterSetting& f1,
                  const FilterSetting& f2, const RateModel& m) {
  SweepRow row;
  row.param = param;
  row.r1 = singles_rate(state, f1, m, Detector::kOne);
  row.r2 = singles_rate(state, f2, m, Detector::kTwo);
  row.rc = coincidence_rate(state, f1, f2, m);
  row.g2 = g2(state, f1, f2, m);
  return row;
}

}  // namespace

SweepResult sweep_chi(const FilterSetting& f1, const FilterSetting& f2, double delta_phi,
                      const RateModel& m, std::span<const double> chi_grid) {
  m.validate();
  check_grid(chi_grid);
  SweepResult result{"chi", m, {}};
  result.rows.reserve(chi_grid.size());
  for (double chi : chi_grid) {
    result.rows.push_back(evaluate(chi, source_state({chi, delta_phi}), f1, f2, m));
  }
  return result;
}

SweepResult sweep_chi(double zeta1, double zeta2, double delta_phi, const RateModel& m,
                      std::span<const double> chi_grid) {
  return sweep_chi(FilterSetting::linear(zeta1), FilterSetting::linear(zeta2), delta_phi, m,
                   chi_grid);
}

SweepResult sweep_filter(double chi, double delta_phi, Polarizer which, double other_zeta,
                         const RateModel& m, std::span<const double> zeta_grid) {
  m.validate();
  check_grid(zeta_grid);
  const bool first = which == Polarizer::kP1;
  SweepResult result{first ? "zeta1" : "zeta2", m, {}};
  result.rows.reserve(zeta_grid.size());
  const BiphotonQutrit state = source_state({chi, delta_phi});
  const FilterSetting other = FilterSetting::linear(other_zeta);
  for (double zeta : zeta_grid) {
    const FilterSetting swept = FilterSetting::linear(zeta);
    result.rows.push_back(first ? evaluate(zeta, state, swept, other, m)
                                : evaluate(zeta, state, other, swept, m));
  }
  return result;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  return std::poisson_distribution<std::uint64_t>(mean)(rng);
}

}  // namespace

CountSweep simulate_counts(const SweepResult& result, const NoiseOptions& noise) {
  if (!(noise.duration > 0.0)) throw std::invalid_argument("simulate_counts: duration must be positive");
  if (!(noise.drift >= 0.0 && noise.drift < 1.0)) {
    throw std::invalid_argument("simulate_counts: drift must lie in [0, 1)");
  }
  CountSweep out{result.parameter, result.model, noise, {}};
  out.rows.reserve(result.rows.size());
  const std::size_t n = result.rows.size();
  const double window = result.model.coincidence_window;
  for (std::size_t i = 0; i < n; ++i) {
    const SweepRow& row = result.rows[i];
    const double scale =
        n > 1 ? 1.0 - noise.drift * static_cast<double>(i) / static_cast<double>(n - 1) : 1.0;
    std::seed_seq seq{static_cast<std::uint32_t>(noise.seed),
                      static_cast<std::uint32_t>(noise.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);

    const double r1 = scale * row.r1;
    const double r2 = scale * row.r2;
    const double rc = scale * row.rc + r1 * r2 * window;

    CountRow c;
    c.param = row.param;
    c.n1 = draw(rng, r1 * noise.duration);
    c.n2 = draw(rng, r2 * noise.duration);
    c.nc = draw(rng, rc * noise.duration);
    c.g2 = (c.n1 == 0 || c.n2 == 0)
               ? std::numeric_limits<double>::quiet_NaN()
               : static_cast<double>(c.nc) * noise.duration /
                     (static_cast<double>(c.n1) * static_cast<double>(c.n2) * window);
    out.rows.push_back(c);
  }
  return out;
}

}  // namespace biqutrit
