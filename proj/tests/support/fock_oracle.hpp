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

// Brute-force bosonic Fock space used as an independent oracle. States are
// dense vectors over all occupation tuples with at most `cutoff` photons per
// mode; ladder operators are applied index by index. Nothing here shares code
// with the library's closed forms.

#ifndef BIQUTRIT_TESTS_FOCK_ORACLE_HPP
#define BIQUTRIT_TESTS_FOCK_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using State = std::vector<Complex>;

class FockSpace {
 public:
  FockSpace(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
    dim_ = 1;
    for (int k = 0; k < modes_; ++k) dim_ *= static_cast<std::size_t>(cutoff_ + 1);
  }

  std::size_t dim() const { return dim_; }

  State vacuum() const {
    State s(dim_, Complex{});
    s[0] = 1.0;
    return s;
  }

  int occupation(std::size_t index, int mode) const {
    for (int k = 0; k < mode; ++k) index /= static_cast<std::size_t>(cutoff_ + 1);
    return static_cast<int>(index % static_cast<std::size_t>(cutoff_ + 1));
  }

  std::size_t index_of(const std::vector<int>& occupations) const {
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (int k = 0; k < modes_; ++k) {
      idx += static_cast<std::size_t>(occupations[k]) * stride;
      stride *= static_cast<std::size_t>(cutoff_ + 1);
    }
    return idx;
  }

  // a_k^dag
  State create(int mode, const State& psi) const {
    State out(dim_, Complex{});
    const std::size_t stride = stride_of(mode);
    for (std::size_t i = 0; i < dim_; ++i) {
      const int n = occupation(i, mode);
      if (n < cutoff_) out[i + stride] += std::sqrt(static_cast<double>(n + 1)) * psi[i];
    }
    return out;
  }

  // a_k
  State annihilate(int mode, const State& psi) const {
    State out(dim_, Complex{});
    const std::size_t stride = stride_of(mode);
    for (std::size_t i = 0; i < dim_; ++i) {
      const int n = occupation(i, mode);
      if (n > 0) out[i - stride] += std::sqrt(static_cast<double>(n)) * psi[i];
    }
    return out;
  }

  // sum_k u_k a_k^dag: creates a photon in the mode with amplitudes u.
  State create(const std::vector<Complex>& u, const State& psi) const {
    State out(dim_, Complex{});
    for (int k = 0; k < modes_; ++k) axpy(u[k], create(k, psi), out);
    return out;
  }

  // sum_k conj(u_k) a_k: removes a photon from the mode with amplitudes u.
  State annihilate(const std::vector<Complex>& u, const State& psi) const {
    State out(dim_, Complex{});
    for (int k = 0; k < modes_; ++k) axpy(std::conj(u[k]), annihilate(k, psi), out);
    return out;
  }

  static Complex inner(const State& x, const State& y) {
    Complex acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
  }

  static double norm(const State& x) { return std::sqrt(inner(x, x).real()); }

  static State normalized(State x) {
    const double n = norm(x);
    for (auto& c : x) c /= n;
    return x;
  }

 private:
  std::size_t stride_of(int mode) const {
    std::size_t stride = 1;
    for (int k = 0; k < mode; ++k) stride *= static_cast<std::size_t>(cutoff_ + 1);
    return stride;
  }

  static void axpy(Complex a, const State& x, State& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  }

  int modes_;
  int cutoff_;
  std::size_t dim_;
};

// Two polarization modes (0 = H, 1 = V).
inline const FockSpace& polarization_space() {
  static const FockSpace space(2, 2);
  return space;
}

// Unnormalized a^dag b^dag |vac> for single-photon amplitudes a, b.
inline State pair_state(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const FockSpace& f = polarization_space();
  return f.create(a, f.create(b, f.vacuum()));
}

// Components on |2,0>, |1,1>, |0,2>.
inline std::vector<Complex> qutrit_components(const State& s) {
  const FockSpace& f = polarization_space();
  return {s[f.index_of({2, 0})], s[f.index_of({1, 1})], s[f.index_of({0, 2})]};
}

inline State embed_qutrit(Complex c1, Complex c2, Complex c3) {
  const FockSpace& f = polarization_space();
  State s(f.dim(), Complex{});
  s[f.index_of({2, 0})] = c1;
  s[f.index_of({1, 1})] = c2;
  s[f.index_of({0, 2})] = c3;
  return s;
}

// <psi| a_i^dag a_j |psi>.
inline Complex moment(const State& psi, int i, int j) {
  const FockSpace& f = polarization_space();
  return FockSpace::inner(psi, f.create(i, f.annihilate(j, psi)));
}

struct Stokes {
  double s0, s1, s2, s3;
};

// Stokes operator expectations from ladder products:
// S0 = nH + nV, S1 = nH - nV, S2 = aH^dag aV + h.c., S3 = -i(aH^dag aV - h.c.).
inline Stokes stokes(const State& psi) {
  const Complex hh = moment(psi, 0, 0);
  const Complex vv = moment(psi, 1, 1);
  const Complex hv = moment(psi, 0, 1);
  return {(hh + vv).real(), (hh - vv).real(), 2.0 * hv.real(), 2.0 * hv.imag()};
}

// Beamsplitter experiment in four modes: (port1 H, port1 V, port2 H, port2 V).
// Each input photon u goes to port 1 with amplitude 1/sqrt2 and to port 2 with
// i/sqrt2.
struct BeamsplitterOutcome {
  double coincidence;  // P(one photon through c at D1 and one through d at D2)
  double mean1;        // <n> behind c at D1
  double mean2;        // <n> behind d at D2
};

inline BeamsplitterOutcome beamsplitter(const std::vector<Complex>& a,
                                        const std::vector<Complex>& b,
                                        const std::vector<Complex>& c,
                                        const std::vector<Complex>& d) {
  static const FockSpace f(4, 2);
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  auto split = [&](const std::vector<Complex>& u) {
    return std::vector<Complex>{r * u[0], r * u[1], i * r * u[0], i * r * u[1]};
  };
  const State psi = FockSpace::normalized(f.create(split(a), f.create(split(b), f.vacuum())));
  const std::vector<Complex> c1{c[0], c[1], 0.0, 0.0};
  const std::vector<Complex> d2{0.0, 0.0, d[0], d[1]};
  const State both = f.annihilate(c1, f.annihilate(d2, psi));
  const State one = f.annihilate(c1, psi);
  const State two = f.annihilate(d2, psi);
  return {FockSpace::inner(both, both).real(), FockSpace::inner(one, one).real(),
          FockSpace::inner(two, two).real()};
}

}  // namespace oracle

#endif  // BIQUTRIT_TESTS_FOCK_ORACLE_HPP
