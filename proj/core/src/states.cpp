// Copyright 2026 The qss3 developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss3/states.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qss3 {

double PureState3::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : amp) s += std::norm(a);
  return s;
}

bool PureState3::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

PureState3 normalized(const PureState3& psi) {
  const double n = std::sqrt(psi.norm_sq());
  if (n < 1e-12) throw std::invalid_argument("cannot normalize zero state");
  PureState3 out = psi;
  for (Complex& a : out.amp) a /= n;
  return out;
}

double AcinParams::sum_sq() const {
  double s = 0.0;
  for (double l : lambda) s += l * l;
  return s;
}

PureState3 from_acin(const AcinParams& p) {
  for (double l : p.lambda) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw std::invalid_argument("acin coefficients must be nonnegative");
    }
  }
  if (!std::isfinite(p.phi) || p.phi < 0.0 ||
      p.phi >= 2.0 * std::numbers::pi) {
    throw std::invalid_argument("phase must lie in [0, 2pi)");
  }
  const double s = p.sum_sq();
  if (std::abs(s - 1.0) > kNormTol) {
    throw std::invalid_argument(
        "acin coefficients are not normalized: sum of squares = " +
        std::to_string(s));
  }
  PureState3 psi;
  psi.amp[0] = p.lambda[0];
  psi.amp[4] = p.lambda[1] * Complex(std::cos(p.phi), std::sin(p.phi));
  psi.amp[5] = p.lambda[2];
  psi.amp[6] = p.lambda[3];
  psi.amp[7] = p.lambda[4];
  return psi;
}

PureState3 from_msr(const MsrParams& p) {
  if (!(p.theta >= 0.0 && p.theta <= std::numbers::pi / 2.0)) {
    throw std::invalid_argument("msr angle must lie in [0, pi/2]");
  }
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  AcinParams a;
  a.lambda = {std::cos(p.theta) * inv_sqrt2, std::sin(p.theta) * inv_sqrt2,
              0.0, 0.0, inv_sqrt2};
  a.phi = 0.0;
  // sin/cos round-off can leave the norm a hair off 1; square it away.
  double s = a.sum_sq();
  for (double& l : a.lambda) l /= std::sqrt(s);
  return from_acin(a);
}

ComplexMatrix density(const PureState3& psi) {
  if (!psi.is_normalized()) {
    throw std::invalid_argument("state is not normalized");
  }
  ComplexMatrix rho(8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) rho(r, c) = psi.amp[r] * std::conj(psi.amp[c]);
  return rho;
}

ComplexMatrix reduced_pair(const PureState3& psi, ChannelRole channel) {
  std::vector<int> keep;
  switch (channel) {
    case ChannelRole::DealerAssistant:
      keep = {0, 1};
      break;
    case ChannelRole::DealerReconstructor:
      keep = {0, 2};
      break;
    case ChannelRole::AssistantReconstructor:
      keep = {1, 2};
      break;
  }
  return partial_trace(density(psi), keep, {2, 2, 2});
}

std::uint64_t SplitMix64::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 rng(base ^ (0xA0761D6478BD642Full + index * 0xE7037ED1A0B428DBull));
  return rng.next_u64();
}

AcinParams sample_acin(std::uint64_t seed, bool include_phase) {
  SplitMix64 rng(seed);
  std::array<double, 4> u{};
  for (double& v : u) v = rng.next_double();
  std::sort(u.begin(), u.end());

  AcinParams p;
  double prev = 0.0;
  for (int i = 0; i < 4; ++i) {
    p.lambda[i] = std::sqrt(u[i] - prev);
    prev = u[i];
  }
  p.lambda[4] = std::sqrt(1.0 - prev);
  p.phi = include_phase ? rng.next_double() * 2.0 * std::numbers::pi : 0.0;
  return p;
}

namespace {

// Next content line: blank lines and '#' comments skipped.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

LoadedState parse_state(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw std::invalid_argument("state file is empty");
  }
  std::istringstream tag_stream(line);
  std::string tag;
  tag_stream >> tag;

  if (tag == "acin") {
    if (!next_content_line(in, line)) {
      throw std::invalid_argument("acin state file: missing coefficient line");
    }
    std::istringstream vs(line);
    AcinParams p;
    for (double& l : p.lambda) {
      if (!(vs >> l)) {
        throw std::invalid_argument(
            "acin state file: expected six decimals on one line");
      }
    }
    if (!(vs >> p.phi)) {
      throw std::invalid_argument(
          "acin state file: expected six decimals on one line");
    }
    return {from_acin(p), p};
  }
  if (tag == "amplitudes") {
    PureState3 psi;
    for (int i = 0; i < 8; ++i) {
      if (!next_content_line(in, line)) {
        throw std::invalid_argument(
            "amplitudes state file: expected eight `re im` lines");
      }
      std::istringstream vs(line);
      double re = 0.0, im = 0.0;
      if (!(vs >> re >> im)) {
        throw std::invalid_argument(
            "amplitudes state file: malformed line: " + line);
      }
      psi.amp[i] = Complex(re, im);
    }
    if (!psi.is_normalized()) {
      throw std::invalid_argument("amplitudes are not normalized: |psi|^2 = " +
                                  std::to_string(psi.norm_sq()));
    }
    return {psi, std::nullopt};
  }
  throw std::invalid_argument("unknown state file tag: " + tag);
}

LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  return parse_state(in);
}

}  // namespace qss3
