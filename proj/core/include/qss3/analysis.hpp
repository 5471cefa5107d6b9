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

#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qss3/bell.hpp"
#include "qss3/fidelity.hpp"
#include "qss3/states.hpp"

namespace qss3 {

inline constexpr double kClassTol = 1e-9;     // classification boundary slack
inline constexpr double kViolTol = 1e-6;      // theorem violation threshold
inline constexpr double kMsrSlackTol = 1e-6;  // |thm1 slack| window for MSR

struct AnalysisFlags {
  bool secret_shareable = false;
  bool msr_boundary = false;
  bool tie_ab_ac = false;
};

/// Everything derived from one state. Slacks are absent when the theorem
/// premises do not hold.
struct AnalysisRecord {
  std::optional<AcinParams> params;
  FidelitySummary fidelity;
  BellSummary bell;
  AnalysisFlags flags;
  std::optional<double> thm1_slack;
  std::optional<double> thm2_slack;
};

AnalysisRecord analyze(const PureState3& psi,
                       std::optional<AcinParams> params = std::nullopt);

/// Slack of theta3 <= 1 + 2 theta2 when the premises (theta2 <= 1,
/// theta3 > 1) hold; nullopt otherwise.
std::optional<double> check_theorem1(const AnalysisRecord& rec);

/// Slack of theta3 <= 2 sqrt(M_max) + 1 when the premises (f_max <= 2/3,
/// f_csr >= 2/3) hold; nullopt otherwise.
std::optional<double> check_theorem2(const AnalysisRecord& rec);

/// False only for a secret-shareable record with a CHSH violation.
bool check_mutual_exclusivity(const AnalysisRecord& rec);

struct TheoremViolation {
  std::uint64_t index = 0;
  std::string theorem;
  double slack = 0.0;
  AnalysisRecord record;
};

struct TheoremReport {
  std::size_t samples = 0;
  std::size_t thm1_hits = 0;
  std::size_t thm2_hits = 0;
  std::size_t shareable_hits = 0;
  double thm1_min_slack = std::numeric_limits<double>::infinity();
  double thm2_min_slack = std::numeric_limits<double>::infinity();
  // min over secret-shareable records of (2 - s_max)
  double excl_min_slack = std::numeric_limits<double>::infinity();
  std::vector<TheoremViolation> violations;

  bool clean() const { return violations.empty(); }
};

struct SweepConfig {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool include_phase = false;
  int workers = 1;
  double violation_tol = kViolTol;
};

using RecordSink = std::function<void(std::uint64_t, const AnalysisRecord&)>;

/// Seeded sweep over sampled states. Record i is derived from
/// derive_stream_seed(seed, i), so the output is independent of the worker
/// count; the sink is called in index order.
TheoremReport sweep(const SweepConfig& cfg, const RecordSink& sink = nullptr);

// CSV schema shared by the sweep command and the structured analyze output.
std::string csv_header();
std::string csv_row(std::uint64_t idx, const AnalysisRecord& rec);
/// %.12g
std::string format_g12(double v);

enum class FigureKind { RfVsTf, RfVsBell };

struct FigurePoint {
  double x = 0.0;
  double y = 0.0;
  bool secret_shareable = false;
  bool msr_boundary = false;
  bool is_ghz = false;
};

struct BoundaryPoint {
  double x = 0.0;
  double y = 0.0;
};

struct FigureDataset {
  FigureKind kind = FigureKind::RfVsTf;
  std::vector<FigurePoint> scatter;  // last row is the GHZ marker
  std::vector<BoundaryPoint> boundary;
};

/// Analytic bound: y = 2x - 1/3 on [1/2, 2/3] for RfVsTf,
/// y = (x + 4)/6 on [0, 2] for RfVsBell.
std::vector<BoundaryPoint> boundary_curve(FigureKind kind, int points = 200);

/// Scatter over a phased sweep plus the boundary curve and a GHZ marker row.
FigureDataset figure_data(FigureKind kind, std::size_t n, std::uint64_t seed,
                          int workers = 1);

}  // namespace qss3
