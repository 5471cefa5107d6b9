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

#include "qss3/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

namespace qss3 {

namespace {

constexpr double kTwoThirds = 2.0 / 3.0;

}  // namespace

AnalysisRecord analyze(const PureState3& psi,
                       std::optional<AcinParams> params) {
  if (!psi.is_normalized()) {
    throw std::invalid_argument("analyze: state is not normalized");
  }
  const BlochDecomp3 d = bloch3(density(psi));

  AnalysisRecord rec;
  rec.params = std::move(params);
  rec.fidelity = fidelity_summary(d);
  rec.bell = bell_summary(d);

  rec.flags.secret_shareable = rec.fidelity.f_ab <= kTwoThirds + kClassTol &&
                               rec.fidelity.f_ac <= kTwoThirds + kClassTol &&
                               rec.fidelity.f_csr > kTwoThirds + kClassTol;
  rec.flags.tie_ab_ac = rec.fidelity.tie_ab_ac;
  rec.thm1_slack = check_theorem1(rec);
  rec.thm2_slack = check_theorem2(rec);
  rec.flags.msr_boundary = rec.flags.secret_shareable &&
                           rec.thm1_slack.has_value() &&
                           std::abs(*rec.thm1_slack) <= kMsrSlackTol;
  return rec;
}

std::optional<double> check_theorem1(const AnalysisRecord& rec) {
  const double theta2_max =
      std::max(rec.fidelity.theta2_ab, rec.fidelity.theta2_ac);
  if (theta2_max > 1.0 + kClassTol) return std::nullopt;
  if (!(rec.fidelity.theta3 > 1.0 + kClassTol)) return std::nullopt;
  return 1.0 + 2.0 * theta2_max - rec.fidelity.theta3;
}

std::optional<double> check_theorem2(const AnalysisRecord& rec) {
  if (rec.fidelity.f_max > kTwoThirds + kClassTol) return std::nullopt;
  if (rec.fidelity.f_csr < kTwoThirds - kClassTol) return std::nullopt;
  const double m_max = std::max(rec.bell.m_ab, rec.bell.m_ac);
  return 2.0 * std::sqrt(std::max(0.0, m_max)) + 1.0 - rec.fidelity.theta3;
}

bool check_mutual_exclusivity(const AnalysisRecord& rec) {
  return !(rec.flags.secret_shareable &&
           rec.bell.s_max > 2.0 + kClassTol);
}

TheoremReport sweep(const SweepConfig& cfg, const RecordSink& sink) {
  if (cfg.n < 1) throw std::invalid_argument("sweep: n must be >= 1");
  const int workers = std::max(1, cfg.workers);

  TheoremReport report;
  report.samples = cfg.n;

  constexpr std::size_t kBlock = 1024;
  std::vector<AnalysisRecord> block(std::min(kBlock, cfg.n));

  auto compute_one = [&](std::uint64_t idx, AnalysisRecord& out) {
    const AcinParams p =
        sample_acin(derive_stream_seed(cfg.seed, idx), cfg.include_phase);
    out = analyze(from_acin(p), p);
  };

  for (std::size_t base = 0; base < cfg.n; base += kBlock) {
    const std::size_t count = std::min(kBlock, cfg.n - base);
    if (workers == 1 || count < 2) {
      for (std::size_t i = 0; i < count; ++i) compute_one(base + i, block[i]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
          for (std::size_t i = w; i < count; i += workers) {
            compute_one(base + i, block[i]);
          }
        });
      }
      for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t idx = base + i;
      const AnalysisRecord& rec = block[i];
      if (rec.thm1_slack) {
        ++report.thm1_hits;
        report.thm1_min_slack = std::min(report.thm1_min_slack, *rec.thm1_slack);
        if (*rec.thm1_slack < -cfg.violation_tol) {
          report.violations.push_back({idx, "theorem1", *rec.thm1_slack, rec});
        }
      }
      if (rec.thm2_slack) {
        ++report.thm2_hits;
        report.thm2_min_slack = std::min(report.thm2_min_slack, *rec.thm2_slack);
        if (*rec.thm2_slack < -cfg.violation_tol) {
          report.violations.push_back({idx, "theorem2", *rec.thm2_slack, rec});
        }
      }
      if (rec.flags.secret_shareable) {
        ++report.shareable_hits;
        const double slack = 2.0 - rec.bell.s_max;
        report.excl_min_slack = std::min(report.excl_min_slack, slack);
        if (rec.bell.s_max > 2.0 + cfg.violation_tol) {
          report.violations.push_back({idx, "mutual_exclusivity", slack, rec});
        }
      }
      if (sink) sink(idx, rec);
    }
  }
  return report;
}

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_header() {
  return "idx,l0,l1,l2,l3,l4,phi,theta2_ab,theta2_ac,f_ab,f_ac,f_max,theta3,"
         "f_csr,m_ab,m_ac,s_max,secret_shareable,msr_boundary,thm1_slack,"
         "thm2_slack";
}

std::string csv_row(std::uint64_t idx, const AnalysisRecord& rec) {
  std::string row = std::to_string(idx);
  auto push = [&row](const std::string& field) {
    row += ',';
    row += field;
  };
  if (rec.params) {
    for (double l : rec.params->lambda) push(format_g12(l));
    push(format_g12(rec.params->phi));
  } else {
    for (int i = 0; i < 6; ++i) push("");
  }
  push(format_g12(rec.fidelity.theta2_ab));
  push(format_g12(rec.fidelity.theta2_ac));
  push(format_g12(rec.fidelity.f_ab));
  push(format_g12(rec.fidelity.f_ac));
  push(format_g12(rec.fidelity.f_max));
  push(format_g12(rec.fidelity.theta3));
  push(format_g12(rec.fidelity.f_csr));
  push(format_g12(rec.bell.m_ab));
  push(format_g12(rec.bell.m_ac));
  push(format_g12(rec.bell.s_max));
  push(rec.flags.secret_shareable ? "1" : "0");
  push(rec.flags.msr_boundary ? "1" : "0");
  push(rec.thm1_slack ? format_g12(*rec.thm1_slack) : "");
  push(rec.thm2_slack ? format_g12(*rec.thm2_slack) : "");
  return row;
}

std::vector<BoundaryPoint> boundary_curve(FigureKind kind, int points) {
  if (points < 2) throw std::invalid_argument("boundary_curve: points >= 2");
  const double lo = kind == FigureKind::RfVsTf ? 0.5 : 0.0;
  const double hi = kind == FigureKind::RfVsTf ? kTwoThirds : 2.0;
  std::vector<BoundaryPoint> out;
  out.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    const double y =
        kind == FigureKind::RfVsTf ? 2.0 * x - 1.0 / 3.0 : (x + 4.0) / 6.0;
    out.push_back({x, y});
  }
  return out;
}

FigureDataset figure_data(FigureKind kind, std::size_t n, std::uint64_t seed,
                          int workers) {
  FigureDataset data;
  data.kind = kind;
  data.scatter.reserve(n + 1);

  SweepConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.include_phase = true;
  cfg.workers = workers;
  sweep(cfg, [&](std::uint64_t, const AnalysisRecord& rec) {
    const double x =
        kind == FigureKind::RfVsTf ? rec.fidelity.f_max : rec.bell.s_max;
    data.scatter.push_back({x, rec.fidelity.f_csr, rec.flags.secret_shareable,
                            rec.flags.msr_boundary, false});
  });

  AcinParams ghz;
  ghz.lambda = {1.0 / std::numbers::sqrt2, 0.0, 0.0, 0.0,
                1.0 / std::numbers::sqrt2};
  const AnalysisRecord rec = analyze(from_acin(ghz), ghz);
  const double x =
      kind == FigureKind::RfVsTf ? rec.fidelity.f_max : rec.bell.s_max;
  data.scatter.push_back({x, rec.fidelity.f_csr, rec.flags.secret_shareable,
                          rec.flags.msr_boundary, true});

  data.boundary = boundary_curve(kind);
  return data;
}

}  // namespace qss3
