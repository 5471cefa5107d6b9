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

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "qss3/analysis.hpp"
#include "qss3/bell.hpp"
#include "qss3/fidelity.hpp"
#include "qss3/oracle.hpp"
#include "qss3/qmath.hpp"
#include "qss3/states.hpp"

namespace {

using namespace qss3;

int default_workers() {
  if (const char* env = std::getenv("QSS_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

double det3(const RealMatrix3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

void print_human(const AnalysisRecord& rec) {
  auto line = [](const char* key, double v) {
    std::printf("%-16s = %.12f\n", key, v);
  };
  auto flag = [](const char* key, bool v) {
    std::printf("%-16s = %s\n", key, v ? "true" : "false");
  };
  if (rec.params) {
    for (int i = 0; i < 5; ++i) {
      std::printf("lambda%d          = %.12f\n", i, rec.params->lambda[i]);
    }
    line("phi", rec.params->phi);
  }
  line("theta2_ab", rec.fidelity.theta2_ab);
  line("theta2_ac", rec.fidelity.theta2_ac);
  line("F_AB", rec.fidelity.f_ab);
  line("F_AC", rec.fidelity.f_ac);
  line("F_max", rec.fidelity.f_max);
  line("theta3", rec.fidelity.theta3);
  std::printf("%-16s = (%.6f, %.6f, %.6f)\n", "best_axis",
              rec.fidelity.best_axis[0], rec.fidelity.best_axis[1],
              rec.fidelity.best_axis[2]);
  line("F_CSR", rec.fidelity.f_csr);
  line("M_AB", rec.bell.m_ab);
  line("M_AC", rec.bell.m_ac);
  line("S_max", rec.bell.s_max);
  flag("secret_shareable", rec.flags.secret_shareable);
  flag("msr_boundary", rec.flags.msr_boundary);
  flag("tie_ab_ac", rec.flags.tie_ab_ac);
  if (rec.thm1_slack) {
    line("thm1_slack", *rec.thm1_slack);
  } else {
    std::printf("%-16s = n/a (premises not met)\n", "thm1_slack");
  }
  if (rec.thm2_slack) {
    line("thm2_slack", *rec.thm2_slack);
  } else {
    std::printf("%-16s = n/a (premises not met)\n", "thm2_slack");
  }
}

void print_structured(const AnalysisRecord& rec) {
  std::string out;
  auto kv = [&out](const char* key, const std::string& value) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += value;
  };
  if (rec.params) {
    const char* keys[5] = {"l0", "l1", "l2", "l3", "l4"};
    for (int i = 0; i < 5; ++i) kv(keys[i], format_g12(rec.params->lambda[i]));
    kv("phi", format_g12(rec.params->phi));
  } else {
    for (const char* key : {"l0", "l1", "l2", "l3", "l4", "phi"}) kv(key, "");
  }
  kv("theta2_ab", format_g12(rec.fidelity.theta2_ab));
  kv("theta2_ac", format_g12(rec.fidelity.theta2_ac));
  kv("f_ab", format_g12(rec.fidelity.f_ab));
  kv("f_ac", format_g12(rec.fidelity.f_ac));
  kv("f_max", format_g12(rec.fidelity.f_max));
  kv("theta3", format_g12(rec.fidelity.theta3));
  kv("f_csr", format_g12(rec.fidelity.f_csr));
  kv("m_ab", format_g12(rec.bell.m_ab));
  kv("m_ac", format_g12(rec.bell.m_ac));
  kv("s_max", format_g12(rec.bell.s_max));
  kv("secret_shareable", rec.flags.secret_shareable ? "1" : "0");
  kv("msr_boundary", rec.flags.msr_boundary ? "1" : "0");
  kv("thm1_slack", rec.thm1_slack ? format_g12(*rec.thm1_slack) : "");
  kv("thm2_slack", rec.thm2_slack ? format_g12(*rec.thm2_slack) : "");
  std::printf("%s\n", out.c_str());
}

int run_analyze(const std::string& path, bool structured) {
  const LoadedState st = load_state_file(path);
  const AnalysisRecord rec = analyze(st.psi, st.params);
  if (structured) {
    print_structured(rec);
  } else {
    print_human(rec);
  }
  return 0;
}

int run_sweep(std::size_t n, std::uint64_t seed, bool phase,
              const std::string& out_path, int workers) {
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << csv_header() << '\n';
  SweepConfig cfg{n, seed, phase, workers, kViolTol};
  sweep(cfg, [&out](std::uint64_t idx, const AnalysisRecord& rec) {
    out << csv_row(idx, rec) << '\n';
  });
  std::printf("wrote %zu records to %s\n", n, out_path.c_str());
  return 0;
}

void write_gp_script(const std::string& prefix, FigureKind kind) {
  std::ofstream gp(prefix + ".gp");
  if (!gp) throw std::invalid_argument("cannot open " + prefix + ".gp");
  const bool tf = kind == FigureKind::RfVsTf;
  gp << "# gnuplot script: reconstruction fidelity versus "
     << (tf ? "max teleportation fidelity" : "max Bell-CHSH value") << "\n"
     << "set datafile separator comma\n"
     << "set terminal pngcairo size 900,700\n"
     << "set output '" << prefix << ".png'\n"
     << "set xlabel '" << (tf ? "F_max" : "S_max") << "'\n"
     << "set ylabel 'F_CSR'\n"
     << (tf ? "set xrange [0.45:1.02]\n" : "set xrange [-0.05:2.9]\n")
     << "set yrange [0.45:1.05]\n"
     << "set key off\n"
     << "plot '" << prefix
     << ".csv' every ::1 using 1:2 with points pt 7 ps 0.25 lc rgb "
        "'#b0b0b0', \\\n"
     << "     '" << prefix
     << ".boundary.csv' every ::1 using 1:2 with lines lw 2.5 lc rgb 'red', "
        "\\\n"
     << "     '" << prefix
     << ".csv' every ::1 using (column(5)==1?column(1):1/0):2 with points "
        "pt 7 ps 1.8 lc rgb 'green'\n";
}

int run_figure(const std::string& kind_name, std::size_t n, std::uint64_t seed,
               const std::string& prefix, int workers) {
  FigureKind kind;
  if (kind_name == "rf-vs-tf") {
    kind = FigureKind::RfVsTf;
  } else if (kind_name == "rf-vs-bell") {
    kind = FigureKind::RfVsBell;
  } else {
    throw std::invalid_argument("figure kind must be rf-vs-tf or rf-vs-bell");
  }
  const FigureDataset data = figure_data(kind, n, seed, workers);

  std::ofstream scatter(prefix + ".csv");
  if (!scatter) throw std::invalid_argument("cannot open " + prefix + ".csv");
  scatter << "x,y,secret_shareable,msr_boundary,is_ghz\n";
  for (const FigurePoint& pt : data.scatter) {
    scatter << format_g12(pt.x) << ',' << format_g12(pt.y) << ','
            << (pt.secret_shareable ? 1 : 0) << ',' << (pt.msr_boundary ? 1 : 0)
            << ',' << (pt.is_ghz ? 1 : 0) << '\n';
  }

  std::ofstream boundary(prefix + ".boundary.csv");
  if (!boundary) {
    throw std::invalid_argument("cannot open " + prefix + ".boundary.csv");
  }
  boundary << "x,y\n";
  for (const BoundaryPoint& pt : data.boundary) {
    boundary << format_g12(pt.x) << ',' << format_g12(pt.y) << '\n';
  }

  write_gp_script(prefix, kind);
  std::printf("wrote %s.csv, %s.boundary.csv, %s.gp\n", prefix.c_str(),
              prefix.c_str(), prefix.c_str());
  return 0;
}

int run_verify(std::size_t n, std::uint64_t seed, bool phase, double tol,
               int workers) {
  SweepConfig cfg{n, seed, phase, workers, tol};
  const TheoremReport rep = sweep(cfg);

  std::size_t v1 = 0, v2 = 0, vx = 0;
  for (const TheoremViolation& v : rep.violations) {
    if (v.theorem == "theorem1") ++v1;
    if (v.theorem == "theorem2") ++v2;
    if (v.theorem == "mutual_exclusivity") ++vx;
  }
  std::printf("samples: %zu (phase %s, tol %g)\n", rep.samples,
              phase ? "on" : "off", tol);
  std::printf("theorem1            premise hits %-8zu min slack %-14s violations: %zu\n",
              rep.thm1_hits,
              rep.thm1_hits ? format_g12(rep.thm1_min_slack).c_str() : "n/a",
              v1);
  std::printf("theorem2            premise hits %-8zu min slack %-14s violations: %zu\n",
              rep.thm2_hits,
              rep.thm2_hits ? format_g12(rep.thm2_min_slack).c_str() : "n/a",
              v2);
  std::printf("mutual_exclusivity  shareable    %-8zu min slack %-14s violations: %zu\n",
              rep.shareable_hits,
              rep.shareable_hits ? format_g12(rep.excl_min_slack).c_str()
                                 : "n/a",
              vx);
  if (rep.clean()) return 0;

  std::printf("counterexamples:\n%s\n", csv_header().c_str());
  std::size_t shown = 0;
  for (const TheoremViolation& v : rep.violations) {
    if (++shown > 20) {
      std::printf("... %zu more\n", rep.violations.size() - 20);
      break;
    }
    std::printf("# %s slack %s\n%s\n", v.theorem.c_str(),
                format_g12(v.slack).c_str(), csv_row(v.index, v.record).c_str());
  }
  return 2;
}

int run_msr(int grid) {
  if (grid < 2) throw std::invalid_argument("--grid must be at least 2");
  std::printf("%10s %14s %14s %14s %14s %14s %12s %12s %12s\n", "theta_deg",
              "theta2", "theta3", "F_max", "F_CSR", "S_max", "d_theta2",
              "d_theta3", "d_M");
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double theta = (std::numbers::pi / 2.0) * i / (grid - 1);
    const PureState3 psi = from_msr({theta});
    const BlochDecomp3 d = bloch3(density(psi));
    const FidelitySummary f = fidelity_summary(d);
    const BellSummary b = bell_summary(d);

    const MsrClosedForms closed = msr_closed_forms(theta);
    const double theta2_num = std::max(f.theta2_ab, f.theta2_ac);
    const double m_num = std::max(b.m_ab, b.m_ac);
    const double d2 = std::abs(theta2_num - closed.theta2);
    const double d3 = std::abs(f.theta3 - closed.theta3);
    const double dm = std::abs(m_num - closed.theta2 * closed.theta2);
    worst = std::max({worst, d2, d3, dm});
    std::printf("%10.4f %14.12f %14.12f %14.12f %14.12f %14.12f %12.3e %12.3e %12.3e\n",
                theta * 180.0 / std::numbers::pi, theta2_num, f.theta3, f.f_max,
                f.f_csr, b.s_max, d2, d3, dm);
  }
  std::printf("max closed-form delta: %.3e (tolerance 1e-6)\n", worst);
  return worst <= 1e-6 ? 0 : 2;
}

int run_oracle_teleport(const std::string& path, std::size_t mc_samples,
                        std::uint64_t seed) {
  const LoadedState st = load_state_file(path);
  bool all_ok = true;
  const struct {
    const char* name;
    ChannelRole role;
  } channels[2] = {{"AB", ChannelRole::DealerAssistant},
                   {"AC", ChannelRole::DealerReconstructor}};
  for (int i = 0; i < 2; ++i) {
    const ComplexMatrix rho = reduced_pair(st.psi, channels[i].role);
    const double formula = tele_fidelity(rho);
    const McEstimate est =
        mc_teleport_fidelity(rho, {mc_samples, seed + static_cast<std::uint64_t>(i)});
    const double tol = std::max(3.0 * est.std_error, 2e-3);
    const double diff = std::abs(est.mean - formula);
    const bool ok = diff <= tol;
    all_ok = all_ok && ok;
    std::printf("channel %s: formula %.9f  mc %.9f +/- %.2e  |diff| %.2e  "
                "tol %.2e  %s\n",
                channels[i].name, formula, est.mean, est.std_error, diff, tol,
                ok ? "ok" : "DISAGREE");
    const double det = det3(bloch2(rho).t);
    if (!ok && det > 0.0) {
      const auto sv = singular_values(bloch2(rho).t);
      std::printf(
          "  note: det T = %.3e > 0; the trace-norm formula is an upper "
          "bound here, protocol optimum is %.9f\n",
          det, 0.5 * (1.0 + (sv[0] + sv[1] - sv[2]) / 3.0));
    }
  }
  return all_ok ? 0 : 2;
}

int run_oracle_csr(const std::string& path) {
  const LoadedState st = load_state_file(path);
  const AxisOptimum opt = max_conditioned_fidelity(st.psi);
  const double formula = csr_fidelity(st.psi);
  const double diff = std::abs(opt.value - formula);
  std::printf("conditioned oracle %.12f at axis (%.6f, %.6f, %.6f)\n",
              opt.value, opt.axis[0], opt.axis[1], opt.axis[2]);
  std::printf("formula            %.12f  |diff| %.2e  tol 1e-06  %s\n", formula,
              diff, diff <= 1e-6 ? "ok" : "DISAGREE");
  return diff <= 1e-6 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure three-qubit states as quantum-secret-sharing resources: "
               "fidelities, Bell-CHSH values, classification and bound checks"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path;
  bool analyze_json = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Analyze a single state file");
  analyze_cmd->add_option("statefile", analyze_path, "state file")->required();
  analyze_cmd->add_flag("--json", analyze_json,
                        "single-line key=value record instead of the table");

  // sweep
  std::size_t sweep_n = 0;
  std::uint64_t sweep_seed = 0;
  bool sweep_phase = false;
  std::string sweep_out;
  int sweep_workers = default_workers();
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Sample states and write a CSV of records");
  sweep_cmd->add_option("--n", sweep_n, "number of states")->required();
  sweep_cmd->add_option("--seed", sweep_seed, "base seed")->required();
  sweep_cmd->add_flag("--phase", sweep_phase, "sample the phase too");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();
  sweep_cmd->add_option("--workers", sweep_workers, "worker threads");

  // figure
  std::string figure_kind;
  std::size_t figure_n = 0;
  std::uint64_t figure_seed = 0;
  std::string figure_prefix;
  int figure_workers = default_workers();
  CLI::App* figure_cmd = app.add_subcommand(
      "figure", "Emit scatter + boundary CSVs and a gnuplot script");
  figure_cmd->add_option("kind", figure_kind, "rf-vs-tf or rf-vs-bell")
      ->required();
  figure_cmd->add_option("--n", figure_n, "number of states")->required();
  figure_cmd->add_option("--seed", figure_seed, "base seed")->required();
  figure_cmd->add_option("--out", figure_prefix, "output prefix")->required();
  figure_cmd->add_option("--workers", figure_workers, "worker threads");

  // verify
  std::size_t verify_n = 0;
  std::uint64_t verify_seed = 0;
  bool verify_phase = false;
  double verify_tol = kViolTol;
  int verify_workers = default_workers();
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check the two bounds and mutual exclusivity over a sweep");
  verify_cmd->add_option("--n", verify_n, "number of states")->required();
  verify_cmd->add_option("--seed", verify_seed, "base seed")->required();
  verify_cmd->add_flag("--phase", verify_phase, "sample the phase too");
  verify_cmd->add_option("--tol", verify_tol, "violation tolerance");
  verify_cmd->add_option("--workers", verify_workers, "worker threads");

  // msr
  int msr_grid = 0;
  CLI::App* msr_cmd = app.add_subcommand(
      "msr", "Closed-form vs numeric table over the single-angle family");
  msr_cmd->add_option("--grid", msr_grid, "number of grid points")->required();

  // oracle
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Independent brute-force validators");
  oracle_cmd->require_subcommand(1);
  std::string oracle_tele_path;
  std::size_t oracle_mc = 200000;
  std::uint64_t oracle_seed = 1;
  CLI::App* oracle_tele = oracle_cmd->add_subcommand(
      "teleport", "Monte Carlo protocol vs the fidelity formula");
  oracle_tele->add_option("statefile", oracle_tele_path, "state file")
      ->required();
  oracle_tele->add_option("--mc", oracle_mc, "Monte Carlo samples");
  oracle_tele->add_option("--seed", oracle_seed, "Monte Carlo seed");
  std::string oracle_csr_path;
  CLI::App* oracle_csr = oracle_cmd->add_subcommand(
      "csr", "Axis-maximized conditioned fidelity vs the formula");
  oracle_csr->add_option("statefile", oracle_csr_path, "state file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_path, analyze_json);
    if (*sweep_cmd) {
      return run_sweep(sweep_n, sweep_seed, sweep_phase, sweep_out,
                       sweep_workers);
    }
    if (*figure_cmd) {
      return run_figure(figure_kind, figure_n, figure_seed, figure_prefix,
                        figure_workers);
    }
    if (*verify_cmd) {
      return run_verify(verify_n, verify_seed, verify_phase, verify_tol,
                        verify_workers);
    }
    if (*msr_cmd) return run_msr(msr_grid);
    if (*oracle_tele) {
      return run_oracle_teleport(oracle_tele_path, oracle_mc, oracle_seed);
    }
    if (*oracle_csr) return run_oracle_csr(oracle_csr_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
