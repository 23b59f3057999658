// Command-line front end: evaluate the gate at one kappa, sweep kappa to CSV
// (optionally with SVG plots), locate curve features, and run the Monte-Carlo
// verification suite.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqrtnot/io.hpp"
#include "sqrtnot/oracle.hpp"
#include "sqrtnot/sweep.hpp"

namespace {

using namespace sqrtnot;

constexpr std::array<const char*, 9> kColumnNames = {
    "P_A", "P_B", "P_C", "P_D", "F", "S_DD", "S_CD", "unitarity_dev", "norm_error"};

double column_value(const SweepRecord& r, std::size_t column) {
  switch (column) {
    case 0: case 1: case 2: case 3:
      return r.probabilities[column];
    case 4: return r.fidelity;
    case 5: return r.s_dd;
    case 6: return r.s_cd;
    case 7: return r.unitarity_dev;
    default: return r.norm_error;
  }
}

struct GateOptions {
  double kappa = 0.0;
  std::string input = "A";
  std::optional<double> bias_voltage;
  double temperature = 0.0;
};

int run_gate(const GateOptions& opt) {
  const Lead input = parse_lead(opt.input);
  const ScatteringMatrix s = build_sqrt_not(opt.kappa);
  const SweepRecord rec = evaluate_gate(opt.kappa, input);

  std::cout << "kappa = " << format_fixed(opt.kappa, 12) << ", input lead "
            << lead_name(input) << "\n\n";
  std::cout << "S-matrix (rows: outgoing lead, columns: incoming lead A..D)\n";
  for (Lead out : all_leads) {
    std::printf("  %c ", lead_name(out));
    for (Lead in : all_leads) {
      std::printf(" %15.12f", s(out, in).real());
    }
    std::printf("\n");
  }
  std::cout << '\n';
  for (Lead out : all_leads) {
    std::cout << "P_" << lead_name(out) << "  = "
              << format_fixed(rec.probabilities[static_cast<std::size_t>(index_of(out))], 12)
              << '\n';
  }
  std::cout << "F    = " << format_fixed(rec.fidelity, 12) << '\n';
  std::cout << "S_DD = " << format_fixed(rec.s_dd, 12) << "  [prefactor units]\n";
  std::cout << "S_CD = " << format_fixed(rec.s_cd, 12) << "  [prefactor units]\n";
  std::cout << "unitarity_dev = " << format_fixed(rec.unitarity_dev, 12) << '\n';
  std::printf("norm_error    = %.3e\n", rec.norm_error);

  if (opt.bias_voltage) {
    BiasConfig bias;
    bias.bias_voltage = *opt.bias_voltage;
    bias.temperature = opt.temperature;
    bias.input_lead = input;
    const double pref = noise_prefactor(bias);
    const auto sdd = shot_noise_auto(s, Lead::D, input, bias);
    const auto scd = shot_noise_cross(s, Lead::C, Lead::D, input, bias);
    std::printf("\nSI output for V = %g V, T = %g K\n", bias.bias_voltage,
                bias.temperature);
    std::printf("  prefactor (e^3 V/h) coth(beta e V/2) = %.12e A^2/Hz\n", pref);
    std::printf("  S_DD = %.12e A^2/Hz\n", *sdd.si);
    std::printf("  S_CD = %.12e A^2/Hz\n", *scd.si);
  }
  return 0;
}

struct SweepOptions {
  std::vector<double> range = {-10.0, 10.0};
  int points = 2001;
  std::string input = "A";
  std::string output = "sweep.csv";
  bool plot = false;
  int precision = 12;
};

int run_sweep(const SweepOptions& opt) {
  const Lead input = parse_lead(opt.input);
  const auto records = sweep_kappa(opt.range[0], opt.range[1], opt.points, input);
  write_sweep_csv(opt.output, records, opt.precision);
  std::cout << "wrote " << records.size() << " rows to " << opt.output << '\n';

  if (opt.plot) {
    std::vector<double> xs(records.size());
    std::vector<double> ys(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) xs[i] = records[i].kappa;
    const auto dir = std::filesystem::path(opt.output).parent_path();
    for (std::size_t c = 0; c < kColumnNames.size(); ++c) {
      for (std::size_t i = 0; i < records.size(); ++i) {
        ys[i] = column_value(records[i], c);
      }
      const auto path = (dir / (std::string(kColumnNames[c]) + ".svg")).string();
      write_curve_svg(path, xs, ys, "kappa", kColumnNames[c]);
      std::cout << "wrote " << path << '\n';
    }
  }
  return 0;
}

struct ExtremaOptions {
  std::vector<double> range = {-10.0, 10.0};
  int scan_points = 20001;
  std::string input = "A";
  std::string output;
};

const char* kind_name(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::Maximum: return "maximum";
    case ExtremumKind::Minimum: return "minimum";
    default: return "root";
  }
}

int run_extrema(const ExtremaOptions& opt) {
  const Lead input = parse_lead(opt.input);
  const auto p_d = [input](double k) {
    return output_probabilities(build_sqrt_not(k), input)[index_of(Lead::D)];
  };
  const auto s_dd = [input](double k) {
    return shot_noise_auto(build_sqrt_not(k), Lead::D, input).prefactor_units;
  };
  const auto abs_s_cd = [input](double k) {
    return std::abs(
        shot_noise_cross(build_sqrt_not(k), Lead::C, Lead::D, input).prefactor_units);
  };
  const auto fid = [input](double k) { return evaluate_gate(k, input).fidelity; };

  const double lo = opt.range[0], hi = opt.range[1];
  std::vector<ExtremumReport> reports;
  for (auto& r : find_extrema(s_dd, lo, hi, opt.scan_points, "S_DD")) reports.push_back(r);
  for (auto& r : find_extrema(abs_s_cd, lo, hi, opt.scan_points, "|S_CD|")) reports.push_back(r);
  for (auto& r : find_extrema(fid, lo, hi, opt.scan_points, "F")) reports.push_back(r);
  for (auto& r : find_roots(p_d, 0.5, lo, hi, opt.scan_points, "P_D-1/2")) reports.push_back(r);

  std::printf("%-8s %-8s %18s %18s %14s\n", "curve", "kind", "location", "value",
              "bracket width");
  for (const auto& r : reports) {
    std::printf("%-8s %-8s %18.12f %18.12f %14.3e\n", r.curve.c_str(),
                kind_name(r.kind), r.location, r.value, r.bracket_hi - r.bracket_lo);
  }
  const auto count_max = [&](std::string_view curve) {
    return std::count_if(reports.begin(), reports.end(), [&](const auto& r) {
      return r.curve == curve && r.kind == ExtremumKind::Maximum;
    });
  };
  std::printf("\nS_DD maxima: %ld, |S_CD| maxima: %ld, F maxima: %ld, P_D=1/2 roots: %ld\n",
              static_cast<long>(count_max("S_DD")), static_cast<long>(count_max("|S_CD|")),
              static_cast<long>(count_max("F")),
              static_cast<long>(std::count_if(reports.begin(), reports.end(), [](const auto& r) {
                return r.kind == ExtremumKind::Root;
              })));

  if (!opt.output.empty()) {
    std::FILE* f = std::fopen(opt.output.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open for writing: " + opt.output);
    std::fprintf(f, "curve,kind,location,value,bracket_lo,bracket_hi\n");
    for (const auto& r : reports) {
      std::fprintf(f, "%s,%s,%.12e,%.12e,%.12e,%.12e\n", r.curve.c_str(),
                   kind_name(r.kind), r.location, r.value, r.bracket_lo, r.bracket_hi);
    }
    std::fclose(f);
    std::cout << "wrote " << opt.output << '\n';
  }
  return 0;
}

struct VerifyOptions {
  std::uint64_t seed = 20250809;
  std::uint64_t electrons = 1000000;
  std::size_t scan_points = 1000000;
  bool inject_corruption = false;
};

class CheckReporter {
 public:
  void report(bool ok, const std::string& line) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << line << '\n';
    ++total_;
    if (!ok) ++failed_;
  }
  int failed() const { return failed_; }
  int total() const { return total_; }

 private:
  int total_ = 0;
  int failed_ = 0;
};

int run_verify(const VerifyOptions& opt) {
  CheckReporter rep;
  char buf[256];

  std::printf("verification report (seed %llu, %llu electrons per trial)\n",
              static_cast<unsigned long long>(opt.seed),
              static_cast<unsigned long long>(opt.electrons));

  // Probability conservation over the plotted grid.
  {
    double worst = 0.0;
    const int points = 2001;
    for (int i = 0; i < points; ++i) {
      const double kappa = (-10.0 * (points - 1 - i) + 10.0 * i) / (points - 1);
      ScatteringMatrix s = build_sqrt_not(kappa);
      if (opt.inject_corruption) {
        auto entries = s.entries();
        entries[4 * index_of(Lead::D) + index_of(Lead::A)] *= 1.02;
        s = ScatteringMatrix(entries);
      }
      const auto p = output_probabilities(s, Lead::A);
      worst = std::max(worst, std::abs(p[0] + p[1] + p[2] + p[3] - 1.0));
    }
    std::snprintf(buf, sizeof buf,
                  "conservation: max |sum P - 1| over %d points = %.3e (tol 1e-12)",
                  2001, worst);
    rep.report(worst < 1e-12, buf);
  }

  // Monte-Carlo partition noise against the closed-form auto noise.
  {
    const std::array<double, 10> kappas = {-5.0, -2.0, -1.0, -0.5, -0.25,
                                           0.0,  0.25, 0.5,  1.0,  3.0};
    for (std::size_t i = 0; i < kappas.size(); ++i) {
      const double kappa = kappas[i];
      const double expected =
          shot_noise_auto(build_sqrt_not(kappa), Lead::D, Lead::A).prefactor_units;
      PartitionTrial trial;
      trial.transmission_probability =
          output_probabilities(build_sqrt_not(kappa), Lead::A)[index_of(Lead::D)];
      trial.electron_count = opt.electrons;
      trial.seed = opt.seed + i;
      const McEstimate est = mc_partition_noise(trial);
      const double dev = std::abs(est.variance - expected);
      const double tol = 3.0 * est.standard_error;
      std::snprintf(buf, sizeof buf,
                    "mc partition noise kappa=%+.2f: measured %.9f expected %.9f "
                    "|dev| %.3e <= 3*SE %.3e",
                    kappa, est.variance, expected, dev, tol);
      rep.report(dev <= tol, buf);
    }
  }

  // Multinomial cross-covariance structure: cov(I_C, I_D) = -P_C P_D.
  {
    const std::array<double, 3> kappas = {0.0, 0.5, 1.0};
    for (std::size_t i = 0; i < kappas.size(); ++i) {
      const auto probs = output_probabilities(build_sqrt_not(kappas[i]), Lead::A);
      const double expected =
          -probs[index_of(Lead::C)] * probs[index_of(Lead::D)];
      const auto est =
          mc_cross_covariance(probs, opt.electrons, opt.seed + 100 + i);
      const double dev = std::abs(est.covariance - expected);
      // Absolute floor covers the resonant point, where the indicators are
      // perfectly anticorrelated and the first-order variance vanishes.
      const double tol = 3.0 * est.standard_error +
                         16.0 / static_cast<double>(opt.electrons);
      std::snprintf(buf, sizeof buf,
                    "mc cross covariance kappa=%+.2f: measured %.9f expected %.9f "
                    "|dev| %.3e <= tol %.3e",
                    kappas[i], est.covariance, expected, dev, tol);
      rep.report(dev <= tol, buf);
    }
  }

  // Brute-scan feature counts on the plotted range.
  {
    const auto s_dd_curve = [](double k) {
      return shot_noise_auto(build_sqrt_not(k), Lead::D, Lead::A).prefactor_units;
    };
    const auto p_d_curve = [](double k) {
      return output_probabilities(build_sqrt_not(k), Lead::A)[index_of(Lead::D)];
    };
    const auto abs_s_cd_curve = [](double k) {
      return std::abs(
          shot_noise_cross(build_sqrt_not(k), Lead::C, Lead::D, Lead::A).prefactor_units);
    };
    const int n_sdd =
        count_local_maxima(brute_scan(s_dd_curve, -10.0, 10.0, opt.scan_points));
    std::snprintf(buf, sizeof buf, "feature count: S_DD local maxima = %d (expected 2)",
                  n_sdd);
    rep.report(n_sdd == 2, buf);

    const int n_half =
        count_sign_changes(brute_scan(p_d_curve, -10.0, 10.0, opt.scan_points), 0.5);
    std::snprintf(buf, sizeof buf, "feature count: P_D = 1/2 crossings = %d (expected 2)",
                  n_half);
    rep.report(n_half == 2, buf);

    const int n_scd =
        count_local_maxima(brute_scan(abs_s_cd_curve, -10.0, 10.0, opt.scan_points));
    std::snprintf(buf, sizeof buf,
                  "feature count: |S_CD| local maxima = %d (expected 1)", n_scd);
    rep.report(n_scd == 1, buf);
  }

  std::printf("verification: %s (%d/%d checks passed)\n",
              rep.failed() == 0 ? "PASS" : "FAIL", rep.total() - rep.failed(),
              rep.total());
  return rep.failed() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-terminal electron-waveguide sqrt(NOT) gate: scattering, "
               "fidelity and zero-frequency shot noise"};
  app.require_subcommand(1);

  GateOptions gate_opt;
  auto* gate = app.add_subcommand("gate", "Evaluate the gate at a single kappa");
  gate->add_option("--kappa", gate_opt.kappa, "Gate parameter")->required();
  gate->add_option("--input", gate_opt.input, "Input lead (A, B, C or D)");
  gate->add_option("--bias-voltage", gate_opt.bias_voltage,
                   "Bias voltage in volts; enables SI noise output");
  gate->add_option("--temperature", gate_opt.temperature, "Temperature in kelvin");

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "Sweep kappa and write a CSV dataset");
  sweep->add_option("--range", sweep_opt.range, "kappa range: MIN MAX")->expected(2);
  sweep->add_option("--points", sweep_opt.points, "Number of grid points");
  sweep->add_option("--input", sweep_opt.input, "Input lead");
  sweep->add_option("--output", sweep_opt.output, "Output CSV path");
  sweep->add_flag("--plot", sweep_opt.plot, "Also write one SVG per column");
  sweep->add_option("--precision", sweep_opt.precision, "CSV decimal digits")
      ->check(CLI::Range(1, 17));

  ExtremaOptions ext_opt;
  auto* extrema = app.add_subcommand(
      "extrema", "Locate extrema of S_DD, |S_CD|, F and the roots of P_D = 1/2");
  extrema->add_option("--range", ext_opt.range, "kappa range: MIN MAX")->expected(2);
  extrema->add_option("--scan-points", ext_opt.scan_points, "Dense scan size");
  extrema->add_option("--input", ext_opt.input, "Input lead");
  extrema->add_option("--output", ext_opt.output, "Optional CSV report path");

  VerifyOptions ver_opt;
  auto* verify = app.add_subcommand(
      "verify", "Monte-Carlo and brute-scan verification of the closed forms");
  verify->add_option("--seed", ver_opt.seed, "Base RNG seed");
  verify->add_option("--electrons", ver_opt.electrons, "Electrons per Monte-Carlo trial")
      ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{1000000000}));
  verify->add_option("--scan-points", ver_opt.scan_points, "Brute-scan size");
  verify->add_flag("--inject-corruption", ver_opt.inject_corruption,
                   "Deliberately corrupt a matrix entry (failure-path test hook)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 2 = usage error; 0 covers --help
  }

  try {
    if (gate->parsed()) return run_gate(gate_opt);
    if (sweep->parsed()) return run_sweep(sweep_opt);
    if (extrema->parsed()) return run_extrema(ext_opt);
    return run_verify(ver_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
