// Copyright 2026 The qmfpr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "qmfpr/analysis.h"
#include "qmfpr/bank_io.h"
#include "qmfpr/errors.h"
#include "qmfpr/prototype.h"
#include "qmfpr/refine.h"

namespace qmfpr::cli {
namespace {

constexpr double kDbFloor = -160.0;
constexpr double kProcessTolerance = 1e-8;

// Thrown for usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> ParseNumber(std::string_view s) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = ParseNumber(item);
    if (!v) throw UsageError("not a number in list: '" + item + "'");
    values.push_back(*v);
  }
  return values;
}

// One sample per line; a non-numeric first line is taken as a header.
std::vector<double> ReadSignal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BankFormatError("cannot open " + path);
  std::vector<double> x;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const std::string_view t = Trim(line);
    if (t.empty()) continue;
    const auto v = ParseNumber(t);
    if (!v) {
      if (first) {
        first = false;
        continue;
      }
      throw BankFormatError("bad sample in " + path + ": '" + line + "'");
    }
    first = false;
    x.push_back(*v);
  }
  return x;
}

double MagnitudeDb(double mag) {
  if (mag <= 0.0) return kDbFloor;
  return std::max(kDbFloor, 20.0 * std::log10(mag));
}

struct DesignArgs {
  int n = 0;
  double delta = 0.1;
  std::optional<double> wp;
  std::optional<double> ws;
  std::string window = "rect";
  std::optional<double> window_param;
  int refine = 1;
  std::string zeros;
  int grid = 1024;
  std::string out;
};

int CmdDesign(const DesignArgs& a, std::ostream& out, std::ostream& err) {
  DesignSpec spec;
  const auto kind = ParseWindowKind(a.window);
  if (!kind) throw UsageError("unknown window '" + a.window + "'");
  spec.window = WindowSpec::WithDefaults(*kind);
  if (a.window_param) spec.window.param = *a.window_param;
  if (a.wp.has_value() != a.ws.has_value()) {
    throw UsageError("--wp and --ws must be given together");
  }
  try {
    spec.edges = a.wp ? BandEdges::Make(*a.wp, *a.ws)
                      : BandEdges::SymmetricAboutHalfBand(a.delta);
    spec.n = a.n;
    spec.m = a.refine;
    spec.grid_size = a.grid;
    if (!a.zeros.empty()) spec.zero_freqs = ParseList(a.zeros);
    spec.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const FilterBank bank = DesignBank(spec);
  SaveBank(ToBankFile(bank), a.out);

  const ResponseMetrics lp =
      Mse(bank.h0.poly(), IdealResponse::kLowpass, spec.grid_size);
  const ResponseMetrics hp =
      Mse(bank.h1.poly(), IdealResponse::kHighpass, spec.grid_size);
  const bool pass = bank.max_spurious <= kDefaultPrTolerance;
  out << "delay=" << bank.delay << " scale=" << FormatDouble(bank.scale)
      << " max_spurious=" << FormatDouble(bank.max_spurious)
      << " lowpass_db=" << FormatDouble(lp.db)
      << " highpass_db=" << FormatDouble(hp.db)
      << " len_h0=" << bank.h0.size() << " len_h1=" << bank.h1.size()
      << " status=" << (pass ? "PASS" : "FAIL") << "\n";
  if (!pass) err << "perfect reconstruction check failed\n";
  return pass ? kExitOk : kExitVerifyFailed;
}

int CmdVerify(const std::string& path, std::ostream& out, std::ostream& err) {
  const BankFile file = LoadBank(path);
  try {
    const PrReport pr = VerifyPr(file.h0, file.h1);
    out << "delay=" << pr.delay << " scale=" << FormatDouble(pr.scale)
        << " max_spurious=" << FormatDouble(pr.max_spurious)
        << " status=" << (pr.pass ? "PASS" : "FAIL") << "\n";
    return pr.pass ? kExitOk : kExitVerifyFailed;
  } catch (const NoDelayFound& e) {
    out << "status=FAIL error=" << e.name() << "\n";
    err << e.name() << ": " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

int CmdResponse(const std::string& path, int grid, const std::string& out_path,
                std::ostream& out) {
  if (grid < 2) throw UsageError("--grid must be >= 2");
  const BankFile file = LoadBank(path);
  const std::vector<double> omegas = UniformGrid(grid);
  const auto r0 = Evaluate(file.h0, omegas);
  const auto r1 = Evaluate(file.h1, omegas);

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) throw BankFormatError("cannot open " + out_path);
    sink = &file_out;
  }
  *sink << "omega,mag_h0,mag_h1,mag_h0_db,mag_h1_db\n";
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    const double m0 = std::abs(r0[k]);
    const double m1 = std::abs(r1[k]);
    *sink << FormatDouble(omegas[k]) << ',' << FormatDouble(m0) << ','
          << FormatDouble(m1) << ',' << FormatDouble(MagnitudeDb(m0)) << ','
          << FormatDouble(MagnitudeDb(m1)) << '\n';
  }
  if (!*sink) throw BankFormatError("failed writing response");
  if (!out_path.empty()) {
    out << "rows=" << omegas.size() << " out=" << out_path << "\n";
  }
  return kExitOk;
}

int CmdMetrics(const std::string& path, int grid, std::ostream& out) {
  const BankFile file = LoadBank(path);
  ResponseMetrics lp, hp;
  try {
    lp = Mse(file.h0, IdealResponse::kLowpass, grid);
    hp = Mse(file.h1, IdealResponse::kHighpass, grid);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "lowpass mse=" << FormatDouble(lp.mse) << " db=" << FormatDouble(lp.db)
      << "\n";
  out << "highpass mse=" << FormatDouble(hp.mse)
      << " db=" << FormatDouble(hp.db) << "\n";
  return kExitOk;
}

int CmdProcess(const std::string& path, const std::string& in_path,
               const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  const BankFile file = LoadBank(path);
  const std::vector<double> x = ReadSignal(in_path);
  if (x.empty()) throw UsageError("input signal is empty");

  FilterBank bank = [&] {
    try {
      return ToFilterBank(file);
    } catch (const std::invalid_argument& e) {
      throw BankFormatError(std::string("bank is not linear phase: ") +
                            e.what());
    }
  }();
  const ProcessResult result = ProcessBank(bank, x);

  if (!out_path.empty()) {
    std::ofstream sink(out_path);
    if (!sink) throw BankFormatError("cannot open " + out_path);
    sink << "y\n";
    for (double v : result.y) sink << FormatDouble(v) << '\n';
    if (!sink) throw BankFormatError("failed writing " + out_path);
  }
  const bool pass = result.max_rel_error <= kProcessTolerance;
  out << "delay=" << bank.delay << " scale=" << FormatDouble(bank.scale)
      << " samples_in=" << x.size() << " samples_out=" << result.y.size()
      << " max_rel_error=" << FormatDouble(result.max_rel_error)
      << " status=" << (pass ? "PASS" : "FAIL") << "\n";
  if (!pass) err << "reconstruction error above " << kProcessTolerance << "\n";
  return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Perfect-reconstruction two-channel QMF bank designer"};
  app.require_subcommand(1);

  DesignArgs design;
  auto* cmd_design = app.add_subcommand("design", "Design and certify a bank");
  cmd_design->add_option("--n", design.n, "Half order; H0 has 2n+1 taps")
      ->required();
  auto* delta_opt = cmd_design->add_option(
      "--delta", design.delta, "Half transition width in units of pi");
  auto* wp_opt = cmd_design->add_option("--wp", design.wp,
                                        "Passband edge in radians");
  auto* ws_opt = cmd_design->add_option("--ws", design.ws,
                                        "Stopband edge in radians");
  wp_opt->excludes(delta_opt);
  ws_opt->excludes(delta_opt);
  cmd_design->add_option("--window", design.window,
                         "rect | hamming | gauss | kaiser");
  cmd_design->add_option("--window-param", design.window_param,
                         "Gaussian alpha or Kaiser beta");
  cmd_design->add_option("--refine", design.refine, "Refinement order m");
  cmd_design->add_option("--zeros", design.zeros,
                         "Comma-separated stop-band zeros of H1 (radians)");
  cmd_design->add_option("--grid", design.grid, "MSE grid size");
  cmd_design->add_option("--out", design.out, "Bank JSON output")->required();

  std::string bank_path;
  int grid = 1024;
  std::string out_path;
  std::string in_path;

  auto* cmd_verify = app.add_subcommand("verify", "Certify perfect reconstruction");
  cmd_verify->add_option("bank", bank_path, "Bank JSON")->required();

  auto* cmd_response =
      app.add_subcommand("response", "Magnitude responses as CSV");
  cmd_response->add_option("bank", bank_path, "Bank JSON")->required();
  cmd_response->add_option("--grid", grid, "Number of frequencies on [0, pi]");
  cmd_response->add_option("--out", out_path, "CSV output (default stdout)");

  auto* cmd_metrics = app.add_subcommand("metrics", "MSE against ideal half-band");
  cmd_metrics->add_option("bank", bank_path, "Bank JSON")->required();
  cmd_metrics->add_option("--grid", grid, "Number of frequencies on [0, pi]");

  auto* cmd_process =
      app.add_subcommand("process", "Run a signal through the bank");
  cmd_process->add_option("bank", bank_path, "Bank JSON")->required();
  cmd_process->add_option("--in", in_path, "Input CSV, one sample per line")
      ->required();
  cmd_process->add_option("--out", out_path, "Reconstructed signal CSV");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*cmd_design) return CmdDesign(design, out, err);
    if (*cmd_verify) return CmdVerify(bank_path, out, err);
    if (*cmd_response) return CmdResponse(bank_path, grid, out_path, out);
    if (*cmd_metrics) return CmdMetrics(bank_path, grid, out);
    if (*cmd_process) {
      return CmdProcess(bank_path, in_path, out_path, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DesignError& e) {
    err << e.name() << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const BankFormatError& e) {
    err << "BankFormatError: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace qmfpr::cli
