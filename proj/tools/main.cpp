// Copyright 2026 The qnoise authors
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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qnoise/channels.hpp"
#include "qnoise/io.hpp"
#include "qnoise/plate.hpp"
#include "qnoise/process.hpp"
#include "qnoise/selfcheck.hpp"
#include "qnoise/state.hpp"

namespace {

using json = nlohmann::json;
using namespace qnoise;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitTolerance = 2;

struct OutputOpts {
  std::string path;            // empty: stdout
  std::string format = "csv";  // csv | json
};

void add_output_opts(CLI::App* cmd, OutputOpts* out) {
  cmd->add_option("-o,--out", out->path, "Output file (default: stdout)");
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void emit(const OutputOpts& out, const std::string& content) {
  if (out.path.empty())
    std::cout << content;
  else
    write_file(out.path, content);
}

struct GateOpts {
  std::string gate = "sqisw";
  double t1 = 0.0;
  double t2 = 0.0;
  double t_gate = 1.0;
  int n_slices = 100;
  std::string order = "gate-first";
};

void add_gate_opts(CLI::App* cmd, GateOpts* g) {
  cmd->add_option("--gate", g->gate,
                  "Gate: sqisw, identity or file:<path> (JSON real/imag grids)")
      ->capture_default_str();
  cmd->add_option("--t1", g->t1, "Amplitude relaxation time (gate-time units)")
      ->required();
  cmd->add_option("--t2", g->t2, "Phase relaxation time (gate-time units)")
      ->required();
  cmd->add_option("--tgate", g->t_gate, "Gate execution time")
      ->capture_default_str();
  cmd->add_option("-n,--n", g->n_slices, "Number of gate slices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--order", g->order, "Per-slice ordering")
      ->check(CLI::IsMember({"gate-first", "noise-first"}))
      ->capture_default_str();
}

NoisyGateSpec spec_from(const GateOpts& g) {
  NoisyGateSpec spec;
  if (g.gate == "sqisw")
    spec.gate = sqisw();
  else if (g.gate == "identity")
    spec.gate = Matrix::Identity(2, 2);
  else if (g.gate.rfind("file:", 0) == 0)
    spec.gate = read_unitary_file(g.gate.substr(5));
  else
    throw std::invalid_argument("--gate must be sqisw, identity or file:<path>");
  spec.t_gate = g.t_gate;
  spec.n_slices = g.n_slices;
  spec.t1 = g.t1;
  spec.t2 = g.t2;
  spec.order = g.order == "gate-first" ? SliceOrder::kGateThenNoise
                                       : SliceOrder::kNoiseThenGate;
  return spec;
}

void csv_matrix_parts(CsvWriter& csv, const std::string& prefix,
                      const Matrix& m) {
  const auto part = [&](const std::string& name, auto f) {
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        csv.row({prefix + name, std::to_string(i), std::to_string(j),
                 format_double(f(m(i, j)))});
  };
  part("real", [](const Complex& z) { return z.real(); });
  part("imag", [](const Complex& z) { return z.imag(); });
  part("magnitude", [](const Complex& z) { return std::abs(z); });
}

void csv_meta(CsvWriter& csv, const std::string& key, double value) {
  csv.row({"meta." + key, "0", "0", format_double(value)});
}

// ---------------------------------------------------------------------------
// chi

int run_chi(const GateOpts& g, const OutputOpts& out) {
  NoisyGateSpec spec = spec_from(g);
  const ChiMatrix chi = chi_from_channel(noisy_gate_channel(spec));

  NoisyGateSpec refined = spec;
  refined.n_slices = 2 * spec.n_slices;
  const ChiMatrix chi2 = chi_from_channel(noisy_gate_channel(refined));
  const double convergence = trace_distance(chi.to_density().matrix(),
                                            chi2.to_density().matrix());

  if (out.format == "json") {
    json doc;
    doc["command"] = "chi";
    doc["gate"] = g.gate;
    doc["params"] = {{"t1", g.t1},
                     {"t2", g.t2},
                     {"tgate", g.t_gate},
                     {"n", g.n_slices},
                     {"order", g.order}};
    doc["chi"] = matrix_to_json(chi.matrix());
    doc["chi"]["dim"] = chi.s() * chi.s();
    doc["metadata"] = {{"n", g.n_slices},
                       {"convergence_trace_distance", convergence},
                       {"trace", chi.matrix().trace().real()},
                       {"rank", chi.rank()}};
    emit(out, doc.dump(2) + "\n");
  } else {
    CsvWriter csv;
    csv.header({"part", "row", "col", "value"});
    csv_matrix_parts(csv, "", chi.matrix());
    csv_meta(csv, "n", g.n_slices);
    csv_meta(csv, "convergence_trace_distance", convergence);
    csv_meta(csv, "trace", chi.matrix().trace().real());
    csv_meta(csv, "rank", static_cast<double>(chi.rank()));
    emit(out, csv.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// negativity

int run_negativity(const GateOpts& g, const OutputOpts& out) {
  const auto series = negativity_dynamics(spec_from(g));
  if (out.format == "json") {
    json rows = json::array();
    for (const auto& pt : series)
      rows.push_back({{"slice_index", pt.slice},
                      {"time", pt.time},
                      {"negativity_ideal", pt.ideal},
                      {"negativity_noisy", pt.noisy}});
    json doc;
    doc["command"] = "negativity";
    doc["gate"] = g.gate;
    doc["params"] = {{"t1", g.t1},
                     {"t2", g.t2},
                     {"tgate", g.t_gate},
                     {"n", g.n_slices},
                     {"order", g.order}};
    doc["rows"] = std::move(rows);
    emit(out, doc.dump(2) + "\n");
  } else {
    CsvWriter csv;
    csv.header({"slice_index", "time", "negativity_ideal", "negativity_noisy"});
    for (const auto& pt : series)
      csv.row({std::to_string(pt.slice), format_double(pt.time),
               format_double(pt.ideal), format_double(pt.noisy)});
    emit(out, csv.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// plate-purity

struct PlateOpts {
  std::string spectrum;
  double fwhm = 0.0;
  double lambda0 = 0.8;
  double delta_n = 0.01;
  double alpha = 0.0;
};

void add_plate_opts(CLI::App* cmd, PlateOpts* p, bool allow_all) {
  const std::string names = allow_all
                                ? "gauss, sinc, tri, rect, mono or all"
                                : "gauss, sinc, tri, rect or mono";
  cmd->add_option("--spectrum", p->spectrum, "Spectral distribution: " + names)
      ->required();
  cmd->add_option("--fwhm", p->fwhm,
                  "Spectral full width at half maximum (micrometers)");
  cmd->add_option("--lambda0", p->lambda0, "Central wavelength (micrometers)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--delta-n", p->delta_n, "Birefringence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--alpha", p->alpha, "Optical axis angle (radians)")
      ->capture_default_str();
}

SpectrumKind kind_from_name(const std::string& name) {
  if (name == "mono") return SpectrumKind::kMonochromatic;
  if (name == "gauss") return SpectrumKind::kGaussian;
  if (name == "sinc") return SpectrumKind::kSinc2;
  if (name == "tri") return SpectrumKind::kTriangular;
  if (name == "rect") return SpectrumKind::kUniform;
  throw std::invalid_argument("--spectrum: unknown name " + name);
}

void require_fwhm(const PlateOpts& p) {
  if (p.spectrum != "mono" && !(p.fwhm > 0.0))
    throw std::invalid_argument("--fwhm must be > 0 for spectrum " +
                                p.spectrum);
}

int run_plate_purity(const PlateOpts& p, double h_min, double h_max, int steps,
                     const OutputOpts& out) {
  if (!(h_min > 0.0)) throw std::invalid_argument("--h-min must be > 0");
  if (steps > 1 && !(h_max > h_min))
    throw std::invalid_argument("--h-max must exceed --h-min");
  require_fwhm(p);

  std::vector<double> hs;
  hs.reserve(steps);
  for (int i = 0; i < steps; ++i)
    hs.push_back(steps == 1 ? h_min
                            : h_min + (h_max - h_min) * double(i) /
                                          double(steps - 1));

  std::vector<std::string> names;
  if (p.spectrum == "all")
    names = {"gauss", "sinc", "tri", "rect"};
  else
    names = {p.spectrum};

  json json_rows = json::array();
  CsvWriter csv;
  csv.header({"spectrum", "h", "a", "b", "I_c", "I_s", "purity"});
  for (const auto& name : names) {
    const auto sweep = purity_vs_thickness(kind_from_name(name), p.fwhm,
                                           p.alpha, p.delta_n, p.lambda0, hs);
    for (const auto& pt : sweep) {
      if (out.format == "json")
        json_rows.push_back({{"spectrum", name},
                             {"h", pt.h},
                             {"a", pt.a},
                             {"b", pt.b},
                             {"I_c", pt.ic},
                             {"I_s", pt.is},
                             {"purity", pt.purity}});
      else
        csv.row({name, format_double(pt.h), format_double(pt.a),
                 format_double(pt.b), format_double(pt.ic),
                 format_double(pt.is), format_double(pt.purity)});
    }
  }

  if (out.format == "json") {
    json doc;
    doc["command"] = "plate-purity";
    doc["params"] = {{"spectrum", p.spectrum}, {"fwhm", p.fwhm},
                     {"lambda0", p.lambda0},   {"delta_n", p.delta_n},
                     {"alpha", p.alpha},       {"steps", steps}};
    doc["rows"] = std::move(json_rows);
    emit(out, doc.dump(2) + "\n");
  } else {
    emit(out, csv.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// plate-chi

int run_plate_chi(const PlateOpts& p, double h, long oracle_samples,
                  std::uint64_t seed, bool exact_delta, double tolerance,
                  const OutputOpts& out) {
  require_fwhm(p);
  const PlateParams params(h, p.delta_n, p.alpha, p.lambda0);
  const SpectralDistribution spec =
      SpectralDistribution::from_name(p.spectrum, p.lambda0, p.fwhm);
  const ChiMatrix chi = analytic_chi(params, spec);
  const FourierCoeffs fc = fourier_coeffs(spec, params.b);

  double distance = 0.0;
  const bool with_oracle = oracle_samples > 0;
  ChiMatrix mc = chi;
  if (with_oracle) {
    mc = monte_carlo_chi(params, spec, oracle_samples, seed,
                         exact_delta ? DeltaModel::kExact
                                     : DeltaModel::kLinearized);
    distance =
        trace_distance(chi.to_density().matrix(), mc.to_density().matrix());
  }

  if (out.format == "json") {
    json doc;
    doc["command"] = "plate-chi";
    doc["params"] = {{"spectrum", p.spectrum},
                     {"fwhm", p.fwhm},
                     {"lambda0", p.lambda0},
                     {"delta_n", p.delta_n},
                     {"alpha", p.alpha},
                     {"h", h}};
    doc["linearization"] = {{"a", params.a}, {"b", params.b}};
    doc["fourier"] = {{"I_c", fc.ic}, {"I_s", fc.is}};
    doc["purity"] = plate_purity(fc);
    doc["chi"] = matrix_to_json(chi.matrix());
    doc["chi"]["dim"] = 4;
    doc["metadata"] = {{"rank", chi.rank()}};
    if (with_oracle) {
      doc["oracle"] = {{"samples", oracle_samples},
                       {"seed", seed},
                       {"exact_delta", exact_delta},
                       {"trace_distance", distance}};
      doc["oracle"]["chi"] = matrix_to_json(mc.matrix());
    }
    emit(out, doc.dump(2) + "\n");
  } else {
    CsvWriter csv;
    csv.header({"part", "row", "col", "value"});
    csv_matrix_parts(csv, "", chi.matrix());
    if (with_oracle) csv_matrix_parts(csv, "mc.", mc.matrix());
    csv_meta(csv, "h", h);
    csv_meta(csv, "a", params.a);
    csv_meta(csv, "b", params.b);
    csv_meta(csv, "I_c", fc.ic);
    csv_meta(csv, "I_s", fc.is);
    csv_meta(csv, "purity", plate_purity(fc));
    csv_meta(csv, "rank", static_cast<double>(chi.rank()));
    if (with_oracle) {
      csv_meta(csv, "oracle_samples", static_cast<double>(oracle_samples));
      csv_meta(csv, "oracle_seed", static_cast<double>(seed));
      csv_meta(csv, "oracle_exact_delta", exact_delta ? 1.0 : 0.0);
      csv_meta(csv, "oracle_trace_distance", distance);
    }
    emit(out, csv.str());
  }

  if (with_oracle && tolerance > 0.0 && distance > tolerance) {
    std::cerr << "plate-chi: oracle trace distance " << distance
              << " exceeds tolerance " << tolerance << "\n";
    return kExitTolerance;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

int run_validate(std::uint64_t seed, const OutputOpts& out) {
  const auto results = run_selfchecks(seed);
  std::string report;
  bool all_pass = true;
  for (const auto& r : results) {
    report += (r.pass ? "PASS " : "FAIL ") + r.name + " (" + r.detail + ")\n";
    all_pass = all_pass && r.pass;
  }
  report += all_pass ? "all checks passed\n" : "some checks FAILED\n";
  emit(out, report);
  if (!out.path.empty()) std::cout << (all_pass ? "PASS\n" : "FAIL\n");
  return all_pass ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Kraus-channel simulation of relaxation noise on quantum gates and "
      "phase-plate decoherence of polarization qubits"};
  app.require_subcommand(1);

  GateOpts chi_gate, neg_gate;
  OutputOpts chi_out, neg_out, purity_out, plate_out, validate_out;
  PlateOpts purity_plate, chi_plate;
  double h_min = 1.0, h_max = 500.0, plate_h = 100.0;
  int steps = 100;
  long oracle_samples = 0;
  std::uint64_t plate_seed = 0, validate_seed = 0;
  bool exact_delta = false;
  double tolerance = 0.0;

  CLI::App* chi_cmd = app.add_subcommand(
      "chi", "Process matrix of a gate under amplitude and phase relaxation");
  add_gate_opts(chi_cmd, &chi_gate);
  add_output_opts(chi_cmd, &chi_out);

  CLI::App* neg_cmd = app.add_subcommand(
      "negativity",
      "Relative-state negativity dynamics across the sliced gate");
  add_gate_opts(neg_cmd, &neg_gate);
  add_output_opts(neg_cmd, &neg_out);

  CLI::App* purity_cmd = app.add_subcommand(
      "plate-purity", "Plate purity versus thickness for a spectrum");
  add_plate_opts(purity_cmd, &purity_plate, true);
  purity_cmd->add_option("--h-min", h_min, "Smallest thickness (micrometers)")
      ->capture_default_str();
  purity_cmd->add_option("--h-max", h_max, "Largest thickness (micrometers)")
      ->capture_default_str();
  purity_cmd->add_option("--steps", steps, "Number of thickness samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_opts(purity_cmd, &purity_out);

  CLI::App* plate_cmd = app.add_subcommand(
      "plate-chi",
      "Analytic plate process matrix, optionally checked against Monte-Carlo "
      "spectral averaging");
  plate_cmd->set_help_flag("--help", "Print this help message and exit");
  add_plate_opts(plate_cmd, &chi_plate, false);
  plate_cmd->add_option("--h", plate_h, "Plate thickness (micrometers)")
      ->check(CLI::PositiveNumber)
      ->required();
  plate_cmd->add_option("--oracle", oracle_samples,
                        "Monte-Carlo oracle sample count")
      ->check(CLI::PositiveNumber);
  plate_cmd->add_option("--seed", plate_seed, "Oracle sampling seed")
      ->capture_default_str();
  plate_cmd->add_flag("--exact-delta", exact_delta,
                      "Sample the exact optical length instead of the "
                      "linearized one");
  plate_cmd->add_option("--tolerance", tolerance,
                        "Fail (exit 2) when the oracle trace distance exceeds "
                        "this");
  add_output_opts(plate_cmd, &plate_out);

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Run the library invariant suite and report pass/fail");
  validate_cmd->add_option("--seed", validate_seed, "Randomized-check seed")
      ->capture_default_str();
  validate_cmd->add_option("-o,--out", validate_out.path,
                           "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (chi_cmd->parsed()) return run_chi(chi_gate, chi_out);
    if (neg_cmd->parsed()) return run_negativity(neg_gate, neg_out);
    if (purity_cmd->parsed())
      return run_plate_purity(purity_plate, h_min, h_max, steps, purity_out);
    if (plate_cmd->parsed())
      return run_plate_chi(chi_plate, plate_h, oracle_samples, plate_seed,
                           exact_delta, tolerance, plate_out);
    if (validate_cmd->parsed())
      return run_validate(validate_seed, validate_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
