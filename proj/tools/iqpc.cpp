// Copyright 2026 The iqpc Authors
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

// Command-line front end: compile universal circuits to post-selected iqp-z
// form, simulate and sample circuit files, and check simulation-accuracy
// metrics between distribution files.
//
// Exit codes: 0 success / checks passed, 1 a verification check failed,
// 2 input error, 3 resource cap exceeded, 4 degenerate post-selection.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "iqpc/compiler.hpp"
#include "iqpc/errors.hpp"
#include "iqpc/fast_sampler.hpp"
#include "iqpc/format.hpp"
#include "iqpc/metrics.hpp"
#include "iqpc/statevector.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitZeroMass = 4;

struct RunConfig {
  std::string command;
  std::string verify_metric;
  std::vector<std::string> inputs;
  std::string out_path;

  std::string seed_spec = "0";
  std::uint64_t shots = 1024;
  std::string backend = "auto";

  std::uint32_t cap_qubits = iqpc::kDefaultQubitCap;
  int cap_outputs = iqpc::kDefaultOutputCap;
  int cap_enum = iqpc::kDefaultEnumCap;

  bool to_z = false;
  bool to_x = false;
  bool use_exact_average = false;
  std::string dump_amps_path;

  double delta = 0.25;
  double c_override = 0;  // 0 = derive exactly from the inputs
  int output_bits = 0;
};

std::uint64_t resolve_seed(const std::string& spec) {
  if (spec == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  return std::strtoull(spec.c_str(), nullptr, 10);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    std::cout << text;
  } else {
    iqpc::write_text_file(cfg.out_path, text);
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

iqpc::Circuit load_circuit(const std::string& path) {
  return iqpc::parse_circuit(iqpc::read_text_file(path));
}

iqpc::Circuit as_iqp_z(const iqpc::Circuit& c, const char* who) {
  if (c.kind == iqpc::CircuitKind::iqp_z) return c;
  if (c.kind == iqpc::CircuitKind::iqp_x) return iqpc::to_z_form(c);
  throw std::invalid_argument(std::string(who) + ": universal circuits must be compiled first");
}

int cmd_compile(const RunConfig& cfg) {
  iqpc::Circuit c = load_circuit(cfg.inputs[0]);
  if (cfg.to_z && cfg.to_x) throw std::invalid_argument("--to-z and --to-x are exclusive");

  if (cfg.to_z) {
    emit(cfg, iqpc::serialize_circuit(iqpc::to_z_form(c)));
    return kExitOk;
  }
  if (cfg.to_x) {
    emit(cfg, iqpc::serialize_circuit(iqpc::to_x_form(c)));
    return kExitOk;
  }
  auto [compiled, report] = iqpc::gadgetize(c);
  emit(cfg, iqpc::gadget_report_comments(report) + iqpc::serialize_circuit(compiled));
  std::cerr << "gadgetized: " << report.ancillas_added << " ancilla(s), "
            << report.postselects_added << " postselect(s)\n";
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg) {
  iqpc::Circuit c = load_circuit(cfg.inputs[0]);

  if (!cfg.dump_amps_path.empty()) {
    iqpc::StateVector sv = iqpc::run_statevector(c, cfg.cap_qubits);
    std::string dump;
    char buf[80];
    for (std::size_t i = 0; i < sv.amps.size(); i++) {
      std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", i, sv.amps[i].real(),
                    sv.amps[i].imag());
      dump += buf;
    }
    iqpc::write_text_file(cfg.dump_amps_path, dump);
  }

  iqpc::Distribution dist;
  if (cfg.use_exact_average) {
    iqpc::Circuit z = as_iqp_z(c, "--exact-average");
    if (!z.postselect.empty()) {
      throw std::invalid_argument("--exact-average computes the unconditioned output marginal; "
                                  "drop the postselect register or use the exact backend");
    }
    dist = iqpc::exact_average(z, cfg.cap_enum, cfg.cap_outputs);
  } else {
    dist = iqpc::conditional_distribution(c, cfg.cap_qubits);
  }
  emit(cfg, iqpc::serialize_distribution(dist));
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg) {
  iqpc::Circuit c = load_circuit(cfg.inputs[0]);
  const std::uint64_t seed = resolve_seed(cfg.seed_spec);

  std::string backend = cfg.backend;
  if (backend == "auto") {
    const bool fast_ok = c.kind != iqpc::CircuitKind::universal && c.postselect.empty() &&
                         static_cast<int>(c.output.size()) <= cfg.cap_outputs;
    backend = fast_ok ? "fast" : "exact";
  }

  iqpc::SampleBatch batch;
  if (backend == "fast") {
    batch = iqpc::sample_fast(as_iqp_z(c, "sample --backend fast"), seed, cfg.shots,
                              cfg.cap_outputs);
  } else if (backend == "exact") {
    batch = iqpc::sample_bitchain(c, seed, cfg.shots, cfg.cap_qubits);
  } else {
    throw std::invalid_argument("unknown backend '" + backend + "'");
  }
  emit(cfg, iqpc::serialize_samples(batch));
  return kExitOk;
}

int verify_ratio(const RunConfig& cfg) {
  auto a = iqpc::parse_distribution(iqpc::read_text_file(cfg.inputs[0]));
  auto b = iqpc::parse_distribution(iqpc::read_text_file(cfg.inputs[1]));
  auto r = iqpc::multiplicative_ratio(a, b);
  std::string out = "metric ratio\n";
  if (r.unbounded) {
    out += "c_min unbounded\n";
    out += "witness " + iqpc::outcome_to_string(r.witness, a.width) + "\n";
  } else {
    out += "c_min " + format_double(r.c_min) + "\n";
    out += "witness " + iqpc::outcome_to_string(r.witness, a.width) + "\n";
  }
  emit(cfg, out);
  return kExitOk;
}

int verify_tv(const RunConfig& cfg) {
  auto a = iqpc::parse_distribution(iqpc::read_text_file(cfg.inputs[0]));
  auto b = iqpc::parse_distribution(iqpc::read_text_file(cfg.inputs[1]));
  emit(cfg, "metric tv\nvalue " + format_double(iqpc::tv_distance(a, b)) + "\n");
  return kExitOk;
}

int verify_sandwich(const RunConfig& cfg) {
  auto truth = iqpc::parse_distribution(iqpc::read_text_file(cfg.inputs[0]));
  auto sim = iqpc::parse_distribution(iqpc::read_text_file(cfg.inputs[1]));
  if (cfg.output_bits <= 0) throw std::invalid_argument("--outputs must be positive");

  double c = cfg.c_override;
  if (c <= 0) c = iqpc::exact_sandwich_ratio(truth, sim, cfg.output_bits);

  std::string out = "metric sandwich\n";
  if (!std::isfinite(c)) {
    out += "c unbounded\nholds no\n";
    emit(cfg, out);
    return kExitCheckFailed;
  }
  auto s = iqpc::postselected_statistic(truth, cfg.output_bits);
  auto s_tilde = iqpc::postselected_statistic(sim, cfg.output_bits);
  auto res = iqpc::sandwich_check(s, s_tilde, c);
  out += "c " + format_double(c) + "\n";
  out += std::string("holds ") + (res.holds ? "yes" : "no") + "\n";
  if (!res.holds) {
    out += "worst " + iqpc::outcome_to_string(res.worst_outcome, s.width) + " " +
           format_double(res.worst_violation) + "\n";
  }
  emit(cfg, out);
  return res.holds ? kExitOk : kExitCheckFailed;
}

int verify_decide(const RunConfig& cfg) {
  iqpc::Circuit c = load_circuit(cfg.inputs[0]);
  auto outcome = iqpc::decide(c, cfg.delta, cfg.cap_qubits);
  std::string out = "metric decide\n";
  out += "s1 " + format_double(outcome.s1) + "\n";
  out += "delta " + format_double(outcome.delta_used) + "\n";
  out += std::string("verdict ") + iqpc::verdict_name(outcome.verdict) + "\n";
  emit(cfg, out);
  return kExitOk;
}

int verify_check_gadget(const RunConfig& cfg) {
  iqpc::Circuit c = load_circuit(cfg.inputs[0]);
  auto [compiled, report] = iqpc::gadgetize(c);

  auto original = iqpc::conditional_distribution(c, cfg.cap_qubits);
  auto lowered = iqpc::conditional_distribution(compiled, cfg.cap_qubits);

  double max_dev = 0;
  std::uint64_t worst = 0;
  for (const auto& [key, p] : original.probs) {
    const double dev = std::abs(p - lowered.prob(key));
    if (dev > max_dev) max_dev = dev, worst = key;
  }
  for (const auto& [key, p] : lowered.probs) {
    const double dev = std::abs(p - original.prob(key));
    if (dev > max_dev) max_dev = dev, worst = key;
  }
  const bool restricted = iqpc::check_restricted_phases(compiled);
  const bool pass = max_dev < 1e-10 && restricted;

  std::string out = "metric check-gadget\n";
  out += "ancillas " + std::to_string(report.ancillas_added) + "\n";
  out += "max_deviation " + format_double(max_dev) + "\n";
  out += "worst " + iqpc::outcome_to_string(worst, original.width) + "\n";
  out += std::string("restricted_phases ") + (restricted ? "yes" : "no") + "\n";
  out += std::string("verdict ") + (pass ? "pass" : "fail") + "\n";
  emit(cfg, out);
  return pass ? kExitOk : kExitCheckFailed;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "compile") return cmd_compile(cfg);
  if (cfg.command == "simulate") return cmd_simulate(cfg);
  if (cfg.command == "sample") return cmd_sample(cfg);
  if (cfg.command == "verify") {
    if (cfg.verify_metric == "ratio") return verify_ratio(cfg);
    if (cfg.verify_metric == "tv") return verify_tv(cfg);
    if (cfg.verify_metric == "sandwich") return verify_sandwich(cfg);
    if (cfg.verify_metric == "decide") return verify_decide(cfg);
    if (cfg.verify_metric == "check-gadget") return verify_check_gadget(cfg);
  }
  throw std::invalid_argument("no command selected");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"iqpc: compile, simulate, sample and verify IQP circuit files"};
  app.require_subcommand(1);

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--cap-qubits", cfg.cap_qubits, "statevector line cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap-outputs", cfg.cap_outputs, "fast-sampler output register cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap-enum", cfg.cap_enum, "exact-average enumeration cap")
        ->check(CLI::PositiveNumber);
  };

  auto* compile = app.add_subcommand("compile", "lower a universal circuit to iqp-z form");
  compile->add_option("input", cfg.inputs, "circuit file")->required()->expected(1);
  compile->add_option("--out", cfg.out_path, "output file (default stdout)");
  compile->add_flag("--to-z", cfg.to_z, "retag an iqp-x circuit as iqp-z");
  compile->add_flag("--to-x", cfg.to_x, "retag an iqp-z circuit as iqp-x");

  auto* simulate = app.add_subcommand("simulate", "exact output distribution of a circuit");
  simulate->add_option("input", cfg.inputs, "circuit file")->required()->expected(1);
  simulate->add_option("--out", cfg.out_path, "output file (default stdout)");
  simulate->add_flag("--exact-average", cfg.use_exact_average,
                     "enumerate the fast sampler's exact output marginal");
  simulate->add_option("--dump-amps", cfg.dump_amps_path, "also write raw amplitudes to a file");
  add_caps(simulate);

  auto* sample = app.add_subcommand("sample", "draw seeded shots from a circuit");
  sample->add_option("input", cfg.inputs, "circuit file")->required()->expected(1);
  sample->add_option("--out", cfg.out_path, "output file (default stdout)");
  sample->add_option("--seed", cfg.seed_spec, "64-bit seed, or 'random'")
      ->capture_default_str();
  sample->add_option("--shots", cfg.shots, "number of shots")->check(CLI::PositiveNumber);
  sample->add_option("--backend", cfg.backend, "auto|fast|exact")->capture_default_str();
  add_caps(sample);

  auto* verify = app.add_subcommand("verify", "simulation-accuracy metrics and checks");
  verify->require_subcommand(1);
  auto add_verify_sub = [&](const std::string& name, const std::string& desc, int n_inputs) {
    auto* sub = verify->add_subcommand(name, desc);
    sub->add_option("inputs", cfg.inputs, "input files")->required()->expected(n_inputs);
    sub->add_option("--out", cfg.out_path, "report file (default stdout)");
    sub->callback([&cfg, name] { cfg.verify_metric = name; });
    return sub;
  };
  add_verify_sub("ratio", "multiplicative error between two distribution files", 2);
  add_verify_sub("tv", "total variation (unhalved) between two distribution files", 2);
  auto* sandwich =
      add_verify_sub("sandwich", "post-selected statistic sandwich between two joint files", 2);
  sandwich->add_option("--outputs", cfg.output_bits, "output-register bit count")->required();
  sandwich->add_option("--c", cfg.c_override, "multiplicative error (default: exact from inputs)");
  auto* dec = add_verify_sub("decide", "accept/reject a single-output-line circuit", 1);
  dec->add_option("--delta", cfg.delta, "decision margin in (0, 1/2)")->required();
  dec->add_option("--cap-qubits", cfg.cap_qubits, "statevector line cap");
  auto* gadget = add_verify_sub("check-gadget", "compile and compare against the dense oracle", 1);
  gadget->add_option("--cap-qubits", cfg.cap_qubits, "statevector line cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg);
  } catch (const iqpc::ZeroPostselectionMass& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitZeroMass;
  } catch (const iqpc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const iqpc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
