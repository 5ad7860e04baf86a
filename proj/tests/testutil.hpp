#ifndef IQPC_TESTS_TESTUTIL_HPP
#define IQPC_TESTS_TESTUTIL_HPP

// Shared generators and small independent oracles for the test suites. The
// oracles here deliberately avoid the library's own code paths where a test
// is meant to cross-check one.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "iqpc/circuit.hpp"
#include "iqpc/compiler.hpp"
#include "iqpc/distribution.hpp"
#include "iqpc/errors.hpp"
#include "iqpc/statevector.hpp"

namespace testutil {

using Cx = std::complex<double>;

inline iqpc::Gate H(std::uint32_t l) { return iqpc::NamedGate{iqpc::NamedKind::H, {l}}; }
inline iqpc::Gate Z(std::uint32_t l) { return iqpc::NamedGate{iqpc::NamedKind::Z, {l}}; }
inline iqpc::Gate P(std::uint32_t l) { return iqpc::NamedGate{iqpc::NamedKind::P, {l}}; }
inline iqpc::Gate CZ(std::uint32_t a, std::uint32_t b) {
  return iqpc::NamedGate{iqpc::NamedKind::CZ, {a, b}};
}

inline iqpc::Gate dense_cz(std::uint32_t a, std::uint32_t b) {
  return iqpc::DenseGate{{a, b},
                         {iqpc::PhaseValue::lattice(0), iqpc::PhaseValue::lattice(0),
                          iqpc::PhaseValue::lattice(0), iqpc::PhaseValue::lattice(8)}};
}

inline iqpc::Circuit make_circuit(iqpc::CircuitKind kind, std::uint32_t n,
                                  std::vector<iqpc::Gate> gates,
                                  std::vector<std::uint32_t> output,
                                  std::vector<std::uint32_t> postselect = {}) {
  iqpc::Circuit c;
  c.kind = kind;
  c.n_lines = n;
  c.gates = std::move(gates);
  c.output = std::move(output);
  c.postselect = std::move(postselect);
  return c;
}

// ---------------------------------------------------------------------------
// random circuit generators

inline std::vector<std::uint32_t> pick_distinct(std::mt19937_64& rng, std::uint32_t n,
                                                std::size_t count) {
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0u);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

inline iqpc::Circuit random_universal(std::mt19937_64& rng, int max_lines, int max_gates,
                                      double h_weight = 0.25, bool allow_postselect = true) {
  std::uniform_int_distribution<int> lines_dist(2, max_lines);
  const std::uint32_t n = static_cast<std::uint32_t>(lines_dist(rng));
  std::uniform_int_distribution<int> gates_dist(1, max_gates);
  const int n_gates = gates_dist(rng);

  iqpc::Circuit c;
  c.kind = iqpc::CircuitKind::universal;
  c.n_lines = n;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> line(0, n - 1);
  for (int i = 0; i < n_gates; i++) {
    const double r = u01(rng);
    if (r < h_weight) {
      c.gates.push_back(H(line(rng)));
    } else if (r < h_weight + (1 - h_weight) / 3) {
      c.gates.push_back(Z(line(rng)));
    } else if (r < h_weight + 2 * (1 - h_weight) / 3) {
      c.gates.push_back(P(line(rng)));
    } else {
      auto ab = pick_distinct(rng, n, 2);
      c.gates.push_back(CZ(ab[0], ab[1]));
    }
  }

  std::uniform_int_distribution<std::size_t> out_size(1, std::min<std::size_t>(3, n));
  c.output = pick_distinct(rng, n, out_size(rng));
  if (allow_postselect && n >= 2 && u01(rng) < 0.3) {
    for (std::uint32_t l = 0; l < n; l++) {
      if (std::find(c.output.begin(), c.output.end(), l) == c.output.end()) {
        c.postselect = {l};
        break;
      }
    }
  }
  return c;
}

// Random universal circuit whose gadget lowering stays within `line_budget`
// physical lines and whose post-selection (if any) has nonzero mass, so the
// dense oracle can check it.
inline iqpc::Circuit random_universal_bounded(std::mt19937_64& rng, int max_lines, int max_gates,
                                              std::uint32_t line_budget) {
  for (;;) {
    iqpc::Circuit c = random_universal(rng, max_lines, max_gates);
    auto [compiled, report] = iqpc::gadgetize(c);
    if (compiled.n_lines > line_budget) continue;
    try {
      (void)iqpc::conditional_distribution(c);
    } catch (const iqpc::ZeroPostselectionMass&) {
      continue;
    }
    return c;
  }
}

inline iqpc::Circuit random_lattice_iqp(std::mt19937_64& rng, std::uint32_t n, std::size_t m_out,
                                        int n_gates, iqpc::CircuitKind kind = iqpc::CircuitKind::iqp_z) {
  iqpc::Circuit c;
  c.kind = kind;
  c.n_lines = n;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> t16(0, 15);
  for (int i = 0; i < n_gates; i++) {
    if (u01(rng) < 0.7) {
      std::uniform_int_distribution<std::size_t> arity(1, std::min<std::size_t>(3, n));
      iqpc::DenseGate g;
      g.lines = pick_distinct(rng, n, arity(rng));
      g.table.resize(std::size_t{1} << g.lines.size());
      for (auto& p : g.table) p = iqpc::PhaseValue::lattice(t16(rng));
      c.gates.push_back(std::move(g));
    } else {
      std::uniform_int_distribution<std::size_t> arity(1, std::min<std::size_t>(4, n));
      iqpc::ParityGate g;
      g.lines = pick_distinct(rng, n, arity(rng));
      g.theta = iqpc::PhaseValue::lattice(t16(rng));
      c.gates.push_back(std::move(g));
    }
  }
  c.output = pick_distinct(rng, n, m_out);
  return c;
}

// Circuit with arbitrary valid content (all kinds, mixed lattice/real
// phases, occasional relabel/postselect) for format round-trip corpora.
inline iqpc::Circuit random_any_circuit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> kind_pick(0, 2);
  const int kind = kind_pick(rng);
  if (kind == 0) {
    return random_universal(rng, 6, 12);
  }

  std::uniform_int_distribution<std::uint32_t> lines_dist(1, 8);
  const std::uint32_t n = lines_dist(rng);
  std::uniform_int_distribution<int> gates_dist(0, 10);
  iqpc::Circuit c;
  c.kind = kind == 1 ? iqpc::CircuitKind::iqp_x : iqpc::CircuitKind::iqp_z;
  c.n_lines = n;
  std::uniform_int_distribution<int> t16(0, 15);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  const int n_gates = gates_dist(rng);
  for (int i = 0; i < n_gates; i++) {
    const bool lattice = u01(rng) < 0.5;
    auto phase = [&] {
      return lattice ? iqpc::PhaseValue::lattice(t16(rng)) : iqpc::PhaseValue::radians(angle(rng));
    };
    if (u01(rng) < 0.6) {
      std::uniform_int_distribution<std::size_t> arity(1, std::min<std::size_t>(3, n));
      iqpc::DenseGate g;
      g.lines = pick_distinct(rng, n, arity(rng));
      g.table.resize(std::size_t{1} << g.lines.size());
      for (auto& p : g.table) p = phase();
      c.gates.push_back(std::move(g));
    } else {
      std::uniform_int_distribution<std::size_t> arity(1, n);
      iqpc::ParityGate g;
      g.lines = pick_distinct(rng, n, arity(rng));
      g.theta = phase();
      c.gates.push_back(std::move(g));
    }
  }
  std::uniform_int_distribution<std::size_t> out_size(1, n);
  c.output = pick_distinct(rng, n, out_size(rng));
  if (n >= 2 && u01(rng) < 0.4) {
    for (std::uint32_t l = 0; l < n; l++) {
      if (std::find(c.output.begin(), c.output.end(), l) == c.output.end()) {
        c.postselect = {l};
        break;
      }
    }
  }
  if (u01(rng) < 0.25) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    c.relabel = perm;
  }
  return c;
}

// ---------------------------------------------------------------------------
// random distributions

inline iqpc::Distribution random_distribution(std::mt19937_64& rng, int width,
                                              double support_density = 0.8) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  iqpc::Distribution d;
  d.width = width;
  double total = 0;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << width); k++) {
    if (u01(rng) < support_density) {
      const double w = -std::log(u01(rng) + 1e-300);
      d.probs[k] = w;
      total += w;
    }
  }
  if (d.probs.empty()) {
    d.probs[0] = 1;
    return d;
  }
  for (auto& [_, p] : d.probs) p /= total;
  return d;
}

// Multiplicative corruption with the same support: each entry scaled by a
// factor in [1/kappa, kappa], then renormalized.
inline iqpc::Distribution perturb_multiplicative(std::mt19937_64& rng,
                                                 const iqpc::Distribution& p, double kappa) {
  std::uniform_real_distribution<double> logu(-std::log(kappa), std::log(kappa));
  iqpc::Distribution r;
  r.width = p.width;
  double total = 0;
  for (const auto& [k, v] : p.probs) {
    const double w = v * std::exp(logu(rng));
    r.probs[k] = w;
    total += w;
  }
  for (auto& [_, v] : r.probs) v /= total;
  return r;
}

// ---------------------------------------------------------------------------
// small oracles

inline double max_abs_deviation(const iqpc::Distribution& a, const iqpc::Distribution& b) {
  double worst = 0;
  for (const auto& [k, v] : a.probs) worst = std::max(worst, std::abs(v - b.prob(k)));
  for (const auto& [k, v] : b.probs) worst = std::max(worst, std::abs(v - a.prob(k)));
  return worst;
}

inline double fidelity(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  Cx overlap = 0;
  for (std::size_t i = 0; i < a.size(); i++) overlap += std::conj(a[i]) * b[i];
  return std::abs(overlap);
}

inline std::array<Cx, 2> apply_h2(const std::array<Cx, 2>& v) {
  const double s = 1.0 / std::numbers::sqrt2;
  return {(v[0] + v[1]) * s, (v[0] - v[1]) * s};
}

inline std::array<Cx, 2> random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Cx, 2> v{Cx{gauss(rng), gauss(rng)}, Cx{gauss(rng), gauss(rng)}};
  const double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  v[0] /= norm;
  v[1] /= norm;
  return v;
}

// The two-qubit gadget network H_a CZ_ae H_e on psi_a (x) |0>_e, computed by
// hand (a = bit 0, e = bit 1). Returns the unnormalized residual on e after
// projecting line a onto <0|.
inline std::array<Cx, 2> gadget_residual(const std::array<Cx, 2>& psi) {
  std::array<Cx, 4> amp{psi[0], psi[1], 0, 0};  // a (x) |0>_e
  // H on e
  {
    const double s = 1.0 / std::numbers::sqrt2;
    const std::array<Cx, 4> in = amp;
    amp[0] = (in[0] + in[2]) * s;
    amp[2] = (in[0] - in[2]) * s;
    amp[1] = (in[1] + in[3]) * s;
    amp[3] = (in[1] - in[3]) * s;
  }
  amp[3] = -amp[3];  // CZ
  // H on a
  {
    const double s = 1.0 / std::numbers::sqrt2;
    const std::array<Cx, 4> in = amp;
    amp[0] = (in[0] + in[1]) * s;
    amp[1] = (in[0] - in[1]) * s;
    amp[2] = (in[2] + in[3]) * s;
    amp[3] = (in[2] - in[3]) * s;
  }
  return {amp[0], amp[2]};  // <0|_a
}

}  // namespace testutil

#endif
