#include <algorithm>
#include <complex>
#include <random>

#include "doctest.h"
#include "iqpc/metrics.hpp"
#include "iqpc/statevector.hpp"
#include "testutil.hpp"

using namespace iqpc;
using testutil::make_circuit;

TEST_CASE("empty circuit leaves |0...0>") {
  auto c = make_circuit(CircuitKind::universal, 1, {}, {0});
  const StateVector sv = run_statevector(c);
  CHECK(sv.amps[0] == std::complex<double>{1, 0});
  CHECK(sv.amps[1] == std::complex<double>{0, 0});
}

TEST_CASE("H,P,H matches the direct 2x2 matrix product") {
  // independent oracle: multiply the matrices by hand
  const std::array<testutil::Cx, 2> after_h1 = testutil::apply_h2({1, 0});
  std::array<testutil::Cx, 2> after_p{
      after_h1[0] * std::polar(1.0, std::numbers::pi / 8),
      after_h1[1] * std::polar(1.0, -std::numbers::pi / 8),
  };
  const std::array<testutil::Cx, 2> expect = testutil::apply_h2(after_p);

  auto c = make_circuit(CircuitKind::universal, 1, {testutil::H(0), testutil::P(0), testutil::H(0)},
                        {0});
  const StateVector sv = run_statevector(c);
  CHECK(std::abs(sv.amps[0] - expect[0]) < 1e-14);
  CHECK(std::abs(sv.amps[1] - expect[1]) < 1e-14);

  const Distribution d = joint_distribution(c);
  CHECK(d.prob(0) == doctest::Approx((2 + std::numbers::sqrt2) / 4).epsilon(1e-13));
  CHECK(d.prob(1) == doctest::Approx((2 - std::numbers::sqrt2) / 4).epsilon(1e-13));
}

TEST_CASE("the CZ sandwich gives the uniform two-bit distribution") {
  // hand algebra: H(x)H CZ H(x)H |00> has |amp|^2 = 1/4 everywhere
  auto universal = make_circuit(
      CircuitKind::universal, 2,
      {testutil::H(0), testutil::H(1), testutil::CZ(0, 1), testutil::H(0), testutil::H(1)},
      {0, 1});
  auto iqp = make_circuit(CircuitKind::iqp_z, 2, {testutil::dense_cz(0, 1)}, {0, 1});

  for (const Circuit& c : {universal, iqp}) {
    const Distribution d = joint_distribution(c);
    for (std::uint64_t k = 0; k < 4; k++) {
      CHECK(d.prob(k) == doctest::Approx(0.25).epsilon(1e-13));
    }
    CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("iqp-x gates expand by H-conjugation on their support") {
  // a single X-parity gate on one line: U = H Rz(2theta) H acting on |0>
  ParityGate g;
  g.theta = PhaseValue::radians(0.4);
  g.lines = {0};
  auto c = make_circuit(CircuitKind::iqp_x, 1, {Gate{g}}, {0});
  const StateVector sv = run_statevector(c);
  // oracle by hand
  auto v = testutil::apply_h2({1, 0});
  v[0] *= std::polar(1.0, 0.4);
  v[1] *= std::polar(1.0, -0.4);
  v = testutil::apply_h2(v);
  CHECK(std::abs(sv.amps[0] - v[0]) < 1e-14);
  CHECK(std::abs(sv.amps[1] - v[1]) < 1e-14);
}

TEST_CASE("norm is preserved through random circuits") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; i++) {
    const Circuit c = testutil::random_universal(rng, 5, 15);
    CHECK(run_statevector(c).norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
  }
  for (int i = 0; i < 25; i++) {
    const Circuit c = testutil::random_lattice_iqp(rng, 6, 2, 12,
                                                   i % 2 ? CircuitKind::iqp_z : CircuitKind::iqp_x);
    CHECK(run_statevector(c).norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("diagonal gates commute: permuting the sequence changes nothing") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; i++) {
    Circuit c = testutil::random_lattice_iqp(rng, 5, 2, 10);
    const StateVector before = run_statevector(c);
    std::shuffle(c.gates.begin(), c.gates.end(), rng);
    const StateVector after = run_statevector(c);
    for (std::size_t z = 0; z < before.amps.size(); z++) {
      CHECK(std::abs(before.amps[z] - after.amps[z]) < 1e-12);
    }
  }
}

TEST_CASE("statevector cap") {
  auto c = make_circuit(CircuitKind::iqp_z, 8, {}, {0});
  CHECK_THROWS_AS(run_statevector(c, 6), CapExceeded);
}

TEST_CASE("conditional distribution implements the Bayes quotient exactly") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; i++) {
    Circuit c = testutil::random_universal(rng, 5, 12);
    if (c.postselect.empty()) c.postselect = {c.output.back()}, c.output.pop_back();
    if (c.output.empty()) continue;

    const Distribution joint = joint_distribution(c);
    const std::uint64_t limit = std::uint64_t{1} << c.output.size();
    double mass = 0;
    for (const auto& [k, p] : joint.probs) {
      if (k < limit) mass += p;
    }
    if (mass <= 1e-14) {
      CHECK_THROWS_AS(conditional_distribution(c), ZeroPostselectionMass);
      continue;
    }
    const Distribution cond = conditional_distribution(c);
    for (const auto& [k, p] : cond.probs) {
      CHECK(p == joint.prob(k) / mass);  // exact quotient, no tolerance
    }
    CHECK(cond.total() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("empty postselect register means plain output distribution") {
  auto c = make_circuit(CircuitKind::iqp_z, 2, {testutil::dense_cz(0, 1)}, {0, 1});
  CHECK(conditional_distribution(c) == joint_distribution(c));
}

TEST_CASE("impossible postselection raises ZeroPostselectionMass") {
  // line 1 is |0> and never touched, so postselecting on it reading... it
  // reads 0 always; instead postselect a line driven to |1>: Z-sandwich
  // H Z H = X, deterministically flipping line 1 of a universal circuit.
  auto c = make_circuit(CircuitKind::universal, 2,
                        {testutil::H(1), testutil::Z(1), testutil::H(1)}, {0}, {1});
  CHECK_THROWS_AS(conditional_distribution(c), ZeroPostselectionMass);
}

TEST_CASE("marginal sums out discarded positions") {
  Distribution d;
  d.width = 2;
  d.probs = {{0b00, 0.5}, {0b11, 0.5}};

  const std::array<int, 2> all{0, 1};
  CHECK(marginal(d, all) == d);

  const std::array<int, 1> bit1{1};
  const Distribution m = marginal(d, bit1);
  CHECK(m.width == 1);
  CHECK(m.prob(0) == doctest::Approx(0.5));
  CHECK(m.prob(1) == doctest::Approx(0.5));

  Distribution uniform;
  uniform.width = 2;
  uniform.probs = {{0, 0.25}, {1, 0.25}, {2, 0.25}, {3, 0.25}};
  const std::array<int, 1> bit0{0};
  const Distribution u0 = marginal(uniform, bit0);
  CHECK(u0.prob(0) == doctest::Approx(0.5));
  CHECK(u0.prob(1) == doctest::Approx(0.5));

  CHECK_THROWS_AS(marginal(d, std::array<int, 1>{5}), std::invalid_argument);
  CHECK_THROWS_AS(marginal(d, std::array<int, 2>{0, 0}), std::invalid_argument);
}

TEST_CASE("bit-chain sampling: deterministic circuits give constant output") {
  auto c = make_circuit(CircuitKind::universal, 2, {}, {0, 1});
  const SampleBatch b = sample_bitchain(c, 1, 500);
  CHECK(b.tallies.at(0) == 500);
}

TEST_CASE("bit-chain sampling matches the conditional distribution") {
  auto c = make_circuit(CircuitKind::iqp_z, 2, {testutil::dense_cz(0, 1)}, {0, 1});
  const std::uint64_t shots = 100000;
  const SampleBatch b = sample_bitchain(c, 7, shots);

  // binomial 5-sigma window around 25000 per outcome
  const double sigma = std::sqrt(static_cast<double>(shots) * 0.25 * 0.75);
  for (std::uint64_t k = 0; k < 4; k++) {
    const double count = static_cast<double>(b.tallies.at(k));
    CHECK(std::abs(count - 25000.0) < 5 * sigma);
  }

  // empirical TV shrinks with shots; < 0.02 here
  const Distribution truth = conditional_distribution(c);
  double tv = 0;
  for (std::uint64_t k = 0; k < 4; k++) {
    tv += std::abs(static_cast<double>(b.tallies.at(k)) / static_cast<double>(shots) -
                   truth.prob(k));
  }
  CHECK(tv < 0.02);

  CHECK(empirical_check(b, truth).status == EmpiricalReport::Status::pass);
}

TEST_CASE("bit-chain sampling is deterministic per seed") {
  std::mt19937_64 rng(13);
  const Circuit c = testutil::random_lattice_iqp(rng, 5, 3, 8);
  const SampleBatch a = sample_bitchain(c, 99, 2000);
  const SampleBatch b = sample_bitchain(c, 99, 2000);
  CHECK(a == b);
  const SampleBatch other = sample_bitchain(c, 100, 2000);
  CHECK(a.tallies != other.tallies);
}

TEST_CASE("bit-chain sampling respects postselection") {
  // gadgetized H,P,H,P,H: the chain must draw from the conditional law of
  // the compiled circuit, which is the original's output law
  auto u = make_circuit(
      CircuitKind::universal, 1,
      {testutil::H(0), testutil::P(0), testutil::H(0), testutil::P(0), testutil::H(0)}, {0});
  auto [compiled, report] = gadgetize(u);
  const SampleBatch b = sample_bitchain(compiled, 4, 50000);
  CHECK(empirical_check(b, conditional_distribution(u)).status ==
        EmpiricalReport::Status::pass);
}
