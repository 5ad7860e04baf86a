#include <random>

#include "doctest.h"
#include "iqpc/gate.hpp"
#include "testutil.hpp"

using namespace iqpc;

TEST_CASE("named gates expand to the documented lattice tables") {
  const DenseGate z = named_to_dense(NamedGate{NamedKind::Z, {0}});
  CHECK(z.table == std::vector<PhaseValue>{PhaseValue::lattice(0), PhaseValue::lattice(8)});

  const DenseGate cz = named_to_dense(NamedGate{NamedKind::CZ, {0, 1}});
  CHECK(cz.table == std::vector<PhaseValue>{PhaseValue::lattice(0), PhaseValue::lattice(0),
                                            PhaseValue::lattice(0), PhaseValue::lattice(8)});

  const DenseGate p = named_to_dense(NamedGate{NamedKind::P, {0}});
  CHECK(p.table == std::vector<PhaseValue>{PhaseValue::lattice(1), PhaseValue::lattice(15)});

  CHECK_THROWS_AS(named_to_dense(NamedGate{NamedKind::H, {0}}), std::invalid_argument);
}

TEST_CASE("gate_phase on dense tables indexes little-endian") {
  // CZ as dense: phase -1 exactly on |11>
  const Gate cz = testutil::dense_cz(0, 1);
  CHECK(gate_phase(cz, 0b11) == PhaseValue::lattice(8));
  CHECK(gate_phase(cz, 0b01) == PhaseValue::lattice(0));

  // bit i of the index is the bit on the i-th listed line: (line4=1, line7=1)
  // means index 1 + 2*1 = 3
  DenseGate d;
  d.lines = {4, 7};
  d.table = {PhaseValue::lattice(0), PhaseValue::lattice(1), PhaseValue::lattice(2),
             PhaseValue::lattice(3)};
  CHECK(gate_phase(Gate{d}, 0b11) == PhaseValue::lattice(3));
  CHECK(gate_phase(Gate{d}, 0b01) == PhaseValue::lattice(1));  // line4=1, line7=0
  CHECK(gate_phase(Gate{d}, 0b10) == PhaseValue::lattice(2));  // line4=0, line7=1
}

TEST_CASE("gate_phase on parity gates flips with bit parity") {
  ParityGate g;
  g.theta = PhaseValue::radians(0.3);
  g.lines = {0, 1, 2};
  CHECK(gate_phase(Gate{g}, 0b101) == PhaseValue::radians(0.3));  // even parity
  CHECK(gate_phase(Gate{g}, 0b100) == PhaseValue::radians(0.3).negated());
  CHECK(gate_phase(Gate{g}, 0) == PhaseValue::radians(0.3));
}

TEST_CASE("gate_phase rejects patterns wider than the gate") {
  const Gate cz = testutil::dense_cz(0, 1);
  CHECK_THROWS_AS(gate_phase(cz, 0b100), std::invalid_argument);
  CHECK_THROWS_AS(gate_phase(Gate{NamedGate{NamedKind::Z, {0}}}, 0), std::invalid_argument);
}

TEST_CASE("parity gates agree with their dense expansion on every pattern") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> t16(0, 15);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (std::size_t arity = 1; arity <= 10; arity++) {
    ParityGate g;
    g.theta = arity % 2 ? PhaseValue::lattice(t16(rng)) : PhaseValue::radians(angle(rng));
    for (std::uint32_t l = 0; l < arity; l++) g.lines.push_back(l * 3);
    const DenseGate d = parity_to_dense(g);
    REQUIRE(d.table.size() == (std::size_t{1} << arity));
    for (std::uint64_t bits = 0; bits < d.table.size(); bits++) {
      CHECK(gate_phase(Gate{g}, bits) == gate_phase(Gate{d}, bits));
    }
  }
}
