#include "doctest.h"
#include "iqpc/circuit.hpp"
#include "testutil.hpp"

using namespace iqpc;
using testutil::make_circuit;

namespace {

bool has_violation(const std::vector<Violation>& v, ViolationKind kind) {
  for (const auto& x : v) {
    if (x.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("well-formed circuits validate cleanly") {
  auto c = make_circuit(CircuitKind::universal, 2, {testutil::H(0), testutil::CZ(0, 1)}, {0}, {1});
  CHECK(validate(c).empty());

  auto z = make_circuit(CircuitKind::iqp_z, 2, {testutil::dense_cz(0, 1)}, {0, 1});
  CHECK(validate(z).empty());
}

TEST_CASE("register violations") {
  auto c = make_circuit(CircuitKind::iqp_z, 3, {}, {0, 1}, {1, 2});
  CHECK(has_violation(validate(c), ViolationKind::RegisterOverlap));

  auto dup = make_circuit(CircuitKind::iqp_z, 3, {}, {0, 0});
  CHECK(has_violation(validate(dup), ViolationKind::DuplicateRegisterLine));

  auto empty = make_circuit(CircuitKind::iqp_z, 1, {}, {});
  CHECK(has_violation(validate(empty), ViolationKind::EmptyOutput));

  auto range = make_circuit(CircuitKind::iqp_z, 1, {}, {3});
  CHECK(has_violation(validate(range), ViolationKind::LineOutOfRange));
}

TEST_CASE("gate violations") {
  DenseGate bad;
  bad.lines = {0, 1};
  bad.table = {PhaseValue::lattice(0), PhaseValue::lattice(0), PhaseValue::lattice(0)};
  auto c = make_circuit(CircuitKind::iqp_z, 2, {Gate{bad}}, {0});
  CHECK(has_violation(validate(c), ViolationKind::TableLength));

  auto mixed = make_circuit(CircuitKind::iqp_x, 1, {testutil::H(0)}, {0});
  CHECK(has_violation(validate(mixed), ViolationKind::KindGateMismatch));

  auto named_in_iqp = make_circuit(CircuitKind::universal, 2, {testutil::dense_cz(0, 1)}, {0});
  CHECK(has_violation(validate(named_in_iqp), ViolationKind::KindGateMismatch));

  NamedGate wide_cz{NamedKind::CZ, {0, 1, 2}};
  auto arity = make_circuit(CircuitKind::universal, 3, {Gate{wide_cz}}, {0});
  CHECK(has_violation(validate(arity), ViolationKind::NamedArity));

  NamedGate dup_cz{NamedKind::CZ, {1, 1}};
  auto dup = make_circuit(CircuitKind::universal, 2, {Gate{dup_cz}}, {0});
  CHECK(has_violation(validate(dup), ViolationKind::DuplicateLine));

  ParityGate empty_parity;
  empty_parity.theta = PhaseValue::lattice(1);
  auto ep = make_circuit(CircuitKind::iqp_z, 1, {Gate{empty_parity}}, {0});
  CHECK(has_violation(validate(ep), ViolationKind::EmptyParity));
}

TEST_CASE("dense arity cap is configurable") {
  DenseGate wide;
  for (std::uint32_t l = 0; l < 5; l++) wide.lines.push_back(l);
  wide.table.assign(32, PhaseValue::lattice(0));
  auto c = make_circuit(CircuitKind::iqp_z, 5, {Gate{wide}}, {0});
  CHECK(validate(c).empty());
  CHECK(has_violation(validate(c, 4), ViolationKind::ArityCap));
}

TEST_CASE("relabel must be a permutation") {
  auto c = make_circuit(CircuitKind::iqp_z, 3, {}, {0});
  c.relabel = {0, 1, 2};
  CHECK(validate(c).empty());
  c.relabel = {0, 1};
  CHECK(has_violation(validate(c), ViolationKind::BadRelabel));
  c.relabel = {0, 1, 1};
  CHECK(has_violation(validate(c), ViolationKind::BadRelabel));
}
