#include <random>

#include "doctest.h"
#include "iqpc/errors.hpp"
#include "iqpc/format.hpp"
#include "testutil.hpp"

using namespace iqpc;

TEST_CASE("minimal circuit parses") {
  const Circuit c = parse_circuit("qubits 1\nkind iqp-z\noutput 0\n");
  CHECK(c.n_lines == 1);
  CHECK(c.kind == CircuitKind::iqp_z);
  CHECK(c.gates.empty());
  CHECK(c.output == std::vector<std::uint32_t>{0});
  CHECK(c.postselect.empty());
}

TEST_CASE("comments and blank lines are ignored") {
  const Circuit c = parse_circuit(
      "# header comment\n"
      "qubits 2   # trailing comment\n"
      "\n"
      "kind iqp-x\n"
      "output 1 0\n"
      "gate X 2 0 1 L:3\n");
  CHECK(c.n_lines == 2);
  CHECK(c.output == std::vector<std::uint32_t>{1, 0});
  REQUIRE(c.gates.size() == 1);
  CHECK(std::get<ParityGate>(c.gates[0]).theta == PhaseValue::lattice(3));
}

TEST_CASE("serialize is canonical and parse inverts it") {
  const char* text =
      "kind iqp-x\n"
      "gate D 1 0 L:2,14\n"
      "qubits 3\n"
      "gate X 2 1 2 R:0.25\n"
      "output 2\n"
      "gate D 2 0 2 L:0,0,0,8\n";
  const Circuit c = parse_circuit(text);
  const std::string canonical = serialize_circuit(c);
  CHECK(parse_circuit(canonical) == c);
  // idempotence
  CHECK(serialize_circuit(parse_circuit(canonical)) == canonical);
}

TEST_CASE("gate/kind mismatch is a parse diagnostic") {
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nkind iqp-x\noutput 0\ngate H 0\n"),
                       doctest::Contains("not permitted by kind"), ParseError);
}

TEST_CASE("syntax errors carry line numbers") {
  try {
    parse_circuit("qubits 1\nkind iqp-z\nfrobnicate 3\noutput 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(doctest::String(e.what()).find("line 3") != doctest::String::npos);
  }

  try {
    parse_circuit("qubits 1\nkind iqp-z\noutput 0\ngate D 1 0 L:1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);  // table length 1 for arity 1 (needs 2)
  }
}

TEST_CASE("structural problems are rejected") {
  CHECK_THROWS_AS(parse_circuit("kind iqp-z\noutput 0\n"), ParseError);       // no qubits
  CHECK_THROWS_AS(parse_circuit("qubits 1\noutput 0\n"), ParseError);         // no kind
  CHECK_THROWS_AS(parse_circuit("qubits 1\nkind iqp-z\n"), ParseError);       // no output
  CHECK_THROWS_AS(parse_circuit("qubits 1\nkind iqp-z\noutput 0\noutput 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nkind iqp-z\noutput 0\npostselect 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 1\nkind bogus\noutput 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nkind iqp-z\noutput 0\nrelabel 1 1\n"), ParseError);
}

TEST_CASE("round-trip on a generated corpus") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; i++) {
    const Circuit c = testutil::random_any_circuit(rng);
    CAPTURE(i);
    const std::string text = serialize_circuit(c);
    Circuit back = parse_circuit(text);
    // explicit identity relabels canonicalize to empty; nothing else changes
    Circuit expect = c;
    bool identity = true;
    for (std::size_t j = 0; j < expect.relabel.size(); j++) identity &= expect.relabel[j] == j;
    if (identity) expect.relabel.clear();
    CHECK(back == expect);
  }
}

TEST_CASE("distribution documents round-trip") {
  Distribution d;
  d.width = 2;
  d.probs = {{0, 0.25}, {1, 0.25}, {2, 0.5}};
  const std::string text = serialize_distribution(d);
  CHECK(parse_distribution(text) == d);
  // line-0 bit is printed leftmost: key 1 renders as "10"
  CHECK(text.find("10 0.25") != std::string::npos);
  CHECK(text.find("01 0.5") != std::string::npos);
}

TEST_CASE("bad distribution documents are rejected") {
  CHECK_THROWS_AS(parse_distribution("width 1\n0 0.5\n"), ParseError);          // not normalized
  CHECK_THROWS_AS(parse_distribution("width 1\n0 0.5\n0 0.5\n"), ParseError);   // duplicate key
  CHECK_THROWS_AS(parse_distribution("width 2\n0 1.0\n"), ParseError);          // width mismatch
  CHECK_THROWS_AS(parse_distribution("0 1.0\n"), ParseError);                   // missing width
}

TEST_CASE("sample documents round-trip and check their totals") {
  SampleBatch b;
  b.seed = 42;
  b.shots = 10;
  b.width = 1;
  b.tallies = {{0, 3}, {1, 7}};
  CHECK(parse_samples(serialize_samples(b)) == b);
  CHECK_THROWS_AS(parse_samples("seed 0\nshots 5\nwidth 1\n0 3\n1 3\n"), ParseError);
}
