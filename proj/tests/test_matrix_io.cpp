#include <doctest.h>

#include "blocknorm/counterexamples.hpp"
#include "blocknorm/errors.hpp"
#include "blocknorm/matrix_io.hpp"
#include "blocknorm/sampling.hpp"
#include "test_util.hpp"

using namespace blocknorm;
using testutil::matrix_close;

TEST_SUITE_BEGIN("matrix_io");

TEST_CASE("full form parses, including a 1x1 scalar") {
  const auto parsed = parse_matrix_text(R"({"size": 1, "entries": [[[1, 0]]]})", "inline");
  const auto m = std::get<ComplexMatrix>(parsed);
  CHECK(m.rows() == 1);
  CHECK(m(0, 0) == Complex(1.0));
}

TEST_CASE("block form parses to the stock counterexample") {
  const auto text = serialize_block(counterexample_T());
  const auto parsed = parse_matrix_text(text, "inline");
  const auto block = std::get<BlockMatrix>(parsed);
  CHECK(matrix_close(block.assemble(), counterexample_T().assemble(), 0.0));
}

TEST_CASE("serialize/parse round-trips are exact") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    CounterRng rng(6001, trial);
    const std::size_t n = 1 + trial % 5;
    const auto full = random_matrix(n, n, rng);
    const auto full_again = std::get<ComplexMatrix>(parse_matrix_text(serialize_full(full), "t"));
    CHECK(full == full_again);

    const auto block = random_psd_block(n, XConstraint::hermitian, rng);
    const auto block_again =
        std::get<BlockMatrix>(parse_matrix_text(serialize_block(block), "t"));
    CHECK(block.a() == block_again.a());
    CHECK(block.x() == block_again.x());
    CHECK(block.b() == block_again.b());
  }
}

TEST_CASE("parse failures carry context") {
  CHECK_THROWS_AS(parse_matrix_text("{not json", "x"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"size": 2})", "x"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"size": 0, "entries": []})", "x"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"entries": [[[1, 0]]]})", "x"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"([1, 2])", "x"), ParseError);
  CHECK_THROWS_AS(
      parse_matrix_text(R"({"size": 2, "entries": [[[1, 0]], [[0, 0], [1, 0]]]})", "x"),
      DimensionError);
  CHECK_THROWS_AS(
      parse_matrix_text(R"({"size": 1, "entries": [[[1, 0, 3]]]})", "x"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(R"({"n": 1, "A": [[[1, 0]]], "X": [[[0, 0]]]})", "x"),
                  ParseError);

  try {
    parse_matrix_text(
        R"({"n": 2,
            "A": [[[1, 0], [2, 0]], [[3, 0], [1, 0]]],
            "X": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
            "B": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})",
        "x");
    FAIL("expected NonHermitianBlock");
  } catch (const NonHermitianBlock& e) {
    CHECK(std::string(e.what()).find("'A'") != std::string::npos);
  }
}

TEST_CASE("require_block splits Hermitian full forms only") {
  const auto full = parse_matrix_text(serialize_full(counterexample_T().assemble()), "t");
  const auto block = require_block(full);
  CHECK(matrix_close(block.assemble(), counterexample_T().assemble(), 0.0));

  const auto odd = parse_matrix_text(R"({"size": 1, "entries": [[[1, 0]]]})", "t");
  CHECK_THROWS_AS(require_block(odd), DimensionError);

  CounterRng rng(6002);
  const auto general = parse_matrix_text(serialize_full(random_matrix(4, 4, rng)), "t");
  CHECK_THROWS_AS(require_block(general), NonHermitianInput);
}

TEST_CASE("number formatting is canonical") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.3) == "0.29999999999999999");
  CHECK(format_number(5.3) == "5.2999999999999998");
}

TEST_CASE("digest is stable and injective on these inputs") {
  const auto a = counterexample_T().assemble();
  CHECK(digest(a) == digest(a));
  CHECK(digest(a) != digest(counterexample_Ny(0.5).assemble()));
  CHECK(digest(a).rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("writer produces deterministic, parseable output") {
  JsonWriter w;
  w.begin_object();
  w.key("name").str("margins \"quoted\"\n");
  w.key("values").begin_array(true).num(1.5).num(-0.0).integer(-3).end_array();
  w.key("flag").boolean(true);
  w.key("missing").null();
  w.key("nested").begin_object();
  w.key("empty_list").begin_array().end_array();
  w.end_object();
  w.end_object();
  const std::string text = w.take();
  CHECK(text.find("\"values\": [1.5, 0, -3]") != std::string::npos);
  CHECK(text.find("\\\"quoted\\\"\\n") != std::string::npos);
  // syntactically valid JSON: the matrix parser must get far enough to
  // complain about the schema, not the syntax
  try {
    parse_matrix_text(text, "writer");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected full form") != std::string::npos);
  }
}

TEST_SUITE_END();
