#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blocknorm/block_matrix.hpp"

namespace blocknorm {

/// Matrix files come in a full form {size, entries} and a block form
/// {n, A, X, B}; complex entries are [re, im] pairs of decimals. Numbers are
/// printed with 17 significant digits, so parse(serialize(m)) == m exactly.
using ParsedMatrix = std::variant<ComplexMatrix, BlockMatrix>;

ParsedMatrix parse_matrix_text(const std::string& text, const std::string& origin);
ParsedMatrix parse_matrix_file(const std::string& path);

std::string serialize_full(const ComplexMatrix& m);
std::string serialize_block(const BlockMatrix& m);

/// Block view of any parsed matrix; full forms must be Hermitian with even
/// dimension to be split.
BlockMatrix require_block(const ParsedMatrix& parsed);
/// Assembled view of any parsed matrix.
ComplexMatrix require_full(const ParsedMatrix& parsed);

/// Shortest-fixed formatting used everywhere numbers leave the library:
/// %.17g with negative zero normalized.
std::string format_number(double x);

/// FNV-1a over the canonical serialization, as "fnv1a64:<hex>".
std::string digest(const ComplexMatrix& m);

/// Order-preserving JSON emitter with deterministic float formatting.
/// Arrays and objects opened with compact=true render inline (children
/// inherit compactness); everything else is pretty-printed at two spaces.
class JsonWriter {
 public:
  JsonWriter& begin_object(bool compact = false);
  JsonWriter& end_object();
  JsonWriter& begin_array(bool compact = false);
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& num(double x);
  JsonWriter& integer(long long x);
  JsonWriter& uinteger(unsigned long long x);
  JsonWriter& str(std::string_view s);
  JsonWriter& boolean(bool b);
  JsonWriter& null();
  std::string take();

 private:
  struct Frame {
    bool is_object = false;
    bool has_items = false;
    bool compact = false;
  };
  void pre_value_();
  void newline_indent_(std::size_t depth);
  void append_escaped_(std::string_view s);

  std::string out_;
  std::vector<Frame> stack_;
};

/// [re, im] pair.
void write_complex(JsonWriter& w, Complex z);
/// Nested row-major array of [re, im] pairs, one compact row per line.
void write_matrix_entries(JsonWriter& w, const ComplexMatrix& m);

}  // namespace blocknorm
