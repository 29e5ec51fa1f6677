#include "blocknorm/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "blocknorm/errors.hpp"

namespace blocknorm {

namespace {

using nlohmann::json;

Complex parse_entry(const json& cell, const std::string& where) {
  if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
    throw ParseError(where + ": entry must be a [re, im] pair of numbers");
  }
  const double re = cell[0].get<double>();
  const double im = cell[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError(where + ": entry is not finite");
  }
  return Complex(re, im);
}

ComplexMatrix parse_matrix_field(const json& j, const std::string& field, std::size_t rows,
                                 std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw DimensionError("field '" + field + "': expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw DimensionError("field '" + field + "' row " + std::to_string(i) + ": expected " +
                           std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = parse_entry(row[k], "field '" + field + "' row " + std::to_string(i) +
                                        " column " + std::to_string(k));
    }
  }
  return m;
}

std::size_t parse_size_field(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_unsigned() || j[field].get<std::uint64_t>() == 0) {
    throw ParseError("field '" + field + "' must be a positive integer");
  }
  return j[field].get<std::size_t>();
}

}  // namespace

ParsedMatrix parse_matrix_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(origin + ": top level must be an object");

  if (j.contains("entries")) {
    const std::size_t size = parse_size_field(j, "size");
    return parse_matrix_field(j["entries"], "entries", size, size);
  }
  if (j.contains("A") || j.contains("X") || j.contains("B")) {
    const std::size_t n = parse_size_field(j, "n");
    for (const char* field : {"A", "X", "B"}) {
      if (!j.contains(field)) throw ParseError(std::string("missing block field '") + field + "'");
    }
    ComplexMatrix a = parse_matrix_field(j["A"], "A", n, n);
    ComplexMatrix x = parse_matrix_field(j["X"], "X", n, n);
    ComplexMatrix b = parse_matrix_field(j["B"], "B", n, n);
    if (!is_hermitian(a)) {
      throw NonHermitianBlock("block 'A' is not Hermitian (residual " +
                              format_number(hermitian_residual(a)) + ")");
    }
    if (!is_hermitian(b)) {
      throw NonHermitianBlock("block 'B' is not Hermitian (residual " +
                              format_number(hermitian_residual(b)) + ")");
    }
    return BlockMatrix::from_blocks(std::move(a), std::move(x), std::move(b));
  }
  throw ParseError(origin + ": expected full form {size, entries} or block form {n, A, X, B}");
}

ParsedMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_text(buffer.str(), path);
}

std::string serialize_full(const ComplexMatrix& m) {
  JsonWriter w;
  w.begin_object();
  w.key("size").uinteger(m.rows());
  w.key("entries");
  write_matrix_entries(w, m);
  w.end_object();
  return w.take();
}

std::string serialize_block(const BlockMatrix& m) {
  JsonWriter w;
  w.begin_object();
  w.key("n").uinteger(m.n());
  w.key("A");
  write_matrix_entries(w, m.a());
  w.key("X");
  write_matrix_entries(w, m.x());
  w.key("B");
  write_matrix_entries(w, m.b());
  w.end_object();
  return w.take();
}

BlockMatrix require_block(const ParsedMatrix& parsed) {
  if (const auto* block = std::get_if<BlockMatrix>(&parsed)) return *block;
  const auto& full = std::get<ComplexMatrix>(parsed);
  if (!full.square() || full.rows() % 2 != 0) {
    throw DimensionError("full-form matrix must have even dimension to be block-split");
  }
  return BlockMatrix::from_assembled(full);
}

ComplexMatrix require_full(const ParsedMatrix& parsed) {
  if (const auto* block = std::get_if<BlockMatrix>(&parsed)) return block->assemble();
  return std::get<ComplexMatrix>(parsed);
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // fold -0 into 0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string digest(const ComplexMatrix& m) {
  std::string canonical = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ";";
  for (const auto& e : m.entries()) {
    canonical += format_number(e.real());
    canonical += ",";
    canonical += format_number(e.imag());
    canonical += ";";
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// --- JsonWriter ---

void JsonWriter::newline_indent_(std::size_t depth) {
  out_ += '\n';
  out_.append(2 * depth, ' ');
}

void JsonWriter::pre_value_() {
  if (stack_.empty()) return;
  Frame& f = stack_.back();
  if (f.is_object) return;  // separators handled by key()
  if (f.has_items) {
    out_ += f.compact ? ", " : ",";
  }
  if (!f.compact) newline_indent_(stack_.size());
  f.has_items = true;
}

JsonWriter& JsonWriter::begin_object(bool compact) {
  pre_value_();
  const bool inherited = !stack_.empty() && stack_.back().compact;
  stack_.push_back(Frame{true, false, compact || inherited});
  out_ += '{';
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const Frame f = stack_.back();
  stack_.pop_back();
  if (f.has_items && !f.compact) newline_indent_(stack_.size());
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array(bool compact) {
  pre_value_();
  const bool inherited = !stack_.empty() && stack_.back().compact;
  stack_.push_back(Frame{false, false, compact || inherited});
  out_ += '[';
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const Frame f = stack_.back();
  stack_.pop_back();
  if (f.has_items && !f.compact) newline_indent_(stack_.size());
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  Frame& f = stack_.back();
  if (f.has_items) {
    out_ += f.compact ? ", " : ",";
  }
  if (!f.compact) newline_indent_(stack_.size());
  f.has_items = true;
  out_ += '"';
  append_escaped_(name);
  out_ += "\": ";
  return *this;
}

JsonWriter& JsonWriter::num(double x) {
  pre_value_();
  out_ += format_number(x);
  return *this;
}

JsonWriter& JsonWriter::integer(long long x) {
  pre_value_();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::uinteger(unsigned long long x) {
  pre_value_();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::str(std::string_view s) {
  pre_value_();
  out_ += '"';
  append_escaped_(s);
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::boolean(bool b) {
  pre_value_();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::null() {
  pre_value_();
  out_ += "null";
  return *this;
}

std::string JsonWriter::take() {
  out_ += '\n';
  return std::move(out_);
}

void JsonWriter::append_escaped_(std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\b': out_ += "\\b"; break;
      case '\f': out_ += "\\f"; break;
      case '\n': out_ += "\\n"; break;
      case '\r': out_ += "\\r"; break;
      case '\t': out_ += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;
        }
    }
  }
}

void write_complex(JsonWriter& w, Complex z) {
  w.begin_array(true);
  w.num(z.real());
  w.num(z.imag());
  w.end_array();
}

void write_matrix_entries(JsonWriter& w, const ComplexMatrix& m) {
  w.begin_array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    w.begin_array(true);
    for (std::size_t j = 0; j < m.cols(); ++j) write_complex(w, m(i, j));
    w.end_array();
  }
  w.end_array();
}

}  // namespace blocknorm
