#pragma once

// JSON documents for cycles, functions and maps. Rationals are JSON integers
// or "p/q" strings; floating point literals are rejected.

#include "tropint/examples.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

namespace tropint::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

enum class Kind { cycle, function, map };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::cycle: return "cycle";
    case Kind::function: return "function";
    case Kind::map: return "map";
  }
  return "?";
}

/// Schema violation; `path` names the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A parsed document. Cycles are kept as raw complexes so that unbalanced
/// input can still be inspected.
struct Document {
  Kind kind = Kind::cycle;
  std::variant<WeightedComplex, PLFunction, IntegerLinearMap> value;

  const WeightedComplex& complex() const {
    if (kind != Kind::cycle) throw ParseError("", std::string("expected a cycle document, got ") + kind_name(kind));
    return std::get<WeightedComplex>(value);
  }
  Cycle cycle() const { return Cycle(complex()); }
  const PLFunction& function() const {
    if (kind != Kind::function) throw ParseError("", std::string("expected a function document, got ") + kind_name(kind));
    return std::get<PLFunction>(value);
  }
  const IntegerLinearMap& map() const {
    if (kind != Kind::map) throw ParseError("", std::string("expected a map document, got ") + kind_name(kind));
    return std::get<IntegerLinearMap>(value);
  }
};

namespace detail {

inline Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_number_float()) throw ParseError(path, "inexact number (write rationals as integers or \"p/q\" strings)");
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(path, e.what());
    }
  }
  throw ParseError(path, "expected a rational number");
}

inline Integer read_integer(const json& j, const std::string& path) {
  Rational q = read_rational(j, path);
  if (!is_integer(q)) throw ParseError(path, "expected an integer");
  return q.get_num();
}

inline const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(path, std::string("missing field \"") + name + "\"");
  return *it;
}

inline std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

inline IntVector read_int_vector(const json& j, std::size_t n, const std::string& path) {
  array(j, path);
  if (j.size() != n) throw ParseError(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(read_integer(j[i], at(path, i)));
  return v;
}

/// Rows [a_1..a_n, b] meaning a·x >= b (or = b).
inline std::vector<AffineForm> read_rows(const json& cell, const char* name, std::size_t n, const std::string& path) {
  std::vector<AffineForm> forms;
  auto it = cell.find(name);
  if (it == cell.end()) return forms;
  const std::string p = at(path, name);
  array(*it, p);
  for (std::size_t r = 0; r < it->size(); ++r) {
    const json& row = (*it)[r];
    const std::string rp = at(p, r);
    array(row, rp);
    if (row.size() != n + 1) throw ParseError(rp, "expected " + std::to_string(n + 1) + " entries (a_1..a_n, b)");
    RatVector a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(read_rational(row[i], at(rp, i)));
    Rational b = read_rational(row[n], at(rp, n));
    if (is_zero(a)) {
      forms.push_back({IntVector(n, 0), -b});
      continue;
    }
    forms.push_back(primitive_form(a, -b));
  }
  return forms;
}

inline Cell read_cell(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected a cell object");
  ConstraintSystem s{n, read_rows(j, "ineqs", n, path), read_rows(j, "eqs", n, path)};
  auto cell = try_canonicalize(s);
  if (!cell) throw ParseError(path, "empty cell");
  return *cell;
}

inline std::size_t read_dim(const json& j, const std::string& path) {
  Integer d = read_integer(j, path);
  if (d < 0 || d > 64) throw ParseError(path, "dimension out of range");
  return d.get_ui();
}

// ambient_dim may be omitted when the first row or term determines it.
inline std::size_t ambient_dim_of(const json& j, const json* row, std::size_t extra) {
  if (j.contains("ambient_dim")) return read_dim(j["ambient_dim"], "ambient_dim");
  if (row == nullptr || !row->is_array() || row->size() < extra + 1)
    throw ParseError("ambient_dim", "missing and cannot be inferred");
  return row->size() - extra;
}

inline const json* first_row(const json& cells) {
  for (const auto& c : cells)
    for (const char* key : {"ineqs", "eqs"})
      if (c.is_object() && c.contains(key) && c[key].is_array() && !c[key].empty()) return &c[key][0];
  return nullptr;
}

inline WeightedComplex read_cycle(const json& j) {
  const json& cells = array(field(j, "cells", ""), "cells");
  std::size_t n = ambient_dim_of(j, first_row(cells), 1);
  std::vector<std::pair<Cell, Integer>> entries;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string p = at("cells", i);
    Cell c = read_cell(cells[i], n, p);
    Integer w = cells[i].contains("weight") ? read_integer(cells[i]["weight"], at(p, "weight")) : Integer(1);
    entries.emplace_back(std::move(c), std::move(w));
  }
  int dim;
  if (j.contains("dim")) {
    Integer d = read_integer(j["dim"], "dim");
    if (d < -64 || d > 64) throw ParseError("dim", "dimension out of range");
    dim = static_cast<int>(d.get_si());
  } else if (!entries.empty()) {
    dim = static_cast<int>(entries.front().first.dim());
  } else {
    throw ParseError("dim", "required for an empty cycle");
  }
  return WeightedComplex(n, dim, std::move(entries));
}

inline AffineForm read_affine(const json& j, std::size_t n, const std::string& path) {
  IntVector lin = read_int_vector(field(j, "linear", path), n, at(path, "linear"));
  Rational c = j.contains("constant") ? read_rational(j["constant"], at(path, "constant")) : Rational(0);
  return {std::move(lin), c};
}

inline PLFunction read_function(const json& j) {
  const json& type = field(j, "type", "");
  const json* first = nullptr;
  for (const char* key : {"terms", "pieces"})
    if (j.contains(key) && j[key].is_array() && !j[key].empty() && j[key][0].is_object() && j[key][0].contains("linear"))
      first = &j[key][0]["linear"];
  std::size_t n = ambient_dim_of(j, first, 0);
  if (!type.is_string()) throw ParseError("type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "max_affine") {
    const json& terms = array(field(j, "terms", ""), "terms");
    if (terms.empty()) throw ParseError("terms", "at least one term is required");
    std::vector<AffineForm> forms;
    for (std::size_t i = 0; i < terms.size(); ++i) forms.push_back(read_affine(terms[i], n, at("terms", i)));
    return TropicalPolynomial(n, std::move(forms));
  }
  if (t == "piecewise") {
    const json& pieces = array(field(j, "pieces", ""), "pieces");
    if (pieces.empty()) throw ParseError("pieces", "at least one piece is required");
    PiecewiseAffine f{n, {}, {}};
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::string p = at("pieces", i);
      f.cells.push_back(read_cell(field(pieces[i], "cell", p), n, at(p, "cell")));
      f.forms.push_back(read_affine(pieces[i], n, p));
    }
    if (!is_continuous(f)) throw ParseError("pieces", "affine pieces disagree where cells meet");
    return f;
  }
  throw ParseError("type", "unknown function type \"" + t + "\" (expected max_affine or piecewise)");
}

inline IntegerLinearMap read_map(const json& j) {
  const json& m = array(field(j, "matrix", ""), "matrix");
  if (m.empty()) throw ParseError("matrix", "at least one row is required");
  array(m[0], "matrix[0]");
  const std::size_t cols = m[0].size();
  if (cols == 0) throw ParseError("matrix[0]", "at least one column is required");
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < m.size(); ++r) rows.push_back(read_int_vector(m[r], cols, at("matrix", r)));
  return IntegerLinearMap(IntMatrix::from_rows(rows, cols));
}

inline json write_rational(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

inline json write_integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

inline json write_row(const AffineForm& f) {
  json row = json::array();
  for (const auto& a : f.linear) row.push_back(write_integer(a));
  row.push_back(write_rational(-f.constant));
  return row;
}

inline json write_cell(const Cell& c) {
  json out = json::object();
  json ineqs = json::array(), eqs = json::array();
  for (const auto& f : c.inequalities()) ineqs.push_back(write_row(f));
  for (const auto& f : c.equalities()) eqs.push_back(write_row(f));
  out["ineqs"] = std::move(ineqs);
  out["eqs"] = std::move(eqs);
  return out;
}

inline json write_affine(const AffineForm& f) {
  json out = json::object();
  json lin = json::array();
  for (const auto& a : f.linear) lin.push_back(write_integer(a));
  out["linear"] = std::move(lin);
  out["constant"] = write_rational(f.constant);
  return out;
}

}  // namespace detail

inline Kind infer_kind(const json& j) {
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError("kind", "expected a string");
    const std::string k = j["kind"].get<std::string>();
    if (k == "cycle") return Kind::cycle;
    if (k == "function") return Kind::function;
    if (k == "map") return Kind::map;
    throw ParseError("kind", "unknown kind \"" + k + "\"");
  }
  if (j.contains("cells")) return Kind::cycle;
  if (j.contains("matrix")) return Kind::map;
  if (j.contains("type") || j.contains("terms") || j.contains("pieces")) return Kind::function;
  throw ParseError("", "cannot determine document kind");
}

inline Document from_json(const json& j) {
  if (!j.is_object()) throw ParseError("", "document must be a JSON object");
  if (j.contains("format_version")) {
    const json& v = j["format_version"];
    if (!(v.is_string() && v.get<std::string>() == kFormatVersion) && !(v.is_number_integer() && v.get<long>() == 1))
      throw ParseError("format_version", "unsupported format version");
  }
  Document d;
  d.kind = infer_kind(j);
  switch (d.kind) {
    case Kind::cycle: d.value = detail::read_cycle(j); break;
    case Kind::function: d.value = detail::read_function(j); break;
    case Kind::map: d.value = detail::read_map(j); break;
  }
  return d;
}

inline Document parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

inline json to_json(const WeightedComplex& c) {
  json out = json::object();
  out["kind"] = "cycle";
  out["format_version"] = kFormatVersion;
  out["ambient_dim"] = c.ambient_dim();
  out["dim"] = c.dim();
  json cells = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    json cell = json::object();
    cell["weight"] = detail::write_integer(c.weight(i));
    cell.update(detail::write_cell(c.cell(i)));
    cells.push_back(std::move(cell));
  }
  out["cells"] = std::move(cells);
  return out;
}

inline json to_json(const Cycle& c) { return to_json(c.complex()); }

inline json to_json(const PLFunction& f) {
  json out = json::object();
  out["kind"] = "function";
  out["format_version"] = kFormatVersion;
  out["ambient_dim"] = f.ambient_dim();
  if (f.is_polynomial()) {
    out["type"] = "max_affine";
    json terms = json::array();
    for (const auto& t : f.polynomial().terms) terms.push_back(detail::write_affine(t));
    out["terms"] = std::move(terms);
  } else {
    out["type"] = "piecewise";
    json pieces = json::array();
    const auto& pw = f.piecewise();
    for (std::size_t i = 0; i < pw.cells.size(); ++i) {
      json p = detail::write_affine(pw.forms[i]);
      p["cell"] = detail::write_cell(pw.cells[i]);
      pieces.push_back(std::move(p));
    }
    out["pieces"] = std::move(pieces);
  }
  return out;
}

inline json to_json(const IntegerLinearMap& m) {
  json out = json::object();
  out["kind"] = "map";
  out["format_version"] = kFormatVersion;
  json rows = json::array();
  for (const auto& r : m.matrix().row_vectors()) {
    json row = json::array();
    for (const auto& a : r) row.push_back(detail::write_integer(a));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  return out;
}

inline json to_json(const Document& d) {
  return std::visit([](const auto& v) { return to_json(v); }, d.value);
}

namespace detail {
// Like dump(2), but arrays of scalars stay on one line.
inline void pretty(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_array()) {
    bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
    if (flat || j.empty()) {
      out += j.dump();
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      pretty(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      pretty(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else {
    out += j.dump();
  }
}
}  // namespace detail

inline std::string serialize(const json& j) {
  std::string out;
  detail::pretty(j, 0, out);
  return out + "\n";
}

template <class T>
std::string serialize(const T& value) {
  return serialize(to_json(value));
}

/// Built-in objects addressable by name.
inline std::optional<Document> builtin(const std::string& name) {
  auto cycle = [](const Cycle& c) { return Document{Kind::cycle, c.complex()}; };
  auto function = [](PLFunction f) { return Document{Kind::function, std::move(f)}; };
  auto map = [](IntegerLinearMap m) { return Document{Kind::map, std::move(m)}; };
  auto numbers = [&](const std::string& rest) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t next = rest.find(':', pos);
      if (next == std::string::npos) next = rest.size();
      std::string part = rest.substr(pos, next - pos);
      if (part.empty() || part.size() > 2 || part.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("", "bad built-in parameter in \"" + name + "\"");
      out.push_back(std::stoul(part));
      pos = next + 1;
    }
    return out;
  };
  if (name.rfind("Lnk:", 0) == 0) {
    auto p = numbers(name.substr(4));
    if (p.size() != 2 || p[0] == 0 || p[1] > p[0]) throw ParseError("", "usage: Lnk:<n>:<k> with 0 <= k <= n, n >= 1");
    return cycle(standard_skeleton(p[0], p[1]));
  }
  if (name.rfind("hyperplane:", 0) == 0) {
    auto p = numbers(name.substr(11));
    if (p.size() != 1 || p[0] == 0) throw ParseError("", "usage: hyperplane:<n> with n >= 1");
    return function(hyperplane_function(p[0]));
  }
  if (name.rfind("space:", 0) == 0) {
    auto p = numbers(name.substr(6));
    if (p.size() != 1 || p[0] == 0) throw ParseError("", "usage: space:<n> with n >= 1");
    return cycle(whole_space_cycle(p[0]));
  }
  if (name == "rigid-surface") return cycle(examples::rigid_surface());
  if (name == "rigid-surface-refined") return cycle(examples::rigid_surface_refined());
  if (name == "rigid-function") return function(examples::rigid_function());
  if (name == "rigid-curve") return cycle(examples::rigid_curve());
  if (name == "pushfwd-fan") return cycle(examples::pushforward_fan());
  if (name == "map-f1") return map(examples::map_f1());
  if (name == "map-f2") return map(examples::map_f2());
  if (name == "conic") return cycle(examples::conic());
  if (name == "conic-function") return function(examples::conic_polynomial());
  if (name == "quadrilateral") return cycle(examples::quadrilateral_curve());
  if (name == "sawtooth") return function(examples::sawtooth_function());
  return std::nullopt;
}

inline std::vector<std::string> builtin_names() {
  return {"Lnk:<n>:<k>", "hyperplane:<n>", "space:<n>", "rigid-surface", "rigid-surface-refined", "rigid-function",
          "rigid-curve", "pushfwd-fan", "map-f1", "map-f2", "conic", "conic-function", "quadrilateral", "sawtooth"};
}

inline std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// "-" reads stdin, an existing path is read as a file, anything else is
/// looked up among the built-ins.
inline Document load(const std::string& source) {
  if (source == "-") return parse(read_stream(std::cin));
  std::ifstream file(source);
  if (file) return parse(read_stream(file));
  if (auto b = builtin(source)) return *b;
  throw ParseError("", "no such file or built-in: \"" + source + "\"");
}

}  // namespace tropint::io
