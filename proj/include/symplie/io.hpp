#pragma once

// JSON algebra spec files and serialization of library values.
//
// Spec file:
//   {"dim": 4, "basis": ["e0", ...],
//    "brackets": [{"lhs": 0, "rhs": 1, "out": [{"k": 2, "c": "1"}]}],
//    "omega": [["0", "0", "1", "0"], ...]}
// Indices are 0-based. Rationals are strings "p" or "p/q".

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "symplie/symplectic.hpp"

namespace symplie {

using json = nlohmann::json;

struct AlgebraSpec {
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::optional<Matrix> omega;
};

using LoadedAlgebra = std::variant<LieAlgebra, SymplecticStructure>;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

inline Rational rational_field(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) parse_fail(where, "expected a rational string");
  auto r = Rational::parse(j.get<std::string>());
  if (!r) parse_fail(where, "invalid rational \"" + j.get<std::string>() + "\"");
  return *r;
}

inline std::size_t index_field(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) parse_fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

inline json to_json(const Subspace& s) {
  json basis = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(to_json(s.basis().row(r)));
  return {{"dim", s.dim()}, {"basis", basis}};
}

inline json to_json(const Witness& w) {
  json j = json::object();
  if (!w.indices.empty()) j["indices"] = w.indices;
  if (!w.vector.empty()) j["vector"] = to_json(w.vector);
  return j;
}

inline AlgebraSpec parse_spec(const json& j) {
  using detail::parse_fail;
  if (!j.is_object()) parse_fail("$", "expected an object");
  AlgebraSpec spec;
  if (!j.contains("dim")) parse_fail("$", "missing \"dim\"");
  spec.dim = detail::index_field(j.at("dim"), "dim");
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || b.size() != spec.dim) parse_fail("basis", "expected dim names");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) parse_fail("basis[" + std::to_string(i) + "]", "expected a string");
      spec.basis.push_back(b[i].get<std::string>());
    }
  }
  if (j.contains("brackets")) {
    const json& br = j.at("brackets");
    if (!br.is_array()) parse_fail("brackets", "expected an array");
    for (std::size_t e = 0; e < br.size(); ++e) {
      const std::string at = "brackets[" + std::to_string(e) + "]";
      const json& item = br[e];
      if (!item.is_object() || !item.contains("lhs") || !item.contains("rhs") || !item.contains("out"))
        parse_fail(at, "expected {lhs, rhs, out}");
      BracketEntry entry{detail::index_field(item.at("lhs"), at + ".lhs"), detail::index_field(item.at("rhs"), at + ".rhs"), {}};
      const json& out = item.at("out");
      if (!out.is_array()) parse_fail(at + ".out", "expected an array");
      for (std::size_t t = 0; t < out.size(); ++t) {
        const std::string tat = at + ".out[" + std::to_string(t) + "]";
        if (!out[t].is_object() || !out[t].contains("k") || !out[t].contains("c")) parse_fail(tat, "expected {k, c}");
        entry.out.push_back({detail::index_field(out[t].at("k"), tat + ".k"), detail::rational_field(out[t].at("c"), tat + ".c")});
      }
      spec.brackets.push_back(std::move(entry));
    }
  }
  if (j.contains("omega") && !j.at("omega").is_null()) {
    const json& om = j.at("omega");
    if (!om.is_array() || om.size() != spec.dim) parse_fail("omega", "expected dim rows");
    Matrix m(spec.dim, spec.dim);
    for (std::size_t r = 0; r < spec.dim; ++r) {
      if (!om[r].is_array() || om[r].size() != spec.dim)
        parse_fail("omega[" + std::to_string(r) + "]", "expected dim entries");
      for (std::size_t c = 0; c < spec.dim; ++c)
        m(r, c) = detail::rational_field(om[r][c], "omega[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    spec.omega = std::move(m);
  }
  return spec;
}

inline AlgebraSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + e.what());
  }
  return parse_spec(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LieAlgebra to_algebra(const AlgebraSpec& spec) { return LieAlgebra::make(spec.dim, spec.brackets, spec.basis); }

/// Validated algebra, plus the symplectic structure when omega is present.
inline LoadedAlgebra load(const AlgebraSpec& spec) {
  LieAlgebra l = to_algebra(spec);
  if (!spec.omega) return l;
  return SymplecticStructure::make(std::move(l), *spec.omega);
}

inline LoadedAlgebra load_file(const std::string& path) { return load(parse_spec_text(read_file(path))); }

inline AlgebraSpec spec_of(const LieAlgebra& l, std::optional<Matrix> omega = std::nullopt) {
  AlgebraSpec spec;
  spec.dim = l.dim();
  spec.basis = l.names();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < l.dim(); ++k)
        if (!l.structure(i, j, k).is_zero()) e.out.push_back({k, l.structure(i, j, k)});
      if (!e.out.empty()) spec.brackets.push_back(std::move(e));
    }
  spec.omega = std::move(omega);
  return spec;
}

inline AlgebraSpec spec_of(const SymplecticStructure& s) { return spec_of(s.algebra(), s.omega()); }

inline json to_json(const AlgebraSpec& spec) {
  json j;
  j["dim"] = spec.dim;
  if (!spec.basis.empty()) j["basis"] = spec.basis;
  json br = json::array();
  for (const auto& e : spec.brackets) {
    json out = json::array();
    for (const auto& t : e.out) out.push_back({{"k", t.k}, {"c", t.c.str()}});
    br.push_back({{"lhs", e.lhs}, {"rhs", e.rhs}, {"out", out}});
  }
  j["brackets"] = br;
  if (spec.omega) j["omega"] = to_json(*spec.omega);
  return j;
}

/// Nonzero structure constants as a sparse list, i < j.
inline json brackets_json(const LieAlgebra& l) { return to_json(spec_of(l)).at("brackets"); }

inline json to_json(const SymplecticStructure& s) {
  return {{"dim", s.dim()}, {"brackets", brackets_json(s.algebra())}, {"omega", to_json(s.omega())}};
}

}  // namespace symplie
