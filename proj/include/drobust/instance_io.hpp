#pragma once

// Line-oriented instance format:
//
//   c <comment>
//   p robust mincut|sp
//   n <vertex count>
//   e <u> <v> <weight>        (one per edge, edge ids in order of appearance)
//   r <root>
//   t <terminal> ...
//   l <inflation factor>
//
// Vertices are 1-based; weights and the inflation factor are decimals with at
// most six fraction digits.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "drobust/error.hpp"
#include "drobust/graph.hpp"
#include "drobust/numeric.hpp"

namespace drobust {

class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string& what)
      : Error(code, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations, const std::string& detail = {})
      : Error(Errc::validation, describe(violations, detail)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& vs, const std::string& detail) {
    std::string s;
    for (auto v : vs) {
      if (!s.empty()) s += ",";
      s += to_string(v);
    }
    if (!detail.empty()) s += s.empty() ? detail : " (" + detail + ")";
    return s;
  }

  std::vector<Violation> violations_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::uint32_t> parse_id(std::string_view tok) {
  auto v = parse_fixed(tok, 0);
  if (!v || *v > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return static_cast<std::uint32_t>(*v);
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  std::optional<Problem> problem;
  std::optional<std::size_t> n;
  std::optional<Vertex> root;
  std::optional<std::vector<Vertex>> terminals;
  std::optional<Inflation> lambda;
  std::vector<EdgeTriple> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;

    auto syntax = [&](const std::string& what) { return ParseError(Errc::syntax, line_no, what); };
    auto once = [&](bool seen, std::string_view key) {
      if (seen) throw ParseError(Errc::duplicate_header, line_no, "repeated '" + std::string(key) + "' line");
    };
    const std::string_view key = tok[0];
    if (key == "p") {
      once(problem.has_value(), key);
      if (tok.size() != 3 || tok[1] != "robust") throw syntax("expected 'p robust mincut|sp'");
      if (tok[2] == "mincut") problem = Problem::mincut;
      else if (tok[2] == "sp") problem = Problem::shortest_path;
      else throw syntax("unknown problem '" + std::string(tok[2]) + "'");
    } else if (key == "n") {
      once(n.has_value(), key);
      auto v = tok.size() == 2 ? detail::parse_id(tok[1]) : std::nullopt;
      if (!v || *v == 0) throw syntax("expected 'n <positive count>'");
      n = *v;
    } else if (key == "e") {
      if (tok.size() != 4) throw syntax("expected 'e <u> <v> <weight>'");
      auto u = detail::parse_id(tok[1]);
      auto v = detail::parse_id(tok[2]);
      auto w = parse_weight(tok[3]);
      if (!u || !v) throw syntax("bad vertex id");
      if (!w) throw syntax("bad weight '" + std::string(tok[3]) + "'");
      edges.push_back({*u, *v, *w});
    } else if (key == "r") {
      once(root.has_value(), key);
      auto v = tok.size() == 2 ? detail::parse_id(tok[1]) : std::nullopt;
      if (!v) throw syntax("expected 'r <vertex>'");
      root = *v;
    } else if (key == "t") {
      once(terminals.has_value(), key);
      if (tok.size() < 2) throw syntax("expected 't <vertex> ...'");
      std::vector<Vertex> ts;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto v = detail::parse_id(tok[i]);
        if (!v) throw syntax("bad terminal '" + std::string(tok[i]) + "'");
        ts.push_back(*v);
      }
      terminals = std::move(ts);
    } else if (key == "l") {
      once(lambda.has_value(), key);
      auto v = tok.size() == 2 ? parse_inflation(tok[1]) : std::nullopt;
      if (!v) throw syntax("expected 'l <decimal>'");
      lambda = *v;
    } else {
      throw syntax("unknown line type '" + std::string(key) + "'");
    }
  }

  auto missing = [](std::string_view what) {
    return ParseError(Errc::missing_field, 0, "missing '" + std::string(what) + "' line");
  };
  if (!problem) throw missing("p");
  if (!n) throw missing("n");
  if (!root) throw missing("r");
  if (!terminals) throw missing("t");
  if (!lambda) throw missing("l");

  Instance inst;
  try {
    inst.graph = build_graph(*n, edges);
  } catch (const Error& e) {
    std::vector<Violation> vs;
    if (e.code() == Errc::weight_overflow) vs.push_back(Violation::weight_overflow);
    throw ValidationError(std::move(vs), e.what());
  }
  inst.problem = *problem;
  inst.root = *root;
  inst.terminals = std::move(*terminals);
  inst.lambda = *lambda;
  auto violations = validate_instance(inst);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return inst;
}

/// Canonical form; parse_instance(serialize_instance(x)) reproduces x.
inline std::string serialize_instance(const Instance& inst) {
  std::string out;
  out += "p robust ";
  out += to_string(inst.problem);
  out += "\nn " + std::to_string(inst.graph.vertex_count()) + "\n";
  for (const auto& e : inst.graph.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_weight(e.weight) + "\n";
  }
  out += "r " + std::to_string(inst.root) + "\nt";
  for (Vertex t : inst.terminals) out += " " + std::to_string(t);
  out += "\nl " + format_inflation(inst.lambda) + "\n";
  return out;
}

}  // namespace drobust
