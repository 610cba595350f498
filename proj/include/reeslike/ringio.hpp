#pragma once
// Input-format plumbing shared by the CLI and fixtures: a header line
//   ring: x1:1, x2:1, y1:2 over QQ     (or: over FF 3)
// followed by
//   ideal: gen, gen, ...
// Weights default to 1. '#' starts a comment line. Generator expressions are
// split on top-level commas only.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <algorithm>
#include <string>
#include <vector>

#include "parse.hpp"
#include "ring.hpp"

namespace reeslike {

struct ParsedInput {
  bool finite_field = false;
  long characteristic = 0;
  std::vector<std::string> vars;
  std::vector<long> weights;
  std::vector<std::string> generators;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !parts.empty()) parts.push_back(trim(cur));
  return parts;
}

}  // namespace detail

// Parses "x1:1, x2:1 over QQ"-style declarations (the "ring:" prefix, if
// present, must already be stripped).
inline void parse_ring_decl(const std::string& decl, ParsedInput& out) {
  std::string body = detail::trim(decl);
  std::size_t over = body.rfind(" over ");
  if (over == std::string::npos) throw InputError("ring declaration needs an 'over' clause");
  std::string vars_part = body.substr(0, over);
  std::string field_part = detail::trim(body.substr(over + 6));
  if (field_part == "QQ") {
    out.finite_field = false;
    out.characteristic = 0;
  } else if (field_part.rfind("FF", 0) == 0) {
    std::string num = detail::trim(field_part.substr(2));
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad finite-field clause: " + field_part);
    out.finite_field = true;
    out.characteristic = std::stol(num);
  } else {
    throw InputError("unknown coefficient field: " + field_part);
  }
  for (const auto& entry : detail::split_top_level(vars_part)) {
    if (entry.empty()) throw InputError("empty variable entry in ring declaration");
    auto colon = entry.find(':');
    std::string name = detail::trim(colon == std::string::npos ? entry : entry.substr(0, colon));
    long w = 1;
    if (colon != std::string::npos) {
      std::string ws = detail::trim(entry.substr(colon + 1));
      if (ws.empty() || ws.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad weight for variable " + name);
      w = std::stol(ws);
    }
    if (name.empty()) throw InputError("empty variable name in ring declaration");
    out.vars.push_back(name);
    out.weights.push_back(w);
  }
  if (out.vars.empty()) throw InputError("ring declaration lists no variables");
}

inline ParsedInput parse_input_document(const std::string& text) {
  ParsedInput out;
  bool saw_ring = false, saw_ideal = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = detail::trim(
        nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos));
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("ring:", 0) == 0) {
      parse_ring_decl(line.substr(5), out);
      saw_ring = true;
    } else if (line.rfind("ideal:", 0) == 0) {
      for (auto& g : detail::split_top_level(line.substr(6))) {
        if (g.empty()) throw InputError("empty generator in ideal line");
        out.generators.push_back(g);
      }
      saw_ideal = true;
    } else {
      throw InputError("unrecognized input line: " + line);
    }
  }
  if (!saw_ring) throw InputError("input needs a 'ring:' line");
  if (!saw_ideal) throw InputError("input needs an 'ideal:' line");
  return out;
}

// Fallback ring inference for bare --ideal invocations: every identifier
// becomes a weight-1 variable over QQ, ordered naturally (alphabetic prefix,
// then numeric suffix compared as a number).
inline ParsedInput infer_input(const std::string& ideal_text) {
  ParsedInput out;
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < ideal_text.size()) {
    char c = ideal_text[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (i < ideal_text.size() &&
             (std::isalnum(static_cast<unsigned char>(ideal_text[i])) || ideal_text[i] == '_'))
        id += ideal_text[i++];
      names.push_back(id);
    } else {
      ++i;
    }
  }
  auto natural_less = [](const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
      std::size_t k = s.size();
      while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
      long num = -1;
      if (k < s.size() && s.size() - k <= 9) num = std::stol(s.substr(k));
      return std::make_pair(s.substr(0, k), num);
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    return na < nb;
  };
  std::sort(names.begin(), names.end(), natural_less);
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.empty()) throw InputError("cannot infer a ring: no variables in ideal text");
  out.vars = names;
  out.weights.assign(names.size(), 1);
  for (auto& g : detail::split_top_level(ideal_text)) {
    if (g.empty()) throw InputError("empty generator in ideal text");
    out.generators.push_back(g);
  }
  return out;
}

template <class F>
std::vector<Polynomial<F>> parse_generators(const ParsedInput& in, const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> gens;
  gens.reserve(in.generators.size());
  for (const auto& src : in.generators) gens.push_back(parse_polynomial(src, ring));
  return gens;
}

}  // namespace reeslike
