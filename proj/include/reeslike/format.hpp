#pragma once
// Canonical printer: terms in decreasing active order, explicit `*` and `^`,
// monomial variables in ring declaration order. parse(print(f)) == f.

#include <string>

#include "polynomial.hpp"

namespace reeslike {

template <class F>
std::string monomial_str(const GradedPolyRing<F>& ring, const Monomial& m) {
  std::string s;
  for (std::size_t v = 0; v < m.e.size(); ++v) {
    if (m.e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(static_cast<int>(v));
    if (m.e[v] != 1) s += "^" + std::to_string(m.e[v]);
  }
  return s;
}

template <class F>
std::string to_string(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  const auto& fld = ring.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = !fld.is_nonnegative(t.c);
    auto mag = neg ? fld.neg(t.c) : t.c;
    std::string coeff = fld.str(mag);
    std::string mono = monomial_str(ring, t.m);
    std::string body;
    if (mono.empty()) {
      body = coeff;
    } else if (fld.is_one(mag)) {
      body = mono;
    } else {
      body = coeff + "*" + mono;
    }
    if (first) {
      out += neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out;
}

}  // namespace reeslike
