#pragma once
// Monomials as exponent vectors. The vector length always equals the arity
// of the ambient ring; callers guarantee matching rings.

#include <cstdint>
#include <numeric>
#include <vector>

namespace reeslike {

struct Monomial {
  std::vector<std::int32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps) : e(std::move(exps)) {}

  std::size_t arity() const { return e.size(); }

  bool is_one() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }

  long total_degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

  long weighted_degree(const std::vector<long>& weights) const {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * e[i];
    return d;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }

  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }

  bool coprime_with(const Monomial& b) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }

  // Plain lexicographic compare on exponent vectors; used only as a
  // deterministic tie-break, never as a monomial order.
  static int lex_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace reeslike
