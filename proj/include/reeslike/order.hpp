#pragma once
// Monomial orders. All orders are global (1 is smallest) and multiplicative.
// The ranking permutation lists variable indices from highest to lowest
// priority. `elim` is a block order (grevlex on the leading block, then
// grevlex on the rest) used internally for variable elimination; the
// user-facing kinds are lex, grevlex and weighted-then-lex.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace reeslike {

struct MonomialOrder {
  enum class Kind { lex, grevlex, wdeglex, elim };

  Kind kind = Kind::grevlex;
  std::vector<int> rank;  // permutation of 0..n-1, highest priority first
  int elim_block = 0;     // for Kind::elim: rank[0..elim_block) is the block

  static MonomialOrder lex(std::vector<int> ranking) {
    return {Kind::lex, std::move(ranking), 0};
  }
  static MonomialOrder grevlex(std::size_t arity) {
    return {Kind::grevlex, identity(arity), 0};
  }
  static MonomialOrder grevlex(std::vector<int> ranking) {
    return {Kind::grevlex, std::move(ranking), 0};
  }
  static MonomialOrder wdeglex(std::vector<int> ranking) {
    return {Kind::wdeglex, std::move(ranking), 0};
  }
  static MonomialOrder elim(std::vector<int> ranking, int block) {
    return {Kind::elim, std::move(ranking), block};
  }

  static std::vector<int> identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  // Returns >0 when a comes strictly after b in descending term lists
  // (a is the larger monomial), <0 when smaller, 0 when equal.
  int compare(const Monomial& a, const Monomial& b, const std::vector<long>& weights) const {
    switch (kind) {
      case Kind::lex: {
        for (int v : rank) {
          if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
        }
        return 0;
      }
      case Kind::grevlex:
        return grevlex_compare(a, b, weights, 0, rank.size());
      case Kind::wdeglex: {
        long da = a.weighted_degree(weights), db = b.weighted_degree(weights);
        if (da != db) return da > db ? 1 : -1;
        for (int v : rank) {
          if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
        }
        return 0;
      }
      case Kind::elim: {
        int c = grevlex_compare(a, b, weights, 0, elim_block);
        if (c != 0) return c;
        return grevlex_compare(a, b, weights, elim_block, rank.size());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b, const std::vector<long>& weights) const {
    return compare(a, b, weights) < 0;
  }

  // Stable text key for GB caches.
  std::string key() const {
    std::string s;
    switch (kind) {
      case Kind::lex: s = "lex"; break;
      case Kind::grevlex: s = "grevlex"; break;
      case Kind::wdeglex: s = "wdeglex"; break;
      case Kind::elim: s = "elim" + std::to_string(elim_block); break;
    }
    for (int v : rank) s += ":" + std::to_string(v);
    return s;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && rank == o.rank && elim_block == o.elim_block;
  }

 private:
  int grevlex_compare(const Monomial& a, const Monomial& b, const std::vector<long>& weights,
                      std::size_t from, std::size_t to) const {
    long da = 0, db = 0;
    for (std::size_t k = from; k < to; ++k) {
      da += weights[rank[k]] * a.e[rank[k]];
      db += weights[rank[k]] * b.e[rank[k]];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = to; k-- > from;) {
      int v = rank[k];
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
    }
    return 0;
  }
};

}  // namespace reeslike
