#pragma once
// Groebner basis engine: multivariate division, Buchberger's algorithm with
// the coprime and chain pair criteria, two pair-selection strategies, a
// weighted-degree safety cap, and deterministic reduced bases.

#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace reeslike {

inline long default_degree_cap() {
  if (const char* env = std::getenv("REESLIKE_DEGREE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 40;
}

// Thrown when a basis computation would step past the configured weighted
// degree; carries enough to report the abort precisely.
class DegreeCapExceeded : public std::runtime_error {
 public:
  DegreeCapExceeded(long cap, long attempted)
      : std::runtime_error("degree cap " + std::to_string(cap) +
                           " exceeded: computation reached weighted degree " +
                           std::to_string(attempted)),
        cap_(cap), attempted_(attempted) {}
  long cap() const { return cap_; }
  long attempted_degree() const { return attempted_; }

 private:
  long cap_, attempted_;
};

struct GBConfig {
  enum class Strategy { normal, fifo };
  Strategy strategy = Strategy::normal;
  long degree_cap = default_degree_cap();
  bool use_coprime_criterion = true;
  bool use_chain_criterion = true;
};

namespace detail {

// Align every basis element to the active order of f once, up front.
template <class F>
std::vector<Polynomial<F>> aligned_basis(const std::vector<Polynomial<F>>& basis,
                                         const MonomialOrder& ord) {
  std::vector<Polynomial<F>> out;
  out.reserve(basis.size());
  for (const auto& g : basis)
    if (!g.is_zero()) out.push_back(g.with_order(ord));
  return out;
}

}  // namespace detail

// Remainder of f on division by basis (under f's active order). No term of
// the result is divisible by any basis leading monomial.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  if (f.is_zero() || basis.empty()) return f;
  const auto& ord = f.order();
  auto red = detail::aligned_basis(basis, ord);
  if (red.empty()) return f;
  const auto& fld = f.ring()->field();

  Polynomial<F> p = f;
  std::vector<Term<F>> rem;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    bool reduced = false;
    for (const auto& g : red) {
      if (!g.leading_monomial().divides(lt.m)) continue;
      auto c = fld.neg(fld.div(lt.c, g.leading_coeff()));
      p = p.add_scaled(c, lt.m / g.leading_monomial(), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      Polynomial<F> head = Polynomial<F>::from_terms(p.ring(), ord, {lt});
      p = p - head;
    }
  }
  // Terms were peeled in strictly descending order, so rem is already sorted.
  return Polynomial<F>::from_terms(f.ring(), ord, std::move(rem));
}

// S-polynomial of two nonzero polynomials sharing an active order.
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  const auto& fld = f.ring()->field();
  Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial<F> a = f.mul_term(fld.inv(f.leading_coeff()), L / f.leading_monomial());
  return a.add_scaled(fld.neg(fld.inv(g.leading_coeff())), L / g.leading_monomial(), g);
}

namespace detail {

struct PairKey {
  std::size_t i, j;   // i < j
  Monomial lcm;
  long wdeg;
  unsigned long seq;  // creation order, for the fifo strategy
};

// Normal strategy: smallest weighted lcm degree, ties by lex-smallest lcm
// exponent vector, then by (i, j).
inline bool normal_before(const PairKey& a, const PairKey& b) {
  if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg;
  int c = Monomial::lex_compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace detail

// Buchberger's algorithm; returns the unique reduced (monic, auto-reduced,
// sorted ascending by leading monomial) basis for the given order.
template <class F>
std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& gens,
                                      const MonomialOrder& ord,
                                      const GBConfig& config = GBConfig{}) {
  std::vector<Polynomial<F>> G;
  RingPtr<F> ring;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!ring) ring = g.ring();
    G.push_back(g.with_order(ord).monic());
  }
  if (G.empty()) return {};
  const auto& weights = ring->weights();

  std::vector<detail::PairKey> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_set;
  unsigned long seq = 0;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial L = Monomial::lcm(G[i].leading_monomial(), G[j].leading_monomial());
      long wd = L.weighted_degree(weights);
      pending.push_back({i, j, std::move(L), wd, seq++});
      pending_set.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

  while (!pending.empty()) {
    std::size_t pick = 0;
    if (config.strategy == GBConfig::Strategy::normal) {
      for (std::size_t k = 1; k < pending.size(); ++k)
        if (detail::normal_before(pending[k], pending[pick])) pick = k;
    } else {
      for (std::size_t k = 1; k < pending.size(); ++k)
        if (pending[k].seq < pending[pick].seq) pick = k;
    }
    detail::PairKey pr = std::move(pending[pick]);
    pending.erase(pending.begin() + pick);
    pending_set.erase({pr.i, pr.j});

    if (pr.wdeg > config.degree_cap) throw DegreeCapExceeded(config.degree_cap, pr.wdeg);

    if (config.use_coprime_criterion &&
        G[pr.i].leading_monomial().coprime_with(G[pr.j].leading_monomial()))
      continue;

    if (config.use_chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < G.size() && !skip; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!G[k].leading_monomial().divides(pr.lcm)) continue;
        std::pair<std::size_t, std::size_t> ik{std::min(pr.i, k), std::max(pr.i, k)};
        std::pair<std::size_t, std::size_t> jk{std::min(pr.j, k), std::max(pr.j, k)};
        if (!pending_set.count(ik) && !pending_set.count(jk)) skip = true;
      }
      if (skip) continue;
    }

    Polynomial<F> h = normal_form(s_polynomial(G[pr.i], G[pr.j]), G);
    if (h.is_zero()) continue;
    long hdeg = h.leading_monomial().weighted_degree(weights);
    if (hdeg > config.degree_cap) throw DegreeCapExceeded(config.degree_cap, hdeg);
    G.push_back(h.monic());
    push_pairs_for(G.size() - 1);
  }

  // Auto-reduce: keep only minimal leading monomials, then fully reduce each
  // tail against the others. Leading monomials are pairwise non-dividing, so
  // one pass yields the reduced basis.
  std::vector<std::size_t> idx(G.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = ord.compare(G[a].leading_monomial(), G[b].leading_monomial(), weights);
    return c < 0;
  });
  std::vector<Polynomial<F>> minimal;
  for (std::size_t k : idx) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(G[k].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(G[k]);
  }
  std::vector<Polynomial<F>> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial<F>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    out.push_back(normal_form(minimal[k], others).monic());
  }
  return out;
}

}  // namespace reeslike
