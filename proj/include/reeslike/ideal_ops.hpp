#pragma once
// Ideal-level operations built on the Groebner engine: elimination of
// variables, intersection via a tag variable, colon ideals, saturation,
// radical membership, and Krull dimension / height from initial ideals.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace reeslike {

inline constexpr long kInfiniteHeight = std::numeric_limits<long>::max();
inline constexpr long kEmptyDimension = -1;  // dimension sentinel for the unit ideal

// A variable name not present in the ring, derived from the given base.
template <class F>
std::string fresh_var_name(const GradedPolyRing<F>& ring, const std::string& base) {
  if (ring.var_index(base) < 0) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (ring.var_index(candidate) < 0) return candidate;
  }
}

// Ring with extra weighted variables appended in front of the existing ones.
template <class F>
RingPtr<F> prepend_vars(const RingPtr<F>& ring, const std::vector<std::string>& names,
                        const std::vector<long>& weights) {
  std::vector<std::string> vars = names;
  vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
  std::vector<long> w = weights;
  w.insert(w.end(), ring->weights().begin(), ring->weights().end());
  return make_ring<F>(ring->field(), vars, w);
}

// Ring on a subset of variables (given by ascending indices), same weights.
template <class F>
RingPtr<F> subring_on(const RingPtr<F>& ring, const std::vector<int>& keep) {
  std::vector<std::string> vars;
  std::vector<long> w;
  for (int v : keep) {
    vars.push_back(ring->vars()[v]);
    w.push_back(ring->weights()[v]);
  }
  return make_ring<F>(ring->field(), vars, w);
}

template <class F>
struct EliminationResult {
  RingPtr<F> subring;
  std::vector<Polynomial<F>> gens;  // live in subring
};

// Generators of I \cap k[remaining variables], computed with a block order
// that eliminates the listed variables.
template <class F>
EliminationResult<F> eliminate(const Ideal<F>& I, std::vector<int> remove) {
  const auto& ring = I.ring();
  std::sort(remove.begin(), remove.end());
  std::vector<int> keep;
  std::vector<int> ranking = remove;
  for (int v = 0; v < static_cast<int>(ring->arity()); ++v)
    if (!std::binary_search(remove.begin(), remove.end(), v)) {
      keep.push_back(v);
      ranking.push_back(v);
    }
  MonomialOrder ord = MonomialOrder::elim(ranking, remove.size());

  EliminationResult<F> out;
  out.subring = subring_on(ring, keep);
  for (const auto& g : I.groebner(ord)) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (int v : remove)
        if (t.m.e[v] != 0) {
          pure = false;
          break;
        }
    if (!pure) continue;
    std::vector<Term<F>> terms;
    for (const auto& t : g.terms()) {
      Monomial m(keep.size());
      for (std::size_t k = 0; k < keep.size(); ++k) m.e[k] = t.m.e[keep[k]];
      terms.push_back({t.c, std::move(m)});
    }
    out.gens.push_back(
        Polynomial<F>::from_terms(out.subring, out.subring->default_order(), std::move(terms)));
  }
  return out;
}

template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J) {
  const auto& ring = I.ring();
  std::string tag = fresh_var_name(*ring, "tag");
  RingPtr<F> ext = prepend_vars(ring, {tag}, {1});
  Polynomial<F> u = Polynomial<F>::variable(ext, 0);
  Polynomial<F> one_minus_u = Polynomial<F>::constant(ext, ext->field().one()) - u;

  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.gens()) gens.push_back(u * f.embed(ext));
  for (const auto& g : J.gens()) gens.push_back(one_minus_u * g.embed(ext));
  Ideal<F> E(ext, std::move(gens));

  auto elim = eliminate(E, {0});
  std::vector<Polynomial<F>> back;
  for (const auto& h : elim.gens) back.push_back(h.embed(ring));
  return Ideal<F>(ring, std::move(back));
}

// Exact quotient f / g; throws if g does not divide f.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const auto& fld = f.ring()->field();
  Polynomial<F> p = f;
  Polynomial<F> q = Polynomial<F>::zero(f.ring(), f.order());
  const Polynomial<F> gg = g.with_order(f.order());
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    if (!gg.leading_monomial().divides(lt.m))
      throw std::invalid_argument("polynomial division left a remainder");
    auto c = fld.div(lt.c, gg.leading_coeff());
    Monomial m = lt.m / gg.leading_monomial();
    q = q + Polynomial<F>::from_terms(f.ring(), f.order(), {{c, m}});
    p = p.add_scaled(fld.neg(c), m, gg);
  }
  return q;
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Polynomial<F>& f) {
  if (f.is_zero()) {
    auto one = Polynomial<F>::constant(I.ring(), I.ring()->field().one());
    return Ideal<F>(I.ring(), {one});
  }
  Ideal<F> K = intersect(I, Ideal<F>(I.ring(), {f}));
  std::vector<Polynomial<F>> quotients;
  for (const auto& k : K.gens()) quotients.push_back(divide_exact(k, f));
  return Ideal<F>(I.ring(), std::move(quotients));
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& I, const Ideal<F>& J) {
  if (J.is_zero_ideal()) {
    auto one = Polynomial<F>::constant(I.ring(), I.ring()->field().one());
    return Ideal<F>(I.ring(), {one});
  }
  bool first = true;
  Ideal<F> acc;
  for (const auto& f : J.gens()) {
    Ideal<F> Qf = ideal_quotient(I, f);
    acc = first ? Qf : intersect(acc, Qf);
    first = false;
  }
  return acc;
}

template <class F>
struct SaturationResult {
  Ideal<F> ideal;
  int steps = 0;  // smallest k with I : J^k = I : J^(k+1)
};

template <class F>
SaturationResult<F> saturate(const Ideal<F>& I, const Ideal<F>& J) {
  SaturationResult<F> out{I, 0};
  for (;;) {
    Ideal<F> next = ideal_quotient(out.ideal, J);
    if (next.equals(out.ideal)) return out;
    out.ideal = next;
    ++out.steps;
  }
}

// f lies in the radical of I iff 1 - w*f together with I generates the unit
// ideal in the ring extended by a fresh variable w.
template <class F>
bool radical_membership(const Polynomial<F>& f, const Ideal<F>& I) {
  if (f.is_zero()) return true;
  const auto& ring = I.ring();
  std::string wname = fresh_var_name(*ring, "rad_w");
  RingPtr<F> ext = prepend_vars(ring, {wname}, {1});
  Polynomial<F> w = Polynomial<F>::variable(ext, 0);
  Polynomial<F> one = Polynomial<F>::constant(ext, ext->field().one());
  std::vector<Polynomial<F>> gens;
  // Start from the reduced basis rather than the raw generators: it is
  // usually far smaller for derived ideals (e.g. minor ideals), and it is
  // cached on the ideal across repeated membership queries.
  for (const auto& g : I.groebner()) gens.push_back(g.embed(ext));
  gens.push_back(one - w * f.embed(ext));
  return Ideal<F>(ext, std::move(gens)).is_unit_ideal();
}

namespace detail {

// Smallest number of variables meeting every support in the list; `budget`
// prunes branches that cannot beat the best solution found so far.
inline long min_hitting_set(const std::vector<std::vector<int>>& supports, long budget) {
  if (supports.empty()) return 0;
  if (budget <= 0) return std::numeric_limits<long>::max() / 2;
  // Branch on the smallest support; one of its variables must be chosen.
  std::size_t pick = 0;
  for (std::size_t i = 1; i < supports.size(); ++i)
    if (supports[i].size() < supports[pick].size()) pick = i;
  long best = std::numeric_limits<long>::max() / 2;
  for (int v : supports[pick]) {
    std::vector<std::vector<int>> rest;
    for (const auto& s : supports)
      if (std::find(s.begin(), s.end(), v) == s.end()) rest.push_back(s);
    long sub = min_hitting_set(rest, std::min(budget, best) - 1);
    best = std::min(best, 1 + sub);
  }
  return best;
}

}  // namespace detail

// Krull dimension of R/I via a maximal independent set of variables modulo
// the initial ideal. Unit ideal yields the -1 sentinel.
template <class F>
long dimension(const Ideal<F>& I) {
  if (I.is_zero_ideal()) return static_cast<long>(I.ring()->arity());
  if (I.is_unit_ideal()) return kEmptyDimension;
  std::vector<std::vector<int>> supports;
  for (const auto& m : I.initial_monomials()) {
    std::vector<int> s;
    for (std::size_t v = 0; v < m.e.size(); ++v)
      if (m.e[v] != 0) s.push_back(static_cast<int>(v));
    supports.push_back(std::move(s));
  }
  long n = static_cast<long>(I.ring()->arity());
  return n - detail::min_hitting_set(supports, n + 1);
}

template <class F>
long height(const Ideal<F>& I) {
  long d = dimension(I);
  if (d == kEmptyDimension) return kInfiniteHeight;
  return static_cast<long>(I.ring()->arity()) - d;
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& I, const Ideal<F>& J) {
  std::vector<Polynomial<F>> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal<F>(I.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& I, const Ideal<F>& J) {
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return Ideal<F>(I.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_power(const Ideal<F>& I, long k) {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  auto one = Polynomial<F>::constant(I.ring(), I.ring()->field().one());
  Ideal<F> acc(I.ring(), {one});
  for (long i = 0; i < k; ++i) acc = ideal_product(acc, I);
  return acc;
}

}  // namespace reeslike
