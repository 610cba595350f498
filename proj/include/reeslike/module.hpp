#pragma once
// Free-module computations: vectors of polynomials under a position-over-term
// order (lower component index dominates), module Groebner bases, membership,
// and syzygies via an augmented module.

#include <stdexcept>
#include <utility>
#include <vector>

#include "gb.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace reeslike {

template <class F>
class VecPoly {
 public:
  using Elem = typename F::Elem;

  VecPoly() = default;

  static VecPoly zero(RingPtr<F> ring, std::size_t rank, const MonomialOrder& ord) {
    VecPoly v;
    v.ring_ = std::move(ring);
    v.ord_ = ord;
    v.c_.assign(rank, Polynomial<F>::zero(v.ring_, v.ord_));
    return v;
  }

  static VecPoly from_components(std::vector<Polynomial<F>> comps, const MonomialOrder& ord) {
    if (comps.empty()) throw std::invalid_argument("vector needs at least one component");
    VecPoly v;
    v.ring_ = comps[0].ring();
    v.ord_ = ord;
    v.c_.reserve(comps.size());
    for (auto& p : comps) v.c_.push_back(p.with_order(ord));
    return v;
  }

  static VecPoly unit(RingPtr<F> ring, std::size_t rank, std::size_t comp,
                      const MonomialOrder& ord) {
    VecPoly v = zero(std::move(ring), rank, ord);
    v.c_[comp] = Polynomial<F>::constant(v.ring_, v.ring_->field().one()).with_order(ord);
    return v;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  std::size_t rank() const { return c_.size(); }
  const Polynomial<F>& comp(std::size_t i) const { return c_[i]; }
  Polynomial<F>& comp(std::size_t i) { return c_[i]; }

  bool is_zero() const {
    for (const auto& p : c_)
      if (!p.is_zero()) return false;
    return true;
  }

  // Index of the leading component under position-over-term priority.
  std::size_t lead_comp() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return i;
    throw std::logic_error("leading component of zero vector");
  }
  const Term<F>& leading_term() const { return c_[lead_comp()].leading_term(); }

  VecPoly operator+(const VecPoly& o) const { return combine(o, false); }
  VecPoly operator-(const VecPoly& o) const { return combine(o, true); }

  VecPoly scaled(const Elem& c) const {
    VecPoly v(*this);
    for (auto& p : v.c_) p = p.scaled(c);
    return v;
  }

  VecPoly add_scaled(const Elem& c, const Monomial& m, const VecPoly& o) const {
    VecPoly v(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) v.c_[i] = c_[i].add_scaled(c, m, o.c_[i]);
    return v;
  }

  VecPoly mul_poly(const Polynomial<F>& p) const {
    VecPoly v(*this);
    for (auto& q : v.c_) q = q * p;
    return v;
  }

  VecPoly monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_term().c));
  }

  bool equals(const VecPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }
  bool operator==(const VecPoly& o) const { return equals(o); }

 private:
  VecPoly combine(const VecPoly& o, bool subtract) const {
    if (c_.size() != o.c_.size()) throw std::invalid_argument("vector rank mismatch");
    VecPoly v(*this);
    for (std::size_t i = 0; i < c_.size(); ++i)
      v.c_[i] = subtract ? c_[i] - o.c_[i] : c_[i] + o.c_[i];
    return v;
  }

  RingPtr<F> ring_;
  MonomialOrder ord_;
  std::vector<Polynomial<F>> c_;
};

// Full normal form of v modulo the basis, reducing leading module terms under
// position-over-term priority.
template <class F>
VecPoly<F> module_normal_form(const VecPoly<F>& v, const std::vector<VecPoly<F>>& basis) {
  if (v.is_zero() || basis.empty()) return v;
  const auto& fld = v.ring()->field();
  VecPoly<F> p = v;
  VecPoly<F> rem = VecPoly<F>::zero(v.ring(), v.rank(), v.order());
  while (!p.is_zero()) {
    std::size_t i = p.lead_comp();
    const auto& lt = p.comp(i).leading_term();
    bool reduced = false;
    for (const auto& b : basis) {
      if (b.is_zero() || b.lead_comp() != i) continue;
      const auto& bl = b.comp(i).leading_term();
      if (!bl.m.divides(lt.m)) continue;
      p = p.add_scaled(fld.neg(fld.div(lt.c, bl.c)), lt.m / bl.m, b);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial<F> head = Polynomial<F>::from_terms(p.ring(), p.order(), {lt});
      rem.comp(i) = rem.comp(i) + head;
      p.comp(i) = p.comp(i) - head;
    }
  }
  return rem;
}

// Buchberger for submodules of a free module. Pairs form only within a common
// leading component; no pair criteria are applied (they need care over
// modules, and inputs here are desk-sized).
template <class F>
std::vector<VecPoly<F>> module_groebner(const std::vector<VecPoly<F>>& gens,
                                        const GBConfig& config = GBConfig{}) {
  std::vector<VecPoly<F>> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) return {};
  // Copies, not references: G reallocates as the basis grows.
  RingPtr<F> ring = G[0].ring();
  const MonomialOrder mord = G[0].order();
  const auto& weights = ring->weights();
  const auto& fld = ring->field();

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    long wdeg;
    unsigned long seq;
  };
  std::vector<Pair> pending;
  unsigned long seq = 0;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i].lead_comp() != G[j].lead_comp()) continue;
      Monomial L = Monomial::lcm(G[i].leading_term().m, G[j].leading_term().m);
      long wd = L.weighted_degree(weights);
      pending.push_back({i, j, std::move(L), wd, seq++});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

  while (!pending.empty()) {
    std::size_t pick = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const auto& a = pending[k];
      const auto& b = pending[pick];
      bool before;
      if (config.strategy == GBConfig::Strategy::fifo) {
        before = a.seq < b.seq;
      } else if (a.wdeg != b.wdeg) {
        before = a.wdeg < b.wdeg;
      } else {
        int c = Monomial::lex_compare(a.lcm, b.lcm);
        before = c != 0 ? c < 0 : (a.i != b.i ? a.i < b.i : a.j < b.j);
      }
      if (before) pick = k;
    }
    Pair pr = std::move(pending[pick]);
    pending.erase(pending.begin() + pick);

    if (pr.wdeg > config.degree_cap) throw DegreeCapExceeded(config.degree_cap, pr.wdeg);

    const auto& fi = G[pr.i];
    const auto& fj = G[pr.j];
    Monomial mi = pr.lcm / fi.leading_term().m;
    Monomial mj = pr.lcm / fj.leading_term().m;
    VecPoly<F> s = VecPoly<F>::zero(ring, fi.rank(), fi.order())
                       .add_scaled(fld.inv(fi.leading_term().c), mi, fi)
                       .add_scaled(fld.neg(fld.inv(fj.leading_term().c)), mj, fj);
    VecPoly<F> h = module_normal_form(s, G);
    if (h.is_zero()) continue;
    long hdeg = h.leading_term().m.weighted_degree(weights);
    if (hdeg > config.degree_cap) throw DegreeCapExceeded(config.degree_cap, hdeg);
    G.push_back(h.monic());
    push_pairs_for(G.size() - 1);
  }

  // Reduce to the unique reduced module basis.
  std::vector<std::size_t> idx(G.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    std::size_t cx = G[x].lead_comp(), cy = G[y].lead_comp();
    if (cx != cy) return cx < cy;
    return mord.compare(G[x].leading_term().m, G[y].leading_term().m, weights) < 0;
  });
  std::vector<VecPoly<F>> minimal;
  for (std::size_t k : idx) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.lead_comp() == G[k].lead_comp() && h.leading_term().m.divides(G[k].leading_term().m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(G[k]);
  }
  std::vector<VecPoly<F>> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<VecPoly<F>> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    out.push_back(module_normal_form(minimal[k], others).monic());
  }
  return out;
}

template <class F>
bool module_membership(const VecPoly<F>& v, const std::vector<VecPoly<F>>& groebner_basis) {
  return module_normal_form(v, groebner_basis).is_zero();
}

// First syzygies of the given vectors: all (a_1..a_s) with sum a_k gens[k] = 0,
// found by eliminating the original block from the augmented module.
template <class F>
std::vector<VecPoly<F>> syzygies(const std::vector<VecPoly<F>>& gens,
                                 const GBConfig& config = GBConfig{}) {
  if (gens.empty()) return {};
  const auto& ring = gens[0].ring();
  const auto& ord = gens[0].order();
  std::size_t r = gens[0].rank();
  std::size_t s = gens.size();

  std::vector<VecPoly<F>> augmented;
  for (std::size_t k = 0; k < s; ++k) {
    VecPoly<F> a = VecPoly<F>::zero(ring, r + s, ord);
    for (std::size_t i = 0; i < r; ++i) a.comp(i) = gens[k].comp(i);
    a.comp(r + k) = Polynomial<F>::constant(ring, ring->field().one()).with_order(ord);
    augmented.push_back(std::move(a));
  }
  auto gb = module_groebner(augmented, config);

  std::vector<VecPoly<F>> out;
  for (const auto& g : gb) {
    bool pure = true;
    for (std::size_t i = 0; i < r; ++i)
      if (!g.comp(i).is_zero()) {
        pure = false;
        break;
      }
    if (!pure) continue;
    VecPoly<F> syz = VecPoly<F>::zero(ring, s, ord);
    for (std::size_t k = 0; k < s; ++k) syz.comp(k) = g.comp(r + k);
    out.push_back(std::move(syz));
  }
  return out;
}

// Syzygies of an ideal's generators, as columns of a matrix.
template <class F>
PolyMatrix<F> syzygy_matrix(const std::vector<Polynomial<F>>& gens,
                            const GBConfig& config = GBConfig{}) {
  if (gens.empty()) return PolyMatrix<F>();
  const auto& ring = gens[0].ring();
  const auto& ord = gens[0].order();
  std::vector<VecPoly<F>> vecs;
  for (const auto& f : gens) vecs.push_back(VecPoly<F>::from_components({f}, ord));
  auto syz = syzygies(vecs, config);
  PolyMatrix<F> M(ring, gens.size(), syz.size());
  for (std::size_t c = 0; c < syz.size(); ++c)
    for (std::size_t r = 0; r < gens.size(); ++r) M.at(r, c) = syz[c].comp(r);
  return M;
}

}  // namespace reeslike
