#pragma once
// Standardizations: degree-preserving substitutions that turn a weighted
// polynomial ring into a standard graded one. Two kinds are provided —
// step-by-step homogenization (each weight-d variable becomes a product of d
// weight-1 variables) and prime standardization (each selected variable
// becomes a disjoint-variable sum-of-products form), plus the certificates
// and the singular-locus codimension harness built on them.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ideal_ops.hpp"
#include "jacobian.hpp"

namespace reeslike {

template <class F>
struct Standardization {
  enum class Kind { identity, step_by_step, prime_full, prime_subset };

  Kind kind = Kind::identity;
  RingPtr<F> source, target;
  std::vector<Polynomial<F>> images;  // image of each source variable, in target

  // For prime standardizations: the target-variable indices of the fresh
  // block introduced for each replaced source variable (empty if carried).
  std::vector<std::vector<int>> fresh_blocks;

  bool is_identity() const { return kind == Kind::identity; }

  Polynomial<F> apply(const Polynomial<F>& f) const { return f.substitute(target, images); }

  Ideal<F> apply(const Ideal<F>& I) const {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.gens()) gens.push_back(apply(g));
    return Ideal<F>(target, std::move(gens));
  }

  PolyMatrix<F> apply(const PolyMatrix<F>& M) const {
    PolyMatrix<F> out(target, M.rows(), M.cols());
    for (std::size_t r = 0; r < M.rows(); ++r)
      for (std::size_t c = 0; c < M.cols(); ++c) out.at(r, c) = apply(M.at(r, c));
    return out;
  }

  // Every variable's image is homogeneous of the variable's original weight.
  bool is_graded() const {
    for (std::size_t v = 0; v < source->arity(); ++v) {
      if (!images[v].is_homogeneous()) return false;
      if (images[v].max_weighted_degree() != source->weights()[v]) return false;
    }
    return true;
  }
};

namespace detail {

inline void require_fresh(const std::set<std::string>& taken, const std::string& name) {
  if (taken.count(name))
    throw std::invalid_argument("standardization variable name collides: " + name);
}

}  // namespace detail

// Step-by-step homogenization: each variable v of weight d > 1 is replaced by
// the product v1*...*vd of d fresh weight-1 variables; weight-1 variables are
// carried over unchanged. If every weight is already 1 this is the identity.
template <class F>
std::pair<Standardization<F>, Ideal<F>> step_by_step(const RingPtr<F>& ring, const Ideal<F>& I) {
  bool all_one = true;
  for (long w : ring->weights())
    if (w != 1) all_one = false;

  Standardization<F> std_map;
  std_map.source = ring;
  if (all_one) {
    std_map.kind = Standardization<F>::Kind::identity;
    std_map.target = ring;
    for (std::size_t v = 0; v < ring->arity(); ++v)
      std_map.images.push_back(Polynomial<F>::variable(ring, static_cast<int>(v)));
    std_map.fresh_blocks.assign(ring->arity(), {});
    return {std_map, I};
  }

  std::set<std::string> taken(ring->vars().begin(), ring->vars().end());
  std::vector<std::string> names;
  std::vector<long> weights;
  std::vector<std::vector<int>> pieces(ring->arity());  // target indices per source var
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    long d = ring->weights()[v];
    if (d == 1) {
      pieces[v] = {static_cast<int>(names.size())};
      names.push_back(ring->vars()[v]);
      weights.push_back(1);
    } else {
      for (long l = 1; l <= d; ++l) {
        std::string nm = ring->vars()[v] + std::to_string(l);
        detail::require_fresh(taken, nm);
        taken.insert(nm);
        pieces[v].push_back(static_cast<int>(names.size()));
        names.push_back(nm);
        weights.push_back(1);
      }
    }
  }
  std_map.kind = Standardization<F>::Kind::step_by_step;
  std_map.target = make_ring<F>(ring->field(), names, weights);
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    auto img = Polynomial<F>::constant(std_map.target, ring->field().one());
    for (int idx : pieces[v]) img = img * Polynomial<F>::variable(std_map.target, idx);
    std_map.images.push_back(img);
    std_map.fresh_blocks.push_back(ring->weights()[v] > 1 ? pieces[v] : std::vector<int>{});
  }
  return {std_map, std_map.apply(I)};
}

// Prime standardization: each selected variable t_i (weight d_i, 1-based
// serial i, ring arity n) is replaced by
//   F_i = sum_{j=0}^{n} prod_{l=1}^{d_i} w_i_j_l
// over fresh weight-1 variables; unselected variables are carried over with
// their weights. An empty selection means all variables.
template <class F>
std::pair<Standardization<F>, Ideal<F>> prime_standardize(const RingPtr<F>& ring,
                                                          const Ideal<F>& I,
                                                          std::vector<int> selected = {}) {
  std::size_t n = ring->arity();
  if (selected.empty())
    for (std::size_t v = 0; v < n; ++v) selected.push_back(static_cast<int>(v));
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  for (int v : selected)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("selected variable out of range");

  std::set<std::string> taken(ring->vars().begin(), ring->vars().end());
  std::vector<std::string> names;
  std::vector<long> weights;
  // blocks[v][j][l-1] = target index of w_{v+1}_j_l
  std::map<int, std::vector<std::vector<int>>> blocks;
  std::vector<int> carried(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (!std::binary_search(selected.begin(), selected.end(), static_cast<int>(v))) {
      carried[v] = static_cast<int>(names.size());
      names.push_back(ring->vars()[v]);
      weights.push_back(ring->weights()[v]);
      continue;
    }
    long d = ring->weights()[v];
    auto& blk = blocks[static_cast<int>(v)];
    for (std::size_t j = 0; j <= n; ++j) {
      blk.emplace_back();
      for (long l = 1; l <= d; ++l) {
        std::string nm = "w_" + std::to_string(v + 1) + "_" + std::to_string(j) + "_" +
                         std::to_string(l);
        detail::require_fresh(taken, nm);
        taken.insert(nm);
        blk.back().push_back(static_cast<int>(names.size()));
        names.push_back(nm);
        weights.push_back(1);
      }
    }
  }

  Standardization<F> std_map;
  std_map.kind = selected.size() == n ? Standardization<F>::Kind::prime_full
                                      : Standardization<F>::Kind::prime_subset;
  std_map.source = ring;
  std_map.target = make_ring<F>(ring->field(), names, weights);
  const auto& T = std_map.target;
  for (std::size_t v = 0; v < n; ++v) {
    if (carried[v] >= 0) {
      std_map.images.push_back(Polynomial<F>::variable(T, carried[v]));
      std_map.fresh_blocks.emplace_back();
      continue;
    }
    auto Fv = Polynomial<F>::zero(T);
    std::vector<int> flat;
    for (const auto& block : blocks[static_cast<int>(v)]) {
      auto prod = Polynomial<F>::constant(T, ring->field().one());
      for (int idx : block) {
        prod = prod * Polynomial<F>::variable(T, idx);
        flat.push_back(idx);
      }
      Fv = Fv + prod;
    }
    std_map.images.push_back(Fv);
    std_map.fresh_blocks.push_back(flat);
  }
  return {std_map, std_map.apply(I)};
}

// Certificate for prime sequences. Elements are accepted when each one is
// structurally certified irreducible (a linear form, or a sum of at least two
// unit-coefficient squarefree products over pairwise disjoint variables) and
// the elements use pairwise disjoint variables; the regular-sequence property
// is confirmed independently by colon stability. Elements that are visibly
// reducible yield a counterexample; anything else is refused, since there is
// no general primality oracle here.
struct PrimeSequenceReport {
  bool is_prime_sequence = false;
  bool regular_sequence = false;
  bool proper = false;
  bool disjoint_supports = false;
  std::vector<std::string> element_status;  // per element: linear | sum-of-disjoint-products
  std::string counterexample;               // set when is_prime_sequence is false
};

namespace detail {

template <class F>
std::set<int> support_of(const Polynomial<F>& f) {
  std::set<int> s;
  for (const auto& t : f.terms())
    for (std::size_t v = 0; v < t.m.e.size(); ++v)
      if (t.m.e[v] != 0) s.insert(static_cast<int>(v));
  return s;
}

// Classify an element for the structural irreducibility certificate.
// Returns "linear", "sum-of-disjoint-products", "reducible", or "unknown".
template <class F>
std::string classify_for_primality(const Polynomial<F>& f) {
  if (f.is_zero() || !f.is_homogeneous()) return "unknown";
  if (f.max_weighted_degree() <= 0) return "reducible";  // unit: no proper quotient
  bool linear = true;
  for (const auto& t : f.terms())
    if (t.m.total_degree() != 1) linear = false;
  if (linear) return "linear";
  if (f.terms().size() == 1) return "reducible";  // nonlinear monomial
  // Sum of unit-coefficient squarefree products over pairwise disjoint blocks.
  const auto& fld = f.ring()->field();
  std::set<int> seen;
  for (const auto& t : f.terms()) {
    if (!fld.is_one(t.c)) return "unknown";
    for (std::size_t v = 0; v < t.m.e.size(); ++v) {
      if (t.m.e[v] == 0) continue;
      if (t.m.e[v] > 1) return "unknown";  // not squarefree
      if (seen.count(static_cast<int>(v))) return "unknown";
      seen.insert(static_cast<int>(v));
    }
  }
  return "sum-of-disjoint-products";
}

}  // namespace detail

template <class F>
PrimeSequenceReport prime_sequence_check(const std::vector<Polynomial<F>>& elems) {
  if (elems.empty()) throw std::invalid_argument("empty sequence");
  const auto& ring = elems.front().ring();
  PrimeSequenceReport rep;

  for (const auto& g : elems) {
    auto cls = detail::classify_for_primality(g);
    if (cls == "unknown")
      throw std::invalid_argument(
          "no irreducibility certificate for this element shape; primality testing refused");
    rep.element_status.push_back(cls);
  }

  rep.proper = !Ideal<F>(ring, elems).is_unit_ideal();

  rep.disjoint_supports = true;
  std::set<int> used;
  for (const auto& g : elems) {
    for (int v : detail::support_of(g)) {
      if (used.count(v)) rep.disjoint_supports = false;
      used.insert(v);
    }
  }

  rep.regular_sequence = rep.proper;
  for (std::size_t i = 0; i < elems.size() && rep.regular_sequence; ++i) {
    Ideal<F> prefix(ring, std::vector<Polynomial<F>>(elems.begin(), elems.begin() + i));
    if (!ideal_quotient(prefix, elems[i]).equals(prefix)) rep.regular_sequence = false;
  }

  for (std::size_t i = 0; i < elems.size(); ++i)
    if (rep.element_status[i] == "reducible") {
      rep.counterexample = "element " + std::to_string(i + 1) +
                           " is reducible, so the first quotient by it is not a domain";
      rep.is_prime_sequence = false;
      return rep;
    }

  if (!rep.proper) {
    rep.counterexample = "the elements generate the unit ideal";
    return rep;
  }
  if (!rep.disjoint_supports) {
    throw std::invalid_argument(
        "elements share variables; the disjoint-support certificate does not apply");
  }
  if (!rep.regular_sequence) {
    rep.counterexample = "colon stability fails, so the sequence is not even regular";
    return rep;
  }
  rep.is_prime_sequence = true;
  return rep;
}

// Height of the ideal of all partials of the image of one replaced variable.
// The first-slot partials form a regular sequence of n+1 disjoint monomials,
// so the height is at least n+1; both the certificate and the directly
// computed height are reported.
template <class F>
struct PartialsHeightReport {
  long height = 0;       // kInfiniteHeight when the partials generate (1)
  long required = 0;     // source arity + 1
  bool ok = false;
  std::vector<Polynomial<F>> certificate;  // the disjoint regular sequence
};

template <class F>
PartialsHeightReport<F> partials_height_check(const Standardization<F>& std_map,
                                              int source_var) {
  if (std_map.fresh_blocks.at(source_var).empty())
    throw std::invalid_argument("variable was not replaced by this standardization");
  const auto& T = std_map.target;
  const auto& Fv = std_map.images.at(source_var);
  long n = static_cast<long>(std_map.source->arity());
  long d = std_map.source->weights()[source_var];

  PartialsHeightReport<F> rep;
  rep.required = n + 1;
  std::vector<Polynomial<F>> partials;
  for (int idx : std_map.fresh_blocks.at(source_var))
    partials.push_back(Fv.partial_derivative(idx));
  Ideal<F> P(T, partials);
  rep.height = height(P);
  rep.ok = rep.height == kInfiniteHeight || rep.height >= rep.required;

  // The partial with respect to the first variable of each block is the
  // product of the rest of the block; blocks are disjoint.
  for (long j = 0; j <= n; ++j) {
    int first = std_map.fresh_blocks.at(source_var)[static_cast<std::size_t>(j * d)];
    rep.certificate.push_back(Fv.partial_derivative(first));
  }
  return rep;
}

// Side-by-side singular-locus codimension comparison for a standardization.
// In characteristic p the Jacobian-criterion ideal must include the ideal
// itself; `include_ideal` selects that convention.
struct CodimPreservationReport {
  long height_before = 0, height_after = 0;       // ht(I), ht(I^std)
  long sing_height_before = 0, sing_height_after = 0;
  long excess_before = 0, excess_after = 0;       // sing height minus ideal height
  bool ideal_height_agrees = false;
  bool codim_preserved = false;
};

template <class F>
CodimPreservationReport codim_preservation_harness(const Ideal<F>& I,
                                                   const Standardization<F>& std_map,
                                                   bool include_ideal = false,
                                                   unsigned long long budget = 20000) {
  CodimPreservationReport rep;
  rep.height_before = height(I);
  auto Istd = std_map.apply(I);
  rep.height_after = height(Istd);
  rep.ideal_height_agrees = rep.height_before == rep.height_after;

  long c = rep.height_before;
  auto sing_of = [&](const Ideal<F>& J) {
    auto M = jacobian(J.ring(), J.gens());
    auto S = minors_ideal(M, static_cast<std::size_t>(c), budget);
    if (include_ideal) S = ideal_sum(S, J);
    return height(S);
  };
  rep.sing_height_before = sing_of(I);
  rep.sing_height_after = sing_of(Istd);
  rep.excess_before = rep.sing_height_before - rep.height_before;
  rep.excess_after = rep.sing_height_after - rep.height_after;
  rep.codim_preserved = rep.excess_before == rep.excess_after;
  return rep;
}

// Exact ideal identity behind codimension preservation for a single replaced
// variable: with c = ht(I), D the Jacobian rows of the carried variables and
// dF the partials of the replacement image,
//   I_c(Jac(I^std)) = I_c(D^std) + (dF) * I_c(Jac(I)^std).
// Verified as exact equality of ideals.
template <class F>
bool codim_claim_identity_holds(const Ideal<F>& I, const Standardization<F>& std_map,
                                int replaced_var, unsigned long long budget = 20000) {
  if (std_map.fresh_blocks.at(replaced_var).empty())
    throw std::invalid_argument("variable was not replaced by this standardization");
  for (std::size_t v = 0; v < std_map.source->arity(); ++v)
    if (static_cast<int>(v) != replaced_var && !std_map.fresh_blocks[v].empty())
      throw std::invalid_argument("identity check needs a single replaced variable");

  long c = height(I);
  if (c <= 0 || c == kInfiniteHeight)
    throw std::invalid_argument("identity check needs a proper nonzero ideal");
  auto t = static_cast<std::size_t>(c);

  auto Istd = std_map.apply(I);
  auto lhs = minors_ideal(jacobian(std_map.target, Istd.gens()), t, budget);

  auto full = jacobian(std_map.source, I.gens());
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < full.rows(); ++r)
    if (static_cast<int>(r) != replaced_var) kept.push_back(r);
  std::vector<std::size_t> all_cols;
  for (std::size_t cidx = 0; cidx < full.cols(); ++cidx) all_cols.push_back(cidx);
  auto D_std = std_map.apply(full.submatrix(kept, all_cols));
  auto jac_std = std_map.apply(full);

  std::vector<Polynomial<F>> dF;
  for (int idx : std_map.fresh_blocks.at(replaced_var))
    dF.push_back(std_map.images.at(replaced_var).partial_derivative(idx));

  auto rhs = ideal_sum(minors_ideal(D_std, t, budget),
                       ideal_product(Ideal<F>(std_map.target, dF),
                                     minors_ideal(jac_std, t, budget)));
  return lhs.equals(rhs);
}

}  // namespace reeslike
