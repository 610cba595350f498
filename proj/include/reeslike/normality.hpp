#pragma once
// Seminormality and Frobenius-splitting predicates for the subrings
// S[It, t^2] and S[It] of S[t]. Elements of S[t] are handled as coefficient
// lists indexed by the t-exponent; membership reduces to ideal membership of
// the coefficients (every odd-index coefficient for S[It, t^2], the j-th
// power for the t^j coefficient of S[It]). On top of the memberships sit a
// bounded counterexample search for seminormality, the squarefree test for
// monomial ideals with a constructive cube witness when it fails, and
// Fedder's colon criterion for F-splitting in odd prime characteristic.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "format.hpp"
#include "gb.hpp"
#include "ideal.hpp"
#include "ideal_ops.hpp"
#include "rees.hpp"

namespace reeslike {

// ---------------------------------------------------------------------------
// Coefficient lists: p = sum coeff[j] * t^j with coeff[j] in the base ring.

// Splits p along powers of the variable at t_index. Every coefficient is
// expressed in `base`, which must contain all other variables of p's ring by
// name. Trailing zero coefficients are trimmed; the zero polynomial yields an
// empty list.
template <class F>
std::vector<Polynomial<F>> t_coefficients(const Polynomial<F>& p, int t_index,
                                          const RingPtr<F>& base) {
  const auto& src = p.ring();
  if (t_index < 0 || static_cast<std::size_t>(t_index) >= src->arity())
    throw std::invalid_argument("t_coefficients: variable index out of range");

  std::vector<int> to_base(src->arity(), -1);
  for (std::size_t v = 0; v < src->arity(); ++v) {
    if (static_cast<int>(v) == t_index) continue;
    to_base[v] = base->var_index(src->vars()[v]);
  }

  std::vector<std::vector<Term<F>>> buckets;
  for (const auto& t : p.terms()) {
    const int k = t.m.e[t_index];
    Monomial m(base->arity());
    for (std::size_t v = 0; v < src->arity(); ++v) {
      if (static_cast<int>(v) == t_index || t.m.e[v] == 0) continue;
      if (to_base[v] < 0)
        throw std::invalid_argument("t_coefficients: base ring misses variable " +
                                    src->vars()[v]);
      m.e[to_base[v]] = t.m.e[v];
    }
    if (buckets.size() <= static_cast<std::size_t>(k)) buckets.resize(k + 1);
    buckets[k].push_back({t.c, std::move(m)});
  }

  std::vector<Polynomial<F>> coeff;
  coeff.reserve(buckets.size());
  for (auto& b : buckets)
    coeff.push_back(Polynomial<F>::from_terms(base, base->default_order(), std::move(b)));
  while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
  return coeff;
}

// ---------------------------------------------------------------------------
// Membership in S[It, t^2]: all odd-index coefficients lie in I (a product of
// j generators and any number of t^2 factors contributes to an odd t-exponent
// only when j >= 1, and I^j subseteq I; even exponents admit j = 0).

template <class F>
bool rees_like_membership(const std::vector<Polynomial<F>>& coeff, const Ideal<F>& I) {
  for (std::size_t j = 1; j < coeff.size(); j += 2)
    if (!I.contains(coeff[j])) return false;
  return true;
}

template <class F>
bool rees_like_membership(const Polynomial<F>& p, int t_index, const Ideal<F>& I) {
  return rees_like_membership(t_coefficients(p, t_index, I.ring()), I);
}

// ---------------------------------------------------------------------------
// Powers of an ideal, computed on demand and cached together with a Groebner
// basis under the base ring's default order so that repeated membership
// queries against the same power reduce against a cached basis. The config's
// degree cap must accommodate the power's generator degrees.

template <class F>
class IdealPowers {
 public:
  explicit IdealPowers(Ideal<F> base, GBConfig config = {})
      : base_(std::move(base)), config_(config) {
    if (base_.gens().empty())
      throw std::invalid_argument("IdealPowers: base ideal needs at least one generator");
  }

  const Ideal<F>& power(long k) {
    if (k < 0) throw std::invalid_argument("IdealPowers: negative exponent");
    while (static_cast<long>(pow_.size()) <= k) grow();
    return pow_[k];
  }

  const Ideal<F>& base() const { return base_; }

 private:
  void grow() {
    const auto& ring = base_.ring();
    const long k = static_cast<long>(pow_.size());
    if (k == 1) {
      // Share the caller's ideal (and its Groebner cache) for the first power.
      Ideal<F> first = base_;
      first.groebner(ring->default_order(), config_);
      pow_.push_back(std::move(first));
      return;
    }
    std::vector<Polynomial<F>> gens;
    if (k == 0) {
      gens.push_back(Polynomial<F>::constant(ring, ring->field().one()));
    } else {
      // Products over multisets of size k drawn from the base generators.
      std::vector<std::size_t> pick(k, 0);
      const std::size_t m = base_.gens().size();
      while (true) {
        auto prod = base_.gens()[pick[0]];
        for (long i = 1; i < k; ++i) prod = prod * base_.gens()[pick[i]];
        gens.push_back(std::move(prod));
        long i = k - 1;
        while (i >= 0 && pick[i] == m - 1) --i;
        if (i < 0) break;
        const std::size_t next = pick[i] + 1;
        for (long j = i; j < k; ++j) pick[j] = next;
      }
    }
    Ideal<F> P(ring, std::move(gens));
    P.groebner(ring->default_order(), config_);
    pow_.push_back(std::move(P));
  }

  Ideal<F> base_;
  GBConfig config_;
  std::vector<Ideal<F>> pow_;  // pow_[k] = base_^k, pow_[0] the unit ideal
};

// ---------------------------------------------------------------------------
// Membership in S[It]: the t^j coefficient lies in I^j for every j. Powers
// beyond power_cap are refused rather than silently attempted.

inline constexpr long kDefaultPowerCap = 6;

template <class F>
bool rees_algebra_membership(const std::vector<Polynomial<F>>& coeff, IdealPowers<F>& powers,
                             long power_cap = kDefaultPowerCap) {
  for (std::size_t j = 1; j < coeff.size(); ++j) {
    if (coeff[j].is_zero()) continue;
    if (static_cast<long>(j) > power_cap)
      throw std::domain_error("rees_algebra_membership: t-exponent " + std::to_string(j) +
                              " exceeds the power cap " + std::to_string(power_cap));
    if (!powers.power(static_cast<long>(j)).contains(coeff[j])) return false;
  }
  return true;
}

template <class F>
bool rees_algebra_membership(const Polynomial<F>& p, int t_index, IdealPowers<F>& powers,
                             long power_cap = kDefaultPowerCap) {
  return rees_algebra_membership(t_coefficients(p, t_index, powers.base().ring()), powers,
                                 power_cap);
}

template <class F>
bool rees_algebra_membership(const Polynomial<F>& p, int t_index, const Ideal<F>& I,
                             long power_cap = kDefaultPowerCap, GBConfig config = {}) {
  IdealPowers<F> powers(I, config);
  return rees_algebra_membership(p, t_index, powers, power_cap);
}

// ---------------------------------------------------------------------------
// Bounded seminormality search. A subring A of S[t] that is seminormal
// contains every element of S[t] whose square and cube it contains; taking
// candidates b = a * t with sigma odd, b^2 = a^2 t^2 always lies in
// S[It, t^2], so a counterexample needs exactly a not in I with a^sigma in I.
// The search ranges over monomials of weighted degree at most `bound` and
// over powers of the given generators below the same bound, in a fixed
// deterministic order, and every reported witness is re-verified through the
// membership routines.

enum class ProbeOutcome { counterexample_found, none_found_up_to_bound };

template <class F>
struct SeminormalityProbe {
  ProbeOutcome outcome = ProbeOutcome::none_found_up_to_bound;
  int sigma = 3;
  long bound = 0;
  Polynomial<F> base_element;  // a, in the base ring (zero when none found)
  Polynomial<F> witness;       // a * t, in base ring plus a fresh last variable t
  bool witness_outside = false;        // a*t outside S[It, t^2]
  bool witness_square_inside = false;  // (a*t)^2 inside
  bool witness_power_inside = false;   // (a*t)^sigma inside

  bool refuted() const { return outcome == ProbeOutcome::counterexample_found; }
};

namespace detail {

// All monomials of weighted degree <= bound, ordered by weighted degree and
// then by exponent vector, largest first (so x1-heavy candidates come first).
template <class F>
std::vector<Polynomial<F>> monomials_up_to(const RingPtr<F>& ring, long bound) {
  std::vector<Monomial> all;
  Monomial cur(ring->arity());
  const auto& w = ring->weights();
  auto rec = [&](auto&& self, std::size_t v, long left) -> void {
    if (v == ring->arity()) {
      all.push_back(cur);
      return;
    }
    for (long e = 0; e * w[v] <= left; ++e) {
      cur.e[v] = static_cast<std::int32_t>(e);
      self(self, v + 1, left - e * w[v]);
    }
    cur.e[v] = 0;
  };
  rec(rec, 0, bound);
  std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) {
    const long da = a.weighted_degree(w), db = b.weighted_degree(w);
    if (da != db) return da < db;
    return b.e < a.e;
  });
  std::vector<Polynomial<F>> out;
  out.reserve(all.size());
  for (auto& m : all)
    out.push_back(Polynomial<F>::from_terms(ring, ring->default_order(),
                                            {{ring->field().one(), std::move(m)}}));
  return out;
}

// Extends the base ring by one fresh variable (named t when free) of weight 1.
template <class F>
std::pair<RingPtr<F>, int> ring_with_t(const RingPtr<F>& base) {
  std::string name = "t";
  while (base->var_index(name) >= 0) name += "_";
  auto vars = base->vars();
  auto weights = base->weights();
  vars.push_back(name);
  weights.push_back(1);
  auto ext = make_ring<F>(base->field(), std::move(vars), std::move(weights));
  return {ext, static_cast<int>(ext->arity()) - 1};
}

}  // namespace detail

template <class F>
SeminormalityProbe<F> seminormality_probe(const Ideal<F>& I, int sigma = 3, long bound = 6) {
  if (sigma < 3 || sigma % 2 == 0)
    throw std::invalid_argument("seminormality_probe: sigma must be an odd integer >= 3");

  SeminormalityProbe<F> probe;
  probe.sigma = sigma;
  probe.bound = bound;

  std::vector<Polynomial<F>> candidates =
      detail::monomials_up_to<F>(I.ring(), bound);
  for (const auto& g : I.gens()) {
    if (g.is_zero() || g.max_weighted_degree() == 0) continue;
    auto pw = g * g;
    while (pw.max_weighted_degree() <= bound) {
      candidates.push_back(pw);
      pw = pw * g;
    }
  }

  for (const auto& a : candidates) {
    if (I.contains(a)) continue;
    if (!I.contains(a.pow(sigma))) continue;

    auto [ext, t_index] = detail::ring_with_t(I.ring());
    auto w = a.embed(ext) * Polynomial<F>::variable(ext, t_index);
    probe.outcome = ProbeOutcome::counterexample_found;
    probe.base_element = a;
    probe.witness = w;
    probe.witness_outside = !rees_like_membership(w, t_index, I);
    probe.witness_square_inside = rees_like_membership(w * w, t_index, I);
    probe.witness_power_inside = rees_like_membership(w.pow(sigma), t_index, I);
    return probe;
  }
  return probe;
}

// ---------------------------------------------------------------------------
// Radical test for monomial ideals: minimal monomial generators squarefree.
// For non-radical input, a cube witness a with a not in I and a^3 in I is
// constructed from the squarefree part of an offending generator.

template <class F>
std::vector<Monomial> minimal_monomial_generators(const Ideal<F>& I) {
  std::vector<Monomial> mono;
  for (const auto& g : I.gens()) {
    if (g.is_zero()) continue;
    if (g.terms().size() != 1)
      throw std::invalid_argument("expected a monomial ideal; generator " + to_string(g) +
                                  " has several terms");
    mono.push_back(g.terms().front().m);
  }
  auto divides = [](const Monomial& a, const Monomial& b) {
    for (std::size_t v = 0; v < a.e.size(); ++v)
      if (a.e[v] > b.e[v]) return false;
    return true;
  };
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < mono.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(mono[j], mono[i]) && !(mono[i] == mono[j] && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(mono[i]);
  }
  return minimal;
}

template <class F>
bool is_radical_monomial(const Ideal<F>& I) {
  for (const auto& m : minimal_monomial_generators(I))
    for (auto e : m.e)
      if (e > 1) return false;
  return true;
}

template <class F>
struct CubeWitness {
  bool found = false;
  Polynomial<F> element;  // a with a not in I and a^3 in I
  long power = 0;         // least M with squarefree_part^M in I; element = part^ceil(M/3)
};

template <class F>
CubeWitness<F> monomial_cube_witness(const Ideal<F>& I) {
  CubeWitness<F> w;
  for (const auto& m : minimal_monomial_generators(I)) {
    Monomial root(m.e.size());
    bool squarefree = true;
    for (std::size_t v = 0; v < m.e.size(); ++v) {
      root.e[v] = m.e[v] > 0 ? 1 : 0;
      if (m.e[v] > 1) squarefree = false;
    }
    if (squarefree) continue;
    const auto& ring = I.ring();
    auto r = Polynomial<F>::from_terms(ring, ring->default_order(),
                                       {{ring->field().one(), std::move(root)}});
    long M = 1;
    while (!I.contains(r.pow(M))) ++M;
    // M >= 2 because the squarefree part of a minimal generator properly
    // divides it, so ceil(M/3) < M and r^ceil(M/3) stays outside.
    w.found = true;
    w.element = r.pow((M + 2) / 3);
    w.power = M;
    return w;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Seminormality verdict for S[It, t^2] over a monomial ideal: seminormal
// exactly when I is radical. Non-monomial input without a caller-supplied
// radicality flag stays undetermined.

enum class Seminormality { seminormal, not_seminormal, undetermined };

template <class F>
struct SeminormalityReport {
  Seminormality status = Seminormality::undetermined;
  bool monomial = false;
  bool radical = false;          // meaningful when monomial or flag-supplied
  CubeWitness<F> cube;           // populated when not radical
  SeminormalityProbe<F> probe;   // sigma = 3 confirmation of the cube witness
};

template <class F>
SeminormalityReport<F> rees_like_seminormality(const Ideal<F>& I) {
  SeminormalityReport<F> rep;
  try {
    rep.radical = is_radical_monomial(I);
    rep.monomial = true;
  } catch (const std::invalid_argument&) {
    return rep;  // undetermined
  }
  rep.status = rep.radical ? Seminormality::seminormal : Seminormality::not_seminormal;
  if (!rep.radical) {
    rep.cube = monomial_cube_witness(I);
    long bound = rep.cube.element.max_weighted_degree();
    rep.probe = seminormality_probe(I, 3, std::max<long>(bound, 1));
  }
  return rep;
}

template <class F>
SeminormalityReport<F> rees_like_seminormality(const Ideal<F>&, bool radical_supplied) {
  SeminormalityReport<F> rep;
  rep.radical = radical_supplied;
  rep.status = radical_supplied ? Seminormality::seminormal : Seminormality::not_seminormal;
  return rep;
}

// ---------------------------------------------------------------------------
// Fedder's criterion in characteristic p > 2: R/I is F-split at the origin
// exactly when (I^[p] : I) is not contained in (x_1^p, ..., x_n^p), where
// I^[p] is generated by the p-th powers of any generating set. The check runs
// over F_p for p in {3, 5} and at most 6 ambient variables unless the caller
// lifts those guards.

struct FedderConfig {
  bool allow_any_odd_prime = false;
  std::size_t max_vars = 6;
};

template <class F>
struct FsplitReport {
  long p = 0;
  bool split = false;
  Polynomial<F> certificate;  // a colon generator outside (x_1^p, ...), when split
};

template <class F>
FsplitReport<F> fedder_fsplit(const Ideal<F>& I, const FedderConfig& config = {}) {
  const auto& ring = I.ring();
  const long p = ring->field().characteristic();
  if (p == 0)
    throw std::domain_error("fedder_fsplit: needs prime characteristic");
  if (p == 2)
    throw std::domain_error("fedder_fsplit: characteristic 2 is not supported");
  if (!config.allow_any_odd_prime && p != 3 && p != 5)
    throw std::domain_error("fedder_fsplit: characteristic " + std::to_string(p) +
                            " is outside the default range {3, 5}");
  if (ring->arity() > config.max_vars)
    throw std::domain_error("fedder_fsplit: " + std::to_string(ring->arity()) +
                            " variables exceed the limit " + std::to_string(config.max_vars));
  if (I.gens().empty())
    throw std::invalid_argument("fedder_fsplit: needs at least one generator");
  for (const auto& g : I.gens())
    if (!g.is_homogeneous())
      throw std::invalid_argument("fedder_fsplit: generators must be homogeneous");

  std::vector<Polynomial<F>> frob;
  frob.reserve(I.gens().size());
  for (const auto& g : I.gens()) frob.push_back(g.pow(p));
  Ideal<F> bracket(ring, std::move(frob));

  std::vector<Polynomial<F>> mp;
  mp.reserve(ring->arity());
  for (std::size_t v = 0; v < ring->arity(); ++v)
    mp.push_back(Polynomial<F>::variable(ring, static_cast<int>(v), static_cast<int>(p)));
  Ideal<F> frobenius_max(ring, std::move(mp));

  FsplitReport<F> rep;
  rep.p = p;
  const Ideal<F> colon = ideal_quotient(bracket, I);
  for (const auto& q : colon.gens()) {
    if (!frobenius_max.contains(q)) {
      rep.split = true;
      rep.certificate = q;
      return rep;
    }
  }
  return rep;
}

}  // namespace reeslike
