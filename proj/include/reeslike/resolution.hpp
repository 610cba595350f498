#pragma once
// Minimal graded free resolutions over a weighted polynomial ring, built by
// iterated syzygies with greedy minimal-generator pruning at every step, plus
// the invariants read off them: Betti tables, projective dimension,
// regularity and depth.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ideal.hpp"
#include "module.hpp"

namespace reeslike {

template <class F>
struct FreeComplex {
  RingPtr<F> ring;
  // shifts[i][k]: degree of the k-th basis element of the i-th free module.
  std::vector<std::vector<long>> shifts;
  // diffs[i]: map from module i+1 to module i (rows x cols = rank_i x rank_{i+1}).
  std::vector<PolyMatrix<F>> diffs;

  std::size_t length() const { return shifts.empty() ? 0 : shifts.size() - 1; }
  long rank(std::size_t i) const { return static_cast<long>(shifts[i].size()); }

  bool composition_is_zero() const {
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      if (!(diffs[i] * diffs[i + 1]).is_zero()) return false;
    return true;
  }

  // Every nonzero entry of diffs[i] must be homogeneous of degree
  // shifts[i+1][col] - shifts[i][row].
  bool is_homogeneous_complex() const {
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      const auto& d = diffs[i];
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
          const auto& e = d.at(r, c);
          if (e.is_zero()) continue;
          WDegree wd = e.weighted_degree();
          if (!wd.is_value()) return false;
          if (wd.value != shifts[i + 1][c] - shifts[i][r]) return false;
        }
    }
    return true;
  }

  // Minimal means no unit entries: every nonzero differential entry has
  // positive degree.
  bool is_minimal() const {
    for (const auto& d : diffs)
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
          if (!d.at(r, c).is_zero() && d.at(r, c).is_constant()) return false;
    return true;
  }

  FreeComplex dualized() const {
    FreeComplex d;
    d.ring = ring;
    for (auto it = shifts.rbegin(); it != shifts.rend(); ++it) {
      std::vector<long> neg;
      for (long s : *it) neg.push_back(-s);
      d.shifts.push_back(std::move(neg));
    }
    for (auto it = diffs.rbegin(); it != diffs.rend(); ++it) d.diffs.push_back(it->transpose());
    return d;
  }
};

struct BettiTable {
  // (homological index, internal degree) -> count
  std::map<std::pair<long, long>, long> counts;

  long at(long i, long j) const {
    auto it = counts.find({i, j});
    return it == counts.end() ? 0 : it->second;
  }
  long total(long i) const {
    long s = 0;
    for (const auto& [k, v] : counts)
      if (k.first == i) s += v;
    return s;
  }
};

template <class F>
struct MinimalResolution {
  FreeComplex<F> complex;  // module 0 is the ring itself, resolving R/I
  BettiTable betti;
  long projective_dimension = 0;
  long regularity = 0;
  long depth = 0;
};

namespace detail {

// Degree of a homogeneous vector with component shifts; throws on
// inhomogeneous input.
template <class F>
long vector_degree(const VecPoly<F>& v, const std::vector<long>& shifts) {
  long deg = 0;
  bool seen = false;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (v.comp(i).is_zero()) continue;
    WDegree wd = v.comp(i).weighted_degree();
    if (!wd.is_value()) throw std::invalid_argument("inhomogeneous vector in graded computation");
    long d = wd.value + shifts[i];
    if (seen && d != deg) throw std::invalid_argument("vector mixes degrees in graded computation");
    deg = d;
    seen = true;
  }
  if (!seen) throw std::invalid_argument("degree of zero vector");
  return deg;
}

// Greedy minimal generating set of a graded submodule: candidates ascending by
// degree, each kept only if not already generated. Valid by the graded
// Nakayama argument.
template <class F>
std::vector<std::pair<VecPoly<F>, long>> minimal_module_generators(
    std::vector<std::pair<VecPoly<F>, long>> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<std::pair<VecPoly<F>, long>> kept;
  std::vector<VecPoly<F>> kept_vecs;
  for (auto& cand : candidates) {
    if (cand.first.is_zero()) continue;
    if (!kept_vecs.empty()) {
      auto gb = module_groebner(kept_vecs);
      if (module_membership(cand.first, gb)) continue;
    }
    kept_vecs.push_back(cand.first);
    kept.push_back(std::move(cand));
  }
  return kept;
}

}  // namespace detail

// Minimal homogeneous generators of a graded ideal, ascending by degree;
// within a degree, larger leading monomials first (so x1 precedes x2).
template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I) {
  std::vector<std::pair<Polynomial<F>, long>> candidates;
  for (const auto& g : I.gens()) {
    WDegree wd = g.weighted_degree();
    if (!wd.is_value())
      throw std::invalid_argument("minimal generators need homogeneous input");
    candidates.push_back({g, wd.value});
  }
  const auto& ord = I.ring()->default_order();
  const auto& w = I.ring()->weights();
  std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return ord.compare(a.first.leading_monomial(), b.first.leading_monomial(), w) > 0;
  });
  std::vector<Polynomial<F>> kept;
  for (auto& [g, d] : candidates) {
    if (!kept.empty() && Ideal<F>(I.ring(), kept).contains(g)) continue;
    kept.push_back(std::move(g));
  }
  return kept;
}

// Minimal free resolution of R/I for a proper homogeneous ideal I (for the
// zero ideal the resolution is the ring alone).
template <class F>
MinimalResolution<F> free_resolution(const Ideal<F>& I, const GBConfig& config = GBConfig{}) {
  const auto& ring = I.ring();
  MinimalResolution<F> res;
  res.complex.ring = ring;
  res.complex.shifts.push_back({0});
  res.betti.counts[{0, 0}] = 1;

  if (!I.is_zero_ideal() && I.is_unit_ideal())
    throw std::invalid_argument("resolution needs a proper ideal");

  std::vector<Polynomial<F>> gens = minimal_generators(I);
  if (!gens.empty()) {
    const MonomialOrder& ord = ring->default_order();
    std::vector<long> level_shifts;
    PolyMatrix<F> d1(ring, 1, gens.size());
    std::vector<VecPoly<F>> cur;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      d1.at(0, k) = gens[k];
      level_shifts.push_back(gens[k].weighted_degree().value);
      cur.push_back(VecPoly<F>::from_components({gens[k]}, ord));
    }
    res.complex.shifts.push_back(level_shifts);
    res.complex.diffs.push_back(std::move(d1));

    while (true) {
      auto raw = syzygies(cur, config);
      std::vector<std::pair<VecPoly<F>, long>> candidates;
      const auto& prev_shifts = res.complex.shifts.back();
      for (auto& v : raw) candidates.push_back({v, detail::vector_degree(v, prev_shifts)});
      auto kept = detail::minimal_module_generators(std::move(candidates));
      if (kept.empty()) break;

      PolyMatrix<F> d(ring, prev_shifts.size(), kept.size());
      std::vector<long> new_shifts;
      std::vector<VecPoly<F>> next;
      for (std::size_t c = 0; c < kept.size(); ++c) {
        for (std::size_t r = 0; r < prev_shifts.size(); ++r)
          d.at(r, c) = kept[c].first.comp(r);
        new_shifts.push_back(kept[c].second);
        next.push_back(kept[c].first);
      }
      res.complex.shifts.push_back(std::move(new_shifts));
      res.complex.diffs.push_back(std::move(d));
      cur = std::move(next);
    }
  }

  for (std::size_t i = 1; i < res.complex.shifts.size(); ++i)
    for (long s : res.complex.shifts[i]) res.betti.counts[{static_cast<long>(i), s}] += 1;

  res.projective_dimension = static_cast<long>(res.complex.length());
  long reg = 0;
  for (std::size_t i = 0; i < res.complex.shifts.size(); ++i)
    for (long s : res.complex.shifts[i])
      reg = std::max(reg, s - static_cast<long>(i));
  res.regularity = reg;
  res.depth = static_cast<long>(ring->arity()) - res.projective_dimension;
  return res;
}

}  // namespace reeslike
