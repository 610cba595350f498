#pragma once
// Construction of the extended ring T = S[y_1..y_m, z] with deg y_i =
// deg f_i + 1 and deg z = 2, the presentation ideal generated by the lifted
// syzygies sum_i c_ij y_i and the products y_i y_j - z f_i f_j, the
// independent kernel route through t-elimination, and the numeric invariants
// of the quotient together with their closed-form counterparts.

#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert.hpp"
#include "ideal_ops.hpp"
#include "matrix.hpp"
#include "module.hpp"
#include "resolution.hpp"

namespace reeslike {

template <class F>
struct ReesLikePresentation {
  RingPtr<F> base_ring;   // S, the ring the input ideal lives in
  RingPtr<F> big_ring;    // T = S[y_1..y_m, z]
  Ideal<F> base_ideal;    // the input ideal, as given
  std::vector<Polynomial<F>> f;  // minimal generators, ascending degree (in S)
  std::vector<long> d;           // their degrees
  PolyMatrix<F> syzygy_mat;      // minimal first syzygies of f, one per column (in S)
  std::vector<long> syzygy_degrees;        // column degrees of syzygy_mat
  std::vector<Polynomial<F>> syz_gens;     // sum_i c_ij y_i (in T)
  std::vector<Polynomial<F>> gen_gens;     // y_i y_j - z f_i f_j, i <= j (in T)
  Ideal<F> presentation;                   // ideal of T generated by both blocks

  std::size_t num_gens() const { return f.size(); }
  int y_index(std::size_t i) const {  // index of y_{i+1} in the big ring
    return static_cast<int>(base_ring->arity() + i);
  }
  int z_index() const { return static_cast<int>(base_ring->arity() + f.size()); }
};

namespace detail {

// Scale a syzygy column so its last nonzero entry is monic; fixes the sign
// convention of the lifted linear relations.
template <class F>
void normalize_column_by_last(std::vector<Polynomial<F>>& col, const F& fld) {
  for (auto it = col.rbegin(); it != col.rend(); ++it) {
    if (it->is_zero()) continue;
    auto c = fld.inv(it->leading_coeff());
    for (auto& p : col) p = p.scaled(c);
    return;
  }
}

}  // namespace detail

template <class F>
ReesLikePresentation<F> build_rees_like(const Ideal<F>& I, const GBConfig& config = GBConfig{}) {
  const auto& S = I.ring();
  const auto& fld = S->field();

  ReesLikePresentation<F> pres;
  pres.base_ring = S;
  pres.base_ideal = I;
  pres.f = minimal_generators(I);
  if (pres.f.empty()) throw std::invalid_argument("the zero ideal has no extended algebra");
  for (const auto& g : pres.f) pres.d.push_back(g.weighted_degree().value);
  std::size_t m = pres.f.size();

  // T = S[y_1..y_m, z]; refuse name collisions instead of silently renaming.
  std::vector<std::string> vars = S->vars();
  std::vector<long> weights = S->weights();
  for (std::size_t i = 1; i <= m; ++i) {
    std::string yi = "y" + std::to_string(i);
    if (S->var_index(yi) >= 0)
      throw std::invalid_argument("base ring already uses the name " + yi);
    vars.push_back(yi);
    weights.push_back(pres.d[i - 1] + 1);
  }
  if (S->var_index("z") >= 0) throw std::invalid_argument("base ring already uses the name z");
  vars.push_back("z");
  weights.push_back(2);
  pres.big_ring = make_ring<F>(fld, vars, weights);
  const auto& T = pres.big_ring;

  // Minimal first syzygies of f, columns normalized so the last nonzero
  // entry is monic.
  const MonomialOrder& sord = S->default_order();
  std::vector<VecPoly<F>> fvecs;
  for (const auto& g : pres.f) fvecs.push_back(VecPoly<F>::from_components({g}, sord));
  auto raw = syzygies(fvecs, config);
  std::vector<std::pair<VecPoly<F>, long>> candidates;
  for (auto& v : raw) candidates.push_back({v, detail::vector_degree(v, pres.d)});
  auto kept = detail::minimal_module_generators(std::move(candidates));

  pres.syzygy_mat = PolyMatrix<F>(S, m, kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    std::vector<Polynomial<F>> col;
    for (std::size_t i = 0; i < m; ++i) col.push_back(kept[j].first.comp(i));
    detail::normalize_column_by_last(col, fld);
    for (std::size_t i = 0; i < m; ++i) pres.syzygy_mat.at(i, j) = col[i];
    pres.syzygy_degrees.push_back(kept[j].second);
  }

  std::vector<Polynomial<F>> y, fT;
  for (std::size_t i = 0; i < m; ++i) {
    y.push_back(Polynomial<F>::variable(T, pres.y_index(i)));
    fT.push_back(pres.f[i].embed(T));
  }
  Polynomial<F> z = Polynomial<F>::variable(T, pres.z_index());

  for (std::size_t j = 0; j < kept.size(); ++j) {
    Polynomial<F> r = Polynomial<F>::zero(T);
    for (std::size_t i = 0; i < m; ++i) r = r + pres.syzygy_mat.at(i, j).embed(T) * y[i];
    pres.syz_gens.push_back(r);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      pres.gen_gens.push_back(y[i] * y[j] - z * fT[i] * fT[j]);

  std::vector<Polynomial<F>> all = pres.syz_gens;
  all.insert(all.end(), pres.gen_gens.begin(), pres.gen_gens.end());
  pres.presentation = Ideal<F>(T, std::move(all));
  return pres;
}

// Independent route to the presentation ideal: the kernel of T -> S[t],
// y_i -> f_i t, z -> t^2, computed by eliminating t.
template <class F>
Ideal<F> presentation_kernel(const ReesLikePresentation<F>& pres) {
  const auto& T = pres.big_ring;
  std::string tname = fresh_var_name(*T, "t");
  RingPtr<F> ext = prepend_vars(T, {tname}, {1});
  Polynomial<F> t = Polynomial<F>::variable(ext, 0);

  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < pres.num_gens(); ++i) {
    Polynomial<F> yi = Polynomial<F>::variable(ext, 1 + pres.y_index(i));
    gens.push_back(yi - pres.f[i].embed(ext) * t);
  }
  Polynomial<F> zv = Polynomial<F>::variable(ext, 1 + pres.z_index());
  gens.push_back(zv - t * t);

  auto elim = eliminate(Ideal<F>(ext, std::move(gens)), {0});
  std::vector<Polynomial<F>> back;
  for (const auto& h : elim.gens) back.push_back(h.embed(T));
  return Ideal<F>(T, std::move(back));
}

struct InvariantPair {
  std::string name;
  long long computed = 0;
  long long formula = 0;
  bool match() const { return computed == formula; }
};

struct ReesLikeInvariants {
  std::vector<InvariantPair> pairs;
  bool all_match() const {
    for (const auto& p : pairs)
      if (!p.match()) return false;
    return true;
  }
  const InvariantPair& operator[](const std::string& name) const {
    for (const auto& p : pairs)
      if (p.name == name) return p;
    throw std::out_of_range("no invariant named " + name);
  }
};

// Both routes for every invariant: the closed-form value predicted from the
// base quotient, and the value recomputed from scratch on T / presentation.
template <class F>
ReesLikeInvariants rees_like_invariants(const ReesLikePresentation<F>& pres,
                                        const GBConfig& config = GBConfig{}) {
  const auto& S = pres.base_ring;
  long n = static_cast<long>(S->arity());
  long m = static_cast<long>(pres.num_gens());

  auto base_res = free_resolution(pres.base_ideal, config);
  auto big_res = free_resolution(pres.presentation, config);
  auto h = hilbert_data(pres.presentation, config);

  long maxdeg_I = 0, sum_d = 0;
  long long prod_d1 = 1;
  for (long di : pres.d) {
    maxdeg_I = std::max(maxdeg_I, di);
    sum_d += di;
    prod_d1 *= (di + 1);
  }
  long maxdeg_syz = 0;
  for (long s : pres.syzygy_degrees) maxdeg_syz = std::max(maxdeg_syz, s);

  long maxdeg_pres = 0;
  for (const auto& g : minimal_generators(pres.presentation))
    maxdeg_pres = std::max(maxdeg_pres, g.weighted_degree().value);

  ReesLikeInvariants inv;
  inv.pairs.push_back({"maxdeg", maxdeg_pres,
                       std::max(1 + maxdeg_syz, 2 * (maxdeg_I + 1))});
  inv.pairs.push_back({"multiplicity", h.multiplicity, 2 * prod_d1});
  inv.pairs.push_back({"regularity", big_res.regularity,
                       base_res.regularity + 2 + sum_d});
  inv.pairs.push_back({"projective_dimension", big_res.projective_dimension,
                       base_res.projective_dimension + m - 1});
  inv.pairs.push_back({"depth", big_res.depth, base_res.depth + 2});
  inv.pairs.push_back({"height", height(pres.presentation), m});
  inv.pairs.push_back({"dimension", dimension(pres.presentation), n + 1});
  return inv;
}

}  // namespace reeslike
