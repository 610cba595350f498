#pragma once
// Complete-intersection linkage inside the extended ring T = S[y_1..y_m, z]:
// the squares ideal (y_i^2 - z f_i^2), the even/odd bridge forms that tie it
// to the presentation ideal through colon links, the sign-variant component
// decomposition, and the doubled Koszul complex presenting the two-generator
// quotient (squares : presentation) / squares.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilbert.hpp"
#include "ideal_ops.hpp"
#include "jacobian.hpp"
#include "matrix.hpp"
#include "module.hpp"
#include "rees.hpp"

namespace reeslike {

// ---------------------------------------------------------------------------
// Hypothesis gates. The sign variants of the presentation kernel coincide in
// characteristic 2 (both square roots of z f_i^2 agree there), so everything
// below refuses that case; the two-generator quotient description additionally
// needs the base ideal to have height at least 2.

template <class F>
void require_odd_characteristic(const ReesLikePresentation<F>& pres) {
  if (pres.base_ring->field().characteristic() == 2)
    throw std::domain_error("linkage constructions need characteristic != 2");
}

template <class F>
void require_base_height_at_least(const ReesLikePresentation<F>& pres, long h) {
  long ht = height(pres.base_ideal);
  if (ht < h)
    throw std::domain_error("base ideal has height " + std::to_string(ht) +
                            ", need at least " + std::to_string(h));
}

// ---------------------------------------------------------------------------
// The squares ideal: (y_i^2 - z f_i^2, i = 1..m). Each generator is
// homogeneous of degree 2(d_i + 1) and lies in every sign variant of the
// presentation kernel; the leading terms y_i^2 in disjoint variables make the
// generators a regular sequence, so the ideal is a complete intersection of
// height m.

template <class F>
std::vector<Polynomial<F>> square_difference_gens(const ReesLikePresentation<F>& pres) {
  const auto& T = pres.big_ring;
  Polynomial<F> z = Polynomial<F>::variable(T, pres.z_index());
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < pres.num_gens(); ++i) {
    Polynomial<F> yi = Polynomial<F>::variable(T, pres.y_index(i));
    Polynomial<F> fi = pres.f[i].embed(T);
    out.push_back(yi * yi - z * fi * fi);
  }
  return out;
}

template <class F>
Ideal<F> square_difference_ci(const ReesLikePresentation<F>& pres) {
  return Ideal<F>(pres.big_ring, square_difference_gens(pres));
}

// ---------------------------------------------------------------------------
// Bridge forms. For 0 <= j <= m,
//   even_j = sum over even-size subsets S of {1..j} of
//            (prod_{i <= j, i not in S} y_i) (prod_{i in S} f_i) z^{|S|/2},
//   odd_j  = the same sum over odd-size subsets with z^{(|S|-1)/2}.
// Both are homogeneous: deg even_j = sum_{i<=j} (d_i + 1) and
// deg odd_j = deg even_j - 1. The empty range gives even_0 = 1, odd_0 = 0.

template <class F>
Polynomial<F> bridge_form(const ReesLikePresentation<F>& pres, std::size_t j, bool odd) {
  if (j > pres.num_gens()) throw std::invalid_argument("bridge index exceeds generator count");
  if (j > 20) throw std::invalid_argument("bridge form too large to expand");
  const auto& T = pres.big_ring;
  Polynomial<F> z = Polynomial<F>::variable(T, pres.z_index());
  Polynomial<F> acc = Polynomial<F>::zero(T);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << j); ++mask) {
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if ((size % 2 == 1) != odd) continue;
    Polynomial<F> term = Polynomial<F>::constant(T, T->field().one());
    for (std::size_t i = 0; i < j; ++i) {
      if (mask & (std::uint64_t{1} << i))
        term = term * pres.f[i].embed(T);
      else
        term = term * Polynomial<F>::variable(T, pres.y_index(i));
    }
    std::size_t zexp = odd ? (size - 1) / 2 : size / 2;
    for (std::size_t e = 0; e < zexp; ++e) term = term * z;
    acc = acc + term;
  }
  return acc;
}

template <class F>
Polynomial<F> bridge_even(const ReesLikePresentation<F>& pres, std::size_t j) {
  return bridge_form(pres, j, false);
}

template <class F>
Polynomial<F> bridge_odd(const ReesLikePresentation<F>& pres, std::size_t j) {
  return bridge_form(pres, j, true);
}

// Independent route to the same pair through the two-term recurrences
//   odd_j  = y_j odd_{j-1} + f_j even_{j-1},
//   even_j = y_j even_{j-1} + z f_j odd_{j-1},
// starting from even_0 = 1, odd_0 = 0.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> bridge_pair_by_recurrence(
    const ReesLikePresentation<F>& pres, std::size_t j) {
  if (j > pres.num_gens()) throw std::invalid_argument("bridge index exceeds generator count");
  const auto& T = pres.big_ring;
  Polynomial<F> z = Polynomial<F>::variable(T, pres.z_index());
  Polynomial<F> even = Polynomial<F>::constant(T, T->field().one());
  Polynomial<F> odd = Polynomial<F>::zero(T);
  for (std::size_t i = 0; i < j; ++i) {
    Polynomial<F> yi = Polynomial<F>::variable(T, pres.y_index(i));
    Polynomial<F> fi = pres.f[i].embed(T);
    Polynomial<F> next_odd = yi * odd + fi * even;
    Polynomial<F> next_even = yi * even + z * fi * odd;
    odd = std::move(next_odd);
    even = std::move(next_even);
  }
  return {even, odd};
}

// Exact polynomial identities expressing the j-th square in terms of the
// bridge forms at levels j and j-1 (valid for 1 <= j <= m):
//   y_j even_j - z f_j odd_j = (y_j^2 - z f_j^2) even_{j-1},
//   f_j even_j - y_j odd_j  = -(y_j^2 - z f_j^2) odd_{j-1}.
template <class F>
bool bridge_multiplication_identities_hold(const ReesLikePresentation<F>& pres, std::size_t j) {
  if (j == 0 || j > pres.num_gens()) throw std::invalid_argument("bridge index out of range");
  const auto& T = pres.big_ring;
  Polynomial<F> z = Polynomial<F>::variable(T, pres.z_index());
  Polynomial<F> yj = Polynomial<F>::variable(T, pres.y_index(j - 1));
  Polynomial<F> fj = pres.f[j - 1].embed(T);
  Polynomial<F> square = yj * yj - z * fj * fj;
  Polynomial<F> even_j = bridge_even(pres, j);
  Polynomial<F> odd_j = bridge_odd(pres, j);
  Polynomial<F> even_p = bridge_even(pres, j - 1);
  Polynomial<F> odd_p = bridge_odd(pres, j - 1);
  bool first = (yj * even_j - z * fj * odd_j) == (square * even_p);
  bool second = (fj * even_j - yj * odd_j) == (-(square * odd_p));
  return first && second;
}

// ---------------------------------------------------------------------------
// Sign variants of the presentation kernel: the kernel of T -> S[t] sending
// y_i to s_i f_i t and z to t^2, for a sign vector s in {+1,-1}^m. All signs
// +1 recovers the presentation kernel; flipping every sign recovers it too
// (substitute -t for t), so only vectors with s_1 = +1 give distinct kernels.

template <class F>
Ideal<F> signed_presentation_kernel(const ReesLikePresentation<F>& pres,
                                    const std::vector<int>& signs) {
  if (signs.size() != pres.num_gens())
    throw std::invalid_argument("sign vector length must match generator count");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("sign entries must be +1 or -1");

  const auto& T = pres.big_ring;
  const auto& fld = T->field();
  std::string tname = fresh_var_name(*T, "t");
  RingPtr<F> ext = prepend_vars(T, {tname}, {1});
  Polynomial<F> t = Polynomial<F>::variable(ext, 0);

  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < pres.num_gens(); ++i) {
    Polynomial<F> yi = Polynomial<F>::variable(ext, 1 + pres.y_index(i));
    Polynomial<F> ft = pres.f[i].embed(ext) * t;
    if (signs[i] == -1) ft = ft.scaled(fld.neg(fld.one()));
    gens.push_back(yi - ft);
  }
  Polynomial<F> zv = Polynomial<F>::variable(ext, 1 + pres.z_index());
  gens.push_back(zv - t * t);

  auto elim = eliminate(Ideal<F>(ext, std::move(gens)), {0});
  std::vector<Polynomial<F>> back;
  for (const auto& h : elim.gens) back.push_back(h.embed(T));
  return Ideal<F>(T, std::move(back));
}

// The squares ideal decomposed as the intersection of the 2^{m-1} distinct
// sign variants, each of which is prime (a kernel of a map onto a subring of
// a polynomial ring). All variants cut out the same dimension, and when the
// intersection matches, the squares ideal is radical with these as its
// minimal primes; multiplicities are then additive across the variants.
template <class F>
struct SignDecomposition {
  Ideal<F> squares;
  std::vector<std::vector<int>> sign_vectors;  // first entry always +1
  std::vector<Ideal<F>> components;
  std::vector<long> component_dimensions;
  bool components_pairwise_distinct = false;
  bool intersection_equals_squares = false;
  long long squares_multiplicity = 0;            // only with multiplicities
  std::vector<long long> component_multiplicities;
  bool multiplicity_additive = false;
};

template <class F>
SignDecomposition<F> sign_component_decomposition(const ReesLikePresentation<F>& pres,
                                                  bool with_multiplicities = false,
                                                  const GBConfig& config = GBConfig{}) {
  require_odd_characteristic(pres);
  std::size_t m = pres.num_gens();
  if (m > 4) throw std::invalid_argument("sign decomposition limited to at most 4 generators");

  SignDecomposition<F> dec;
  dec.squares = square_difference_ci(pres);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
    std::vector<int> signs{1};
    for (std::size_t i = 0; i + 1 < m; ++i)
      signs.push_back((mask & (std::uint64_t{1} << i)) ? -1 : 1);
    dec.sign_vectors.push_back(signs);
    dec.components.push_back(signed_presentation_kernel(pres, signs));
    dec.component_dimensions.push_back(dimension(dec.components.back()));
  }

  dec.components_pairwise_distinct = true;
  for (std::size_t a = 0; a < dec.components.size(); ++a)
    for (std::size_t b = a + 1; b < dec.components.size(); ++b)
      if (dec.components[a].equals(dec.components[b])) dec.components_pairwise_distinct = false;

  Ideal<F> meet = dec.components[0];
  for (std::size_t k = 1; k < dec.components.size(); ++k)
    meet = intersect(meet, dec.components[k]);
  dec.intersection_equals_squares = meet.equals(dec.squares);

  if (with_multiplicities) {
    dec.squares_multiplicity = hilbert_data(dec.squares, config).multiplicity;
    long long total = 0;
    for (const auto& comp : dec.components) {
      dec.component_multiplicities.push_back(hilbert_data(comp, config).multiplicity);
      total += dec.component_multiplicities.back();
    }
    dec.multiplicity_additive = (total == dec.squares_multiplicity);
  }
  return dec;
}

// ---------------------------------------------------------------------------
// Colon links between the squares ideal and the presentation ideal: with
// even = even_m and odd = odd_m,
//   squares : (odd)            recovers the presentation ideal,
//   (squares + (odd)) : (even) recovers (f_1..f_m) + (y_1..y_m),
//   squares : presentation     equals squares + (even, odd).

template <class F>
struct ColonLinkReport {
  Polynomial<F> even;
  Polynomial<F> odd;
  Ideal<F> squares;
  Ideal<F> bridge_sum;  // squares + (even, odd)
  bool colon_by_odd_is_presentation = false;
  bool colon_by_even_recovers_cone = false;
  bool colon_by_presentation_is_bridge_sum = false;
  bool all() const {
    return colon_by_odd_is_presentation && colon_by_even_recovers_cone &&
           colon_by_presentation_is_bridge_sum;
  }
};

template <class F>
ColonLinkReport<F> colon_link_report(const ReesLikePresentation<F>& pres) {
  require_odd_characteristic(pres);
  const auto& T = pres.big_ring;
  std::size_t m = pres.num_gens();

  ColonLinkReport<F> rep;
  rep.even = bridge_even(pres, m);
  rep.odd = bridge_odd(pres, m);
  rep.squares = square_difference_ci(pres);
  rep.bridge_sum = ideal_sum(rep.squares, Ideal<F>(T, {rep.even, rep.odd}));

  rep.colon_by_odd_is_presentation =
      ideal_quotient(rep.squares, rep.odd).equals(pres.presentation);

  Ideal<F> plus_odd = ideal_sum(rep.squares, Ideal<F>(T, {rep.odd}));
  std::vector<Polynomial<F>> cone_gens;
  for (const auto& g : pres.f) cone_gens.push_back(g.embed(T));
  for (std::size_t i = 0; i < m; ++i)
    cone_gens.push_back(Polynomial<F>::variable(T, pres.y_index(i)));
  rep.colon_by_even_recovers_cone =
      ideal_quotient(plus_odd, rep.even).equals(Ideal<F>(T, std::move(cone_gens)));

  rep.colon_by_presentation_is_bridge_sum =
      ideal_quotient(rep.squares, pres.presentation).equals(rep.bridge_sum);
  return rep;
}

// ---------------------------------------------------------------------------
// Groebner behaviour of squares + (even, odd) under the pure lexicographic
// order with y_1 > ... > y_m > z > x_1 > ... > x_n: the given generators are
// already a Groebner basis, and the initial ideal is generated by
//   y_1^2, ..., y_m^2, y_1..y_m, y_1..y_{m-1} lm(f_m).

template <class F>
MonomialOrder y_first_lex(const ReesLikePresentation<F>& pres) {
  std::vector<int> ranking;
  for (std::size_t i = 0; i < pres.num_gens(); ++i) ranking.push_back(pres.y_index(i));
  ranking.push_back(pres.z_index());
  for (std::size_t i = 0; i < pres.base_ring->arity(); ++i) ranking.push_back(static_cast<int>(i));
  return MonomialOrder::lex(std::move(ranking));
}

template <class F>
struct BridgeGBReport {
  MonomialOrder order;
  std::vector<Polynomial<F>> reduced_gb;
  bool gb_is_squares_and_bridges = false;
  std::vector<Monomial> initial_gens;        // leading monomials of the reduced GB
  bool initial_matches_closed_form = false;
  long quotient_by_initial_pd = -1;
  bool pd_at_most_m_plus_one = false;
};

template <class F>
BridgeGBReport<F> bridge_groebner_report(const ReesLikePresentation<F>& pres,
                                         const GBConfig& config = GBConfig{}) {
  const auto& T = pres.big_ring;
  std::size_t m = pres.num_gens();

  BridgeGBReport<F> rep;
  rep.order = y_first_lex(pres);
  std::vector<Polynomial<F>> gens = square_difference_gens(pres);
  gens.push_back(bridge_even(pres, m));
  gens.push_back(bridge_odd(pres, m));
  Ideal<F> J(T, gens);
  rep.reduced_gb = J.groebner(rep.order, config);

  // Expected basis: the generators themselves, monic under this order.
  const auto& fld = T->field();
  std::vector<Polynomial<F>> expected;
  for (const auto& g : gens) {
    Polynomial<F> h = g.with_order(rep.order);
    expected.push_back(h.scaled(fld.inv(h.leading_term().c)));
  }
  auto matches = [&](const std::vector<Polynomial<F>>& a, std::vector<Polynomial<F>> b) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
      bool found = false;
      for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] == p) {
          b.erase(b.begin() + k);
          found = true;
          break;
        }
      if (!found) return false;
    }
    return b.empty();
  };
  rep.gb_is_squares_and_bridges = matches(rep.reduced_gb, expected);

  for (const auto& g : rep.reduced_gb) rep.initial_gens.push_back(g.leading_monomial());

  // Closed form of the initial ideal, minimalized (the m = 1 case collapses).
  std::vector<Monomial> closed;
  Monomial ys(T->arity());
  for (std::size_t i = 0; i < m; ++i) {
    Monomial sq(T->arity());
    sq.e[pres.y_index(i)] = 2;
    closed.push_back(sq);
    ys.e[pres.y_index(i)] = 1;
  }
  closed.push_back(ys);
  Monomial tail(T->arity());
  for (std::size_t i = 0; i + 1 < m; ++i) tail.e[pres.y_index(i)] = 1;
  tail = tail * pres.f[m - 1].embed(T).with_order(rep.order).leading_monomial();
  closed.push_back(tail);
  std::vector<Monomial> minimal;
  for (std::size_t a = 0; a < closed.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < closed.size(); ++b)
      if (a != b && closed[b].divides(closed[a]) && !(closed[a] == closed[b] && b > a))
        redundant = true;
    if (!redundant) minimal.push_back(closed[a]);
  }
  auto same_monomials = [](std::vector<Monomial> a, std::vector<Monomial> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
      bool found = false;
      for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] == x) {
          b.erase(b.begin() + k);
          found = true;
          break;
        }
      if (!found) return false;
    }
    return b.empty();
  };
  rep.initial_matches_closed_form = same_monomials(rep.initial_gens, minimal);

  std::vector<Polynomial<F>> mono_gens;
  for (const auto& mon : rep.initial_gens)
    mono_gens.push_back(
        Polynomial<F>::from_terms(T, T->default_order(), {Term<F>{fld.one(), mon}}));
  auto res = free_resolution(Ideal<F>(T, std::move(mono_gens)), config);
  rep.quotient_by_initial_pd = res.projective_dimension;
  rep.pd_at_most_m_plus_one = res.projective_dimension <= static_cast<long>(m) + 1;
  return rep;
}

// ---------------------------------------------------------------------------
// The doubled Koszul complex. Writing K_i(a) for the Koszul differential on
// a_1..a_m with basis e_S over size-i subsets in lexicographic order and
//   d(e_{j_1 < ... < j_i}) = sum_t (-1)^{t+1} a_{j_t} e_{S minus j_t},
// the complex has modules D_i = T^{2 binom(m,i)} and differentials
//   [ K_i(y)    K_i(f) ]
//   [ z K_i(f)  K_i(y) ].
// Its cokernel is generated by the images (even_m, -odd_m) of the two unit
// vectors, and the column relations land in the squares ideal.

inline std::vector<std::vector<std::size_t>> size_k_subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > m) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t l = i; l < k; ++l) cur[l] = cur[l - 1] + 1;
    --i;
  }
  return out;
}

template <class F>
PolyMatrix<F> koszul_differential(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& a,
                                  std::size_t i) {
  std::size_t m = a.size();
  if (i == 0 || i > m) throw std::invalid_argument("Koszul differential index out of range");
  auto rows = size_k_subsets(m, i - 1);
  auto cols = size_k_subsets(m, i);
  auto find_row = [&](const std::vector<std::size_t>& s) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r] == s) return r;
    throw std::logic_error("missing subset row");
  };
  PolyMatrix<F> K(ring, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t t = 0; t < i; ++t) {
      std::vector<std::size_t> rest;
      for (std::size_t l = 0; l < i; ++l)
        if (l != t) rest.push_back(cols[c][l]);
      Polynomial<F> entry = a[cols[c][t]];
      if (t % 2 == 1) entry = -entry;
      K.at(find_row(rest), c) = entry;
    }
  }
  return K;
}

template <class F>
struct DoubledKoszulComplex {
  std::vector<PolyMatrix<F>> diff;        // diff[i-1] maps D_i -> D_{i-1}
  std::vector<std::vector<long>> shifts;  // shifts[i] = generator degrees of D_i
  bool composes_to_zero = false;
  bool minimal = false;  // no nonzero entry of degree zero
};

namespace detail {

template <class F>
PolyMatrix<F> negated(const PolyMatrix<F>& M) {
  PolyMatrix<F> R(M.ring(), M.rows(), M.cols());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) R.at(r, c) = -M.at(r, c);
  return R;
}

template <class F>
PolyMatrix<F> scaled_by(const PolyMatrix<F>& M, const Polynomial<F>& p) {
  PolyMatrix<F> R(M.ring(), M.rows(), M.cols());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) R.at(r, c) = M.at(r, c) * p;
  return R;
}

// Four blocks of equal shape assembled into one matrix.
template <class F>
PolyMatrix<F> block2x2(const PolyMatrix<F>& tl, const PolyMatrix<F>& tr, const PolyMatrix<F>& bl,
                       const PolyMatrix<F>& br) {
  PolyMatrix<F> R(tl.ring(), tl.rows() + bl.rows(), tl.cols() + tr.cols());
  for (std::size_t r = 0; r < tl.rows(); ++r)
    for (std::size_t c = 0; c < tl.cols(); ++c) {
      R.at(r, c) = tl.at(r, c);
      R.at(r, tl.cols() + c) = tr.at(r, c);
      R.at(tl.rows() + r, c) = bl.at(r, c);
      R.at(tl.rows() + r, tl.cols() + c) = br.at(r, c);
    }
  return R;
}

}  // namespace detail

template <class F>
DoubledKoszulComplex<F> doubled_koszul_complex(const ReesLikePresentation<F>& pres) {
  const auto& T = pres.big_ring;
  std::size_t m = pres.num_gens();
  std::vector<Polynomial<F>> y, f;
  for (std::size_t i = 0; i < m; ++i) {
    y.push_back(Polynomial<F>::variable(T, pres.y_index(i)));
    f.push_back(pres.f[i].embed(T));
  }
  Polynomial<F> z = Polynomial<F>::variable(T, pres.z_index());

  DoubledKoszulComplex<F> cx;
  long w = 0;
  for (long di : pres.d) w += di + 1;
  for (std::size_t i = 0; i <= m; ++i) {
    std::vector<long> level;
    auto subs = size_k_subsets(m, i);
    for (int block = 0; block < 2; ++block)
      for (const auto& s : subs) {
        long deg = w - (block == 1 ? 1 : 0);
        for (std::size_t j : s) deg += pres.d[j] + 1;
        level.push_back(deg);
      }
    cx.shifts.push_back(std::move(level));
  }
  for (std::size_t i = 1; i <= m; ++i) {
    PolyMatrix<F> ky = koszul_differential(T, y, i);
    PolyMatrix<F> kf = koszul_differential(T, f, i);
    cx.diff.push_back(detail::block2x2(ky, kf, detail::scaled_by(kf, z), ky));
  }

  cx.composes_to_zero = true;
  for (std::size_t i = 0; i + 1 < cx.diff.size(); ++i)
    if (!(cx.diff[i] * cx.diff[i + 1]).is_zero()) cx.composes_to_zero = false;

  cx.minimal = true;
  for (const auto& d : cx.diff)
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (!d.at(r, c).is_zero() && d.at(r, c).max_weighted_degree() == 0) cx.minimal = false;
  return cx;
}

// The two-row presentation matrix of the cokernel (the first differential).
template <class F>
PolyMatrix<F> paired_relation_matrix(const ReesLikePresentation<F>& pres) {
  return doubled_koszul_complex(pres).diff[0];
}

// ---------------------------------------------------------------------------
// Self-duality certificate. Pairing a subset S in one block with its
// complement in the other block, signed by the shuffle permutation
// (S, complement) of 1..m, gives signed permutation matrices
// P_i : D_i -> Hom(D_{m-i}, T) that are invertible by construction. When
// every square P_{i-1} d_i = +/- transpose(d_{m-i+1}) P_i checks out, the
// complex is isomorphic to its own dual (rescaling each P_i by the
// accumulated signs makes the squares commute on the nose).

inline int shuffle_sign(const std::vector<std::size_t>& s, std::size_t m) {
  std::vector<bool> in(m, false);
  for (std::size_t j : s) in[j] = true;
  long inversions = 0;
  for (std::size_t a : s)
    for (std::size_t b = 0; b < a; ++b)
      if (!in[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

template <class F>
PolyMatrix<F> duality_pairing_matrix(const ReesLikePresentation<F>& pres, std::size_t i) {
  const auto& T = pres.big_ring;
  const auto& fld = T->field();
  std::size_t m = pres.num_gens();
  if (i > m) throw std::invalid_argument("duality level out of range");
  auto cols = size_k_subsets(m, i);
  auto rows = size_k_subsets(m, m - i);
  auto complement_pos = [&](const std::vector<std::size_t>& s) {
    std::vector<bool> in(m, false);
    for (std::size_t j : s) in[j] = true;
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < m; ++j)
      if (!in[j]) comp.push_back(j);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r] == comp) return r;
    throw std::logic_error("missing complement subset");
  };
  std::size_t nc = cols.size(), nr = rows.size();
  PolyMatrix<F> P(T, 2 * nr, 2 * nc);
  for (std::size_t c = 0; c < nc; ++c) {
    int sign = shuffle_sign(cols[c], m);
    auto elem = sign == 1 ? fld.one() : fld.neg(fld.one());
    Polynomial<F> entry = Polynomial<F>::constant(T, elem);
    std::size_t r = complement_pos(cols[c]);
    P.at(nr + r, c) = entry;      // first block pairs into the second
    P.at(r, nc + c) = entry;      // second block pairs into the first
  }
  return P;
}

template <class F>
bool doubled_koszul_self_dual(const ReesLikePresentation<F>& pres,
                              const DoubledKoszulComplex<F>& cx) {
  std::size_t m = pres.num_gens();
  for (std::size_t i = 1; i <= m; ++i) {
    PolyMatrix<F> lhs = duality_pairing_matrix(pres, i - 1) * cx.diff[i - 1];
    PolyMatrix<F> rhs =
        cx.diff[m - i].transpose() * duality_pairing_matrix(pres, i);
    if (!lhs.equals(rhs) && !lhs.equals(detail::negated(rhs))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Acyclicity certificate in the style of the rank-and-height criterion: with
// expected ranks r_i fixed by rank D_i = r_i + r_{i+1} and r_{m+1} = 0, each
// differential must have rank exactly r_i (some r_i-minor nonzero, all
// (r_i+1)-minors zero) and the ideal of r_i-minors must have height >= i.
// r_1 = rank D_0 makes the cokernel torsion.

struct AcyclicityReport {
  std::vector<long> expected_ranks;      // r_1..r_m
  bool euler_characteristic_zero = false;
  bool ranks_witnessed = false;
  std::vector<long> minor_ideal_heights;
  bool heights_sufficient = false;
  bool acyclic() const {
    return euler_characteristic_zero && ranks_witnessed && heights_sufficient;
  }
};

template <class F>
AcyclicityReport acyclicity_report(const DoubledKoszulComplex<F>& cx,
                                   unsigned long long minor_budget = 20000) {
  AcyclicityReport rep;
  std::size_t levels = cx.diff.size();
  std::vector<long> r(levels + 2, 0);
  for (std::size_t i = levels; i >= 1; --i)
    r[i] = static_cast<long>(cx.diff[i - 1].cols()) - r[i + 1];
  rep.expected_ranks.assign(r.begin() + 1, r.begin() + 1 + levels);
  rep.euler_characteristic_zero = (r[1] == static_cast<long>(cx.diff[0].rows()));

  rep.ranks_witnessed = true;
  rep.heights_sufficient = true;
  for (std::size_t i = 1; i <= levels; ++i) {
    const auto& d = cx.diff[i - 1];
    std::size_t rk = static_cast<std::size_t>(r[i]);
    bool some_nonzero = false;
    for (const auto& e : all_minors(d, rk, minor_budget))
      if (!e.value.is_zero()) some_nonzero = true;
    bool all_next_zero = true;
    if (rk + 1 <= d.rows() && rk + 1 <= d.cols())
      for (const auto& e : all_minors(d, rk + 1, minor_budget))
        if (!e.value.is_zero()) all_next_zero = false;
    if (!some_nonzero || !all_next_zero) rep.ranks_witnessed = false;

    long h = height(minors_ideal(d, rk, minor_budget));
    rep.minor_ideal_heights.push_back(h);
    if (h < static_cast<long>(i)) rep.heights_sufficient = false;
  }
  return rep;
}

// Alternating-sum numerator of a complex's graded shifts, comparable with the
// resolution-based numerators from hilbert_data.
inline std::vector<long long> shifts_numerator(const std::vector<std::vector<long>>& shifts) {
  std::vector<long long> num;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    long long sign = (i % 2 == 0) ? 1 : -1;
    for (long s : shifts[i]) {
      if (static_cast<std::size_t>(s) >= num.size()) num.resize(s + 1, 0);
      num[s] += sign;
    }
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

// ---------------------------------------------------------------------------
// The cokernel of the paired relation matrix, generated by (even_m, -odd_m):
// well-defined (columns map into the squares ideal), killed by the
// presentation ideal, and of type 2 (the last module of the doubled Koszul
// complex has rank 2).

template <class F>
struct CanonicalModuleReport {
  PolyMatrix<F> relation_matrix;
  Polynomial<F> even;
  Polynomial<F> odd;
  DoubledKoszulComplex<F> complex;
  bool augmentation_lands_in_squares = false;
  bool cofactor_identities_hold = false;
  bool killed_by_presentation = false;
  bool self_dual = false;
  long type = 0;
};

template <class F>
CanonicalModuleReport<F> canonical_module_report(const ReesLikePresentation<F>& pres,
                                                 const GBConfig& config = GBConfig{}) {
  require_odd_characteristic(pres);
  require_base_height_at_least(pres, 2);
  const auto& T = pres.big_ring;
  std::size_t m = pres.num_gens();

  CanonicalModuleReport<F> rep;
  rep.complex = doubled_koszul_complex(pres);
  rep.relation_matrix = rep.complex.diff[0];
  rep.even = bridge_even(pres, m);
  rep.odd = bridge_odd(pres, m);
  rep.type = static_cast<long>(rep.complex.shifts.back().size());

  Ideal<F> squares = square_difference_ci(pres);
  rep.augmentation_lands_in_squares = true;
  for (std::size_t c = 0; c < rep.relation_matrix.cols(); ++c) {
    Polynomial<F> image = rep.even * rep.relation_matrix.at(0, c) -
                          rep.odd * rep.relation_matrix.at(1, c);
    if (!squares.contains(image)) rep.augmentation_lands_in_squares = false;
  }

  rep.cofactor_identities_hold = true;
  for (std::size_t j = 1; j <= m; ++j)
    if (!bridge_multiplication_identities_hold(pres, j)) rep.cofactor_identities_hold = false;

  const MonomialOrder& ord = T->default_order();
  std::vector<VecPoly<F>> columns;
  for (std::size_t c = 0; c < rep.relation_matrix.cols(); ++c)
    columns.push_back(VecPoly<F>::from_components(
        {rep.relation_matrix.at(0, c), rep.relation_matrix.at(1, c)}, ord));
  auto mgb = module_groebner(columns, config);
  rep.killed_by_presentation = true;
  for (const auto& q : pres.presentation.gens())
    for (std::size_t k = 0; k < 2; ++k) {
      VecPoly<F> v = VecPoly<F>::unit(T, 2, k, ord).mul_poly(q);
      if (!module_membership(v, mgb)) rep.killed_by_presentation = false;
    }

  rep.self_dual = doubled_koszul_self_dual(pres, rep.complex);
  return rep;
}

}  // namespace reeslike
