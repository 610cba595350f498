#pragma once
// Jacobian matrices, their block decomposition for extended-algebra
// presentations, minor ideals via memoized Laplace expansion, and the
// singular-locus checks: height of the minors ideal, location of each class
// of minors, and the minimal-prime description through monomial primes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ideal_ops.hpp"
#include "matrix.hpp"
#include "rees.hpp"

namespace reeslike {

// Rows indexed by the ring variables (in declaration order), columns by the
// generators: entry (v, j) = d g_j / d x_v.
template <class F>
PolyMatrix<F> jacobian(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  PolyMatrix<F> J(ring, ring->arity(), gens.size());
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    J.row_labels.push_back("d/d" + ring->vars()[v]);
    for (std::size_t j = 0; j < gens.size(); ++j)
      J.at(v, j) = gens[j].partial_derivative(static_cast<int>(v));
  }
  return J;
}

// Thrown when a minors enumeration would exceed the configured budget.
class MinorBudgetExceeded : public std::runtime_error {
 public:
  MinorBudgetExceeded(unsigned long long count, unsigned long long budget)
      : std::runtime_error("minor enumeration of " + std::to_string(count) +
                           " determinants exceeds budget " + std::to_string(budget)),
        count_(count), budget_(budget) {}
  unsigned long long count() const { return count_; }
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long count_, budget_;
};

namespace detail {

inline unsigned long long binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (unsigned long long i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > (1ULL << 40)) return r;  // already past any sane budget
  }
  return r;
}

// Determinant of the submatrix selected by bit masks, expanding along the
// first selected row; memoized across minors that share submatrices.
template <class F>
const Polynomial<F>& masked_det(const PolyMatrix<F>& M, std::uint64_t rmask, std::uint64_t cmask,
                                std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial<F>>& memo) {
  auto key = std::make_pair(rmask, cmask);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Polynomial<F> det;
  if (rmask == 0) {
    det = Polynomial<F>::constant(M.ring(), M.ring()->field().one());
  } else {
    det = Polynomial<F>::zero(M.ring());
    int row = __builtin_ctzll(rmask);
    std::uint64_t rrest = rmask & (rmask - 1);
    int sign = 1;
    for (std::uint64_t cs = cmask; cs; cs &= cs - 1) {
      int col = __builtin_ctzll(cs);
      const auto& e = M.at(row, col);
      if (!e.is_zero()) {
        const auto& sub = masked_det(M, rrest, cmask & ~(1ULL << col), memo);
        auto term = e * sub;
        det = (sign > 0) ? det + term : det - term;
      }
      sign = -sign;
    }
  }
  return memo.emplace(key, std::move(det)).first->second;
}

}  // namespace detail

// All t x t minors (kept in row/column selection order, zeros included so
// callers can map a minor back to its selection).
template <class F>
struct MinorEntry {
  std::vector<std::size_t> rows, cols;
  Polynomial<F> value;
};

template <class F>
std::vector<MinorEntry<F>> all_minors(const PolyMatrix<F>& M, std::size_t t,
                                      unsigned long long budget = 20000) {
  if (M.rows() > 64 || M.cols() > 64) throw std::invalid_argument("matrix too large for minors");
  if (t > M.rows() || t > M.cols()) return {};
  unsigned long long count =
      detail::binomial(M.rows(), t) * detail::binomial(M.cols(), t);
  if (count > budget) throw MinorBudgetExceeded(count, budget);

  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial<F>> memo;
  std::vector<MinorEntry<F>> out;
  std::vector<std::size_t> rsel(t), csel(t);

  // Enumerate ascending index combinations for rows and columns.
  auto next_comb = [](std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] + (k - i) < n) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < t; ++i) rsel[i] = i;
  do {
    std::uint64_t rmask = 0;
    for (auto r : rsel) rmask |= 1ULL << r;
    for (std::size_t i = 0; i < t; ++i) csel[i] = i;
    do {
      std::uint64_t cmask = 0;
      for (auto c : csel) cmask |= 1ULL << c;
      out.push_back({rsel, csel, detail::masked_det(M, rmask, cmask, memo)});
    } while (next_comb(csel, M.cols()));
  } while (next_comb(rsel, M.rows()));
  return out;
}

// The ideal of t x t minors. The raw minor list is interreduced (each minor
// replaced by its remainder against those already kept, zero remainders
// dropped); this generates the same ideal with far fewer elements, which
// keeps Groebner runs on minor ideals manageable.
template <class F>
Ideal<F> minors_ideal(const PolyMatrix<F>& M, std::size_t t, unsigned long long budget = 20000) {
  std::vector<Polynomial<F>> raw;
  for (auto& e : all_minors(M, t, budget))
    if (!e.value.is_zero()) raw.push_back(std::move(e.value));
  std::sort(raw.begin(), raw.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
    return a.max_weighted_degree() < b.max_weighted_degree();
  });
  std::vector<Polynomial<F>> gens;
  for (auto& g : raw) {
    auto r = normal_form(g, gens);
    if (!r.is_zero()) gens.push_back(r.monic());
  }
  return Ideal<F>(M.ring(), std::move(gens));
}

template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial<F>> memo;
  std::uint64_t full = (M.rows() == 64) ? ~0ULL : ((1ULL << M.rows()) - 1);
  return detail::masked_det(M, full, full, memo);
}

// The Jacobian of a presentation split into its named blocks: rows group into
// the base variables, the y variables and z; columns into the lifted-syzygy
// generators and the product generators.
template <class F>
struct BlockJacobian {
  PolyMatrix<F> full;  // rows: x (n), y (m), z (1); cols: syz (b), gen (m(m+1)/2)
  std::size_t n = 0, m = 0, b = 0;

  std::vector<std::size_t> x_rows() const { return range(0, n); }
  std::vector<std::size_t> y_rows() const { return range(n, n + m); }
  std::vector<std::size_t> z_row() const { return range(n + m, n + m + 1); }
  std::vector<std::size_t> syz_cols() const { return range(0, b); }
  std::vector<std::size_t> gen_cols() const { return range(b, full.cols()); }

  PolyMatrix<F> block(const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) const {
    return full.submatrix(rows, cols);
  }

 private:
  static std::vector<std::size_t> range(std::size_t a, std::size_t bnd) {
    std::vector<std::size_t> v;
    for (std::size_t i = a; i < bnd; ++i) v.push_back(i);
    return v;
  }
};

template <class F>
BlockJacobian<F> block_jacobian(const ReesLikePresentation<F>& pres) {
  std::vector<Polynomial<F>> gens = pres.syz_gens;
  gens.insert(gens.end(), pres.gen_gens.begin(), pres.gen_gens.end());
  BlockJacobian<F> bj;
  bj.full = jacobian(pres.big_ring, gens);
  bj.n = pres.base_ring->arity();
  bj.m = pres.num_gens();
  bj.b = pres.syz_gens.size();
  for (std::size_t j = 0; j < bj.b; ++j)
    bj.full.col_labels.push_back("syz" + std::to_string(j + 1));
  for (std::size_t i = 0; i < bj.m; ++i)
    for (std::size_t j = i; j < bj.m; ++j)
      bj.full.col_labels.push_back("gen(" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
  return bj;
}

// Reassemble every block from its closed form and compare with the directly
// differentiated Jacobian; returns the list of blocks that disagree (empty
// means the decomposition is exact).
template <class F>
std::vector<std::string> verify_block_structure(const ReesLikePresentation<F>& pres,
                                                const BlockJacobian<F>& bj) {
  const auto& T = pres.big_ring;
  std::vector<std::string> bad;
  std::size_t n = bj.n, m = bj.m, b = bj.b;

  std::vector<Polynomial<F>> y, fT;
  for (std::size_t i = 0; i < m; ++i) {
    y.push_back(Polynomial<F>::variable(T, pres.y_index(i)));
    fT.push_back(pres.f[i].embed(T));
  }
  Polynomial<F> z = Polynomial<F>::variable(T, pres.z_index());

  // x-rows, syzygy columns: A with entries sum_i (d c_ij / d x_k) y_i.
  {
    auto got = bj.block(bj.x_rows(), bj.syz_cols());
    PolyMatrix<F> want(T, n, b);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < b; ++j) {
        auto acc = Polynomial<F>::zero(T);
        for (std::size_t i = 0; i < m; ++i)
          acc = acc + pres.syzygy_mat.at(i, j).partial_derivative(static_cast<int>(k)).embed(T) * y[i];
        want.at(k, j) = acc;
      }
    if (!got.equals(want)) bad.push_back("x-rows / syzygy columns");
  }
  // x-rows, product columns: -z times the x-Jacobian of the products f_i f_j.
  {
    auto got = bj.block(bj.x_rows(), bj.gen_cols());
    PolyMatrix<F> want(T, n, bj.gen_cols().size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j, ++c) {
        auto prod = pres.f[i] * pres.f[j];
        for (std::size_t k = 0; k < n; ++k)
          want.at(k, c) = -(z * prod.partial_derivative(static_cast<int>(k)).embed(T));
      }
    if (!got.equals(want)) bad.push_back("x-rows / product columns");
  }
  // y-rows, syzygy columns: the syzygy matrix itself.
  {
    auto got = bj.block(bj.y_rows(), bj.syz_cols());
    PolyMatrix<F> want(T, m, b);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < b; ++j) want.at(i, j) = pres.syzygy_mat.at(i, j).embed(T);
    if (!got.equals(want)) bad.push_back("y-rows / syzygy columns");
  }
  // y-rows, product columns: the y-Jacobian of the monomials y_i y_j.
  {
    auto got = bj.block(bj.y_rows(), bj.gen_cols());
    PolyMatrix<F> want(T, m, bj.gen_cols().size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j, ++c) {
        auto prod = y[i] * y[j];
        for (std::size_t k = 0; k < m; ++k)
          want.at(k, c) = prod.partial_derivative(pres.y_index(k));
      }
    if (!got.equals(want)) bad.push_back("y-rows / product columns");
  }
  // z-row: zero under the syzygy columns, -f_i f_j under the product columns.
  {
    auto got_syz = bj.block(bj.z_row(), bj.syz_cols());
    if (!got_syz.is_zero()) bad.push_back("z-row / syzygy columns");
    auto got_gen = bj.block(bj.z_row(), bj.gen_cols());
    PolyMatrix<F> want(T, 1, bj.gen_cols().size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j, ++c) want.at(0, c) = -(fT[i] * fT[j]);
    if (!got_gen.equals(want)) bad.push_back("z-row / product columns");
  }
  return bad;
}

template <class F>
struct SingularLocusReport {
  std::size_t minor_size = 0;          // t in I_t
  long nonzero_minors = 0;
  Ideal<F> minors;                     // I_t(Jac) in the big ring
  long height_of_minors = 0;
  long expected_height = 0;            // mu(I) + ht(I)
  bool height_matches = false;
};

// Jacobian-criterion singular locus of the presented quotient. Exact
// characteristic zero only: in characteristic p the criterion as used here
// is not valid for p dividing the relevant degrees, so we refuse.
template <class F>
SingularLocusReport<F> singular_locus(const ReesLikePresentation<F>& pres,
                                      unsigned long long budget = 20000) {
  if (pres.big_ring->field().characteristic() != 0)
    throw std::invalid_argument(
        "singular locus via the Jacobian criterion is only computed over characteristic zero");
  auto bj = block_jacobian(pres);
  SingularLocusReport<F> rep;
  rep.minor_size = pres.num_gens();
  for (const auto& e : all_minors(bj.full, rep.minor_size, budget))
    if (!e.value.is_zero()) ++rep.nonzero_minors;
  rep.minors = minors_ideal(bj.full, rep.minor_size, budget);
  rep.height_of_minors = height(rep.minors);
  rep.expected_height =
      static_cast<long>(pres.num_gens()) + height(pres.base_ideal);
  rep.height_matches = rep.height_of_minors == rep.expected_height;
  return rep;
}

// Minimal primes of a monomial ideal, each returned as the list of variable
// indices generating it.
template <class F>
std::vector<std::vector<int>> monomial_min_primes(const Ideal<F>& I) {
  std::vector<std::vector<int>> supports;
  for (const auto& g : I.gens()) {
    if (g.is_zero()) continue;
    if (g.terms().size() != 1)
      throw std::invalid_argument("monomial prime decomposition needs monomial generators");
    std::vector<int> s;
    for (std::size_t v = 0; v < g.ring()->arity(); ++v)
      if (g.leading_monomial().e[v] != 0) s.push_back(static_cast<int>(v));
    if (s.empty()) throw std::invalid_argument("unit generator has no prime decomposition");
    supports.push_back(std::move(s));
  }
  // Expand covers support by support, keeping each cover sorted and unique.
  std::vector<std::vector<int>> covers = {{}};
  for (const auto& s : supports) {
    std::vector<std::vector<int>> next;
    for (const auto& c : covers) {
      bool hit = false;
      for (int v : c)
        if (std::find(s.begin(), s.end(), v) != s.end()) {
          hit = true;
          break;
        }
      if (hit) {
        next.push_back(c);
        continue;
      }
      for (int v : s) {
        auto cc = c;
        cc.insert(std::lower_bound(cc.begin(), cc.end(), v), v);
        next.push_back(std::move(cc));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers = std::move(next);
  }
  // Keep only inclusion-minimal covers.
  std::vector<std::vector<int>> minimal;
  for (const auto& c : covers) {
    bool dominated = false;
    for (const auto& o : covers) {
      if (o.size() >= c.size() || o == c) continue;
      if (std::includes(c.begin(), c.end(), o.begin(), o.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

template <class F>
struct SingularLocusVerification {
  bool height_matches = false;
  bool located_minors_in_I_plus_y = false;  // minors meeting product columns or x/z rows
  bool pure_syzygy_minors_in_radical = false;
  bool product_inclusion = false;           // (f)^2 I_{m-1}(syz) inside I_m(Jac)
  bool radical_described_by_primes = false; // radical = intersection of p_i + (y)
  std::vector<std::vector<int>> claimed_primes;  // variable indices in the big ring
  bool ok() const {
    return height_matches && located_minors_in_I_plus_y && pure_syzygy_minors_in_radical &&
           product_inclusion && radical_described_by_primes;
  }
};

// Full check of the singular-locus description for ideals whose minimal
// primes are computable here (monomial generators). Accepts the report so a
// caller that already computed it shares its Groebner caches.
template <class F>
SingularLocusVerification<F> verify_singular_locus(const ReesLikePresentation<F>& pres,
                                                   const SingularLocusReport<F>& rep,
                                                   unsigned long long budget = 20000) {
  const auto& T = pres.big_ring;
  auto bj = block_jacobian(pres);
  std::size_t m = pres.num_gens();

  SingularLocusVerification<F> out;
  out.height_matches = rep.height_matches;

  // I and I + (y), both extended to the big ring.
  std::vector<Polynomial<F>> fT;
  for (const auto& g : pres.f) fT.push_back(g.embed(T));
  Ideal<F> iT(T, fT);
  std::vector<Polynomial<F>> ipy_gens = fT;
  for (std::size_t i = 0; i < m; ++i)
    ipy_gens.push_back(Polynomial<F>::variable(T, pres.y_index(i)));
  Ideal<F> ipy(T, ipy_gens);

  bool located_ok = true, pure_ok = true;
  for (const auto& e : all_minors(bj.full, m, budget)) {
    if (e.value.is_zero()) continue;
    bool touches_gen_col = e.cols.back() >= bj.b;
    bool touches_xz_row = e.rows.front() < bj.n || e.rows.back() == bj.n + bj.m;
    if (touches_gen_col || touches_xz_row) {
      if (!ipy.contains(e.value)) located_ok = false;
    } else {
      // Minor drawn purely from y-rows and syzygy columns: a maximal minor of
      // the syzygy matrix, so it must vanish on the zero locus of the ideal.
      if (!radical_membership(e.value, iT)) pure_ok = false;
    }
  }
  out.located_minors_in_I_plus_y = located_ok;
  out.pure_syzygy_minors_in_radical = pure_ok;

  // (f)^2 * I_{m-1}(syzygy matrix) inside the minors ideal. With no syzygy
  // columns to choose from the smaller minors ideal is zero and the
  // containment holds trivially.
  bool prod_ok = true;
  {
    std::vector<Polynomial<F>> small;
    if (m == 1) {
      small.push_back(Polynomial<F>::constant(pres.base_ring, pres.base_ring->field().one()));
    } else {
      for (auto& e : all_minors(pres.syzygy_mat, m - 1, budget))
        if (!e.value.is_zero()) small.push_back(e.value);
    }
    for (std::size_t i = 0; i < m && prod_ok; ++i)
      for (std::size_t j = 0; j < m && prod_ok; ++j)
        for (const auto& s : small)
          if (!rep.minors.contains((pres.f[i] * pres.f[j] * s).embed(T))) {
            prod_ok = false;
            break;
          }
  }
  out.product_inclusion = prod_ok;

  // Radical description through the minimal primes of the base ideal.
  auto base_primes = monomial_min_primes(pres.base_ideal);
  bool rad_ok = true;
  Ideal<F> claimed_intersection;
  bool first = true;
  for (const auto& p : base_primes) {
    std::vector<Polynomial<F>> pg;
    std::vector<int> idxs;
    for (int v : p) {
      pg.push_back(Polynomial<F>::variable(T, v));
      idxs.push_back(v);
    }
    for (std::size_t i = 0; i < m; ++i) {
      pg.push_back(Polynomial<F>::variable(T, pres.y_index(i)));
      idxs.push_back(pres.y_index(i));
    }
    Ideal<F> P(T, pg);
    out.claimed_primes.push_back(idxs);
    // Each claimed prime contains the minors ideal.
    if (!P.contains(rep.minors)) rad_ok = false;
    claimed_intersection = first ? P : intersect(claimed_intersection, P);
    first = false;
  }
  // Every element of the intersection is nilpotent modulo the minors ideal.
  if (rad_ok)
    for (const auto& g : claimed_intersection.gens())
      if (!radical_membership(g, rep.minors)) {
        rad_ok = false;
        break;
      }
  out.radical_described_by_primes = rad_ok;
  return out;
}

template <class F>
SingularLocusVerification<F> verify_singular_locus(const ReesLikePresentation<F>& pres,
                                                   unsigned long long budget = 20000) {
  return verify_singular_locus(pres, singular_locus(pres, budget), budget);
}

}  // namespace reeslike
