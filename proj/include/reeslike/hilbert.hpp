#pragma once
// Hilbert series data for graded quotients R/I: the free-resolution numerator
// N(t), its reduced form after clearing the (1-t)^codim factor, and the
// multiplicity read off at t = 1.

#include <stdexcept>
#include <vector>

#include "ideal_ops.hpp"
#include "resolution.hpp"

namespace reeslike {

struct HilbertData {
  // numerator[d] = coefficient of t^d in the alternating sum over the
  // resolution; Hilbert series = numerator / prod_i (1 - t^{w_i}).
  std::vector<long long> numerator;
  std::vector<long long> reduced_numerator;  // numerator / (1-t)^codim
  long dim = 0;
  long codim = 0;
  long long multiplicity = 0;  // reduced numerator evaluated at t = 1
};

namespace detail {

// Exact division of an integer polynomial (dense, index = degree) by (1-t);
// throws if the remainder is nonzero.
inline std::vector<long long> divide_by_one_minus_t(const std::vector<long long>& n) {
  // n = q - t*q  =>  q_k = n_k + q_{k-1}; remainder zero iff n(1) = 0.
  std::vector<long long> q(n.size(), 0);
  long long carry = 0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    carry += n[k];
    q[k] = carry;
  }
  if (carry != 0) throw std::logic_error("numerator not divisible by 1-t");
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace detail

template <class F>
HilbertData hilbert_data(const Ideal<F>& I, const GBConfig& config = GBConfig{}) {
  auto res = free_resolution(I, config);
  HilbertData h;
  for (std::size_t i = 0; i < res.complex.shifts.size(); ++i) {
    long long sign = (i % 2 == 0) ? 1 : -1;
    for (long s : res.complex.shifts[i]) {
      if (static_cast<std::size_t>(s) >= h.numerator.size()) h.numerator.resize(s + 1, 0);
      h.numerator[s] += sign;
    }
  }
  while (!h.numerator.empty() && h.numerator.back() == 0) h.numerator.pop_back();

  h.dim = dimension(I);
  h.codim = static_cast<long>(I.ring()->arity()) - h.dim;
  h.reduced_numerator = h.numerator;
  for (long k = 0; k < h.codim; ++k)
    h.reduced_numerator = detail::divide_by_one_minus_t(h.reduced_numerator);
  h.multiplicity = 0;
  for (long long c : h.reduced_numerator) h.multiplicity += c;
  return h;
}

}  // namespace reeslike
