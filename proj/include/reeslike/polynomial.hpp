#pragma once
// Sparse polynomials with exact coefficients. Terms are kept strictly
// descending under the polynomial's active monomial order, so the leading
// term is terms().front(). All operations return new values; nothing is
// mutated in place after construction.

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "order.hpp"
#include "ring.hpp"

namespace reeslike {

template <class F>
struct Term {
  typename F::Elem c;
  Monomial m;
};

// Weighted degree of a polynomial: a value, "inhomogeneous", or the zero
// polynomial's minus-infinity sentinel (distinct from every integer).
struct WDegree {
  enum class Tag { minus_infinity, inhomogeneous, value };
  Tag tag = Tag::minus_infinity;
  long value = 0;

  static WDegree minus_infinity() { return {Tag::minus_infinity, 0}; }
  static WDegree inhomogeneous() { return {Tag::inhomogeneous, 0}; }
  static WDegree of(long v) { return {Tag::value, v}; }

  bool is_value() const { return tag == Tag::value; }
  bool is_minus_infinity() const { return tag == Tag::minus_infinity; }
  bool is_inhomogeneous() const { return tag == Tag::inhomogeneous; }
  bool operator==(const WDegree& o) const {
    return tag == o.tag && (tag != Tag::value || value == o.value);
  }
};

template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;

  Polynomial() = default;

  static Polynomial zero(RingPtr<F> ring) { return zero(ring, ring->default_order()); }
  static Polynomial zero(RingPtr<F> ring, MonomialOrder ord) {
    Polynomial p;
    p.ring_ = std::move(ring);
    p.ord_ = std::move(ord);
    return p;
  }

  static Polynomial constant(RingPtr<F> ring, Elem c) {
    Polynomial p = zero(ring);
    if (!p.ring_->field().is_zero(c))
      p.terms_.push_back({std::move(c), Monomial(p.ring_->arity())});
    return p;
  }

  static Polynomial variable(RingPtr<F> ring, int var, int exp = 1) {
    Polynomial p = zero(ring);
    Monomial m(p.ring_->arity());
    m.e[var] = exp;
    p.terms_.push_back({p.ring_->field().one(), std::move(m)});
    return p;
  }

  static Polynomial from_terms(RingPtr<F> ring, MonomialOrder ord, std::vector<Term<F>> terms) {
    Polynomial p = zero(std::move(ring), std::move(ord));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term<F>& leading_term() const {
    assert(!terms_.empty());
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().m; }
  const Elem& leading_coeff() const { return leading_term().c; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  // Re-sorted copy under another active order (same ring).
  Polynomial with_order(const MonomialOrder& ord) const {
    if (ord == ord_) return *this;
    Polynomial p = zero(ring_, ord);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  Polynomial operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.c = ring_->field().neg(t.c);
    return p;
  }

  Polynomial operator+(const Polynomial& g) const { return merged(g, false); }
  Polynomial operator-(const Polynomial& g) const { return merged(g, true); }

  Polynomial operator*(const Polynomial& g) const {
    check_compatible(g);
    const auto& fld = ring_->field();
    const Polynomial& h = (g.ord_ == ord_) ? g : g.with_order(ord_);
    auto cmp = [this](const Monomial& a, const Monomial& b) {
      return ord_.compare(a, b, ring_->weights()) > 0;  // descending
    };
    std::map<Monomial, Elem, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
      for (const auto& b : h.terms_) {
        Monomial m = a.m * b.m;
        Elem c = fld.mul(a.c, b.c);
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(std::move(m), std::move(c));
        } else {
          it->second = fld.add(it->second, c);
          if (fld.is_zero(it->second)) acc.erase(it);
        }
      }
    }
    Polynomial p = zero(ring_, ord_);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) p.terms_.push_back({std::move(c), m});
    return p;
  }

  Polynomial scaled(const Elem& c) const {
    const auto& fld = ring_->field();
    if (fld.is_zero(c)) return zero(ring_, ord_);
    Polynomial p(*this);
    for (auto& t : p.terms_) t.c = fld.mul(t.c, c);
    return p;
  }

  // this + c * x^m * g, the workhorse of division and S-polynomials.
  Polynomial add_scaled(const Elem& c, const Monomial& m, const Polynomial& g) const {
    check_compatible(g);
    const auto& fld = ring_->field();
    const Polynomial& h = (g.ord_ == ord_) ? g : g.with_order(ord_);
    Polynomial r = zero(ring_, ord_);
    r.terms_.reserve(terms_.size() + h.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& w = ring_->weights();
    while (i < terms_.size() || j < h.terms_.size()) {
      if (j == h.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = h.terms_[j].m * m;
      if (i == terms_.size()) {
        Elem cc = fld.mul(c, h.terms_[j].c);
        if (!fld.is_zero(cc)) r.terms_.push_back({std::move(cc), std::move(gm)});
        ++j;
        continue;
      }
      int cv = ord_.compare(terms_[i].m, gm, w);
      if (cv > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cv < 0) {
        Elem cc = fld.mul(c, h.terms_[j].c);
        if (!fld.is_zero(cc)) r.terms_.push_back({std::move(cc), std::move(gm)});
        ++j;
      } else {
        Elem cc = fld.add(terms_[i].c, fld.mul(c, h.terms_[j].c));
        if (!fld.is_zero(cc)) r.terms_.push_back({std::move(cc), std::move(gm)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial mul_term(const Elem& c, const Monomial& m) const {
    const auto& fld = ring_->field();
    if (fld.is_zero(c)) return zero(ring_, ord_);
    Polynomial p(*this);
    for (auto& t : p.terms_) {
      t.c = fld.mul(t.c, c);
      t.m = t.m * m;
    }
    return p;
  }

  Polynomial pow(long n) const {
    if (n < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = constant(ring_, ring_->field().one()).with_order(ord_);
    Polynomial b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      b = (n >>= 1) ? b * b : b;
    }
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
  }

  WDegree weighted_degree() const {
    if (terms_.empty()) return WDegree::minus_infinity();
    long d = terms_[0].m.weighted_degree(ring_->weights());
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (terms_[i].m.weighted_degree(ring_->weights()) != d) return WDegree::inhomogeneous();
    return WDegree::of(d);
  }

  bool is_homogeneous() const { return !weighted_degree().is_inhomogeneous(); }

  long max_weighted_degree() const {
    long d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      long td = t.m.weighted_degree(ring_->weights());
      if (first || td > d) d = td;
      first = false;
    }
    return d;
  }

  Polynomial partial_derivative(int var) const {
    const auto& fld = ring_->field();
    Polynomial p = zero(ring_, ord_);
    for (const auto& t : terms_) {
      if (t.m.e[var] == 0) continue;
      Elem c = fld.mul(t.c, fld.from_long(t.m.e[var]));
      if (fld.is_zero(c)) continue;  // char p kills exponent multiples of p
      Term<F> nt{std::move(c), t.m};
      nt.m.e[var] -= 1;
      p.terms_.push_back(std::move(nt));
    }
    // Differentiation preserves the term order on surviving terms.
    return p;
  }

  // Image under var -> images[var], a full substitution into the target
  // ring. Every image must live in the target ring.
  template <class G>
  Polynomial<G> substitute(const RingPtr<G>& target, const std::vector<Polynomial<G>>& images) const {
    if (images.size() != ring_->arity())
      throw std::invalid_argument("substitute needs one image per source variable");
    const auto& sfld = ring_->field();
    Polynomial<G> acc = Polynomial<G>::zero(target);
    // Cache successive powers of each image.
    std::vector<std::vector<Polynomial<G>>> pows(images.size());
    auto power = [&](std::size_t v, int e) {
      auto& tab = pows[v];
      if (tab.empty()) tab.push_back(Polynomial<G>::constant(target, target->field().one()));
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[v]);
      return tab[e];
    };
    for (const auto& t : terms_) {
      Polynomial<G> prod = Polynomial<G>::constant(target, convert_elem<G>(sfld, target->field(), t.c));
      for (std::size_t v = 0; v < images.size(); ++v)
        if (t.m.e[v] != 0) prod = prod * power(v, t.m.e[v]);
      acc = acc + prod;
    }
    return acc;
  }

  // Variable-for-variable embedding into a ring containing all source
  // variables by name.
  template <class G>
  Polynomial<G> embed(const RingPtr<G>& target) const {
    std::vector<Polynomial<G>> images;
    images.reserve(ring_->arity());
    for (const auto& name : ring_->vars()) {
      int idx = target->var_index(name);
      if (idx < 0) throw std::invalid_argument("embedding misses variable " + name);
      images.push_back(Polynomial<G>::variable(target, idx));
    }
    return substitute(target, images);
  }

  bool equals(const Polynomial& g) const {
    if (!ring_ || !g.ring_) return terms_.empty() && g.terms_.empty();
    if (!ring_->same_structure(*g.ring_)) return false;
    const Polynomial& h = (g.ord_ == ord_) ? g : g.with_order(ord_);
    if (terms_.size() != h.terms_.size()) return false;
    const auto& fld = ring_->field();
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != h.terms_[i].m || !fld.eq(terms_[i].c, h.terms_[i].c)) return false;
    return true;
  }
  bool operator==(const Polynomial& g) const { return equals(g); }
  bool operator!=(const Polynomial& g) const { return !equals(g); }

 private:
  template <class G>
  static typename G::Elem convert_elem(const F& from, const G& to, const typename F::Elem& c) {
    if constexpr (std::is_same_v<F, G>) {
      (void)from;
      (void)to;
      return c;
    } else {
      return to.from_string(from.str(c));
    }
  }

  void check_compatible(const Polynomial& g) const {
    assert(ring_ && g.ring_);
    assert(ring_ == g.ring_ || ring_->same_structure(*g.ring_));
    (void)g;
  }

  Polynomial merged(const Polynomial& g, bool subtract) const {
    check_compatible(g);
    const auto& fld = ring_->field();
    const Polynomial& h = (g.ord_ == ord_) ? g : g.with_order(ord_);
    Polynomial r = zero(ring_, ord_);
    r.terms_.reserve(terms_.size() + h.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& w = ring_->weights();
    while (i < terms_.size() || j < h.terms_.size()) {
      if (i == terms_.size()) {
        Term<F> t = h.terms_[j++];
        if (subtract) t.c = fld.neg(t.c);
        r.terms_.push_back(std::move(t));
      } else if (j == h.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
      } else {
        int cv = ord_.compare(terms_[i].m, h.terms_[j].m, w);
        if (cv > 0) {
          r.terms_.push_back(terms_[i++]);
        } else if (cv < 0) {
          Term<F> t = h.terms_[j++];
          if (subtract) t.c = fld.neg(t.c);
          r.terms_.push_back(std::move(t));
        } else {
          Elem c = subtract ? fld.sub(terms_[i].c, h.terms_[j].c)
                            : fld.add(terms_[i].c, h.terms_[j].c);
          if (!fld.is_zero(c)) r.terms_.push_back({std::move(c), terms_[i].m});
          ++i;
          ++j;
        }
      }
    }
    return r;
  }

  void sort_terms() {
    const auto& w = ring_->weights();
    std::sort(terms_.begin(), terms_.end(), [&](const Term<F>& a, const Term<F>& b) {
      return ord_.compare(a.m, b.m, w) > 0;
    });
  }

  void normalize() {
    const auto& fld = ring_->field();
    sort_terms();
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = fld.add(out.back().c, t.c);
        if (fld.is_zero(out.back().c)) out.pop_back();
      } else if (!fld.is_zero(t.c)) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  RingPtr<F> ring_;
  MonomialOrder ord_;
  std::vector<Term<F>> terms_;
};

}  // namespace reeslike
