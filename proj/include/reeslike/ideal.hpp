#pragma once
// Ideal value type. Copies share a Groebner cache keyed by monomial order, so
// repeated queries under the same order compute the basis once.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gb.hpp"
#include "polynomial.hpp"

namespace reeslike {

template <class F>
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.ring()->same_structure(*ring_))
        throw std::invalid_argument("ideal generator from a different ring");
      gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(RingPtr<F> ring) { return Ideal(std::move(ring), {}); }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  const std::vector<Polynomial<F>>& groebner(const MonomialOrder& ord,
                                             const GBConfig& config = GBConfig{}) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(ord.key());
    if (it != cache_->by_order.end()) return it->second;
    auto gb = buchberger(gens_, ord, config);
    return cache_->by_order.emplace(ord.key(), std::move(gb)).first->second;
  }

  const std::vector<Polynomial<F>>& groebner() const { return groebner(ring_->default_order()); }

  Polynomial<F> reduce(const Polynomial<F>& f, const MonomialOrder& ord) const {
    return normal_form(f.with_order(ord), groebner(ord));
  }
  Polynomial<F> reduce(const Polynomial<F>& f) const { return reduce(f, ring_->default_order()); }

  bool contains(const Polynomial<F>& f) const { return reduce(f).is_zero(); }

  bool contains(const Ideal& other) const {
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  bool is_unit_ideal() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
  }

  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }
  bool operator==(const Ideal& other) const { return equals(other); }

  // Leading monomials of the reduced basis under the given order: the unique
  // minimal generating set of the initial monomial ideal.
  std::vector<Monomial> initial_monomials(const MonomialOrder& ord) const {
    std::vector<Monomial> lead;
    for (const auto& g : groebner(ord)) lead.push_back(g.leading_monomial());
    return lead;
  }
  std::vector<Monomial> initial_monomials() const {
    return initial_monomials(ring_->default_order());
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<Polynomial<F>>> by_order;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace reeslike
