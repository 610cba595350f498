#pragma once
// Graded polynomial ring descriptor: named variables, positive weights, a
// coefficient field policy, and the ring's default monomial order. Rings are
// immutable and shared via shared_ptr; polynomials hold a pointer to theirs.

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "field.hpp"
#include "order.hpp"

namespace reeslike {

template <class F>
class GradedPolyRing {
 public:
  GradedPolyRing(F field, std::vector<std::string> vars, std::vector<long> weights)
      : field_(std::move(field)), vars_(std::move(vars)), weights_(std::move(weights)) {
    if (vars_.size() != weights_.size())
      throw std::invalid_argument("one weight per variable required");
    for (long w : weights_)
      if (w < 1) throw std::invalid_argument("weights must be positive");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].empty()) throw std::invalid_argument("empty variable name");
      if (!index_.emplace(vars_[i], static_cast<int>(i)).second)
        throw std::invalid_argument("duplicate variable name: " + vars_[i]);
    }
    default_order_ = MonomialOrder::grevlex(vars_.size());
  }

  const F& field() const { return field_; }
  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<long>& weights() const { return weights_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  long weight(int i) const { return weights_[i]; }
  const MonomialOrder& default_order() const { return default_order_; }

  // Exact-name lookup; -1 when absent.
  int var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  // Lookup that also accepts the underscore spelling x_1 for a declared x1.
  int var_index_normalized(const std::string& name) const {
    int i = var_index(name);
    if (i >= 0) return i;
    std::string stripped;
    for (char c : name)
      if (c != '_') stripped += c;
    if (stripped != name) {
      i = var_index(stripped);
      if (i >= 0) return i;
    }
    return -1;
  }

  bool same_structure(const GradedPolyRing& o) const {
    return vars_ == o.vars_ && weights_ == o.weights_ && field_ == o.field_;
  }

 private:
  F field_;
  std::vector<std::string> vars_;
  std::vector<long> weights_;
  std::unordered_map<std::string, int> index_;
  MonomialOrder default_order_;
};

template <class F>
using RingPtr = std::shared_ptr<const GradedPolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars, std::vector<long> weights) {
  return std::make_shared<const GradedPolyRing<F>>(std::move(field), std::move(vars),
                                                   std::move(weights));
}

}  // namespace reeslike
