#pragma once
// Coefficient field policies: exact rationals (GMP-backed) and prime fields
// F_p with a runtime modulus. A field policy provides value-type elements and
// total arithmetic; polynomials are templated over the policy.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reeslike {

// Exact rationals. Elements are always stored in canonical form
// (gcd-reduced, positive denominator), which mpq_class guarantees after
// canonicalize(); all operations below preserve that.
class QQ {
 public:
  using Elem = mpq_class;

  static constexpr bool is_prime_field = false;

  long characteristic() const { return 0; }
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }

  // Accepts "p" or "p/q" with arbitrary-precision integers.
  Elem from_string(const std::string& s) const {
    Elem e;
    if (e.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    e.canonicalize();
    if (e.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return e;
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  // True when the element prints without a leading minus sign.
  bool is_nonnegative(const Elem& a) const { return a >= 0; }

  std::string str(const Elem& a) const { return a.get_str(); }

  bool operator==(const QQ&) const { return true; }
};

// Prime field F_p, p an odd prime or 2, elements normalized to [0, p).
class GFp {
 public:
  using Elem = std::int64_t;

  static constexpr bool is_prime_field = true;

  explicit GFp(long p) : p_(p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("modulus must be prime");
  }

  long characteristic() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_long(long v) const {
    Elem r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  Elem from_string(const std::string& s) const {
    // Reduce an arbitrary-precision literal (possibly "p/q") mod p.
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad literal: " + s);
    q.canonicalize();
    Elem num = from_long(mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p_)));
    Elem den = from_long(mpz_fdiv_ui(q.get_den().get_mpz_t(), static_cast<unsigned long>(p_)));
    return div(num, den);
  }

  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return ((a - b) % p_ + p_) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // Extended Euclid; p_ fits in 32 bits in practice so products are safe.
    Elem t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      Elem q = r / nr;
      Elem tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p_ : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_nonnegative(Elem) const { return true; }

  std::string str(Elem a) const { return std::to_string(a); }

  bool operator==(const GFp& o) const { return p_ == o.p_; }

  static bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  long p_;
};

}  // namespace reeslike
