#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qhh/errors.hpp"

namespace qhh {

// The exact rationals. mpq_class keeps every value in lowest terms with a
// positive denominator, which is exactly the canonical form we rely on.
class Rationals {
public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_rational(const mpq_class& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw ModelError("division by zero");
    return Elem(1) / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "q"; }
};

// F_p for a prime p < 2^31. Residues live in [0, p).
class PrimeField {
public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || !is_prime(p)) throw ModelError("field modulus must be prime: " + std::to_string(p));
    if (p >= (1ull << 31)) throw ModelError("field modulus too large");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }
  Elem from_rational(const mpq_class& q) const {
    Elem num = mod_of(q.get_num());
    Elem den = mod_of(q.get_den());
    if (den == 0) throw ModelError("rational with denominator divisible by p=" + std::to_string(p_));
    Elem val = mul(num, inv(den));
    return q.get_num() < 0 ? neg(val) : val;
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw ModelError("division by zero in F_p");
    return pow(a, p_ - 2);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }
  std::string name() const { return "fp:" + std::to_string(p_); }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  Elem pow(Elem base, std::uint64_t e) const {
    Elem r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  // |v| mod p, sign handled by the caller.
  Elem mod_of(const mpz_class& v) const {
    mpz_class a = abs(v);
    return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p_));
  }

  std::uint64_t p_;
};

}  // namespace qhh
