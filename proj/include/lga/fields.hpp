#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lga {

// Scalar arithmetic is supplied by a small field object passed alongside the
// data it operates on.  A field type F provides:
//
//   using Elem = ...;                value type, regular and ordered
//   Elem zero(), one();
//   Elem from_int(long long);
//   Elem add/sub/mul(Elem, Elem), neg(Elem), inv(Elem);
//   bool is_zero(Elem);
//   std::string str(Elem);          balanced / human-readable form
//
// Everything downstream (matrices, subspaces, presentations) is templated on
// F so that the same code runs over GF(p) and over the rationals.

// Prime field GF(p).  Elements are canonical residues in [0, p).
class Gf {
 public:
  using Elem = std::uint32_t;

  explicit Gf(std::uint32_t p) : p_(p) {
    if (p < 2 || !is_prime(p))
      throw std::invalid_argument("field modulus " + std::to_string(p) +
                                  " is not prime");
  }

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t(a) * b % p_);
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }

  // Balanced representative in (-p/2, p/2]; keeps printed relations legible.
  std::string str(Elem a) const {
    long long v = a;
    if (v > p_ / 2) v -= p_;
    return std::to_string(v);
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

// Exact rational arithmetic.  Slow; used as a confirmation mode for results
// obtained modulo a prime.
class Rationals {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }

  Elem from_int(long long n) const { return Elem(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }

  std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace lga
