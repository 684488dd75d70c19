#pragma once

// Exact coefficient rings.
//
// QPoly: Laurent polynomials in q with integer coefficients.
// LaurentCoeff: Laurent polynomials in v and X with integer coefficients,
// where v*v = q and X = q^{-s} keeps the complex parameter symbolic.

#include "spherical/numbers.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>

namespace spherical {

class QPoly {
 public:
  QPoly() = default;
  QPoly(long long c) { if (c) terms_[0] = c; }  // NOLINT: constants convert
  static QPoly monomial(BigInt c, int exp);

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int exp) const;
  BigInt at_one() const;
  // q -> q^{-1}
  QPoly invert() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly shifted(int exp) const;  // times q^exp
  friend bool operator==(const QPoly&, const QPoly&) = default;

  // Ascending powers: "q + q^2", "1 - q^-1", "0".
  std::string str() const;

 private:
  void add(int exp, const BigInt& c);
  std::map<int, BigInt> terms_;
};

class LaurentCoeff {
 public:
  using Key = std::pair<int, int>;  // (v exponent, X exponent)

  LaurentCoeff() = default;
  LaurentCoeff(long long c) { if (c) terms_[{0, 0}] = c; }  // NOLINT
  static LaurentCoeff monomial(BigInt c, int v_exp, int x_exp = 0);
  // q^j -> v^{2j}
  static LaurentCoeff from_q(const QPoly& p);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  BigInt coeff(int v_exp, int x_exp = 0) const;
  bool is_x_free() const;

  LaurentCoeff& operator+=(const LaurentCoeff& o);
  LaurentCoeff& operator-=(const LaurentCoeff& o);
  LaurentCoeff& operator*=(const LaurentCoeff& o);
  LaurentCoeff& operator*=(const BigInt& k);
  friend LaurentCoeff operator+(LaurentCoeff a, const LaurentCoeff& b) { return a += b; }
  friend LaurentCoeff operator-(LaurentCoeff a, const LaurentCoeff& b) { return a -= b; }
  friend LaurentCoeff operator*(const LaurentCoeff& a, const LaurentCoeff& b);
  LaurentCoeff operator-() const;
  friend bool operator==(const LaurentCoeff&, const LaurentCoeff&) = default;

  // Multiply by v^dv X^dx.
  LaurentCoeff shifted(int dv, int dx) const;
  // X -> v^{v_per_x}
  LaurentCoeff specialize_x(int v_per_x) const;
  // X -> 1
  LaurentCoeff drop_x() const { return specialize_x(0); }

  std::complex<double> eval(double v, std::complex<double> x) const;

  // "1 + v^-2*X", "0"
  std::string str() const;

 private:
  void add(const Key& k, const BigInt& c);
  std::map<Key, BigInt> terms_;
};

}  // namespace spherical
