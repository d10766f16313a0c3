#pragma once

#include <map>
#include <string>

#include "fiatcells/numeric.hpp"

namespace fiatcells {

/// Integer Laurent polynomial in one variable. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& constant);  // NOLINT: implicit by design
  LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);

  Integer coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  /// Lowest and highest exponent; 0 for the zero polynomial.
  int min_degree() const;
  int max_degree() const;

  /// Multiplies by var^k.
  LaurentPoly shift(int k) const;
  /// var ↦ var^{-1}.
  LaurentPoly bar() const;
  /// var ↦ var^k, for positive k.
  LaurentPoly substitute_power(int k) const;
  Integer at_one() const;
  bool nonnegative() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  const std::map<int, Integer>& terms() const { return terms_; }

  /// Ascending exponents, e.g. "1 + q" or "v^-1 + v"; "0" for zero.
  std::string to_string(const std::string& var = "v") const;

 private:
  void add_term(int exponent, const Integer& coeff);
  std::map<int, Integer> terms_;
};

}  // namespace fiatcells
