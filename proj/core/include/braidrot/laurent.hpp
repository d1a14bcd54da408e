#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

namespace braidrot {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable x, with arbitrary-precision
// coefficients and exponents. Stored sparsely; no stored coefficient is zero.
class LaurentPoly {
public:
  using Terms = std::map<Int, Int>;  // exponent -> nonzero coefficient

  LaurentPoly() = default;

  // The monomial coeff * x^exponent (zero coefficient gives the zero polynomial).
  static LaurentPoly monomial(Int coeff, Int exponent);
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  // Coefficient of x^exponent (zero if absent).
  Int coeff(const Int& exponent) const;

  void add_term(const Int& exponent, const Int& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const LaurentPoly& other) const { return terms_ != other.terms_; }

  // Sum of coefficient * exponent over all terms: d/dx at x = 1.
  Int derivative_at_one() const;

  // Sum of coefficients: evaluation at x = 1.
  Int value_at_one() const;

  // Canonical text form, terms by descending exponent: "x^3 + 2*x - 1 - x^-2".
  // The zero polynomial prints as "0".
  std::string to_string() const;

  // Parses the canonical text form (used by golden tests and the CLI).
  static LaurentPoly from_string(const std::string& text);

private:
  Terms terms_;
};

}  // namespace braidrot
