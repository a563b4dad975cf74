#pragma once

#include <string>
#include <vector>

#include "littlewood/rational.hpp"

namespace littlewood {

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely from the lowest nonzero exponent to the highest; the zero
/// polynomial has no coefficients. Both ends of the coefficient array are
/// nonzero at all times.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  /// c * q^e
  static LaurentPoly monomial(const Rational& c, int e);
  static LaurentPoly q_power(int e) { return monomial(1, e); }
  /// 1 - c q^e
  static LaurentPoly one_minus(const Rational& c, int e);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const { return low_; }
  /// Highest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int degree() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int e) const;
  const std::vector<Rational>& dense() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned k) const;
  /// q -> q^k for k >= 1.
  LaurentPoly substitute_q_power(int k) const;
  /// Value at q = 0; requires valuation >= 0.
  Rational at_zero() const;

  /// Human-readable form, e.g. "1 - 2 q + 1/3 q^5".
  std::string to_string() const;

 private:
  LaurentPoly(int low, std::vector<Rational> coeffs);
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder for ordinary polynomials (valuation >= 0).
struct PolyDivision {
  LaurentPoly quotient;
  LaurentPoly remainder;
};
PolyDivision poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd of two ordinary polynomials (not both zero).
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

}  // namespace littlewood
