#pragma once

#include <limits>
#include <string>
#include <vector>

#include "littlewood/laurent_poly.hpp"

namespace littlewood {

/// Truncated power series in q: c_0 + c_1 q + ... + c_D q^D + O(q^{D+1}).
///
/// The truncation order D travels with the value. Binary operations produce
/// the smaller of the two orders. A series with order kExact is a polynomial
/// known exactly (constants, finite products); it is the identity for the
/// order bookkeeping. Coefficients are stored densely up to the last nonzero.
class QSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  QSeries() = default;
  QSeries(const Rational& c) { if (sgn(c) != 0) coeffs_.push_back(c); }  // NOLINT
  QSeries(long c) : QSeries(Rational(c)) {}  // NOLINT
  /// Truncates p (which must have no negative powers) at the given order.
  QSeries(const LaurentPoly& p, int order);

  static QSeries zero(int order);
  static QSeries one(int order) { return QSeries(LaurentPoly(1), order); }
  /// c q^e + O(q^{order+1}).
  static QSeries monomial(const Rational& c, int e, int order);

  int order() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& dense() const { return coeffs_; }
  /// Lowest exponent with nonzero coefficient, or order+1 for a (truncated) zero.
  int valuation() const;
  bool is_unit() const { return !coeffs_.empty() && sgn(coeffs_.front()) != 0; }

  /// Same series, truncated further to min(order(), order).
  QSeries with_order(int order) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  QSeries& operator/=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator/(QSeries a, const QSeries& b) { return a /= b; }
  /// Equality of all coefficients both operands know, i.e. up to the smaller order.
  friend bool operator==(const QSeries& a, const QSeries& b);

  /// 1/f; needs a unit constant term and a finite order (or f a constant).
  QSeries inverse() const;
  QSeries pow(int k) const;
  /// Multiplies in place by (1 - c q^e), e >= 0.
  void mul_one_minus(const Rational& c, int e);
  /// Divides in place by (1 - c q^e), e >= 1 (or e = 0 with c != 1).
  void div_one_minus(const Rational& c, int e);
  /// Multiplies by q^k, k >= 0.
  QSeries shifted(int k) const;
  QSeries substitute_q_power(int k) const;

  /// "c0 + c1 q + ... + O(q^{D+1})", exact series have no O-term.
  std::string to_string() const;

 private:
  void trim();

  int order_ = kExact;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const QSeries& s) { return s.is_zero(); }

/// (c q^e; q^step)_infinity = prod_{i >= 0} (1 - c q^{e + step i}), truncated.
/// Throws NonconvergentAtOrder when infinitely many factors have q-weight 0.
QSeries qpochhammer(const Rational& c, int e, int step, int order);

}  // namespace littlewood
