#pragma once

#include <string>

#include "littlewood/laurent_poly.hpp"

namespace littlewood {

class QSeries;

/// Element of Q(q), kept in a unique canonical form:
///   - the denominator is an ordinary polynomial with constant term 1,
///   - numerator and denominator are coprime,
///   - any power of q lives in the numerator (which may be Laurent).
/// Two rational functions are equal iff their canonical forms coincide.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;
  RationalFunction substitute_q_power(int k) const;

  /// Power-series expansion to order D; throws if the function has a pole at q = 0.
  QSeries to_qseries(int order) const;

  /// Canonical text, e.g. "q/(1 + q + q^2)"; a pure power of q in the
  /// numerator is factored out in front.
  std::string to_string() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_{1};
};

}  // namespace littlewood
