#include "littlewood/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

#include "littlewood/error.hpp"

namespace littlewood {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  r.canonicalize();
  if (sgn(r.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + text);
  return r;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int e) {
  if (sgn(c) == 0) return {};
  return LaurentPoly(e, {c});
}

LaurentPoly LaurentPoly::one_minus(const Rational& c, int e) {
  return LaurentPoly(1) - monomial(c, e);
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(degree(), o.degree());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(low_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1), base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute_q_power(int k) const {
  if (k < 1) throw Error(ErrorCode::InverseSubstitution, "q -> q^k needs k >= 1");
  if (is_zero()) return {};
  std::vector<Rational> out((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return LaurentPoly(low_ * k, std::move(out));
}

Rational LaurentPoly::at_zero() const {
  if (!is_zero() && low_ < 0) throw Error(ErrorCode::DivisionByNonUnit, "evaluating a pole at q = 0");
  return coeff(0);
}

namespace {

void append_term(std::ostringstream& os, const Rational& c, int e, bool first) {
  const bool negative = sgn(c) < 0;
  Rational mag = negative ? Rational(-c) : c;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  const bool unit = mag == 1;
  if (e == 0) {
    os << mag.get_str();
    return;
  }
  if (!unit) os << mag.get_str() << " ";
  os << "q";
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    append_term(os, coeffs_[i], low_ + static_cast<int>(i), first);
    first = false;
  }
  return os.str();
}

PolyDivision poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByNonUnit, "polynomial division by zero");
  if (a.valuation() < 0 || b.valuation() < 0) {
    throw Error(ErrorCode::DivisionByNonUnit, "poly_divmod needs ordinary polynomials");
  }
  LaurentPoly rem = a;
  LaurentPoly quot;
  const int db = b.degree();
  const Rational lead_inv = 1 / b.coeff(db);
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const LaurentPoly term = LaurentPoly::monomial(rem.coeff(rem.degree()) * lead_inv, shift);
    quot += term;
    rem -= term * b;
  }
  return {std::move(quot), std::move(rem)};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  a *= Rational(1 / a.coeff(a.degree()));
  return a;
}

}  // namespace littlewood
