#include "littlewood/rational_function.hpp"

#include "littlewood/error.hpp"
#include "littlewood/qseries.hpp"

namespace littlewood {

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByNonUnit, "rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int shift = num_.valuation() - den_.valuation();
  LaurentPoly n = num_.shifted(-num_.valuation());
  LaurentPoly d = den_.shifted(-den_.valuation());
  if (d.degree() > 0 && n.degree() > 0) {
    const LaurentPoly g = poly_gcd(n, d);
    if (g.degree() > 0) {
      n = poly_divmod(n, g).quotient;
      d = poly_divmod(d, g).quotient;
    }
  }
  const Rational c0 = d.coeff(0);
  if (c0 != 1) {
    const Rational inv = 1 / c0;
    n *= inv;
    d *= inv;
  }
  num_ = n.shifted(shift);
  den_ = std::move(d);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByNonUnit, "inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction r(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  return r;
}

RationalFunction RationalFunction::substitute_q_power(int k) const {
  return RationalFunction(num_.substitute_q_power(k), den_.substitute_q_power(k));
}

QSeries RationalFunction::to_qseries(int order) const {
  if (num_.valuation() < 0) {
    throw Error(ErrorCode::DivisionByNonUnit, "rational function " + to_string() + " has a pole at q = 0");
  }
  return QSeries(num_, order) / QSeries(den_, order);
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  LaurentPoly core = num_;
  const int v = num_.valuation();
  const bool monomial_num = num_.dense().size() == 1;
  if (v != 0 && !monomial_num) {
    out = v == 1 ? "q" : "q^" + std::to_string(v);
    core = num_.shifted(-v);
    out += "(" + core.to_string() + ")";
  } else if (den_.degree() > 0 && num_.dense().size() > 1) {
    out = "(" + num_.to_string() + ")";
  } else {
    out = num_.to_string();
  }
  if (den_.degree() > 0) out += "/(" + den_.to_string() + ")";
  return out;
}

}  // namespace littlewood
