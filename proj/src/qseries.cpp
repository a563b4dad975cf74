#include "littlewood/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "littlewood/error.hpp"

namespace littlewood {

namespace {

std::size_t cap(int order) {
  return order == QSeries::kExact ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(order) + 1;
}

}  // namespace

QSeries::QSeries(const LaurentPoly& p, int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::BudgetExceeded, "negative truncation order");
  if (p.is_zero()) return;
  if (p.valuation() < 0) {
    throw Error(ErrorCode::DivisionByNonUnit, "Laurent polynomial " + p.to_string() + " is not a power series");
  }
  const auto len = std::min<std::size_t>(static_cast<std::size_t>(p.degree()) + 1, cap(order));
  coeffs_.resize(len);
  for (std::size_t k = static_cast<std::size_t>(p.valuation()); k < len; ++k) coeffs_[k] = p.coeff(static_cast<int>(k));
  trim();
}

QSeries QSeries::zero(int order) {
  QSeries s;
  s.order_ = order;
  return s;
}

QSeries QSeries::monomial(const Rational& c, int e, int order) {
  return QSeries(LaurentPoly::monomial(c, e), order);
}

void QSeries::trim() {
  if (coeffs_.size() > cap(order_)) coeffs_.resize(cap(order_));
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational QSeries::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

int QSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  }
  return order_ == kExact ? kExact : order_ + 1;
}

QSeries QSeries::with_order(int order) const {
  QSeries r = *this;
  r.order_ = std::min(order_, order);
  r.trim();
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r;
  r.order_ = std::min(a.order_, b.order_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  const std::size_t len = std::min(a.coeffs_.size() + b.coeffs_.size() - 1, cap(r.order_));
  r.coeffs_.resize(len);
  mpq_class t;
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    const std::size_t jmax = std::min(b.coeffs_.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += t;
    }
  }
  r.trim();
  return r;
}

QSeries& QSeries::operator*=(const QSeries& o) { return *this = *this * o; }

QSeries& QSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries QSeries::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::DivisionByNonUnit, "series " + to_string() + " has no unit constant term");
  if (coeffs_.size() == 1) {
    QSeries r(Rational(1 / coeffs_[0]));
    r.order_ = order_;
    return r;
  }
  if (order_ == kExact) {
    throw Error(ErrorCode::NonconvergentAtOrder, "inverting an exact polynomial needs a truncation order");
  }
  const std::size_t len = cap(order_);
  QSeries r;
  r.order_ = order_;
  r.coeffs_.assign(len, Rational(0));
  const Rational inv0 = 1 / coeffs_[0];
  r.coeffs_[0] = inv0;
  mpq_class acc, t;
  for (std::size_t n = 1; n < len; ++n) {
    acc = 0;
    const std::size_t kmax = std::min(n, coeffs_.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (sgn(coeffs_[k]) == 0) continue;
      mpq_mul(t.get_mpq_t(), coeffs_[k].get_mpq_t(), r.coeffs_[n - k].get_mpq_t());
      acc += t;
    }
    r.coeffs_[n] = -acc * inv0;
  }
  r.trim();
  return r;
}

QSeries& QSeries::operator/=(const QSeries& o) {
  if (o.coeffs_.size() == 1) {
    order_ = std::min(order_, o.order_);
    *this *= Rational(1 / o.coeffs_[0]);
    trim();
    return *this;
  }
  const int ord = std::min(order_, o.order_);
  return *this = *this * o.with_order(ord).inverse();
}

bool operator==(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(std::max(a.coeffs_.size(), b.coeffs_.size()), cap(std::min(a.order_, b.order_)));
  for (std::size_t k = 0; k < n; ++k) {
    if (a.coeff(static_cast<int>(k)) != b.coeff(static_cast<int>(k))) return false;
  }
  return true;
}

QSeries QSeries::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  QSeries result(1);
  result.order_ = order_;
  QSeries base = *this;
  auto e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

void QSeries::mul_one_minus(const Rational& c, int e) {
  if (e < 0) throw Error(ErrorCode::DivisionByNonUnit, "negative exponent in series factor");
  if (sgn(c) == 0) return;
  if (e == 0) {
    *this *= Rational(1 - c);
    return;
  }
  const std::size_t ue = static_cast<std::size_t>(e);
  const std::size_t len = std::min(coeffs_.size() + ue, cap(order_));
  coeffs_.resize(len);
  for (std::size_t k = len; k-- > ue;) coeffs_[k] -= c * coeffs_[k - ue];
  trim();
}

void QSeries::div_one_minus(const Rational& c, int e) {
  if (sgn(c) == 0) return;
  if (e == 0) {
    if (c == 1) throw Error(ErrorCode::DivisionByNonUnit, "division by 1 - 1");
    *this *= Rational(1 / (1 - c));
    return;
  }
  if (e < 0 || order_ == kExact) {
    throw Error(ErrorCode::NonconvergentAtOrder, "geometric series needs a finite order and e >= 1");
  }
  const std::size_t ue = static_cast<std::size_t>(e);
  coeffs_.resize(cap(order_));
  for (std::size_t k = ue; k < coeffs_.size(); ++k) coeffs_[k] += c * coeffs_[k - ue];
  trim();
}

QSeries QSeries::shifted(int k) const {
  if (k < 0) throw Error(ErrorCode::DivisionByNonUnit, "negative shift of a power series");
  QSeries r = *this;
  if (!r.coeffs_.empty()) r.coeffs_.insert(r.coeffs_.begin(), static_cast<std::size_t>(k), Rational(0));
  r.trim();
  return r;
}

QSeries QSeries::substitute_q_power(int k) const {
  if (k < 1) throw Error(ErrorCode::InverseSubstitution, "q -> q^k needs k >= 1");
  QSeries r;
  r.order_ = order_ == kExact ? kExact : (order_ + 1) * k - 1;
  if (!coeffs_.empty()) {
    r.coeffs_.resize((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * static_cast<std::size_t>(k)] = coeffs_[i];
  }
  r.trim();
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << " ";
    os << "q";
    if (k != 1) os << "^" << k;
  }
  if (first) os << "0";
  if (order_ != kExact) {
    os << " + O(q";
    if (order_ + 1 != 1) os << "^" << order_ + 1;
    os << ")";
  }
  return os.str();
}

QSeries qpochhammer(const Rational& c, int e, int step, int order) {
  if (e < 0) throw Error(ErrorCode::NonconvergentAtOrder, "negative q-weight in Pochhammer base point");
  if (step <= 0 && sgn(c) != 0) {
    throw Error(ErrorCode::NonconvergentAtOrder, "Pochhammer base must carry positive q-weight");
  }
  QSeries r = QSeries::one(order);
  if (sgn(c) == 0) return r;
  for (int w = e; w <= order; w += step) r.mul_one_minus(c, w);
  return r;
}

}  // namespace littlewood
