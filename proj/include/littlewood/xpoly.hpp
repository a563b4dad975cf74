#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <type_traits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "littlewood/error.hpp"
#include "littlewood/qseries.hpp"
#include "littlewood/rational.hpp"

namespace littlewood {

inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial in x_1..x_n; unused slots stay zero.
using Exponent = std::array<std::int16_t, kMaxVars>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline Exponent operator+(Exponent a, const Exponent& b) {
  for (int i = 0; i < kMaxVars; ++i) a[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return a;
}

inline Exponent operator-(Exponent a) {
  for (auto& x : a) x = static_cast<std::int16_t>(-x);
  return a;
}

inline Exponent make_exponent(std::initializer_list<int> values) {
  Exponent e{};
  int i = 0;
  for (int v : values) e[i++] = static_cast<std::int16_t>(v);
  return e;
}

/// Sparse multivariate Laurent polynomial in x_1..x_n over a coefficient ring
/// (Rational or QSeries), optionally truncated at a total degree bound: terms
/// whose exponent sum exceeds the bound are dropped by every operation.
template <class Coef>
class XPoly {
 public:
  using TermMap = std::map<Exponent, Coef>;

  explicit XPoly(int nvars = 0, std::optional<int> degree_bound = std::nullopt)
      : nvars_(nvars), bound_(degree_bound) {
    if (nvars < 0 || nvars > kMaxVars) {
      throw Error(ErrorCode::TooManyVariables, "at most " + std::to_string(kMaxVars) + " variables supported");
    }
  }

  static XPoly constant(int nvars, const Coef& c, std::optional<int> bound = std::nullopt) {
    XPoly p(nvars, bound);
    p.add_term(Exponent{}, c);
    return p;
  }

  static XPoly monomial(int nvars, const Exponent& e, const Coef& c, std::optional<int> bound = std::nullopt) {
    XPoly p(nvars, bound);
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  std::optional<int> degree_bound() const { return bound_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coef coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef() : it->second;
  }

  /// Coefficient of x^0.
  Coef constant_term() const { return coeff(Exponent{}); }

  void add_term(const Exponent& e, const Coef& c) {
    using littlewood::is_zero;
    if (bound_ && total_degree(e) > *bound_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  XPoly& operator+=(const XPoly& o) {
    merge_bound(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  XPoly& operator-=(const XPoly& o) {
    merge_bound(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  XPoly operator-() const {
    XPoly r(nvars_, bound_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r(a.nvars_, a.bound_);
    r.merge_bound(b);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }

  XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

  template <class Scalar>
  XPoly& scale(const Scalar& s) {
    using littlewood::is_zero;
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * s;
      it = is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  /// Drops terms above total degree d and records the bound.
  XPoly truncated(int d) const {
    XPoly r(nvars_, bound_ ? std::min(*bound_, d) : d);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  /// f(x) -> f(x^{-1}); the degree bound is not carried over.
  XPoly inverted() const {
    XPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  /// Multiplies by x^shift.
  XPoly shifted(const Exponent& shift) const {
    XPoly r(nvars_, bound_);
    for (const auto& [e, c] : terms_) r.add_term(e + shift, c);
    return r;
  }

  /// x_i -> x^{images[i]} where the images are monomials in a ring with
  /// target_nvars variables.
  XPoly substitute(const std::vector<Exponent>& images, int target_nvars,
                   std::optional<int> bound = std::nullopt) const {
    if (static_cast<int>(images.size()) != nvars_) {
      throw Error(ErrorCode::InverseSubstitution, "substitution needs one image per variable");
    }
    XPoly r(target_nvars, bound);
    for (const auto& [e, c] : terms_) {
      Exponent img{};
      for (int i = 0; i < nvars_; ++i) {
        for (int k = 0; k < kMaxVars; ++k) img[k] = static_cast<std::int16_t>(img[k] + e[i] * images[i][k]);
      }
      r.add_term(img, c);
    }
    return r;
  }

  /// Sets x_i = 0: drops every term with a positive power of x_i and fails on
  /// negative powers.
  XPoly set_variable_zero(int var) const {
    XPoly r(nvars_, bound_);
    for (const auto& [e, c] : terms_) {
      if (e[var] < 0) throw Error(ErrorCode::InverseSubstitution, "x_i = 0 in a Laurent term");
      if (e[var] == 0) r.add_term(e, c);
    }
    return r;
  }

  bool has_negative_exponent() const {
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] < 0) return true;
      }
    }
    return false;
  }

  /// Invariance under every adjacent transposition x_i <-> x_{i+1}.
  bool is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
      for (const auto& [e, c] : terms_) {
        Exponent s = e;
        std::swap(s[i], s[i + 1]);
        auto it = terms_.find(s);
        if (it == terms_.end() || !(it->second == c)) return false;
      }
    }
    return true;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Coef&>()))>;
    XPoly<Out> r(nvars_, bound_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  friend bool operator==(const XPoly& a, const XPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (ib->first != e || !(ib->second == c)) return false;
      ++ib;
    }
    return true;
  }

 private:
  void merge_bound(const XPoly& o) {
    if (o.bound_ && (!bound_ || *o.bound_ < *bound_)) {
      bound_ = o.bound_;
      for (auto it = terms_.begin(); it != terms_.end();) {
        it = total_degree(it->first) > *bound_ ? terms_.erase(it) : std::next(it);
      }
    }
  }

  int nvars_;
  std::optional<int> bound_;
  TermMap terms_;
};

/// Constant term of a*b without forming the product: sum_alpha a[alpha] b[-alpha].
template <class A, class B>
auto constant_term_of_product(const XPoly<A>& a, const XPoly<B>& b) {
  // gmpxx products are lazy expressions; keep the value type when A == B
  using Out = std::conditional_t<std::is_same_v<A, B>, A, std::decay_t<decltype(std::declval<A>() * std::declval<B>())>>;
  Out acc{};
  bool first = true;
  for (const auto& [e, ca] : a.terms()) {
    auto it = b.terms().find(-e);
    if (it == b.terms().end()) continue;
    if (first) {
      acc = ca * it->second;
      first = false;
    } else {
      acc += ca * it->second;
    }
  }
  return acc;
}

/// Monomial text such as "x1^2*x3^-1" (1 for the empty monomial).
inline std::string monomial_to_string(const Exponent& e, int nvars) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace littlewood
