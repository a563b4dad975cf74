#include "littlewood/pfaffian.hpp"

#include <limits>

#include "littlewood/error.hpp"

namespace littlewood {

SkewMatrix::SkewMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim)) {
  if (dim < 0) throw Error(ErrorCode::OddDimension, "negative dimension");
}

void SkewMatrix::set(int i, int j, const RationalFunction& value) {
  if (i == j) throw Error(ErrorCode::OddDimension, "diagonal of a skew matrix is fixed at zero");
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = -value;
}

RfMatrix SkewMatrix::dense() const {
  RfMatrix m(static_cast<std::size_t>(dim_), std::vector<RationalFunction>(static_cast<std::size_t>(dim_)));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) m[i][j] = (*this)(i, j);
  }
  return m;
}

RationalFunction pfaffian(const SkewMatrix& a) {
  if (a.dim() % 2 != 0) throw Error(ErrorCode::OddDimension, "Pfaffian of a " + std::to_string(a.dim()) + "-dim matrix");
  SkewMatrix work = a;
  RationalFunction result(1);
  while (work.dim() > 0) {
    const int dim = work.dim();
    int pivot = -1;
    int best = std::numeric_limits<int>::max();
    for (int k = 1; k < dim; ++k) {
      const auto& e = work(0, k);
      if (e.is_zero()) continue;
      const int cost = e.denominator().degree();
      if (cost < best) {
        best = cost;
        pivot = k;
      }
    }
    if (pivot < 0) return RationalFunction();
    // Moving index `pivot` to position 1 is a transposition of rows and columns.
    auto at = [&](int i, int j) -> const RationalFunction& {
      auto remap = [&](int x) { return x == 1 ? pivot : (x == pivot ? 1 : x); };
      return work(remap(i), remap(j));
    };
    if (pivot != 1) result = -result;
    const RationalFunction a01 = at(0, 1);
    result *= a01;
    const RationalFunction inv = a01.inverse();
    SkewMatrix next(dim - 2);
    for (int i = 2; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        RationalFunction cross = at(0, i) * at(1, j) - at(1, i) * at(0, j);
        next.set(i - 2, j - 2, cross.is_zero() ? at(i, j) : at(i, j) - cross * inv);
      }
    }
    work = std::move(next);
  }
  return result;
}

RationalFunction pfaffian_expansion(const SkewMatrix& a) {
  if (a.dim() % 2 != 0) throw Error(ErrorCode::OddDimension, "Pfaffian of a " + std::to_string(a.dim()) + "-dim matrix");
  if (a.dim() == 0) return RationalFunction(1);
  RationalFunction total;
  for (int k = 1; k < a.dim(); ++k) {
    if (a(0, k).is_zero()) continue;
    SkewMatrix minor(a.dim() - 2);
    std::vector<int> keep;
    for (int r = 1; r < a.dim(); ++r) {
      if (r != k) keep.push_back(r);
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        minor.set(static_cast<int>(i), static_cast<int>(j), a(keep[i], keep[j]));
      }
    }
    RationalFunction term = a(0, k) * pfaffian_expansion(minor);
    total += (k % 2 == 1) ? term : -term;
  }
  return total;
}

RationalFunction determinant(RfMatrix m) {
  const std::size_t n = m.size();
  RationalFunction det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    int best = std::numeric_limits<int>::max();
    for (std::size_t r = col; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const int cost = m[r][col].denominator().degree() + m[r][col].numerator().degree();
      if (cost < best) {
        best = cost;
        pivot = r;
      }
    }
    if (pivot == n) return RationalFunction();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const RationalFunction inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const RationalFunction factor = m[r][col] * inv;
      for (std::size_t c = col + 1; c < n; ++c) {
        if (!m[col][c].is_zero()) m[r][c] -= factor * m[col][c];
      }
    }
  }
  return det;
}

namespace {

void check_length(const Partition& lambda, int n) {
  if (n < 0 || lambda.length() > 2 * n) {
    throw Error(ErrorCode::LengthExceedsBound,
                "length of " + lambda.to_string() + " exceeds 2n = " + std::to_string(2 * n));
  }
}

template <class Entry>
SkewMatrix parity_supported(const Partition& lambda, int n, Entry entry) {
  check_length(lambda, n);
  SkewMatrix a(2 * n);
  for (int i = 1; i <= 2 * n; ++i) {
    for (int j = i + 1; j <= 2 * n; ++j) {
      const int d = lambda.part(i) - lambda.part(j) + j - i;
      if (d % 2 != 0) a.set(i - 1, j - 1, entry(d));
    }
  }
  return a;
}

}  // namespace

SkewMatrix pf_matrix_p1(const Partition& lambda, int n) {
  return parity_supported(lambda, n, [](int d) {
    return RationalFunction(LaurentPoly::q_power((d - 1) / 2), LaurentPoly::one_minus(1, d));
  });
}

SkewMatrix pf_matrix_p2(const Partition& lambda, int n) {
  return parity_supported(lambda, n, [](int d) {
    return RationalFunction(LaurentPoly(1) + LaurentPoly::q_power(d), LaurentPoly::one_minus(1, d));
  });
}

RationalFunction pf_prefactor(int n) {
  LaurentPoly num(1), den(1);
  for (int i = 1; i <= n; ++i) {
    num *= LaurentPoly::one_minus(1, 2 * i - 1).pow(static_cast<unsigned>(2 * n - 2 * i + 1));
    den *= LaurentPoly::one_minus(1, 2 * i).pow(static_cast<unsigned>(2 * n - 2 * i));
  }
  return RationalFunction(num, den);
}

RationalFunction pf_formula_p1(const Partition& lambda, int n) {
  return pf_prefactor(n) * pfaffian(pf_matrix_p1(lambda, n));
}

RationalFunction pf_formula_p2(const Partition& lambda, int n) {
  const RationalFunction scale(LaurentPoly(1),
                               (LaurentPoly(1) + LaurentPoly::q_power(n)) * Rational(Integer(1) << (n - 1)));
  return scale * pf_prefactor(n) * pfaffian(pf_matrix_p2(lambda, n));
}

RationalFunction hook_content_ratio(const Partition& lambda, int z_exponent) {
  return RationalFunction(content_poly(lambda, z_exponent, ParityVariant::Even) * hook_poly(lambda, ParityVariant::Odd),
                          content_poly(lambda, z_exponent, ParityVariant::Odd) * hook_poly(lambda, ParityVariant::Even));
}

namespace {

void check_closed_form(const Partition& lambda, int n) {
  check_length(lambda, n);
  if (!has_empty_two_core(lambda)) {
    throw Error(ErrorCode::NonemptyTwoCore, lambda.to_string() + " has a nonempty 2-core");
  }
}

}  // namespace

RationalFunction closed_form_int1(const Partition& lambda, int n) {
  check_closed_form(lambda, n);
  const long bc = b_statistic(conjugate(lambda));
  return RationalFunction(LaurentPoly::q_power(static_cast<int>(bc))) * hook_content_ratio(lambda, 2 * n);
}

RationalFunction closed_form_int2(const Partition& lambda, int n) {
  check_closed_form(lambda, n);
  const long b = b_statistic(lambda);
  const long bc = b_statistic(conjugate(lambda));
  const RationalFunction twist(LaurentPoly(1) + LaurentPoly::q_power(static_cast<int>(n + 2 * (bc - b))),
                               LaurentPoly(1) + LaurentPoly::q_power(n));
  return RationalFunction(LaurentPoly::q_power(static_cast<int>(b))) * twist * hook_content_ratio(lambda, 2 * n);
}

BlockReduction block_reduction(const SkewMatrix& a) {
  BlockReduction out;
  const int dim = a.dim();
  for (int j = 1; j <= dim; ++j) {
    (j > 1 && !a(0, j - 1).is_zero() ? out.columns : out.rows).push_back(j);
  }
  if (out.rows.size() != out.columns.size()) {
    throw Error(ErrorCode::NonemptyTwoCore, "unbalanced parity split; block form needs an empty 2-core");
  }
  int column_sum = 0;
  for (int j : out.columns) column_sum += j;
  // Sorting I before J has sign (-1)^{sum I - n(n+1)/2}; pf [[0, M], [-M^t, 0]]
  // contributes (-1)^{n(n-1)/2}. Together: (-1)^{sum I - n} = (-1)^{sum J}.
  out.sign = column_sum % 2 == 0 ? 1 : -1;
  for (int i : out.rows) {
    std::vector<RationalFunction> row;
    for (int j : out.columns) row.push_back(a(i - 1, j - 1));
    out.block.push_back(std::move(row));
  }
  return out;
}

RationalFunction chu_determinant(const std::vector<RationalFunction>& x, const std::vector<RationalFunction>& y,
                                 const RationalFunction& b, const RationalFunction& c) {
  const std::size_t n = x.size();
  RfMatrix m(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RationalFunction den = x[i] + y[j];
      if (den.is_zero()) throw Error(ErrorCode::SingularDenominator, "x_i + y_j = 0");
      m[i][j] = (b * x[i] + c * y[j]) / den;
    }
  }
  return determinant(std::move(m));
}

RationalFunction chu_product(const std::vector<RationalFunction>& x, const std::vector<RationalFunction>& y,
                             const RationalFunction& b, const RationalFunction& c) {
  const std::size_t n = x.size();
  if (n == 0) return RationalFunction(1);
  RationalFunction px(1), py(1);
  for (std::size_t i = 0; i < n; ++i) {
    px *= x[i];
    py *= y[i];
  }
  RationalFunction out = (b - c).pow(static_cast<int>(n) - 1) * (b * px + (n % 2 == 1 ? c : -c) * py);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out *= (x[i] - x[j]) * (y[i] - y[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RationalFunction den = x[i] + y[j];
      if (den.is_zero()) throw Error(ErrorCode::SingularDenominator, "x_i + y_j = 0");
      out /= den;
    }
  }
  return out;
}

bool chu_determinant_check(const std::vector<RationalFunction>& x, const std::vector<RationalFunction>& y,
                           const RationalFunction& b, const RationalFunction& c) {
  if (x.size() != y.size()) throw Error(ErrorCode::SingularDenominator, "x and y must have equal length");
  return chu_determinant(x, y, b, c) == chu_product(x, y, b, c);
}

}  // namespace littlewood
