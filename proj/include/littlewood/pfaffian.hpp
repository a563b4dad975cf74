#pragma once

#include <vector>

#include "littlewood/partition.hpp"
#include "littlewood/rational_function.hpp"

namespace littlewood {

using RfMatrix = std::vector<std::vector<RationalFunction>>;

/// Antisymmetric matrix over Q(q). Only the strict upper triangle is stored
/// by the setter; the lower triangle is its negative by construction.
class SkewMatrix {
 public:
  explicit SkewMatrix(int dim);

  int dim() const { return dim_; }
  /// 0-based access.
  const RationalFunction& operator()(int i, int j) const { return entries_[index(i, j)]; }
  /// Sets entry (i, j) and entry (j, i) to its negative; i != j.
  void set(int i, int j, const RationalFunction& value);
  RfMatrix dense() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * dim_ + j); }

  int dim_;
  std::vector<RationalFunction> entries_;
};

/// Pfaffian by skew Gaussian elimination; the pivot in the first row is the
/// nonzero entry whose denominator has the smallest degree.
RationalFunction pfaffian(const SkewMatrix& a);
/// Expansion along the first row; exponential, kept for small matrices.
RationalFunction pfaffian_expansion(const SkewMatrix& a);
/// Determinant by Gaussian elimination over Q(q).
RationalFunction determinant(RfMatrix m);

/// The 2n x 2n matrices of the two Pfaffian formulas. Entry (i, j) vanishes
/// unless d = lambda_i - lambda_j + j - i is odd, in which case it is
///   P1: q^{(d-1)/2} / (1 - q^d)       P2: (1 + q^d) / (1 - q^d).
SkewMatrix pf_matrix_p1(const Partition& lambda, int n);
SkewMatrix pf_matrix_p2(const Partition& lambda, int n);

/// prod_{i=1}^n (1 - q^{2i-1})^{2n-2i+1} / (1 - q^{2i})^{2n-2i}
RationalFunction pf_prefactor(int n);

/// I_lambda^{(n)}(q,q;q) as prefactor times Pfaffian.
RationalFunction pf_formula_p1(const Partition& lambda, int n);
/// I_lambda^{(n)}(1,q^2;q) as prefactor / (2^{n-1}(1 + q^n)) times Pfaffian.
RationalFunction pf_formula_p2(const Partition& lambda, int n);

/// q^{b(lambda')} C^e(q^{2n}) H^o / (C^o(q^{2n}) H^e).
RationalFunction closed_form_int1(const Partition& lambda, int n);
/// q^{b(lambda)} (1 + q^{n + 2(b(lambda') - b(lambda))}) / (1 + q^n) times the same ratio.
RationalFunction closed_form_int2(const Partition& lambda, int n);

/// C^e_lambda(q^z) H^o_lambda / (C^o_lambda(q^z) H^e_lambda).
RationalFunction hook_content_ratio(const Partition& lambda, int z_exponent);

/// Splitting of a parity-supported 2n x 2n matrix into its n x n block.
/// J holds the (1-based) columns whose first-row entry is nonzero, I the rest;
/// M(k, l) = A(i_k, j_l). `sign` is chosen so that pf(A) = sign * det(M).
struct BlockReduction {
  std::vector<int> rows;     ///< I
  std::vector<int> columns;  ///< J
  RfMatrix block;            ///< M
  int sign = 1;
};
BlockReduction block_reduction(const SkewMatrix& a);

/// det[(b x_i + c y_j)/(x_i + y_j)] computed directly.
RationalFunction chu_determinant(const std::vector<RationalFunction>& x, const std::vector<RationalFunction>& y,
                                 const RationalFunction& b, const RationalFunction& c);
/// (b-c)^{n-1} (b prod x + (-1)^{n-1} c prod y) prod_{i<j}(x_i-x_j)(y_i-y_j) / prod_{i,j}(x_i+y_j).
RationalFunction chu_product(const std::vector<RationalFunction>& x, const std::vector<RationalFunction>& y,
                             const RationalFunction& b, const RationalFunction& c);
/// True iff the two sides agree. Throws SingularDenominator if some x_i + y_j = 0.
bool chu_determinant_check(const std::vector<RationalFunction>& x, const std::vector<RationalFunction>& y,
                           const RationalFunction& b, const RationalFunction& c);

}  // namespace littlewood
