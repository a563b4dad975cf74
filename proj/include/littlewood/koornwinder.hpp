#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "littlewood/parallel.hpp"
#include "littlewood/partition.hpp"
#include "littlewood/schur.hpp"
#include "littlewood/torus.hpp"

namespace littlewood {

/// mu <= lambda in the dominance order extended to partitions of different
/// sizes: mu_1 + ... + mu_i <= lambda_1 + ... + lambda_i for every i.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// m^BC_mu(x_1..x_n): every signed permutation of mu, each exponent vector once.
XPoly<Rational> bc_orbit_sum(const Partition& mu, int n);

/// Every mu != lambda with mu <= lambda and l(mu) <= n, in enumeration order.
std::vector<Partition> dominated_basis(const Partition& lambda, int n);

/// K_lambda = m_lambda + sum_{mu < lambda} c_mu m_mu at q = t, with the c_mu as
/// series truncated at `order`.
struct KoornwinderPoly {
  Partition lambda;
  int n = 0;
  Family family = Family::K_halfquarters;
  int order = 0;
  std::map<Partition, QSeries> coeffs;  ///< includes lambda itself with coefficient 1

  XPoly<QSeries> expand() const;
};

class KoornwinderCache;

/// Gram-Schmidt against the torus inner product: solves
/// <K_lambda, m_nu> = 0 for every nu < lambda. The Gram matrix entries are
/// independent constant terms and are evaluated under `policy`.
KoornwinderPoly koornwinder_poly(const Partition& lambda, int n, Family family, int order,
                                 ExecPolicy policy = ExecPolicy::OpenMP, KoornwinderCache* cache = nullptr);

/// (x_1...x_n)^m K_{(m^n)} in the Schur basis.
SchurExpansion<QSeries> bounded_rhs(int m, int n, Family family, int order,
                                    ExecPolicy policy = ExecPolicy::OpenMP, KoornwinderCache* cache = nullptr);
/// Same polynomial in monomial form.
XPoly<QSeries> bounded_rhs_polynomial(int m, int n, Family family, int order,
                                      ExecPolicy policy = ExecPolicy::OpenMP, KoornwinderCache* cache = nullptr);

/// prod_i (q x_i^2; q^2)/(x_i^2; q^2) prod_{i<j} 1/(1 - x_i x_j) for K_halfquarters,
/// prod_i (q^2 x_i^2; q^2)/(q x_i^2; q^2) prod_{i<j} 1/(1 - x_i x_j) for K_1m1qmq.
XPoly<QSeries> limit_product(int n, Family family, int degree, int order);

struct Stabilization {
  int first_stable_m = -1;       ///< smallest m from which the truncation no longer changes
  int max_m = 0;                 ///< last m computed
  XPoly<QSeries> series;         ///< stabilized truncation
  bool matches_product = false;  ///< equals limit_product at the same truncation
};

/// Computes bounded_rhs truncated at x-degree d and q-order D, walking down
/// from m = max_m until the value changes. Throws NoStabilization if the
/// values at max_m - 1 and max_m differ.
Stabilization limit_stabilization(int n, Family family, int degree, int order, int max_m,
                                  ExecPolicy policy = ExecPolicy::OpenMP, KoornwinderCache* cache = nullptr);

/// Versioned JSON store of computed Koornwinder polynomials, one file per
/// directory. Lookups and inserts are thread-safe.
class KoornwinderCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kFileName = "koornwinder_cache.json";

  /// Loads `dir`/koornwinder_cache.json when present; a file with another
  /// version is ignored.
  explicit KoornwinderCache(std::filesystem::path dir);

  std::optional<KoornwinderPoly> find(const Partition& lambda, int n, Family family, int order) const;
  void store(const KoornwinderPoly& k);
  /// Writes the file if anything was stored since loading.
  void save() const;
  std::size_t size() const;
  const std::filesystem::path& file() const { return file_; }

 private:
  using Key = std::tuple<Partition, int, Family, int>;
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::map<Key, KoornwinderPoly> entries_;
  bool dirty_ = false;
};

/// Cache directory: LITTLEWOOD_CACHE_DIR if set, otherwise `fallback`.
std::filesystem::path resolve_cache_dir(const std::filesystem::path& fallback);

}  // namespace littlewood
