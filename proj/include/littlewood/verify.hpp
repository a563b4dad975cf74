#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "littlewood/koornwinder.hpp"
#include "littlewood/parallel.hpp"
#include "littlewood/schur.hpp"
#include "littlewood/serialize.hpp"
#include "littlewood/torus.hpp"

namespace littlewood {

enum class IdentityId {
  L1,
  L2,
  COR,
  B1,
  B2,
  CLASSICAL_1,
  CLASSICAL_2,
  CLASSICAL_3,
  KAWANAKA,
  P1_EVAL,
  P2_EVAL,
  VANISHING,
  LEMMA_21,
  LEMMA_22,
  LEMMA_23,
  CONJ_SYM,
  MLIMIT,
  ZNORM,
  GUSTAFSON,
  PROP_COEF,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();

// ---------------------------------------------------------------------------
// The two sides of the Schur-expansion identities.

/// Sum side: coefficient of s_lambda for every admissible lambda with
/// length <= n and |lambda| <= d. B1/B2 use `m` and ignore d (the sums are
/// finite). Coefficients are series at q-order D (exact rationals for COR and
/// the classical identities).
SchurExpansion<QSeries> lhs_sum(IdentityId id, int n, int d, int D, int m = 0);

/// Coefficient of s_lambda in lhs_sum, or nullopt when lambda is not summed over.
std::optional<QSeries> lhs_coefficient(IdentityId id, const Partition& lambda, int D, int m = 0);

/// Product side expanded to total x-degree d and q-order D. Only for the
/// identities with a product side (L1, L2, COR, CLASSICAL_*, KAWANAKA).
XPoly<QSeries> rhs_product(IdentityId id, int n, int d, int D);

/// Empty-2-core partitions summed over by L1/L2 at q = 0 collapse to the
/// even-row (L1) or even-column (L2) indicator. Checks all |lambda| <= max_size;
/// returns the first offending partition, if any.
std::optional<Partition> q_zero_degeneration_failure(IdentityId id, int max_size);

/// The conjugation identity for one lambda and m, as exact rational functions.
bool conjugation_identity_holds(const Partition& lambda, int m);

// ---------------------------------------------------------------------------
// Instances and reports.

struct Budget {
  int max_size = 12;  ///< |lambda| for every sweep; also caps the x-degree
  int n = 4;
  int m = 2;
  int degree = 12;
  int order = 20;
};

struct IdentityInstance {
  IdentityId id = IdentityId::L1;
  int n = 0;
  int m = 0;
  int degree = 0;
  int order = 0;
  int max_size = 0;
  std::optional<Family> family;

  /// "L1 n=2 d=4 D=12" style label; stable, used for ordering and reports.
  std::string label() const;
};

struct Mismatch {
  std::string location;
  std::string expected;
  std::string actual;
};

struct InstanceResult {
  IdentityInstance instance;
  bool passed = false;
  long checks = 0;  ///< coefficients or cases compared
  std::optional<Mismatch> mismatch;
  std::string error;  ///< set when the instance threw
  std::string note;   ///< extra facts, e.g. the first stable m
  double seconds = 0;
};

struct VerificationReport {
  std::vector<InstanceResult> results;

  bool all_passed() const;
  std::size_t group_count() const;
  Json to_json(bool include_timings = false) const;
  std::string to_markdown(bool include_timings = false) const;
};

struct VerifyOptions {
  ExecPolicy policy = ExecPolicy::OpenMP;
  KoornwinderCache* cache = nullptr;
};

/// The default suite for the selected identities under a budget.
std::vector<IdentityInstance> default_instances(const std::vector<IdentityId>& ids, const Budget& budget);

/// Runs one instance; mismatches are recorded in the result, not thrown.
InstanceResult verify_identity(const IdentityInstance& instance, const VerifyOptions& options = {});

/// Runs instances in parallel (per options.policy); results keep input order.
VerificationReport run_verification(const std::vector<IdentityInstance>& instances, const VerifyOptions& options = {});

/// Compares two Schur expansions coefficient by coefficient.
std::optional<Mismatch> compare_expansions(const SchurExpansion<QSeries>& expected,
                                           const SchurExpansion<QSeries>& actual, long* checks = nullptr);

}  // namespace littlewood
