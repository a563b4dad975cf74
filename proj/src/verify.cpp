#include "littlewood/verify.hpp"

#include <array>
#include <chrono>
#include <set>
#include <sstream>

#include "littlewood/pfaffian.hpp"

namespace littlewood {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 20> kNames{{
    {IdentityId::L1, "L1"},
    {IdentityId::L2, "L2"},
    {IdentityId::COR, "COR"},
    {IdentityId::B1, "B1"},
    {IdentityId::B2, "B2"},
    {IdentityId::CLASSICAL_1, "CLASSICAL_1"},
    {IdentityId::CLASSICAL_2, "CLASSICAL_2"},
    {IdentityId::CLASSICAL_3, "CLASSICAL_3"},
    {IdentityId::KAWANAKA, "KAWANAKA"},
    {IdentityId::P1_EVAL, "P1_EVAL"},
    {IdentityId::P2_EVAL, "P2_EVAL"},
    {IdentityId::VANISHING, "VANISHING"},
    {IdentityId::LEMMA_21, "LEMMA_21"},
    {IdentityId::LEMMA_22, "LEMMA_22"},
    {IdentityId::LEMMA_23, "LEMMA_23"},
    {IdentityId::CONJ_SYM, "CONJ_SYM"},
    {IdentityId::MLIMIT, "MLIMIT"},
    {IdentityId::ZNORM, "ZNORM"},
    {IdentityId::GUSTAFSON, "GUSTAFSON"},
    {IdentityId::PROP_COEF, "PROP_COEF"},
}};

std::string lambda_text(const Partition& p) { return "(" + p.to_string() + ")"; }

Mismatch series_mismatch(std::string location, const QSeries& expected, const QSeries& actual) {
  return {std::move(location), expected.to_string(), actual.to_string()};
}

std::vector<Partition> partitions_up_to(int max_size, std::optional<int> max_length = std::nullopt,
                                        std::optional<int> max_part = std::nullopt) {
  EnumerationBounds b;
  b.max_size = max_size;
  b.max_length = max_length;
  b.max_part = max_part;
  return enumerate_partitions(b);
}

void check_product_identity(const IdentityInstance& in, InstanceResult& r) {
  const auto expected = lhs_sum(in.id, in.n, in.degree, in.order);
  const auto actual = schur_expand(rhs_product(in.id, in.n, in.degree, in.order));
  r.mismatch = compare_expansions(expected, actual, &r.checks);
  if (!r.mismatch && (in.id == IdentityId::L1 || in.id == IdentityId::L2)) {
    if (auto bad = q_zero_degeneration_failure(in.id, in.degree)) {
      r.mismatch = Mismatch{"q=0 at " + lambda_text(*bad), "even-row/column indicator", "different"};
    }
    r.note = "q=0 degeneration checked to size " + std::to_string(in.degree);
  }
}

Family bounded_family(IdentityId id) { return id == IdentityId::B1 ? Family::K_halfquarters : Family::K_1m1qmq; }

void check_bounded_identity(const IdentityInstance& in, const VerifyOptions& o, InstanceResult& r) {
  const auto expected = lhs_sum(in.id, in.n, 0, in.order, in.m);
  const auto actual = bounded_rhs(in.m, in.n, bounded_family(in.id), in.order, o.policy, o.cache);
  r.mismatch = compare_expansions(expected, actual, &r.checks);
}

void check_evaluation(const IdentityInstance& in, InstanceResult& r) {
  const bool first = in.id == IdentityId::P1_EVAL;
  for (const auto& lambda : partitions_up_to(in.max_size, 2 * in.n)) {
    if (!has_empty_two_core(lambda)) continue;
    const auto pf = first ? pf_formula_p1(lambda, in.n) : pf_formula_p2(lambda, in.n);
    const auto closed = first ? closed_form_int1(lambda, in.n) : closed_form_int2(lambda, in.n);
    ++r.checks;
    if (!(pf == closed)) {
      r.mismatch = Mismatch{lambda_text(lambda), closed.to_string(), pf.to_string()};
      return;
    }
  }
}

void check_vanishing(const IdentityInstance& in, InstanceResult& r) {
  const DensitySpec spec{in.n, *in.family, in.order};
  const bool first = *in.family == Family::I_qq;
  for (const auto& lambda : partitions_up_to(in.max_size, 2 * in.n)) {
    const QSeries value = integral_I(lambda, spec).value;
    const QSeries expected = has_empty_two_core(lambda)
                                 ? (first ? closed_form_int1(lambda, in.n) : closed_form_int2(lambda, in.n)).to_qseries(in.order)
                                 : QSeries::zero(in.order);
    ++r.checks;
    if (!(value == expected)) {
      r.mismatch = series_mismatch(lambda_text(lambda), expected, value);
      return;
    }
  }
}

void check_lemma_21(const IdentityInstance& in, InstanceResult& r) {
  for (const auto& lambda : partitions_up_to(in.max_size)) {
    const bool abacus = has_empty_two_core(lambda, TwoCoreMethod::Abacus);
    const bool hooks = has_empty_two_core(lambda, TwoCoreMethod::HookCount);
    ++r.checks;
    if (abacus != hooks) {
      r.mismatch = Mismatch{lambda_text(lambda), "abacus " + std::to_string(abacus), "hook count " + std::to_string(hooks)};
      return;
    }
    for (int pad = (lambda.length() + 1) / 2 * 2; pad <= lambda.length() + 4; pad += 2) {
      const bool parity = has_empty_two_core(lambda, TwoCoreMethod::BetaParity, pad);
      ++r.checks;
      if (abacus != parity) {
        r.mismatch = Mismatch{lambda_text(lambda) + " padded to " + std::to_string(pad),
                              "abacus " + std::to_string(abacus), "beta parity " + std::to_string(parity)};
        return;
      }
    }
  }
}

void check_lemma_22(const IdentityInstance& in, InstanceResult& r) {
  for (const auto& lambda : partitions_up_to(in.max_size)) {
    if (!has_empty_two_core(lambda)) continue;
    const long b = b_statistic(lambda);
    ++r.checks;
    if (b < 0 || (b == 0) != lambda.is_even()) {
      r.mismatch = Mismatch{lambda_text(lambda), lambda.is_even() ? "b = 0" : "b > 0", "b = " + std::to_string(b)};
      return;
    }
  }
}

void check_lemma_23(const IdentityInstance& in, InstanceResult& r) {
  for (const auto& lambda : partitions_up_to(in.max_size)) {
    if (!has_empty_two_core(lambda)) continue;
    const long b = b_statistic(lambda);
    const long bc = b_statistic(conjugate(lambda));
    for (int n = std::max(1, (lambda.length() + 1) / 2); n <= in.n; ++n) {
      const long viad = b_via_delta(lambda, n);
      const long viac = b_conj_via_delta(lambda, n);
      r.checks += 2;
      if (viad != b || viac != bc) {
        r.mismatch = Mismatch{lambda_text(lambda) + " n=" + std::to_string(n),
                              std::to_string(b) + ", " + std::to_string(bc),
                              std::to_string(viad) + ", " + std::to_string(viac)};
        return;
      }
    }
  }
}

void check_conjugation(const IdentityInstance& in, InstanceResult& r) {
  for (const auto& lambda : partitions_up_to(in.max_size)) {
    if (!has_empty_two_core(lambda)) continue;
    for (int m = 0; m <= in.m; ++m) {
      ++r.checks;
      if (!conjugation_identity_holds(lambda, m)) {
        r.mismatch = Mismatch{lambda_text(lambda) + " m=" + std::to_string(m), "equal", "different"};
        return;
      }
    }
  }
}

void check_limit(const IdentityInstance& in, const VerifyOptions& o, InstanceResult& r) {
  const Family family = *in.family;
  const auto st = limit_stabilization(in.n, family, in.degree, in.order, in.m, o.policy, o.cache);
  r.note = "stable from m=" + std::to_string(st.first_stable_m);
  ++r.checks;
  if (!st.matches_product) {
    r.mismatch = Mismatch{"limit product", "product side", "stabilized bounded side differs"};
    return;
  }
  // The stabilized bounded side against the unbounded sum side.
  const IdentityId unbounded = family == Family::K_halfquarters ? IdentityId::L1 : IdentityId::L2;
  r.mismatch = compare_expansions(lhs_sum(unbounded, in.n, in.degree, in.order), schur_expand(st.series), &r.checks);
}

void check_znorm(const IdentityInstance& in, InstanceResult& r) {
  const DensitySpec spec{in.n, *in.family, in.order};
  const QSeries integral = z_n_integral(spec);
  const QSeries closed = z_n_closed(spec);
  ++r.checks;
  if (!(integral == closed)) r.mismatch = series_mismatch("Z_" + std::to_string(in.n), closed, integral);
}

void check_gustafson(const IdentityInstance& in, InstanceResult& r) {
  const DensitySpec spec{in.n, *in.family, in.order};
  const QSeries integral = torus_integral(XPoly<Rational>::constant(in.n, 1), spec);
  const QSeries closed = gustafson_norm(in.n, tspec_of(*in.family), in.order);
  ++r.checks;
  if (!(integral == closed)) r.mismatch = series_mismatch("<1,1>", closed, integral);
}

void check_prop_coef(const IdentityInstance& in, const VerifyOptions& o, InstanceResult& r) {
  const Family family = *in.family;
  const auto bounded = bounded_rhs(in.m, in.n, family, in.order, o.policy, o.cache);
  const DensitySpec spec{in.m, integral_family_of(family), in.order};
  for (const auto& lambda : partitions_up_to(2 * in.m * in.n, in.n, 2 * in.m)) {
    QSeries expected = integral_I(conjugate(lambda), spec).value;
    if (lambda.size() % 2) expected = -expected;
    const QSeries actual = bounded.coeff(lambda);
    ++r.checks;
    if (!(expected == actual)) {
      r.mismatch = series_mismatch("s" + lambda_text(lambda), expected, actual);
      return;
    }
  }
}

// Measured: truncations of x-degree <= d, q-order <= D settle from
// m = (d + D)/2 for the first family and m = D + d/2 + 1 for the second; the
// budget leaves one step of margin.
int limit_m_budget(Family f, int d, int D) {
  return f == Family::K_halfquarters ? (d + D + 1) / 2 + 1 : D + (d + 1) / 2 + 2;
}

std::string family_suffix(const IdentityInstance& in) {
  return in.family ? " " + std::string(to_string(*in.family)) : "";
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& [k, text] : kNames) {
    if (text == name) return k;
  }
  return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

std::string IdentityInstance::label() const {
  std::ostringstream s;
  s << to_string(id);
  switch (id) {
    case IdentityId::L1:
    case IdentityId::L2:
    case IdentityId::COR:
    case IdentityId::CLASSICAL_1:
    case IdentityId::CLASSICAL_2:
    case IdentityId::CLASSICAL_3:
    case IdentityId::KAWANAKA:
      s << " n=" << n << " d=" << degree << " D=" << order;
      break;
    case IdentityId::B1:
    case IdentityId::B2:
      s << " m=" << m << " n=" << n << " D=" << order;
      break;
    case IdentityId::P1_EVAL:
    case IdentityId::P2_EVAL:
      s << " n=" << n << " |lambda|<=" << max_size;
      break;
    case IdentityId::VANISHING:
      s << family_suffix(*this) << " n=" << n << " |lambda|<=" << max_size << " D=" << order;
      break;
    case IdentityId::LEMMA_21:
    case IdentityId::LEMMA_22:
      s << " |lambda|<=" << max_size;
      break;
    case IdentityId::LEMMA_23:
      s << " |lambda|<=" << max_size << " n<=" << n;
      break;
    case IdentityId::CONJ_SYM:
      s << " |lambda|<=" << max_size << " m<=" << m;
      break;
    case IdentityId::MLIMIT:
      s << family_suffix(*this) << " n=" << n << " d=" << degree << " D=" << order << " m<=" << m;
      break;
    case IdentityId::ZNORM:
    case IdentityId::GUSTAFSON:
      s << family_suffix(*this) << " n=" << n << " D=" << order;
      break;
    case IdentityId::PROP_COEF:
      s << family_suffix(*this) << " m=" << m << " n=" << n << " D=" << order;
      break;
  }
  return s.str();
}

std::optional<Mismatch> compare_expansions(const SchurExpansion<QSeries>& expected,
                                           const SchurExpansion<QSeries>& actual, long* checks) {
  std::set<Partition> keys;
  for (const auto& [lambda, c] : expected.coeffs) keys.insert(lambda);
  for (const auto& [lambda, c] : actual.coeffs) keys.insert(lambda);
  // Graded order so the reported mismatch is the smallest one.
  std::vector<Partition> ordered(keys.begin(), keys.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : b < a;
  });
  for (const auto& lambda : ordered) {
    const QSeries e = expected.coeff(lambda);
    const QSeries a = actual.coeff(lambda);
    if (checks) ++*checks;
    if (!(e == a)) return series_mismatch("s" + lambda_text(lambda), e, a);
  }
  return std::nullopt;
}

std::vector<IdentityInstance> default_instances(const std::vector<IdentityId>& ids, const Budget& budget) {
  const int d = std::min(budget.degree, budget.max_size);
  const int D = budget.order;
  const int small_n = std::min(budget.n, 2);
  std::vector<IdentityInstance> out;
  auto add = [&](IdentityInstance in) { out.push_back(std::move(in)); };
  for (IdentityId id : ids) {
    switch (id) {
      case IdentityId::L1:
      case IdentityId::L2:
      case IdentityId::COR:
      case IdentityId::CLASSICAL_1:
      case IdentityId::CLASSICAL_2:
      case IdentityId::CLASSICAL_3:
      case IdentityId::KAWANAKA:
        for (int n = 1; n <= budget.n; ++n) add({id, n, 0, d, D, d, {}});
        break;
      case IdentityId::B1:
      case IdentityId::B2:
        for (int m = 1; m <= budget.m; ++m) {
          for (int n = 1; n <= small_n; ++n) add({id, n, m, 0, D, 0, {}});
        }
        break;
      case IdentityId::P1_EVAL:
      case IdentityId::P2_EVAL:
        for (int n = 1; n <= std::min(budget.n, 3); ++n) add({id, n, 0, 0, 0, budget.max_size, {}});
        break;
      case IdentityId::VANISHING:
        for (Family f : {Family::I_qq, Family::I_1q2}) {
          for (int n = 1; n <= small_n; ++n) add({id, n, 0, 0, D, std::min(budget.max_size, 8), f});
        }
        break;
      case IdentityId::LEMMA_21:
      case IdentityId::LEMMA_22:
        add({id, 0, 0, 0, 0, budget.max_size, {}});
        break;
      case IdentityId::LEMMA_23:
        add({id, 6, 0, 0, 0, budget.max_size, {}});
        break;
      case IdentityId::CONJ_SYM:
        add({id, 0, 5, 0, 0, budget.max_size, {}});
        break;
      case IdentityId::MLIMIT: {
        const int ld = std::min(d, 6);
        const int lD = std::min(D, 10);
        for (Family f : {Family::K_halfquarters, Family::K_1m1qmq}) {
          for (int n = 1; n <= small_n; ++n) add({id, n, limit_m_budget(f, ld, lD), ld, lD, 0, f});
        }
        break;
      }
      case IdentityId::ZNORM:
        for (Family f : {Family::I_qq, Family::I_1q2}) {
          for (int n = 1; n <= small_n; ++n) add({id, n, 0, 0, D, 0, f});
        }
        break;
      case IdentityId::GUSTAFSON:
        for (Family f : {Family::K_halfquarters, Family::K_1m1qmq}) {
          for (int n = 1; n <= small_n; ++n) add({id, n, 0, 0, D, 0, f});
        }
        break;
      case IdentityId::PROP_COEF:
        for (Family f : {Family::K_halfquarters, Family::K_1m1qmq}) {
          for (int m = 1; m <= std::min(budget.m, 2); ++m) {
            for (int n = 1; n <= small_n; ++n) add({id, n, m, 0, D, 0, f});
          }
        }
        break;
    }
  }
  return out;
}

InstanceResult verify_identity(const IdentityInstance& in, const VerifyOptions& options) {
  InstanceResult r;
  r.instance = in;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (in.id) {
      case IdentityId::L1:
      case IdentityId::L2:
      case IdentityId::COR:
      case IdentityId::CLASSICAL_1:
      case IdentityId::CLASSICAL_2:
      case IdentityId::CLASSICAL_3:
      case IdentityId::KAWANAKA:
        check_product_identity(in, r);
        break;
      case IdentityId::B1:
      case IdentityId::B2:
        check_bounded_identity(in, options, r);
        break;
      case IdentityId::P1_EVAL:
      case IdentityId::P2_EVAL:
        check_evaluation(in, r);
        break;
      case IdentityId::VANISHING:
        check_vanishing(in, r);
        break;
      case IdentityId::LEMMA_21:
        check_lemma_21(in, r);
        break;
      case IdentityId::LEMMA_22:
        check_lemma_22(in, r);
        break;
      case IdentityId::LEMMA_23:
        check_lemma_23(in, r);
        break;
      case IdentityId::CONJ_SYM:
        check_conjugation(in, r);
        break;
      case IdentityId::MLIMIT:
        check_limit(in, options, r);
        break;
      case IdentityId::ZNORM:
        check_znorm(in, r);
        break;
      case IdentityId::GUSTAFSON:
        check_gustafson(in, r);
        break;
      case IdentityId::PROP_COEF:
        check_prop_coef(in, options, r);
        break;
    }
    r.passed = !r.mismatch;
  } catch (const std::exception& e) {
    r.passed = false;
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport run_verification(const std::vector<IdentityInstance>& instances, const VerifyOptions& options) {
  // Instances run concurrently; the work inside each one stays serial.
  VerifyOptions inner = options;
  if (options.policy == ExecPolicy::OpenMP) inner.policy = ExecPolicy::Serial;
  VerificationReport report;
  report.results = parallel_map(
      instances.size(), [&](std::size_t i) { return verify_identity(instances[i], inner); }, options.policy);
  return report;
}

bool VerificationReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const InstanceResult& r) { return r.passed; });
}

std::size_t VerificationReport::group_count() const {
  std::set<IdentityId> ids;
  for (const auto& r : results) ids.insert(r.instance.id);
  return ids.size();
}

Json VerificationReport::to_json(bool include_timings) const {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    const auto& in = r.instance;
    Json params = {{"n", in.n}, {"m", in.m}, {"x_degree", in.degree}, {"q_order", in.order}, {"max_size", in.max_size}};
    params["family"] = in.family ? Json(std::string(littlewood::to_string(*in.family))) : Json(nullptr);
    Json entry = {{"identity", std::string(littlewood::to_string(in.id))},
                  {"label", in.label()},
                  {"parameters", params},
                  {"status", r.passed ? "pass" : (r.error.empty() ? "fail" : "error")},
                  {"checks", r.checks}};
    entry["mismatch"] = r.mismatch ? Json{{"location", r.mismatch->location},
                                          {"expected", r.mismatch->expected},
                                          {"actual", r.mismatch->actual}}
                                   : Json(nullptr);
    if (!r.error.empty()) entry["error"] = r.error;
    if (!r.note.empty()) entry["note"] = r.note;
    if (include_timings) entry["seconds"] = r.seconds;
    list.push_back(std::move(entry));
  }
  return {{"summary",
           {{"instances", results.size()},
            {"groups", group_count()},
            {"passed", passed},
            {"failed", results.size() - passed},
            {"all_passed", all_passed()}}},
          {"results", list}};
}

std::string VerificationReport::to_markdown(bool include_timings) const {
  std::ostringstream s;
  s << "| Instance | Status | Checks | Details |";
  if (include_timings) s << " Seconds |";
  s << "\n|---|---|---|---|";
  if (include_timings) s << "---|";
  s << "\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    std::string details = r.note;
    if (r.mismatch) {
      details = r.mismatch->location + ": expected `" + r.mismatch->expected + "`, got `" + r.mismatch->actual + "`";
    } else if (!r.error.empty()) {
      details = r.error;
    }
    s << "| " << r.instance.label() << " | " << (r.passed ? "pass" : (r.error.empty() ? "FAIL" : "ERROR")) << " | "
      << r.checks << " | " << details << " |";
    if (include_timings) s << " " << r.seconds << " |";
    s << "\n";
  }
  s << "\n" << passed << " of " << results.size() << " instances passed across " << group_count()
    << " identity groups.\n";
  return s.str();
}

}  // namespace littlewood
