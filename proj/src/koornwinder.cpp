#include "littlewood/koornwinder.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#include "littlewood/qproducts.hpp"
#include "littlewood/serialize.hpp"

namespace littlewood {

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  long sm = 0, sl = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) return false;
  }
  return true;
}

XPoly<Rational> bc_orbit_sum(const Partition& mu, int n) {
  if (mu.length() > n) {
    throw Error(ErrorCode::LengthExceedsBound, "length of " + mu.to_string() + " exceeds n = " + std::to_string(n));
  }
  std::vector<int> base(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) base[static_cast<std::size_t>(i - 1)] = mu.part(i);
  std::sort(base.begin(), base.end());
  std::set<Exponent> orbit;
  do {
    int nonzero = 0;
    for (int v : base) nonzero += v != 0;
    for (unsigned signs = 0; signs < (1u << nonzero); ++signs) {
      Exponent e{};
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        const int v = base[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        e[i] = static_cast<std::int16_t>((signs >> bit) & 1u ? -v : v);
        ++bit;
      }
      orbit.insert(e);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  XPoly<Rational> out(n);
  for (const auto& e : orbit) out.add_term(e, 1);
  return out;
}

std::vector<Partition> dominated_basis(const Partition& lambda, int n) {
  EnumerationBounds bounds;
  bounds.max_size = lambda.size();
  bounds.max_part = lambda.largest();
  bounds.max_length = n;
  return enumerate_partitions(bounds, [&](const Partition& mu) { return mu != lambda && dominance_leq(mu, lambda); });
}

XPoly<QSeries> KoornwinderPoly::expand() const {
  XPoly<QSeries> out(n);
  for (const auto& [mu, c] : coeffs) {
    const auto orbit = bc_orbit_sum(mu, n);
    for (const auto& [e, k] : orbit.terms()) out.add_term(e, c * k);
  }
  return out;
}

namespace {

Family check_family(Family family) {
  return koornwinder_family_of(family);
}

// Solves G c = r over the local ring of truncated series. Pivots must be units;
// the Gram matrix at q = 0 is invertible, so a unit pivot always exists.
std::vector<QSeries> solve_series_system(std::vector<std::vector<QSeries>> g, std::vector<QSeries> r) {
  const std::size_t size = r.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = size;
    for (std::size_t row = col; row < size; ++row) {
      if (g[row][col].is_unit()) {
        pivot = row;
        break;
      }
    }
    if (pivot == size) throw Error(ErrorCode::GramSingularAtQ0, "no unit pivot in column " + std::to_string(col));
    std::swap(g[pivot], g[col]);
    std::swap(r[pivot], r[col]);
    const QSeries inv = g[col][col].inverse();
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || g[row][col].is_zero()) continue;
      const QSeries factor = g[row][col] * inv;
      for (std::size_t c = col; c < size; ++c) {
        if (!g[col][c].is_zero()) g[row][c] -= factor * g[col][c];
      }
      r[row] -= factor * r[col];
    }
  }
  std::vector<QSeries> out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = r[i] * g[i][i].inverse();
  return out;
}

}  // namespace

KoornwinderPoly koornwinder_poly(const Partition& lambda, int n, Family family, int order, ExecPolicy policy,
                                 KoornwinderCache* cache) {
  family = check_family(family);
  if (lambda.length() > n) {
    throw Error(ErrorCode::LengthExceedsBound, "length of " + lambda.to_string() + " exceeds n = " + std::to_string(n));
  }
  if (cache) {
    if (auto hit = cache->find(lambda, n, family, order)) return *hit;
  }
  KoornwinderPoly k{lambda, n, family, order, {}};
  k.coeffs.emplace(lambda, QSeries::one(order));
  const auto basis = dominated_basis(lambda, n);
  if (!basis.empty()) {
    const DensitySpec spec{n, family, order};
    density(spec);  // build once before fanning out
    std::vector<XPoly<Rational>> orbit;
    orbit.reserve(basis.size() + 1);
    for (const auto& mu : basis) orbit.push_back(bc_orbit_sum(mu, n));
    const auto top = bc_orbit_sum(lambda, n);

    // Upper triangle of the Gram matrix plus the right-hand side <m_lambda, m_nu>.
    const std::size_t b = basis.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = i; j <= b; ++j) pairs.emplace_back(i, j);
    }
    const auto values = parallel_map(
        pairs.size(),
        [&](std::size_t p) {
          const auto [i, j] = pairs[p];
          return inner_product(j == b ? top : orbit[j], orbit[i], spec);
        },
        policy);
    std::vector<std::vector<QSeries>> gram(b, std::vector<QSeries>(b));
    std::vector<QSeries> rhs(b);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [i, j] = pairs[p];
      if (j == b) {
        rhs[i] = -values[p];
      } else {
        gram[i][j] = values[p];
        gram[j][i] = values[p];
      }
    }
    const auto solution = solve_series_system(std::move(gram), std::move(rhs));
    for (std::size_t i = 0; i < b; ++i) {
      if (!solution[i].is_zero()) k.coeffs.emplace(basis[i], solution[i].with_order(order));
    }
  }
  if (cache) cache->store(k);
  return k;
}

XPoly<QSeries> bounded_rhs_polynomial(int m, int n, Family family, int order, ExecPolicy policy,
                                      KoornwinderCache* cache) {
  const auto k = koornwinder_poly(rectangle(m, n), n, family, order, policy, cache);
  Exponent shift{};
  for (int i = 0; i < n; ++i) shift[i] = static_cast<std::int16_t>(m);
  auto poly = k.expand().shifted(shift);
  if (poly.has_negative_exponent()) {
    throw Error(ErrorCode::NegativeExponentRemains, "(x_1...x_n)^m K_(m^n) is not a polynomial");
  }
  return poly;
}

SchurExpansion<QSeries> bounded_rhs(int m, int n, Family family, int order, ExecPolicy policy,
                                    KoornwinderCache* cache) {
  return schur_expand(bounded_rhs_polynomial(m, n, family, order, policy, cache));
}

XPoly<QSeries> limit_product(int n, Family family, int degree, int order) {
  family = check_family(family);
  std::vector<PochhammerFactor> num, den;
  if (family == Family::K_halfquarters) {
    num = {{1, 1, 2}};
    den = {{1, 0, 2}};
  } else {
    num = {{1, 2, 2}};
    den = {{1, 1, 2}};
  }
  XPoly<QSeries> out = XPoly<QSeries>::constant(n, QSeries::one(order), degree);
  for (int i = 0; i < n; ++i) {
    Exponent sq{};
    sq[i] = 2;
    out *= pochhammer_ratio_in(num, den, sq, n, order, degree);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Exponent e{};
      e[i] = 1;
      e[j] = 1;
      out *= geometric_series_in(e, n, order, degree);
    }
  }
  return out;
}

Stabilization limit_stabilization(int n, Family family, int degree, int order, int max_m, ExecPolicy policy,
                                  KoornwinderCache* cache) {
  auto value_at = [&](int m) { return bounded_rhs_polynomial(m, n, family, order, policy, cache).truncated(degree); };
  // Walk down from max_m; everything above the first change is the stable tail.
  const auto top = value_at(max_m);
  int first = max_m;
  while (first > 0 && value_at(first - 1) == top) --first;
  if (first == max_m) {
    throw Error(ErrorCode::NoStabilization, "bounded side still changes at m = " + std::to_string(max_m));
  }
  Stabilization out;
  out.max_m = max_m;
  out.first_stable_m = first;
  out.series = top;
  out.matches_product = out.series == limit_product(n, family, degree, order);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Json record_to_json(const KoornwinderPoly& k) {
  Json coeffs = Json::array();
  for (const auto& [mu, c] : k.coeffs) coeffs.push_back({{"mu", to_json(mu)}, {"series", to_json(c)}});
  return {{"lambda", to_json(k.lambda)},
          {"n", k.n},
          {"family", std::string(to_string(k.family))},
          {"order", k.order},
          {"coefficients", coeffs}};
}

KoornwinderPoly record_from_json(const Json& j) {
  KoornwinderPoly k;
  k.lambda = partition_from_json(j.at("lambda"));
  k.n = j.at("n").get<int>();
  k.family = parse_family(j.at("family").get<std::string>());
  k.order = j.at("order").get<int>();
  for (const auto& c : j.at("coefficients")) k.coeffs.emplace(partition_from_json(c.at("mu")), qseries_from_json(c.at("series")));
  return k;
}

}  // namespace

KoornwinderCache::KoornwinderCache(std::filesystem::path dir) : file_(std::move(dir) / kFileName) {
  std::ifstream in(file_);
  if (!in) return;
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception&) {
    return;
  }
  if (!doc.is_object() || doc.value("version", -1) != kVersion) return;
  for (const auto& r : doc.at("records")) {
    auto k = record_from_json(r);
    entries_.emplace(Key{k.lambda, k.n, k.family, k.order}, std::move(k));
  }
}

std::optional<KoornwinderPoly> KoornwinderCache::find(const Partition& lambda, int n, Family family, int order) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(Key{lambda, n, family, order});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void KoornwinderCache::store(const KoornwinderPoly& k) {
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(Key{k.lambda, k.n, k.family, k.order}, k);
  dirty_ = dirty_ || inserted;
}

void KoornwinderCache::save() const {
  std::lock_guard lock(mutex_);
  if (!dirty_) return;
  Json records = Json::array();
  for (const auto& [key, k] : entries_) records.push_back(record_to_json(k));
  std::filesystem::create_directories(file_.parent_path());
  const auto tmp = file_.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << Json{{"version", kVersion}, {"records", records}}.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, file_);
}

std::size_t KoornwinderCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::filesystem::path resolve_cache_dir(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("LITTLEWOOD_CACHE_DIR"); env && *env) return env;
  return fallback;
}

}  // namespace littlewood
