#include "littlewood/schur.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>

namespace littlewood {

namespace {

struct SchurCache {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, int>, std::unique_ptr<XPoly<Rational>>> entries;
};

SchurCache& cache() {
  static SchurCache c;
  return c;
}

// Every mu with lambda / mu a horizontal strip: lambda_{i+1} <= mu_i <= lambda_i.
void interlacing(const Partition& lambda, std::size_t i, std::vector<int>& mu,
                 std::vector<Partition>& out) {
  if (i == static_cast<std::size_t>(lambda.length())) {
    out.emplace_back(mu);
    return;
  }
  const int hi = lambda.part(static_cast<int>(i) + 1);
  const int lo = lambda.part(static_cast<int>(i) + 2);
  for (int v = hi; v >= lo; --v) {
    mu.push_back(v);
    interlacing(lambda, i + 1, mu, out);
    mu.pop_back();
  }
}

XPoly<Rational> build(const Partition& lambda, int n) {
  XPoly<Rational> out(n);
  if (lambda.length() > n) return out;
  if (lambda.empty()) return XPoly<Rational>::constant(n, 1);
  if (n == 1) {
    Exponent e{};
    e[0] = static_cast<std::int16_t>(lambda.size());
    return XPoly<Rational>::monomial(1, e, 1);
  }
  std::vector<Partition> strips;
  std::vector<int> mu;
  interlacing(lambda, 0, mu, strips);
  for (const Partition& m : strips) {
    if (m.length() > n - 1) continue;
    const auto& smaller = schur(m, n - 1);
    const auto last = static_cast<std::int16_t>(lambda.size() - m.size());
    for (const auto& [e, c] : smaller.terms()) {
      Exponent grown = e;
      grown[n - 1] = last;
      out.add_term(grown, c);
    }
  }
  return out;
}

}  // namespace

const XPoly<Rational>& schur(const Partition& lambda, int n) {
  auto& c = cache();
  const auto key = std::make_pair(lambda, n);
  {
    std::shared_lock lock(c.mutex);
    auto it = c.entries.find(key);
    if (it != c.entries.end()) return *it->second;
  }
  auto built = std::make_unique<XPoly<Rational>>(build(lambda, n));
  std::unique_lock lock(c.mutex);
  auto [it, inserted] = c.entries.try_emplace(key, std::move(built));
  return *it->second;
}

void clear_schur_cache() {
  auto& c = cache();
  std::unique_lock lock(c.mutex);
  c.entries.clear();
}

}  // namespace littlewood
