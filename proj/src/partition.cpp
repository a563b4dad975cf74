#include "littlewood/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "littlewood/error.hpp"

namespace littlewood {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::ParseError, "not a partition: parts must be weakly decreasing and nonnegative");
    }
    size_ += parts_[i];
  }
}

bool Partition::is_even() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw Error(ErrorCode::ParseError, "empty part in '" + text + "'");
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad part '" + token + "'");
    }
    if (used != token.size() || value < 0) throw Error(ErrorCode::ParseError, "bad part '" + token + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

namespace {

HookData hook_at(const Partition& lambda, const Partition& conj, int i, int j) {
  const int arm = lambda.part(i) - j;
  const int leg = conj.part(j) - i;
  return {arm, leg, arm + leg + 1, j - i, (i + j) % 2 == 0};
}

// Partition whose beta set (for N = beta.size() beads) is `beta`.
Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int n = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(beta[static_cast<std::size_t>(i - 1)] - (n - i));
  return Partition(std::move(parts));
}

std::vector<int> beta_set(const Partition& lambda, int beads) {
  std::vector<int> beta;
  for (int i = 1; i <= beads; ++i) beta.push_back(lambda.part(i) + beads - i);
  return beta;
}

}  // namespace

HookData hook_data(const Partition& lambda, Cell s) {
  if (!lambda.contains(s.row, s.col)) {
    throw Error(ErrorCode::CellOutsideDiagram,
                "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ") not in " + lambda.to_string());
  }
  return hook_at(lambda, conjugate(lambda), s.row, s.col);
}

HookMultisets hook_multisets(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  HookMultisets h;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const int hook = hook_at(lambda, conj, i, j).hook;
      h.all.push_back(hook);
      (hook % 2 == 0 ? h.even : h.odd).push_back(hook);
    }
  }
  std::sort(h.all.begin(), h.all.end());
  std::sort(h.even.begin(), h.even.end());
  std::sort(h.odd.begin(), h.odd.end());
  return h;
}

Partition two_core(const Partition& lambda) {
  const int beads = lambda.length() + lambda.length() % 2;
  int count[2] = {0, 0};
  for (int b : beta_set(lambda, beads)) ++count[b % 2];
  std::vector<int> core_beta;
  for (int runner = 0; runner < 2; ++runner) {
    for (int k = 0; k < count[runner]; ++k) core_beta.push_back(runner + 2 * k);
  }
  return from_beta(std::move(core_beta));
}

bool has_empty_two_core(const Partition& lambda, TwoCoreMethod method, std::optional<int> padding) {
  switch (method) {
    case TwoCoreMethod::Abacus:
      return two_core(lambda).empty();
    case TwoCoreMethod::HookCount: {
      const auto h = hook_multisets(lambda);
      return h.odd.size() == h.even.size();
    }
    case TwoCoreMethod::BetaParity: {
      const int len = padding.value_or(lambda.length() + lambda.length() % 2);
      if (len % 2 != 0 || len < lambda.length()) {
        throw Error(ErrorCode::LengthExceedsBound, "beta parity needs an even padding >= length");
      }
      int odd = 0;
      for (int b : beta_set(lambda, len)) odd += b % 2;
      return 2 * odd == len;
    }
  }
  return false;
}

long b_statistic(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  long b = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const int h = hook_at(lambda, conj, i, j).hook;
      b += (h % 2 == 0 ? 1 : -1) * static_cast<long>(lambda.part(i) - i);
    }
  }
  return b;
}

namespace {

int sign(long e) { return e % 2 == 0 ? 1 : -1; }

void check_delta_length(const Partition& lambda, int n) {
  if (n < 0 || lambda.length() > 2 * n) {
    throw Error(ErrorCode::LengthExceedsBound,
                "length of " + lambda.to_string() + " exceeds 2n = " + std::to_string(2 * n));
  }
}

}  // namespace

long b_via_delta(const Partition& lambda, int n) {
  check_delta_length(lambda, n);
  const int rows = 2 * n;
  long total = 0;
  for (int i = 1; i <= rows; ++i) {
    const long li = lambda.part(i);
    const int width = lambda.part(i) + rows - i;
    // Row i of lambda + delta: sum_{j=1}^{width} (-1)^{li - i - j + 1} (li - i).
    for (int j = 1; j <= width; ++j) total += sign(li - i - j + 1) * (li - i);
    for (int j = i + 1; j <= rows; ++j) total -= sign(li - lambda.part(j) + j - i) * (li - i);
  }
  return total;
}

long b_conj_via_delta(const Partition& lambda, int n) {
  check_delta_length(lambda, n);
  if (!has_empty_two_core(lambda)) {
    throw Error(ErrorCode::NonemptyTwoCore, lambda.to_string() + " has a nonempty 2-core");
  }
  const int rows = 2 * n;
  long total = lambda.size() / 2 - static_cast<long>(n) * n - n;
  for (int i = 1; i <= rows; ++i) {
    for (int j = i + 1; j <= rows; ++j) {
      total += sign(lambda.part(i) - lambda.part(j) + j - i) * static_cast<long>(lambda.part(j) - j);
    }
  }
  return total;
}

namespace {

bool variant_accepts(ParityVariant v, bool even) {
  return v == ParityVariant::All || (v == ParityVariant::Even) == even;
}

}  // namespace

LaurentPoly hook_poly(const Partition& lambda, ParityVariant variant) {
  const auto h = hook_multisets(lambda);
  LaurentPoly out(1);
  for (int hook : h.all) {
    if (variant_accepts(variant, hook % 2 == 0)) out *= LaurentPoly::one_minus(1, hook);
  }
  return out;
}

LaurentPoly content_poly(const Partition& lambda, int z_exponent, ParityVariant variant) {
  LaurentPoly out(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      if (variant_accepts(variant, (i + j) % 2 == 0)) out *= LaurentPoly::one_minus(1, z_exponent + j - i);
    }
  }
  return out;
}

Partition rectangle(int m, int n) {
  if (m <= 0 || n <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(n), m));
}

namespace {

void enumerate_size(int remaining, int max_part, int max_length, std::vector<int>& prefix,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (remaining == 0) {
    emit(prefix);
    return;
  }
  if (max_length == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_size(remaining - p, p, max_length - 1, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(const EnumerationBounds& bounds,
                                            const std::function<bool(const Partition&)>& predicate) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  const int max_part = bounds.max_part.value_or(bounds.max_size);
  const int max_length = bounds.max_length.value_or(bounds.max_size);
  for (int size = std::max(0, bounds.min_size); size <= bounds.max_size; ++size) {
    enumerate_size(size, max_part, max_length, prefix, [&](const std::vector<int>& parts) {
      Partition p(parts);
      if (!predicate || predicate(p)) out.push_back(std::move(p));
    });
  }
  return out;
}

}  // namespace littlewood
