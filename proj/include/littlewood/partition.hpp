#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/laurent_poly.hpp"

namespace littlewood {

/// Integer partition in canonical form: positive, weakly decreasing parts
/// with no trailing zeros. The empty partition has length 0.
class Partition {
 public:
  Partition() = default;
  /// Accepts any weakly decreasing nonnegative sequence; zeros are trimmed.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 1-based i; zero beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  int operator[](int i) const { return part(i); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  bool contains(int row, int col) const { return row >= 1 && col >= 1 && col <= part(row); }
  /// Every row has even length.
  bool is_even() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  /// "6,4,3,1"; the empty partition prints as "".
  std::string to_string() const;
  /// Inverse of to_string; whitespace is ignored.
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Cell {
  int row;
  int col;
};

struct HookData {
  int arm;
  int leg;
  int hook;
  int content;
  bool even_diagonal;  ///< i + j even
};

struct HookMultisets {
  std::vector<int> all;
  std::vector<int> even;
  std::vector<int> odd;
};

Partition conjugate(const Partition& lambda);
HookData hook_data(const Partition& lambda, Cell s);
/// Sorted ascending.
HookMultisets hook_multisets(const Partition& lambda);

/// 2-core via beta-numbers: strip dominoes on the two-runner abacus.
Partition two_core(const Partition& lambda);

enum class TwoCoreMethod { Abacus, HookCount, BetaParity };

/// For BetaParity, `padding` is the (even) sequence length 2m; it defaults to
/// the smallest even number >= length(lambda).
bool has_empty_two_core(const Partition& lambda, TwoCoreMethod method = TwoCoreMethod::Abacus,
                        std::optional<int> padding = std::nullopt);

/// b(lambda) = sum over cells of (-1)^{h(i,j)} (lambda_i - i).
long b_statistic(const Partition& lambda);
/// The same statistic through lambda + delta with delta of length 2n.
long b_via_delta(const Partition& lambda, int n);
/// b(lambda') through the pairwise sum; needs an empty 2-core.
long b_conj_via_delta(const Partition& lambda, int n);

enum class ParityVariant { All, Even, Odd };

/// prod_{h in H^{variant}} (1 - q^h)
LaurentPoly hook_poly(const Partition& lambda, ParityVariant variant = ParityVariant::All);
/// prod over cells (i+j of the variant's parity) of (1 - q^{z_exponent + j - i}).
LaurentPoly content_poly(const Partition& lambda, int z_exponent, ParityVariant variant = ParityVariant::All);

/// The rectangle (m^n): n rows of length m.
Partition rectangle(int m, int n);

struct EnumerationBounds {
  int max_size = 0;
  std::optional<int> max_part;
  std::optional<int> max_length;
  int min_size = 0;
};

/// All partitions within the bounds that satisfy the predicate, graded by
/// size (ascending), reverse-lexicographic within each size:
///   (), (1), (2), (1,1), (3), (2,1), (1,1,1), ...
std::vector<Partition> enumerate_partitions(const EnumerationBounds& bounds,
                                            const std::function<bool(const Partition&)>& predicate = {});

}  // namespace littlewood
