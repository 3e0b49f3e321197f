#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ipd {

/// A range [lo, hi] of values of a permutation.
struct ValueInterval {
  int lo = 1;
  int hi = 1;

  constexpr int length() const noexcept { return hi - lo + 1; }
  constexpr bool singleton() const noexcept { return lo == hi; }
  constexpr bool full(int n) const noexcept { return lo == 1 && hi == n; }
  constexpr bool proper(int n) const noexcept { return !singleton() && !full(n); }

  /// Non-strict inclusion of value ranges.
  constexpr bool contains(const ValueInterval& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }

  constexpr auto operator<=>(const ValueInterval&) const = default;
};

/// "{a}" for singletons, "[a,b]" otherwise.
std::string to_string(const ValueInterval& v);

/// A permutation of {1..n} in one-line notation, n >= 1.
class Permutation {
 public:
  /// Throws PermutationParseError unless `entries` is a permutation of {1..n}.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  /// Value at 0-based position `pos`.
  int operator[](std::size_t pos) const noexcept { return entries_[pos]; }
  std::span<const int> entries() const noexcept { return entries_; }

  Permutation reversed() const;
  Permutation complemented() const;

  /// Compact digit string for n <= 9, space separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// Accepts a compact digit string ("2413", n <= 9) or a list of integers separated by
/// commas and/or whitespace ("10 3 1 2 4 5 7 6 9 8").
Permutation parse_permutation(std::string_view text);

/// A position window [first, last] (0-based, inclusive) together with the value range it carries.
struct IntervalWindow {
  int first = 0;
  int last = 0;
  ValueInterval values;
};

/// Every window whose values are contiguous, in (first, last) order.
std::vector<IntervalWindow> interval_windows(const Permutation& p);

/// Every interval of `p` (singletons and [1,n] included), sorted by (lo, hi).
std::vector<ValueInterval> all_intervals(const Permutation& p);

bool is_simple(const Permutation& p);

/// True iff `p` has an interval that is a direct sum or a skew sum of `parts` blocks.
/// `parts` must be 2 or 3; throws std::invalid_argument otherwise.
bool has_sum_interval(const Permutation& p, int parts);

/// How the vacuous order-1 case of block-wise simplicity is decided.
enum class OrderOneConvention { Included, Excluded };

bool is_block_wise_simple(const Permutation& p,
                          OrderOneConvention order_one = OrderOneConvention::Included);

}  // namespace ipd
