#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipd/perm.hpp"

namespace ipd {

/// The set of intervals of a permutation of size n, ordered by inclusion. Identity is the
/// labeled interval set: two posets are equal iff n and the sets agree.
class IntervalPoset {
 public:
  /// Sorts and deduplicates. Throws std::invalid_argument if an interval lies outside [1,n]
  /// or a trivial interval (a singleton or [1,n]) is missing.
  IntervalPoset(int n, std::vector<ValueInterval> intervals);

  int size() const noexcept { return n_; }
  /// Sorted by (lo, hi).
  const std::vector<ValueInterval>& intervals() const noexcept { return intervals_; }
  bool contains(const ValueInterval& v) const;
  ValueInterval top() const noexcept { return {1, n_}; }

  bool operator==(const IntervalPoset&) const = default;

 private:
  int n_;
  std::vector<ValueInterval> intervals_;
};

IntervalPoset poset_of(const Permutation& p);

struct HasseEdge {
  ValueInterval parent;
  ValueInterval child;

  bool operator==(const HasseEdge&) const = default;
};

/// Cover relation of a poset with children sorted by ascending minimum.
class HasseDiagram {
 public:
  explicit HasseDiagram(const IntervalPoset& poset);

  /// Indices refer to IntervalPoset::intervals().
  const std::vector<int>& children(std::size_t index) const { return children_[index]; }
  const std::vector<int>& parents(std::size_t index) const { return parents_[index]; }
  std::size_t size() const noexcept { return children_.size(); }

  /// Parent-major, children left to right.
  std::vector<HasseEdge> edges() const;

 private:
  std::vector<ValueInterval> intervals_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> parents_;
};

/// Direct descendants of `v`, sorted by lo. Throws ElementNotInPoset.
std::vector<ValueInterval> hasse_children(const IntervalPoset& poset, const ValueInterval& v);

std::vector<HasseEdge> hasse_edges(const IntervalPoset& poset);

/// True iff every element other than [1,n] has exactly one direct parent.
bool is_tree(const IntervalPoset& poset);

/// Number of direct descendants -> number of elements with that many.
std::map<int, int> children_histogram(const IntervalPoset& poset);

/// "n|lo-hi,lo-hi,..." with pairs in (lo, hi) order.
std::string canonical_key(const IntervalPoset& poset);

/// Outcome of checking the necessary conditions for a family of intervals to be an
/// interval poset. Passing means "not refuted", not "realizable".
struct FamilyVerdict {
  enum class Failure { None, OutOfRange, MissingTrivial, Closure, ThreeDescendants };

  Failure failure = Failure::None;
  /// Offending interval(s): the overlapping pair for Closure, the parent for ThreeDescendants.
  std::vector<ValueInterval> witnesses;
  /// Missing set for Closure (one of union, intersection, differences), or the three
  /// children for ThreeDescendants.
  std::vector<ValueInterval> detail;
  std::string message;

  bool passed() const noexcept { return failure == Failure::None; }
};

FamilyVerdict validate_interval_family(std::span<const ValueInterval> intervals, int n);

/// Header "n <n>" then one "lo hi" line per interval.
std::string format_poset(const IntervalPoset& poset);

/// Inverse of format_poset. Blank lines and lines starting with '#' are skipped. Throws
/// MalformedLine.
IntervalPoset parse_poset(std::string_view text);

/// Reads "lo hi" lines (optionally preceded by "n <n>") without requiring the trivial
/// intervals. Returns the header size or -1 when absent.
int parse_interval_lines(std::string_view text, std::vector<ValueInterval>& out);

}  // namespace ipd
