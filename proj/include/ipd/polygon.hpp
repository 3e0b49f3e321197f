#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ipd {

/// Segment between polygon vertices u < v (a diagonal or an outer edge).
struct Chord {
  int u = 1;
  int v = 2;

  constexpr auto operator<=>(const Chord&) const = default;
};

std::string to_string(const Chord& c);

/// Outer edges are {i, i+1} and {1, m}.
constexpr bool is_outer_edge(int m, const Chord& c) noexcept {
  return c.v - c.u == 1 || (c.u == 1 && c.v == m);
}

constexpr bool is_diagonal(int m, const Chord& c) noexcept {
  return c.u >= 1 && c.v <= m && c.v - c.u >= 2 && !(c.u == 1 && c.v == m);
}

/// Strict interleaving p < r < q < s (in either order); chords sharing a vertex never cross.
constexpr bool chords_cross(const Chord& a, const Chord& b) noexcept {
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

/// A convex m-gon with vertices 1..m and a set of diagonals. Outer edges are implicit.
/// m = 2 is the degenerate polygon with no diagonals.
class Dissection {
 public:
  /// Normalizes each chord to u < v, sorts and deduplicates. Throws std::invalid_argument
  /// for m < 2 or for chords that are not diagonals of the m-gon.
  Dissection(int m, std::vector<Chord> diagonals = {});

  int vertex_count() const noexcept { return m_; }
  /// Sorted by (u, v).
  const std::vector<Chord>& diagonals() const noexcept { return diagonals_; }

  bool has_diagonal(const Chord& c) const;
  /// Diagonal of this dissection or outer edge of the polygon; endpoints in any order.
  bool has_side(int a, int b) const;

  bool operator==(const Dissection&) const = default;

 private:
  int m_;
  std::vector<Chord> diagonals_;
};

using ChordPair = std::pair<Chord, Chord>;

/// All crossing pairs, first chord lexicographically smaller.
std::vector<ChordPair> crossing_pairs(const Dissection& d);

/// Every crossing pair {x1,x3},{x2,x4} has its frame {x1,x2},{x2,x3},{x3,x4},{x1,x4}.
bool is_diagonally_framed(const Dissection& d);

bool is_noncrossing(const Dissection& d);

/// Arc test: chord {x,y} misses the open hull of the ascending vertex tuple iff both
/// endpoints lie in one closed cyclic arc between consecutive tuple vertices.
bool penetrates(const Chord& c, std::span<const int> tuple);

/// Ascending k-tuples whose sides are all present and whose hull no diagonal penetrates.
std::vector<std::vector<int>> empty_faces(const Dissection& d, int k);

enum class DissectionClass { FramedQuadFree, NonCrossingQuadFree, NonCrossingTriQuadFree };

std::string_view to_string(DissectionClass cls);

/// Direct evaluation of the class predicates. Polygons with m <= 3 are accepted in every
/// class: the lone triangle face is not counted against the triangle-free class.
bool in_class(const Dissection& d, DissectionClass cls);

/// Lexicographic numbering of the diagonals of an m-gon (2 <= m <= 12), used for bitmasks.
class DiagonalIndex {
 public:
  static constexpr int kMaxVertices = 12;

  explicit DiagonalIndex(int m);

  int vertex_count() const noexcept { return m_; }
  int size() const noexcept { return static_cast<int>(chords_.size()); }
  const Chord& chord(int index) const { return chords_[static_cast<std::size_t>(index)]; }
  /// -1 when `c` is not a diagonal.
  int index_of(const Chord& c) const;

  std::uint64_t mask_of(const Dissection& d) const;
  Dissection from_mask(std::uint64_t mask) const;

 private:
  int m_;
  std::vector<Chord> chords_;
  std::vector<int> lookup_;
};

struct EnumerationOptions {
  int framed_cap = 9;
  int noncrossing_cap = 11;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Calls `visit` once per member of the class, on the calling thread, in search order:
/// diagonals decided in lexicographic order, exclusion explored before inclusion.
/// Throws CapExceeded above the class cap.
void enumerate_dissections(int m, DissectionClass cls, const std::function<void(const Dissection&)>& visit,
                           const EnumerationOptions& options = {});

std::vector<Dissection> enumerate_dissections(int m, DissectionClass cls, const EnumerationOptions& options = {});

/// Same search without materializing the members.
std::uint64_t tally_dissections(int m, DissectionClass cls, const EnumerationOptions& options = {});

/// Header "m <m>" then one "u v" line per diagonal.
std::string format_dissection(const Dissection& d);
/// Inverse of format_dissection; '#' lines ignored. Throws MalformedLine.
Dissection parse_dissection(std::string_view text);

/// Records separated by blank lines.
std::string format_dissection_stream(std::span<const Dissection> ds);
std::vector<Dissection> parse_dissection_stream(std::string_view text);

}  // namespace ipd
