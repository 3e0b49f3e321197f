#pragma once

#include <string>

#include "ipd/polygon.hpp"
#include "ipd/poset.hpp"

namespace ipd {

/// Interval [a,b] of an n-element poset <-> chord {a, b+1} of the (n+1)-gon.
constexpr Chord chord_of(const ValueInterval& v) noexcept { return {v.lo, v.hi + 1}; }
constexpr ValueInterval interval_of(const Chord& c) noexcept { return {c.u, c.v - 1}; }

/// The (n+1)-gon whose diagonals are the images of the non-trivial intervals. Singletons and
/// [1,n] land on outer edges and are not stored. n = 1 gives the degenerate 2-gon.
Dissection phi(const IntervalPoset& poset);

/// Reads the correspondence backwards: singletons, [1,n] and [u, v-1] per diagonal {u,v}.
/// Performs no validity check. Requires m >= 2.
IntervalPoset phi_inverse(const Dissection& d);

/// Predicate bundle evaluated on phi(P).
struct ImageClassification {
  bool diagonally_framed = false;
  bool quad_free = false;
  bool noncrossing = false;
  bool triangle_free = false;

  bool operator==(const ImageClassification&) const = default;
};

/// Requires n >= 2; throws std::invalid_argument otherwise.
ImageClassification classify_image(const IntervalPoset& poset);

std::string to_string(const ImageClassification& c);

}  // namespace ipd
