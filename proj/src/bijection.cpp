#include "ipd/bijection.hpp"

#include <stdexcept>

namespace ipd {

Dissection phi(const IntervalPoset& poset) {
  const int n = poset.size();
  std::vector<Chord> diagonals;
  for (const auto& v : poset.intervals())
    if (v.proper(n)) diagonals.push_back(chord_of(v));
  return Dissection(n + 1, std::move(diagonals));
}

IntervalPoset phi_inverse(const Dissection& d) {
  const int n = d.vertex_count() - 1;
  std::vector<ValueInterval> intervals;
  intervals.reserve(static_cast<std::size_t>(n) + 1 + d.diagonals().size());
  for (int i = 1; i <= n; ++i) intervals.push_back({i, i});
  intervals.push_back({1, n});
  for (const auto& c : d.diagonals()) intervals.push_back(interval_of(c));
  return IntervalPoset(n, std::move(intervals));
}

ImageClassification classify_image(const IntervalPoset& poset) {
  if (poset.size() < 2) throw std::invalid_argument("classify_image needs n >= 2");
  const Dissection d = phi(poset);
  ImageClassification c;
  c.diagonally_framed = is_diagonally_framed(d);
  c.quad_free = empty_faces(d, 4).empty();
  c.noncrossing = is_noncrossing(d);
  c.triangle_free = empty_faces(d, 3).empty();
  return c;
}

std::string to_string(const ImageClassification& c) {
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  return std::string("diagonally framed: ") + flag(c.diagonally_framed) + ", quadrilateral-free: " +
         flag(c.quad_free) + ", non-crossing: " + flag(c.noncrossing) + ", triangle-free: " +
         flag(c.triangle_free);
}

}  // namespace ipd
