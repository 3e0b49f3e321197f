#include "ipd/polygon.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ipd/error.hpp"
#include "text_lines.hpp"

namespace ipd {

std::string to_string(const Chord& c) { return "{" + std::to_string(c.u) + "," + std::to_string(c.v) + "}"; }

Dissection::Dissection(int m, std::vector<Chord> diagonals) : m_(m), diagonals_(std::move(diagonals)) {
  if (m_ < 2) throw std::invalid_argument("a polygon needs at least 2 vertices");
  for (auto& c : diagonals_) {
    if (c.u > c.v) std::swap(c.u, c.v);
    if (!is_diagonal(m_, c))
      throw std::invalid_argument(to_string(c) + " is not a diagonal of the " + std::to_string(m_) + "-gon");
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  diagonals_.erase(std::unique(diagonals_.begin(), diagonals_.end()), diagonals_.end());
}

bool Dissection::has_diagonal(const Chord& c) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), c);
}

bool Dissection::has_side(int a, int b) const {
  if (a > b) std::swap(a, b);
  const Chord c{a, b};
  return is_outer_edge(m_, c) || has_diagonal(c);
}

std::vector<ChordPair> crossing_pairs(const Dissection& d) {
  std::vector<ChordPair> out;
  const auto& ds = d.diagonals();
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (chords_cross(ds[i], ds[j])) out.emplace_back(ds[i], ds[j]);
  return out;
}

namespace {

// Vertices of a crossing pair in ascending order.
std::array<int, 4> crossing_vertices(const ChordPair& pair) {
  std::array<int, 4> x{pair.first.u, pair.first.v, pair.second.u, pair.second.v};
  std::sort(x.begin(), x.end());
  return x;
}

std::array<Chord, 4> frame_of(const std::array<int, 4>& x) {
  return {Chord{x[0], x[1]}, Chord{x[1], x[2]}, Chord{x[2], x[3]}, Chord{x[0], x[3]}};
}

}  // namespace

bool is_diagonally_framed(const Dissection& d) {
  for (const auto& pair : crossing_pairs(d))
    for (const auto& side : frame_of(crossing_vertices(pair)))
      if (!d.has_side(side.u, side.v)) return false;
  return true;
}

bool is_noncrossing(const Dissection& d) {
  const auto& ds = d.diagonals();
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (chords_cross(ds[i], ds[j])) return false;
  return true;
}

bool penetrates(const Chord& c, std::span<const int> tuple) {
  const std::size_t k = tuple.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const int s = tuple[i];
    const int e = tuple[i + 1];
    if (s <= c.u && c.u <= e && s <= c.v && c.v <= e) return false;
  }
  // Wrapping arc from the last tuple vertex back to the first.
  const auto in_wrap = [&](int x) { return x >= tuple[k - 1] || x <= tuple[0]; };
  return !(in_wrap(c.u) && in_wrap(c.v));
}

namespace {

template <typename Fn>
void for_each_tuple(int m, int k, Fn&& fn) {
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) t[i] = i + 1;
  while (true) {
    fn(std::span<const int>(t));
    int i = k - 1;
    while (i >= 0 && t[i] == m - (k - 1 - i)) --i;
    if (i < 0) return;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

template <typename HasSide>
bool sides_present(std::span<const int> t, HasSide&& has_side) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (!has_side(t[i], t[i + 1])) return false;
  return has_side(t.front(), t.back());
}

}  // namespace

std::vector<std::vector<int>> empty_faces(const Dissection& d, int k) {
  if (k < 3) throw std::invalid_argument("faces have at least 3 vertices");
  std::vector<std::vector<int>> out;
  const int m = d.vertex_count();
  if (k > m) return out;
  for_each_tuple(m, k, [&](std::span<const int> t) {
    if (!sides_present(t, [&](int a, int b) { return d.has_side(a, b); })) return;
    for (const auto& c : d.diagonals())
      if (penetrates(c, t)) return;
    out.emplace_back(t.begin(), t.end());
  });
  return out;
}

std::string_view to_string(DissectionClass cls) {
  switch (cls) {
    case DissectionClass::FramedQuadFree: return "framed-quad-free";
    case DissectionClass::NonCrossingQuadFree: return "noncrossing-quad-free";
    case DissectionClass::NonCrossingTriQuadFree: return "noncrossing-tri-quad-free";
  }
  return "unknown";
}

bool in_class(const Dissection& d, DissectionClass cls) {
  if (d.vertex_count() <= 3) return true;
  switch (cls) {
    case DissectionClass::FramedQuadFree:
      return is_diagonally_framed(d) && empty_faces(d, 4).empty();
    case DissectionClass::NonCrossingQuadFree:
      return is_noncrossing(d) && empty_faces(d, 4).empty();
    case DissectionClass::NonCrossingTriQuadFree:
      return is_noncrossing(d) && empty_faces(d, 4).empty() && empty_faces(d, 3).empty();
  }
  return false;
}

DiagonalIndex::DiagonalIndex(int m) : m_(m), lookup_(static_cast<std::size_t>((m + 1) * (m + 1)), -1) {
  if (m < 2 || m > kMaxVertices)
    throw std::invalid_argument("diagonal index supports 2..12 vertices, got " + std::to_string(m));
  for (int u = 1; u <= m; ++u)
    for (int v = u + 2; v <= m; ++v)
      if (is_diagonal(m, {u, v})) {
        lookup_[u * (m + 1) + v] = static_cast<int>(chords_.size());
        chords_.push_back({u, v});
      }
}

int DiagonalIndex::index_of(const Chord& c) const {
  if (c.u < 1 || c.v > m_ || c.u >= c.v) return -1;
  return lookup_[c.u * (m_ + 1) + c.v];
}

std::uint64_t DiagonalIndex::mask_of(const Dissection& d) const {
  if (d.vertex_count() != m_) throw std::invalid_argument("vertex count mismatch");
  std::uint64_t mask = 0;
  for (const auto& c : d.diagonals()) mask |= std::uint64_t{1} << index_of(c);
  return mask;
}

Dissection DiagonalIndex::from_mask(std::uint64_t mask) const {
  std::vector<Chord> ds;
  for (; mask != 0; mask &= mask - 1) ds.push_back(chords_[std::countr_zero(mask)]);
  return Dissection(m_, std::move(ds));
}

namespace {

// A constraint "not (all of `include` present and all of `exclude` absent)".
struct Clause {
  std::uint64_t include = 0;
  std::uint64_t exclude = 0;
};

// Clauses grouped by their highest diagonal index: once that diagonal is decided, the
// clause's outcome is fixed, so a violation prunes exactly the dead subtrees.
class ClauseSearch {
 public:
  ClauseSearch(int m, DissectionClass cls) : index_(m), by_last_(static_cast<std::size_t>(index_.size())) {
    const int d = index_.size();
    const bool noncrossing = cls != DissectionClass::FramedQuadFree;
    const auto bit = [](int i) { return std::uint64_t{1} << i; };

    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        const ChordPair pair{index_.chord(a), index_.chord(b)};
        if (!chords_cross(pair.first, pair.second)) continue;
        if (noncrossing) {
          add({bit(a) | bit(b), 0});
          continue;
        }
        for (const auto& side : frame_of(crossing_vertices(pair))) {
          const int f = index_.index_of(side);
          if (f >= 0) add({bit(a) | bit(b), bit(f)});
        }
      }
    }
    add_face_clauses(4);
    if (cls == DissectionClass::NonCrossingTriQuadFree) add_face_clauses(3);
  }

  int size() const noexcept { return index_.size(); }
  const DiagonalIndex& index() const noexcept { return index_; }

  bool admissible(int position, std::uint64_t mask) const {
    for (const auto& c : by_last_[static_cast<std::size_t>(position)])
      if ((mask & c.include) == c.include && (mask & c.exclude) == 0) return false;
    return true;
  }

  // Depth-first from `position`, exclusion first.
  template <typename Emit>
  void run(int position, std::uint64_t mask, Emit& emit) const {
    if (position == size()) {
      emit(mask);
      return;
    }
    if (admissible(position, mask)) run(position + 1, mask, emit);
    const std::uint64_t with = mask | (std::uint64_t{1} << position);
    if (admissible(position, with)) run(position + 1, with, emit);
  }

  // Replays a fixed prefix of decisions; false if it already violates a clause.
  bool replay_prefix(int depth, std::uint64_t branch, std::uint64_t& mask) const {
    mask = 0;
    for (int i = 0; i < depth; ++i) {
      if ((branch >> (depth - 1 - i)) & 1U) mask |= std::uint64_t{1} << i;
      if (!admissible(i, mask)) return false;
    }
    return true;
  }

 private:
  void add(Clause c) {
    const std::uint64_t all = c.include | c.exclude;
    by_last_[static_cast<std::size_t>(63 - std::countl_zero(all))].push_back(c);
  }

  void add_face_clauses(int k) {
    const int m = index_.vertex_count();
    if (k > m) return;
    for_each_tuple(m, k, [&](std::span<const int> t) {
      Clause c;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const Chord side = i + 1 < t.size() ? Chord{t[i], t[i + 1]} : Chord{t.front(), t.back()};
        if (!is_outer_edge(m, side)) c.include |= std::uint64_t{1} << index_.index_of(side);
      }
      for (int i = 0; i < index_.size(); ++i)
        if (penetrates(index_.chord(i), t)) c.exclude |= std::uint64_t{1} << i;
      add(c);
    });
  }

  DiagonalIndex index_;
  std::vector<std::vector<Clause>> by_last_;
};

void check_cap(int m, DissectionClass cls, const EnumerationOptions& options) {
  if (m < 2) throw std::invalid_argument("a polygon needs at least 2 vertices");
  const int cap = cls == DissectionClass::FramedQuadFree ? options.framed_cap : options.noncrossing_cap;
  if (m > cap) throw CapExceeded(std::string("enumerate ") + std::string(to_string(cls)) + " m", m, cap);
  if (m > DiagonalIndex::kMaxVertices)
    throw CapExceeded("enumerate m (bitmask width)", m, DiagonalIndex::kMaxVertices);
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs the search split into 2^depth prefix branches. Each branch's output lands in its own
// slot; callers consume slots in branch order, which equals sequential search order.
template <typename Slot, typename Work>
std::vector<Slot> run_branches(const ClauseSearch& search, unsigned threads, Work&& work) {
  int depth = 0;
  while (depth < std::min(search.size(), 10) && (std::size_t{1} << depth) < 8 * std::size_t{threads}) ++depth;
  if (threads <= 1) depth = 0;
  const std::size_t branches = std::size_t{1} << depth;
  std::vector<Slot> slots(branches);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t b = next++; b < branches; b = next++) {
      std::uint64_t mask = 0;
      if (search.replay_prefix(depth, b, mask)) work(depth, mask, slots[b]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return slots;
}

}  // namespace

void enumerate_dissections(int m, DissectionClass cls, const std::function<void(const Dissection&)>& visit,
                           const EnumerationOptions& options) {
  check_cap(m, cls, options);
  if (m <= 3) {
    visit(Dissection(m));
    return;
  }
  const ClauseSearch search(m, cls);
  const auto slots = run_branches<std::vector<std::uint64_t>>(
      search, resolve_threads(options.threads), [&](int depth, std::uint64_t mask, std::vector<std::uint64_t>& out) {
        auto emit = [&out](std::uint64_t found) { out.push_back(found); };
        search.run(depth, mask, emit);
      });
  for (const auto& slot : slots)
    for (std::uint64_t mask : slot) visit(search.index().from_mask(mask));
}

std::vector<Dissection> enumerate_dissections(int m, DissectionClass cls, const EnumerationOptions& options) {
  std::vector<Dissection> out;
  enumerate_dissections(m, cls, [&](const Dissection& d) { out.push_back(d); }, options);
  return out;
}

std::uint64_t tally_dissections(int m, DissectionClass cls, const EnumerationOptions& options) {
  check_cap(m, cls, options);
  if (m <= 3) return 1;
  const ClauseSearch search(m, cls);
  const auto slots = run_branches<std::uint64_t>(
      search, resolve_threads(options.threads), [&](int depth, std::uint64_t mask, std::uint64_t& count) {
        auto emit = [&count](std::uint64_t) { ++count; };
        search.run(depth, mask, emit);
      });
  std::uint64_t total = 0;
  for (auto c : slots) total += c;
  return total;
}

std::string format_dissection(const Dissection& d) {
  std::ostringstream out;
  out << "m " << d.vertex_count() << '\n';
  for (const auto& c : d.diagonals()) out << c.u << ' ' << c.v << '\n';
  return out.str();
}

namespace {

Dissection build_record(std::size_t header_line, int m, std::vector<Chord> chords) {
  try {
    return Dissection(m, std::move(chords));
  } catch (const std::invalid_argument& e) {
    throw MalformedLine(header_line, e.what());
  }
}

}  // namespace

std::vector<Dissection> parse_dissection_stream(std::string_view text) {
  std::vector<Dissection> out;
  int m = -1;
  std::size_t header_line = 0;
  std::vector<Chord> chords;
  std::size_t line_no = 0;

  const auto flush = [&] {
    if (m != -1) out.push_back(build_record(header_line, m, std::move(chords)));
    m = -1;
    chords.clear();
  };

  while (true) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    ++line_no;
    bool blank = true;
    std::vector<std::string_view> fields;
    for_each_record_line(line, [&](std::size_t, const std::vector<std::string_view>& f) {
      blank = false;
      fields = f;
    });
    const bool comment = blank && line.find('#') != std::string_view::npos;
    if (blank && !comment) {
      flush();
    } else if (!blank) {
      if (fields.size() == 2 && fields[0] == "m") {
        if (m != -1) throw MalformedLine(line_no, "header inside a record; separate records with a blank line");
        m = parse_int_field(line_no, fields[1]);
        header_line = line_no;
      } else {
        if (m == -1) throw MalformedLine(line_no, "missing \"m <m>\" header");
        if (fields.size() != 2) throw MalformedLine(line_no, "expected \"u v\"");
        chords.push_back({parse_int_field(line_no, fields[0]), parse_int_field(line_no, fields[1])});
      }
    }
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  flush();
  return out;
}

Dissection parse_dissection(std::string_view text) {
  auto ds = parse_dissection_stream(text);
  if (ds.size() != 1)
    throw MalformedLine(1, "expected exactly one dissection, found " + std::to_string(ds.size()));
  return std::move(ds.front());
}

std::string format_dissection_stream(std::span<const Dissection> ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i > 0) out += '\n';
    out += format_dissection(ds[i]);
  }
  return out;
}

}  // namespace ipd
