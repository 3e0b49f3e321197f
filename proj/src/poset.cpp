#include "ipd/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ipd/error.hpp"
#include "text_lines.hpp"

namespace ipd {

IntervalPoset::IntervalPoset(int n, std::vector<ValueInterval> intervals)
    : n_(n), intervals_(std::move(intervals)) {
  if (n_ < 1) throw std::invalid_argument("interval poset needs n >= 1");
  std::sort(intervals_.begin(), intervals_.end());
  intervals_.erase(std::unique(intervals_.begin(), intervals_.end()), intervals_.end());
  for (const auto& v : intervals_)
    if (v.lo < 1 || v.lo > v.hi || v.hi > n_)
      throw std::invalid_argument("interval " + to_string(v) + " outside [1," + std::to_string(n_) + "]");
  for (int i = 1; i <= n_; ++i)
    if (!contains({i, i})) throw std::invalid_argument("missing singleton {" + std::to_string(i) + "}");
  if (!contains(top())) throw std::invalid_argument("missing full interval");
}

bool IntervalPoset::contains(const ValueInterval& v) const {
  return std::binary_search(intervals_.begin(), intervals_.end(), v);
}

IntervalPoset poset_of(const Permutation& p) { return IntervalPoset(p.size(), all_intervals(p)); }

namespace {

// children[i] = indices of the maximal members strictly inside family[i], by ascending lo.
// `family` must be sorted by (lo, hi).
std::vector<std::vector<int>> cover_children(const std::vector<ValueInterval>& family) {
  const int f = static_cast<int>(family.size());
  std::vector<std::vector<int>> children(static_cast<std::size_t>(f));
  std::vector<int> below;
  for (int v = 0; v < f; ++v) {
    below.clear();
    for (int w = 0; w < f; ++w)
      if (w != v && family[v].contains(family[w])) below.push_back(w);
    for (int w : below) {
      const bool covered = std::any_of(below.begin(), below.end(), [&](int u) {
        return u != w && family[u].contains(family[w]);
      });
      if (!covered) children[v].push_back(w);
    }
    // (lo, hi) order already; maximal children never share lo.
  }
  return children;
}

}  // namespace

HasseDiagram::HasseDiagram(const IntervalPoset& poset)
    : intervals_(poset.intervals()), children_(cover_children(intervals_)), parents_(children_.size()) {
  for (std::size_t v = 0; v < children_.size(); ++v)
    for (int c : children_[v]) parents_[c].push_back(static_cast<int>(v));
}

std::vector<HasseEdge> HasseDiagram::edges() const {
  std::vector<int> order(children_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  // Larger intervals first so the root leads.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return intervals_[a].length() > intervals_[b].length();
  });
  std::vector<HasseEdge> out;
  for (int v : order)
    for (int c : children_[v]) out.push_back({intervals_[v], intervals_[c]});
  return out;
}

std::vector<ValueInterval> hasse_children(const IntervalPoset& poset, const ValueInterval& v) {
  const auto& family = poset.intervals();
  const auto it = std::lower_bound(family.begin(), family.end(), v);
  if (it == family.end() || *it != v)
    throw ElementNotInPoset("interval " + to_string(v) + " is not in the poset");
  std::vector<ValueInterval> out;
  for (const auto& w : family) {
    if (w == v || !v.contains(w)) continue;
    const bool covered = std::any_of(family.begin(), family.end(), [&](const ValueInterval& u) {
      return u != v && u != w && v.contains(u) && u.contains(w);
    });
    if (!covered) out.push_back(w);
  }
  return out;
}

std::vector<HasseEdge> hasse_edges(const IntervalPoset& poset) { return HasseDiagram(poset).edges(); }

bool is_tree(const IntervalPoset& poset) {
  const HasseDiagram hasse(poset);
  const auto& family = poset.intervals();
  for (std::size_t i = 0; i < hasse.size(); ++i) {
    if (family[i] == poset.top()) continue;
    if (hasse.parents(i).size() != 1) return false;
  }
  return true;
}

std::map<int, int> children_histogram(const IntervalPoset& poset) {
  const HasseDiagram hasse(poset);
  std::map<int, int> out;
  for (std::size_t i = 0; i < hasse.size(); ++i) ++out[static_cast<int>(hasse.children(i).size())];
  return out;
}

std::string canonical_key(const IntervalPoset& poset) {
  std::string key = std::to_string(poset.size()) + "|";
  bool first = true;
  for (const auto& v : poset.intervals()) {
    if (!first) key += ',';
    first = false;
    key += std::to_string(v.lo);
    key += '-';
    key += std::to_string(v.hi);
  }
  return key;
}

FamilyVerdict validate_interval_family(std::span<const ValueInterval> intervals, int n) {
  using Failure = FamilyVerdict::Failure;
  FamilyVerdict verdict;

  std::vector<ValueInterval> family(intervals.begin(), intervals.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const auto has = [&](const ValueInterval& v) { return std::binary_search(family.begin(), family.end(), v); };

  for (const auto& v : family) {
    if (v.lo < 1 || v.lo > v.hi || v.hi > n) {
      verdict.failure = Failure::OutOfRange;
      verdict.witnesses = {v};
      verdict.message = "interval " + to_string(v) + " outside [1," + std::to_string(n) + "]";
      return verdict;
    }
  }
  for (int i = 1; i <= n + 1; ++i) {
    const ValueInterval v = i <= n ? ValueInterval{i, i} : ValueInterval{1, n};
    if (!has(v)) {
      verdict.failure = Failure::MissingTrivial;
      verdict.witnesses = {v};
      verdict.message = "trivial interval " + to_string(v) + " missing";
      return verdict;
    }
  }

  for (const auto& first : family) {
    for (const auto& second : family) {
      // Proper overlap with first to the left: a < b <= c < d.
      if (!(first.lo < second.lo && second.lo <= first.hi && first.hi < second.hi)) continue;
      const ValueInterval required[] = {
          {first.lo, second.hi},         // union
          {second.lo, first.hi},         // intersection
          {first.lo, second.lo - 1},     // first minus second
          {first.hi + 1, second.hi},     // second minus first
      };
      for (const auto& r : required) {
        if (has(r)) continue;
        verdict.failure = Failure::Closure;
        verdict.witnesses = {first, second};
        verdict.detail = {r};
        verdict.message = "overlapping " + to_string(first) + " and " + to_string(second) + " but " +
                          to_string(r) + " is missing";
        return verdict;
      }
    }
  }

  const auto children = cover_children(family);
  for (std::size_t v = 0; v < family.size(); ++v) {
    if (children[v].size() != 3) continue;
    verdict.failure = Failure::ThreeDescendants;
    verdict.witnesses = {family[v]};
    for (int c : children[v]) verdict.detail.push_back(family[c]);
    verdict.message = to_string(family[v]) + " has exactly 3 direct descendants";
    return verdict;
  }
  return verdict;
}

std::string format_poset(const IntervalPoset& poset) {
  std::ostringstream out;
  out << "n " << poset.size() << '\n';
  for (const auto& v : poset.intervals()) out << v.lo << ' ' << v.hi << '\n';
  return out.str();
}

int parse_interval_lines(std::string_view text, std::vector<ValueInterval>& out) {
  int header = -1;
  for_each_record_line(text, [&](std::size_t line, const std::vector<std::string_view>& fields) {
    if (fields.size() == 2 && fields[0] == "n") {
      if (header != -1 || !out.empty()) throw MalformedLine(line, "unexpected header");
      header = parse_int_field(line, fields[1]);
      return;
    }
    if (fields.size() != 2) throw MalformedLine(line, "expected \"lo hi\"");
    out.push_back({parse_int_field(line, fields[0]), parse_int_field(line, fields[1])});
  });
  return header;
}

IntervalPoset parse_poset(std::string_view text) {
  std::vector<ValueInterval> intervals;
  const int n = parse_interval_lines(text, intervals);
  if (n < 1) throw MalformedLine(1, "missing \"n <n>\" header");
  try {
    return IntervalPoset(n, std::move(intervals));
  } catch (const std::invalid_argument& e) {
    throw MalformedLine(1, e.what());
  }
}

}  // namespace ipd
