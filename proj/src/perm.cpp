#include "ipd/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "ipd/error.hpp"

namespace ipd {

std::string to_string(const ValueInterval& v) {
  if (v.singleton()) return "{" + std::to_string(v.lo) + "}";
  return "[" + std::to_string(v.lo) + "," + std::to_string(v.hi) + "]";
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  using Kind = PermutationParseError::Kind;
  if (entries_.empty()) throw PermutationParseError(Kind::Empty, "empty permutation");
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n)
      throw PermutationParseError(Kind::NotAPermutation,
                                  "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[v])
      throw PermutationParseError(Kind::NotAPermutation, "duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

Permutation Permutation::complemented() const {
  std::vector<int> e(entries_);
  for (int& v : e) v = size() + 1 - v;
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  using Kind = PermutationParseError::Kind;
  const auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };

  const auto first = std::find_if_not(text.begin(), text.end(), is_sep);
  if (first == text.end()) throw PermutationParseError(Kind::Empty, "empty permutation text");
  const auto last = std::find_if_not(text.rbegin(), text.rend(), is_sep).base();
  const std::string_view body(&*first, static_cast<std::size_t>(last - first));

  std::vector<int> entries;
  if (std::none_of(body.begin(), body.end(), is_sep)) {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw PermutationParseError(Kind::NotAPermutation, std::string("unexpected character '") + c + "'");
      entries.push_back(c - '0');
    }
    return Permutation(std::move(entries));
  }

  std::size_t i = 0;
  while (i < body.size()) {
    if (is_sep(body[i])) {
      ++i;
      continue;
    }
    int value = 0;
    std::size_t j = i;
    while (j < body.size() && !is_sep(body[j])) {
      if (!std::isdigit(static_cast<unsigned char>(body[j])))
        throw PermutationParseError(Kind::NotAPermutation,
                                    std::string("unexpected character '") + body[j] + "'");
      if (value > 100000) throw PermutationParseError(Kind::NotAPermutation, "value too large");
      value = value * 10 + (body[j] - '0');
      ++j;
    }
    entries.push_back(value);
    i = j;
  }
  return Permutation(std::move(entries));
}

namespace {

// Window [i, j] (0-based, inclusive) carries contiguous values iff max - min == j - i.
struct WindowTable {
  int n;
  std::vector<int> lo;
  std::vector<int> hi;

  explicit WindowTable(const Permutation& p)
      : n(p.size()),
        lo(static_cast<std::size_t>(n * n)),
        hi(static_cast<std::size_t>(n * n)) {
    for (int i = 0; i < n; ++i) {
      int mn = p[i];
      int mx = p[i];
      for (int j = i; j < n; ++j) {
        mn = std::min(mn, p[j]);
        mx = std::max(mx, p[j]);
        lo[i * n + j] = mn;
        hi[i * n + j] = mx;
      }
    }
  }

  int min(int i, int j) const { return lo[i * n + j]; }
  int max(int i, int j) const { return hi[i * n + j]; }
  bool block(int i, int j) const { return max(i, j) - min(i, j) == j - i; }
};

}  // namespace

std::vector<IntervalWindow> interval_windows(const Permutation& p) {
  const WindowTable t(p);
  std::vector<IntervalWindow> out;
  for (int i = 0; i < t.n; ++i)
    for (int j = i; j < t.n; ++j)
      if (t.block(i, j)) out.push_back({i, j, {t.min(i, j), t.max(i, j)}});
  return out;
}

std::vector<ValueInterval> all_intervals(const Permutation& p) {
  std::vector<ValueInterval> out;
  for (const auto& w : interval_windows(p)) out.push_back(w.values);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple(const Permutation& p) {
  const WindowTable t(p);
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      if (t.block(i, j) && !(i == 0 && j == t.n - 1)) return false;
  return true;
}

bool has_sum_interval(const Permutation& p, int parts) {
  if (parts != 2 && parts != 3) throw std::invalid_argument("has_sum_interval: parts must be 2 or 3");
  const WindowTable t(p);
  const int n = t.n;

  // Blocks [a..b] then [b+1..c] stack ascending (direct sum) or descending (skew sum).
  const auto ascending = [&](int a, int b, int c) { return t.max(a, b) + 1 == t.min(b + 1, c); };
  const auto descending = [&](int a, int b, int c) { return t.max(b + 1, c) + 1 == t.min(a, b); };

  for (int i = 0; i < n; ++i) {
    for (int k = i; k < n; ++k) {
      if (!t.block(i, k)) continue;
      for (int l = k + 1; l < n; ++l) {
        if (!t.block(k + 1, l)) continue;
        const bool up = ascending(i, k, l);
        const bool down = descending(i, k, l);
        if (!up && !down) continue;
        if (parts == 2) return true;
        for (int r = l + 1; r < n; ++r) {
          if (!t.block(l + 1, r)) continue;
          if (up && ascending(k + 1, l, r)) return true;
          if (down && descending(k + 1, l, r)) return true;
        }
      }
    }
  }
  return false;
}

bool is_block_wise_simple(const Permutation& p, OrderOneConvention order_one) {
  if (p.size() == 1) return order_one == OrderOneConvention::Included;
  return !has_sum_interval(p, 2);
}

}  // namespace ipd
