#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace ipd::oracle {

namespace {

std::set<int> values_of(std::span<const int> entries, std::size_t first, std::size_t last) {
  return {entries.begin() + static_cast<std::ptrdiff_t>(first), entries.begin() + static_cast<std::ptrdiff_t>(last) + 1};
}

bool contiguous(const std::set<int>& values) {
  int expected = *values.begin();
  for (int v : values)
    if (v != expected++) return false;
  return true;
}

}  // namespace

std::set<std::pair<int, int>> intervals_by_sets(std::span<const int> entries) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i; j < entries.size(); ++j) {
      const auto values = values_of(entries, i, j);
      if (contiguous(values)) out.emplace(*values.begin(), *values.rbegin());
    }
  return out;
}

bool sum_interval_by_splits(std::span<const int> entries, int parts) {
  const std::size_t n = entries.size();
  // cuts[k] is the first position of piece k+1.
  std::vector<std::size_t> cuts(static_cast<std::size_t>(parts - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + static_cast<std::size_t>(parts) - 1; j < n; ++j) {
      if (!contiguous(values_of(entries, i, j))) continue;
      // Enumerate strictly increasing cut positions in (i, j].
      std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t k, std::size_t from) -> bool {
        if (k == cuts.size()) {
          std::vector<std::set<int>> pieces;
          std::size_t start = i;
          for (std::size_t c : cuts) {
            pieces.push_back(values_of(entries, start, c - 1));
            start = c;
          }
          pieces.push_back(values_of(entries, start, j));
          if (!std::all_of(pieces.begin(), pieces.end(), contiguous)) return false;
          bool up = true;
          bool down = true;
          for (std::size_t p = 0; p + 1 < pieces.size(); ++p) {
            up = up && *pieces[p].rbegin() + 1 == *pieces[p + 1].begin();
            down = down && *pieces[p + 1].rbegin() + 1 == *pieces[p].begin();
          }
          return up || down;
        }
        for (std::size_t c = from; c <= j; ++c) {
          cuts[k] = c;
          if (place(k + 1, c + 1)) return true;
        }
        return false;
      };
      if (place(0, i + 1)) return true;
    }
  }
  return false;
}

bool penetrates_geometrically(int m, const Chord& chord, std::span<const int> tuple) {
  struct P {
    double x, y;
  };
  const auto vertex = [m](int i) {
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * (i - 1) / m;
    return P{std::cos(angle), std::sin(angle)};
  };
  const auto cross = [](P o, P a, P b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };

  std::vector<P> hull;
  for (int v : tuple) hull.push_back(vertex(v));
  P centroid{0, 0};
  for (const auto& p : hull) {
    centroid.x += p.x / static_cast<double>(hull.size());
    centroid.y += p.y / static_cast<double>(hull.size());
  }

  const P a = vertex(chord.u);
  const P b = vertex(chord.v);
  constexpr double eps = 1e-9;
  double lo = 0.0;
  double hi = 1.0;
  // Each edge contributes a half-plane f(t) = c0 + c1 t > eps, oriented toward the centroid.
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const P p = hull[i];
    const P q = hull[(i + 1) % hull.size()];
    const double side = cross(p, q, centroid) > 0 ? 1.0 : -1.0;
    const double c0 = side * cross(p, q, a);
    const double c1 = side * cross(p, q, b) - c0;
    if (std::fabs(c1) < 1e-12) {
      if (c0 <= eps) return false;
      continue;
    }
    const double t = (eps - c0) / c1;
    if (c1 > 0)
      lo = std::max(lo, t);
    else
      hi = std::min(hi, t);
  }
  return hi - lo > 1e-7;
}

std::set<std::vector<Chord>> filter_all_subsets(int m, DissectionClass cls) {
  std::vector<Chord> diagonals;
  for (int u = 1; u <= m; ++u)
    for (int v = u + 2; v <= m; ++v)
      if (!(u == 1 && v == m)) diagonals.push_back({u, v});
  std::set<std::vector<Chord>> out;
  const std::uint64_t subsets = std::uint64_t{1} << diagonals.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::vector<Chord> chosen;
    for (std::size_t i = 0; i < diagonals.size(); ++i)
      if ((s >> i) & 1U) chosen.push_back(diagonals[i]);
    const Dissection d(m, chosen);
    if (in_class(d, cls)) out.insert(d.diagonals());
  }
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    fn(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

namespace {

struct Tokenizer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  std::string next() {
    skip_space();
    if (pos >= text.size()) throw std::runtime_error("unexpected end of input");
    const char c = text[pos];
    if (c == '"') {
      std::string out = "\"";
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\') out += text[pos++];
        out += text[pos++];
      }
      if (pos >= text.size()) throw std::runtime_error("unterminated string");
      ++pos;
      return out + "\"";
    }
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
      pos += 2;
      return "->";
    }
    if (std::string("{}[];=,").find(c) != std::string::npos) {
      ++pos;
      return std::string(1, c);
    }
    std::string out;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                 text[pos] == '.'))
      out += text[pos++];
    if (out.empty()) throw std::runtime_error(std::string("unexpected character '") + c + "'");
    return out;
  }
};

}  // namespace

DotGraph parse_dot(const std::string& text) {
  Tokenizer tok{text};
  DotGraph g;
  if (tok.next() != "digraph") throw std::runtime_error("expected digraph");
  std::string t = tok.next();
  if (t != "{") t = tok.next();
  if (t != "{") throw std::runtime_error("expected {");

  const auto read_attrs = [&](std::vector<std::pair<std::string, std::string>>& attrs) {
    while (true) {
      std::string key = tok.next();
      if (key == "]") return;
      if (key == ",") continue;
      if (tok.next() != "=") throw std::runtime_error("expected = in attribute list");
      attrs.emplace_back(key, tok.next());
    }
  };

  while (true) {
    std::string first = tok.next();
    if (first == "}") break;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::string t2 = tok.next();
    if (first == "graph" || first == "node" || first == "edge") {
      if (t2 != "[") throw std::runtime_error("expected [ after " + first);
      read_attrs(attrs);
      if (first == "graph")
        for (const auto& [k, v] : attrs)
          if (k == "ordering" && v == "out") g.ordering_out = true;
      t2 = tok.next();
    } else if (t2 == "->") {
      const std::string target = tok.next();
      g.edges.emplace_back(first, target);
      t2 = tok.next();
      if (t2 == "[") {
        read_attrs(attrs);
        t2 = tok.next();
      }
    } else {
      g.nodes.push_back(first);
      if (t2 == "[") {
        read_attrs(attrs);
        t2 = tok.next();
      }
    }
    if (t2 != ";") throw std::runtime_error("expected ; after statement, got " + t2);
  }
  if (!tok.done()) throw std::runtime_error("trailing content after graph");
  for (const auto& [from, to] : g.edges)
    if (std::find(g.nodes.begin(), g.nodes.end(), from) == g.nodes.end() ||
        std::find(g.nodes.begin(), g.nodes.end(), to) == g.nodes.end())
      throw std::runtime_error("edge references undeclared node");
  return g;
}

std::vector<XmlElement> parse_xml(const std::string& text) {
  std::vector<XmlElement> elements;
  std::vector<std::string> stack;
  bool root_seen = false;
  std::size_t pos = 0;

  const auto is_name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.';
  };
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto read_name = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (pos == start) throw std::runtime_error("expected a name at offset " + std::to_string(start));
    return text.substr(start, pos - start);
  };

  if (text.compare(0, 5, "<?xml") == 0) {
    pos = text.find("?>");
    if (pos == std::string::npos) throw std::runtime_error("unterminated prolog");
    pos += 2;
  }

  while (true) {
    const std::size_t lt = text.find('<', pos);
    const std::string between = text.substr(pos, lt == std::string::npos ? std::string::npos : lt - pos);
    if (stack.empty() && between.find_first_not_of(" \t\r\n") != std::string::npos)
      throw std::runtime_error("text outside the root element");
    if (between.find('>') != std::string::npos) throw std::runtime_error("stray '>'");
    for (std::size_t amp = between.find('&'); amp != std::string::npos; amp = between.find('&', amp + 1))
      if (between.find(';', amp) == std::string::npos) throw std::runtime_error("bad entity");
    if (lt == std::string::npos) break;
    pos = lt + 1;

    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      const std::string name = read_name();
      skip_space();
      if (pos >= text.size() || text[pos] != '>') throw std::runtime_error("expected > in closing tag");
      ++pos;
      if (stack.empty() || stack.back() != name) throw std::runtime_error("mismatched closing tag </" + name + ">");
      stack.pop_back();
      continue;
    }

    if (stack.empty() && root_seen) throw std::runtime_error("more than one root element");
    XmlElement element;
    element.name = read_name();
    while (true) {
      skip_space();
      if (pos >= text.size()) throw std::runtime_error("unterminated tag");
      if (text[pos] == '/' || text[pos] == '>') break;
      const std::string key = read_name();
      skip_space();
      if (pos >= text.size() || text[pos] != '=') throw std::runtime_error("expected = after attribute " + key);
      ++pos;
      skip_space();
      if (pos >= text.size() || text[pos] != '"') throw std::runtime_error("attribute values must be quoted");
      const std::size_t close = text.find('"', pos + 1);
      if (close == std::string::npos) throw std::runtime_error("unterminated attribute value");
      const std::string value = text.substr(pos + 1, close - pos - 1);
      if (value.find('<') != std::string::npos) throw std::runtime_error("'<' in attribute value");
      for (const auto& [k, v] : element.attributes)
        if (k == key) throw std::runtime_error("duplicate attribute " + key);
      element.attributes.emplace_back(key, value);
      pos = close + 1;
    }
    root_seen = true;
    if (text[pos] == '/') {
      ++pos;
      if (pos >= text.size() || text[pos] != '>') throw std::runtime_error("expected /> ");
      ++pos;
    } else {
      ++pos;
      stack.push_back(element.name);
    }
    elements.push_back(std::move(element));
  }
  if (!stack.empty()) throw std::runtime_error("unclosed element <" + stack.back() + ">");
  if (!root_seen) throw std::runtime_error("no root element");
  return elements;
}

}  // namespace ipd::oracle
