#include "ipd/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "ipd/bijection.hpp"
#include "ipd/error.hpp"
#include "text_lines.hpp"

namespace ipd {

std::string_view to_string(PosetFamily family) {
  switch (family) {
    case PosetFamily::All: return "all";
    case PosetFamily::Tree: return "tree";
    case PosetFamily::BlockwiseSimple: return "blockwise";
  }
  return "unknown";
}

std::optional<PosetFamily> parse_family(std::string_view name) {
  if (name == "all") return PosetFamily::All;
  if (name == "tree") return PosetFamily::Tree;
  if (name == "blockwise") return PosetFamily::BlockwiseSimple;
  return std::nullopt;
}

DissectionClass paired_class(PosetFamily family) {
  switch (family) {
    case PosetFamily::All: return DissectionClass::FramedQuadFree;
    case PosetFamily::Tree: return DissectionClass::NonCrossingQuadFree;
    case PosetFamily::BlockwiseSimple: return DissectionClass::NonCrossingTriQuadFree;
  }
  return DissectionClass::FramedQuadFree;
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Splits S_n into n blocks by first entry; each block is walked in lexicographic order
// with its own State. States come back in block order, so merging them in order reproduces
// a sequential lexicographic sweep.
template <typename State, typename Visit>
std::vector<State> over_symmetric_group(int n, unsigned threads, Visit&& visit) {
  std::vector<State> states(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int block = next++; block < n; block = next++) {
      std::vector<int> entries;
      entries.push_back(block + 1);
      for (int v = 1; v <= n; ++v)
        if (v != block + 1) entries.push_back(v);
      do {
        visit(Permutation(entries), states[static_cast<std::size_t>(block)]);
      } while (std::next_permutation(entries.begin() + 1, entries.end()));
    }
  };
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return states;
}

int family_cap(PosetFamily family, const CensusOptions& options) {
  switch (family) {
    case PosetFamily::All: return options.cap_all;
    case PosetFamily::Tree: return options.cap_tree;
    case PosetFamily::BlockwiseSimple: return options.cap_blockwise;
  }
  return 0;
}

void require_order(int n, int cap, const std::string& what) {
  if (n < 1) throw std::invalid_argument(what + ": order must be >= 1");
  if (n > cap) throw CapExceeded(what + " n", n, cap);
}

// Distinct posets with their first (lexicographically smallest) realizer.
using RealizerMap = std::unordered_map<std::string, Permutation>;

template <typename Block, typename Project>
std::map<std::string, Permutation> merge_in_order(const std::vector<Block>& blocks, Project&& project) {
  std::map<std::string, Permutation> merged;
  for (const auto& block : blocks)
    for (const auto& [key, rep] : project(block)) {
      const auto it = merged.find(key);
      if (it == merged.end())
        merged.emplace(key, rep);
      else if (rep < it->second)
        it->second = rep;
    }
  return merged;
}

const RealizerMap& itself(const RealizerMap& m) { return m; }

}  // namespace

PosetCensus distinct_posets(int n, PosetFamily family, const CensusOptions& options) {
  require_order(n, family_cap(family, options), "distinct_posets(" + std::string(to_string(family)) + ")");
  auto blocks = over_symmetric_group<RealizerMap>(n, resolve_threads(options.threads),
                                                  [&](const Permutation& p, RealizerMap& seen) {
                                                    if (family == PosetFamily::BlockwiseSimple &&
                                                        !is_block_wise_simple(p, options.order_one))
                                                      return;
                                                    seen.try_emplace(canonical_key(poset_of(p)), p);
                                                  });
  PosetCensus census;
  for (auto& [key, rep] : merge_in_order(blocks, itself)) {
    // Tree-ness is a property of the poset, so it is tested once per distinct key.
    if (family == PosetFamily::Tree && !is_tree(poset_of(rep))) continue;
    census.posets.emplace_back(key, rep);
  }
  census.count = census.posets.size();
  return census;
}

std::uint64_t count_dissections(int m, DissectionClass cls, const CensusOptions& options) {
  return tally_dissections(m, cls, options.enumeration());
}

CensusRow compare_counts(int n, PosetFamily family, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CensusRow row;
  row.n = n;
  row.family = family;
  row.poset_count = distinct_posets(n, family, options).count;
  row.dissection_count = count_dissections(n + 1, paired_class(family), options);
  row.match = row.poset_count == row.dissection_count;
  row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

bool CensusReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.match; });
}

CensusReport run_census(PosetFamily family, int min_n, int max_n, const CensusOptions& options) {
  if (min_n < 1 || min_n > max_n) throw std::invalid_argument("census needs 1 <= min_n <= max_n");
  // Fail fast on caps before doing any work.
  require_order(max_n, family_cap(family, options), "census(" + std::string(to_string(family)) + ")");
  const int m_cap = paired_class(family) == DissectionClass::FramedQuadFree ? options.framed_cap
                                                                            : options.noncrossing_cap;
  if (max_n + 1 > m_cap) throw CapExceeded("census polygon m", max_n + 1, m_cap);

  CensusReport report;
  report.family = family;
  for (int n = min_n; n <= max_n; ++n) report.rows.push_back(compare_counts(n, family, options));

  report.conventions.emplace_back("class", std::string(to_string(family)));
  report.conventions.emplace_back("dissection_class", std::string(to_string(paired_class(family))));
  report.conventions.emplace_back("polygon_vertices", "n+1");
  if (family == PosetFamily::BlockwiseSimple) {
    report.conventions.emplace_back(
        "order_one_blockwise", options.order_one == OrderOneConvention::Included ? "included" : "excluded");
    report.conventions.emplace_back("blockwise_first_order", std::to_string(kBlockwiseFirstOrder));
    CensusOptions included = options;
    included.order_one = OrderOneConvention::Included;
    CensusOptions excluded = options;
    excluded.order_one = OrderOneConvention::Excluded;
    for (int n = 1; n < kBlockwiseFirstOrder; ++n) {
      SmallOrderRow row;
      row.n = n;
      row.poset_count_included = distinct_posets(n, family, included).count;
      row.poset_count_excluded = distinct_posets(n, family, excluded).count;
      row.dissection_count = count_dissections(n + 1, paired_class(family), options);
      report.small_orders.push_back(row);
    }
  }
  return report;
}

std::string report_json(const CensusReport& report, bool with_timing) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["class"] = std::string(to_string(r.family));
    row["poset_count"] = r.poset_count;
    row["dissection_count"] = r.dissection_count;
    row["match"] = r.match;
    row["elapsed_ms"] = with_timing ? r.elapsed_ms : 0.0;
    doc["rows"].push_back(row);
  }
  nlohmann::ordered_json conventions = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.conventions) conventions[k] = v;
  if (!report.small_orders.empty()) {
    conventions["small_orders"] = nlohmann::ordered_json::array();
    for (const auto& s : report.small_orders)
      conventions["small_orders"].push_back({{"n", s.n},
                                             {"poset_count_order_one_included", s.poset_count_included},
                                             {"poset_count_order_one_excluded", s.poset_count_excluded},
                                             {"dissection_count", s.dissection_count}});
  }
  doc["conventions"] = conventions;
  doc["all_match"] = report.all_match();
  return doc.dump(2) + "\n";
}

std::string report_text(const CensusReport& report, bool with_timing) {
  std::ostringstream out;
  out << "census " << to_string(report.family) << " vs " << to_string(paired_class(report.family))
      << " on the (n+1)-gon\n";
  out << std::setw(4) << "n" << std::setw(12) << "posets" << std::setw(14) << "dissections" << std::setw(8)
      << "match";
  if (with_timing) out << std::setw(14) << "elapsed_ms";
  out << '\n';
  for (const auto& r : report.rows) {
    out << std::setw(4) << r.n << std::setw(12) << r.poset_count << std::setw(14) << r.dissection_count
        << std::setw(8) << (r.match ? "yes" : "NO");
    if (with_timing) out << std::setw(14) << std::fixed << std::setprecision(1) << r.elapsed_ms;
    out << '\n';
  }
  for (const auto& [k, v] : report.conventions) out << "# " << k << ": " << v << '\n';
  for (const auto& s : report.small_orders)
    out << "# small order n=" << s.n << ": posets " << s.poset_count_included << " (order one included) / "
        << s.poset_count_excluded << " (excluded), dissections " << s.dissection_count << '\n';
  out << (report.all_match() ? "all rows match\n" : "MISMATCH\n");
  return out.str();
}

std::optional<Permutation> realize(std::span<const ValueInterval> intervals, int n, const CensusOptions& options) {
  require_order(n, options.cap_realize, "realize");
  std::vector<ValueInterval> target(intervals.begin(), intervals.end());
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());

  std::vector<int> entries(static_cast<std::size_t>(n));
  std::iota(entries.begin(), entries.end(), 1);
  do {
    const Permutation p(entries);
    if (all_intervals(p) == target) return p;
  } while (std::next_permutation(entries.begin(), entries.end()));
  return std::nullopt;
}

bool VerdictBundle::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

CheckResult named_check(std::string name) {
  CheckResult check;
  check.name = std::move(name);
  return check;
}

void fail(CheckResult& check, const std::string& why) {
  if (!check.passed) return;
  check.passed = false;
  check.counterexample = why;
}

}  // namespace

VerdictBundle check_identities(int n, const CensusOptions& options) {
  require_order(n, options.cap_identities, "check_identities");

  struct BlockState {
    RealizerMap posets;
    std::unordered_map<std::string, bool> tree_cache;
    std::set<std::string> simple_keys;
    std::string first_simple;
    CheckResult tree_sum = named_check("tree poset iff no triple-sum interval");
  };
  auto blocks = over_symmetric_group<BlockState>(n, resolve_threads(options.threads),
                                                 [&](const Permutation& p, BlockState& s) {
    const IntervalPoset poset = poset_of(p);
    const std::string key = canonical_key(poset);
    s.posets.try_emplace(key, p);
    if (is_simple(p) && s.simple_keys.insert(key).second && s.first_simple.empty()) s.first_simple = p.to_string();
    auto [it, fresh] = s.tree_cache.try_emplace(key, false);
    if (fresh) it->second = is_tree(poset);
    ++s.tree_sum.examined;
    const bool triple = has_sum_interval(p, 3);
    if (it->second == triple)
      fail(s.tree_sum, p.to_string() + ": tree=" + (it->second ? "true" : "false") +
                         " but triple-sum interval=" + (triple ? "true" : "false"));
  });

  VerdictBundle bundle;
  bundle.n = n;
  CheckResult shared = named_check("simple permutations share one poset");
  CheckResult closure = named_check("overlap closure (union, intersection, differences)");
  CheckResult three = named_check("no element with exactly 3 direct descendants");
  CheckResult tree_sum = named_check("tree poset iff no triple-sum interval");

  std::set<std::string> simple_keys;
  for (const auto& b : blocks) {
    simple_keys.insert(b.simple_keys.begin(), b.simple_keys.end());
    tree_sum.examined += b.tree_sum.examined;
    if (!b.tree_sum.passed) fail(tree_sum, b.tree_sum.counterexample);
  }
  shared.examined = simple_keys.size();
  if (simple_keys.size() > 1) fail(shared, "distinct keys " + *simple_keys.begin() + " and " + *simple_keys.rbegin());

  for (const auto& [key, rep] : merge_in_order(blocks, [](const BlockState& b) -> const RealizerMap& {
         return b.posets;
       })) {
    const IntervalPoset poset = poset_of(rep);
    ++closure.examined;
    ++three.examined;
    const FamilyVerdict verdict = validate_interval_family(poset.intervals(), n);
    if (verdict.failure != FamilyVerdict::Failure::None && verdict.failure != FamilyVerdict::Failure::ThreeDescendants)
      fail(closure, rep.to_string() + ": " + verdict.message);
    const auto histogram = children_histogram(poset);
    if (histogram.contains(3)) fail(three, rep.to_string() + ": some interval has exactly 3 direct descendants");
  }
  bundle.checks = {shared, closure, three, tree_sum};
  return bundle;
}

VerdictBundle check_forward_theorems(int n, const CensusOptions& options) {
  require_order(n, options.cap_forward, "check_forward_theorems");

  struct Seen {
    Permutation rep;
    bool from_blockwise = false;
    Permutation blockwise_rep;
  };
  using SeenMap = std::unordered_map<std::string, Seen>;
  auto blocks = over_symmetric_group<SeenMap>(n, resolve_threads(options.threads), [&](const Permutation& p, SeenMap& s) {
    const std::string key = canonical_key(poset_of(p));
    auto [it, fresh] = s.try_emplace(key, Seen{p, false, p});
    if (!it->second.from_blockwise && is_block_wise_simple(p, options.order_one)) {
      it->second.from_blockwise = true;
      it->second.blockwise_rep = p;
    }
  });

  std::map<std::string, Seen> merged;
  for (auto& block : blocks)
    for (auto& [key, seen] : block) {
      auto [it, fresh] = merged.try_emplace(key, seen);
      if (fresh) continue;
      if (seen.rep < it->second.rep) it->second.rep = seen.rep;
      if (seen.from_blockwise && (!it->second.from_blockwise || seen.blockwise_rep < it->second.blockwise_rep)) {
        it->second.from_blockwise = true;
        it->second.blockwise_rep = seen.blockwise_rep;
      }
    }

  VerdictBundle bundle;
  bundle.n = n;
  CheckResult general = named_check("phi(P) is diagonally framed and quadrilateral-free");
  CheckResult tree = named_check("tree poset => phi(P) non-crossing");
  CheckResult blockwise = named_check("block-wise simple => phi(P) non-crossing, triangle-free, quadrilateral-free");
  // The polygon predicates start at the triangle.
  if (n >= 2) {
    for (const auto& [key, seen] : merged) {
      const IntervalPoset poset = poset_of(seen.rep);
      const ImageClassification c = classify_image(poset);
      ++general.examined;
      if (!c.diagonally_framed || !c.quad_free) fail(general, seen.rep.to_string() + ": " + to_string(c));
      if (is_tree(poset)) {
        ++tree.examined;
        if (!c.noncrossing) fail(tree, seen.rep.to_string() + ": " + to_string(c));
      }
      if (seen.from_blockwise) {
        ++blockwise.examined;
        if (!c.noncrossing || !c.triangle_free || !c.quad_free)
          fail(blockwise, seen.blockwise_rep.to_string() + ": " + to_string(c));
      }
    }
  }
  bundle.checks = {general, tree, blockwise};
  return bundle;
}

ImageComparison compare_image_with_class(int n, PosetFamily family, const CensusOptions& options) {
  const PosetCensus census = distinct_posets(n, family, options);
  const int m = n + 1;
  const DiagonalIndex index(m);

  std::set<std::uint64_t> images;
  for (const auto& [key, rep] : census.posets) images.insert(index.mask_of(phi(poset_of(rep))));
  std::set<std::uint64_t> members;
  enumerate_dissections(
      m, paired_class(family), [&](const Dissection& d) { members.insert(index.mask_of(d)); },
      options.enumeration());

  constexpr std::size_t kWitnesses = 5;
  ImageComparison out;
  out.image_count = images.size();
  out.class_count = members.size();
  for (auto mask : images)
    if (!members.contains(mask) && out.images_outside_class.size() < kWitnesses)
      out.images_outside_class.push_back(format_dissection(index.from_mask(mask)));
  for (auto mask : members)
    if (!images.contains(mask) && out.class_outside_images.size() < kWitnesses)
      out.class_outside_images.push_back(format_dissection(index.from_mask(mask)));
  return out;
}

RealizationSweep realize_class(int m, DissectionClass cls, const CensusOptions& options) {
  RealizationSweep sweep;
  enumerate_dissections(
      m, cls,
      [&](const Dissection& d) {
        ++sweep.checked;
        const IntervalPoset poset = phi_inverse(d);
        if (!realize(poset.intervals(), poset.size(), options)) sweep.unrealized.push_back(d);
      },
      options.enumeration());
  return sweep;
}

std::vector<BFileEntry> load_bfile(std::string_view text) {
  std::vector<BFileEntry> out;
  for_each_record_line(text, [&](std::size_t line, const std::vector<std::string_view>& fields) {
    if (fields.size() != 2) throw MalformedLine(line, "expected \"index value\"");
    out.push_back({parse_int_field<long long>(line, fields[0]), parse_int_field<std::uint64_t>(line, fields[1])});
  });
  return out;
}

std::vector<AlignmentRow> align_with_bfile(const CensusReport& report, std::span<const BFileEntry> bfile, int offset) {
  std::vector<AlignmentRow> out;
  for (const auto& r : report.rows) {
    AlignmentRow a;
    a.n = r.n;
    a.oeis_index = static_cast<long long>(r.n) - offset;
    a.poset_count = r.poset_count;
    a.dissection_count = r.dissection_count;
    const auto it = std::find_if(bfile.begin(), bfile.end(), [&](const BFileEntry& e) { return e.index == a.oeis_index; });
    if (it != bfile.end()) a.oeis_value = it->value;
    out.push_back(a);
  }
  return out;
}

bool alignment_matches(std::span<const AlignmentRow> rows) {
  bool compared = false;
  for (const auto& r : rows) {
    const auto agrees = r.agrees();
    if (!agrees) continue;
    if (!*agrees) return false;
    compared = true;
  }
  return compared;
}

std::string format_alignment(std::span<const AlignmentRow> rows, std::span<const BFileEntry> bfile, int offset) {
  std::ostringstream out;
  out << "alignment: order n = b-file index + " << offset << '\n';
  out << std::setw(4) << "n" << std::setw(8) << "index" << std::setw(12) << "b-file" << std::setw(12) << "posets"
      << std::setw(14) << "dissections" << std::setw(8) << "agree" << '\n';
  for (const auto& r : rows) {
    out << std::setw(4) << r.n << std::setw(8) << r.oeis_index << std::setw(12)
        << (r.oeis_value ? std::to_string(*r.oeis_value) : std::string("-")) << std::setw(12) << r.poset_count
        << std::setw(14) << r.dissection_count << std::setw(8);
    const auto agrees = r.agrees();
    out << (!agrees ? "n/a" : (*agrees ? "yes" : "NO")) << '\n';
  }
  out << "b-file terms:";
  for (const auto& e : bfile) out << ' ' << e.index << ':' << e.value;
  out << "\nposet counts:";
  for (const auto& r : rows) out << ' ' << r.n << ':' << r.poset_count;
  out << "\ndissection counts:";
  for (const auto& r : rows) out << ' ' << r.n << ':' << r.dissection_count;
  out << '\n' << (alignment_matches(rows) ? "b-file agrees\n" : "b-file MISMATCH\n");
  return out.str();
}

}  // namespace ipd
