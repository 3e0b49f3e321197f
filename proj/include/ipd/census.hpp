#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ipd/perm.hpp"
#include "ipd/polygon.hpp"
#include "ipd/poset.hpp"

namespace ipd {

enum class PosetFamily { All, Tree, BlockwiseSimple };

/// "all", "tree", "blockwise".
std::string_view to_string(PosetFamily family);
std::optional<PosetFamily> parse_family(std::string_view name);

/// All <-> FramedQuadFree, Tree <-> NonCrossingQuadFree, BlockwiseSimple <-> NonCrossingTriQuadFree.
DissectionClass paired_class(PosetFamily family);

/// The block-wise count sequence starts at this order; orders 2 and 3 have no block-wise
/// simple permutations and order 1 depends on OrderOneConvention.
inline constexpr int kBlockwiseFirstOrder = 4;

struct CensusOptions {
  int cap_all = 8;
  int cap_tree = 9;
  int cap_blockwise = 10;
  int cap_realize = 8;
  int cap_identities = 8;
  int cap_forward = 9;
  /// 0 picks std::thread::hardware_concurrency(). Results never depend on it.
  unsigned threads = 0;
  OrderOneConvention order_one = OrderOneConvention::Included;
  int framed_cap = 9;
  int noncrossing_cap = 11;

  EnumerationOptions enumeration() const { return {framed_cap, noncrossing_cap, threads}; }
};

struct PosetCensus {
  std::uint64_t count = 0;
  /// Canonical keys with their lexicographically smallest realizer, sorted by key.
  std::vector<std::pair<std::string, Permutation>> posets;
};

/// Distinct interval posets over S_n whose permutation (BlockwiseSimple) or poset (Tree)
/// satisfies the family predicate. Throws CapExceeded.
PosetCensus distinct_posets(int n, PosetFamily family, const CensusOptions& options = {});

/// Size of the dissection class of the m-gon. Throws CapExceeded.
std::uint64_t count_dissections(int m, DissectionClass cls, const CensusOptions& options = {});

struct CensusRow {
  int n = 0;
  PosetFamily family = PosetFamily::All;
  std::uint64_t poset_count = 0;
  std::uint64_t dissection_count = 0;
  bool match = false;
  double elapsed_ms = 0;
};

/// Both sides of the pairing at m = n + 1.
CensusRow compare_counts(int n, PosetFamily family, const CensusOptions& options = {});

struct SmallOrderRow {
  int n = 0;
  std::uint64_t poset_count_included = 0;
  std::uint64_t poset_count_excluded = 0;
  std::uint64_t dissection_count = 0;
};

struct CensusReport {
  PosetFamily family = PosetFamily::All;
  std::vector<CensusRow> rows;
  std::vector<std::pair<std::string, std::string>> conventions;
  /// Block-wise orders below kBlockwiseFirstOrder under both order-one conventions.
  std::vector<SmallOrderRow> small_orders;

  bool all_match() const;
};

/// Rows for min_n..max_n in ascending order.
CensusReport run_census(PosetFamily family, int min_n, int max_n, const CensusOptions& options = {});

/// `{rows:[{n, class, poset_count, dissection_count, match, elapsed_ms}], conventions:{...}}`.
std::string report_json(const CensusReport& report, bool with_timing = true);
std::string report_text(const CensusReport& report, bool with_timing = true);

/// Lexicographically smallest permutation whose interval set is exactly `intervals`.
/// Throws CapExceeded for n above options.cap_realize.
std::optional<Permutation> realize(std::span<const ValueInterval> intervals, int n,
                                   const CensusOptions& options = {});

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t examined = 0;
  /// Empty when passed.
  std::string counterexample;
};

struct VerdictBundle {
  int n = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Exhaustive over S_n: simple permutations share one poset; overlap closure holds; no
/// element has exactly 3 direct descendants; tree poset <=> no triple-sum interval.
VerdictBundle check_identities(int n, const CensusOptions& options = {});

/// Exhaustive over S_n: phi(P(s)) is framed and quad-free; tree posets map to non-crossing
/// dissections; block-wise simple permutations map to non-crossing, triangle-free and
/// quad-free dissections.
VerdictBundle check_forward_theorems(int n, const CensusOptions& options = {});

struct ImageComparison {
  std::uint64_t image_count = 0;
  std::uint64_t class_count = 0;
  /// Witnesses in dissection text format, at most a few of each.
  std::vector<std::string> images_outside_class;
  std::vector<std::string> class_outside_images;

  bool equal() const { return images_outside_class.empty() && class_outside_images.empty() && image_count == class_count; }
};

/// phi-images of the family's distinct posets of order n versus the paired dissection class
/// of the (n+1)-gon, compared as sets of diagonal sets.
ImageComparison compare_image_with_class(int n, PosetFamily family, const CensusOptions& options = {});

struct RealizationSweep {
  std::uint64_t checked = 0;
  std::vector<Dissection> unrealized;
};

/// realize(phi_inverse(D)) for every member D of the class of the m-gon.
RealizationSweep realize_class(int m, DissectionClass cls, const CensusOptions& options = {});

struct BFileEntry {
  long long index = 0;
  std::uint64_t value = 0;

  bool operator==(const BFileEntry&) const = default;
};

/// OEIS b-file: "index value" lines; blank and '#' lines ignored. Throws MalformedLine.
std::vector<BFileEntry> load_bfile(std::string_view text);

struct AlignmentRow {
  int n = 0;
  long long oeis_index = 0;
  std::optional<std::uint64_t> oeis_value;
  std::uint64_t poset_count = 0;
  std::uint64_t dissection_count = 0;

  /// Empty when the b-file has no term at this index.
  std::optional<bool> agrees() const {
    if (!oeis_value) return std::nullopt;
    return *oeis_value == poset_count && *oeis_value == dissection_count;
  }
};

/// Pairs each census row of order n with b-file index n - offset.
std::vector<AlignmentRow> align_with_bfile(const CensusReport& report, std::span<const BFileEntry> bfile,
                                           int offset);

bool alignment_matches(std::span<const AlignmentRow> rows);

/// Alignment table plus both raw sequences, so an offset error is visible.
std::string format_alignment(std::span<const AlignmentRow> rows, std::span<const BFileEntry> bfile, int offset);

}  // namespace ipd
