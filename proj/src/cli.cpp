#include "ipd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "ipd/bijection.hpp"
#include "ipd/census.hpp"
#include "ipd/error.hpp"
#include "ipd/perm.hpp"
#include "ipd/polygon.hpp"
#include "ipd/poset.hpp"
#include "ipd/render.hpp"

namespace ipd::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

// "{1} {2} [1,2]": by length, then by minimum.
std::string format_interval_list(std::vector<ValueInterval> intervals) {
  std::stable_sort(intervals.begin(), intervals.end(),
                   [](const ValueInterval& a, const ValueInterval& b) { return a.length() < b.length(); });
  std::string out;
  for (const auto& v : intervals) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

// Accepts "u,v", "u-v", "{u,v}" tokens, or a flat list of integers read pairwise.
std::vector<Chord> parse_chords(const std::vector<std::string>& tokens) {
  std::vector<int> numbers;
  for (const auto& token : tokens) {
    std::string cleaned;
    for (char c : token) cleaned += (c == ',' || c == '-' || c == '{' || c == '}') ? ' ' : c;
    std::istringstream in(cleaned);
    int value = 0;
    while (in >> value) numbers.push_back(value);
    if (!in.eof()) throw std::invalid_argument("bad chord token \"" + token + "\"");
  }
  if (numbers.size() % 2 != 0) throw std::invalid_argument("chords need an even number of endpoints");
  std::vector<Chord> chords;
  for (std::size_t i = 0; i < numbers.size(); i += 2) chords.push_back({numbers[i], numbers[i + 1]});
  return chords;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct CapFlags {
  CensusOptions options;

  void attach(CLI::App* cmd) {
    cmd->add_option("--cap-all", options.cap_all, "Largest n for the all-posets census")->capture_default_str();
    cmd->add_option("--cap-tree", options.cap_tree, "Largest n for the tree census")->capture_default_str();
    cmd->add_option("--cap-blockwise", options.cap_blockwise, "Largest n for the block-wise census")
        ->capture_default_str();
    cmd->add_option("--cap-framed-m", options.framed_cap, "Largest polygon for framed enumeration")
        ->capture_default_str();
    cmd->add_option("--cap-noncrossing-m", options.noncrossing_cap, "Largest polygon for non-crossing enumeration")
        ->capture_default_str();
    cmd->add_option("--cap-realize", options.cap_realize, "Largest n for realize")->capture_default_str();
    cmd->add_option("--cap-identities", options.cap_identities, "Largest n for identity checks")
        ->capture_default_str();
    cmd->add_option("--cap-forward", options.cap_forward, "Largest n for forward theorem checks")
        ->capture_default_str();
  }
};

void print_bundle(std::ostream& out, const std::string& label, const VerdictBundle& bundle) {
  for (const auto& c : bundle.checks) {
    out << "n=" << bundle.n << ' ' << label << ": " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << " ("
        << c.examined << " examined)";
    if (!c.passed) out << "  counterexample: " << c.counterexample;
    out << '\n';
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval posets of permutations and their polygon dissections", "ipd"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for census and enumeration (0 = all cores)");

  std::string perm_text;

  auto* intervals_cmd = app.add_subcommand("intervals", "Print every interval of a permutation");
  intervals_cmd->add_option("perm", perm_text, "Permutation, e.g. 2413 or \"10 3 1 2 ...\"")->required();

  auto* poset_cmd = app.add_subcommand("poset", "Print the interval poset and its Hasse edges");
  poset_cmd->add_option("perm", perm_text)->required();

  bool show_image = false;
  auto* classify_cmd = app.add_subcommand("classify", "Simple / block-wise simple / tree flags");
  classify_cmd->add_option("perm", perm_text)->required();
  classify_cmd->add_flag("--image", show_image, "Also classify the polygon image");

  auto* phi_cmd = app.add_subcommand("phi", "Print the dissection corresponding to P(perm)");
  phi_cmd->add_option("perm", perm_text)->required();

  int inverse_m = 0;
  std::vector<std::string> chord_tokens;
  auto* inverse_cmd = app.add_subcommand("inverse", "Print the interval family read off a dissection");
  inverse_cmd->add_option("m", inverse_m, "Polygon vertex count")->required();
  inverse_cmd->add_option("chords", chord_tokens, "Diagonals as u,v");

  int realize_n = 0;
  std::string intervals_path;
  CapFlags realize_caps;
  auto* realize_cmd = app.add_subcommand("realize", "Find the smallest permutation with the given intervals");
  realize_cmd->add_option("--n", realize_n, "Permutation order")->required();
  realize_cmd->add_option("--intervals", intervals_path, "File of \"lo hi\" lines")->required();
  realize_caps.attach(realize_cmd);

  int max_n = 0;
  int min_n = 0;
  std::string family_name;
  std::string oeis_path;
  int offset = 0;
  std::string out_path;
  bool no_timing = false;
  bool order_one_excluded = false;
  CapFlags census_caps;
  auto* census_cmd = app.add_subcommand("census", "Count distinct posets against dissections");
  census_cmd->add_option("--max-n", max_n, "Largest order")->required();
  census_cmd->add_option("--min-n", min_n, "Smallest order (default 1, or 4 for blockwise)");
  census_cmd->add_option("--class", family_name, "all | tree | blockwise")
      ->required()
      ->check(CLI::IsMember({"all", "tree", "blockwise"}));
  census_cmd->add_option("--oeis", oeis_path, "b-file to compare against");
  census_cmd->add_option("--offset", offset, "order n = b-file index + offset");
  census_cmd->add_option("--out", out_path, "Write the JSON report here");
  census_cmd->add_flag("--no-timing", no_timing, "Report elapsed times as 0");
  census_cmd->add_flag("--order-one-excluded", order_one_excluded, "Do not count order 1 as block-wise simple");
  census_caps.attach(census_cmd);

  int verify_max_n = 0;
  CapFlags verify_caps;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity and forward theorem checks");
  verify_cmd->add_option("--max-n", verify_max_n, "Largest order")->required();
  verify_caps.attach(verify_cmd);

  std::string render_poset;
  std::string render_polygon;
  std::string render_dissection;
  std::string render_format;
  std::string render_out;
  auto* render_cmd = app.add_subcommand("render", "Emit a Hasse diagram (dot) or chord diagram (svg)");
  auto* poset_opt = render_cmd->add_option("--poset", render_poset, "Permutation whose poset to draw");
  auto* polygon_opt = render_cmd->add_option("--polygon", render_polygon, "Permutation whose phi-image to draw");
  auto* dissection_opt = render_cmd->add_option("--dissection", render_dissection, "Dissection file to draw");
  poset_opt->excludes(polygon_opt)->excludes(dissection_opt);
  polygon_opt->excludes(dissection_opt);
  render_cmd->add_option("--format", render_format, "dot | svg")->check(CLI::IsMember({"dot", "svg"}));
  render_cmd->add_option("--out", render_out, "Output file (default stdout)");

  std::vector<std::string> argv_storage{"ipd"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const auto with_threads = [&](CensusOptions options) {
    options.threads = threads;
    return options;
  };

  try {
    if (*intervals_cmd) {
      out << format_interval_list(all_intervals(parse_permutation(perm_text))) << '\n';
      return kSuccess;
    }
    if (*poset_cmd) {
      const IntervalPoset poset = poset_of(parse_permutation(perm_text));
      out << format_poset(poset) << "# hasse\n";
      for (const auto& e : hasse_edges(poset)) out << "# " << to_string(e.parent) << " -> " << to_string(e.child) << '\n';
      return kSuccess;
    }
    if (*classify_cmd) {
      const Permutation p = parse_permutation(perm_text);
      out << "simple: " << yes_no(is_simple(p)) << ", block-wise simple: " << yes_no(is_block_wise_simple(p))
          << ", tree poset: " << yes_no(is_tree(poset_of(p))) << '\n';
      if (show_image && p.size() >= 2) out << to_string(classify_image(poset_of(p))) << '\n';
      return kSuccess;
    }
    if (*phi_cmd) {
      out << format_dissection(phi(poset_of(parse_permutation(perm_text))));
      return kSuccess;
    }
    if (*inverse_cmd) {
      const Dissection d(inverse_m, parse_chords(chord_tokens));
      const IntervalPoset poset = phi_inverse(d);
      out << format_poset(poset);
      const FamilyVerdict verdict = validate_interval_family(poset.intervals(), poset.size());
      out << "# necessary conditions: " << (verdict.passed() ? "not refuted" : verdict.message) << '\n';
      return kSuccess;
    }
    if (*realize_cmd) {
      std::vector<ValueInterval> intervals;
      const int header = parse_interval_lines(read_file(intervals_path), intervals);
      if (header != -1 && header != realize_n)
        throw std::invalid_argument("file header says n " + std::to_string(header) + " but --n is " +
                                    std::to_string(realize_n));
      const auto found = realize(intervals, realize_n, with_threads(realize_caps.options));
      out << (found ? found->to_string() : std::string("none")) << '\n';
      return kSuccess;
    }
    if (*census_cmd) {
      const PosetFamily family = *parse_family(family_name);
      CensusOptions options = with_threads(census_caps.options);
      options.order_one = order_one_excluded ? OrderOneConvention::Excluded : OrderOneConvention::Included;
      if (min_n == 0) min_n = family == PosetFamily::BlockwiseSimple ? kBlockwiseFirstOrder : 1;
      const CensusReport report = run_census(family, min_n, max_n, options);
      out << report_text(report, !no_timing);
      if (!out_path.empty()) write_file(out_path, report_json(report, !no_timing));
      bool ok = report.all_match();
      if (!oeis_path.empty()) {
        const auto bfile = load_bfile(read_file(oeis_path));
        const auto rows = align_with_bfile(report, bfile, offset);
        out << format_alignment(rows, bfile, offset);
        ok = ok && alignment_matches(rows);
      }
      return ok ? kSuccess : kMismatch;
    }
    if (*verify_cmd) {
      const CensusOptions options = with_threads(verify_caps.options);
      if (verify_max_n > options.cap_identities)
        throw CapExceeded("verify --max-n", verify_max_n, options.cap_identities);
      bool ok = true;
      for (int n = 1; n <= verify_max_n; ++n) {
        const VerdictBundle identities = check_identities(n, options);
        const VerdictBundle forward = check_forward_theorems(n, options);
        print_bundle(out, "identities", identities);
        print_bundle(out, "forward", forward);
        ok = ok && identities.passed() && forward.passed();
      }
      out << (ok ? "all checks passed\n" : "VERIFICATION FAILED\n");
      return ok ? kSuccess : kMismatch;
    }
    if (*render_cmd) {
      std::string text;
      if (!render_poset.empty()) {
        if (!render_format.empty() && render_format != "dot") throw std::invalid_argument("posets render as dot");
        text = poset_to_dot(poset_of(parse_permutation(render_poset)));
      } else if (!render_polygon.empty() || !render_dissection.empty()) {
        if (!render_format.empty() && render_format != "svg") throw std::invalid_argument("polygons render as svg");
        const Dissection d = render_polygon.empty() ? parse_dissection(read_file(render_dissection))
                                                    : phi(poset_of(parse_permutation(render_polygon)));
        text = dissection_to_svg(d);
      } else {
        throw std::invalid_argument("render needs --poset, --polygon or --dissection");
      }
      if (render_out.empty())
        out << text;
      else
        write_file(render_out, text);
      return kSuccess;
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ipd::cli
