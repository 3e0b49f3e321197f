#include <doctest.h>

#include <set>

#include "ipd/error.hpp"
#include "ipd/poset.hpp"
#include "oracles.hpp"

using namespace ipd;

namespace {

std::vector<ValueInterval> with_singletons(int n, std::vector<ValueInterval> extra) {
  for (int i = 1; i <= n; ++i) extra.push_back({i, i});
  return extra;
}

const std::vector<ValueInterval> kSample = with_singletons(7, {{1, 2}, {2, 3}, {1, 3}, {1, 6}, {1, 7}});

}  // namespace

TEST_CASE("poset_of examples") {
  CHECK(poset_of(parse_permutation("5123647")) == IntervalPoset(7, kSample));
  CHECK(poset_of(parse_permutation("2413")) == IntervalPoset(4, with_singletons(4, {{1, 4}})));
  CHECK(poset_of(parse_permutation("1")).intervals() == std::vector<ValueInterval>{{1, 1}});
}

TEST_CASE("IntervalPoset rejects families without trivial intervals") {
  CHECK_THROWS_AS(IntervalPoset(3, {{1, 1}, {2, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalPoset(2, {{1, 1}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalPoset(2, {{1, 1}, {2, 2}, {1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("hasse_children follows the plane embedding") {
  const auto sample = poset_of(parse_permutation("5123647"));
  CHECK(hasse_children(sample, {1, 6}) == std::vector<ValueInterval>{{1, 3}, {4, 4}, {5, 5}, {6, 6}});
  CHECK(hasse_children(sample, {1, 3}) == std::vector<ValueInterval>{{1, 2}, {2, 3}});
  CHECK(hasse_children(sample, {1, 7}) == std::vector<ValueInterval>{{1, 6}, {7, 7}});
  CHECK(hasse_children(poset_of(parse_permutation("2413")), {3, 3}).empty());
  CHECK_THROWS_AS(hasse_children(sample, {2, 4}), ElementNotInPoset);
}

TEST_CASE("is_tree examples") {
  CHECK(is_tree(poset_of(parse_permutation("2413"))));
  CHECK_FALSE(is_tree(poset_of(parse_permutation("5123647"))));
  CHECK(is_tree(poset_of(parse_permutation("1"))));
  CHECK(is_tree(poset_of(parse_permutation("4253716"))));
}

TEST_CASE("children_histogram examples") {
  CHECK(children_histogram(poset_of(parse_permutation("2413"))) == std::map<int, int>{{0, 4}, {4, 1}});
  CHECK(children_histogram(poset_of(parse_permutation("5123647"))) == std::map<int, int>{{0, 7}, {2, 4}, {4, 1}});
  CHECK(children_histogram(poset_of(parse_permutation("1"))) == std::map<int, int>{{0, 1}});
}

TEST_CASE("canonical_key format and a shared eight-member class") {
  CHECK(canonical_key(poset_of(parse_permutation("2413"))) == "4|1-1,1-4,2-2,3-3,4-4");
  CHECK(canonical_key(poset_of(parse_permutation("1"))) == "1|1-1");
  const std::string key = canonical_key(IntervalPoset(7, kSample));
  for (const char* p : {"5123647", "5321647", "4612357", "4632157", "7463215", "7461235", "7532164", "7512364"})
    CHECK_MESSAGE(canonical_key(poset_of(parse_permutation(p))) == key, p);
}

TEST_CASE("validate_interval_family examples") {
  using Failure = FamilyVerdict::Failure;
  const auto closure = validate_interval_family(with_singletons(4, {{1, 2}, {2, 3}, {1, 4}}), 4);
  CHECK(closure.failure == Failure::Closure);
  CHECK(closure.witnesses == std::vector<ValueInterval>{{1, 2}, {2, 3}});
  CHECK(closure.detail == std::vector<ValueInterval>{{1, 3}});

  CHECK(validate_interval_family(kSample, 7).passed());

  const auto three = validate_interval_family(with_singletons(4, {{1, 2}, {1, 4}}), 4);
  CHECK(three.failure == Failure::ThreeDescendants);
  CHECK(three.witnesses == std::vector<ValueInterval>{{1, 4}});
  CHECK(three.detail == std::vector<ValueInterval>{{1, 2}, {3, 3}, {4, 4}});

  CHECK(validate_interval_family(std::vector<ValueInterval>{{1, 1}, {2, 2}}, 2).failure == Failure::MissingTrivial);
  CHECK(validate_interval_family(with_singletons(2, {{1, 2}, {0, 1}}), 2).failure == Failure::OutOfRange);
}

TEST_CASE("every permutation-derived poset passes the necessary conditions (n <= 8)") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    bool ok = true;
    oracle::for_each_permutation(n, [&](const Permutation& p) {
      const auto poset = poset_of(p);
      if (!seen.insert(canonical_key(poset)).second) return;
      if (!validate_interval_family(poset.intervals(), n).passed()) ok = false;
    });
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("simple permutations of one order share a canonical key") {
  for (int n = 4; n <= 8; ++n) {
    std::set<std::string> keys;
    oracle::for_each_permutation(n, [&](const Permutation& p) {
      if (is_simple(p)) keys.insert(canonical_key(poset_of(p)));
    });
    CHECK(keys.size() == 1);
  }
}

TEST_CASE("tree posets are exactly the permutations without triple sums (n <= 8)") {
  for (int n = 1; n <= 8; ++n) {
    std::map<std::string, bool> tree_of;
    bool ok = true;
    oracle::for_each_permutation(n, [&](const Permutation& p) {
      const auto poset = poset_of(p);
      auto [it, fresh] = tree_of.try_emplace(canonical_key(poset), false);
      if (fresh) it->second = is_tree(poset);
      if (it->second == has_sum_interval(p, 3)) ok = false;
    });
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("Hasse structure invariants (n <= 7)") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> seen;
    bool ordered = true;
    bool parent_rule = true;
    oracle::for_each_permutation(n, [&](const Permutation& p) {
      const auto poset = poset_of(p);
      if (!seen.insert(canonical_key(poset)).second) return;
      std::map<ValueInterval, int> parent_count;
      for (const auto& v : poset.intervals()) {
        const auto children = hasse_children(poset, v);
        for (std::size_t i = 0; i + 1 < children.size(); ++i)
          if (children[i].lo >= children[i + 1].lo) ordered = false;
      }
      const auto edges = hasse_edges(poset);
      for (const auto& e : edges) ++parent_count[e.child];
      bool single = true;
      for (const auto& v : poset.intervals())
        if (v != poset.top() && parent_count[v] != 1) single = false;
      if (single != is_tree(poset)) parent_rule = false;
    });
    CHECK_MESSAGE(ordered, "n = " << n);
    CHECK_MESSAGE(parent_rule, "n = " << n);
  }
}

TEST_CASE("poset text format") {
  const auto poset = poset_of(parse_permutation("2413"));
  const std::string text = format_poset(poset);
  CHECK(text == "n 4\n1 1\n1 4\n2 2\n3 3\n4 4\n");
  CHECK(parse_poset(text) == poset);
  CHECK(parse_poset("# comment\nn 4\n\n1 4\n1 1\n2 2\n3 3\n4 4\n") == poset);
  CHECK_THROWS_AS(parse_poset("1 1\n"), MalformedLine);
  CHECK_THROWS_AS(parse_poset("n 2\n1 1\n2 x\n"), MalformedLine);
  try {
    parse_poset("n 2\n1 1\n2 x\n");
  } catch (const MalformedLine& e) {
    CHECK(e.line() == 3);
  }
}
