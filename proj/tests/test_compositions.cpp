#include "doctest.h"
#include "qsymkit/composition.hpp"
#include "qsymkit/error.hpp"

using namespace qsk;

TEST_CASE("descent sets are proper prefix sums") {
  CHECK(descent_set(Composition{}) == DescentSet(0, {}));
  CHECK(descent_set(Composition{2, 1, 3}) == DescentSet(6, {2, 3}));
  CHECK(descent_set(Composition{3, 1, 1, 1, 1, 1, 4}) == DescentSet(12, {3, 4, 5, 6, 7, 8}));
}

TEST_CASE("comp inverts descent_set") {
  CHECK(comp_of_subset(DescentSet(3, {1})) == Composition{1, 2});
  CHECK(comp_of_subset(DescentSet(0, {})) == Composition{});
  CHECK(comp_of_subset(DescentSet(6, {2, 3})) == Composition{2, 1, 3});
  CHECK_THROWS_AS(DescentSet(3, {3}), InvalidArgument);
  CHECK_THROWS_AS(DescentSet(3, {0}), InvalidArgument);
}

TEST_CASE("reverse and conjugate") {
  CHECK(reverse(Composition{2, 1, 3}) == Composition{3, 1, 2});
  CHECK(reverse(Composition{}) == Composition{});
  CHECK(reverse(Composition{5}) == Composition{5});
  CHECK(conjugate(Composition{1, 2}) == Composition{1, 2});
  CHECK(conjugate(Composition{}) == Composition{});
  for (int n = 1; n <= 6; ++n) {
    CHECK(conjugate(Composition{n}) == Composition(std::vector<int>(n, 1)));
  }
}

TEST_CASE("exhaustive identities up to n = 8") {
  for (int n = 0; n <= 8; ++n) {
    const auto subsets = subsets_of_interval(n);
    CHECK(subsets.size() == (n == 0 ? 1u : (1u << (n - 1))));
    for (const auto& d : subsets) CHECK(descent_set(comp_of_subset(d)) == d);
    const auto comps = compositions_of(n);
    CHECK(comps.size() == subsets.size());
    for (const auto& a : comps) {
      CHECK(comp_of_subset(descent_set(a)) == a);
      std::vector<int> mirrored;
      const DescentSet d = descent_set(a);
      for (int u : d.members()) mirrored.push_back(n - u);
      CHECK(descent_set(reverse(a)) == DescentSet(n, mirrored));
      CHECK(conjugate(conjugate(a)) == a);
    }
  }
}

TEST_CASE("ordering is size, then length, then lexicographic") {
  const auto c3 = compositions_of(3);
  const std::vector<Composition> expected{{3}, {1, 2}, {2, 1}, {1, 1, 1}};
  CHECK(c3 == expected);
  CHECK(Composition{5} < Composition{1, 1, 1, 1, 1, 1});
  CHECK(Composition{} < Composition{1});
}

TEST_CASE("text grammar") {
  CHECK(parse_composition("(2,1,3)") == Composition{2, 1, 3});
  CHECK(parse_composition(" ( 2 , 1 ) ") == Composition{2, 1});
  CHECK(parse_composition("()") == Composition{});
  CHECK(Composition{2, 1, 3}.str() == "(2,1,3)");
  CHECK(Composition{}.str() == "()");
  for (const char* bad : {"", "(", "2,1", "(2,,1)", "(0)", "(-1)", "(2,1", "(a)", "(1)x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_composition(bad), ParseError);
  }
  CHECK_THROWS_AS(Composition({1, 0}), InvalidArgument);
}

TEST_CASE("descent set complement and subset") {
  const DescentSet d(5, {1, 3});
  CHECK(d.complement() == DescentSet(5, {2, 4}));
  CHECK(d.is_subset_of(DescentSet(5, {1, 2, 3})));
  CHECK_FALSE(d.is_subset_of(DescentSet(5, {1})));
  CHECK(concat(Composition{1}, Composition{2, 3}) == Composition{1, 2, 3});
  CHECK(Composition{1, 2, 3}.slice(1, 3) == Composition{2, 3});
}
