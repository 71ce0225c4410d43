#include <algorithm>

#include "doctest.h"
#include "qsymkit/error.hpp"
#include "qsymkit/families.hpp"
#include "qsymkit/poset.hpp"

using namespace qsk;

namespace {

// Raw admissibility: no p in P, q in Q with q <1 p.
bool raw_admissible(const DoublePoset& d, Subset p) {
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = 0; y < d.size(); ++y) {
      if ((p & bit(x)) && !(p & bit(y)) && d.lt1(y, x)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("strict orders on small sets") {
  CHECK(all_strict_orders(0).size() == 1);
  CHECK(all_strict_orders(1).size() == 1);
  CHECK(all_strict_orders(2).size() == 3);
  CHECK(all_strict_orders(3).size() == 19);
  CHECK(all_strict_orders(4).size() == 219);
  for (const auto& r : all_strict_orders(3)) CHECK(r.is_strict_order());
}

TEST_CASE("build closes generators and rejects cycles") {
  const auto d = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {});
  CHECK(d.lt1(0, 1));
  CHECK_FALSE(d.lt1(1, 0));
  CHECK_FALSE(d.lt2(0, 1));
  CHECK_FALSE(d.lt2(1, 0));

  const auto c = DoublePoset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"c", "a"}});
  CHECK(c.lt1(c.index_of("a"), c.index_of("c")));

  CHECK_THROWS_AS(DoublePoset::build({"a"}, {{"a", "a"}}, {}), CycleError);
  try {
    DoublePoset::build({"x", "y"}, {}, {{"x", "y"}, {"y", "x"}});
    FAIL("expected a cycle");
  } catch (const CycleError& e) {
    CHECK((e.element == "x" || e.element == "y"));
  }
  CHECK_THROWS_AS(DoublePoset::build({"a", "a"}, {}, {}), InvalidArgument);
  CHECK_THROWS_AS(DoublePoset::build({"a"}, {{"a", "z"}}, {}), InvalidArgument);
}

TEST_CASE("closure is idempotent") {
  for (const auto& r : all_strict_orders(4)) {
    Relation again = r;
    again.transitive_close();
    CHECK(again == r);
  }
}

TEST_CASE("classification examples") {
  const auto bad = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {});
  CHECK_FALSE(is_tertispecial(bad));
  CHECK_FALSE(is_special(bad));
  const auto special = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {{"b", "a"}});
  CHECK(is_special(special));
  CHECK(is_semispecial(special));
  CHECK(is_tertispecial(special));
  CHECK(is_tertispecial(DoublePoset{}));
  CHECK(is_special(DoublePoset::build({"a"}, {}, {})));
}

TEST_CASE("classification implications and opposite1, exhaustive on three elements") {
  std::size_t tertispecial = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto orders = all_strict_orders(n);
    for (const auto& r1 : orders) {
      for (const auto& r2 : orders) {
        const DoublePoset d(families::default_labels(n), r1, r2);
        if (is_special(d)) CHECK(is_semispecial(d));
        if (is_semispecial(d)) CHECK(is_tertispecial(d));
        CHECK(is_tertispecial(opposite1(d)) == is_tertispecial(d));
        CHECK(opposite1(opposite1(d)) == d);
        tertispecial += is_tertispecial(d);
      }
    }
  }
  CHECK(tertispecial > 0);
}

TEST_CASE("opposite1 flips the first order only") {
  const auto d = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {{"a", "b"}});
  const auto o = opposite1(d);
  CHECK(o.lt1(1, 0));
  CHECK_FALSE(o.lt1(0, 1));
  CHECK(o.lt2(0, 1));
  const auto o2 = opposite2(d);
  CHECK(o2.lt1(0, 1));
  CHECK(o2.lt2(1, 0));
}

TEST_CASE("restriction") {
  const auto chain = DoublePoset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {});
  CHECK(restrict(chain, Subset{0}).size() == 0);
  CHECK(restrict(chain, full_subset(3)) == chain);
  const auto ends = restrict(chain, std::vector<std::string>{"a", "c"});
  CHECK(ends == DoublePoset::build({"a", "c"}, {{"a", "c"}}, {}));
  CHECK_THROWS_AS(restrict(chain, std::vector<std::string>{"z"}), InvalidArgument);
}

TEST_CASE("disjoint union tags elements") {
  const auto one = DoublePoset::build({"x"}, {}, {});
  const auto u = disjoint_union(one, one);
  CHECK(u.size() == 2);
  CHECK(u.labels() == std::vector<std::string>{"0.x", "1.x"});
  CHECK_FALSE(u.lt1().comparable(0, 1) );
  CHECK_FALSE(u.lt2().comparable(0, 1));
  const auto chain = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {{"b", "a"}});
  const auto v = disjoint_union(DoublePoset{}, chain);
  CHECK(v.size() == chain.size());
  CHECK(v.lt1(0, 1));
  CHECK(v.lt2(1, 0));
  CHECK(disjoint_union(chain, one).size() == 3);
}

TEST_CASE("admissible pair examples") {
  const auto empty = admissible_pairs(DoublePoset{});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == AdmissiblePair{0, 0});
  CHECK(admissible_pairs(DoublePoset::build({"a", "b"}, {}, {})).size() == 4);
  const auto chain = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {});
  const auto pairs = admissible_pairs(chain);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == AdmissiblePair{0, 3});
  CHECK(pairs[1] == AdmissiblePair{1, 2});
  CHECK(pairs[2] == AdmissiblePair{3, 0});
  CHECK(subset_labels(chain, 1) == std::vector<std::string>{"a"});
}

TEST_CASE("admissible pairs match the raw definition up to four elements") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& r : all_strict_orders(n)) {
      const DoublePoset d(families::default_labels(n), r, Relation(n));
      std::vector<AdmissiblePair> expected;
      // characteristic vectors in lexicographic order over declaration order
      std::vector<Subset> subsets;
      for (Subset p = 0; p < (Subset{1} << n); ++p) subsets.push_back(p);
      std::sort(subsets.begin(), subsets.end(), [n](Subset a, Subset b) {
        for (std::size_t i = 0; i < n; ++i) {
          const bool x = a & bit(i), y = b & bit(i);
          if (x != y) return x < y;
        }
        return false;
      });
      for (Subset p : subsets) {
        CHECK(is_admissible(d, p) == raw_admissible(d, p));
        CHECK(is_admissible_covers(d, p) == raw_admissible(d, p));
        if (raw_admissible(d, p)) expected.push_back({p, full_subset(n) & ~p});
      }
      CHECK(admissible_pairs(d) == expected);
    }
  }
}

TEST_CASE("cover relation") {
  const auto chain = DoublePoset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {});
  CHECK(chain.lt1().covered_by(0, 1));
  CHECK(chain.lt1().covered_by(1, 2));
  CHECK_FALSE(chain.lt1().covered_by(0, 2));
  CHECK(chain.lt1().is_total());
  CHECK(chain.lt1().predecessors(2) == 3);
}

TEST_CASE("sixty-four element cap") {
  CHECK_NOTHROW(DoublePoset(families::default_labels(64), Relation(64), Relation(64)));
  CHECK_THROWS_AS(DoublePoset(families::default_labels(65), Relation(65), Relation(65)),
                  InvalidArgument);
}
