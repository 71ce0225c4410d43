#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qsymkit/error.hpp"
#include "qsymkit/families.hpp"
#include "qsymkit/gamma.hpp"

using namespace qsk;

namespace {

QSymElem M(const Composition& a, const Rational& c = 1) { return QSymElem::monomial(a, c); }

std::vector<DoublePoset> all_double_posets(std::size_t n) {
  std::vector<DoublePoset> out;
  const auto orders = all_strict_orders(n);
  for (const auto& r1 : orders) {
    for (const auto& r2 : orders) out.emplace_back(families::default_labels(n), r1, r2);
  }
  return out;
}

std::vector<int> pack(const std::vector<int>& pi) {
  const std::set<int> values(pi.begin(), pi.end());
  std::map<int, int> rank;
  int r = 0;
  for (int v : values) rank[v] = ++r;
  std::vector<int> out;
  for (int v : pi) out.push_back(rank[v]);
  return out;
}

}  // namespace

TEST_CASE("weighted double posets validate weights") {
  const auto d = DoublePoset::build({"a", "b"}, {}, {});
  CHECK(WeightedDoublePoset(d).degree() == 2);
  CHECK(WeightedDoublePoset(d, {2, 3}).degree() == 5);
  CHECK_THROWS_AS(WeightedDoublePoset(d, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(WeightedDoublePoset(d, {1}), InvalidArgument);
}

TEST_CASE("E-partition examples") {
  CHECK(is_epartition(DoublePoset{}, std::vector<int>{}));
  const auto strict = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {{"b", "a"}});
  CHECK_FALSE(is_epartition(strict, std::vector<int>{1, 1}));
  CHECK(is_epartition(strict, std::vector<int>{1, 2}));
  CHECK_FALSE(is_epartition(strict, std::vector<int>{2, 1}));
  const auto weak = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {{"a", "b"}});
  CHECK(is_epartition(weak, std::vector<int>{1, 1}));
  CHECK(is_epartition_covers(weak, std::vector<int>{1, 1}));
  CHECK(is_epartition_covers(DoublePoset{}, std::vector<int>{}));
  CHECK_THROWS_AS(is_epartition(weak, std::vector<int>{1}), InvalidArgument);
  const auto bad = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {});
  CHECK_THROWS_AS(is_epartition_covers(bad, std::vector<int>{1, 1}), NotTertispecial);
}

TEST_CASE("E-partition tests agree with the raw definition") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& d : all_double_posets(n)) {
      const bool tertispecial = is_tertispecial(d);
      oracle::for_each_map(n, 3, [&](const std::vector<int>& pi) {
        const bool expected = oracle::is_epartition(d, pi);
        CHECK(is_epartition(d, pi) == expected);
        if (tertispecial) CHECK(is_epartition_covers(d, pi) == expected);
      });
    }
  }
}

TEST_CASE("packing preserves the E-partition property") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& d : all_double_posets(n)) {
      oracle::for_each_map(n, 4, [&](const std::vector<int>& pi) {
        CHECK(oracle::is_epartition(d, pi) == oracle::is_epartition(d, pack(pi)));
      });
    }
  }
}

TEST_CASE("packed E-partition examples") {
  const auto empty = packed_epartitions(DoublePoset{});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].values.empty());
  CHECK(empty[0].k == 0);

  const auto anti = packed_epartitions(DoublePoset::build({"a", "b"}, {}, {}));
  REQUIRE(anti.size() == 3);
  CHECK(anti[0].values == Labeling{1, 1});
  CHECK(anti[1].values == Labeling{1, 2});
  CHECK(anti[2].values == Labeling{2, 1});

  const auto chain =
      packed_epartitions(DoublePoset::build({"a", "b"}, {{"a", "b"}}, {{"a", "b"}}));
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].values == Labeling{1, 1});
  CHECK(chain[0].k == 1);
  CHECK(chain[1].values == Labeling{1, 2});
  CHECK(chain[1].k == 2);
}

TEST_CASE("packed E-partitions are exactly the packed maps that are E-partitions") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& d : all_double_posets(n)) {
      std::vector<Labeling> expected;
      oracle::for_each_map(n, static_cast<int>(n), [&](const std::vector<int>& pi) {
        if (pack(pi) == pi && oracle::is_epartition(d, pi)) expected.push_back(pi);
      });
      std::sort(expected.begin(), expected.end());
      std::vector<Labeling> got;
      for (const auto& phi : packed_epartitions(d)) {
        got.push_back(phi.values);
        CHECK(phi.k == (phi.values.empty() ? 0 : *std::max_element(phi.values.begin(),
                                                                    phi.values.end())));
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("ev_w sums weights per fibre") {
  const WeightedDoublePoset anti(DoublePoset::build({"a", "b"}, {}, {}), {2, 3});
  CHECK(ev_w(anti, {{1, 2}, 2}) == Composition{2, 3});
  CHECK(ev_w(anti, {{1, 1}, 1}) == Composition{5});
  CHECK(ev_w(WeightedDoublePoset(DoublePoset{}), {{}, 0}) == Composition{});
  const WeightedDoublePoset ones(DoublePoset::build({"a", "b"}, {}, {}));
  CHECK(ev_w(ones, {{1, 1}, 1}) == Composition{2});
}

TEST_CASE("gamma examples") {
  CHECK(gamma(WeightedDoublePoset(DoublePoset{})) == M({}));
  CHECK(gamma(families::antichain(2)) == M({2}) + M({1, 1}, 2));
  for (int n = 0; n <= 5; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      CHECK(gamma(families::monomial_poset(alpha)) == M(alpha));
    }
  }
}

TEST_CASE("gamma matches the truncated power series") {
  std::mt19937 rng(20240611);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& d : all_double_posets(n)) {
      std::vector<int> w(n);
      for (auto& x : w) x = 1 + static_cast<int>(rng() % 2);
      for (const WeightedDoublePoset& wd : {WeightedDoublePoset(d), WeightedDoublePoset(d, w)}) {
        const QSymElem g = gamma(wd);
        CHECK(g.is_homogeneous());
        CHECK(g.has_integer_coefficients());
        for (const auto& [a, c] : g.terms()) {
          CHECK(a.size() == wd.degree());
          CHECK(c > 0);
        }
        const int m = static_cast<int>(n) + 1;
        CHECK(oracle::expand(g, m) == oracle::gamma_bruteforce(wd, m));
      }
    }
  }
}

TEST_CASE("gamma on sampled four-element posets against five variables") {
  std::mt19937 rng(7);
  const auto orders = all_strict_orders(4);
  for (int trial = 0; trial < 40; ++trial) {
    const DoublePoset d(families::default_labels(4), orders[rng() % orders.size()],
                        orders[rng() % orders.size()]);
    std::vector<int> w(4);
    for (auto& x : w) x = 1 + static_cast<int>(rng() % 2);
    const WeightedDoublePoset wd(d, w);
    CHECK(oracle::expand(gamma(wd), 5) == oracle::gamma_bruteforce(wd, 5));
  }
}

TEST_CASE("coproduct rule") {
  CHECK(gamma_coproduct_check(WeightedDoublePoset(DoublePoset{})));
  const WeightedDoublePoset chain(DoublePoset::build({"a", "b"}, {{"a", "b"}}, {}));
  CHECK(gamma_coproduct_check(chain));
  // pairs {} | ab, a | b, ab | {}, with Gamma(ab) = M(2) + M(1,1)
  const QSymElem both = QSymElem::monomial({2}) + QSymElem::monomial({1, 1});
  const Tensor expected{{Composition{}, both},
                        {Composition{1}, QSymElem::monomial({1})},
                        {Composition{2}, QSymElem::monomial({})},
                        {Composition{1, 1}, QSymElem::monomial({})}};
  CHECK(admissible_coproduct(chain) == expected);
  std::mt19937 rng(11);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& d : all_double_posets(n)) {
      std::vector<int> w(n);
      for (auto& x : w) x = 1 + static_cast<int>(rng() % 2);
      CHECK(gamma_coproduct_check(WeightedDoublePoset(d)));
      CHECK(gamma_coproduct_check(WeightedDoublePoset(d, w)));
    }
  }
}

TEST_CASE("antipode theorem") {
  CHECK(antipode_theorem_check(WeightedDoublePoset(DoublePoset{})));
  const WeightedDoublePoset bad(DoublePoset::build({"a", "b"}, {{"a", "b"}}, {}));
  const auto sides = antipode_theorem_sides(bad);
  CHECK(sides.lhs == M({1, 1}));
  CHECK(sides.rhs == M({2}) + M({1, 1}));
  CHECK_FALSE(sides.holds());
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& d : all_double_posets(n)) {
      if (!is_tertispecial(d)) continue;
      std::vector<int> alt(n);
      for (std::size_t i = 0; i < n; ++i) alt[i] = 1 + static_cast<int>(i % 2);
      CHECK(antipode_theorem_check(WeightedDoublePoset(d)));
      CHECK(antipode_theorem_check(WeightedDoublePoset(d, alt)));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("special posets satisfy the antipode identity") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& r1 : all_strict_orders(n)) {
      // <2 the identity total order
      Relation r2(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) r2.set(i, j);
      }
      const DoublePoset d(families::default_labels(n), r1, r2);
      REQUIRE(is_special(d));
      CHECK(antipode_theorem_check(WeightedDoublePoset(d)));
    }
  }
}

TEST_CASE("product rule") {
  const WeightedDoublePoset point(DoublePoset::build({"x"}, {}, {}));
  const auto sides = gamma_product_sides(point, point);
  CHECK(sides.lhs == M({2}) + M({1, 1}, 2));
  CHECK(sides.holds());
  const WeightedDoublePoset empty(DoublePoset{});
  const auto chain = families::chain(3, families::ChainSecond::opposite);
  CHECK(gamma(disjoint_union(empty, chain)) == gamma(chain));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n1 = rng() % 4, n2 = rng() % (6 - n1);
    const auto o1 = all_strict_orders(n1), o2 = all_strict_orders(n2);
    auto pick = [&](std::size_t n, const std::vector<Relation>& o) {
      std::vector<int> w(n);
      for (auto& x : w) x = 1 + static_cast<int>(rng() % 2);
      return WeightedDoublePoset(
          DoublePoset(families::default_labels(n), o[rng() % o.size()], o[rng() % o.size()]), w);
    };
    const auto a = pick(n1, o1);
    const auto b = pick(n2, o2);
    CHECK(gamma_product_check(a, b));
  }
}
