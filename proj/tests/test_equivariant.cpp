#include "doctest.h"
#include "families_fixture.hpp"
#include "oracles.hpp"
#include "qsymkit/error.hpp"
#include "qsymkit/equivariant.hpp"
#include "qsymkit/families.hpp"

using namespace qsk;

namespace {

QSymElem M(const Composition& a, const Rational& c = 1) { return QSymElem::monomial(a, c); }

Permutation swap2() { return Permutation({1, 0}); }

}  // namespace

TEST_CASE("permutations") {
  const Permutation id = Permutation::identity(3);
  CHECK(id.is_identity());
  CHECK(sign_of(id) == 1);
  CHECK(sign_of(swap2()) == -1);
  const Permutation cycle({1, 2, 0});
  CHECK(sign_of(cycle) == 1);
  CHECK((cycle * cycle.inverse()).is_identity());
  CHECK((cycle * cycle)(0) == 2);
  CHECK(cycle.cycles() == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(Permutation({0, 2, 1}).cycles() == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  CHECK_THROWS_AS(Permutation({0, 0}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 2}), InvalidArgument);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto action = build_action(families::antichain(n), families::symmetric_generators(n));
    for (const auto& g : action.elements()) {
      CHECK(sign_of(g) == oracle::sign(g));
    }
  }
}

TEST_CASE("action on maps moves values along g") {
  const Permutation cycle({1, 2, 0});
  const std::vector<int> pi{1, 2, 3};
  CHECK(act(cycle, pi) == Labeling{3, 1, 2});
  CHECK(act(cycle, pi) == oracle::act(cycle, pi));
}

TEST_CASE("building group actions") {
  CHECK(build_action(families::chain(3, families::ChainSecond::same), {}).order() == 1);
  const auto swap = build_action(families::antichain(2), {swap2()});
  CHECK(swap.order() == 2);
  CHECK(swap.elements().front().is_identity());
  const auto chain = families::chain(2, families::ChainSecond::same);
  try {
    build_action(chain, {swap2()});
    FAIL("expected NotPreserving");
  } catch (const NotPreserving& e) {
    CHECK(std::string(e.what()).find("(e1, e2) -> (e2, e1)") != std::string::npos);
  }
  const WeightedDoublePoset uneven(families::antichain(2).poset(), {1, 2});
  CHECK_THROWS_AS(build_action(uneven, {swap2()}), NotPreserving);
  CHECK_THROWS_AS(build_action(families::antichain(3), {swap2()}), InvalidArgument);
  CHECK_THROWS_AS(build_action(families::antichain(4), families::symmetric_generators(4), 23),
                  ClosureTooLarge);
  CHECK(build_action(families::antichain(4), families::symmetric_generators(4), 24).order() ==
        24);
}

TEST_CASE("generated groups are closed and have the expected order") {
  for (const auto& c : fixture::reciprocity_family()) {
    CAPTURE(c.name);
    CHECK(c.action.order() == c.expected_order);
    CHECK(oracle::is_closed_group(c.action.elements()));
  }
}

TEST_CASE("quotients") {
  const auto base = families::antichain(2);
  const auto id = quotient_by(Permutation::identity(2), base);
  CHECK(id.orbits.size() == 2);
  CHECK(id.quotient.weights()[0] == 1);
  const auto q = quotient_by(swap2(), base);
  REQUIRE(q.orbits.size() == 1);
  CHECK(q.quotient.weight(0) == 2);
  CHECK(q.quotient.poset().label(0) == "{e1,e2}");
  const auto four = quotient_by(Permutation({1, 2, 3, 0}), families::antichain(4));
  REQUIRE(four.orbits.size() == 1);
  CHECK(four.quotient.weight(0) == 4);

  // two copies of a 2-chain, swapping the copies
  const auto chains = families::copies(families::chain(2, families::ChainSecond::same), 2);
  const auto qc = quotient_by(Permutation({2, 3, 0, 1}), chains);
  REQUIRE(qc.orbits.size() == 2);
  CHECK(qc.quotient.poset().lt1(0, 1));
  CHECK(qc.quotient.poset().lt2(0, 1));
  CHECK(is_tertispecial(qc.quotient.poset()));
}

TEST_CASE("quotients of tertispecial posets stay tertispecial") {
  for (const auto& c : fixture::reciprocity_family()) {
    for (const auto& g : c.action.elements()) {
      CHECK(is_tertispecial(quotient_by(g, c.action.base()).quotient.poset()));
    }
  }
}

TEST_CASE("equivariant examples") {
  const auto swap = build_action(families::antichain(2), {swap2()});
  CHECK(gamma_equivariant(swap) == M({2}) + M({1, 1}));
  CHECK(gamma_plus(swap) == M({1, 1}));
  const auto sides = equivariant_theorem_sides(swap);
  CHECK(sides.lhs == M({1, 1}));
  CHECK(sides.holds());
  const auto chain = families::chain(3, families::ChainSecond::opposite);
  const auto trivial = build_action(chain, {});
  CHECK(gamma_equivariant(trivial) == gamma(chain));
  CHECK(gamma_plus(trivial) == gamma(chain));
  CHECK(equivariant_theorem_check(trivial) == antipode_theorem_check(chain));
  const auto bad = build_action(
      WeightedDoublePoset(DoublePoset::build({"a", "b"}, {{"a", "b"}}, {})), {});
  CHECK_THROWS_AS(equivariant_theorem_check(bad), NotTertispecial);
}

TEST_CASE("fixed E-partitions correspond to partitions of the quotient") {
  for (const auto& c : fixture::equivariant_family()) {
    if (c.action.base().size() > 4) continue;
    CAPTURE(c.name);
    for (const auto& g : c.action.elements()) {
      const auto q = quotient_by(g, c.action.base());
      for (int m = 1; m <= 4; ++m) {
        CHECK(oracle::expand(gamma(q.quotient), m) ==
              oracle::fixed_point_sum(c.action.base(), g, m));
      }
    }
  }
}

TEST_CASE("equivariant functions count orbits and coeven orbits") {
  for (const auto& c : fixture::reciprocity_family()) {
    CAPTURE(c.name);
    const QSymElem all = gamma_equivariant(c.action);
    const QSymElem plus = gamma_plus(c.action);
    CHECK(all.has_integer_coefficients());
    CHECK(plus.has_integer_coefficients());
    for (const auto& [alpha, coeff] : plus.terms()) {
      CHECK(coeff > 0);
      CHECK(coeff <= all.coeff(alpha));
    }
    for (int m = 1; m <= 4; ++m) {
      const auto sums = oracle::orbit_sums(c.action, m);
      CHECK(oracle::expand(all, m) == sums.all);
      CHECK(oracle::expand(plus, m) == sums.coeven);
    }
    CHECK(equivariant_theorem_check(c.action));
  }
}

TEST_CASE("equivariant theorem with non-uniform weights") {
  // two copies of a weighted 2-chain
  const WeightedDoublePoset chain(families::chain(2, families::ChainSecond::opposite).poset(),
                                  {1, 2});
  const auto a = build_action(families::copies(chain, 2), families::block_symmetric_generators(2, 2));
  CHECK(equivariant_theorem_check(a));
  for (int m = 1; m <= 3; ++m) {
    CHECK(oracle::expand(gamma_equivariant(a), m) == oracle::orbit_sums(a, m).all);
  }
}
