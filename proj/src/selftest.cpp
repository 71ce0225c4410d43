#include "qsymkit/selftest.hpp"

#include <functional>

#include "qsymkit/error.hpp"
#include "qsymkit/families.hpp"
#include "qsymkit/orderpoly.hpp"
#include "qsymkit/young.hpp"

namespace qsk {

namespace {

struct Suite {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

std::vector<WeightedDoublePoset> all_double_posets(std::size_t n) {
  std::vector<WeightedDoublePoset> out;
  const auto orders = all_strict_orders(n);
  for (const auto& r1 : orders) {
    for (const auto& r2 : orders) {
      out.emplace_back(DoublePoset(families::default_labels(n), r1, r2));
    }
  }
  return out;
}

// Alternating 1,2,1,... weights.
WeightedDoublePoset alternate_weights(const WeightedDoublePoset& d) {
  std::vector<int> w(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) w[i] = 1 + static_cast<int>(i % 2);
  return {d.poset(), std::move(w)};
}

void compositions_suite(Suite& s, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& d : subsets_of_interval(n)) {
      s.expect(descent_set(comp_of_subset(d)) == d, "D(comp(d)) at n=" + std::to_string(n));
    }
    for (const auto& alpha : compositions_of(n)) {
      s.expect(comp_of_subset(descent_set(alpha)) == alpha, "comp(D" + alpha.str() + ")");
      std::vector<int> mirrored;
      const DescentSet d = descent_set(alpha);
      for (int u : d.members()) mirrored.push_back(n - u);
      s.expect(descent_set(reverse(alpha)) == DescentSet(n, mirrored),
               "D(rev " + alpha.str() + ")");
      s.expect(conjugate(conjugate(alpha)) == alpha, "omega(omega " + alpha.str() + ")");
    }
  }
}

void antipode_suite(Suite& s, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      const QSymElem m = monomial(alpha);
      const QSymElem closed = antipode_closed(m);
      s.expect(closed == antipode_recursive(m), "closed vs recursive at " + alpha.str());
      s.expect(antipode_closed(closed) == m, "S(S(M" + alpha.str() + "))");
      const QSymElem unit = QSymElem::monomial({}, counit(m));
      const Tensor delta = coproduct(m);
      s.expect(antipode_convolution(delta, antipode_closed) == unit,
               "antipode axiom (closed) at " + alpha.str());
      s.expect(antipode_convolution(delta, antipode_recursive) == unit,
               "antipode axiom (recursive) at " + alpha.str());
      s.expect(antipode_fundamental_identity_check(alpha), "S(F" + alpha.str() + ")");
    }
  }
}

void gamma_suite(Suite& theorem, Suite& coproduct_rule, std::size_t max_elements) {
  for (std::size_t n = 0; n <= max_elements; ++n) {
    for (const auto& base : all_double_posets(n)) {
      for (const auto& d : {base, alternate_weights(base)}) {
        coproduct_rule.expect(gamma_coproduct_check(d), "coproduct rule on |E|=" + std::to_string(n));
        if (is_tertispecial(d.poset())) {
          theorem.expect(antipode_theorem_check(d), "antipode theorem on a tertispecial poset");
        }
      }
    }
  }
  const auto bad = DoublePoset::build({"a", "b"}, {{"a", "b"}}, {});
  theorem.expect(!antipode_theorem_check(WeightedDoublePoset(bad)),
                 "non-tertispecial 2-chain must fail the identity");
}

void product_suite(Suite& s, std::size_t max_total) {
  for (std::size_t n1 = 0; n1 <= max_total; ++n1) {
    for (std::size_t n2 = 0; n1 + n2 <= max_total; ++n2) {
      const auto left = all_double_posets(n1);
      const auto right = all_double_posets(n2);
      // Stride through the pairs to keep the count modest.
      const std::size_t stride = std::max<std::size_t>(1, left.size() * right.size() / 60);
      std::size_t index = 0;
      for (const auto& a : left) {
        for (const auto& b : right) {
          if (index++ % stride != 0) continue;
          s.expect(gamma_product_check(a, alternate_weights(b)), "product rule");
        }
      }
    }
  }
}

void equivariant_suite(Suite& theorem, Suite& reciprocity, int max_size) {
  struct Case {
    std::string name;
    GroupAction action;
  };
  std::vector<Case> cases;
  for (std::size_t n = 2; n <= static_cast<std::size_t>(max_size) + 1 && n <= 4; ++n) {
    const auto a = families::antichain(n);
    cases.push_back({"S" + std::to_string(n) + " on antichain",
                     build_action(a, families::symmetric_generators(n))});
    cases.push_back({"C" + std::to_string(n) + " on antichain",
                     build_action(a, families::cyclic_generators(n))});
  }
  for (std::size_t len = 1; len <= 2; ++len) {
    for (auto second : {families::ChainSecond::same, families::ChainSecond::opposite}) {
      for (std::size_t k = 2; k <= 3 && k * len <= static_cast<std::size_t>(max_size) + 1; ++k) {
        const auto base = families::copies(families::chain(len, second), k);
        cases.push_back({std::to_string(k) + " copies of a " + std::to_string(len) + "-chain",
                         build_action(base, families::block_symmetric_generators(k, len))});
      }
    }
  }
  for (std::size_t len = 2; len <= 3; ++len) {
    cases.push_back({"trivial group on " + std::to_string(len) + "-chain",
                     build_action(families::chain(len, families::ChainSecond::same), {})});
  }
  for (const auto& c : cases) {
    theorem.expect(equivariant_theorem_check(c.action), c.name);
    const OrderPolynomial omega = order_polynomial(c.action);
    for (long long q = 0; q <= 4; ++q) {
      reciprocity.expect(omega(q) == Rational(static_cast<unsigned long>(
                                         count_orbits_bruteforce(c.action, q))),
                         c.name + ": order polynomial at q=" + std::to_string(q));
      if (q >= 1) {
        reciprocity.expect(reciprocity_check(c.action, q),
                           c.name + ": reciprocity at q=" + std::to_string(q));
      }
    }
  }
}

void young_suite(Suite& s, int max_cells) {
  for (int n = 0; n <= max_cells; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const SkewShape shape(lambda);
      s.expect(schur_antipode_check(shape), "S(s" + lambda.str() + ")");
      s.expect(skew_schur(shape) == gamma(build_Yh(shape)), "Y vs Yh for " + lambda.str());
      s.expect(is_tertispecial(build_Y(shape).poset()), "Y tertispecial " + lambda.str());
      s.expect(is_special(build_Yh(shape).poset()), "Yh special " + lambda.str());
      for (int m = 1; m < n; ++m) {
        for (const auto& mu : partitions_of(m)) {
          if (!lambda.contains(mu)) continue;
          const SkewShape skew(lambda, mu);
          s.expect(schur_antipode_check(skew), "S(s" + skew.str() + ")");
        }
      }
    }
  }
}

}  // namespace

SelftestReport run_selftest(int max_size) {
  if (max_size < 1 || max_size > 4) {
    throw InvalidArgument("selftest --max-size must be between 1 and 4");
  }
  std::vector<Suite> suites(9);
  suites[0].name = "compositions";
  suites[1].name = "qsym-antipode";
  suites[2].name = "gamma-coproduct-rule";
  suites[3].name = "gamma-antipode-theorem";
  suites[4].name = "gamma-product-rule";
  suites[5].name = "equivariant-theorem";
  suites[6].name = "order-polynomial-reciprocity";
  suites[7].name = "young";
  suites[8].name = "classification";

  compositions_suite(suites[0], max_size + 5);
  antipode_suite(suites[1], max_size + 3);
  gamma_suite(suites[3], suites[2], static_cast<std::size_t>(max_size));
  product_suite(suites[4], static_cast<std::size_t>(max_size) + 1);
  equivariant_suite(suites[5], suites[6], max_size);
  young_suite(suites[7], max_size + 2);
  for (std::size_t n = 0; n <= static_cast<std::size_t>(max_size); ++n) {
    for (const auto& d : all_double_posets(n)) {
      const DoublePoset& p = d.poset();
      suites[8].expect(!is_special(p) || is_semispecial(p), "special implies semispecial");
      suites[8].expect(!is_semispecial(p) || is_tertispecial(p), "semispecial implies tertispecial");
      suites[8].expect(is_tertispecial(opposite1(p)) == is_tertispecial(p),
                       "opposite1 preserves tertispeciality");
    }
  }

  SelftestReport report;
  for (const auto& s : suites) {
    const bool ok = s.failures == 0;
    report.passed = report.passed && ok;
    report.text += s.name + ": " + (ok ? "PASS" : "FAIL") + " (" +
                   std::to_string(s.cases) + " cases";
    if (!ok) {
      report.text += ", " + std::to_string(s.failures) + " failed; first: " + s.first_failure;
    }
    report.text += ")\n";
  }
  report.text += std::string("selftest: ") + (report.passed ? "PASS" : "FAIL") + "\n";
  return report;
}

}  // namespace qsk
