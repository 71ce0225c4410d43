#include "qsymkit/gamma.hpp"

#include <algorithm>
#include <numeric>

#include "qsymkit/error.hpp"

namespace qsk {

WeightedDoublePoset::WeightedDoublePoset(DoublePoset poset)
    : poset_(std::move(poset)), weights_(poset_.size(), 1) {}

WeightedDoublePoset::WeightedDoublePoset(DoublePoset poset, std::vector<int> weights)
    : poset_(std::move(poset)), weights_(std::move(weights)) {
  if (weights_.size() != poset_.size()) {
    throw InvalidArgument("weight function must be defined on every element");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) {
      throw InvalidArgument("weight of '" + poset_.label(i) +
                            "' must be a positive integer");
    }
  }
}

int WeightedDoublePoset::degree() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0);
}

WeightedDoublePoset opposite1(const WeightedDoublePoset& d) {
  return {opposite1(d.poset()), {d.weights().begin(), d.weights().end()}};
}

WeightedDoublePoset restrict(const WeightedDoublePoset& d, Subset t) {
  std::vector<int> w;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (t & bit(i)) w.push_back(d.weight(i));
  }
  return {restrict(d.poset(), t), std::move(w)};
}

WeightedDoublePoset disjoint_union(const WeightedDoublePoset& d1,
                                   const WeightedDoublePoset& d2) {
  std::vector<int> w(d1.weights().begin(), d1.weights().end());
  w.insert(w.end(), d2.weights().begin(), d2.weights().end());
  return {disjoint_union(d1.poset(), d2.poset()), std::move(w)};
}

namespace {

void check_labeling(const DoublePoset& d, std::span<const int> pi) {
  if (pi.size() != d.size()) {
    throw InvalidArgument("labeling must assign a value to every element");
  }
  for (int v : pi) {
    if (v < 1) throw InvalidArgument("labeling values must be positive");
  }
}

// e <1 f given; pi(e) <= pi(f), strictly when f <2 e.
bool pair_ok(const DoublePoset& d, std::span<const int> pi, std::size_t e,
             std::size_t f) {
  if (pi[e] > pi[f]) return false;
  return !(d.lt2(f, e) && pi[e] == pi[f]);
}

// Indices in an order compatible with <_1, ties broken by declaration order.
std::vector<std::size_t> linear_extension(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> order;
  Subset placed = 0;
  while (order.size() < n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(placed & bit(i)) && (r.predecessors(i) & ~placed) == 0) {
        order.push_back(i);
        placed |= bit(i);
        break;
      }
    }
  }
  return order;
}

}  // namespace

bool is_epartition(const DoublePoset& d, std::span<const int> pi) {
  check_labeling(d, pi);
  for (std::size_t e = 0; e < d.size(); ++e) {
    for (std::size_t f = 0; f < d.size(); ++f) {
      if (d.lt1(e, f) && !pair_ok(d, pi, e, f)) return false;
    }
  }
  return true;
}

bool is_epartition_covers(const DoublePoset& d, std::span<const int> pi) {
  if (!is_tertispecial(d)) {
    throw NotTertispecial(
        "the cover-based E-partition test needs a tertispecial double poset");
  }
  check_labeling(d, pi);
  for (std::size_t e = 0; e < d.size(); ++e) {
    for (std::size_t f = 0; f < d.size(); ++f) {
      if (!d.lt1().covered_by(e, f)) continue;
      if (d.lt2(e, f) && pi[e] > pi[f]) return false;
      if (d.lt2(f, e) && pi[e] >= pi[f]) return false;
    }
  }
  return true;
}

std::vector<PackedPartition> packed_epartitions(const DoublePoset& d) {
  const std::size_t n = d.size();
  const auto order = linear_extension(d.lt1());
  std::vector<PackedPartition> out;
  Labeling pi(n, 0);
  std::vector<int> uses(n + 2, 0);

  auto visit = [&](auto&& self, std::size_t pos, int max_value, int distinct) -> void {
    const int remaining = static_cast<int>(n - pos);
    // Values 1..max_value not yet used must be hit by the remaining elements.
    if (max_value - distinct > remaining) return;
    if (pos == n) {
      if (max_value == distinct) out.push_back({pi, max_value});
      return;
    }
    const std::size_t e = order[pos];
    int low = 1;
    const Subset below = d.lt1().predecessors(e);
    for (std::size_t f = 0; f < n; ++f) {
      if (!(below & bit(f))) continue;
      // f precedes e in the linear extension, so pi[f] is set.
      low = std::max(low, d.lt2(e, f) ? pi[f] + 1 : pi[f]);
    }
    for (int v = low; v <= static_cast<int>(n); ++v) {
      pi[e] = v;
      const bool fresh = uses[v]++ == 0;
      self(self, pos + 1, std::max(max_value, v), distinct + (fresh ? 1 : 0));
      --uses[v];
    }
    pi[e] = 0;
  };
  visit(visit, 0, 0, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.values < b.values;
  });
  return out;
}

Composition ev_w(const WeightedDoublePoset& d, const PackedPartition& phi) {
  if (phi.values.size() != d.size()) {
    throw InvalidArgument("packed partition does not match the ground set");
  }
  std::vector<int> parts(static_cast<std::size_t>(phi.k), 0);
  for (std::size_t e = 0; e < d.size(); ++e) {
    const int v = phi.values[e];
    if (v < 1 || v > phi.k) {
      throw InvalidArgument("packed partition value out of range");
    }
    parts[static_cast<std::size_t>(v - 1)] += d.weight(e);
  }
  return Composition(std::move(parts));
}

QSymElem gamma(const WeightedDoublePoset& d) {
  QSymElem out;
  for (const auto& phi : packed_epartitions(d.poset())) {
    out.add_term(ev_w(d, phi), 1);
  }
  return out;
}

Tensor admissible_coproduct(const WeightedDoublePoset& d) {
  Tensor t;
  for (const auto& pair : admissible_pairs(d.poset())) {
    tensor_add(t, gamma(restrict(d, pair.p)), gamma(restrict(d, pair.q)));
  }
  return t;
}

bool gamma_coproduct_check(const WeightedDoublePoset& d) {
  return admissible_coproduct(d) == coproduct(gamma(d));
}

IdentitySides antipode_theorem_sides(const WeightedDoublePoset& d) {
  IdentitySides sides;
  sides.lhs = antipode_closed(gamma(d));
  sides.rhs = gamma(opposite1(d));
  if (d.size() % 2 == 1) sides.rhs = -sides.rhs;
  return sides;
}

bool antipode_theorem_check(const WeightedDoublePoset& d) {
  return antipode_theorem_sides(d).holds();
}

IdentitySides gamma_product_sides(const WeightedDoublePoset& d1,
                                  const WeightedDoublePoset& d2) {
  return {gamma(disjoint_union(d1, d2)), product(gamma(d1), gamma(d2))};
}

bool gamma_product_check(const WeightedDoublePoset& d1,
                         const WeightedDoublePoset& d2) {
  return gamma_product_sides(d1, d2).holds();
}

}  // namespace qsk
