#include "qsymkit/equivariant.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qsymkit/error.hpp"

namespace qsk {

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || hit[v]) {
      throw InvalidArgument("permutation is not a bijection of the ground set");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.size() != size()) {
    throw InvalidArgument("cannot compose permutations of different sizes");
  }
  std::vector<std::size_t> images(size());
  for (std::size_t i = 0; i < size(); ++i) images[i] = images_[other.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> images(size());
  for (std::size_t i = 0; i < size(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int sign_of(const Permutation& g) {
  const std::size_t parity = (g.size() - g.cycles().size()) % 2;
  return parity == 0 ? 1 : -1;
}

Labeling act(const Permutation& g, std::span<const int> pi) {
  if (pi.size() != g.size()) {
    throw InvalidArgument("labeling and permutation sizes differ");
  }
  // (g pi)(g e) = pi(e).
  Labeling out(pi.size());
  for (std::size_t e = 0; e < pi.size(); ++e) out[g(e)] = pi[e];
  return out;
}

GroupAction GroupAction::with_base(WeightedDoublePoset base) const {
  if (base.size() != base_.size()) {
    throw InvalidArgument("replacement base has a different ground set");
  }
  GroupAction out = *this;
  out.base_ = std::move(base);
  return out;
}

namespace {

void check_preserves(const WeightedDoublePoset& base, const Permutation& g,
                     std::size_t index) {
  const DoublePoset& d = base.poset();
  auto describe = [&](std::size_t a, std::size_t b) {
    return "(" + d.label(a) + ", " + d.label(b) + ") -> (" + d.label(g(a)) +
           ", " + d.label(g(b)) + ")";
  };
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (d.lt1(a, b) && !d.lt1(g(a), g(b))) {
        throw NotPreserving("generator " + std::to_string(index) +
                            " does not preserve <1: " + describe(a, b));
      }
      if (d.lt2(a, b) && !d.lt2(g(a), g(b))) {
        throw NotPreserving("generator " + std::to_string(index) +
                            " does not preserve <2: " + describe(a, b));
      }
    }
    if (base.weight(g(a)) != base.weight(a)) {
      throw NotPreserving("generator " + std::to_string(index) +
                          " does not preserve w: " + d.label(a) + " -> " +
                          d.label(g(a)));
    }
  }
}

}  // namespace

GroupAction build_action(const WeightedDoublePoset& base,
                         const std::vector<Permutation>& generators,
                         std::size_t cap) {
  const std::size_t n = base.size();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].size() != n) {
      throw InvalidArgument("generator " + std::to_string(k) +
                            " does not act on the ground set");
    }
    check_preserves(base, generators[k], k);
  }
  std::set<Permutation> group{Permutation::identity(n)};
  std::deque<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    const Permutation h = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = g * h;
      if (group.insert(next).second) {
        if (group.size() > cap) {
          throw ClosureTooLarge("group generated exceeds the cap of " +
                                std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  GroupAction a;
  a.base_ = base;
  // The identity is the lexicographically smallest permutation.
  a.elements_.assign(group.begin(), group.end());
  return a;
}

QuotientPoset quotient_by(const Permutation& g, const WeightedDoublePoset& base) {
  const DoublePoset& d = base.poset();
  if (g.size() != d.size()) {
    throw InvalidArgument("permutation does not act on the ground set");
  }
  QuotientPoset out;
  out.orbits = g.cycles();
  const std::size_t m = out.orbits.size();
  std::vector<Subset> members(m, 0);
  std::vector<std::string> labels;
  std::vector<int> weights;
  for (std::size_t u = 0; u < m; ++u) {
    std::string label = "{";
    int w = 0;
    for (std::size_t k = 0; k < out.orbits[u].size(); ++k) {
      const std::size_t a = out.orbits[u][k];
      members[u] |= bit(a);
      if (k) label += ',';
      label += d.label(a);
      w += base.weight(a);
    }
    labels.push_back(label + "}");
    weights.push_back(w);
  }
  Relation r1(m), r2(m);
  for (std::size_t u = 0; u < m; ++u) {
    Subset reach1 = 0, reach2 = 0;
    for (std::size_t a : out.orbits[u]) {
      reach1 |= d.lt1().successors(a);
      reach2 |= d.lt2().successors(a);
    }
    for (std::size_t v = 0; v < m; ++v) {
      if (reach1 & members[v]) r1.set(u, v);
      if (reach2 & members[v]) r2.set(u, v);
    }
  }
  if (!r1.is_strict_order() || !r2.is_strict_order()) {
    throw InternalError(
        "quotient relation is not a strict partial order; the permutation "
        "does not preserve the orders");
  }
  out.quotient = WeightedDoublePoset(
      DoublePoset(std::move(labels), std::move(r1), std::move(r2)),
      std::move(weights));
  return out;
}

namespace {

QSymElem averaged_gamma(const GroupAction& a, bool signed_sum) {
  QSymElem total;
  for (const auto& g : a.elements()) {
    QSymElem term = gamma(quotient_by(g, a.base()).quotient);
    if (signed_sum && sign_of(g) < 0) term = -term;
    total += term;
  }
  total *= Rational(1, static_cast<unsigned long>(a.order()));
  if (!total.has_integer_coefficients()) {
    throw InternalError("orbit average has a non-integral coefficient: " +
                        total.str());
  }
  return total;
}

}  // namespace

QSymElem gamma_equivariant(const GroupAction& a) { return averaged_gamma(a, false); }

QSymElem gamma_plus(const GroupAction& a) { return averaged_gamma(a, true); }

IdentitySides equivariant_theorem_sides(const GroupAction& a) {
  if (!is_tertispecial(a.base().poset())) {
    throw NotTertispecial(
        "the equivariant antipode identity needs a tertispecial base");
  }
  IdentitySides sides;
  sides.lhs = antipode_closed(gamma_equivariant(a));
  sides.rhs = gamma_plus(a.with_base(opposite1(a.base())));
  if (a.base().size() % 2 == 1) sides.rhs = -sides.rhs;
  return sides;
}

bool equivariant_theorem_check(const GroupAction& a) {
  return equivariant_theorem_sides(a).holds();
}

}  // namespace qsk
