#ifndef QSYMKIT_EQUIVARIANT_HPP
#define QSYMKIT_EQUIVARIANT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qsymkit/gamma.hpp"
#include "qsymkit/qsym.hpp"

namespace qsk {

// Bijection of {0,...,n-1}; image(i) is where i is sent.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless images is a bijection.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  std::span<const std::size_t> images() const noexcept { return images_; }

  // (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Cycles, each starting at its smallest element, ordered by that element.
  std::vector<std::vector<std::size_t>> cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

// +1 or -1: (-1)^(n - number of cycles).
int sign_of(const Permutation& g);

// pi o g^{-1}: the map sending e to pi(g^{-1} e).
Labeling act(const Permutation& g, std::span<const int> pi);

inline constexpr std::size_t kDefaultGroupCap = 5040;

// A finite permutation group acting on a weighted double poset and
// preserving <_1, <_2 and w. The identity is always elements()[0].
class GroupAction {
 public:
  const WeightedDoublePoset& base() const noexcept { return base_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  // The same group acting on another base with the same ground set (used
  // for the opposite orders). The caller guarantees preservation.
  GroupAction with_base(WeightedDoublePoset base) const;

 private:
  friend GroupAction build_action(const WeightedDoublePoset&,
                                  const std::vector<Permutation>&, std::size_t);
  WeightedDoublePoset base_;
  std::vector<Permutation> elements_;
};

// Closes the generators under composition. Throws NotPreserving with a
// witness when a generator breaks <_1, <_2 or w, and ClosureTooLarge when
// the group grows beyond cap.
GroupAction build_action(const WeightedDoublePoset& base,
                         const std::vector<Permutation>& generators,
                         std::size_t cap = kDefaultGroupCap);

// E^g with the induced relations and summed weights.
struct QuotientPoset {
  std::vector<std::vector<std::size_t>> orbits;
  WeightedDoublePoset quotient;
};

QuotientPoset quotient_by(const Permutation& g, const WeightedDoublePoset& base);

// (1/|G|) sum_g Gamma(E^g, w^g): one monomial per G-orbit of E-partitions.
QSymElem gamma_equivariant(const GroupAction& a);
// (1/|G|) sum_g sign(g) Gamma(E^g, w^g): one monomial per E-coeven orbit.
QSymElem gamma_plus(const GroupAction& a);

// S(Gamma(E,w,G)) against (-1)^|E| Gamma+((E,>1,<2),w,G). Throws
// NotTertispecial.
IdentitySides equivariant_theorem_sides(const GroupAction& a);
bool equivariant_theorem_check(const GroupAction& a);

}  // namespace qsk

#endif  // QSYMKIT_EQUIVARIANT_HPP
