#ifndef QSYMKIT_GAMMA_HPP
#define QSYMKIT_GAMMA_HPP

#include <span>
#include <vector>

#include "qsymkit/composition.hpp"
#include "qsymkit/poset.hpp"
#include "qsymkit/qsym.hpp"

namespace qsk {

// A double poset with a weight w : E -> {1,2,3,...}, indexed like the
// ground set.
class WeightedDoublePoset {
 public:
  WeightedDoublePoset() = default;
  // All-ones weight.
  explicit WeightedDoublePoset(DoublePoset poset);
  WeightedDoublePoset(DoublePoset poset, std::vector<int> weights);

  const DoublePoset& poset() const noexcept { return poset_; }
  std::span<const int> weights() const noexcept { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  std::size_t size() const noexcept { return poset_.size(); }
  int degree() const;

  bool operator==(const WeightedDoublePoset&) const = default;

 private:
  DoublePoset poset_;
  std::vector<int> weights_;
};

WeightedDoublePoset opposite1(const WeightedDoublePoset& d);
WeightedDoublePoset restrict(const WeightedDoublePoset& d, Subset t);
WeightedDoublePoset disjoint_union(const WeightedDoublePoset& d1,
                                   const WeightedDoublePoset& d2);

// Values of a map E -> {1,2,3,...}, indexed like the ground set.
using Labeling = std::vector<int>;

bool is_epartition(const DoublePoset& d, std::span<const int> pi);
// Checks the two conditions only along <_1-covers. Throws NotTertispecial
// unless d is tertispecial, where it agrees with is_epartition.
bool is_epartition_covers(const DoublePoset& d, std::span<const int> pi);

// A packed E-partition: image is exactly {1,...,k}.
struct PackedPartition {
  Labeling values;
  int k = 0;
  bool operator==(const PackedPartition&) const = default;
};

// All packed E-partitions, ordered by their value vectors.
std::vector<PackedPartition> packed_epartitions(const DoublePoset& d);

// alpha_i = sum of w(e) over e with phi(e) = i.
Composition ev_w(const WeightedDoublePoset& d, const PackedPartition& phi);

// Gamma(E, w) = sum over packed E-partitions phi of M_{ev_w phi}.
QSymElem gamma(const WeightedDoublePoset& d);

// sum over (P,Q) in Adm E of Gamma(E|_P) (x) Gamma(E|_Q).
Tensor admissible_coproduct(const WeightedDoublePoset& d);
bool gamma_coproduct_check(const WeightedDoublePoset& d);

struct IdentitySides {
  QSymElem lhs;
  QSymElem rhs;
  bool holds() const { return lhs == rhs; }
};

// S(Gamma(E, <1, <2, w)) against (-1)^|E| Gamma(E, >1, <2, w).
IdentitySides antipode_theorem_sides(const WeightedDoublePoset& d);
bool antipode_theorem_check(const WeightedDoublePoset& d);

// Gamma(E u F) against Gamma(E) Gamma(F).
IdentitySides gamma_product_sides(const WeightedDoublePoset& d1,
                                  const WeightedDoublePoset& d2);
bool gamma_product_check(const WeightedDoublePoset& d1,
                         const WeightedDoublePoset& d2);

}  // namespace qsk

#endif  // QSYMKIT_GAMMA_HPP
