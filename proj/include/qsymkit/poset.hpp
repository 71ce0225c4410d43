#ifndef QSYMKIT_POSET_HPP
#define QSYMKIT_POSET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsk {

// Subsets of a ground set of at most 64 elements, bit i = element i.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

inline Subset bit(std::size_t i) { return Subset{1} << i; }
inline Subset full_subset(std::size_t n) {
  return n >= 64 ? ~Subset{0} : (bit(n) - 1);
}

// Binary relation on {0,...,n-1}; row i holds the j with i < j.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);

  std::size_t size() const noexcept { return rows_.size(); }
  bool lt(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j) { rows_[i] |= bit(j); }
  Subset successors(std::size_t i) const { return rows_[i]; }
  Subset predecessors(std::size_t j) const;

  bool comparable(std::size_t i, std::size_t j) const {
    return i == j || lt(i, j) || lt(j, i);
  }
  // i < j with nothing strictly between.
  bool covered_by(std::size_t i, std::size_t j) const;

  void transitive_close();
  bool is_transitive() const;
  bool is_irreflexive() const;
  bool is_strict_order() const { return is_irreflexive() && is_transitive(); }
  bool is_total() const;

  Relation opposite() const;
  // Relation induced on the listed indices, renumbered 0..k-1.
  Relation induced(const std::vector<std::size_t>& indices) const;

  bool operator==(const Relation&) const = default;

 private:
  std::vector<Subset> rows_;
};

// All strict partial orders on {0,...,n-1} (19 for n = 3, 219 for n = 4),
// in increasing order of their pair bitmask.
std::vector<Relation> all_strict_orders(std::size_t n);

// A finite set with two strict partial orders, both stored transitively
// closed. Immutable after construction.
class DoublePoset {
 public:
  using LabelPair = std::pair<std::string, std::string>;

  DoublePoset() = default;
  // Closes both relations; throws CycleError if either closure is not
  // irreflexive and InvalidArgument on duplicate labels or size mismatch.
  DoublePoset(std::vector<std::string> labels, Relation lt1, Relation lt2);

  static DoublePoset build(std::vector<std::string> elements,
                           const std::vector<LabelPair>& lt1_generators,
                           const std::vector<LabelPair>& lt2_generators);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  // Throws InvalidArgument for unknown labels.
  std::size_t index_of(std::string_view label) const;

  const Relation& lt1() const noexcept { return lt1_; }
  const Relation& lt2() const noexcept { return lt2_; }
  bool lt1(std::size_t i, std::size_t j) const { return lt1_.lt(i, j); }
  bool lt2(std::size_t i, std::size_t j) const { return lt2_.lt(i, j); }

  bool operator==(const DoublePoset&) const = default;

 private:
  std::vector<std::string> labels_;
  Relation lt1_;
  Relation lt2_;
};

bool is_special(const DoublePoset& d);
bool is_semispecial(const DoublePoset& d);
bool is_tertispecial(const DoublePoset& d);

// (E, >_1, <_2).
DoublePoset opposite1(const DoublePoset& d);
// (E, <_1, >_2).
DoublePoset opposite2(const DoublePoset& d);

DoublePoset restrict(const DoublePoset& d, Subset t);
DoublePoset restrict(const DoublePoset& d, const std::vector<std::string>& labels);

// Ground set {0.x} followed by {1.y}; no relations across the two parts.
DoublePoset disjoint_union(const DoublePoset& d1, const DoublePoset& d2);

// (P, Q) with P a down-set of (E, <_1) and Q its complement.
struct AdmissiblePair {
  Subset p = 0;
  Subset q = 0;
  bool operator==(const AdmissiblePair&) const = default;
};

// Raw definition: no p in P and q in Q with q <_1 p.
bool is_admissible(const DoublePoset& d, Subset p);
// Same test restricted to <_1-cover pairs.
bool is_admissible_covers(const DoublePoset& d, Subset p);

// Lexicographic in the characteristic vector over declaration order, so
// (empty, E) comes first and (E, empty) last.
std::vector<AdmissiblePair> admissible_pairs(const DoublePoset& d);

std::vector<std::string> subset_labels(const DoublePoset& d, Subset s);

}  // namespace qsk

#endif  // QSYMKIT_POSET_HPP
