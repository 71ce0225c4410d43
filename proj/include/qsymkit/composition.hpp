#ifndef QSYMKIT_COMPOSITION_HPP
#define QSYMKIT_COMPOSITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsk {

// A finite sequence of positive integers. The empty composition is the
// only composition of 0.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }

  // Parts [first, last) as a new composition.
  Composition slice(std::size_t first, std::size_t last) const;

  // Deterministic order: size, then length, then parts lexicographically.
  std::strong_ordering operator<=>(const Composition& other) const;
  bool operator==(const Composition& other) const = default;

  std::string str() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Composition concat(const Composition& a, const Composition& b);

// Subset of {1,...,n-1} together with its ambient n.
class DescentSet {
 public:
  DescentSet() = default;
  // Throws InvalidArgument unless every member lies in [1, n-1].
  DescentSet(int n, std::vector<int> members);

  int n() const noexcept { return n_; }
  std::span<const int> members() const noexcept { return members_; }
  bool contains(int u) const;
  bool is_subset_of(const DescentSet& other) const;

  // [n-1] minus this set.
  DescentSet complement() const;

  bool operator==(const DescentSet& other) const = default;

 private:
  int n_ = 0;
  std::vector<int> members_;  // sorted, distinct
};

DescentSet descent_set(const Composition& alpha);
Composition comp_of_subset(const DescentSet& d);
Composition reverse(const Composition& alpha);
// omega(alpha): D(omega(alpha)) = [n-1] \ D(rev alpha).
Composition conjugate(const Composition& alpha);

// All compositions of n in the deterministic order.
std::vector<Composition> compositions_of(int n);
// All subsets of [n-1] as descent sets, in increasing bitmask order.
std::vector<DescentSet> subsets_of_interval(int n);

// `(2,1,3)`, `()`; whitespace around tokens is ignored.
Composition parse_composition(std::string_view text);

}  // namespace qsk

#endif  // QSYMKIT_COMPOSITION_HPP
