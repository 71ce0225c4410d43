#ifndef QSYMKIT_YOUNG_HPP
#define QSYMKIT_YOUNG_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsymkit/gamma.hpp"
#include "qsymkit/qsym.hpp"

namespace qsk {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const;
  // lambda_i for 1-based i, 0 past the end.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  std::string str() const;  // `[2,1]`

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, largest first part first.
std::vector<Partition> partitions_of(int n);

using Cell = std::pair<int, int>;  // (row, column), both 1-based

class SkewShape {
 public:
  SkewShape() = default;
  // Throws InvalidArgument unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  // Row-major order.
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }

  SkewShape conjugate() const;
  std::string str() const;  // `[2,1]/[1]`, or `[2,1]` when inner is empty

 private:
  Partition outer_;
  Partition inner_;
  std::vector<Cell> cells_;
};

// `[2,1]` or `[2,1]/[1]`.
SkewShape parse_shape(std::string_view text);

std::string cell_label(const Cell& c);

// (i,j) <1 (i',j') iff i <= i', j <= j'; (i,j) <2 (i',j') iff i >= i', j <= j'.
WeightedDoublePoset build_Y(const SkewShape& shape);
// <1 as above with the total order (i,j) <h (i',j') iff i > i' or (i = i', j < j').
WeightedDoublePoset build_Yh(const SkewShape& shape);

// Rows weakly increase, columns strictly increase. Filling is indexed like
// shape.cells().
bool is_ssyt(const SkewShape& shape, std::span<const int> filling);

QSymElem skew_schur(const SkewShape& shape);

// S(s_{lambda/mu}) against (-1)^|lambda/mu| s_{lambda^t/mu^t}.
IdentitySides schur_antipode_sides(const SkewShape& shape);
bool schur_antipode_check(const SkewShape& shape);

}  // namespace qsk

#endif  // QSYMKIT_YOUNG_HPP
