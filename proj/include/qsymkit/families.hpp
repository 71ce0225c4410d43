#ifndef QSYMKIT_FAMILIES_HPP
#define QSYMKIT_FAMILIES_HPP

#include <cstddef>
#include <vector>

#include "qsymkit/equivariant.hpp"
#include "qsymkit/gamma.hpp"

// Standard small double posets and group generators used by the
// verification suites and the tests.
namespace qsk::families {

// Labels e1, e2, ...
std::vector<std::string> default_labels(std::size_t n);

WeightedDoublePoset antichain(std::size_t n);

// How <2 relates to the chain order e1 <1 e2 <1 ... <1 en.
enum class ChainSecond { same, opposite, none };
WeightedDoublePoset chain(std::size_t n, ChainSecond second);

// {1..l} with <1 the usual order and <2 its opposite, w = alpha: Gamma = M_alpha.
WeightedDoublePoset monomial_poset(const Composition& alpha);

// k copies of d glued by disjoint union, labels "c<i>.<label>".
WeightedDoublePoset copies(const WeightedDoublePoset& d, std::size_t k);

// Generators of the full symmetric group and of the cyclic group on n points.
std::vector<Permutation> symmetric_generators(std::size_t n);
std::vector<Permutation> cyclic_generators(std::size_t n);
// Generators permuting the k blocks of size block_size in copies().
std::vector<Permutation> block_symmetric_generators(std::size_t k, std::size_t block_size);

}  // namespace qsk::families

#endif  // QSYMKIT_FAMILIES_HPP
