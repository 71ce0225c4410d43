#include "qsymkit/families.hpp"

namespace qsk::families {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

WeightedDoublePoset antichain(std::size_t n) {
  return WeightedDoublePoset(DoublePoset(default_labels(n), Relation(n), Relation(n)));
}

WeightedDoublePoset chain(std::size_t n, ChainSecond second) {
  Relation r1(n), r2(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    r1.set(i, i + 1);
    if (second == ChainSecond::same) r2.set(i, i + 1);
    if (second == ChainSecond::opposite) r2.set(i + 1, i);
  }
  return WeightedDoublePoset(DoublePoset(default_labels(n), std::move(r1), std::move(r2)));
}

WeightedDoublePoset monomial_poset(const Composition& alpha) {
  const std::size_t l = alpha.length();
  WeightedDoublePoset c = chain(l, ChainSecond::opposite);
  return {c.poset(), std::vector<int>(alpha.parts().begin(), alpha.parts().end())};
}

WeightedDoublePoset copies(const WeightedDoublePoset& d, std::size_t k) {
  const std::size_t b = d.size();
  const std::size_t n = b * k;
  std::vector<std::string> labels;
  std::vector<int> weights;
  Relation r1(n), r2(n);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < b; ++i) {
      labels.push_back("c" + std::to_string(c + 1) + "." + d.poset().label(i));
      weights.push_back(d.weight(i));
      for (std::size_t j = 0; j < b; ++j) {
        if (d.poset().lt1(i, j)) r1.set(c * b + i, c * b + j);
        if (d.poset().lt2(i, j)) r2.set(c * b + i, c * b + j);
      }
    }
  }
  return {DoublePoset(std::move(labels), std::move(r1), std::move(r2)), std::move(weights)};
}

namespace {

Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

Permutation rotation(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Permutation(std::move(images));
}

}  // namespace

std::vector<Permutation> symmetric_generators(std::size_t n) {
  if (n < 2) return {};
  std::vector<Permutation> gens{transposition(n, 0, 1)};
  if (n > 2) gens.push_back(rotation(n));
  return gens;
}

std::vector<Permutation> cyclic_generators(std::size_t n) {
  if (n < 2) return {};
  return {rotation(n)};
}

std::vector<Permutation> block_symmetric_generators(std::size_t k, std::size_t block_size) {
  std::vector<Permutation> out;
  for (const auto& g : symmetric_generators(k)) {
    std::vector<std::size_t> images(k * block_size);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t i = 0; i < block_size; ++i) {
        images[c * block_size + i] = g(c) * block_size + i;
      }
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

}  // namespace qsk::families
