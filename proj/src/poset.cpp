#include "qsymkit/poset.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "qsymkit/error.hpp"

namespace qsk {

Relation::Relation(std::size_t n) : rows_(n, 0) {
  if (n > kMaxElements) {
    throw InvalidArgument("double posets are limited to " +
                          std::to_string(kMaxElements) + " elements");
  }
}

Subset Relation::predecessors(std::size_t j) const {
  Subset out = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (lt(i, j)) out |= bit(i);
  }
  return out;
}

bool Relation::covered_by(std::size_t i, std::size_t j) const {
  return lt(i, j) && (rows_[i] & predecessors(j)) == 0;
}

void Relation::transitive_close() {
  // Warshall: after round k, paths through {0..k} are present.
  const std::size_t n = rows_.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (lt(i, k)) rows_[i] |= rows_[k];
    }
  }
}

bool Relation::is_transitive() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Subset reach = rows_[i];
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (lt(i, j) && (rows_[j] & ~reach) != 0) return false;
    }
  }
  return true;
}

bool Relation::is_irreflexive() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (lt(i, i)) return false;
  }
  return true;
}

bool Relation::is_total() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = i + 1; j < rows_.size(); ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

Relation Relation::opposite() const {
  Relation out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (lt(i, j)) out.set(j, i);
    }
  }
  return out;
}

Relation Relation::induced(const std::vector<std::size_t>& indices) const {
  Relation out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) {
      if (lt(indices[a], indices[b])) out.set(a, b);
    }
  }
  return out;
}

std::vector<Relation> all_strict_orders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  if (pairs.size() >= 32) {
    throw InvalidArgument("all_strict_orders is limited to n <= 6");
  }
  std::vector<Relation> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Relation r(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) r.set(pairs[k].first, pairs[k].second);
    }
    if (r.is_strict_order()) out.push_back(std::move(r));
  }
  return out;
}

DoublePoset::DoublePoset(std::vector<std::string> labels, Relation lt1,
                         Relation lt2)
    : labels_(std::move(labels)), lt1_(std::move(lt1)), lt2_(std::move(lt2)) {
  if (labels_.size() > kMaxElements) {
    throw InvalidArgument("double posets are limited to " +
                          std::to_string(kMaxElements) + " elements");
  }
  if (lt1_.size() != labels_.size() || lt2_.size() != labels_.size()) {
    throw InvalidArgument("relation size does not match the ground set");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw InvalidArgument("duplicate element label '" + l + "'");
    }
  }
  lt1_.transitive_close();
  lt2_.transitive_close();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (lt1_.lt(i, i)) throw CycleError("<1", labels_[i]);
    if (lt2_.lt(i, i)) throw CycleError("<2", labels_[i]);
  }
}

DoublePoset DoublePoset::build(std::vector<std::string> elements,
                               const std::vector<LabelPair>& lt1_generators,
                               const std::vector<LabelPair>& lt2_generators) {
  const std::size_t n = elements.size();
  if (n > kMaxElements) {
    throw InvalidArgument("double posets are limited to " +
                          std::to_string(kMaxElements) + " elements");
  }
  auto lookup = [&](const std::string& label) {
    auto it = std::find(elements.begin(), elements.end(), label);
    if (it == elements.end()) {
      throw InvalidArgument("relation mentions undeclared element '" + label + "'");
    }
    return static_cast<std::size_t>(it - elements.begin());
  };
  Relation r1(n), r2(n);
  for (const auto& [a, b] : lt1_generators) r1.set(lookup(a), lookup(b));
  for (const auto& [a, b] : lt2_generators) r2.set(lookup(a), lookup(b));
  return DoublePoset(std::move(elements), std::move(r1), std::move(r2));
}

std::size_t DoublePoset::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidArgument("unknown element '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool is_special(const DoublePoset& d) { return d.lt2().is_total(); }

bool is_semispecial(const DoublePoset& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d.lt1(i, j) && !d.lt2().comparable(i, j)) return false;
    }
  }
  return true;
}

bool is_tertispecial(const DoublePoset& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d.lt1().covered_by(i, j) && !d.lt2().comparable(i, j)) return false;
    }
  }
  return true;
}

DoublePoset opposite1(const DoublePoset& d) {
  return DoublePoset(d.labels(), d.lt1().opposite(), d.lt2());
}

DoublePoset opposite2(const DoublePoset& d) {
  return DoublePoset(d.labels(), d.lt1(), d.lt2().opposite());
}

DoublePoset restrict(const DoublePoset& d, Subset t) {
  if ((t & ~full_subset(d.size())) != 0) {
    throw InvalidArgument("restriction subset is not contained in the ground set");
  }
  std::vector<std::size_t> indices;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (t & bit(i)) {
      indices.push_back(i);
      labels.push_back(d.label(i));
    }
  }
  return DoublePoset(std::move(labels), d.lt1().induced(indices),
                     d.lt2().induced(indices));
}

DoublePoset restrict(const DoublePoset& d, const std::vector<std::string>& labels) {
  Subset t = 0;
  for (const auto& l : labels) t |= bit(d.index_of(l));
  return restrict(d, t);
}

DoublePoset disjoint_union(const DoublePoset& d1, const DoublePoset& d2) {
  const std::size_t n1 = d1.size();
  const std::size_t n = n1 + d2.size();
  if (n > kMaxElements) {
    throw InvalidArgument("disjoint union exceeds the element limit");
  }
  std::vector<std::string> labels;
  for (const auto& l : d1.labels()) labels.push_back("0." + l);
  for (const auto& l : d2.labels()) labels.push_back("1." + l);
  Relation r1(n), r2(n);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      if (d1.lt1(i, j)) r1.set(i, j);
      if (d1.lt2(i, j)) r2.set(i, j);
    }
  }
  for (std::size_t i = 0; i < d2.size(); ++i) {
    for (std::size_t j = 0; j < d2.size(); ++j) {
      if (d2.lt1(i, j)) r1.set(n1 + i, n1 + j);
      if (d2.lt2(i, j)) r2.set(n1 + i, n1 + j);
    }
  }
  return DoublePoset(std::move(labels), std::move(r1), std::move(r2));
}

bool is_admissible(const DoublePoset& d, Subset p) {
  const Subset q = full_subset(d.size()) & ~p;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if ((q & bit(i)) && (d.lt1().successors(i) & p) != 0) return false;
  }
  return true;
}

bool is_admissible_covers(const DoublePoset& d, Subset p) {
  const Subset q = full_subset(d.size()) & ~p;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(q & bit(i))) continue;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if ((p & bit(j)) && d.lt1().covered_by(i, j)) return false;
    }
  }
  return true;
}

std::vector<AdmissiblePair> admissible_pairs(const DoublePoset& d) {
  const std::size_t n = d.size();
  // cover_pred[j] = elements covered by j, cover_succ[i] = elements covering i.
  std::vector<Subset> cover_pred(n, 0), cover_succ(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d.lt1().covered_by(i, j)) {
        cover_pred[j] |= bit(i);
        cover_succ[i] |= bit(j);
      }
    }
  }
  std::vector<AdmissiblePair> out;
  const Subset all = full_subset(n);
  // Decide membership in declaration order, "not in P" before "in P"; a
  // cover q -> p with q in Q and p in P is rejected as soon as both sides
  // are decided.
  auto visit = [&](auto&& self, std::size_t i, Subset decided, Subset p) -> void {
    if (i == n) {
      out.push_back({p, all & ~p});
      return;
    }
    const Subset decided_q = decided & ~p;
    // i in Q: nothing in P may cover i.
    if ((cover_succ[i] & p) == 0) self(self, i + 1, decided | bit(i), p);
    // i in P: nothing decided in Q may be covered by i.
    if ((cover_pred[i] & decided_q) == 0) {
      self(self, i + 1, decided | bit(i), p | bit(i));
    }
  };
  visit(visit, 0, 0, 0);
  return out;
}

std::vector<std::string> subset_labels(const DoublePoset& d, Subset s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (s & bit(i)) out.push_back(d.label(i));
  }
  return out;
}

}  // namespace qsk
