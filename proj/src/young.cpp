#include "qsymkit/young.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "qsymkit/error.hpp"

namespace qsk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> cols;
  const int width = parts_.empty() ? 0 : parts_.front();
  for (int j = 1; j <= width; ++j) {
    cols.push_back(static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 1; i <= inner.length(); ++i) {
    if (inner.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto visit = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  visit(visit, n, n);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw InvalidArgument("inner partition " + inner_.str() +
                          " is not contained in " + outer_.str());
  }
  for (std::size_t i = 1; i <= outer_.length(); ++i) {
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) {
      cells_.emplace_back(static_cast<int>(i), j);
    }
  }
}

SkewShape SkewShape::conjugate() const {
  return SkewShape(outer_.conjugate(), inner_.conjugate());
}

std::string SkewShape::str() const {
  return inner_.length() == 0 ? outer_.str() : outer_.str() + "/" + inner_.str();
}

namespace {

Partition parse_partition(std::string_view text, std::string_view whole) {
  auto fail = [&]() -> Partition {
    throw ParseError("cannot parse shape '" + std::string(whole) +
                     "': expected a partition like [2,1]");
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return fail();
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view token = trim(body.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return fail();
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) return fail();
  }
  try {
    return Partition(std::move(parts));
  } catch (const InvalidArgument& e) {
    throw ParseError("cannot parse shape '" + std::string(whole) + "': " + e.what());
  }
}

}  // namespace

SkewShape parse_shape(std::string_view text) {
  const std::size_t slash = text.find('/');
  Partition outer = parse_partition(text.substr(0, slash), text);
  Partition inner;
  if (slash != std::string_view::npos) inner = parse_partition(text.substr(slash + 1), text);
  try {
    return SkewShape(std::move(outer), std::move(inner));
  } catch (const InvalidArgument& e) {
    throw ParseError("cannot parse shape '" + std::string(text) + "': " + e.what());
  }
}

std::string cell_label(const Cell& c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

namespace {

template <typename Less>
Relation relation_on(const std::vector<Cell>& cells, Less less) {
  Relation r(cells.size());
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (a != b && less(cells[a], cells[b])) r.set(a, b);
    }
  }
  return r;
}

bool young_lt1(const Cell& x, const Cell& y) {
  return x.first <= y.first && x.second <= y.second;
}

std::vector<std::string> cell_labels(const SkewShape& shape) {
  std::vector<std::string> labels;
  for (const auto& c : shape.cells()) labels.push_back(cell_label(c));
  return labels;
}

}  // namespace

WeightedDoublePoset build_Y(const SkewShape& shape) {
  const auto& cells = shape.cells();
  return WeightedDoublePoset(DoublePoset(
      cell_labels(shape), relation_on(cells, young_lt1),
      relation_on(cells, [](const Cell& x, const Cell& y) {
        return x.first >= y.first && x.second <= y.second;
      })));
}

WeightedDoublePoset build_Yh(const SkewShape& shape) {
  const auto& cells = shape.cells();
  return WeightedDoublePoset(DoublePoset(
      cell_labels(shape), relation_on(cells, young_lt1),
      relation_on(cells, [](const Cell& x, const Cell& y) {
        return x.first > y.first || (x.first == y.first && x.second < y.second);
      })));
}

bool is_ssyt(const SkewShape& shape, std::span<const int> filling) {
  const auto& cells = shape.cells();
  if (filling.size() != cells.size()) {
    throw InvalidArgument("filling must assign a value to every cell");
  }
  std::map<Cell, int> at;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (filling[k] < 1) throw InvalidArgument("filling values must be positive");
    at[cells[k]] = filling[k];
  }
  for (const auto& [cell, v] : at) {
    auto right = at.find({cell.first, cell.second + 1});
    if (right != at.end() && right->second < v) return false;
    auto below = at.find({cell.first + 1, cell.second});
    if (below != at.end() && below->second <= v) return false;
  }
  return true;
}

QSymElem skew_schur(const SkewShape& shape) { return gamma(build_Y(shape)); }

IdentitySides schur_antipode_sides(const SkewShape& shape) {
  IdentitySides sides;
  sides.lhs = antipode_closed(skew_schur(shape));
  sides.rhs = skew_schur(shape.conjugate());
  if (shape.cell_count() % 2 == 1) sides.rhs = -sides.rhs;
  return sides;
}

bool schur_antipode_check(const SkewShape& shape) {
  return schur_antipode_sides(shape).holds();
}

}  // namespace qsk
