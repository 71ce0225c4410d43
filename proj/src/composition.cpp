#include "qsymkit/composition.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <numeric>

#include "qsymkit/error.hpp"

namespace qsk {

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw InvalidArgument("composition parts must be positive, got " +
                            std::to_string(p));
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::slice(std::size_t first, std::size_t last) const {
  return Composition(std::vector<int>(parts_.begin() + first,
                                      parts_.begin() + last));
}

std::strong_ordering Composition::operator<=>(const Composition& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  if (auto c = parts_.size() <=> other.parts_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end());
}

std::string Composition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

DescentSet::DescentSet(int n, std::vector<int> members)
    : n_(n), members_(std::move(members)) {
  if (n < 0) throw InvalidArgument("descent set ambient size must be >= 0");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int u : members_) {
    if (u < 1 || u > n - 1) {
      throw InvalidArgument("descent set member " + std::to_string(u) +
                            " outside {1,...," + std::to_string(n - 1) + "}");
    }
  }
}

bool DescentSet::contains(int u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

bool DescentSet::is_subset_of(const DescentSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

DescentSet DescentSet::complement() const {
  std::vector<int> rest;
  for (int u = 1; u < n_; ++u) {
    if (!contains(u)) rest.push_back(u);
  }
  return DescentSet(n_, std::move(rest));
}

DescentSet descent_set(const Composition& alpha) {
  std::vector<int> sums;
  int running = 0;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    running += alpha[i];
    sums.push_back(running);
  }
  return DescentSet(alpha.size(), std::move(sums));
}

Composition comp_of_subset(const DescentSet& d) {
  if (d.n() == 0) return {};
  std::vector<int> parts;
  int prev = 0;
  for (int u : d.members()) {
    parts.push_back(u - prev);
    prev = u;
  }
  parts.push_back(d.n() - prev);
  return Composition(std::move(parts));
}

Composition reverse(const Composition& alpha) {
  std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
  return Composition(std::move(parts));
}

Composition conjugate(const Composition& alpha) {
  return comp_of_subset(descent_set(reverse(alpha)).complement());
}

std::vector<DescentSet> subsets_of_interval(int n) {
  std::vector<DescentSet> out;
  if (n <= 1) {
    out.emplace_back(std::max(n, 0), std::vector<int>{});
    return out;
  }
  const unsigned count = 1u << (n - 1);
  out.reserve(count);
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<int> members;
    for (int u = 1; u < n; ++u) {
      if (mask & (1u << (u - 1))) members.push_back(u);
    }
    out.emplace_back(n, std::move(members));
  }
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  for (const auto& d : subsets_of_interval(n)) out.push_back(comp_of_subset(d));
  std::sort(out.begin(), out.end());
  return out;
}

Composition parse_composition(std::string_view text) {
  auto skip_ws = [&](std::size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  std::size_t i = 0;
  skip_ws(i);
  if (i >= text.size() || text[i] != '(') {
    throw ParseError("composition must start with '(': " + std::string(text));
  }
  ++i;
  std::vector<int> parts;
  skip_ws(i);
  if (i < text.size() && text[i] == ')') {
    ++i;
  } else {
    while (true) {
      skip_ws(i);
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + i) {
        throw ParseError("expected a positive integer in composition: " +
                         std::string(text));
      }
      if (value < 1) {
        throw ParseError("composition parts must be positive: " +
                         std::string(text));
      }
      parts.push_back(value);
      i = static_cast<std::size_t>(ptr - text.data());
      skip_ws(i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')' in composition: " +
                       std::string(text));
    }
  }
  skip_ws(i);
  if (i != text.size()) {
    throw ParseError("trailing characters after composition: " +
                     std::string(text));
  }
  return Composition(std::move(parts));
}

}  // namespace qsk
