#include "qsymkit/orderpoly.hpp"

#include "qsymkit/error.hpp"

namespace qsk {

OrderPolynomial::OrderPolynomial(std::vector<Rational> binomial_coefficients)
    : coeffs_(std::move(binomial_coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int OrderPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Rational OrderPolynomial::operator()(long long q) const {
  Rational total = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    total += coeffs_[k] * binomial(q, static_cast<long long>(k));
  }
  return total;
}

std::vector<Rational> OrderPolynomial::power_coefficients() const {
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  // falling[i] = coefficient of q^i in q (q-1) ... (q-k+1).
  std::vector<Rational> falling{Rational(1)};
  Rational factorial = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) {
      std::vector<Rational> next(falling.size() + 1, Rational(0));
      const Rational shift = -static_cast<long>(k - 1);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] += falling[i] * shift;
      }
      falling = std::move(next);
      factorial *= static_cast<long>(k);
    }
    for (std::size_t i = 0; i < falling.size(); ++i) {
      out[i] += coeffs_[k] * falling[i] / factorial;
    }
  }
  return out;
}

namespace {

std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  bool first = true;
  for (const auto& [c, basis] : terms) {
    if (c == 0) continue;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (basis.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += basis;
    }
  }
  return first ? "0" : out;
}

}  // namespace

std::string OrderPolynomial::binomial_str() const {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    terms.emplace_back(coeffs_[k], "C(q," + std::to_string(k) + ")");
  }
  return join_terms(terms);
}

std::string OrderPolynomial::power_str() const {
  const auto p = power_coefficients();
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t i = p.size(); i-- > 0;) {
    std::string basis = i == 0 ? "" : i == 1 ? "q" : "q^" + std::to_string(i);
    terms.emplace_back(p[i], basis);
  }
  return join_terms(terms);
}

OrderPolynomial ps1_polynomial(const QSymElem& f) {
  std::vector<Rational> coeffs;
  for (const auto& [alpha, c] : f.terms()) {
    const std::size_t l = alpha.length();
    if (coeffs.size() <= l) coeffs.resize(l + 1, Rational(0));
    coeffs[l] += c;
  }
  return OrderPolynomial(std::move(coeffs));
}

OrderPolynomial order_polynomial(const GroupAction& a) {
  const GroupAction unweighted = a.with_base(WeightedDoublePoset(a.base().poset()));
  return ps1_polynomial(gamma_equivariant(unweighted));
}

namespace {

std::uint64_t count_orbits(const GroupAction& a, long long q, std::uint64_t limit,
                           bool coeven_only) {
  const DoublePoset& d = a.base().poset();
  const std::size_t n = d.size();
  if (q < 0) throw InvalidArgument("q must be nonnegative");
  std::uint64_t total_maps = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (q != 0 && total_maps > limit / static_cast<std::uint64_t>(q)) {
      throw BoundExceeded("enumerating " + std::to_string(q) + "^" +
                          std::to_string(n) + " maps exceeds the limit of " +
                          std::to_string(limit));
    }
    total_maps *= static_cast<std::uint64_t>(q);
  }
  if (total_maps > limit) {
    throw BoundExceeded("enumeration exceeds the limit of " + std::to_string(limit));
  }
  if (n > 0 && q == 0) return 0;

  std::uint64_t count = 0;
  Labeling pi(n, 1);
  while (true) {
    if (is_epartition(d, pi)) {
      // pi represents its orbit when it is the smallest element of it.
      bool smallest = true;
      bool coeven = true;
      for (const auto& g : a.elements()) {
        const Labeling image = act(g, pi);
        if (image < pi) {
          smallest = false;
          break;
        }
        if (image == pi && sign_of(g) < 0) coeven = false;
      }
      if (smallest && (coeven || !coeven_only)) ++count;
    }
    std::size_t i = 0;
    while (i < n && pi[i] == q) pi[i++] = 1;
    if (i == n) break;
    ++pi[i];
  }
  return count;
}

}  // namespace

std::uint64_t count_orbits_bruteforce(const GroupAction& a, long long q,
                                      std::uint64_t limit) {
  return count_orbits(a, q, limit, false);
}

std::uint64_t count_coeven_orbits_bruteforce(const GroupAction& a, long long q,
                                             std::uint64_t limit) {
  return count_orbits(a, q, limit, true);
}

ReciprocitySides reciprocity_sides(const GroupAction& a, long long q,
                                   std::uint64_t limit) {
  if (!is_tertispecial(a.base().poset())) {
    throw NotTertispecial("reciprocity needs a tertispecial base");
  }
  ReciprocitySides sides;
  sides.polynomial_value = order_polynomial(a)(-q);
  const GroupAction opposite = a.with_base(opposite1(a.base()));
  sides.signed_coeven_count =
      Rational(static_cast<unsigned long>(count_coeven_orbits_bruteforce(opposite, q, limit)));
  if (a.base().size() % 2 == 1) sides.signed_coeven_count = -sides.signed_coeven_count;
  return sides;
}

bool reciprocity_check(const GroupAction& a, long long q, std::uint64_t limit) {
  return reciprocity_sides(a, q, limit).holds();
}

}  // namespace qsk
