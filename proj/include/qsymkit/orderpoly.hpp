#ifndef QSYMKIT_ORDERPOLY_HPP
#define QSYMKIT_ORDERPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsymkit/equivariant.hpp"
#include "qsymkit/qsym.hpp"

namespace qsk {

// Univariate polynomial stored in the binomial basis: sum_k c_k C(q, k).
class OrderPolynomial {
 public:
  OrderPolynomial() = default;
  explicit OrderPolynomial(std::vector<Rational> binomial_coefficients);

  const std::vector<Rational>& binomial_coefficients() const noexcept {
    return coeffs_;
  }
  // Power-basis coefficients, constant term first.
  std::vector<Rational> power_coefficients() const;
  int degree() const;

  // Any integer argument, including negative ones.
  Rational operator()(long long q) const;

  std::string binomial_str() const;  // `2*C(q,2) + C(q,1)`
  std::string power_str() const;     // `1/2*q^2 + 1/2*q`

  bool operator==(const OrderPolynomial&) const = default;

 private:
  std::vector<Rational> coeffs_;  // trailing zeros trimmed
};

// ps^1 as a polynomial in q: M_alpha -> C(q, l(alpha)).
OrderPolynomial ps1_polynomial(const QSymElem& f);

// Omega_{E,G}: ps^1(Gamma(E, 1, G)).
OrderPolynomial order_polynomial(const GroupAction& a);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 2'000'000;

// Number of G-orbits on the E-partitions with values in {1..q}, found by
// listing every map E -> [q]. Throws BoundExceeded when q^|E| > limit.
std::uint64_t count_orbits_bruteforce(const GroupAction& a, long long q,
                                      std::uint64_t limit = kDefaultEnumerationLimit);
// Same, counting only orbits whose stabilizers act by even permutations.
std::uint64_t count_coeven_orbits_bruteforce(
    const GroupAction& a, long long q,
    std::uint64_t limit = kDefaultEnumerationLimit);

struct ReciprocitySides {
  Rational polynomial_value;       // Omega(-q)
  Rational signed_coeven_count;    // (-1)^|E| #coeven orbits on Par_q(E,>1,<2)
  bool holds() const { return polynomial_value == signed_coeven_count; }
};

// Throws NotTertispecial and BoundExceeded.
ReciprocitySides reciprocity_sides(const GroupAction& a, long long q,
                                   std::uint64_t limit = kDefaultEnumerationLimit);
bool reciprocity_check(const GroupAction& a, long long q,
                       std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace qsk

#endif  // QSYMKIT_ORDERPOLY_HPP
