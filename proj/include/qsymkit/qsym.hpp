#ifndef QSYMKIT_QSYM_HPP
#define QSYMKIT_QSYM_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsymkit/composition.hpp"

namespace qsk {

// Exact rational; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational binomial(long long n, long long k);  // generalized: n may be negative

// Finite linear combination of monomial quasisymmetric functions M_alpha.
// No stored coefficient is zero.
class QSymElem {
 public:
  using Terms = std::map<Composition, Rational>;

  QSymElem() = default;
  static QSymElem monomial(const Composition& alpha, const Rational& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  Rational coeff(const Composition& alpha) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const;
  // Degree of the highest term, -1 for zero.
  int max_degree() const;
  bool has_integer_coefficients() const;

  // Adds c*M_alpha, dropping the term if it cancels.
  void add_term(const Composition& alpha, const Rational& c);

  QSymElem& operator+=(const QSymElem& other);
  QSymElem& operator-=(const QSymElem& other);
  QSymElem& operator*=(const Rational& c);
  friend QSymElem operator+(QSymElem a, const QSymElem& b) { return a += b; }
  friend QSymElem operator-(QSymElem a, const QSymElem& b) { return a -= b; }
  friend QSymElem operator*(QSymElem a, const Rational& c) { return a *= c; }
  friend QSymElem operator*(const Rational& c, QSymElem a) { return a *= c; }
  QSymElem operator-() const { return *this * Rational(-1); }

  bool operator==(const QSymElem& other) const { return terms_ == other.terms_; }

  // Homogeneous components keyed by degree.
  std::map<int, QSymElem> homogeneous_components() const;

  // `2*M(2,1) - 1/3*M(1) + M()`; zero prints as `0`.
  std::string str() const;

 private:
  Terms terms_;
};

QSymElem monomial(const Composition& alpha);
QSymElem fundamental(const Composition& alpha);

// Multiplication inside the polynomial ring truncated to deg f + deg g
// variables, read back through the packed monomials.
QSymElem product(const QSymElem& f, const QSymElem& g);

// One term of a coproduct: M_left (x) right.
struct TensorTerm {
  Composition left;
  QSymElem right;
  bool operator==(const TensorTerm&) const = default;
};
// Sorted by left, distinct left factors, no zero right factors.
using Tensor = std::vector<TensorTerm>;

// Accumulates c * M_left (x) right into a normalized tensor.
void tensor_add(Tensor& t, const Composition& left, const QSymElem& right,
                const Rational& c = 1);
// Sum of (f_i (x) g_i) expanded in the left basis.
void tensor_add(Tensor& t, const QSymElem& left, const QSymElem& right);
std::string to_string(const Tensor& t);

// Deconcatenation coproduct.
Tensor coproduct(const QSymElem& f);
Rational counit(const QSymElem& f);
// S(M_alpha) = (-1)^l sum_{D(gamma) subset of D(rev alpha)} M_gamma.
QSymElem antipode_closed(const QSymElem& f);
// Degree-by-degree solution of m o (S (x) id) o Delta = u o epsilon.
QSymElem antipode_recursive(const QSymElem& f);

using AntipodeFn = QSymElem (*)(const QSymElem&);
// m o (S (x) id) applied to a tensor.
QSymElem antipode_convolution(const Tensor& t, AntipodeFn antipode = antipode_closed);

bool antipode_fundamental_identity_check(const Composition& alpha);

// Substitutes 1 for x_1..x_q and 0 for the remaining variables.
Rational ps1(const QSymElem& f, long long q);

// Inverse of QSymElem::str.
QSymElem parse_qsym(std::string_view text);

}  // namespace qsk

#endif  // QSYMKIT_QSYM_HPP
