#include "qsymkit/qsym.hpp"

#include <algorithm>
#include <cctype>

#include "qsymkit/error.hpp"

namespace qsk {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational binomial(long long n, long long k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  mpz_class den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= static_cast<long>(n - i);
    den *= static_cast<long>(i + 1);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

QSymElem QSymElem::monomial(const Composition& alpha, const Rational& c) {
  QSymElem f;
  f.add_term(alpha, c);
  return f;
}

Rational QSymElem::coeff(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool QSymElem::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int n = terms_.begin()->first.size();
  return std::all_of(terms_.begin(), terms_.end(),
                     [n](const auto& t) { return t.first.size() == n; });
}

int QSymElem::max_degree() const {
  // Keys are ordered by size first.
  return terms_.empty() ? -1 : terms_.rbegin()->first.size();
}

bool QSymElem::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.second.get_den() == 1;
  });
}

void QSymElem::add_term(const Composition& alpha, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QSymElem& QSymElem::operator+=(const QSymElem& other) {
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

QSymElem& QSymElem::operator-=(const QSymElem& other) {
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

QSymElem& QSymElem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

std::map<int, QSymElem> QSymElem::homogeneous_components() const {
  std::map<int, QSymElem> out;
  for (const auto& [alpha, c] : terms_) out[alpha.size()].add_term(alpha, c);
  return out;
}

std::string QSymElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    if (mag != 1) {
      out += to_string(mag);
      out += '*';
    }
    out += 'M';
    out += alpha.str();
  }
  return out;
}

QSymElem monomial(const Composition& alpha) { return QSymElem::monomial(alpha); }

QSymElem fundamental(const Composition& alpha) {
  const DescentSet d = descent_set(alpha);
  QSymElem f;
  for (const auto& s : subsets_of_interval(alpha.size())) {
    if (d.is_subset_of(s)) f.add_term(comp_of_subset(s), 1);
  }
  return f;
}

namespace {

Composition drop_zeros(const std::vector<int>& exps) {
  std::vector<int> parts;
  for (int e : exps) {
    if (e) parts.push_back(e);
  }
  return Composition(std::move(parts));
}

// Coefficient of x_1^gamma_1 ... x_k^gamma_k in f*g, both homogeneous with
// deg f + deg g = |gamma|. A quasisymmetric f has [x^a]f = f[drop_zeros(a)].
Rational packed_coefficient(const QSymElem& f, int deg_f, const QSymElem& g,
                            const Composition& gamma) {
  const std::size_t k = gamma.length();
  std::vector<int> a(k, 0);
  std::vector<int> b(gamma.parts().begin(), gamma.parts().end());
  Rational total = 0;
  // Odometer over 0 <= a_i <= gamma_i with |a| = deg f.
  auto visit = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == k) {
      if (remaining != 0) return;
      const Rational cf = f.coeff(drop_zeros(a));
      if (cf == 0) return;
      const Rational cg = g.coeff(drop_zeros(b));
      if (cg != 0) total += cf * cg;
      return;
    }
    const int hi = std::min(gamma[i], remaining);
    for (int v = 0; v <= hi; ++v) {
      a[i] = v;
      b[i] = gamma[i] - v;
      self(self, i + 1, remaining - v);
    }
    a[i] = 0;
    b[i] = gamma[i];
  };
  visit(visit, 0, deg_f);
  return total;
}

}  // namespace

QSymElem product(const QSymElem& f, const QSymElem& g) {
  QSymElem out;
  const auto fc = f.homogeneous_components();
  const auto gc = g.homogeneous_components();
  for (const auto& [df, fh] : fc) {
    for (const auto& [dg, gh] : gc) {
      for (const auto& gamma : compositions_of(df + dg)) {
        out.add_term(gamma, packed_coefficient(fh, df, gh, gamma));
      }
    }
  }
  return out;
}

void tensor_add(Tensor& t, const Composition& left, const QSymElem& right,
                const Rational& c) {
  if (c == 0 || right.is_zero()) return;
  auto it = std::lower_bound(
      t.begin(), t.end(), left,
      [](const TensorTerm& term, const Composition& key) { return term.left < key; });
  if (it == t.end() || it->left != left) {
    it = t.insert(it, TensorTerm{left, QSymElem{}});
  }
  it->right += right * c;
  if (it->right.is_zero()) t.erase(it);
}

void tensor_add(Tensor& t, const QSymElem& left, const QSymElem& right) {
  for (const auto& [alpha, c] : left.terms()) tensor_add(t, alpha, right, c);
}

std::string to_string(const Tensor& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& term : t) {
    out += "M" + term.left.str() + " (x) " + term.right.str() + "\n";
  }
  return out;
}

Tensor coproduct(const QSymElem& f) {
  Tensor t;
  for (const auto& [alpha, c] : f.terms()) {
    for (std::size_t k = 0; k <= alpha.length(); ++k) {
      tensor_add(t, alpha.slice(0, k),
                 QSymElem::monomial(alpha.slice(k, alpha.length())), c);
    }
  }
  return t;
}

Rational counit(const QSymElem& f) { return f.coeff(Composition{}); }

QSymElem antipode_convolution(const Tensor& t, AntipodeFn antipode) {
  QSymElem out;
  for (const auto& term : t) {
    out += product(antipode(monomial(term.left)), term.right);
  }
  return out;
}

QSymElem antipode_closed(const QSymElem& f) {
  QSymElem out;
  for (const auto& [alpha, c] : f.terms()) {
    const DescentSet d = descent_set(reverse(alpha));
    const auto members = d.members();
    const Rational sign = (alpha.length() % 2 == 0) ? c : Rational(-c);
    const unsigned count = 1u << members.size();
    for (unsigned mask = 0; mask < count; ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(members[i]);
      }
      out.add_term(comp_of_subset(DescentSet(alpha.size(), std::move(sub))), sign);
    }
  }
  return out;
}

namespace {

using AntipodeCache = std::map<Composition, QSymElem>;

const QSymElem& antipode_of_monomial(const Composition& alpha,
                                     AntipodeCache& cache) {
  if (auto it = cache.find(alpha); it != cache.end()) return it->second;
  QSymElem s;
  if (alpha.empty()) {
    s = monomial(alpha);
  } else {
    // 0 = sum over all terms M_beta (x) R of S(M_beta) * R; the term with
    // beta = alpha has R = 1, every other beta is strictly shorter.
    for (const auto& term : coproduct(monomial(alpha))) {
      if (term.left == alpha) continue;
      const QSymElem left = antipode_of_monomial(term.left, cache);
      s -= product(left, term.right);
    }
  }
  return cache.emplace(alpha, std::move(s)).first->second;
}

}  // namespace

QSymElem antipode_recursive(const QSymElem& f) {
  AntipodeCache cache;
  QSymElem out;
  for (const auto& [alpha, c] : f.terms()) {
    out += antipode_of_monomial(alpha, cache) * c;
  }
  return out;
}

bool antipode_fundamental_identity_check(const Composition& alpha) {
  const Rational sign = (alpha.size() % 2 == 0) ? 1 : -1;
  return antipode_closed(fundamental(alpha)) ==
         fundamental(conjugate(alpha)) * sign;
}

Rational ps1(const QSymElem& f, long long q) {
  Rational total = 0;
  for (const auto& [alpha, c] : f.terms()) {
    total += c * binomial(q, static_cast<long long>(alpha.length()));
  }
  return total;
}

namespace {

class QSymParser {
 public:
  explicit QSymParser(std::string_view text) : text_(text) {}

  QSymElem parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    if (text_.substr(pos_) == "0") return {};
    QSymElem out;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (peek('+')) {
        if (first) fail("unexpected leading '+'");
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      skip_ws();
      Rational c = 1;
      if (!peek('M')) {
        c = parse_rational();
        skip_ws();
        if (!peek('*')) fail("expected '*' after coefficient");
        ++pos_;
        skip_ws();
      }
      if (!peek('M')) fail("expected 'M'");
      ++pos_;
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated composition");
      const Composition alpha =
          parse_composition(text_.substr(pos_, close + 1 - pos_));
      pos_ = close + 1;
      if (sign < 0) c = -c;
      out.add_term(alpha, c);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char ch) const { return !at_end() && text_[pos_] == ch; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse quasisymmetric function at offset " +
                     std::to_string(pos_) + ": " + msg);
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                         text_[pos_] == '/'))
      ++pos_;
    const std::string token(text_.substr(start, pos_ - start));
    if (token.empty() || token.front() == '/' || token.back() == '/' ||
        std::count(token.begin(), token.end(), '/') > 1) {
      fail("malformed coefficient '" + token + "'");
    }
    Rational r;
    if (r.set_str(token, 10) != 0 || r.get_den() == 0) {
      fail("malformed coefficient '" + token + "'");
    }
    r.canonicalize();
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QSymElem parse_qsym(std::string_view text) { return QSymParser(text).parse(); }

}  // namespace qsk
