#include "qsymkit/qsymkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qsymkit/error.hpp"
#include "qsymkit/io.hpp"
#include "qsymkit/orderpoly.hpp"
#include "qsymkit/selftest.hpp"
#include "qsymkit/young.hpp"

struct qsk_qsym {
  qsk::QSymElem value;
};
struct qsk_poset {
  qsk::WeightedDoublePoset value;
};
struct qsk_group {
  qsk::GroupAction value;
};
struct qsk_orderpoly {
  qsk::OrderPolynomial value;
};

namespace {

thread_local std::string last_error;

qsk_status status_of(qsk::ErrorKind kind) {
  switch (kind) {
    case qsk::ErrorKind::parse: return QSK_ERR_PARSE;
    case qsk::ErrorKind::invalid_argument: return QSK_ERR_INVALID_ARGUMENT;
    case qsk::ErrorKind::cycle: return QSK_ERR_CYCLE;
    case qsk::ErrorKind::not_tertispecial: return QSK_ERR_NOT_TERTISPECIAL;
    case qsk::ErrorKind::not_preserving: return QSK_ERR_NOT_PRESERVING;
    case qsk::ErrorKind::closure_too_large: return QSK_ERR_CLOSURE_TOO_LARGE;
    case qsk::ErrorKind::bound_exceeded: return QSK_ERR_BOUND_EXCEEDED;
    case qsk::ErrorKind::internal: return QSK_ERR_INTERNAL;
  }
  return QSK_ERR_INTERNAL;
}

template <typename Fn>
qsk_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return QSK_OK;
  } catch (const qsk::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QSK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QSK_ERR_INTERNAL;
  }
}

qsk_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return QSK_ERR_NULL_ARGUMENT;
}

#define QSK_REQUIRE(ptr) \
  do {                   \
    if ((ptr) == nullptr) return null_argument(#ptr); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qsk_qsym* wrap(qsk::QSymElem f) { return new qsk_qsym{std::move(f)}; }

void check_cells(const qsk::SkewShape& shape, size_t max_cells) {
  if (max_cells != 0 && shape.cell_count() > max_cells) {
    throw qsk::BoundExceeded("shape " + shape.str() + " has " +
                             std::to_string(shape.cell_count()) +
                             " cells, above the limit of " + std::to_string(max_cells));
  }
}

void set_sides(const qsk::IdentitySides& sides, qsk_qsym** lhs, qsk_qsym** rhs, int* holds) {
  *holds = sides.holds() ? 1 : 0;
  *lhs = wrap(sides.lhs);
  *rhs = wrap(sides.rhs);
}

}  // namespace

extern "C" {

const char* qsk_version(void) { return "0.1.0"; }

const char* qsk_status_name(qsk_status status) {
  switch (status) {
    case QSK_OK: return "ok";
    case QSK_ERR_PARSE: return "parse error";
    case QSK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QSK_ERR_CYCLE: return "cycle in order relation";
    case QSK_ERR_NOT_TERTISPECIAL: return "double poset is not tertispecial";
    case QSK_ERR_NOT_PRESERVING: return "group does not preserve the structure";
    case QSK_ERR_CLOSURE_TOO_LARGE: return "group closure too large";
    case QSK_ERR_BOUND_EXCEEDED: return "enumeration bound exceeded";
    case QSK_ERR_NULL_ARGUMENT: return "null argument";
    case QSK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qsk_last_error(void) { return last_error.c_str(); }

void qsk_string_free(char* s) { std::free(s); }

qsk_status qsk_composition_normalize(const char* alpha, char** out) {
  QSK_REQUIRE(alpha);
  QSK_REQUIRE(out);
  return guarded([&] { *out = dup_string(qsk::parse_composition(alpha).str()); });
}

qsk_status qsk_composition_descent_set(const char* alpha, char** out) {
  QSK_REQUIRE(alpha);
  QSK_REQUIRE(out);
  return guarded([&] {
    const qsk::DescentSet d = qsk::descent_set(qsk::parse_composition(alpha));
    std::string s = "{";
    for (std::size_t i = 0; i < d.members().size(); ++i) {
      if (i) s += ',';
      s += std::to_string(d.members()[i]);
    }
    *out = dup_string(s + "}");
  });
}

qsk_status qsk_composition_reverse(const char* alpha, char** out) {
  QSK_REQUIRE(alpha);
  QSK_REQUIRE(out);
  return guarded(
      [&] { *out = dup_string(qsk::reverse(qsk::parse_composition(alpha)).str()); });
}

qsk_status qsk_composition_conjugate(const char* alpha, char** out) {
  QSK_REQUIRE(alpha);
  QSK_REQUIRE(out);
  return guarded(
      [&] { *out = dup_string(qsk::conjugate(qsk::parse_composition(alpha)).str()); });
}

qsk_status qsk_qsym_parse(const char* text, qsk_qsym** out) {
  QSK_REQUIRE(text);
  QSK_REQUIRE(out);
  return guarded([&] { *out = wrap(qsk::parse_qsym(text)); });
}

qsk_status qsk_qsym_from_json(const char* json, qsk_qsym** out) {
  QSK_REQUIRE(json);
  QSK_REQUIRE(out);
  return guarded([&] { *out = wrap(qsk::qsym_from_json(json)); });
}

qsk_status qsk_qsym_monomial(const char* alpha, qsk_qsym** out) {
  QSK_REQUIRE(alpha);
  QSK_REQUIRE(out);
  return guarded([&] { *out = wrap(qsk::monomial(qsk::parse_composition(alpha))); });
}

qsk_status qsk_qsym_fundamental(const char* alpha, qsk_qsym** out) {
  QSK_REQUIRE(alpha);
  QSK_REQUIRE(out);
  return guarded([&] { *out = wrap(qsk::fundamental(qsk::parse_composition(alpha))); });
}

void qsk_qsym_free(qsk_qsym* f) { delete f; }

qsk_status qsk_qsym_to_string(const qsk_qsym* f, char** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(out);
  return guarded([&] { *out = dup_string(f->value.str()); });
}

qsk_status qsk_qsym_to_json(const qsk_qsym* f, char** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(out);
  return guarded([&] { *out = dup_string(qsk::qsym_to_json(f->value)); });
}

qsk_status qsk_qsym_equal(const qsk_qsym* f, const qsk_qsym* g, int* out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(g);
  QSK_REQUIRE(out);
  return guarded([&] { *out = f->value == g->value ? 1 : 0; });
}

qsk_status qsk_qsym_add(const qsk_qsym* f, const qsk_qsym* g, qsk_qsym** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(g);
  QSK_REQUIRE(out);
  return guarded([&] { *out = wrap(f->value + g->value); });
}

qsk_status qsk_qsym_scale(const qsk_qsym* f, const char* rational, qsk_qsym** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(rational);
  QSK_REQUIRE(out);
  return guarded([&] {
    qsk::Rational c;
    if (c.set_str(rational, 10) != 0 || c.get_den() == 0) {
      throw qsk::ParseError(std::string("malformed rational '") + rational + "'");
    }
    c.canonicalize();
    *out = wrap(f->value * c);
  });
}

qsk_status qsk_qsym_product(const qsk_qsym* f, const qsk_qsym* g, qsk_qsym** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(g);
  QSK_REQUIRE(out);
  return guarded([&] { *out = wrap(qsk::product(f->value, g->value)); });
}

qsk_status qsk_qsym_antipode(const qsk_qsym* f, int recursive, qsk_qsym** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(out);
  return guarded([&] {
    *out = wrap(recursive ? qsk::antipode_recursive(f->value)
                          : qsk::antipode_closed(f->value));
  });
}

qsk_status qsk_qsym_coproduct(const qsk_qsym* f, int as_json, char** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(out);
  return guarded([&] {
    const qsk::Tensor t = qsk::coproduct(f->value);
    *out = dup_string(as_json ? qsk::tensor_to_json(t) : qsk::to_string(t));
  });
}

qsk_status qsk_qsym_counit(const qsk_qsym* f, char** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(out);
  return guarded([&] { *out = dup_string(qsk::to_string(qsk::counit(f->value))); });
}

qsk_status qsk_qsym_ps1(const qsk_qsym* f, long long q, char** out) {
  QSK_REQUIRE(f);
  QSK_REQUIRE(out);
  return guarded([&] {
    if (q < 0) throw qsk::InvalidArgument("ps1 needs q >= 0");
    *out = dup_string(qsk::to_string(qsk::ps1(f->value, q)));
  });
}

qsk_status qsk_antipode_fundamental(const char* alpha, qsk_qsym** antipode, char** omega,
                                    int* holds) {
  QSK_REQUIRE(alpha);
  QSK_REQUIRE(antipode);
  QSK_REQUIRE(omega);
  QSK_REQUIRE(holds);
  return guarded([&] {
    const qsk::Composition a = qsk::parse_composition(alpha);
    const std::string w = qsk::conjugate(a).str();
    qsk::QSymElem s = qsk::antipode_closed(qsk::fundamental(a));
    *holds = qsk::antipode_fundamental_identity_check(a) ? 1 : 0;
    *omega = dup_string(w);
    *antipode = wrap(std::move(s));
  });
}

qsk_status qsk_poset_from_json(const char* json, qsk_poset** out) {
  QSK_REQUIRE(json);
  QSK_REQUIRE(out);
  return guarded([&] { *out = new qsk_poset{qsk::parse_poset_json(json)}; });
}

void qsk_poset_free(qsk_poset* p) { delete p; }

qsk_status qsk_poset_to_json(const qsk_poset* p, char** out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  return guarded([&] { *out = dup_string(qsk::poset_to_json(p->value)); });
}

qsk_status qsk_poset_size(const qsk_poset* p, size_t* out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  *out = p->value.size();
  return QSK_OK;
}

qsk_status qsk_poset_classify(const qsk_poset* p, int* special, int* semispecial,
                              int* tertispecial) {
  QSK_REQUIRE(p);
  return guarded([&] {
    const qsk::DoublePoset& d = p->value.poset();
    if (special) *special = qsk::is_special(d);
    if (semispecial) *semispecial = qsk::is_semispecial(d);
    if (tertispecial) *tertispecial = qsk::is_tertispecial(d);
  });
}

qsk_status qsk_poset_opposite1(const qsk_poset* p, qsk_poset** out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  return guarded([&] { *out = new qsk_poset{qsk::opposite1(p->value)}; });
}

qsk_status qsk_poset_disjoint_union(const qsk_poset* a, const qsk_poset* b,
                                    qsk_poset** out) {
  QSK_REQUIRE(a);
  QSK_REQUIRE(b);
  QSK_REQUIRE(out);
  return guarded([&] { *out = new qsk_poset{qsk::disjoint_union(a->value, b->value)}; });
}

qsk_status qsk_poset_admissible_pairs(const qsk_poset* p, char** out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  return guarded([&] {
    const qsk::DoublePoset& d = p->value.poset();
    auto join = [](const std::vector<std::string>& labels) {
      std::string s = "{";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ',';
        s += labels[i];
      }
      return s + "}";
    };
    std::string text;
    for (const auto& pair : qsk::admissible_pairs(d)) {
      text += join(qsk::subset_labels(d, pair.p)) + " | " +
              join(qsk::subset_labels(d, pair.q)) + "\n";
    }
    *out = dup_string(text);
  });
}

qsk_status qsk_poset_is_epartition(const qsk_poset* p, const int* values, size_t n,
                                   int* out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  if (n > 0) QSK_REQUIRE(values);
  return guarded([&] {
    const std::vector<int> pi(values, values + n);
    *out = qsk::is_epartition(p->value.poset(), pi) ? 1 : 0;
  });
}

qsk_status qsk_poset_gamma(const qsk_poset* p, qsk_qsym** out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  return guarded([&] { *out = wrap(qsk::gamma(p->value)); });
}

qsk_status qsk_poset_coproduct(const qsk_poset* p, int as_json, char** out, int* holds) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  QSK_REQUIRE(holds);
  return guarded([&] {
    const qsk::Tensor t = qsk::admissible_coproduct(p->value);
    const bool ok = t == qsk::coproduct(qsk::gamma(p->value));
    *out = dup_string(as_json ? qsk::tensor_to_json(t) : qsk::to_string(t));
    *holds = ok ? 1 : 0;
  });
}

qsk_status qsk_poset_antipode_theorem(const qsk_poset* p, qsk_qsym** lhs, qsk_qsym** rhs,
                                      int* holds) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(lhs);
  QSK_REQUIRE(rhs);
  QSK_REQUIRE(holds);
  return guarded([&] { set_sides(qsk::antipode_theorem_sides(p->value), lhs, rhs, holds); });
}

qsk_status qsk_poset_product_rule(const qsk_poset* a, const qsk_poset* b, qsk_qsym** lhs,
                                  qsk_qsym** rhs, int* holds) {
  QSK_REQUIRE(a);
  QSK_REQUIRE(b);
  QSK_REQUIRE(lhs);
  QSK_REQUIRE(rhs);
  QSK_REQUIRE(holds);
  return guarded(
      [&] { set_sides(qsk::gamma_product_sides(a->value, b->value), lhs, rhs, holds); });
}

qsk_status qsk_group_from_json(const qsk_poset* base, const char* json, size_t cap,
                               qsk_group** out) {
  QSK_REQUIRE(base);
  QSK_REQUIRE(json);
  QSK_REQUIRE(out);
  return guarded([&] {
    *out = new qsk_group{
        qsk::parse_group_json(json, base->value, cap == 0 ? qsk::kDefaultGroupCap : cap)};
  });
}

void qsk_group_free(qsk_group* g) { delete g; }

qsk_status qsk_group_order(const qsk_group* g, size_t* out) {
  QSK_REQUIRE(g);
  QSK_REQUIRE(out);
  *out = g->value.order();
  return QSK_OK;
}

qsk_status qsk_group_gamma(const qsk_group* g, int plus, qsk_qsym** out) {
  QSK_REQUIRE(g);
  QSK_REQUIRE(out);
  return guarded([&] {
    *out = wrap(plus ? qsk::gamma_plus(g->value) : qsk::gamma_equivariant(g->value));
  });
}

qsk_status qsk_group_antipode_theorem(const qsk_group* g, qsk_qsym** lhs, qsk_qsym** rhs,
                                      int* holds) {
  QSK_REQUIRE(g);
  QSK_REQUIRE(lhs);
  QSK_REQUIRE(rhs);
  QSK_REQUIRE(holds);
  return guarded(
      [&] { set_sides(qsk::equivariant_theorem_sides(g->value), lhs, rhs, holds); });
}

qsk_status qsk_group_order_polynomial(const qsk_group* g, qsk_orderpoly** out) {
  QSK_REQUIRE(g);
  QSK_REQUIRE(out);
  return guarded([&] { *out = new qsk_orderpoly{qsk::order_polynomial(g->value)}; });
}

qsk_status qsk_group_count_orbits(const qsk_group* g, long long q, unsigned long long limit,
                                  int coeven_only, unsigned long long* out) {
  QSK_REQUIRE(g);
  QSK_REQUIRE(out);
  return guarded([&] {
    const std::uint64_t bound = limit == 0 ? qsk::kDefaultEnumerationLimit : limit;
    *out = coeven_only ? qsk::count_coeven_orbits_bruteforce(g->value, q, bound)
                       : qsk::count_orbits_bruteforce(g->value, q, bound);
  });
}

qsk_status qsk_group_reciprocity(const qsk_group* g, long long q, unsigned long long limit,
                                 char** polynomial_value, char** signed_count, int* holds) {
  QSK_REQUIRE(g);
  QSK_REQUIRE(polynomial_value);
  QSK_REQUIRE(signed_count);
  QSK_REQUIRE(holds);
  return guarded([&] {
    if (q < 0) throw qsk::InvalidArgument("reciprocity needs q >= 0");
    const auto sides = qsk::reciprocity_sides(
        g->value, q, limit == 0 ? qsk::kDefaultEnumerationLimit : limit);
    std::string value = qsk::to_string(sides.polynomial_value);
    std::string count = qsk::to_string(sides.signed_coeven_count);
    *polynomial_value = dup_string(value);
    *signed_count = dup_string(count);
    *holds = sides.holds() ? 1 : 0;
  });
}

void qsk_orderpoly_free(qsk_orderpoly* p) { delete p; }

qsk_status qsk_orderpoly_to_string(const qsk_orderpoly* p, int power_basis, char** out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(power_basis ? p->value.power_str() : p->value.binomial_str());
  });
}

qsk_status qsk_orderpoly_to_json(const qsk_orderpoly* p, char** out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  return guarded([&] { *out = dup_string(qsk::order_polynomial_to_json(p->value)); });
}

qsk_status qsk_orderpoly_eval(const qsk_orderpoly* p, long long q, char** out) {
  QSK_REQUIRE(p);
  QSK_REQUIRE(out);
  return guarded([&] { *out = dup_string(qsk::to_string(p->value(q))); });
}

qsk_status qsk_shape_poset(const char* shape, int horizontal, qsk_poset** out) {
  QSK_REQUIRE(shape);
  QSK_REQUIRE(out);
  return guarded([&] {
    const qsk::SkewShape s = qsk::parse_shape(shape);
    *out = new qsk_poset{horizontal ? qsk::build_Yh(s) : qsk::build_Y(s)};
  });
}

qsk_status qsk_shape_schur(const char* shape, size_t max_cells, qsk_qsym** out) {
  QSK_REQUIRE(shape);
  QSK_REQUIRE(out);
  return guarded([&] {
    const qsk::SkewShape s = qsk::parse_shape(shape);
    check_cells(s, max_cells);
    *out = wrap(qsk::skew_schur(s));
  });
}

qsk_status qsk_shape_antipode(const char* shape, size_t max_cells, qsk_qsym** lhs,
                              qsk_qsym** rhs, char** conjugate, int* holds) {
  QSK_REQUIRE(shape);
  QSK_REQUIRE(lhs);
  QSK_REQUIRE(rhs);
  QSK_REQUIRE(conjugate);
  QSK_REQUIRE(holds);
  return guarded([&] {
    const qsk::SkewShape s = qsk::parse_shape(shape);
    check_cells(s, max_cells);
    const auto sides = qsk::schur_antipode_sides(s);
    *conjugate = dup_string(s.conjugate().str());
    set_sides(sides, lhs, rhs, holds);
  });
}

qsk_status qsk_shape_is_ssyt(const char* shape, const int* values, size_t n, int* out) {
  QSK_REQUIRE(shape);
  QSK_REQUIRE(out);
  if (n > 0) QSK_REQUIRE(values);
  return guarded([&] {
    const std::vector<int> filling(values, values + n);
    *out = qsk::is_ssyt(qsk::parse_shape(shape), filling) ? 1 : 0;
  });
}

qsk_status qsk_selftest(int max_size, char** report, int* passed) {
  QSK_REQUIRE(report);
  QSK_REQUIRE(passed);
  return guarded([&] {
    const qsk::SelftestReport r = qsk::run_selftest(max_size);
    *report = dup_string(r.text);
    *passed = r.passed ? 1 : 0;
  });
}

}  // extern "C"
