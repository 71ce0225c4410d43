// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qsymkit/qsymkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

struct Failure {
  int code;
  std::string message;
};

void check(qsk_status st) {
  if (st != QSK_OK) {
    throw Failure{kExitInput, std::string(qsk_status_name(st)) + ": " + qsk_last_error()};
  }
}

struct StringDeleter {
  void operator()(char* s) const { qsk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct QsymDeleter {
  void operator()(qsk_qsym* f) const { qsk_qsym_free(f); }
};
struct PosetDeleter {
  void operator()(qsk_poset* p) const { qsk_poset_free(p); }
};
struct GroupDeleter {
  void operator()(qsk_group* g) const { qsk_group_free(g); }
};
struct PolyDeleter {
  void operator()(qsk_orderpoly* p) const { qsk_orderpoly_free(p); }
};
using Qsym = std::unique_ptr<qsk_qsym, QsymDeleter>;
using Poset = std::unique_ptr<qsk_poset, PosetDeleter>;
using Group = std::unique_ptr<qsk_group, GroupDeleter>;
using Poly = std::unique_ptr<qsk_orderpoly, PolyDeleter>;

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Poset load_poset(const std::string& path) {
  const std::string text = read_file(path);
  qsk_poset* p = nullptr;
  const qsk_status st = qsk_poset_from_json(text.c_str(), &p);
  if (st != QSK_OK) {
    throw Failure{kExitInput,
                  path + ": " + qsk_status_name(st) + ": " + qsk_last_error()};
  }
  return Poset(p);
}

Group load_group(const qsk_poset* base, const std::string& path, std::size_t cap) {
  const std::string text = read_file(path);
  qsk_group* g = nullptr;
  const qsk_status st = qsk_group_from_json(base, text.c_str(), cap, &g);
  if (st != QSK_OK) {
    throw Failure{kExitInput,
                  path + ": " + qsk_status_name(st) + ": " + qsk_last_error()};
  }
  return Group(g);
}

std::string render(const qsk_qsym* f, bool json) {
  char* s = nullptr;
  check(json ? qsk_qsym_to_json(f, &s) : qsk_qsym_to_string(f, &s));
  return take(s);
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

// Prints both sides of an identity; exit 1 when it fails.
int report_sides(const qsk_qsym* lhs, const qsk_qsym* rhs, int holds, bool json,
                 const std::string& extra_json = {}) {
  if (json) {
    std::cout << "{\"holds\":" << json_bool(holds) << extra_json
              << ",\"lhs\":" << render(lhs, true) << ",\"rhs\":" << render(rhs, true)
              << "}\n";
  } else {
    std::cout << "lhs: " << render(lhs, false) << "\n";
    std::cout << "rhs: " << render(rhs, false) << "\n";
    std::cout << "holds: " << json_bool(holds) << "\n";
  }
  return holds ? kExitOk : kExitFalse;
}

void require_cells(std::size_t cells) {
  if (cells == 0) throw Failure{kExitInput, "--max-cells must be positive"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasisymmetric functions and double posets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qsk_version()));
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string alpha, poset_path, poset2_path, group_path, shape;
  bool plus = false;
  long long q = 0;
  int max_size = 3;
  std::size_t group_cap = 5040;
  std::size_t max_cells = 8;
  unsigned long long limit = 2000000;

  auto* antipode_m = app.add_subcommand("antipode-m", "Closed-form antipode of M_alpha");
  antipode_m->add_option("alpha", alpha, "Composition such as (2,1)")->required();

  auto* antipode_f = app.add_subcommand("antipode-f", "Antipode of F_alpha and omega(alpha)");
  antipode_f->add_option("alpha", alpha, "Composition such as (2,1)")->required();

  auto* gamma = app.add_subcommand("gamma", "Gamma(E,w) of a weighted double poset");
  gamma->add_option("poset", poset_path, "Poset JSON file")->required();

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of Gamma via admissible pairs");
  coproduct->add_option("poset", poset_path, "Poset JSON file")->required();

  auto* product = app.add_subcommand("product", "Gamma(E)Gamma(F), checked against Gamma(E u F)");
  product->add_option("poset1", poset_path, "Poset JSON file")->required();
  product->add_option("poset2", poset2_path, "Poset JSON file")->required();

  auto* verify_antipode =
      app.add_subcommand("verify-antipode", "Check S(Gamma(E,w)) = (-1)^|E| Gamma(E,>1,<2)");
  verify_antipode->add_option("poset", poset_path, "Poset JSON file")->required();

  auto add_group_args = [&](CLI::App* sub) {
    sub->add_option("poset", poset_path, "Poset JSON file")->required();
    sub->add_option("group", group_path, "Group JSON file")->required();
    sub->add_option("--group-cap", group_cap, "Largest group order to generate")
        ->check(CLI::PositiveNumber);
  };
  auto* equivariant = app.add_subcommand("equivariant", "Equivariant Gamma(E,w,G)");
  add_group_args(equivariant);
  equivariant->add_flag("--plus", plus, "Coeven-orbit variant Gamma+");

  auto* verify_equivariant =
      app.add_subcommand("verify-equivariant", "Check the equivariant antipode identity");
  add_group_args(verify_equivariant);

  auto* order_poly = app.add_subcommand("order-poly", "Equivariant order polynomial");
  add_group_args(order_poly);

  auto* reciprocity = app.add_subcommand("reciprocity", "Check order polynomial reciprocity");
  add_group_args(reciprocity);
  reciprocity->add_option("--q", q, "Point to evaluate at")->required()->check(
      CLI::NonNegativeNumber);
  reciprocity->add_option("--limit", limit, "Largest number of maps to enumerate")
      ->check(CLI::PositiveNumber);

  auto* schur = app.add_subcommand("schur", "Skew Schur function of a shape");
  schur->add_option("shape", shape, "Shape such as [2,1] or [3,2]/[1]")->required();
  schur->add_option("--max-cells", max_cells, "Largest shape accepted");

  auto* verify_schur =
      app.add_subcommand("verify-schur", "Check S(s_shape) = (-1)^n s_conjugate");
  verify_schur->add_option("shape", shape, "Shape such as [2,1] or [3,2]/[1]")->required();
  verify_schur->add_option("--max-cells", max_cells, "Largest shape accepted");

  auto* selftest = app.add_subcommand("selftest", "Exhaustive desk-scale verification");
  selftest->add_option("--max-size", max_size, "Largest ground set (1-4)")
      ->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*antipode_m) {
      Qsym m, s;
      {
        qsk_qsym* raw = nullptr;
        check(qsk_qsym_monomial(alpha.c_str(), &raw));
        m.reset(raw);
        check(qsk_qsym_antipode(m.get(), 0, &raw));
        s.reset(raw);
      }
      std::cout << render(s.get(), json) << "\n";
      return kExitOk;
    }
    if (*antipode_f) {
      qsk_qsym* raw = nullptr;
      char* omega = nullptr;
      int holds = 0;
      check(qsk_antipode_fundamental(alpha.c_str(), &raw, &omega, &holds));
      Qsym s(raw);
      const std::string w = take(omega);
      if (json) {
        std::cout << "{\"omega\":\"" << w << "\",\"holds\":" << json_bool(holds)
                  << ",\"antipode\":" << render(s.get(), true) << "}\n";
      } else {
        std::cout << "omega: " << w << "\n";
        std::cout << "S(F): " << render(s.get(), false) << "\n";
        std::cout << "holds: " << json_bool(holds) << "\n";
      }
      return holds ? kExitOk : kExitFalse;
    }
    if (*gamma) {
      Poset p = load_poset(poset_path);
      qsk_qsym* raw = nullptr;
      check(qsk_poset_gamma(p.get(), &raw));
      Qsym g(raw);
      std::cout << render(g.get(), json) << "\n";
      return kExitOk;
    }
    if (*coproduct) {
      Poset p = load_poset(poset_path);
      char* out = nullptr;
      int holds = 0;
      check(qsk_poset_coproduct(p.get(), json ? 1 : 0, &out, &holds));
      std::string text = take(out);
      if (!text.empty() && text.back() != '\n') text += '\n';
      std::cout << text;
      if (!holds) {
        std::cerr << "admissible-pair sum differs from the coproduct of Gamma\n";
        return kExitFalse;
      }
      return kExitOk;
    }
    if (*product) {
      Poset a = load_poset(poset_path);
      Poset b = load_poset(poset2_path);
      qsk_qsym* lhs = nullptr;
      qsk_qsym* rhs = nullptr;
      int holds = 0;
      check(qsk_poset_product_rule(a.get(), b.get(), &lhs, &rhs, &holds));
      Qsym l(lhs), r(rhs);
      return report_sides(l.get(), r.get(), holds, json);
    }
    if (*verify_antipode) {
      Poset p = load_poset(poset_path);
      qsk_qsym* lhs = nullptr;
      qsk_qsym* rhs = nullptr;
      int holds = 0;
      check(qsk_poset_antipode_theorem(p.get(), &lhs, &rhs, &holds));
      Qsym l(lhs), r(rhs);
      return report_sides(l.get(), r.get(), holds, json);
    }
    if (*equivariant || *verify_equivariant || *order_poly || *reciprocity) {
      Poset p = load_poset(poset_path);
      Group g = load_group(p.get(), group_path, group_cap);
      if (*equivariant) {
        qsk_qsym* raw = nullptr;
        check(qsk_group_gamma(g.get(), plus ? 1 : 0, &raw));
        Qsym f(raw);
        std::cout << render(f.get(), json) << "\n";
        return kExitOk;
      }
      if (*verify_equivariant) {
        qsk_qsym* lhs = nullptr;
        qsk_qsym* rhs = nullptr;
        int holds = 0;
        check(qsk_group_antipode_theorem(g.get(), &lhs, &rhs, &holds));
        Qsym l(lhs), r(rhs);
        return report_sides(l.get(), r.get(), holds, json);
      }
      if (*order_poly) {
        qsk_orderpoly* raw = nullptr;
        check(qsk_group_order_polynomial(g.get(), &raw));
        Poly poly(raw);
        char* s = nullptr;
        if (json) {
          check(qsk_orderpoly_to_json(poly.get(), &s));
          std::cout << take(s) << "\n";
        } else {
          check(qsk_orderpoly_to_string(poly.get(), 0, &s));
          std::cout << "binomial: " << take(s) << "\n";
          check(qsk_orderpoly_to_string(poly.get(), 1, &s));
          std::cout << "power: " << take(s) << "\n";
        }
        return kExitOk;
      }
      char* value = nullptr;
      char* count = nullptr;
      int holds = 0;
      check(qsk_group_reciprocity(g.get(), q, limit, &value, &count, &holds));
      const std::string v = take(value), c = take(count);
      if (json) {
        std::cout << "{\"q\":" << q << ",\"holds\":" << json_bool(holds)
                  << ",\"polynomial_at_minus_q\":\"" << v
                  << "\",\"signed_coeven_count\":\"" << c << "\"}\n";
      } else {
        std::cout << "Omega(-" << q << "): " << v << "\n";
        std::cout << "signed coeven count: " << c << "\n";
        std::cout << "holds: " << json_bool(holds) << "\n";
      }
      return holds ? kExitOk : kExitFalse;
    }
    if (*schur) {
      require_cells(max_cells);
      qsk_qsym* raw = nullptr;
      check(qsk_shape_schur(shape.c_str(), max_cells, &raw));
      Qsym s(raw);
      std::cout << render(s.get(), json) << "\n";
      return kExitOk;
    }
    if (*verify_schur) {
      require_cells(max_cells);
      qsk_qsym* lhs = nullptr;
      qsk_qsym* rhs = nullptr;
      char* conj = nullptr;
      int holds = 0;
      check(qsk_shape_antipode(shape.c_str(), max_cells, &lhs, &rhs, &conj, &holds));
      Qsym l(lhs), r(rhs);
      const std::string c = take(conj);
      if (!json) std::cout << "conjugate: " << c << "\n";
      return report_sides(l.get(), r.get(), holds, json, ",\"conjugate\":\"" + c + "\"");
    }
    if (*selftest) {
      char* report = nullptr;
      int passed = 0;
      check(qsk_selftest(max_size, &report, &passed));
      std::cout << take(report);
      return passed ? kExitOk : kExitFalse;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kExitInput;
}
