#include "qsymkit/io.hpp"

#include <algorithm>

#include <json.hpp>

#include "qsymkit/error.hpp"

namespace qsk {

using nlohmann::json;

namespace {

json parse_document(std::string_view text, const char* what) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) {
      throw ParseError(std::string(what) + " document must be a JSON object");
    }
    return doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::vector<DoublePoset::LabelPair> parse_pairs(const json& doc, const char* key) {
  std::vector<DoublePoset::LabelPair> out;
  if (!doc.contains(key)) return out;
  const json& list = doc.at(key);
  if (!list.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  for (const json& pair : list) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string()) {
      throw ParseError(std::string("entries of \"") + key +
                       "\" must be pairs of element labels, got " + pair.dump());
    }
    out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return out;
}

Rational parse_coefficient(const json& c) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (!c.is_string()) throw ParseError("coefficient must be a string or integer");
  Rational r;
  if (r.set_str(c.get<std::string>(), 10) != 0 || r.get_den() == 0) {
    throw ParseError("malformed coefficient '" + c.get<std::string>() + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace

WeightedDoublePoset parse_poset_json(std::string_view text) {
  const json doc = parse_document(text, "poset");
  if (!doc.contains("elements") || !doc.at("elements").is_array()) {
    throw ParseError("poset JSON needs an \"elements\" array");
  }
  std::vector<std::string> elements;
  for (const json& e : doc.at("elements")) {
    if (!e.is_string()) throw ParseError("element labels must be strings");
    elements.push_back(e.get<std::string>());
  }
  DoublePoset d = DoublePoset::build(elements, parse_pairs(doc, "lt1"),
                                     parse_pairs(doc, "lt2"));
  std::vector<int> w(d.size(), 1);
  if (doc.contains("w")) {
    const json& wj = doc.at("w");
    if (!wj.is_object()) throw ParseError("\"w\" must be an object");
    std::vector<bool> seen(d.size(), false);
    for (const auto& [label, value] : wj.items()) {
      const std::size_t i = d.index_of(label);
      if (!value.is_number_integer() || value.get<long long>() < 1) {
        throw ParseError("weight of '" + label + "' must be a positive integer");
      }
      w[i] = value.get<int>();
      seen[i] = true;
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!seen[i]) throw ParseError("\"w\" has no value for '" + d.label(i) + "'");
    }
  }
  return WeightedDoublePoset(std::move(d), std::move(w));
}

std::string poset_to_json(const WeightedDoublePoset& d) {
  const DoublePoset& p = d.poset();
  json doc;
  doc["elements"] = p.labels();
  json lt1 = json::array(), lt2 = json::array(), w = json::object();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.lt1(i, j)) lt1.push_back({p.label(i), p.label(j)});
      if (p.lt2(i, j)) lt2.push_back({p.label(i), p.label(j)});
    }
    w[p.label(i)] = d.weight(i);
  }
  doc["lt1"] = lt1;
  doc["lt2"] = lt2;
  doc["w"] = w;
  return doc.dump();
}

GroupAction parse_group_json(std::string_view text, const WeightedDoublePoset& base,
                             std::size_t cap) {
  const json doc = parse_document(text, "group");
  if (!doc.contains("generators") || !doc.at("generators").is_array()) {
    throw ParseError("group JSON needs a \"generators\" array");
  }
  const DoublePoset& d = base.poset();
  std::vector<Permutation> generators;
  for (const json& g : doc.at("generators")) {
    if (!g.is_object()) throw ParseError("each generator must be an object label -> label");
    std::vector<std::size_t> images(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) images[i] = i;
    for (const auto& [from, to] : g.items()) {
      if (!to.is_string()) throw ParseError("generator images must be labels");
      images[d.index_of(from)] = d.index_of(to.get<std::string>());
    }
    try {
      generators.emplace_back(std::move(images));
    } catch (const InvalidArgument&) {
      throw InvalidArgument("generator " + g.dump() + " is not a bijection");
    }
  }
  return build_action(base, generators, cap);
}

std::string qsym_to_json(const QSymElem& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms()) {
    terms.push_back({{"composition", std::vector<int>(alpha.parts().begin(), alpha.parts().end())},
                     {"coefficient", c.get_str()}});
  }
  return json{{"terms", terms}}.dump();
}

QSymElem qsym_from_json(std::string_view text) {
  const json doc = parse_document(text, "quasisymmetric function");
  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw ParseError("expected a \"terms\" array");
  }
  QSymElem f;
  for (const json& t : doc.at("terms")) {
    if (!t.is_object() || !t.contains("composition") || !t.contains("coefficient")) {
      throw ParseError("each term needs \"composition\" and \"coefficient\"");
    }
    std::vector<int> parts;
    try {
      parts = t.at("composition").get<std::vector<int>>();
    } catch (const json::exception&) {
      throw ParseError("composition must be an array of integers");
    }
    if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 1; })) {
      throw ParseError("composition parts must be positive");
    }
    f.add_term(Composition(std::move(parts)), parse_coefficient(t.at("coefficient")));
  }
  return f;
}

std::string tensor_to_json(const Tensor& t) {
  json terms = json::array();
  for (const auto& term : t) {
    terms.push_back(
        {{"left", std::vector<int>(term.left.parts().begin(), term.left.parts().end())},
         {"right", json::parse(qsym_to_json(term.right))}});
  }
  return json{{"tensor", terms}}.dump();
}

std::string order_polynomial_to_json(const OrderPolynomial& p) {
  json binom = json::array(), power = json::array();
  for (const auto& c : p.binomial_coefficients()) binom.push_back(c.get_str());
  for (const auto& c : p.power_coefficients()) power.push_back(c.get_str());
  return json{{"binomial_basis", binom}, {"power_basis", power}}.dump();
}

}  // namespace qsk
