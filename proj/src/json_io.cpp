#include "bihamil/json_io.hpp"

#include "bihamil/errors.hpp"

#include <fstream>
#include <map>
#include <tuple>

namespace bihamil {

namespace {

Rational rational_field(const Json& obj, const char* key, bool required = true) {
  if (!obj.contains(key)) {
    if (required) throw InputError(std::string("missing field \"") + key + "\"");
    return 0;
  }
  const Json& v = obj.at(key);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw InputError(std::string("field \"") + key + "\" must be a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception&) {
    throw InputError("not a rational: " + v.get<std::string>());
  }
}

GaussianRational gaussian_value(const Json& v) {
  if (v.is_object()) return {rational_field(v, "re"), rational_field(v, "im", false)};
  if (v.is_number_integer()) return GaussianRational(v.get<long>());
  if (!v.is_string()) throw InputError("expected a Gaussian rational");
  try {
    return parse_gaussian(v.get<std::string>());
  } catch (const std::exception&) {
    throw InputError("not a Gaussian rational: " + v.get<std::string>());
  }
}

// Index counted from 1 in the file, returned from 0.
std::size_t index_field(const Json& obj, const char* key, std::size_t dim) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer())
    throw InputError(std::string("field \"") + key + "\" must be an integer index");
  const long v = obj.at(key).get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) throw InputError(std::string("index \"") + key + "\" out of range");
  return static_cast<std::size_t>(v - 1);
}

std::size_t dim_field(const Json& j) {
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long>() < 1)
    throw InputError("field \"dim\" must be a positive integer");
  return j.at("dim").get<std::size_t>();
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const LambdaPair& l) { return Json::array({to_string(l.l1), to_string(l.l2)}); }

Json algebra_to_json(const LieAlgebraSpec& g) {
  Json br = Json::array();
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational v = g.structure(i, j, k);
        if (sgn(v) == 0) continue;
        br.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"re", to_string(v)}, {"im", "0"}});
      }
  return Json{{"name", g.name()}, {"dim", n}, {"labels", g.labels()}, {"brackets", br}};
}

LieAlgebraSpec algebra_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("algebra must be a JSON object");
  const std::size_t n = dim_field(j);
  std::string name = j.value("name", std::string("input"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) throw InputError("\"labels\" must be an array of strings");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw InputError("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != n) throw InputError("label count does not match the dimension");
  }
  LieAlgebraSpec g(name, n, labels);
  if (!j.contains("brackets") || !j.at("brackets").is_array()) throw InputError("missing \"brackets\" array");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> seen;
  for (const auto& b : j.at("brackets")) {
    if (!b.is_object()) throw InputError("bracket entries must be objects");
    std::size_t i = index_field(b, "i", n), jj = index_field(b, "j", n), k = index_field(b, "k", n);
    Rational re = rational_field(b, "re"), im = rational_field(b, "im", false);
    if (sgn(im) != 0) throw InputError("structure constants of a real Lie algebra must be real");
    if (i == jj) {
      if (sgn(re) != 0) throw InputError("bracket [e_i, e_i] must vanish");
      continue;
    }
    if (i > jj) {
      std::swap(i, jj);
      re = -re;
    }
    auto key = std::make_tuple(i, jj, k);
    auto [it, fresh] = seen.emplace(key, re);
    if (!fresh && it->second != re) throw InputError("conflicting duplicate bracket entry");
    g.set_structure(i, jj, k, re);
  }
  return g;
}

Json bivector_to_json(const BivectorField& c) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j) {
      const MultiPoly cij = c.coeff(i, j);
      for (const auto& [e, x] : cij.terms())
        terms.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coeff", to_string(x)}, {"exponents", e}});
    }
  return Json{{"kind", to_string(c.kind())}, {"dim", c.dim()}, {"terms", terms}};
}

BivectorField bivector_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("bivector field must be a JSON object");
  const std::size_t n = dim_field(j);
  VariableKind kind;
  try {
    kind = parse_variable_kind(j.value("kind", std::string("real")));
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  BivectorField c(n, kind);
  if (!j.contains("terms") || !j.at("terms").is_array()) throw InputError("missing \"terms\" array");
  const std::size_t vars = c.layout().num_vars();
  for (const auto& t : j.at("terms")) {
    if (!t.is_object()) throw InputError("bivector terms must be objects");
    const std::size_t a = index_field(t, "i", n), b = index_field(t, "j", n);
    if (a == b) throw InputError("bivector term with i = j");
    if (!t.contains("coeff")) throw InputError("bivector term without \"coeff\"");
    const GaussianRational x = gaussian_value(t.at("coeff"));
    Exponents e(vars, 0);
    if (t.contains("exponents")) {
      const Json& ex = t.at("exponents");
      if (!ex.is_array() || ex.size() != vars) throw InputError("\"exponents\" must list one entry per variable");
      for (std::size_t v = 0; v < vars; ++v) {
        if (!ex[v].is_number_integer() || ex[v].get<long>() < 0 || ex[v].get<long>() > 8)
          throw InputError("exponents must be integers in [0, 8]");
        e[v] = static_cast<std::uint16_t>(ex[v].get<long>());
      }
    }
    MultiPoly m = MultiPoly::monomial(c.layout(), e, x);
    if (a < b) c.add_to(a, b, m);
    else c.add_to(b, a, -m);
  }
  return c;
}

Json pair_to_json(const BivectorPair& p) {
  return Json{{"name", p.name}, {"variables", p.variables}, {"c1", bivector_to_json(p.c1)}, {"c2", bivector_to_json(p.c2)}};
}

BivectorPair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c1") || !j.contains("c2")) throw InputError("pair needs fields \"c1\" and \"c2\"");
  BivectorPair p;
  p.name = j.value("name", std::string("input"));
  p.c1 = bivector_from_json(j.at("c1"));
  p.c2 = bivector_from_json(j.at("c2"));
  if (p.c1.dim() != p.c2.dim() || p.c1.kind() != p.c2.kind()) throw InputError("c1 and c2 live on different spaces");
  if (j.contains("variables")) {
    for (const auto& v : j.at("variables")) {
      if (!v.is_string()) throw InputError("\"variables\" must be strings");
      p.variables.push_back(v.get<std::string>());
    }
  } else {
    for (std::size_t k = 0; k < p.c1.dim(); ++k) p.variables.push_back("x" + std::to_string(k + 1));
  }
  if (p.variables.size() != p.c1.dim()) throw InputError("variable count does not match the dimension");
  return p;
}

Vec parse_point_literal(const std::string& text) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
  };
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw InputError("point must look like (1,i,0): " + text);
  const std::string body = t.substr(1, t.size() - 2);
  if (body.find_first_of("()") != std::string::npos) throw InputError("nested parentheses in point: " + text);
  Vec out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string item = trim(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (item.empty()) throw InputError("empty coordinate in point: " + text);
    try {
      out.push_back(parse_gaussian(item));
    } catch (const std::exception&) {
      throw InputError("not a Gaussian rational: " + item);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Vec point_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("point must be a JSON array");
  Vec out;
  for (const auto& x : j) out.push_back(gaussian_value(x));
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace bihamil
