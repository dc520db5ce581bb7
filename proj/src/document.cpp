#include "bihom/document.hpp"

#include <json.hpp>

#include <regex>
#include <sstream>

#include "bihom/errors.hpp"
#include "bihom/expr.hpp"

namespace bihom {

namespace {

using nlohmann::json;

bool valid_identifier(const std::string& s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, re);
}

// Linear-combination evaluation domain: a scalar, a vector, or (for the
// literal 0 and scalar subexpressions) a scalar that may still become the
// zero vector.
struct LinValue {
  Scalar s;
  std::optional<VectorS> vec;
};

LinValue lin_eval(const ScalarExpr& e, const std::vector<std::string>& params,
                  const std::vector<std::string>& basis) {
  auto scalar = [&](Scalar v) { return LinValue{std::move(v), std::nullopt}; };
  const int dim = static_cast<int>(basis.size());
  switch (e.kind) {
    case ScalarExpr::Kind::Literal:
      return scalar(Scalar::constant(params, e.literal));
    case ScalarExpr::Kind::Param: {
      for (std::size_t i = 0; i < params.size(); ++i)
        if (params[i] == e.param) return scalar(Scalar::parameter(params, i));
      for (int i = 0; i < dim; ++i)
        if (basis[static_cast<std::size_t>(i)] == e.param)
          return LinValue{Scalar::zero(params), basis_vector(dim, i, params)};
      throw ParseError("unknown name '" + e.param + "'", 0);
    }
    case ScalarExpr::Kind::Neg: {
      LinValue v = lin_eval(*e.lhs, params, basis);
      if (v.vec) return LinValue{Scalar::zero(params), vec_neg(*v.vec)};
      return scalar(-v.s);
    }
    case ScalarExpr::Kind::Add:
    case ScalarExpr::Kind::Sub: {
      LinValue a = lin_eval(*e.lhs, params, basis);
      LinValue b = lin_eval(*e.rhs, params, basis);
      bool sub = e.kind == ScalarExpr::Kind::Sub;
      if (!a.vec && !b.vec) return scalar(sub ? a.s - b.s : a.s + b.s);
      // A scalar term can join a vector sum only if it is zero.
      auto as_vec = [&](LinValue& v) -> VectorS {
        if (v.vec) return *v.vec;
        if (v.s.is_zero()) return VectorS(static_cast<std::size_t>(dim), Scalar::zero(params));
        throw ParseError("cannot add a scalar to a basis combination", 0);
      };
      VectorS va = as_vec(a), vb = as_vec(b);
      return LinValue{Scalar::zero(params), sub ? vec_sub(va, vb) : vec_add(va, vb)};
    }
    case ScalarExpr::Kind::Mul: {
      LinValue a = lin_eval(*e.lhs, params, basis);
      LinValue b = lin_eval(*e.rhs, params, basis);
      if (a.vec && b.vec) throw ParseError("products of basis elements are not allowed", 0);
      if (a.vec) return LinValue{Scalar::zero(params), vec_scale(b.s, *a.vec)};
      if (b.vec) return LinValue{Scalar::zero(params), vec_scale(a.s, *b.vec)};
      return scalar(a.s * b.s);
    }
    case ScalarExpr::Kind::Div: {
      LinValue a = lin_eval(*e.lhs, params, basis);
      LinValue b = lin_eval(*e.rhs, params, basis);
      if (b.vec) throw ParseError("division by a basis element is not allowed", 0);
      if (a.vec) return LinValue{Scalar::zero(params), vec_scale(b.s.inverse(), *a.vec)};
      return scalar(a.s / b.s);
    }
    case ScalarExpr::Kind::Pow: {
      LinValue a = lin_eval(*e.lhs, params, basis);
      if (a.vec) {
        if (e.exponent == 1) return a;
        throw ParseError("basis elements cannot be exponentiated", 0);
      }
      return scalar(a.s.pow(e.exponent));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar parse_entry(const json& v, const std::vector<std::string>& params) {
  if (v.is_number_integer()) return Scalar::constant(params, Rational(v.get<long>()));
  if (!v.is_string()) throw ShapeError({"matrix entries must be strings or integers"});
  return parse_scalar(v.get<std::string>(), params);
}

}  // namespace

std::string lincomb_to_string(const VectorS& v, const std::vector<std::string>& basis) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string term;
    if (v[k].is_one())
      term = basis[k];
    else if ((-v[k]).is_one())
      term = "-" + basis[k];
    else
      term = v[k].to_factor_string() + "*" + basis[k];
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

VectorS parse_lincomb(const std::string& text, const std::vector<std::string>& params,
                      const std::vector<std::string>& basis) {
  std::vector<std::string> names = params;
  names.insert(names.end(), basis.begin(), basis.end());
  ExprPtr ast = parse_scalar_expr(text, names);
  LinValue v = lin_eval(*ast, params, basis);
  if (v.vec) return *v.vec;
  if (v.s.is_zero()) return VectorS(basis.size(), Scalar::zero(params));
  throw ParseError("expression is not a linear combination of basis elements", 0);
}

std::string bundle_to_json(const AlgebraBundle& b) {
  json doc;
  doc["name"] = b.name;
  doc["kind"] = kind_name(b.kind);
  doc["dimension"] = b.dim;
  doc["basis"] = b.basis;
  doc["parameters"] = b.parameters;

  json ops = json::object();
  for (const auto& [opname, t] : b.ops) {
    json table = json::object();
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) {
        VectorS v = t.on_basis(i, j);
        if (vec_is_zero(v)) continue;
        table[b.basis[static_cast<std::size_t>(i)] + "," +
              b.basis[static_cast<std::size_t>(j)]] = lincomb_to_string(v, b.basis);
      }
    ops[opname] = std::move(table);
  }
  doc["operations"] = std::move(ops);

  json maps = json::object();
  for (const auto& [mapname, m] : b.maps) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
      rows.push_back(std::move(row));
    }
    maps[mapname] = std::move(rows);
  }
  doc["maps"] = std::move(maps);
  return doc.dump(2) + "\n";
}

AlgebraBundle bundle_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  std::vector<std::string> errs;
  auto need = [&](const char* key, bool ok) {
    if (!doc.contains(key) || !ok) errs.push_back(std::string("field '") + key + "' missing or mistyped");
    return doc.contains(key) && ok;
  };

  AlgebraBundle b;
  if (need("name", doc.contains("name") && doc["name"].is_string())) b.name = doc["name"];
  if (need("dimension", doc.contains("dimension") && doc["dimension"].is_number_integer()))
    b.dim = doc["dimension"].get<int>();
  if (need("kind", doc.contains("kind") && doc["kind"].is_string())) {
    auto k = kind_from_name(doc["kind"].get<std::string>());
    if (!k)
      errs.push_back("unknown kind '" + doc["kind"].get<std::string>() + "'");
    else
      b.kind = *k;
  }
  if (need("basis", doc.contains("basis") && doc["basis"].is_array()))
    for (const auto& s : doc["basis"]) {
      if (!s.is_string() || !valid_identifier(s.get<std::string>()))
        errs.push_back("basis names must be identifiers");
      else
        b.basis.push_back(s.get<std::string>());
    }
  if (need("parameters", doc.contains("parameters") && doc["parameters"].is_array()))
    for (const auto& s : doc["parameters"]) {
      if (!s.is_string() || !valid_identifier(s.get<std::string>()))
        errs.push_back("parameter names must be identifiers");
      else
        b.parameters.push_back(s.get<std::string>());
    }
  for (const auto& p : b.parameters)
    for (const auto& s : b.basis)
      if (p == s) errs.push_back("name '" + p + "' used as both parameter and basis element");
  if (!errs.empty()) throw ShapeError(std::move(errs));

  auto basis_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < b.basis.size(); ++i)
      if (b.basis[i] == name) return static_cast<int>(i);
    throw ShapeError({"unknown basis name '" + name + "' in a table key"});
  };

  if (doc.contains("operations")) {
    if (!doc["operations"].is_object()) throw ShapeError({"'operations' must be an object"});
    for (const auto& [opname, table] : doc["operations"].items()) {
      if (!table.is_object()) throw ShapeError({"operation '" + opname + "' must be an object"});
      StructureTensor t(b.dim, b.parameters);
      for (const auto& [key, value] : table.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
          throw ShapeError({"table key '" + key + "' is not of the form 'bi,bj'"});
        auto trim = [](std::string s) {
          while (!s.empty() && s.front() == ' ') s.erase(s.begin());
          while (!s.empty() && s.back() == ' ') s.pop_back();
          return s;
        };
        int i = basis_index(trim(key.substr(0, comma)));
        int j = basis_index(trim(key.substr(comma + 1)));
        if (!value.is_string())
          throw ShapeError({"table values must be linear-combination strings"});
        VectorS v = parse_lincomb(value.get<std::string>(), b.parameters, b.basis);
        for (int k = 0; k < b.dim; ++k) t.set(i, j, k, v[static_cast<std::size_t>(k)]);
      }
      b.ops.emplace(opname, std::move(t));
    }
  }

  if (doc.contains("maps")) {
    if (!doc["maps"].is_object()) throw ShapeError({"'maps' must be an object"});
    for (const auto& [mapname, rows] : doc["maps"].items()) {
      if (!rows.is_array() || static_cast<int>(rows.size()) != b.dim)
        throw ShapeError({"map '" + mapname + "' must have " + std::to_string(b.dim) + " rows"});
      MatrixS m = MatrixS::zero(b.dim, b.dim, b.parameters);
      for (int i = 0; i < b.dim; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != b.dim)
          throw ShapeError({"map '" + mapname + "' rows must have " + std::to_string(b.dim) +
                            " entries"});
        for (int j = 0; j < b.dim; ++j)
          m.at(i, j) = parse_entry(row[static_cast<std::size_t>(j)], b.parameters);
      }
      b.maps.emplace(mapname, std::move(m));
    }
  }

  validate_bundle(b);
  return b;
}

namespace {

std::string indices_with_names(const std::vector<int>& idx, const std::vector<std::string>& basis) {
  std::string nums, names;
  bool nameable = true;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) nums += ",";
    nums += std::to_string(idx[k]);
    if (idx[k] >= 0 && idx[k] < static_cast<int>(basis.size())) {
      if (k) names += ",";
      names += basis[static_cast<std::size_t>(idx[k])];
    } else {
      nameable = false;
    }
  }
  if (nameable && !basis.empty()) return "(" + names + ")";
  return "(" + nums + ")";
}

}  // namespace

std::string report_to_json(const ViolationReport& rep, const std::vector<std::string>& basis) {
  json doc;
  doc["structure"] = rep.structure;
  doc["ok"] = rep.ok();
  json axioms = json::array();
  for (const auto& a : rep.axioms) {
    json ja;
    ja["id"] = a.axiom;
    ja["status"] = a.passed ? "pass" : "fail";
    ja["violations"] = a.total_violations;
    json ws = json::array();
    for (const auto& w : a.witnesses) {
      json jw;
      jw["indices"] = w.indices;
      json res = json::array();
      for (const auto& s : w.residual) res.push_back(s.to_string());
      jw["residual"] = std::move(res);
      ws.push_back(std::move(jw));
    }
    ja["witnesses"] = std::move(ws);
    axioms.push_back(std::move(ja));
  }
  doc["axioms"] = std::move(axioms);
  return doc.dump(2) + "\n";
}

std::string report_to_text(const ViolationReport& rep, const std::vector<std::string>& basis) {
  std::ostringstream out;
  out << "structure: " << rep.structure << "\n";
  for (const auto& a : rep.axioms) {
    out << (a.passed ? "  pass  " : "  FAIL  ") << a.axiom;
    if (!a.passed) out << "  (" << a.total_violations << " violation"
                       << (a.total_violations == 1 ? "" : "s") << ")";
    out << "\n";
    for (const auto& w : a.witnesses) {
      out << "        witness " << indices_with_names(w.indices, basis) << ": residual (";
      for (std::size_t k = 0; k < w.residual.size(); ++k) {
        if (k) out << ", ";
        out << w.residual[k].to_string();
      }
      out << ")\n";
    }
  }
  out << "overall: " << (rep.ok() ? "pass" : "FAIL") << "\n";
  return out.str();
}

AlgebraBundle bundle_substitute(const AlgebraBundle& b, const std::string& param,
                                const Rational& value) {
  bool known = false;
  std::vector<std::string> rest;
  for (const auto& p : b.parameters) {
    if (p == param)
      known = true;
    else
      rest.push_back(p);
  }
  if (!known) throw EvaluationError("bundle has no parameter '" + param + "'");

  AlgebraBundle out;
  out.name = b.name;
  out.dim = b.dim;
  out.basis = b.basis;
  out.parameters = rest;
  out.kind = b.kind;
  for (const auto& [opname, t] : b.ops) {
    StructureTensor nt(b.dim, rest);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j)
        for (int k = 0; k < b.dim; ++k)
          if (!t.at(i, j, k).is_zero()) nt.set(i, j, k, t.at(i, j, k).substitute(param, value));
    out.ops.emplace(opname, std::move(nt));
  }
  for (const auto& [mapname, m] : b.maps) {
    MatrixS nm = MatrixS::zero(b.dim, b.dim, rest);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j)
        if (!m.at(i, j).is_zero()) nm.at(i, j) = m.at(i, j).substitute(param, value);
    out.maps.emplace(mapname, std::move(nm));
  }
  return out;
}

}  // namespace bihom
