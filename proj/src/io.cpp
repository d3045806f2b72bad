#include "liekit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace liekit {

namespace {

std::size_t require_index(const Json& v, const char* what, std::size_t dim) {
  if (!v.is_number_integer()) throw InputError(std::string("algebra JSON: ") + what + " must be an integer");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim) {
    throw InputError(std::string("algebra JSON: ") + what + " = " + std::to_string(i) + " out of range");
  }
  return static_cast<std::size_t>(i - 1);
}

Rational rational_field(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError("expected a rational as a \"p/q\" string");
}

}  // namespace

LieAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("algebra JSON: expected an object");
  for (const char* key : {"name", "dim", "basis", "brackets"}) {
    if (!doc.contains(key)) throw InputError(std::string("algebra JSON: missing field '") + key + "'");
  }
  if (!doc["name"].is_string()) throw InputError("algebra JSON: name must be a string");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0) {
    throw InputError("algebra JSON: dim must be a nonnegative integer");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc["basis"].is_array() || doc["basis"].size() != dim) {
    throw InputError("algebra JSON: basis must list exactly dim names");
  }
  std::vector<std::string> names;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw InputError("algebra JSON: basis names must be strings");
    names.push_back(b.get<std::string>());
  }
  if (!doc["brackets"].is_array()) throw InputError("algebra JSON: brackets must be an array");
  LieAlgebra::UpperTable table;
  for (const auto& entry : doc["brackets"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") || !entry.contains("result")) {
      throw InputError("algebra JSON: each bracket needs i, j and result");
    }
    const std::size_t i = require_index(entry["i"], "i", dim);
    const std::size_t j = require_index(entry["j"], "j", dim);
    if (i >= j) throw InputError("algebra JSON: bracket entries must have i < j");
    if (table.count({i, j})) throw InputError("algebra JSON: duplicate bracket entry");
    if (!entry["result"].is_object()) throw InputError("algebra JSON: result must be an object");
    RatVector r(dim);
    for (const auto& [key, value] : entry["result"].items()) {
      std::size_t pos = 0;
      long long k = 0;
      try {
        k = std::stoll(key, &pos);
      } catch (const std::exception&) {
        throw InputError("algebra JSON: result key '" + key + "' is not an index");
      }
      if (pos != key.size() || k < 1 || static_cast<std::size_t>(k) > dim) {
        throw InputError("algebra JSON: result key '" + key + "' out of range");
      }
      r[static_cast<std::size_t>(k - 1)] = rational_field(value);
    }
    table.emplace(std::make_pair(i, j), std::move(r));
  }
  return LieAlgebra::unchecked(doc["name"].get<std::string>(), std::move(names), table);
}

Json algebra_to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& [key, r] : g.upper_table()) {
    Json result = Json::object();
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (sgn(r[k]) != 0) result[std::to_string(k + 1)] = to_string(r[k]);
    }
    brackets.push_back(Json{{"i", key.first + 1}, {"j", key.second + 1}, {"result", result}});
  }
  return Json{{"name", g.name()}, {"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

LieAlgebra load_algebra_file(const std::string& path) { return algebra_from_json(read_json_file(path)); }

Poly poly_from_json(const Json& doc, std::size_t nvars) {
  if (!doc.is_object()) throw InputError("polynomial JSON: expected an object of exponent keys");
  Poly p(nvars);
  for (const auto& [key, value] : doc.items()) {
    Monomial m;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("polynomial JSON: bad exponent key '" + key + "'");
      }
      m.push_back(static_cast<unsigned>(std::stoul(part)));
    }
    if (m.size() != nvars) throw InputError("polynomial JSON: key '" + key + "' has wrong number of exponents");
    p.add_term(m, rational_field(value));
  }
  return p;
}

Json poly_to_json(const Poly& p) {
  Json out = Json::object();
  for (const auto& [m, c] : p.terms()) {
    std::string key;
    for (std::size_t i = 0; i < m.size(); ++i) key += (i ? "," : "") + std::to_string(m[i]);
    out[key] = to_string(c);
  }
  return out;
}

PolyVectorField field_from_json(const Json& doc, std::size_t nvars) {
  if (!doc.is_array() || doc.size() != nvars) throw InputError("vector field JSON: need one polynomial per variable");
  std::vector<Poly> comps;
  for (const auto& c : doc) comps.push_back(poly_from_json(c, nvars));
  return PolyVectorField(std::move(comps));
}

Json rational_matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", rational_matrix_to_json(s.basis())}};
}

Json point_to_json(const Eigen::VectorXd& p) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(p[i]);
  return a;
}

Json optional_count(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json("infinite"); }

Json series_to_json(const SeriesReport& s) {
  Json dims = Json::array();
  for (const auto& t : s.terms) dims.push_back(t.dim());
  return Json{{"kind", s.kind == SeriesKind::derived ? "derived" : "lower_central"},
              {"term_dims", dims},
              {"stabilized", s.stabilized},
              {"length", optional_count(s.length)}};
}

Json obstruction_to_json(const ObstructionReport& r) {
  Json verdicts = Json::array();
  for (const auto& f : r.verdicts) verdicts.push_back(Json{{"verdict", f.tag}, {"message", f.message}});
  return Json{{"algebra", r.algebra},
              {"solvable", r.solvable},
              {"nilpotent", r.nilpotent},
              {"derived_length", optional_count(r.derived_length)},
              {"nilpotency_class", optional_count(r.nilpotency_class)},
              {"min_effective_dim", r.min_effective_dim ? Json(*r.min_effective_dim) : Json("not applicable")},
              {"last_derived_term", subspace_to_json(r.last_derived_term)},
              {"center", subspace_to_json(r.center)},
              {"last_term_central", r.last_term_central},
              {"center_dim", r.center_dim},
              {"verdicts", verdicts}};
}

Json contractibility_to_json(const ContractibilityReport& r) {
  Json basis = Json::array();
  for (const auto& d : r.derivations.basis) basis.push_back(rational_matrix_to_json(d));
  Json flag = Json::array();
  for (const auto& w : r.flag.flag) flag.push_back(subspace_to_json(w));
  Json out{{"verdict", r.verdict == ContractibilityVerdict::obstructed ? "obstructed" : "inconclusive"},
           {"derivation_dim", r.derivations.dim()},
           {"derivation_basis", basis},
           {"nil_family", r.flag.nil},
           {"flag", flag}};
  out["witness"] = r.witness ? rational_matrix_to_json(*r.witness) : Json(nullptr);
  return out;
}

Json deformation_descriptor(const AlgebraDeformation& d) {
  Json stages = Json::array();
  for (const auto& s : d.stages()) {
    stages.push_back(Json{{"time_scale", to_string(s.scale)}, {"time_shift", to_string(s.shift)}, {"exponents", s.exponents}});
  }
  return Json{{"label", d.label()}, {"algebra", d.parent().name()}, {"profile", "flat_step"}, {"stages", stages}};
}

Json deformation_descriptor(const GroupDeformation& d) {
  Json stages = Json::array();
  for (const auto& s : d.stages()) {
    stages.push_back(Json{{"kind", s.kind == GroupStageKind::off_diagonal_scaling ? "off_diagonal_scaling" : "diagonal_power"},
                          {"time_scale", s.scale},
                          {"time_shift", s.shift},
                          {"direction", s.rising ? "rising" : "falling"}});
  }
  return Json{{"label", d.label()},
              {"group", to_string(d.group())},
              {"n", d.n()},
              {"family", d.kind() == GroupFamilyKind::contraction ? "contraction" : "bump"},
              {"profile", "flat_step"},
              {"stages", stages}};
}

Json deformation_report_to_json(const DeformationReport& r) {
  return Json{{"label", r.label},
              {"samples", r.samples},
              {"seed", r.seed},
              {"d1_residual", r.d1_residual},
              {"d2_residual", r.d2_residual},
              {"endomorphism_exact", r.endomorphism_exact},
              {"endomorphism_residual", r.endomorphism_residual},
              {"endomorphism_tolerance", r.endomorphism_tolerance},
              {"smoothness_residual", r.smoothness_residual},
              {"smoothness_tolerance", r.smoothness_tolerance},
              {"is_contraction", r.is_contraction},
              {"contraction_residual", r.contraction_residual},
              {"passed", r.passed()}};
}

Json deformation_report_to_json(const GroupDeformationReport& r) {
  return Json{{"label", r.label},
              {"samples", r.samples},
              {"seed", r.seed},
              {"homomorphism_residual", r.homomorphism_residual},
              {"membership_residual", r.membership_residual},
              {"endpoint_residual", r.endpoint_residual},
              {"d2_residual", r.d2_residual},
              {"smoothness_residual", r.smoothness_residual},
              {"tolerance", r.tolerance},
              {"smoothness_tolerance", r.smoothness_tolerance},
              {"passed", r.passed()}};
}

Json action_report_to_json(const ActionReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(Json{{"generator", w.generator},
                             {"found", w.found},
                             {"displacement", w.displacement},
                             {"point", w.found ? point_to_json(w.point) : Json::array()}});
  }
  return Json{{"samples", r.samples},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"identity_residual", r.identity_residual},
              {"composition_residual", r.composition_residual},
              {"effectiveness_threshold", kEffectivenessThreshold},
              {"witnesses", witnesses},
              {"all_generators_effective", r.all_generators_effective()},
              {"passed", r.passed()}};
}

namespace {

void write_value(std::string& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        write_value(out, value, indent + 2);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      if (std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); })) {
        out += "[";
        bool first = true;
        for (const auto& value : v) {
          if (!first) out += ", ";
          first = false;
          write_value(out, value, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : v) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_value(out, value, indent + 2);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      std::string s(buf);
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_report(const Json& doc) {
  std::string out;
  write_value(out, doc, 0);
  out += "\n";
  return out;
}

}  // namespace liekit
