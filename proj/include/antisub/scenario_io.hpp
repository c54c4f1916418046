#ifndef ANTISUB_SCENARIO_IO_HPP
#define ANTISUB_SCENARIO_IO_HPP

// JSON scenario files and reports. Rationals travel as "p/q" strings; key
// order is fixed so that output is diffable.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "antisub/catalog.hpp"

namespace antisub::io {

using Json = nlohmann::ordered_json;

// --- scalars -----------------------------------------------------------------

inline Json to_json(const Scalar& s) { return to_string(s); }

/// Accepts "p/q" strings and JSON integers; floats are rejected.
inline Scalar scalar_from_json(const Json& j, std::string_view where) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  throw ScenarioFormatError(std::string(where) + ": expected an exact rational as \"p/q\"");
}

inline Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Vector vector_from_json(const Json& j, std::string_view where) {
  if (!j.is_array()) throw ScenarioFormatError(std::string(where) + ": expected an array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, where));
  return v;
}

inline Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Matrix matrix_from_json(const Json& j, std::size_t n, std::string_view where) {
  if (!j.is_array() || j.size() != n) throw ScenarioFormatError(std::string(where) + ": expected " + std::to_string(n) + " rows");
  std::vector<Vector> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r, where));
    if (rows.back().size() != n) throw ScenarioFormatError(std::string(where) + ": row length differs from dimension");
  }
  return Matrix::from_rows(rows);
}

inline Json to_json(const ClaimValue& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  return to_json(std::get<Scalar>(v));
}

inline ClaimValue claim_value_from_json(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  return scalar_from_json(j, "claim value");
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ScenarioFormatError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ScenarioFormatError(std::string("key '") + key + "' has the wrong type");
  }
}

inline const Json& required_node(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ScenarioFormatError(std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::string optional_string(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_string()) throw ScenarioFormatError(std::string("key '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

// --- claims and notes --------------------------------------------------------

inline Json claims_to_json(const std::vector<Claim>& claims) {
  Json a = Json::array();
  for (const auto& c : claims) {
    Json o;
    o["check"] = c.check;
    o["expected"] = to_json(c.expected);
    if (!c.source.empty()) o["source"] = c.source;
    a.push_back(std::move(o));
  }
  return a;
}

inline std::vector<Claim> claims_from_json(const Json& j) {
  std::vector<Claim> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw ScenarioFormatError("claims must be an array");
  for (const auto& c : j)
    out.push_back({required<std::string>(c, "check"), claim_value_from_json(required_node(c, "expected")),
                   optional_string(c, "source")});
  return out;
}

inline std::vector<std::string> notes_from_json(const Json& j) {
  if (!j.contains("notes")) return {};
  try {
    return j.at("notes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception&) {
    throw ScenarioFormatError("notes must be an array of strings");
  }
}

// --- Lie-theoretic scenarios -------------------------------------------------

inline Json structure_to_json(const StructureEndo& s) {
  Json o;
  o["name"] = s.name;
  o["kind"] = std::string(to_string(s.kind));
  o["matrix"] = to_json(s.matrix);
  return o;
}

inline StructureEndo structure_from_json(const Json& j, std::size_t n) {
  return {required<std::string>(j, "name"), matrix_from_json(required_node(j, "matrix"), n, "structure matrix"),
          structure_kind_from_string(required<std::string>(j, "kind"))};
}

inline Json to_json(const SubmersionScenario& sc) {
  const auto& alg = sc.mla.algebra();
  const std::size_t n = alg.dim();
  Json o;
  o["kind"] = "submersion";
  o["id"] = sc.id;
  o["title"] = sc.title;
  o["basis"] = alg.labels();
  Json br = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Json coeffs = Json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(alg.constant(i, j, k)) != 0) coeffs[std::to_string(k)] = to_string(alg.constant(i, j, k));
      if (!coeffs.empty()) br.push_back(Json::array({i, j, coeffs}));
    }
  o["brackets"] = br;
  o["metric"] = to_json(sc.mla.form().gram());
  Json sub = Json::array();
  for (const auto& v : sc.h.span.basis()) sub.push_back(to_json(v));
  o["subalgebra"] = sub;
  Json st = Json::array();
  for (const auto& s : sc.structures) st.push_back(structure_to_json(s));
  for (const auto& a : sc.actions) {
    Json act;
    act["action"] = std::string(to_string(a.table.kind()));
    act["name"] = a.name;
    Json gens = Json::array();
    for (std::size_t u = 0; u < a.generators.size(); ++u) {
      Json g;
      g["unit"] = u + 1;
      g["name"] = a.generators[u].name;
      g["kind"] = std::string(to_string(a.generators[u].kind));
      g["matrix"] = to_json(a.generators[u].matrix);
      gens.push_back(std::move(g));
    }
    act["generators"] = gens;
    st.push_back(std::move(act));
  }
  o["structures"] = st;
  o["claims"] = claims_to_json(sc.claims);
  o["notes"] = sc.notes;
  return o;
}

inline SubmersionScenario submersion_from_json(const Json& j) {
  const auto labels = required<std::vector<std::string>>(j, "basis");
  const std::size_t n = labels.size();
  if (n == 0) throw ScenarioFormatError("basis is empty");
  LieAlgebra alg(labels);
  const Json& br = j.contains("brackets") ? j.at("brackets") : Json::array();
  if (!br.is_array()) throw ScenarioFormatError("brackets must be an array");
  for (const auto& b : br) {
    if (!b.is_array() || b.size() != 3 || !b[0].is_number_unsigned() || !b[1].is_number_unsigned() || !b[2].is_object())
      throw ScenarioFormatError("bracket entries must be [i, j, {k: coeff}]");
    const auto i = b[0].get<std::size_t>(), jj = b[1].get<std::size_t>();
    if (i >= n || jj >= n) throw ScenarioFormatError("bracket index out of range");
    Vector v = zero_vector(n);
    for (const auto& [key, val] : b[2].items()) {
      std::size_t k = n;
      for (std::size_t l = 0; l < n; ++l)
        if (labels[l] == key) k = l;
      if (k == n) {
        try {
          std::size_t used = 0;
          k = std::stoul(key, &used);
          if (used != key.size()) k = n;
        } catch (const std::exception&) {
          k = n;
        }
      }
      if (k >= n) throw ScenarioFormatError("bracket component '" + key + "' is not a basis index or label");
      v[k] = scalar_from_json(val, "bracket coefficient");
    }
    alg.set_bracket(i, jj, v);
  }
  BilinearForm form(matrix_from_json(required_node(j, "metric"), n, "metric"));
  MetricLieAlgebra mla(std::move(alg), std::move(form));

  std::vector<Vector> hb;
  const Json& sub = required_node(j, "subalgebra");
  if (!sub.is_array()) throw ScenarioFormatError("subalgebra must be an array of vectors");
  for (const auto& v : sub) {
    hb.push_back(vector_from_json(v, "subalgebra vector"));
    if (hb.back().size() != n) throw ScenarioFormatError("subalgebra vector length differs from dimension");
  }

  SubmersionScenario sc{optional_string(j, "id"), optional_string(j, "title"), std::move(mla),
                        SubalgebraDecl{Subspace(n, hb), true}, {}, {}, claims_from_json(j.value("claims", Json())),
                        notes_from_json(j)};
  if (sc.id.empty()) sc.id = "file";

  if (j.contains("structures")) {
    const Json& st = j.at("structures");
    if (!st.is_array()) throw ScenarioFormatError("structures must be an array");
    for (const auto& s : st) {
      if (s.contains("action")) {
        const auto table = builtin(algebra_kind_from_string(required<std::string>(s, "action")));
        AlgebraAction act{required<std::string>(s, "name"), table, {}};
        const Json& gens = required_node(s, "generators");
        if (!gens.is_array() || gens.size() + 1 != table.dim())
          throw ScenarioFormatError("action needs one generator per imaginary unit");
        act.generators.resize(table.dim() - 1);
        std::vector<bool> seen(table.dim(), false);
        for (const auto& g : gens) {
          const auto u = required<std::size_t>(g, "unit");
          if (u == 0 || u >= table.dim() || seen[u]) throw ScenarioFormatError("generator units must be 1..d-1, each once");
          seen[u] = true;
          act.generators[u - 1] = structure_from_json(g, n);
        }
        sc.actions.push_back(std::move(act));
      } else {
        sc.structures.push_back(structure_from_json(s, n));
      }
    }
  }
  return sc;
}

// --- embedded scenarios ------------------------------------------------------

inline Json to_json(const EmbeddedScenario& sc) {
  Json o;
  o["kind"] = "embedded";
  o["id"] = sc.id;
  o["title"] = sc.title;
  o["family"] = sc.family == EmbeddedFamily::circle_action ? "circle_action" : "torus_action";
  o["case"] = sc.case_no;
  o["ell"] = sc.ell;
  o["claims"] = claims_to_json(sc.claims);
  o["notes"] = sc.notes;
  return o;
}

inline EmbeddedScenario embedded_from_json(const Json& j) {
  const auto family = required<std::string>(j, "family");
  const auto case_no = required<int>(j, "case");
  const auto ell = required<std::size_t>(j, "ell");
  EmbeddedScenario sc;
  if (family == "circle_action") sc = make_circle_action_scenario(case_no, ell);
  else if (family == "torus_action") sc = make_torus_action_scenario(case_no, ell);
  else throw ScenarioFormatError("unknown embedded family '" + family + "'");
  if (auto id = optional_string(j, "id"); !id.empty()) sc.id = id;
  if (auto t = optional_string(j, "title"); !t.empty()) sc.title = t;
  sc.claims = claims_from_json(j.value("claims", Json()));
  if (j.contains("notes")) sc.notes = notes_from_json(j);
  return sc;
}

// --- dispatch ----------------------------------------------------------------

inline Json to_json(const catalog::Scenario& sc) {
  return std::visit([](const auto& s) { return to_json(s); }, sc);
}

inline catalog::Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw ScenarioFormatError("scenario file must hold a JSON object");
  const std::string kind = j.value("kind", std::string("submersion"));
  if (kind == "embedded") return embedded_from_json(j);
  if (kind == "submersion") return submersion_from_json(j);
  throw ScenarioFormatError("unknown scenario kind '" + kind + "'");
}

inline catalog::Scenario parse_scenario(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioFormatError(std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

inline catalog::Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioFormatError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

// --- reports -----------------------------------------------------------------

inline Json to_json(const VerificationReport& r, bool with_timing = false) {
  Json o;
  o["id"] = r.id;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json k;
    k["name"] = c.name;
    k["claimed"] = c.claimed ? to_json(*c.claimed) : Json();
    k["computed"] = c.computed ? to_json(*c.computed) : Json();
    k["status"] = std::string(to_string(c.status));
    k["detail"] = c.detail;
    checks.push_back(std::move(k));
  }
  o["checks"] = checks;
  o["decisions"] = r.decisions;
  if (with_timing && r.timing_ms) o["timing_ms"] = *r.timing_ms;
  return o;
}

inline std::string to_text(const VerificationReport& r, bool with_timing = false) {
  std::ostringstream os;
  os << r.id << ": " << r.count(Status::confirmed) << " confirmed, " << r.count(Status::refuted) << " refuted, "
     << r.count(Status::unclaimed) << " unclaimed, " << r.count(Status::error) << " error";
  if (with_timing && r.timing_ms) os << " (" << format_double(*r.timing_ms) << " ms)";
  os << "\n";
  for (const auto& c : r.checks) {
    os << "  " << std::string(to_string(c.status)) << "  " << c.name;
    if (c.claimed) os << "  claimed=" << to_string(*c.claimed);
    os << "  computed=" << (c.computed ? to_string(*c.computed) : std::string("-"));
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  for (const auto& d : r.decisions) os << "  note: " << d << "\n";
  return os.str();
}

}  // namespace antisub::io

#endif  // ANTISUB_SCENARIO_IO_HPP
