#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypermatroid/errors.hpp"
#include "hypermatroid/hopf.hpp"
#include "hypermatroid/hyperfield.hpp"
#include "hypermatroid/matroid.hpp"
#include "hypermatroid/report.hpp"

namespace hypermatroid::io {

using json = nlohmann::json;

inline constexpr const char* kHyperfieldSchema = "hyperfield-table/1";
inline constexpr const char* kMatroidSchema = "matroid/1";
inline constexpr const char* kAlgebraSchema = "algebra/1";
inline constexpr const char* kReportSchema = "report/1";

/// Two-space indented JSON with sorted keys and a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

inline void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw FormatError(path + ": expected an object");
}

inline void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> required,
                      std::initializer_list<const char*> optional = {}) {
  require_object(j, path);
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw FormatError(path + ": missing field \"" + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw FormatError(path + ": unknown field \"" + k + "\"");
}

inline const std::string& get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path + ": expected a string");
  return j.get_ref<const std::string&>();
}

inline const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path + ": expected an array");
  return j;
}

inline void require_schema(const json& j, const char* schema) {
  require_object(j, "$");
  if (!j.contains("schema")) throw FormatError("$: missing field \"schema\"");
  const auto& s = get_string(j["schema"], "$.schema");
  if (s != schema) throw FormatError("$.schema: expected \"" + std::string(schema) + "\", got \"" + s + "\"");
}

inline Element parse_element(const Hyperfield& h, const json& j, const std::string& path) {
  const auto& s = get_string(j, path);
  try {
    return h.parse(s);
  } catch (const CarrierError& e) {
    throw CarrierError(path + ": " + e.what());
  }
}

inline std::vector<std::string> split_pair(const std::string& key, const std::string& path) {
  auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
    throw FormatError(path + ": key \"" + key + "\" is not a pair \"a,b\"");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

}  // namespace detail

// ---- hyperfields -------------------------------------------------------------

inline json table_to_json(const HyperfieldTable& t) {
  json j;
  j["kind"] = "table";
  if (!t.name.empty()) j["name"] = t.name;
  const int n = t.size();
  j["elements"] = t.symbols;
  j["zero"] = t.symbols[t.zero];
  j["one"] = t.symbols[t.one];
  json neg = json::object(), mul = json::object(), add = json::object();
  for (int i = 0; i < n; ++i) {
    neg[t.symbols[i]] = t.symbols[t.neg[i]];
    for (int k = i; k < n; ++k) {
      std::string key = t.symbols[i] + "," + t.symbols[k];
      mul[key] = t.symbols[t.mul[i * n + k]];
      json s = json::array();
      for (int x = 0; x < n; ++x)
        if ((t.add[i * n + k] >> x) & 1U) s.push_back(t.symbols[x]);
      add[key] = s;
    }
  }
  j["neg"] = neg;
  j["mul"] = mul;
  j["add"] = add;
  return j;
}

/// Table fields; pair keys may name the two symbols in either order, but each
/// unordered pair exactly once.
inline HyperfieldTable table_from_json(const json& j, const std::string& path) {
  detail::only_keys(j, path, {"kind", "elements", "zero", "one", "neg", "mul", "add"}, {"name", "schema"});
  if (detail::get_string(j["kind"], path + ".kind") != "table")
    throw FormatError(path + ".kind: expected \"table\"");
  HyperfieldTable t;
  if (j.contains("name")) t.name = detail::get_string(j["name"], path + ".name");
  std::map<std::string, int> idx;
  const auto& elems = detail::get_array(j["elements"], path + ".elements");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& s = detail::get_string(elems[i], path + ".elements[" + std::to_string(i) + "]");
    if (!idx.emplace(s, static_cast<int>(i)).second) throw FormatError(path + ".elements: duplicate symbol \"" + s + "\"");
    t.symbols.push_back(s);
  }
  const int n = t.size();
  auto sym = [&](const json& v, const std::string& p) {
    const auto& s = detail::get_string(v, p);
    auto it = idx.find(s);
    if (it == idx.end()) throw FormatError(p + ": unknown symbol \"" + s + "\"");
    return it->second;
  };
  t.zero = sym(j["zero"], path + ".zero");
  t.one = sym(j["one"], path + ".one");
  t.neg.assign(n, -1);
  t.mul.assign(n * n, -1);
  t.add.assign(n * n, 0);
  detail::require_object(j["neg"], path + ".neg");
  for (const auto& [k, v] : j["neg"].items()) {
    auto it = idx.find(k);
    if (it == idx.end()) throw FormatError(path + ".neg: unknown symbol \"" + k + "\"");
    t.neg[it->second] = sym(v, path + ".neg." + k);
  }
  for (int i = 0; i < n; ++i)
    if (t.neg[i] < 0) throw FormatError(path + ".neg: missing entry for \"" + t.symbols[i] + "\"");
  auto pair_index = [&](const std::string& key, const std::string& p) {
    auto parts = detail::split_pair(key, p);
    auto a = idx.find(parts[0]), b = idx.find(parts[1]);
    if (a == idx.end() || b == idx.end()) throw FormatError(p + ": unknown symbol in \"" + key + "\"");
    return std::make_pair(a->second, b->second);
  };
  detail::require_object(j["mul"], path + ".mul");
  for (const auto& [k, v] : j["mul"].items()) {
    auto [a, b] = pair_index(k, path + ".mul");
    if (t.mul[a * n + b] >= 0) throw FormatError(path + ".mul: pair \"" + k + "\" given twice");
    int c = sym(v, path + ".mul." + k);
    t.mul[a * n + b] = t.mul[b * n + a] = c;
  }
  detail::require_object(j["add"], path + ".add");
  for (const auto& [k, v] : j["add"].items()) {
    auto [a, b] = pair_index(k, path + ".add");
    if (t.add[a * n + b] != 0) throw FormatError(path + ".add: pair \"" + k + "\" given twice");
    const auto& arr = detail::get_array(v, path + ".add." + k);
    if (arr.empty()) throw FormatError(path + ".add." + k + ": empty hypersum");
    std::uint64_t m = 0;
    for (const auto& s : arr) m |= std::uint64_t{1} << sym(s, path + ".add." + k);
    t.add[a * n + b] = t.add[b * n + a] = m;
  }
  for (int i = 0; i < n * n; ++i) {
    std::string pair = t.symbols[i / n] + "," + t.symbols[i % n];
    if (t.mul[i] < 0) throw FormatError(path + ".mul: missing pair \"" + pair + "\"");
    if (t.add[i] == 0) throw FormatError(path + ".add: missing pair \"" + pair + "\"");
  }
  return t;
}

inline json hyperfield_to_json(const Hyperfield& h) {
  if (h.kind() == Kind::table) return table_to_json(h.table());
  return h.name();
}

inline Hyperfield builtin(const std::string& name) {
  if (name == "krasner") return Hyperfield::krasner();
  if (name == "signs") return Hyperfield::signs();
  if (name == "tropical") return Hyperfield::tropical();
  if (name == "phase") return Hyperfield::phase();
  throw FormatError("unknown hyperfield \"" + name + "\"");
}

/// A built-in name or a table object; tables must pass the axiom check.
inline Hyperfield hyperfield_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return builtin(j.get<std::string>());
    } catch (const FormatError& e) {
      throw FormatError(path + ": " + e.what());
    }
  }
  Hyperfield h = [&] {
    try {
      return Hyperfield::from_table(table_from_json(j, path));
    } catch (const ShapeError& e) {
      throw FormatError(path + ": " + e.what());
    }
  }();
  Report rep = verify_hyperfield_axioms(h);
  if (!rep.pass())
    throw FormatError(path + ": table violates the hyperfield axioms (" + rep.violations.front().axiom + ")");
  return h;
}

/// hyperfield-table/1 document; built-ins appear as {"kind": name}.
inline std::string serialize_hyperfield(const Hyperfield& h) {
  json j = h.kind() == Kind::table ? table_to_json(h.table()) : json{{"kind", h.name()}};
  j["schema"] = kHyperfieldSchema;
  return dump(j);
}

/// Parses without checking the axioms, so that broken tables can be reported.
inline Hyperfield parse_hyperfield(const std::string& text) {
  json j = detail::parse_text(text);
  detail::require_schema(j, kHyperfieldSchema);
  if (!j.contains("kind")) throw FormatError("$: missing field \"kind\"");
  const auto& kind = detail::get_string(j["kind"], "$.kind");
  if (kind != "table") {
    detail::only_keys(j, "$", {"schema", "kind"});
    return builtin(kind);
  }
  try {
    return Hyperfield::from_table(table_from_json(j, "$"));
  } catch (const ShapeError& e) {
    throw FormatError(std::string("$: ") + e.what());
  }
}

// ---- matroids ------------------------------------------------------------------

struct MatroidDoc {
  Hyperfield hyperfield = Hyperfield::krasner();
  GroundSet ground;
  std::optional<int> rank;
  std::optional<GPFunction> gpf;
  std::optional<CircuitSet> circuits;
};

inline json matroid_to_json(const MatroidDoc& d) {
  const Hyperfield& h = d.hyperfield;
  json j;
  j["schema"] = kMatroidSchema;
  j["hyperfield"] = hyperfield_to_json(h);
  j["ground"] = d.ground.labels();
  if (d.rank) j["rank"] = *d.rank;
  if (d.gpf) {
    std::vector<Mask> subsets;
    for (const auto& [m, v] : d.gpf->values()) subsets.push_back(m);
    std::sort(subsets.begin(), subsets.end(), lex_less);
    json arr = json::array();
    for (Mask m : subsets)
      arr.push_back({{"subset", d.ground.labels_of(m)}, {"value", h.format(d.gpf->at(m))}});
    j["gpf"] = arr;
  }
  if (d.circuits) {
    json arr = json::array();
    for (const auto& x : d.circuits->circuits) {
      json coords = json::object();
      for (int i = 0; i < d.ground.size(); ++i)
        if (!h.is_zero(x[i])) coords[d.ground.label(i)] = h.format(x[i]);
      arr.push_back({{"coords", coords}});
    }
    j["circuits"] = arr;
  }
  return j;
}

inline MatroidDoc matroid_doc(const GPFunction& phi, std::optional<CircuitSet> circuits = std::nullopt) {
  return MatroidDoc{phi.hyperfield(), phi.ground(), phi.rank(), phi, std::move(circuits)};
}

inline MatroidDoc matroid_doc(const CircuitSet& cs, std::optional<int> rank = std::nullopt) {
  return MatroidDoc{cs.hyperfield, cs.ground, rank, std::nullopt, cs};
}

inline std::string serialize_matroid(const MatroidDoc& d) { return dump(matroid_to_json(d)); }
inline std::string serialize_matroid(const GPFunction& phi) { return serialize_matroid(matroid_doc(phi)); }
inline std::string serialize_matroid(const CircuitSet& cs) { return serialize_matroid(matroid_doc(cs)); }

inline MatroidDoc matroid_from_json(const json& j) {
  detail::require_schema(j, kMatroidSchema);
  detail::only_keys(j, "$", {"schema", "hyperfield", "ground"}, {"rank", "gpf", "circuits"});
  MatroidDoc d;
  d.hyperfield = hyperfield_from_json(j["hyperfield"], "$.hyperfield");
  const Hyperfield& h = d.hyperfield;
  std::vector<std::string> labels;
  const auto& g = detail::get_array(j["ground"], "$.ground");
  for (std::size_t i = 0; i < g.size(); ++i) labels.push_back(detail::get_string(g[i], "$.ground[" + std::to_string(i) + "]"));
  try {
    d.ground = GroundSet(labels);
  } catch (const Error& e) {
    throw FormatError(std::string("$.ground: ") + e.what());
  }
  if (!j.contains("gpf") && !j.contains("circuits")) throw FormatError("$: needs \"gpf\" or \"circuits\"");
  if (j.contains("rank")) {
    if (!j["rank"].is_number_integer()) throw FormatError("$.rank: expected an integer");
    int r = j["rank"].get<int>();
    if (r < 0 || r > d.ground.size())
      throw FormatError("$.rank: rank " + std::to_string(r) + " exceeds the ground set size " +
                        std::to_string(d.ground.size()));
    d.rank = r;
  } else if (j.contains("gpf")) {
    throw FormatError("$: missing field \"rank\"");
  }
  if (j.contains("gpf")) {
    std::map<Mask, Element> values;
    const auto& arr = detail::get_array(j["gpf"], "$.gpf");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string p = "$.gpf[" + std::to_string(i) + "]";
      detail::only_keys(arr[i], p, {"subset", "value"});
      const auto& sub = detail::get_array(arr[i]["subset"], p + ".subset");
      std::vector<int> idx;
      Mask m = 0;
      std::string shown = "[";
      for (std::size_t k = 0; k < sub.size(); ++k) {
        const auto& l = detail::get_string(sub[k], p + ".subset[" + std::to_string(k) + "]");
        auto at = d.ground.find(l);
        if (!at) throw FormatError(p + ".subset: unknown label \"" + l + "\"");
        if (has(m, *at)) throw FormatError(p + ".subset: repeated label \"" + l + "\"");
        m |= bit(*at);
        idx.push_back(*at);
        shown += (k ? "," : "") + l;
      }
      shown += "]";
      if (static_cast<int>(idx.size()) != *d.rank)
        throw FormatError(p + ".subset: " + shown + " does not have rank-many elements");
      if (values.count(m)) throw FormatError(p + ".subset: " + shown + " given twice");
      Element v;
      try {
        v = h.parse(detail::get_string(arr[i]["value"], p + ".value"));
      } catch (const CarrierError& e) {
        throw CarrierError(p + ".value (subset " + shown + "): " + e.what());
      }
      values.emplace(m, inversion_parity(idx) ? h.neg(v) : v);
    }
    try {
      d.gpf.emplace(h, d.ground, *d.rank, std::move(values));
    } catch (const ShapeError& e) {
      throw FormatError(std::string("$.gpf: ") + e.what());
    }
  }
  if (j.contains("circuits")) {
    std::vector<HVector> xs;
    const auto& arr = detail::get_array(j["circuits"], "$.circuits");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string p = "$.circuits[" + std::to_string(i) + "]";
      detail::only_keys(arr[i], p, {"coords"});
      detail::require_object(arr[i]["coords"], p + ".coords");
      HVector x(d.ground.size(), h.zero());
      for (const auto& [l, v] : arr[i]["coords"].items()) {
        auto at = d.ground.find(l);
        if (!at) throw FormatError(p + ".coords: unknown label \"" + l + "\"");
        x[*at] = detail::parse_element(h, v, p + ".coords." + l);
      }
      xs.push_back(std::move(x));
    }
    d.circuits = CircuitSet::make(h, d.ground, std::move(xs));
  }
  return d;
}

inline MatroidDoc parse_matroid(const std::string& text) { return matroid_from_json(detail::parse_text(text)); }

// ---- algebra elements --------------------------------------------------------------

inline std::string serialize_algebra(const Hyperfield& h, const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [m, c] : x) terms.push_back({{"monomial", m}, {"coeff", to_string(c)}});
  json j{{"schema", kAlgebraSchema}, {"kind", "element"}, {"hyperfield", hyperfield_to_json(h)}, {"terms", terms}};
  return dump(j);
}

inline std::string serialize_tensor(const Hyperfield& h, const TensorElement& x) {
  json terms = json::array();
  for (const auto& [lr, c] : x)
    terms.push_back({{"left", lr.first}, {"right", lr.second}, {"coeff", to_string(c)}});
  json j{{"schema", kAlgebraSchema}, {"kind", "tensor"}, {"hyperfield", hyperfield_to_json(h)}, {"terms", terms}};
  return dump(j);
}

struct AlgebraDoc {
  Hyperfield hyperfield = Hyperfield::krasner();
  bool tensor = false;
  AlgebraElement element;
  TensorElement tensor_element;
};

inline AlgebraDoc parse_algebra(const std::string& text) {
  json j = detail::parse_text(text);
  detail::require_schema(j, kAlgebraSchema);
  detail::only_keys(j, "$", {"schema", "kind", "hyperfield", "terms"});
  AlgebraDoc d;
  d.hyperfield = hyperfield_from_json(j["hyperfield"], "$.hyperfield");
  const auto& kind = detail::get_string(j["kind"], "$.kind");
  if (kind != "element" && kind != "tensor") throw FormatError("$.kind: expected \"element\" or \"tensor\"");
  d.tensor = kind == "tensor";
  auto monomial = [&](const json& v, const std::string& p) {
    Monomial m;
    const auto& arr = detail::get_array(v, p);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      m.push_back(detail::get_string(arr[i], p + "[" + std::to_string(i) + "]"));
      key_degree(m.back());
    }
    std::sort(m.begin(), m.end());
    return m;
  };
  const auto& terms = detail::get_array(j["terms"], "$.terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string p = "$.terms[" + std::to_string(i) + "]";
    Rational c;
    if (d.tensor) {
      detail::only_keys(terms[i], p, {"left", "right", "coeff"});
    } else {
      detail::only_keys(terms[i], p, {"monomial", "coeff"});
    }
    try {
      c = parse_rational(detail::get_string(terms[i]["coeff"], p + ".coeff"));
    } catch (const FormatError& e) {
      throw FormatError(p + ".coeff: " + e.what());
    }
    if (c == 0) throw FormatError(p + ".coeff: zero coefficients are not stored");
    if (d.tensor) {
      TensorKey k{monomial(terms[i]["left"], p + ".left"), monomial(terms[i]["right"], p + ".right")};
      if (d.tensor_element.coeff(k) != 0) throw FormatError(p + ": repeated term");
      d.tensor_element.add(k, c);
    } else {
      Monomial m = monomial(terms[i]["monomial"], p + ".monomial");
      if (d.element.coeff(m) != 0) throw FormatError(p + ": repeated term");
      d.element.add(m, c);
    }
  }
  return d;
}

// ---- reports ---------------------------------------------------------------------

inline json report_to_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}, {"detail", x.detail}});
  return json{{"schema", kReportSchema},
              {"check", r.check},
              {"result", r.pass() ? "pass" : "fail"},
              {"violation_count", r.violation_count},
              {"violations", v}};
}

/// `extra` fields (e.g. an isomorphism witness) are merged into the document.
inline std::string serialize_report(const Report& r, const json& extra = json::object()) {
  json j = report_to_json(r);
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return dump(j);
}

inline Report parse_report(const std::string& text) {
  json j = detail::parse_text(text);
  detail::require_schema(j, kReportSchema);
  detail::only_keys(j, "$", {"schema", "check", "result", "violation_count", "violations"}, {"witness"});
  Report r(detail::get_string(j["check"], "$.check"));
  if (!j["violation_count"].is_number_unsigned()) throw FormatError("$.violation_count: expected a count");
  const auto& arr = detail::get_array(j["violations"], "$.violations");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string p = "$.violations[" + std::to_string(i) + "]";
    detail::only_keys(arr[i], p, {"axiom", "witness", "detail"});
    Violation v{detail::get_string(arr[i]["axiom"], p + ".axiom"), {}, detail::get_string(arr[i]["detail"], p + ".detail")};
    for (const auto& w : detail::get_array(arr[i]["witness"], p + ".witness")) v.witness.push_back(detail::get_string(w, p + ".witness"));
    r.add(std::move(v));
  }
  r.violation_count = j["violation_count"].get<std::size_t>();
  const auto& res = detail::get_string(j["result"], "$.result");
  if (res != (r.pass() ? "pass" : "fail")) throw FormatError("$.result: inconsistent with violation_count");
  return r;
}

// ---- text rendering ----------------------------------------------------------------

inline std::string matroid_text(const MatroidDoc& d) {
  const Hyperfield& h = d.hyperfield;
  std::ostringstream out;
  out << "hyperfield " << h.name() << "\n";
  out << "ground";
  for (const auto& l : d.ground.labels()) out << " " << l;
  out << "\n";
  if (d.rank) out << "rank " << *d.rank << "\n";
  if (d.gpf) {
    std::vector<Mask> subsets;
    for (const auto& [m, v] : d.gpf->values()) subsets.push_back(m);
    std::sort(subsets.begin(), subsets.end(), lex_less);
    for (Mask m : subsets) out << "gpf " << d.ground.show(m) << " = " << h.format(d.gpf->at(m)) << "\n";
  }
  if (d.circuits)
    for (const auto& x : d.circuits->circuits) {
      out << "circuit";
      for (int i = 0; i < d.ground.size(); ++i)
        if (!h.is_zero(x[i])) out << " " << d.ground.label(i) << ":" << h.format(x[i]);
      out << "\n";
    }
  return out.str();
}

inline std::string report_text(const Report& r) {
  std::ostringstream out;
  out << r.check << ": " << (r.pass() ? "pass" : "fail") << " (" << r.violation_count << " violations)\n";
  for (const auto& v : r.violations) {
    out << "  " << v.axiom << " at";
    for (const auto& w : v.witness) out << " " << w;
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  return out.str();
}

inline std::string monomial_text(const Monomial& m) {
  if (m.empty()) return "[]";
  std::string out;
  for (const auto& k : m) out += "[" + k + "]";
  return out;
}

inline std::string algebra_text(const AlgebraElement& x) {
  if (x.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [m, c] : x) out << (c > 0 ? "+" : "") << to_string(c) << " " << monomial_text(m) << "\n";
  return out.str();
}

inline std::string tensor_text(const TensorElement& x) {
  if (x.empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [lr, c] : x)
    out << (c > 0 ? "+" : "") << to_string(c) << " " << monomial_text(lr.first) << " (x) " << monomial_text(lr.second)
        << "\n";
  return out.str();
}

}  // namespace hypermatroid::io
