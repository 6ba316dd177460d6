#include "vvmf_cli/descriptor.hpp"

#include <cstdint>
#include <cstdio>
#include <set>

#include "vvmf/errors.hpp"

namespace vvmf::cli {

using nlohmann::json;

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void allow_keys(const json& node, const std::string& ptr, std::initializer_list<const char*> keys) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : node.items()) {
    if (!allowed.count(k)) throw SchemaError(child(ptr, k), "unknown field");
  }
}

const json& require(const json& node, const std::string& ptr, const char* key) {
  if (!node.contains(key)) throw SchemaError(child(ptr, key), "missing required field");
  return node.at(key);
}

long integer_field(const json& v, const std::string& ptr) {
  if (!v.is_number_integer()) throw SchemaError(ptr, "expected an integer");
  return v.get<long>();
}

bool bool_field(const json& v, const std::string& ptr) {
  if (!v.is_boolean()) throw SchemaError(ptr, "expected a boolean");
  return v.get<bool>();
}

Rational rational_field(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) throw SchemaError(ptr, "floating point numbers are not accepted; use \"p/q\"");
  if (!v.is_string()) throw SchemaError(ptr, "expected a rational \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(ptr, e.what());
  }
}

Cyclotomic entry_field(const json& v, const std::string& ptr, long order) {
  if (v.is_object()) {
    allow_keys(v, ptr, {"coeffs"});
    const json& c = require(v, ptr, "coeffs");
    const std::string cptr = child(ptr, "coeffs");
    if (!c.is_array() || c.empty()) throw SchemaError(cptr, "expected a nonempty array of rationals");
    if (static_cast<long>(c.size()) > order) {
      throw SchemaError(cptr, "more coefficients than the cyclotomic order " + std::to_string(order));
    }
    std::vector<Rational> powers;
    for (std::size_t i = 0; i < c.size(); ++i) powers.push_back(rational_field(c[i], child(cptr, i)));
    return Cyclotomic::from_powers(order, powers);
  }
  return Cyclotomic(rational_field(v, ptr)).embed(order);
}

CycMatrix matrix_field(const json& v, const std::string& ptr, long order) {
  if (!v.is_array() || v.empty()) throw SchemaError(ptr, "expected a nonempty array of rows");
  std::vector<std::vector<Cyclotomic>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string rptr = child(ptr, i);
    if (!v[i].is_array() || v[i].size() != v.size()) throw SchemaError(rptr, "expected a square matrix");
    std::vector<Cyclotomic> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) row.push_back(entry_field(v[i][j], child(rptr, j), order));
    rows.push_back(std::move(row));
  }
  return CycMatrix(rows);
}

std::vector<Cycle> cycles_field(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw SchemaError(ptr, "expected an array of cycles");
  std::vector<Cycle> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string cptr = child(ptr, i);
    if (!v[i].is_array() || v[i].empty()) throw SchemaError(cptr, "expected a nonempty cycle");
    Cycle c;
    for (std::size_t j = 0; j < v[i].size(); ++j) c.push_back(integer_field(v[i][j], child(cptr, j)));
    out.push_back(std::move(c));
  }
  return out;
}

TSpectrum spectrum_field(const json& v, const std::string& ptr) {
  if (!v.is_array() || v.empty()) throw SchemaError(ptr, "expected a nonempty array of spectrum entries");
  std::vector<SpectrumEntry> entries;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string eptr = child(ptr, i);
    const json& e = v[i];
    if (!e.is_object()) throw SchemaError(eptr, "expected an object");
    allow_keys(e, eptr, {"rotation", "block", "parity", "mult"});
    SpectrumEntry s;
    s.rotation = rational_field(require(e, eptr, "rotation"), child(eptr, "rotation"));
    if (sgn(s.rotation) < 0 || s.rotation >= 1) throw SchemaError(child(eptr, "rotation"), "must lie in [0,1)");
    s.block = e.contains("block") ? static_cast<int>(integer_field(e["block"], child(eptr, "block"))) : 1;
    s.mult = e.contains("mult") ? static_cast<int>(integer_field(e["mult"], child(eptr, "mult"))) : 1;
    if (s.block < 1) throw SchemaError(child(eptr, "block"), "must be positive");
    if (s.mult < 1) throw SchemaError(child(eptr, "mult"), "must be positive");
    const json& p = require(e, eptr, "parity");
    const std::string pp = p.is_string() ? p.get<std::string>() : "";
    if (pp == "+") {
      s.parity = Parity::Even;
    } else if (pp == "-" || pp == "−") {
      s.parity = Parity::Odd;
    } else {
      throw SchemaError(child(eptr, "parity"), "expected \"+\" or \"-\"");
    }
    entries.push_back(std::move(s));
  }
  return TSpectrum(std::move(entries));
}

Repn build(const json& node, const std::string& ptr, long cap, bool root) {
  if (!node.is_object()) throw SchemaError(ptr.empty() ? "/" : ptr, "expected an object");
  const json& type = require(node, ptr, "type");
  if (!type.is_string()) throw SchemaError(child(ptr, "type"), "expected a string");
  const std::string t = type.get<std::string>();
  if (!root && node.contains("assert")) throw SchemaError(child(ptr, "assert"), "only allowed at the top level");

  std::optional<TSpectrum> spectrum;
  if (node.contains("T_spectrum")) spectrum = spectrum_field(node["T_spectrum"], child(ptr, "T_spectrum"));

  auto apply_override = [&](Repn r) {
    if (!spectrum) return r;
    try {
      return r.with_spectrum(*spectrum);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(child(ptr, "T_spectrum"), e.what());
    }
  };

  if (t == "matrices") {
    allow_keys(node, ptr, {"type", "cyclotomic_order", "S", "T", "T_spectrum", "assert"});
    const long order = integer_field(require(node, ptr, "cyclotomic_order"), child(ptr, "cyclotomic_order"));
    if (order < 1) throw SchemaError(child(ptr, "cyclotomic_order"), "must be positive");
    const CycMatrix S = matrix_field(require(node, ptr, "S"), child(ptr, "S"), order);
    const CycMatrix T = matrix_field(require(node, ptr, "T"), child(ptr, "T"), order);
    if (S.rows() != T.rows()) throw SchemaError(child(ptr, "T"), "S and T have different sizes");
    if (spectrum) {
      try {
        return Repn::from_matrices(S, T, spectrum, cap);
      } catch (const RelationViolation&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw SchemaError(child(ptr, "T_spectrum"), e.what());
      }
    }
    return Repn::from_matrices(S, T, std::nullopt, cap);
  }
  if (t == "character") {
    allow_keys(node, ptr, {"type", "a", "T_spectrum", "assert"});
    const long a = integer_field(require(node, ptr, "a"), child(ptr, "a"));
    if (a < 0 || a > 11) throw SchemaError(child(ptr, "a"), "must lie in 0..11");
    return apply_override(Repn::character(a));
  }
  if (t == "permutation") {
    allow_keys(node, ptr, {"type", "degree", "S", "T", "subtract_trivial", "T_spectrum", "assert"});
    const long degree = integer_field(require(node, ptr, "degree"), child(ptr, "degree"));
    if (degree < 1) throw SchemaError(child(ptr, "degree"), "must be positive");
    const auto sc = cycles_field(require(node, ptr, "S"), child(ptr, "S"));
    const auto tc = cycles_field(require(node, ptr, "T"), child(ptr, "T"));
    const bool sub =
        node.contains("subtract_trivial") && bool_field(node["subtract_trivial"], child(ptr, "subtract_trivial"));
    auto check_entries = [&](const std::vector<Cycle>& cs, const std::string& p) {
      std::set<long> seen;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs[i].size(); ++j) {
          const long x = cs[i][j];
          const std::string ep = child(child(p, i), j);
          if (x < 1 || x > degree) throw SchemaError(ep, "entry outside 1.." + std::to_string(degree));
          if (!seen.insert(x).second) throw SchemaError(ep, "cycles are not disjoint");
        }
      }
    };
    check_entries(sc, child(ptr, "S"));
    check_entries(tc, child(ptr, "T"));
    if (sub && degree == 1) throw SchemaError(child(ptr, "subtract_trivial"), "nothing left after removal");
    return apply_override(Repn::from_permutations(degree, sc, tc, sub, cap));
  }
  if (t == "direct_sum") {
    allow_keys(node, ptr, {"type", "parts", "T_spectrum", "assert"});
    const json& parts = require(node, ptr, "parts");
    const std::string pp = child(ptr, "parts");
    if (!parts.is_array() || parts.empty()) throw SchemaError(pp, "expected a nonempty array");
    std::optional<Repn> acc;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      Repn part = build(parts[i], child(pp, i), cap, false);
      acc = acc ? direct_sum(*acc, part) : part;
    }
    return apply_override(*acc);
  }
  if (t == "tensor_character") {
    allow_keys(node, ptr, {"type", "a", "of", "T_spectrum", "assert"});
    const long a = integer_field(require(node, ptr, "a"), child(ptr, "a"));
    return apply_override(tensor_char(build(require(node, ptr, "of"), child(ptr, "of"), cap, false), a));
  }
  if (t == "dual") {
    allow_keys(node, ptr, {"type", "of", "T_spectrum", "assert"});
    return apply_override(dual(build(require(node, ptr, "of"), child(ptr, "of"), cap, false)));
  }
  throw SchemaError(child(ptr, "type"), "unknown descriptor type \"" + t + "\"");
}

Assertions assertions_field(const json& node) {
  Assertions a;
  if (!node.contains("assert")) return a;
  const json& v = node["assert"];
  const std::string ptr = "/assert";
  if (!v.is_object()) throw SchemaError(ptr, "expected an object");
  allow_keys(v, ptr, {"positive", "good", "unitarizable"});
  if (v.contains("positive")) a.positive = bool_field(v["positive"], child(ptr, "positive"));
  if (v.contains("good")) a.good = bool_field(v["good"], child(ptr, "good"));
  if (v.contains("unitarizable")) a.unitarizable = bool_field(v["unitarizable"], child(ptr, "unitarizable"));
  return a;
}

}  // namespace

std::string descriptor_hash(const json& doc) {
  const std::string text = doc.dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Descriptor parse_descriptor(const json& doc, long cap) {
  Assertions a = assertions_field(doc);
  Repn r = build(doc, "", cap, true);
  return {std::move(r), a, descriptor_hash(doc)};
}

json rational_json(const Rational& r) { return to_string(r); }

json cyclotomic_json(const Cyclotomic& c) {
  if (c.is_rational()) return rational_json(c.coeffs()[0]);
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(to_string(x));
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

json matrices_descriptor(const Repn& r) {
  if (!r.removed().empty()) throw std::invalid_argument("virtual representations have no matrix descriptor");
  const long order = lcm_order(r.S().order(), r.T().order());
  auto mat = [&](const CycMatrix& m) {
    json rows = json::array();
    const CycMatrix e = m.embed(order);
    for (std::size_t i = 0; i < e.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < e.cols(); ++j) {
        const Cyclotomic& x = e(i, j);
        if (x.is_rational()) {
          row.push_back(to_string(x.coeffs()[0]));
        } else {
          json coeffs = json::array();
          for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
          row.push_back(json{{"coeffs", coeffs}});
        }
      }
      rows.push_back(row);
    }
    return rows;
  };
  return json{{"type", "matrices"}, {"cyclotomic_order", order}, {"S", mat(r.S())}, {"T", mat(r.T())}};
}

}  // namespace vvmf::cli
