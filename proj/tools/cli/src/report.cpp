#include "vvmf_cli/report.hpp"

#include "vvmf/errors.hpp"

namespace vvmf::cli {

using nlohmann::json;

json spectrum_json(const TSpectrum& s) {
  json out = json::array();
  for (const auto& e : s.entries()) {
    out.push_back({{"rotation", rational_json(e.rotation)},
                   {"block", e.block},
                   {"parity", parity_sign(e.parity)},
                   {"mult", e.mult}});
  }
  return out;
}

json exponents_json(const ExponentChoice& L) {
  json entries = json::array();
  for (const auto& e : L.entries) {
    entries.push_back({{"exponent", rational_json(e.exponent)},
                       {"rotation", rational_json(e.rotation)},
                       {"block", e.block},
                       {"parity", parity_sign(e.parity)},
                       {"mult", e.mult}});
  }
  return {{"interval", L.interval.to_string()},
          {"entries", entries},
          {"TrL", rational_json(L.trace)},
          {"TrL_plus", rational_json(L.trace_plus)},
          {"TrL_minus", rational_json(L.trace_minus)}};
}

json parity_json(const ParityData& p) {
  return {{"d_plus", p.d_plus},
          {"d_minus", p.d_minus},
          {"s_plus", cyclotomic_json(p.s_plus)},
          {"s_minus", cyclotomic_json(p.s_minus)},
          {"r1_plus", cyclotomic_json(p.r1_plus)},
          {"r1_minus", cyclotomic_json(p.r1_minus)},
          {"r2_plus", cyclotomic_json(p.r2_plus)},
          {"r2_minus", cyclotomic_json(p.r2_minus)}};
}

json flags_json(const ClassFlags& f) {
  json finite = f.finite_order ? json{{"status", "certified"}, {"order", *f.finite_order}}
                               : json{{"status", "unknown"}};
  return {{"finite_image", finite},
          {"good", to_string(f.good)},
          {"positive", to_string(f.positive)},
          {"unitarizable", to_string(f.unitarizable)}};
}

json y_json(const YValue& y) {
  json out{{"source", to_string(y.source)}};
  if (y.exact()) {
    out["exact"] = y.lo;
  } else {
    out["range"] = {{"lo", y.lo}, {"hi", y.hi ? json(*y.hi) : json(nullptr)}};
  }
  return out;
}

json weights_json(const GeneratorWeights& g) {
  json rows = json::array();
  for (const auto& r : g.rows) {
    rows.push_back({{"weight", r.weight}, {"constant", r.constant}, {"y_coeff", r.y_coeff}});
  }
  json out{{"x", g.x}, {"y", y_json(g.y)}, {"rows", rows}, {"determined", g.determined()},
           {"conditional_on_positivity", g.conditional}};
  if (g.determined()) {
    out["weights"] = g.weights;
    out["roots"] = g.roots();
  }
  return out;
}

namespace {

json dim_value_json(const DimValue& v) {
  return {{"dim", v.value ? json(*v.value) : json(nullptr)}, {"status", to_string(v.status)}};
}

}  // namespace

json dims_json(const DimReport& d) {
  json entries = json::array();
  for (const auto& e : d.entries) {
    entries.push_back({{"k", e.k}, {"modular", dim_value_json(e.modular)}, {"cusp", dim_value_json(e.cusp)}});
  }
  return entries;
}

AnalyzeResult analyze(const Descriptor& d, const ClassFlags& flags, const Caps& caps, std::optional<long> user_y) {
  const Repn& r = d.rep;
  AnalyzeResult res;
  json& out = res.report;
  out["descriptor_hash"] = d.hash;
  out["dim"] = r.dim();
  json tr_s = json::array();
  json tr_r = json::array();
  for (long j = 0; j < 4; ++j) tr_s.push_back(cyclotomic_json(r.trace_S(j)));
  for (long j = 0; j < 6; ++j) tr_r.push_back(cyclotomic_json(r.trace_R(j)));
  out["traces"] = {{"S", tr_s}, {"R", tr_r}};
  out["parity"] = parity_json(parity_split(r));
  out["multiplicities"] = {{"S", eig_mults(r, EigGenerator::S)}, {"R", eig_mults(r, EigGenerator::R)}};
  out["fixed_space_dim"] = fixed_space_dim(r);
  out["flags"] = flags_json(flags);

  const TSpectrum spec = r.t_spectrum(caps.order);
  out["t_spectrum"] = spectrum_json(spec);
  const ExponentChoice std_L = choose_exponents(spec, Interval::standard());
  out["exponents"] = {{"standard", exponents_json(std_L)},
                      {"cusp", exponents_json(choose_exponents(spec, Interval::cusp()))}};
  out["min_weight_bound"] = rational_json(min_weight_bound(r, std_L));

  const GeneratorWeights g = generator_weights(r, flags, user_y, caps.order);
  out["generator_weights"] = weights_json(g);
  res.undetermined = !g.determined();
  return res;
}

}  // namespace vvmf::cli
