#pragma once

#include <json.hpp>

#include "vvmf/bundle.hpp"
#include "vvmf/exponents.hpp"
#include "vvmf/rep.hpp"
#include "vvmf_cli/descriptor.hpp"

namespace vvmf::cli {

nlohmann::json spectrum_json(const TSpectrum& s);
nlohmann::json exponents_json(const ExponentChoice& L);
nlohmann::json parity_json(const ParityData& p);
nlohmann::json flags_json(const ClassFlags& f);
nlohmann::json y_json(const YValue& y);
nlohmann::json weights_json(const GeneratorWeights& g);
nlohmann::json dims_json(const DimReport& d);

struct Caps {
  long order = kDefaultOrderCap;
  long closure = kDefaultClosureCap;
};

struct AnalyzeResult {
  nlohmann::json report;
  bool undetermined = false;
};

AnalyzeResult analyze(const Descriptor& d, const ClassFlags& flags, const Caps& caps, std::optional<long> user_y);

}  // namespace vvmf::cli
