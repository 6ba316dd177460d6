#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "vvmf/bundle.hpp"
#include "vvmf/rep.hpp"

namespace vvmf::cli {

// Malformed descriptor; `pointer` is a JSON pointer into the document.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::invalid_argument(pointer + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

struct Descriptor {
  Repn rep;
  Assertions assertions;
  std::string hash;
};

// Builds the representation described by `doc`. Structural problems raise
// SchemaError; matrices that break a defining relation raise
// RelationViolation.
Descriptor parse_descriptor(const nlohmann::json& doc, long cap = kDefaultOrderCap);

// 64-bit FNV-1a of the canonical (sorted-key, compact) serialization, as hex.
std::string descriptor_hash(const nlohmann::json& doc);

// Canonical "matrices" descriptor for a representation with no virtual
// subtraction. Entries are written in the power basis of the common order.
nlohmann::json matrices_descriptor(const Repn& r);

nlohmann::json rational_json(const Rational& r);
nlohmann::json cyclotomic_json(const Cyclotomic& c);

}  // namespace vvmf::cli
