#pragma once

#include <stdexcept>
#include <string>

namespace vvmf {

// Raised when derived data that must be integral, rational or nonnegative by
// construction is not. Always indicates corrupted input or an internal bug.
class InconsistentData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

class RelationViolation : public std::invalid_argument {
 public:
  explicit RelationViolation(std::string relation)
      : std::invalid_argument("relation violated: " + relation),
        relation_(std::move(relation)) {}

  const std::string& relation() const noexcept { return relation_; }

 private:
  std::string relation_;
};

class NotQuasiUnipotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vvmf

namespace vvmf {

class NegativeNumeratorCoefficient : public InconsistentData {
 public:
  using InconsistentData::InconsistentData;
};

class RankMismatch : public InconsistentData {
 public:
  using InconsistentData::InconsistentData;
};

}  // namespace vvmf

namespace vvmf {

class IntegralityFailure : public InconsistentData {
 public:
  using InconsistentData::InconsistentData;
};

class NonIntegralMultiplicity : public InconsistentData {
 public:
  using InconsistentData::InconsistentData;
};

class NegativeMultiplicity : public InconsistentData {
 public:
  using InconsistentData::InconsistentData;
};

}  // namespace vvmf

namespace vvmf {

// A quantity the theory leaves open (typically weight one) was required.
class Undetermined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vvmf
