#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vvmf/exponents.hpp"
#include "vvmf/rep.hpp"
#include "vvmf/wpline.hpp"

namespace vvmf {

// The bundle of weight-k forms for rep with exponents L. By the splitting
// theorem this is the full isomorphism datum; nothing geometric is built.
struct BundleSpec {
  Repn rep;
  long weight = 0;
  ExponentChoice exponents;
};

BundleSpec modular_bundle(const Repn& r, long k, long cap = kDefaultOrderCap);
BundleSpec cusp_bundle(const Repn& r, long k, long cap = kDefaultOrderCap);

// Fixed-point data of the bundle for the Riemann-Roch formula.
FixedPointData fixed_point_data(const BundleSpec& b);
// Euler characteristic from the parity-selected closed formula, checked
// against the general Riemann-Roch evaluation. Throws IntegralityFailure.
long euler_char(const BundleSpec& b);
// Degree of the determinant: d k - 12 Tr L.
long det_twist(const BundleSpec& b);
// Dual bundle expressed through rho^dual (x) chi^a in weight a + 12 - k. The
// exponents must be relative to an interval with lower end a/12.
BundleSpec dual_spec(const BundleSpec& b, long a, long cap = kDefaultOrderCap);
Rational min_weight_bound(const Repn& r, const ExponentChoice& L);

enum class Certainty { Certified, Asserted, Unknown };
const char* to_string(Certainty c);

struct Assertions {
  bool good = false;
  bool positive = false;
  bool unitarizable = false;
};

struct ClassFlags {
  std::optional<long> finite_order;
  Certainty good = Certainty::Unknown;
  Certainty positive = Certainty::Unknown;
  Certainty unitarizable = Certainty::Unknown;

  bool positive_known() const { return positive != Certainty::Unknown; }
  bool good_known() const { return good != Certainty::Unknown; }
};

inline constexpr long kDefaultClosureCap = 20000;

ClassFlags classify(const Repn& r, long cap = kDefaultClosureCap, const Assertions& a = {});
// Flags from assertions alone, skipping the closure search.
ClassFlags asserted_flags(const Assertions& a);

enum class YSource { EvenDual, Characters, DirectSum, CuspIsomorphism, Pinning, UserOverride, None };
const char* to_string(YSource s);

// dim S_1(rho^dual): exact, or a range [lo, hi] with hi absent if unbounded.
struct YValue {
  long lo = 0;
  std::optional<long> hi;
  YSource source = YSource::None;

  bool exact() const { return hi && *hi == lo; }
};

YValue resolve_y(const Repn& r, const ClassFlags& flags, std::optional<long> user_y = std::nullopt,
                 long cap = kDefaultOrderCap);

// Multiplicity of weight k among the free generators: constant + y_coeff * y.
struct TableRow {
  long weight = 0;
  long constant = 0;
  long y_coeff = 0;
};

struct GeneratorWeights {
  std::vector<TableRow> rows;  // weights 0..11
  long x = 0;
  YValue y;
  // Sorted weights; empty unless y is exact.
  std::vector<long> weights;
  // Formulas are only proved for positive representations.
  bool conditional = false;

  bool determined() const { return y.exact(); }
  std::vector<long> roots() const;
  std::vector<Parity> parities() const;
};

GeneratorWeights generator_weights(const Repn& r, const ClassFlags& flags, std::optional<long> user_y = std::nullopt,
                                   long cap = kDefaultOrderCap);

enum class DimStatus { Exact, ConditionalOnPositivity, Undetermined };
const char* to_string(DimStatus s);

struct DimValue {
  std::optional<long> value;
  DimStatus status = DimStatus::Undetermined;
};

struct DimEntry {
  long k = 0;
  DimValue modular;
  DimValue cusp;
};

struct DimReport {
  std::vector<DimEntry> entries;

  bool any_undetermined() const;
};

DimReport dims(const Repn& r, const ClassFlags& flags, long k_lo, long k_hi, std::optional<long> user_y = std::nullopt,
               long cap = kDefaultOrderCap);

struct HilbertSeries {
  std::vector<long> numerator;  // coefficient of X^k
  std::vector<long> series;     // dim M_k for k = 0..K
};

// Requires determined weights. Cross-checked against dims on 0..K.
HilbertSeries hilbert(const Repn& r, const ClassFlags& flags, long K, std::optional<long> user_y = std::nullopt,
                      long cap = kDefaultOrderCap);

// {k - k_j}, descending.
SplittingType splitting(const GeneratorWeights& g, long k);

// Generator weights of M(Gamma) for the permutation action on cosets of
// Gamma; the first weight is 0 for the trivial coset.
GeneratorWeights subgroup_generators(const Repn& coset_action, const ClassFlags& flags,
                                     long cap = kDefaultOrderCap);

}  // namespace vvmf
