#pragma once

#include <string>
#include <vector>

#include "vvmf/rep.hpp"
#include "vvmf/spectrum.hpp"

namespace vvmf {

enum class IntervalKind { ClosedOpen, OpenClosed };

// [lower, lower+1) or (lower, lower+1].
struct Interval {
  Rational lower;
  IntervalKind kind = IntervalKind::ClosedOpen;

  bool contains(const Rational& r) const;
  std::string to_string() const;

  static Interval standard() { return {Rational(0), IntervalKind::ClosedOpen}; }
  static Interval cusp() { return {Rational(0), IntervalKind::OpenClosed}; }
  static Interval eta_shifted(long a) { return {ratio(a, 12), IntervalKind::ClosedOpen}; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ExponentEntry {
  Rational exponent;
  Rational rotation;
  int block = 1;
  Parity parity = Parity::Even;
  int mult = 1;
};

// Exponent matrix L recorded through its eigenvalues only.
struct ExponentChoice {
  Interval interval;
  std::vector<ExponentEntry> entries;
  Rational trace;
  Rational trace_plus;
  Rational trace_minus;

  const Rational& trace_of(Parity p) const { return p == Parity::Even ? trace_plus : trace_minus; }
  // Exponents with multiplicity (each Jordan block contributes block copies), sorted.
  std::vector<Rational> multiset() const;
};

ExponentChoice choose_exponents(const TSpectrum& spec, const Interval& interval);

ExponentChoice standard_exponents(const Repn& r, long cap = kDefaultOrderCap);
ExponentChoice cusp_exponents(const Repn& r, long cap = kDefaultOrderCap);
ExponentChoice eta_shifted_exponents(const Repn& r, long a, long cap = kDefaultOrderCap);

}  // namespace vvmf
