#include "vvmf/exponents.hpp"

#include <algorithm>

namespace vvmf {

bool Interval::contains(const Rational& r) const {
  const Rational upper = lower + 1;
  if (kind == IntervalKind::ClosedOpen) return lower <= r && r < upper;
  return lower < r && r <= upper;
}

std::string Interval::to_string() const {
  const std::string lo = vvmf::to_string(lower);
  const std::string hi = vvmf::to_string(lower + 1);
  return kind == IntervalKind::ClosedOpen ? "[" + lo + "," + hi + ")" : "(" + lo + "," + hi + "]";
}

std::vector<Rational> ExponentChoice::multiset() const {
  std::vector<Rational> out;
  for (const auto& e : entries) {
    for (int k = 0; k < e.block * e.mult; ++k) out.push_back(e.exponent);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExponentChoice choose_exponents(const TSpectrum& spec, const Interval& interval) {
  ExponentChoice out{interval, {}, Rational(0), Rational(0), Rational(0)};
  for (const auto& e : spec.entries()) {
    // The unique r = rotation + t inside the interval.
    Rational r;
    if (interval.kind == IntervalKind::ClosedOpen) {
      r = e.rotation + Rational(ceil(interval.lower - e.rotation));
    } else {
      r = e.rotation + Rational(floor(interval.lower + 1 - e.rotation));
    }
    const Rational weight = r * (e.block * e.mult);
    out.trace += weight;
    (e.parity == Parity::Even ? out.trace_plus : out.trace_minus) += weight;
    out.entries.push_back({r, e.rotation, e.block, e.parity, e.mult});
  }
  return out;
}

ExponentChoice standard_exponents(const Repn& r, long cap) {
  return choose_exponents(r.t_spectrum(cap), Interval::standard());
}

ExponentChoice cusp_exponents(const Repn& r, long cap) { return choose_exponents(r.t_spectrum(cap), Interval::cusp()); }

ExponentChoice eta_shifted_exponents(const Repn& r, long a, long cap) {
  return choose_exponents(r.t_spectrum(cap), Interval::eta_shifted(a));
}

}  // namespace vvmf
