#pragma once

#include <string>
#include <vector>

#include "vvmf/matrix.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

enum class Parity { Even, Odd };

inline const char* parity_sign(Parity p) { return p == Parity::Even ? "+" : "-"; }

// Eigenvalue exp(2 pi i rotation) of rho(T), rotation in [0,1), occurring in
// `mult` Jordan blocks of size `block` inside the rho(-I) = +1 or -1 part.
struct SpectrumEntry {
  Rational rotation;
  int block = 1;
  Parity parity = Parity::Even;
  int mult = 1;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

class TSpectrum {
 public:
  TSpectrum() = default;
  explicit TSpectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  int dim() const;
  int dim(Parity p) const;
  bool has_rotation(const Rational& r) const;

  // Removes one block of size 1 at `rotation` with parity p; throws
  // InconsistentData when no such block exists.
  TSpectrum without(const Rational& rotation, Parity p) const;

  friend bool operator==(const TSpectrum&, const TSpectrum&) = default;

 private:
  // Sorted by (rotation, parity, block) with equal keys merged.
  std::vector<SpectrumEntry> entries_;
};

TSpectrum spectrum_union(const TSpectrum& a, const TSpectrum& b);
// Spectrum of the contragredient: rotations negated mod 1.
TSpectrum spectrum_dual(const TSpectrum& s);
// Spectrum after tensoring with chi^a.
TSpectrum spectrum_twist(const TSpectrum& s, long a);

inline constexpr long kDefaultOrderCap = 1000;

// Finds the least n <= cap with T^n unipotent and reads off eigenvalues,
// Jordan structure and parity from exact traces and ranks. Throws
// NotQuasiUnipotent when no such n exists.
TSpectrum compute_t_spectrum(const CycMatrix& S, const CycMatrix& T, long cap = kDefaultOrderCap);

}  // namespace vvmf
