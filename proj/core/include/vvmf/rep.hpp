#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/matrix.hpp"
#include "vvmf/spectrum.hpp"

namespace vvmf {

using Cycle = std::vector<long>;

struct ParityData {
  long d_plus = 0;
  long d_minus = 0;
  Cyclotomic s_plus, s_minus;    // Tr rho^{+-}(S)
  Cyclotomic r1_plus, r1_minus;  // Tr rho^{+-}(R)
  Cyclotomic r2_plus, r2_minus;  // Tr rho^{+-}(R^2)

  long dim(Parity p) const { return p == Parity::Even ? d_plus : d_minus; }
  const Cyclotomic& s(Parity p) const { return p == Parity::Even ? s_plus : s_minus; }
  const Cyclotomic& r1(Parity p) const { return p == Parity::Even ? r1_plus : r1_minus; }
  const Cyclotomic& r2(Parity p) const { return p == Parity::Even ? r2_plus : r2_minus; }
};

// A representation of SL_2(Z) given by rho(S) and rho(T), with R = ST.
//
// A Repn may carry a list of one-dimensional characters chi^a that are
// removed virtually: matrices keep the full space, while every derived scalar
// (traces, dimension, spectrum, invariants) has those summands subtracted.
// This is how trace-zero parts of permutation representations are handled.
class Repn {
 public:
  // Validates the defining relations and throws RelationViolation naming the
  // first one that fails. If `spectrum` is given it replaces the computed
  // T-spectrum; otherwise one is computed with the given cap, and left unknown
  // if rho(T) is not quasi-unipotent within it.
  static Repn from_matrices(const CycMatrix& S, const CycMatrix& T,
                            std::optional<TSpectrum> spectrum = std::nullopt,
                            long cap = kDefaultOrderCap);
  static Repn trivial();
  // chi^a: T -> zeta_12^a, S -> (-i)^a.
  static Repn character(long a);
  // Cycles are 1-based. The matrix of a permutation p sends e_i to e_{p(i)}.
  static Repn from_permutations(long degree, const std::vector<Cycle>& S_cycles,
                                const std::vector<Cycle>& T_cycles, bool subtract_trivial,
                                long cap = kDefaultOrderCap);

  friend Repn direct_sum(const Repn& a, const Repn& b);
  friend Repn tensor_char(const Repn& r, long a);
  friend Repn dual(const Repn& r);

  Repn with_spectrum(TSpectrum spectrum) const;

  long dim() const { return static_cast<long>(S_.rows()) - static_cast<long>(removed_.size()); }
  long matrix_dim() const { return static_cast<long>(S_.rows()); }
  const CycMatrix& S() const { return S_; }
  const CycMatrix& T() const { return T_; }
  const CycMatrix& R() const { return R_; }
  // Exponents a (mod 12) of the virtually removed characters, sorted.
  const std::vector<long>& removed() const { return removed_; }

  // Virtual traces of S^j and R^j, any integer j.
  const Cyclotomic& trace_S(long j) const;
  const Cyclotomic& trace_R(long j) const;
  // Tr(S^2 g) for g = S^j, R^j.
  const Cyclotomic& trace_S2S(long j) const { return trace_S(j + 2); }
  const Cyclotomic& trace_R3R(long j) const { return trace_R(j + 3); }

  bool spectrum_known() const { return spectrum_.has_value(); }
  // The stored spectrum, or a fresh computation with `cap` (may throw
  // NotQuasiUnipotent).
  TSpectrum t_spectrum(long cap = kDefaultOrderCap) const;

 private:
  Repn(CycMatrix S, CycMatrix T, std::vector<long> removed, std::optional<TSpectrum> spectrum);
  // Derived from a valid representation: relations hold and traces are known.
  Repn(CycMatrix S, CycMatrix T, CycMatrix R, std::vector<long> removed, std::optional<TSpectrum> spectrum,
       std::array<Cyclotomic, 4> tr_s, std::array<Cyclotomic, 6> tr_r);

  static void validate(const CycMatrix& S, const CycMatrix& T, const CycMatrix& R);
  TSpectrum strip_removed(TSpectrum full) const;
  void check_spectrum() const;

  CycMatrix S_, T_, R_;
  std::vector<long> removed_;
  std::array<Cyclotomic, 4> tr_s_;
  std::array<Cyclotomic, 6> tr_r_;
  std::optional<TSpectrum> spectrum_;
};

// Value of chi^a on S^j, T^j and R^j.
Cyclotomic character_S(long a, long j);
Cyclotomic character_T(long a, long j);
Cyclotomic character_R(long a, long j);

ParityData parity_split(const Repn& r);

enum class EigGenerator { S, R };
// Multiplicities of i^s (g = S, 4 entries) or xi^r, xi = exp(2 pi i/6)
// (g = R, 6 entries).
std::vector<long> eig_mults(const Repn& r, EigGenerator g);

long fixed_space_dim(const Repn& r);

// Order of the image group if the closure of <S, T> finishes within cap
// elements.
std::optional<long> certify_finite_image(const Repn& r, long cap = 20000);

}  // namespace vvmf
