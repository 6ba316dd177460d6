#pragma once

#include <vector>

#include "vvmf/cyclotomic.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

// The weighted projective line P(n1, n2).
struct WeightedLine {
  long n1 = 4;
  long n2 = 6;

  WeightedLine() = default;
  WeightedLine(long a, long b);
};

// #{(a, b) >= 0 : a n1 + b n2 = k}
long h0(const WeightedLine& w, long k);
// #{(c, d) < 0 : c n1 + d n2 = k}
long h1(const WeightedLine& w, long k);
long euler_line(const WeightedLine& w, long k);
bool serre_check(const WeightedLine& w, long k);

// Fiber data of a bundle V on P(4,6) at the stacky points: the traces of
// i, -i, zeta^{+-1} (zeta = exp(2 pi i/3)) and xi^{+-1} (xi = exp(2 pi i/6)),
// plus ranks and degrees of V and of its (-1)-eigenbundles.
struct FixedPointData {
  long rank = 0;
  long degree = 0;
  long rank_plus = 0;
  long rank_minus = 0;
  long degree_plus = 0;
  long degree_minus = 0;
  Cyclotomic tr_i, tr_neg_i, tr_zeta, tr_zeta_inv, tr_xi, tr_xi_inv;
};

// Riemann-Roch on P(4,6). Throws InconsistentData if the value is not rational.
Rational euler_rr_p46(const FixedPointData& v);

FixedPointData line_bundle_data(long k);

// Twists a_1 >= ... >= a_r.
struct SplittingType {
  std::vector<long> summands;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

// Recovers the splitting of a bundle from h(k) = dims[k - first_weight] for
// k in the window, assuming h vanishes below it. The numerator
// H(X)(1 - X^n1)(1 - X^n2) must be a nonnegative combination of exactly
// `rank` monomials inside the window and must not touch its top end.
SplittingType splitting_from_hilbert(const WeightedLine& w, long first_weight, const std::vector<long>& dims,
                                     long rank);

// h(k) = sum_j h0(k + a_j) over the window [first, first + count).
std::vector<long> hilbert_of_splitting(const WeightedLine& w, const SplittingType& s, long first, long count);

}  // namespace vvmf
