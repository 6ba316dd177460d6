#pragma once

#include <string>
#include <vector>

#include "vvmf/bundle.hpp"
#include "vvmf/rep.hpp"

namespace vvmf::testing {

// Trace-zero part of the degree-7 permutation action with
// T = (1 7 2 5 6)(3 4), S = (1 4)(2 7)(3 5).
Repn s7();

// Left-regular action of S3 = SL2(Z)/Gamma(2), T and S sent to transpositions.
Repn gamma2_cosets();

// Regular representation of Z/n with T -> +1, S -> -3 (n | 12).
Repn gamma_n(long n);

struct TwoDimRow {
  Rational trace_L;
  Cyclotomic trace_R;
  Cyclotomic trace_R2;
  long k1 = 0;
  long k2 = 0;
  bool odd() const { return k1 % 2 != 0; }
};

const std::vector<TwoDimRow>& two_dim_table();

// Explicit S, T realizing the row with T-rotations r1, r2 (r1 + r2 = Tr L).
Repn two_dim(const TwoDimRow& row, const Rational& r1, const Rational& r2);
// Rotations Tr L / 2 -+ 1/8.
Repn two_dim(const TwoDimRow& row);

// Odd, same traces as the (5, 7) row, rotations 1/24 and 23/24.
Repn weight_one_ambiguous();

struct CorpusItem {
  std::string name;
  Repn rep;
  ClassFlags flags;
};

// Direct sums of character twists and duals of the examples above. Every
// ingredient has finite image, hence so does every item.
std::vector<CorpusItem> corpus(std::size_t count, unsigned seed);

// Cycles of a 0-based permutation, returned 1-based.
std::vector<Cycle> cycles_of(const std::vector<long>& perm);

}  // namespace vvmf::testing
