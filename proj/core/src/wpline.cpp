#include "vvmf/wpline.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "vvmf/errors.hpp"

namespace vvmf {

WeightedLine::WeightedLine(long a, long b) : n1(a), n2(b) {
  if (a < 1 || b < 1) throw std::invalid_argument("weights of a weighted projective line must be positive");
}

long h0(const WeightedLine& w, long k) {
  if (k < 0) return 0;
  long count = 0;
  for (long a = 0; a * w.n1 <= k; ++a) {
    if ((k - a * w.n1) % w.n2 == 0) ++count;
  }
  return count;
}

long h1(const WeightedLine& w, long k) {
  // c, d <= -1 with c n1 + d n2 = k, i.e. (-c-1) n1 + (-d-1) n2 = -k - n1 - n2.
  return h0(w, -k - w.n1 - w.n2);
}

long euler_line(const WeightedLine& w, long k) { return h0(w, k) - h1(w, k); }

bool serre_check(const WeightedLine& w, long k) { return h0(w, k) == h1(w, -k - w.n1 - w.n2); }

Rational euler_rr_p46(const FixedPointData& v) {
  const Cyclotomic zeta = Cyclotomic::root_of_unity(3);
  const Cyclotomic zeta_inv = Cyclotomic::root_of_unity(3, -1);
  const Cyclotomic one(1);
  const Cyclotomic a = (Cyclotomic(6) * (one - zeta_inv)).inverse();  // 1/(6(1 - zeta^-1))
  const Cyclotomic b = (Cyclotomic(6) * (one - zeta)).inverse();      // 1/(6(1 - zeta))
  Cyclotomic chi(ratio(5 * v.rank + v.degree, 24));
  chi += Cyclotomic(ratio(5 * v.rank_plus - 5 * v.rank_minus + v.degree_plus - v.degree_minus, 24));
  chi += Cyclotomic(ratio(1, 8)) * (v.tr_i + v.tr_neg_i);
  chi += a * v.tr_zeta + b * v.tr_zeta_inv;
  chi += b * v.tr_xi + a * v.tr_xi_inv;
  const auto r = chi.as_rational();
  if (!r) throw InconsistentData("Riemann-Roch value is not rational: " + chi.to_string());
  return *r;
}

FixedPointData line_bundle_data(long k) {
  FixedPointData v;
  v.rank = 1;
  v.degree = k;
  const bool even = k % 2 == 0;
  v.rank_plus = even ? 1 : 0;
  v.rank_minus = even ? 0 : 1;
  v.degree_plus = even ? k : 0;
  v.degree_minus = even ? 0 : k;
  v.tr_i = Cyclotomic::root_of_unity(4, k);
  v.tr_neg_i = Cyclotomic::root_of_unity(4, -k);
  v.tr_zeta = Cyclotomic::root_of_unity(3, k);
  v.tr_zeta_inv = Cyclotomic::root_of_unity(3, -k);
  v.tr_xi = Cyclotomic::root_of_unity(6, k);
  v.tr_xi_inv = Cyclotomic::root_of_unity(6, -k);
  return v;
}

SplittingType splitting_from_hilbert(const WeightedLine& w, long first_weight, const std::vector<long>& dims,
                                     long rank) {
  const long len = static_cast<long>(dims.size());
  auto h = [&](long k) -> long {
    const long i = k - first_weight;
    return i < 0 ? 0 : dims[static_cast<std::size_t>(i)];
  };
  SplittingType out;
  long total = 0;
  for (long i = 0; i < len; ++i) {
    const long k = first_weight + i;
    const long c = h(k) - h(k - w.n1) - h(k - w.n2) + h(k - w.n1 - w.n2);
    if (c < 0) {
      throw NegativeNumeratorCoefficient("Hilbert numerator has coefficient " + std::to_string(c) + " at X^" +
                                         std::to_string(k));
    }
    if (c > 0 && i == len - 1) {
      throw RankMismatch("Hilbert numerator reaches the end of the window at X^" + std::to_string(k));
    }
    total += c;
    for (long j = 0; j < c; ++j) out.summands.push_back(-k);
  }
  if (total != rank) {
    throw RankMismatch("Hilbert numerator has " + std::to_string(total) + " generators, expected rank " +
                       std::to_string(rank) + (total < rank ? " (window too narrow?)" : ""));
  }
  std::sort(out.summands.begin(), out.summands.end(), std::greater<>());
  return out;
}

std::vector<long> hilbert_of_splitting(const WeightedLine& w, const SplittingType& s, long first, long count) {
  std::vector<long> out(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    for (long a : s.summands) out[static_cast<std::size_t>(i)] += h0(w, first + i + a);
  }
  return out;
}

}  // namespace vvmf
