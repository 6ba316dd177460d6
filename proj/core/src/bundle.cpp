#include "vvmf/bundle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

const Cyclotomic& unit_i() {
  static const Cyclotomic v = Cyclotomic::root_of_unity(12, 3);
  return v;
}
const Cyclotomic& unit_zeta() {
  static const Cyclotomic v = Cyclotomic::root_of_unity(12, 4);
  return v;
}
const Cyclotomic& unit_xi() {
  static const Cyclotomic v = Cyclotomic::root_of_unity(12, 2);
  return v;
}

Cyclotomic q(long num, long den) { return Cyclotomic(ratio(num, den)); }

Parity weight_parity(long k) { return k % 2 == 0 ? Parity::Even : Parity::Odd; }

long require_integer(const Cyclotomic& c, const std::string& what) {
  const auto r = c.as_rational();
  if (!r || !is_integer(*r)) throw IntegralityFailure(what + " is not an integer: " + c.to_string());
  return to_long(*r);
}

long twelve_times(const Rational& r, const char* what) {
  const Rational t = r * 12;
  if (!is_integer(t)) throw IntegralityFailure(std::string(what) + ": 12 Tr L is not an integer");
  return to_long(t);
}

bool positive_known(const ClassFlags& f) { return f.positive != Certainty::Unknown; }

DimStatus proved_status(Certainty c) {
  return c == Certainty::Certified ? DimStatus::Exact : DimStatus::ConditionalOnPositivity;
}

// Rows 0..11 of the multiplicity tables with y kept symbolic.
std::vector<TableRow> table_rows(const Repn& r, long x, long cap) {
  const ParityData pd = parity_split(r);
  const ExponentChoice L = standard_exponents(r, cap);
  const Cyclotomic& i = unit_i();
  const Cyclotomic& z = unit_zeta();
  const Cyclotomic one(1);
  const Cyclotomic two(2);

  const Cyclotomic dp(pd.d_plus), dm(pd.d_minus);
  const Cyclotomic tp(L.trace_plus), tm(L.trace_minus);
  const Cyclotomic cx(x);
  const Cyclotomic &sp = pd.s_plus, &sm = pd.s_minus;
  const Cyclotomic &r1p = pd.r1_plus, &r1m = pd.r1_minus;
  const Cyclotomic &r2p = pd.r2_plus, &r2m = pd.r2_minus;
  const Cyclotomic zm1 = (z - one) * q(1, 9);      // (zeta - 1)/9
  const Cyclotomic zp2 = (z + two) * q(1, 9);      // (zeta + 2)/9
  const Cyclotomic z21 = (two * z + one) * q(1, 9);  // (2 zeta + 1)/9

  std::vector<std::pair<Cyclotomic, long>> raw(12);
  raw[0] = {cx, 0};
  raw[2] = {q(7, 12) * dp - q(1, 4) * sp + zm1 * r1p - zp2 * r2p - tp, 0};
  raw[4] = {q(3, 4) * dp + q(1, 4) * sp - z21 * r1p + z21 * r2p - cx - tp, 0};
  raw[6] = {q(1, 3) * dp + q(1, 3) * r1p + q(1, 3) * r2p - cx, 0};
  raw[8] = {q(-1, 4) * dp + q(1, 4) * sp + z21 * r1p - z21 * r2p + tp, 0};
  raw[10] = {q(-5, 12) * dp - q(1, 4) * sp - zp2 * r1p + zm1 * r2p + cx + tp, 0};
  raw[1] = {q(1, 2) * dm + q(1, 4) * i * sm + z21 * r1m + z21 * r2m - tm, 1};
  raw[3] = {q(2, 3) * dm - q(1, 4) * i * sm - zp2 * r1m - (z - one) * q(1, 9) * r2m - tm, 0};
  raw[5] = {q(1, 3) * dm - q(1, 3) * z * r1m - q(1, 3) * (z + one) * r2m, -1};
  raw[7] = {q(-1, 6) * dm - q(1, 4) * i * sm + zp2 * r1m + zm1 * r2m + tm, -1};
  raw[9] = {q(-1, 3) * dm + q(1, 4) * i * sm + zm1 * r1m + zp2 * r2m + tm, 0};
  raw[11] = {Cyclotomic(0), 1};

  std::vector<TableRow> rows;
  for (long w = 0; w < 12; ++w) {
    const auto& [value, coeff] = raw[static_cast<std::size_t>(w)];
    const auto rv = value.as_rational();
    if (!rv || !is_integer(*rv)) {
      throw NonIntegralMultiplicity("multiplicity of weight " + std::to_string(w) +
                                    " is not an integer: " + value.to_string());
    }
    rows.push_back({w, to_long(*rv), coeff});
  }
  return rows;
}

}  // namespace

BundleSpec modular_bundle(const Repn& r, long k, long cap) { return {r, k, standard_exponents(r, cap)}; }

BundleSpec cusp_bundle(const Repn& r, long k, long cap) { return {r, k, cusp_exponents(r, cap)}; }

FixedPointData fixed_point_data(const BundleSpec& b) {
  const Repn& r = b.rep;
  const long k = b.weight;
  const ParityData pd = parity_split(r);
  const Parity plus = weight_parity(k);
  const Parity minus = plus == Parity::Even ? Parity::Odd : Parity::Even;
  FixedPointData v;
  v.rank = r.dim();
  v.degree = det_twist(b);
  v.rank_plus = pd.dim(plus);
  v.rank_minus = pd.dim(minus);
  v.degree_plus = k * v.rank_plus - twelve_times(b.exponents.trace_of(plus), "parity part");
  v.degree_minus = k * v.rank_minus - twelve_times(b.exponents.trace_of(minus), "parity part");
  v.tr_i = unit_i().pow(k) * r.trace_S(1);
  v.tr_neg_i = unit_i().pow(-k) * r.trace_S(3);
  v.tr_zeta = unit_zeta().pow(k) * r.trace_R(2);
  v.tr_zeta_inv = unit_zeta().pow(-k) * r.trace_R(4);
  v.tr_xi = unit_xi().pow(k) * r.trace_R(1);
  v.tr_xi_inv = unit_xi().pow(-k) * r.trace_R(5);
  return v;
}

long euler_char(const BundleSpec& b) {
  const long k = b.weight;
  const Parity p = weight_parity(k);
  const ParityData pd = parity_split(b.rep);
  const Cyclotomic one(1);
  Cyclotomic chi(ratio((5 + k) * pd.dim(p), 12));
  chi += unit_i().pow(k) * pd.s(p) * q(1, 4);
  chi += unit_xi().pow(k) * pd.r1(p) / (Cyclotomic(3) * (one - unit_zeta()));
  chi += unit_zeta().pow(k) * pd.r2(p) / (Cyclotomic(3) * (one - unit_zeta().pow(-1)));
  chi -= Cyclotomic(b.exponents.trace_of(p));
  const long value = require_integer(chi, "Euler characteristic");
  const Rational rr = euler_rr_p46(fixed_point_data(b));
  if (rr != value) {
    throw IntegralityFailure("Euler characteristic formulas disagree: " + std::to_string(value) + " vs " +
                             to_string(rr));
  }
  return value;
}

long det_twist(const BundleSpec& b) {
  return b.rep.dim() * b.weight - twelve_times(b.exponents.trace, "determinant");
}

BundleSpec dual_spec(const BundleSpec& b, long a, long cap) {
  if (b.exponents.interval.lower != ratio(a, 12)) {
    throw std::invalid_argument("exponents are not relative to an interval starting at a/12 = " +
                                to_string(ratio(a, 12)));
  }
  const Repn r = tensor_char(dual(b.rep), a);
  const long k = a + 12 - b.weight;
  if (b.exponents.interval.kind == IntervalKind::ClosedOpen) return cusp_bundle(r, k, cap);
  return modular_bundle(r, k, cap);
}

Rational min_weight_bound(const Repn& r, const ExponentChoice& L) {
  const long d = r.dim();
  return L.trace * 12 / d + 1 - d;
}

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::Certified:
      return "certified";
    case Certainty::Asserted:
      return "asserted";
    case Certainty::Unknown:
      break;
  }
  return "unknown";
}

ClassFlags asserted_flags(const Assertions& a) {
  ClassFlags f;
  f.good = a.good ? Certainty::Asserted : Certainty::Unknown;
  f.unitarizable = a.unitarizable ? Certainty::Asserted : Certainty::Unknown;
  f.positive = a.positive || a.good || a.unitarizable ? Certainty::Asserted : Certainty::Unknown;
  return f;
}

ClassFlags classify(const Repn& r, long cap, const Assertions& a) {
  ClassFlags f = asserted_flags(a);
  f.finite_order = certify_finite_image(r, cap);
  if (f.finite_order) {
    // Finite image: good, hence positive; also unitarizable by averaging.
    f.good = Certainty::Certified;
    f.positive = Certainty::Certified;
    f.unitarizable = Certainty::Certified;
  }
  return f;
}

const char* to_string(YSource s) {
  switch (s) {
    case YSource::EvenDual:
      return "even";
    case YSource::Characters:
      return "characters";
    case YSource::DirectSum:
      return "direct sum";
    case YSource::CuspIsomorphism:
      return "eta multiplication";
    case YSource::Pinning:
      return "pinning";
    case YSource::UserOverride:
      return "user";
    case YSource::None:
      break;
  }
  return "none";
}

namespace {

// Index sets of the connected components of the graph joining i and j when
// S or T has a nonzero (i, j) entry; S and T are block diagonal along them.
std::vector<std::vector<std::size_t>> diagonal_blocks(const CycMatrix& S, const CycMatrix& T) {
  const std::size_t n = S.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!S(i, j).is_zero() || !T(i, j).is_zero()) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, idx] : groups) out.push_back(std::move(idx));
  return out;
}

CycMatrix submatrix(const CycMatrix& m, const std::vector<std::size_t>& idx) {
  CycMatrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out.set(i, j, m(idx[i], idx[j]));
  }
  return out;
}

}  // namespace

namespace {

// dim S_1(x) (or dim M_1(x) when `modular`), if multiplication by eta^(2n) is
// an isomorphism onto S_{1+n}(x chi^n) for some n. That holds when no rotation
// of x chi^n lies in (0, n/12] (resp. (0, n/12)). The weight 1+n cusp
// dimension is chi + dim M_{1-n}(x^dual chi^-n); the correction is the
// invariant count for n = 1 and zero for n > 1 under the flags of x^dual.
std::optional<long> weight_one_via_eta(const Repn& x, bool modular, const ClassFlags& dual_flags, long cap) {
  for (long n = 1; n < 12; ++n) {
    if (n == 1 && !dual_flags.good_known()) continue;
    const TSpectrum ss = spectrum_twist(x.t_spectrum(cap), n);
    const Rational top = ratio(n, 12);
    const bool blocked = std::any_of(ss.entries().begin(), ss.entries().end(), [&](const SpectrumEntry& e) {
      return sgn(e.rotation) > 0 && (e.rotation < top || (!modular && e.rotation == top));
    });
    if (blocked) continue;
    const Repn sigma = tensor_char(x, n);
    long v = euler_char(cusp_bundle(sigma, 1 + n, cap));
    if (n == 1) v += fixed_space_dim(dual(sigma));
    if (v < 0) throw InconsistentData("weight-" + std::to_string(1 + n) + " cusp form dimension is negative");
    return v;
  }
  return std::nullopt;
}

}  // namespace

YValue resolve_y(const Repn& r, const ClassFlags& flags, std::optional<long> user_y, long cap) {
  long lo = 0;
  std::optional<long> hi;
  YSource source = YSource::None;
  auto narrow = [&](long new_lo, std::optional<long> new_hi, YSource s) {
    lo = std::max(lo, new_lo);
    if (new_hi) hi = hi ? std::min(*hi, *new_hi) : *new_hi;
    if (hi && *hi < lo) throw InconsistentData("weight-one bounds are contradictory");
    if (source == YSource::None && new_hi && *new_hi == new_lo) source = s;
  };

  // Odd weight forms for an even representation vanish.
  if (parity_split(r).d_minus == 0) narrow(0, 0, YSource::EvenDual);

  // y is additive over direct summands. Removed characters chi^a contribute
  // dim S_1(chi^-a), which is 1 exactly for a = 11.
  const auto blocks = diagonal_blocks(r.S(), r.T());
  if (blocks.size() > 1) {
    long sum_lo = 0;
    std::optional<long> sum_hi = 0;
    for (const auto& idx : blocks) {
      const Repn part = Repn::from_matrices(submatrix(r.S(), idx), submatrix(r.T(), idx), std::nullopt, cap);
      const YValue v = resolve_y(part, flags, std::nullopt, cap);
      sum_lo += v.lo;
      sum_hi = sum_hi && v.hi ? std::optional<long>(*sum_hi + *v.hi) : std::nullopt;
    }
    const auto elevens = static_cast<long>(std::count(r.removed().begin(), r.removed().end(), 11L));
    narrow(std::max(0L, sum_lo - elevens), sum_hi ? std::optional<long>(*sum_hi - elevens) : std::nullopt,
           YSource::DirectSum);
  }

  // Abelian image: rho is a sum of characters chi^a, and S_1(chi^b) is
  // spanned by eta^2 when b = 1 and vanishes otherwise.
  if (r.S() * r.T() == r.T() * r.S()) {
    long count = 0;
    const TSpectrum spec = r.t_spectrum(cap);
    for (const auto& e : spec.entries()) {
      if (e.rotation == ratio(11, 12)) count += e.mult;
    }
    narrow(count, count, YSource::Characters);
  }

  if (positive_known(flags)) {
    const auto rows = table_rows(r, 0, cap);
    // m1 = A1 + y, m5 = A5 - y, m7 = A7 - y, m11 = y, all nonnegative.
    narrow(std::max(0L, -rows[1].constant), std::min(rows[5].constant, rows[7].constant), YSource::Pinning);
    const Repn rd = dual(r);
    // S_1(rho^dual) directly, and dim M_1(rho) - chi(V_1(rho)).
    if (auto v = weight_one_via_eta(rd, false, flags, cap)) narrow(*v, *v, YSource::CuspIsomorphism);
    if (auto m = weight_one_via_eta(r, true, flags, cap)) {
      const long v = *m - euler_char(modular_bundle(r, 1, cap));
      narrow(v, v, YSource::CuspIsomorphism);
    }
  }

  if (user_y) {
    if (*user_y < lo || (hi && *user_y > *hi)) {
      throw std::invalid_argument("user-supplied y = " + std::to_string(*user_y) + " lies outside [" +
                                  std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : "inf") + "]");
    }
    if (!(hi && *hi == lo)) return {*user_y, *user_y, YSource::UserOverride};
  }
  return {lo, hi, source};
}

std::vector<long> GeneratorWeights::roots() const {
  std::vector<long> out;
  for (long w : weights) out.push_back(-w);
  return out;
}

std::vector<Parity> GeneratorWeights::parities() const {
  std::vector<Parity> out;
  for (long w : weights) out.push_back(weight_parity(w));
  return out;
}

GeneratorWeights generator_weights(const Repn& r, const ClassFlags& flags, std::optional<long> user_y, long cap) {
  GeneratorWeights g;
  g.conditional = flags.positive != Certainty::Certified;
  g.x = fixed_space_dim(r);
  g.y = resolve_y(r, flags, user_y, cap);
  g.rows = table_rows(r, g.x, cap);
  for (const auto& row : g.rows) {
    if (row.y_coeff == 0 && row.constant < 0) {
      throw NegativeMultiplicity("weight " + std::to_string(row.weight) + " has multiplicity " +
                                 std::to_string(row.constant));
    }
  }
  if (!g.y.exact()) return g;

  for (const auto& row : g.rows) {
    const long m = row.constant + row.y_coeff * g.y.lo;
    if (m < 0) {
      throw NegativeMultiplicity("weight " + std::to_string(row.weight) + " has multiplicity " + std::to_string(m));
    }
    for (long j = 0; j < m; ++j) g.weights.push_back(row.weight);
  }

  if (static_cast<long>(g.weights.size()) != r.dim()) {
    throw InconsistentData("generator count " + std::to_string(g.weights.size()) + " differs from dimension " +
                           std::to_string(r.dim()));
  }
  long sum = 0;
  for (long w : g.weights) sum += w;
  if (sum != twelve_times(standard_exponents(r, cap).trace, "weight sum")) {
    throw InconsistentData("generator weights do not sum to 12 Tr L");
  }
  const auto alpha = eig_mults(r, EigGenerator::S);
  const auto beta = eig_mults(r, EigGenerator::R);
  std::vector<long> by4(4), by6(6);
  for (long w : g.weights) {
    ++by4[static_cast<std::size_t>(((-w) % 4 + 4) % 4)];
    ++by6[static_cast<std::size_t>(((-w) % 6 + 6) % 6)];
  }
  if (by4 != alpha || by6 != beta) throw InconsistentData("generator weights violate the root congruences");
  return g;
}

const char* to_string(DimStatus s) {
  switch (s) {
    case DimStatus::Exact:
      return "exact";
    case DimStatus::ConditionalOnPositivity:
      return "conditional";
    case DimStatus::Undetermined:
      break;
  }
  return "undetermined";
}

bool DimReport::any_undetermined() const {
  return std::any_of(entries.begin(), entries.end(), [](const DimEntry& e) {
    return e.modular.status == DimStatus::Undetermined || e.cusp.status == DimStatus::Undetermined;
  });
}

DimReport dims(const Repn& r, const ClassFlags& flags, long k_lo, long k_hi, std::optional<long> user_y, long cap) {
  const ParityData pd = parity_split(r);
  const ExponentChoice std_L = standard_exponents(r, cap);
  const ExponentChoice cusp_L = cusp_exponents(r, cap);
  const long d = r.dim();
  // Above these weights h^1 vanishes without any positivity hypothesis.
  const Rational bound_mod = Rational(d + 1) + std_L.trace * 12 / d;
  const Rational bound_cusp = Rational(d + 1) + cusp_L.trace * 12 / d;
  const bool pos = positive_known(flags);
  const DimStatus proved = proved_status(flags.positive);
  const DimStatus proved_good = proved_status(flags.good);

  std::optional<YValue> y_mod, y_cusp;
  DimReport out;
  for (long k = k_lo; k <= k_hi; ++k) {
    DimEntry e{k, {}, {}};
    if ((k % 2 != 0 && pd.d_minus == 0) || (k % 2 == 0 && pd.d_plus == 0)) {
      // rho(-I) acts by (-1)^k on every form, so the parity part is zero.
      e.modular = {0, DimStatus::Exact};
      e.cusp = {0, DimStatus::Exact};
      out.entries.push_back(e);
      continue;
    }

    if (k >= 2) {
      e.modular = {euler_char({r, k, std_L}), Rational(k) > bound_mod ? DimStatus::Exact : proved};
    } else if (k == 1) {
      if (pos) {
        if (!y_mod) y_mod = resolve_y(r, flags, user_y, cap);
        if (y_mod->exact()) e.modular = {euler_char({r, 1, std_L}) + y_mod->lo, proved};
      }
    } else if (k == 0) {
      if (flags.good_known()) e.modular = {fixed_space_dim(r), proved_good};
    } else if (pos) {
      e.modular = {0, proved};
    }

    if (k >= 3) {
      const DimStatus st = Rational(k) > bound_cusp ? DimStatus::Exact : proved;
      e.cusp = {euler_char({r, k, cusp_L}), st};
    } else if (k == 2) {
      if (pos) e.cusp = {euler_char({r, 2, cusp_L}) + fixed_space_dim(dual(r)), proved};
    } else if (k == 1) {
      if (pos) {
        // S_1(rho) is the y-value of the dual representation.
        if (!y_cusp) y_cusp = resolve_y(dual(r), flags, std::nullopt, cap);
        if (y_cusp->exact()) e.cusp = {y_cusp->lo, proved};
      }
    } else if (k == 0) {
      if (flags.good_known()) e.cusp = {0, proved_good};
    } else if (pos) {
      e.cusp = {0, proved};
    }
    out.entries.push_back(e);
  }
  return out;
}

HilbertSeries hilbert(const Repn& r, const ClassFlags& flags, long K, std::optional<long> user_y, long cap) {
  const GeneratorWeights g = generator_weights(r, flags, user_y, cap);
  if (!g.determined()) throw Undetermined("generator weights depend on the undetermined weight-one dimension");
  HilbertSeries h;
  h.numerator.assign(static_cast<std::size_t>(g.weights.back() + 1), 0);
  for (long w : g.weights) ++h.numerator[static_cast<std::size_t>(w)];
  const WeightedLine p46(4, 6);
  for (long k = 0; k <= K; ++k) {
    long total = 0;
    for (long w : g.weights) total += h0(p46, k - w);
    h.series.push_back(total);
  }
  const DimReport rep = dims(r, flags, 0, K, user_y, cap);
  for (const auto& e : rep.entries) {
    if (e.modular.value && *e.modular.value != h.series[static_cast<std::size_t>(e.k)]) {
      throw InconsistentData("Hilbert series disagrees with the dimension formula at weight " + std::to_string(e.k));
    }
  }
  return h;
}

SplittingType splitting(const GeneratorWeights& g, long k) {
  if (!g.determined()) throw Undetermined("splitting depends on the undetermined weight-one dimension");
  SplittingType s;
  for (long w : g.weights) s.summands.push_back(k - w);
  std::sort(s.summands.begin(), s.summands.end(), std::greater<>());
  return s;
}

GeneratorWeights subgroup_generators(const Repn& coset_action, const ClassFlags& flags, long cap) {
  if (!coset_action.removed().empty()) {
    throw std::invalid_argument("subgroup generators need the full coset permutation representation");
  }
  GeneratorWeights g = generator_weights(coset_action, flags, std::nullopt, cap);
  if (!g.determined()) throw Undetermined("generator weights depend on the undetermined weight-one dimension");
  if (g.weights.front() != 0 || g.x != 1) {
    throw InconsistentData("coset action is not transitive: M_0 should be the constants");
  }
  return g;
}

}  // namespace vvmf
