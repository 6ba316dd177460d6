#include "vvmf/rep.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

long mod12(long a) { return ((a % 12) + 12) % 12; }

Parity character_parity(long a) { return mod12(a) % 2 == 0 ? Parity::Even : Parity::Odd; }

std::vector<std::size_t> cycles_to_perm(long degree, const std::vector<Cycle>& cycles, const char* which) {
  std::vector<std::size_t> perm(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::set<long> seen;
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const long x = c[k];
      if (x < 1 || x > degree) {
        throw std::invalid_argument(std::string(which) + ": cycle entry " + std::to_string(x) + " outside 1.." +
                                    std::to_string(degree));
      }
      if (!seen.insert(x).second) {
        throw std::invalid_argument(std::string(which) + ": cycles are not disjoint (" + std::to_string(x) +
                                    " repeats)");
      }
      const long next = c[(k + 1) % c.size()];
      perm[static_cast<std::size_t>(x - 1)] = static_cast<std::size_t>(next - 1);
    }
  }
  return perm;
}

int to_count(const Cyclotomic& c, const char* what) {
  const auto r = c.as_rational();
  if (!r || !is_integer(*r) || sgn(*r) < 0) {
    throw InconsistentData(std::string(what) + " is not a nonnegative integer: " + c.to_string());
  }
  return static_cast<int>(to_long(*r));
}

std::optional<TSpectrum> try_spectrum(const CycMatrix& S, const CycMatrix& T, long cap) {
  try {
    return compute_t_spectrum(S, T, cap);
  } catch (const NotQuasiUnipotent&) {
    return std::nullopt;
  }
}

}  // namespace

Cyclotomic character_S(long a, long j) { return Cyclotomic::root_of_unity(12, mod12(9 * mod12(a) * j)); }
Cyclotomic character_T(long a, long j) { return Cyclotomic::root_of_unity(12, mod12(mod12(a) * j)); }
Cyclotomic character_R(long a, long j) { return Cyclotomic::root_of_unity(12, mod12(10 * mod12(a) * j)); }

void Repn::validate(const CycMatrix& S, const CycMatrix& T, const CycMatrix& R) {
  const CycMatrix S2 = S * S;
  const CycMatrix R3 = R * R * R;
  if (!(S2 * S2).is_identity()) throw RelationViolation("S^4 = I");
  if (!(S2 == R3)) throw RelationViolation("S^2 = R^3");
  if (!(R3 * R3).is_identity()) throw RelationViolation("R^6 = I");
  if (!(S2 * T == T * S2)) throw RelationViolation("S^2 T = T S^2");
  if (!(S2 * S2).is_identity()) throw RelationViolation("(S^2)^2 = I");
}

Repn::Repn(CycMatrix S, CycMatrix T, std::vector<long> removed, std::optional<TSpectrum> spectrum)
    : S_(std::move(S)), T_(std::move(T)), removed_(std::move(removed)), spectrum_(std::move(spectrum)) {
  if (!S_.square() || !T_.square() || S_.rows() != T_.rows() || S_.rows() == 0) {
    throw std::invalid_argument("S and T must be nonempty square matrices of equal size");
  }
  if (removed_.size() >= S_.rows()) throw std::invalid_argument("virtual subtraction leaves nothing");
  std::sort(removed_.begin(), removed_.end());
  R_ = S_ * T_;
  validate(S_, T_, R_);

  CycMatrix p = CycMatrix::identity(S_.rows(), S_.order());
  for (long j = 0; j < 4; ++j) {
    Cyclotomic t = p.trace();
    for (long a : removed_) t -= character_S(a, j);
    tr_s_[static_cast<std::size_t>(j)] = t;
    p = p * S_;
  }
  p = CycMatrix::identity(R_.rows(), R_.order());
  for (long j = 0; j < 6; ++j) {
    Cyclotomic t = p.trace();
    for (long a : removed_) t -= character_R(a, j);
    tr_r_[static_cast<std::size_t>(j)] = t;
    p = p * R_;
  }
  const auto d2 = tr_s_[2].as_rational();
  if (!d2 || !is_integer(*d2) || abs(*d2) > dim() || (dim() - to_long(*d2)) % 2 != 0) {
    throw InconsistentData("Tr S^2 is incompatible with the dimension");
  }
  check_spectrum();
}

Repn::Repn(CycMatrix S, CycMatrix T, CycMatrix R, std::vector<long> removed, std::optional<TSpectrum> spectrum,
           std::array<Cyclotomic, 4> tr_s, std::array<Cyclotomic, 6> tr_r)
    : S_(std::move(S)),
      T_(std::move(T)),
      R_(std::move(R)),
      removed_(std::move(removed)),
      tr_s_(std::move(tr_s)),
      tr_r_(std::move(tr_r)),
      spectrum_(std::move(spectrum)) {
  std::sort(removed_.begin(), removed_.end());
}

void Repn::check_spectrum() const {
  if (!spectrum_) return;
  const ParityData pd = parity_split(*this);
  if (spectrum_->dim() != dim() || spectrum_->dim(Parity::Even) != pd.d_plus ||
      spectrum_->dim(Parity::Odd) != pd.d_minus) {
    throw std::invalid_argument("T-spectrum does not match the dimension and parity split of the representation");
  }
}

TSpectrum Repn::strip_removed(TSpectrum full) const {
  for (long a : removed_) full = full.without(ratio(a, 12), character_parity(a));
  return full;
}

Repn Repn::from_matrices(const CycMatrix& S, const CycMatrix& T, std::optional<TSpectrum> spectrum, long cap) {
  if (!spectrum) {
    if (!S.square() || !T.square() || S.rows() != T.rows() || S.rows() == 0) {
      throw std::invalid_argument("S and T must be nonempty square matrices of equal size");
    }
    // Relations first, so a bad presentation is reported as such.
    validate(S, T, S * T);
    spectrum = try_spectrum(S, T, cap);
  }
  return Repn(S, T, {}, std::move(spectrum));
}

Repn Repn::trivial() {
  const CycMatrix one = CycMatrix::identity(1);
  return Repn(one, one, {}, TSpectrum({{Rational(0), 1, Parity::Even, 1}}));
}

Repn Repn::character(long a) {
  const CycMatrix S = CycMatrix::scalar(1, character_S(a, 1));
  const CycMatrix T = CycMatrix::scalar(1, character_T(a, 1));
  return Repn(S, T, {}, TSpectrum({{ratio(mod12(a), 12), 1, character_parity(a), 1}}));
}

Repn Repn::from_permutations(long degree, const std::vector<Cycle>& S_cycles, const std::vector<Cycle>& T_cycles,
                             bool subtract_trivial, long cap) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
  if (subtract_trivial && degree == 1) throw std::invalid_argument("cannot remove the trivial summand of degree 1");
  const CycMatrix S = CycMatrix::permutation(cycles_to_perm(degree, S_cycles, "S"));
  const CycMatrix T = CycMatrix::permutation(cycles_to_perm(degree, T_cycles, "T"));
  validate(S, T, S * T);
  std::vector<long> removed;
  if (subtract_trivial) removed.push_back(0);
  Repn out(S, T, removed, std::nullopt);
  if (auto full = try_spectrum(S, T, cap)) out.spectrum_ = out.strip_removed(std::move(*full));
  return out;
}

Repn Repn::with_spectrum(TSpectrum spectrum) const {
  Repn out = *this;
  out.spectrum_ = std::move(spectrum);
  out.check_spectrum();
  return out;
}

TSpectrum Repn::t_spectrum(long cap) const {
  if (spectrum_) return *spectrum_;
  return strip_removed(compute_t_spectrum(S_, T_, cap));
}

const Cyclotomic& Repn::trace_S(long j) const { return tr_s_[static_cast<std::size_t>(((j % 4) + 4) % 4)]; }
const Cyclotomic& Repn::trace_R(long j) const { return tr_r_[static_cast<std::size_t>(((j % 6) + 6) % 6)]; }

Repn direct_sum(const Repn& a, const Repn& b) {
  std::vector<long> removed = a.removed_;
  removed.insert(removed.end(), b.removed_.begin(), b.removed_.end());
  std::optional<TSpectrum> spec;
  if (a.spectrum_ && b.spectrum_) spec = spectrum_union(*a.spectrum_, *b.spectrum_);
  std::array<Cyclotomic, 4> ts;
  std::array<Cyclotomic, 6> tr;
  for (std::size_t j = 0; j < 4; ++j) ts[j] = a.tr_s_[j] + b.tr_s_[j];
  for (std::size_t j = 0; j < 6; ++j) tr[j] = a.tr_r_[j] + b.tr_r_[j];
  Repn out(block_diag(a.S_, b.S_), block_diag(a.T_, b.T_), block_diag(a.R_, b.R_), std::move(removed),
           std::nullopt, ts, tr);
  if (!spec) {
    if (auto full = try_spectrum(out.S_, out.T_, kDefaultOrderCap)) spec = out.strip_removed(std::move(*full));
  }
  out.spectrum_ = std::move(spec);
  out.check_spectrum();
  return out;
}

Repn tensor_char(const Repn& r, long a) {
  std::vector<long> removed;
  for (long x : r.removed_) removed.push_back(mod12(x + a));
  std::optional<TSpectrum> spec;
  if (r.spectrum_) spec = spectrum_twist(*r.spectrum_, a);
  std::array<Cyclotomic, 4> ts;
  std::array<Cyclotomic, 6> tr;
  for (std::size_t j = 0; j < 4; ++j) ts[j] = character_S(a, static_cast<long>(j)) * r.tr_s_[j];
  for (std::size_t j = 0; j < 6; ++j) tr[j] = character_R(a, static_cast<long>(j)) * r.tr_r_[j];
  return Repn(character_S(a, 1) * r.S_, character_T(a, 1) * r.T_, character_R(a, 1) * r.R_, std::move(removed),
              std::move(spec), ts, tr);
}

Repn dual(const Repn& r) {
  std::vector<long> removed;
  for (long x : r.removed_) removed.push_back(mod12(-x));
  std::optional<TSpectrum> spec;
  if (r.spectrum_) spec = spectrum_dual(*r.spectrum_);
  // S' = (S^-1)^t and R' = (R^-1)^t, so Tr S'^j = Tr S^-j and Tr R'^j = Tr R^-j.
  CycMatrix S = r.S_.pow(3).transpose();
  CycMatrix T = r.T_.inverse().transpose();
  CycMatrix R = S * T;
  std::array<Cyclotomic, 4> ts;
  std::array<Cyclotomic, 6> tr;
  for (std::size_t j = 0; j < 4; ++j) ts[j] = r.tr_s_[(4 - j) % 4];
  for (std::size_t j = 0; j < 6; ++j) tr[j] = r.tr_r_[(6 - j) % 6];
  return Repn(std::move(S), std::move(T), std::move(R), std::move(removed), std::move(spec), ts, tr);
}

ParityData parity_split(const Repn& r) {
  ParityData p;
  const long d = r.dim();
  const long s2 = to_long(*r.trace_S(2).as_rational());
  p.d_plus = (d + s2) / 2;
  p.d_minus = (d - s2) / 2;
  const Cyclotomic half(ratio(1, 2));
  p.s_plus = half * (r.trace_S(1) + r.trace_S2S(1));
  p.s_minus = half * (r.trace_S(1) - r.trace_S2S(1));
  p.r1_plus = half * (r.trace_R(1) + r.trace_R3R(1));
  p.r1_minus = half * (r.trace_R(1) - r.trace_R3R(1));
  p.r2_plus = half * (r.trace_R(2) + r.trace_R3R(2));
  p.r2_minus = half * (r.trace_R(2) - r.trace_R3R(2));
  return p;
}

std::vector<long> eig_mults(const Repn& r, EigGenerator g) {
  const long m = g == EigGenerator::S ? 4 : 6;
  std::vector<long> out;
  long total = 0;
  for (long s = 0; s < m; ++s) {
    Cyclotomic sum;
    for (long j = 0; j < m; ++j) {
      const Cyclotomic& t = g == EigGenerator::S ? r.trace_S(j) : r.trace_R(j);
      sum += Cyclotomic::root_of_unity(m, -s * j) * t;
    }
    sum *= Cyclotomic(ratio(1, m));
    out.push_back(to_count(sum, "eigenvalue multiplicity"));
    total += out.back();
  }
  if (total != r.dim()) throw InconsistentData("eigenvalue multiplicities do not sum to the dimension");
  return out;
}

long fixed_space_dim(const Repn& r) {
  const std::size_t n = static_cast<std::size_t>(r.matrix_dim());
  const CycMatrix I = CycMatrix::identity(n, 1);
  long k = static_cast<long>(vstack(r.S() - I, r.T() - I).kernel_dim());
  k -= static_cast<long>(std::count(r.removed().begin(), r.removed().end(), 0L));
  if (k < 0) throw InconsistentData("removed trivial summand is not present");
  return k;
}

std::optional<long> certify_finite_image(const Repn& r, long cap) {
  const std::size_t n = static_cast<std::size_t>(r.matrix_dim());
  // One common order keeps keys comparable across products.
  const long order = lcm_order(r.S().order(), r.T().order());
  const CycMatrix S = r.S().embed(order);
  const CycMatrix T = r.T().embed(order);
  const CycMatrix start = CycMatrix::identity(n, order);
  std::unordered_set<std::string> seen{start.key()};
  std::deque<CycMatrix> queue{start};
  const std::array<const CycMatrix*, 2> gens{&S, &T};
  while (!queue.empty()) {
    const CycMatrix g = std::move(queue.front());
    queue.pop_front();
    for (const CycMatrix* h : gens) {
      CycMatrix x = g * *h;
      if (seen.insert(x.key()).second) {
        if (static_cast<long>(seen.size()) > cap) return std::nullopt;
        queue.push_back(std::move(x));
      }
    }
  }
  return static_cast<long>(seen.size());
}

}  // namespace vvmf
