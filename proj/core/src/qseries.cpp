#include "vvmf/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vvmf {

namespace {

void check_lead(const Rational& lead) {
  if (kLeadDenominator % lead.get_den() != 0) {
    throw std::invalid_argument("q-exponent " + to_string(lead) + " has denominator not dividing " +
                                std::to_string(kLeadDenominator));
  }
}

std::size_t to_size(const Rational& r) { return static_cast<std::size_t>(to_long(r)); }

// Product over n >= 1 of (1 - q^n)^power, as K integer coefficients.
std::vector<Integer> euler_product_power(std::size_t K, int power) {
  std::vector<Integer> c(K);
  c[0] = 1;
  for (std::size_t n = 1; n < K; ++n) {
    for (int p = 0; p < power; ++p) {
      for (std::size_t m = K; m-- > n;) c[m] -= c[m - n];
    }
  }
  return c;
}

std::vector<Rational> to_rationals(const std::vector<Integer>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Integer divisor_power_sum(long n, unsigned long p) {
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), p);
    s += t;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), p);
      s += t;
    }
  }
  return s;
}

// Index of the first coefficient where a and b differ on their common
// precision; leads must differ by an integer.
std::optional<std::size_t> first_difference(const QExp& a, const QExp& b) {
  const QExp diff = (a - b);
  for (std::size_t m = 0; m < diff.order(); ++m) {
    if (sgn(diff[m]) != 0) return m;
  }
  return std::nullopt;
}

}  // namespace

QExp::QExp(Rational lead, std::vector<Rational> coeffs) : lead_(std::move(lead)), c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("q-expansion needs at least one coefficient");
  check_lead(lead_);
}

QExp QExp::constant(const Rational& c, std::size_t K) {
  std::vector<Rational> v(K);
  v[0] = c;
  return QExp(Rational(0), std::move(v));
}

bool QExp::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

QExp QExp::normalize() const {
  std::size_t s = 0;
  while (s < c_.size() && sgn(c_[s]) == 0) ++s;
  if (s == 0 || s == c_.size()) return *this;
  return QExp(lead_ + static_cast<long>(s), std::vector<Rational>(c_.begin() + static_cast<long>(s), c_.end()));
}

QExp QExp::truncate(std::size_t K) const {
  if (K == 0) throw std::invalid_argument("truncation order must be positive");
  if (K >= c_.size()) return *this;
  return QExp(lead_, std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(K)));
}

QExp QExp::operator-() const {
  QExp out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

QExp operator+(const QExp& a, const QExp& b) {
  const Rational shift = b.lead_ - a.lead_;
  if (!is_integer(shift)) {
    throw std::invalid_argument("cannot add q-expansions with leads " + to_string(a.lead_) + " and " +
                                to_string(b.lead_));
  }
  const Rational lead = std::min(a.lead_, b.lead_);
  const Rational prec = std::min(a.precision(), b.precision());
  if (prec <= lead) throw std::invalid_argument("sum has no known coefficients");
  std::vector<Rational> c(to_size(prec - lead));
  const std::size_t oa = to_size(a.lead_ - lead);
  const std::size_t ob = to_size(b.lead_ - lead);
  for (std::size_t m = oa; m < c.size(); ++m) c[m] += a.c_[m - oa];
  for (std::size_t m = ob; m < c.size(); ++m) c[m] += b.c_[m - ob];
  return QExp(lead, std::move(c));
}

QExp operator-(const QExp& a, const QExp& b) { return a + (-b); }

QExp operator*(const QExp& a, const QExp& b) {
  const std::size_t K = std::min(a.order(), b.order());
  std::vector<Rational> c(K);
  for (std::size_t i = 0; i < K; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < K; ++j) {
      if (sgn(b.c_[j]) != 0) c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QExp(a.lead_ + b.lead_, std::move(c));
}

QExp operator*(const Rational& s, const QExp& a) {
  QExp out = a;
  for (auto& x : out.c_) x *= s;
  return out;
}

QExp QExp::pow(long n) const {
  if (n < 0) return invert().pow(-n);
  QExp result = constant(Rational(1), order());
  QExp base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

QExp QExp::invert() const {
  if (sgn(c_[0]) == 0) throw std::domain_error("cannot invert a q-expansion with zero leading coefficient");
  const std::size_t K = c_.size();
  std::vector<Rational> g(K);
  const Rational inv0 = 1 / c_[0];
  g[0] = inv0;
  for (std::size_t n = 1; n < K; ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(c_[k]) != 0) s += c_[k] * g[n - k];
    }
    g[n] = -s * inv0;
  }
  return QExp(-lead_, std::move(g));
}

std::string QExp::to_string(std::size_t terms) const {
  std::ostringstream os;
  os << "q^(" << vvmf::to_string(lead_) << ")*(";
  const std::size_t n = std::min(terms, c_.size());
  for (std::size_t m = 0; m < n; ++m) {
    if (m > 0) os << ", ";
    os << vvmf::to_string(c_[m]);
  }
  if (n < c_.size()) os << ", ...";
  os << ") + O(q^" << vvmf::to_string(precision()) << ")";
  return os.str();
}

FracPow frac_pow(const QExp& f, const Rational& alpha) {
  if (sgn(f[0]) == 0) throw std::domain_error("fractional power needs a nonzero leading coefficient");
  const std::size_t K = f.order();
  const Rational c0 = f[0];
  std::vector<Rational> a(K);
  for (std::size_t m = 0; m < K; ++m) a[m] = f[m] / c0;
  // Power series recurrence for g = a^alpha with a_0 = 1:
  // n g_n = sum_{k=1}^{n} ((alpha + 1) k - n) a_k g_{n-k}.
  std::vector<Rational> g(K);
  g[0] = 1;
  for (std::size_t n = 1; n < K; ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(a[k]) == 0) continue;
      s += ((alpha + 1) * static_cast<long>(k) - static_cast<long>(n)) * a[k] * g[n - k];
    }
    g[n] = s / static_cast<long>(n);
  }
  return {QExp(alpha * f.lead(), std::move(g)), c0, alpha};
}

QExp eta(std::size_t K) { return QExp(ratio(1, 24), to_rationals(euler_product_power(K, 1))); }

QExp delta(std::size_t K) { return QExp(Rational(1), to_rationals(euler_product_power(K, 24))); }

QExp eisenstein(int w, std::size_t K) {
  long scale = 0;
  switch (w) {
    case 2:
      scale = -24;
      break;
    case 4:
      scale = 240;
      break;
    case 6:
      scale = -504;
      break;
    default:
      throw std::invalid_argument("Eisenstein series available for weights 2, 4, 6");
  }
  std::vector<Rational> c(K);
  c[0] = 1;
  for (std::size_t n = 1; n < K; ++n) {
    c[n] = Rational(divisor_power_sum(static_cast<long>(n), static_cast<unsigned long>(w - 1)) * scale);
  }
  return QExp(Rational(0), std::move(c));
}

QExp modular_derivative(const QExp& f, long k) {
  std::vector<Rational> c(f.order());
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = f[m] * (f.lead() + static_cast<long>(m));
  QExp out(f.lead(), std::move(c));
  if (k == 0) return out;
  return out - ratio(k, 12) * (eisenstein(2, f.order()) * f);
}

QExp modular_derivative_iter(const QExp& f, long k, int r) {
  QExp out = f;
  for (int j = 0; j < r; ++j) out = modular_derivative(out, k + 2 * j);
  return out;
}

QExp wronskian(const std::vector<QExp>& fs, long k) {
  const std::size_t d = fs.size();
  if (d == 0) throw std::invalid_argument("wronskian of an empty family");
  for (const auto& f : fs) {
    if (f.order() != fs.front().order()) throw std::invalid_argument("wronskian inputs have different truncation orders");
  }
  std::vector<std::vector<QExp>> m;
  for (const auto& f : fs) {
    std::vector<QExp> row{f};
    for (std::size_t r = 1; r < d; ++r) row.push_back(modular_derivative(row.back(), k + 2 * static_cast<long>(r - 1)));
    m.push_back(std::move(row));
  }
  // Leibniz expansion over permutations; d is tiny in practice.
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<QExp> total;
  do {
    long inversions = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    QExp term = m[0][perm[0]];
    for (std::size_t i = 1; i < d; ++i) term = term * m[i][perm[i]];
    if (inversions % 2 != 0) term = -term;
    total = total ? *total + term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *total;
}

QExp j_inverse(std::size_t K) {
  const QExp e4 = eisenstein(4, K);
  return Rational(1728) * (delta(K) * e4.pow(3).invert());
}

QExp hyp2f1(const Rational& a, const Rational& b, const Rational& c, const QExp& z, std::size_t K) {
  QExp result = QExp::constant(Rational(1), K);
  const QExp zn = z.normalize();
  if (zn.is_zero()) return result;
  if (!is_integer(zn.lead()) || zn.lead() < 1) {
    throw std::invalid_argument("2F1 argument must have positive integral lead");
  }
  const long step = to_long(zn.lead());
  Rational t = 1;  // (a)_n (b)_n / ((c)_n n!)
  QExp power = QExp::constant(Rational(1), K);
  for (long n = 1; n * step < static_cast<long>(K); ++n) {
    const Rational cn = c + (n - 1);
    if (sgn(cn) == 0) throw std::domain_error("2F1 denominator parameter hits a pole");
    t *= (a + (n - 1)) * (b + (n - 1)) / (cn * n);
    // z^n starts at q^(n step); only K - n step terms reach below q^K.
    const auto keep = static_cast<std::size_t>(static_cast<long>(K) - n * step);
    power = power.truncate(keep) * zn.truncate(keep);
    if (sgn(t) != 0) result = result + t * power;
  }
  return result.truncate(K);
}

Gamma2Basis gamma2_basis(std::size_t K) {
  const QExp u = j_inverse(K);
  const QExp e4 = eta(K).pow(4);
  const QExp f1 = e4 * frac_pow(u, ratio(-1, 6)).series *
                  hyp2f1(ratio(-1, 6), ratio(1, 6), ratio(1, 2), u, K);
  const QExp f2 = e4 * frac_pow(u, ratio(1, 3)).series *
                  hyp2f1(ratio(1, 3), ratio(2, 3), ratio(3, 2), u, K);
  if (f1.lead() != 0 || f2.lead() != ratio(1, 2)) throw std::logic_error("unexpected lead exponents in basis");
  return {f1, f2};
}

std::vector<SeriesCheck> run_identity_suite(std::size_t K, unsigned seed) {
  std::vector<SeriesCheck> out;
  auto record = [&](std::string name, std::optional<std::size_t> diff, std::string detail = {}) {
    out.push_back({std::move(name), !diff, diff, std::move(detail)});
  };

  const QExp d = delta(K);
  const QExp e4 = eisenstein(4, K);
  const QExp e6 = eisenstein(6, K);
  record("eta^24 = Delta", first_difference(eta(K).pow(24), d));
  record("1728 Delta = E4^3 - E6^2", first_difference(Rational(1728) * d, e4.pow(3) - e6.pow(2)));
  record("D4 E4 = -E6/3", first_difference(modular_derivative(e4, 4), ratio(-1, 3) * e6));

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> wt(-6, 12);
  std::optional<std::size_t> leibniz;
  for (int trial = 0; trial < 5 && !leibniz; ++trial) {
    std::vector<Rational> a(K), b(K);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    const QExp f(Rational(0), a);
    const QExp g(ratio(1, 2), b);
    const long k = wt(rng);
    const long l = wt(rng);
    leibniz = first_difference(modular_derivative(f * g, k + l),
                               modular_derivative(f, k) * g + f * modular_derivative(g, l));
  }
  record("Leibniz rule for D", leibniz);

  const QExp u = j_inverse(K);
  record("(1728/j) E4^3 = 1728 Delta", first_difference(u * e4.pow(3), Rational(1728) * d));

  const Gamma2Basis basis = gamma2_basis(K);
  const bool leads = basis.f1.lead() == 0 && basis.f2.lead() == ratio(1, 2);
  out.push_back({"basis lead exponents {0, 1/2}", leads, std::nullopt,
                 to_string(basis.f1.lead()) + ", " + to_string(basis.f2.lead())});

  const QExp w = wronskian({basis.f1, basis.f2}, 2);
  const QExp ratio = w * eta(K).pow(12).invert();
  std::optional<std::size_t> residual;
  for (std::size_t m = 1; m < ratio.order(); ++m) {
    if (sgn(ratio[m]) != 0) {
      residual = m;
      break;
    }
  }
  if (ratio.lead() != 0 || sgn(ratio[0]) == 0) residual = 0;
  record("W(f1, f2) = c eta^12", residual, "c = " + to_string(ratio[0]));
  return out;
}

}  // namespace vvmf
