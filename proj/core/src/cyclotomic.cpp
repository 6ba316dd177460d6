#include "vvmf/cyclotomic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

// Exact quotient of p by the monic polynomial q. Coefficients ascend.
std::vector<long> divide_exact(const std::vector<long>& p, const std::vector<long>& q) {
  std::vector<long> rem = p;
  const std::size_t dq = q.size() - 1;
  std::vector<long> quot(p.size() - dq, 0);
  for (std::size_t i = p.size(); i-- > dq;) {
    const long c = rem[i];
    if (c == 0) continue;
    quot[i - dq] = c;
    for (std::size_t j = 0; j <= dq; ++j) rem[i - dq + j] -= c * q[j];
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (rem[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

std::vector<long> x_pow_minus_one(long n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p.front() = -1;
  p.back() = 1;
  return p;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Phi_d for every divisor d of n, in increasing order of d.
std::vector<std::vector<long>> phi_chain(long n) {
  const auto divs = divisors(n);
  std::vector<std::vector<long>> phis;
  phis.reserve(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i) {
    auto p = x_pow_minus_one(divs[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (divs[i] % divs[j] == 0) p = divide_exact(p, phis[j]);
    }
    phis.push_back(std::move(p));
  }
  return phis;
}

constexpr long kTableOrders = 360;

// Immutable after static initialization.
const std::vector<std::shared_ptr<const detail::CyclotomicModulus>>& modulus_table() {
  static const auto table = [] {
    std::vector<std::vector<long>> phis(kTableOrders + 1);
    std::vector<std::shared_ptr<const detail::CyclotomicModulus>> out(kTableOrders + 1);
    for (long n = 1; n <= kTableOrders; ++n) {
      auto p = x_pow_minus_one(n);
      for (long d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(p, phis[static_cast<std::size_t>(d)]);
      }
      phis[static_cast<std::size_t>(n)] = p;
      out[static_cast<std::size_t>(n)] =
          std::make_shared<const detail::CyclotomicModulus>(detail::CyclotomicModulus{n, std::move(p)});
    }
    return out;
  }();
  return table;
}

long positive_mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_order(long a, long b) { return std::lcm(a, b); }

std::vector<long> phi_poly(long n) {
  if (n < 1) throw std::invalid_argument("phi_poly requires n >= 1");
  return detail::cyclotomic_modulus(n)->phi;
}

namespace detail {

std::shared_ptr<const CyclotomicModulus> cyclotomic_modulus(long order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (order <= kTableOrders) return modulus_table()[static_cast<std::size_t>(order)];
  auto chain = phi_chain(order);
  return std::make_shared<const CyclotomicModulus>(CyclotomicModulus{order, std::move(chain.back())});
}

}  // namespace detail

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

Cyclotomic::Cyclotomic(Rational value)
    : mod_(detail::cyclotomic_modulus(1)), c_{std::move(value)} {}

Cyclotomic::Cyclotomic(std::shared_ptr<const detail::CyclotomicModulus> mod, std::vector<Rational> c)
    : mod_(std::move(mod)), c_(std::move(c)) {}

std::vector<Rational> Cyclotomic::reduce(const detail::CyclotomicModulus& mod, std::vector<Rational> poly) {
  const std::size_t deg = mod.degree();
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (mod.phi[j] != 0) poly[i - deg + j] -= c * mod.phi[j];
    }
  }
  poly.resize(deg);
  return poly;
}

Cyclotomic Cyclotomic::from_powers(long order, const std::vector<Rational>& powers) {
  auto mod = detail::cyclotomic_modulus(order);
  // Fold exponents modulo N first so arbitrary-length input stays cheap.
  std::vector<Rational> poly(static_cast<std::size_t>(order));
  for (std::size_t j = 0; j < powers.size(); ++j) poly[j % poly.size()] += powers[j];
  if (poly.size() < mod->degree()) poly.resize(mod->degree());
  auto c = reduce(*mod, std::move(poly));
  return Cyclotomic(std::move(mod), std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(long order, long k) {
  std::vector<Rational> powers(static_cast<std::size_t>(order));
  powers[static_cast<std::size_t>(positive_mod(k, order))] = 1;
  return from_powers(order, powers);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (sgn(c_[j]) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::embed(long m) const {
  if (m < 1 || m % order() != 0) {
    throw std::invalid_argument("cannot embed order " + std::to_string(order()) + " into order " +
                                std::to_string(m));
  }
  if (m == order()) return *this;
  auto mod = detail::cyclotomic_modulus(m);
  const auto step = static_cast<std::size_t>(m / order());
  if (is_rational()) {
    std::vector<Rational> c(mod->degree());
    c[0] = c_[0];
    return Cyclotomic(std::move(mod), std::move(c));
  }
  std::vector<Rational> poly((c_.size() - 1) * step + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
  if (poly.size() < mod->degree()) poly.resize(mod->degree());
  auto c = reduce(*mod, std::move(poly));
  return Cyclotomic(std::move(mod), std::move(c));
}

std::optional<Cyclotomic> Cyclotomic::descend(long m) const {
  if (m < 1 || order() % m != 0) {
    throw std::invalid_argument("descend target must divide the order");
  }
  if (m == order()) return *this;
  if (is_rational()) return Cyclotomic::from_powers(m, {c_[0]});
  // Solve sum_j y_j embed(zeta_m^j) = *this over Q by Gauss-Jordan.
  const std::size_t rows = c_.size();
  const auto cols = static_cast<std::size_t>(euler_phi(m));
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    const auto basis = Cyclotomic::root_of_unity(m, static_cast<long>(j)).embed(order());
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = basis.c_[i];
  }
  for (std::size_t i = 0; i < rows; ++i) a[i][cols] = c_[i];
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(a[i][cols]) != 0) return std::nullopt;
  }
  std::vector<Rational> y(cols);
  for (std::size_t i = 0; i < r; ++i) y[pivot_cols[i]] = a[i][cols];
  return Cyclotomic::from_powers(m, y);
}

Cyclotomic Cyclotomic::galois(long a) const {
  const long n = order();
  const long am = positive_mod(a, n);
  if (std::gcd(am, n) != 1) throw std::invalid_argument("galois exponent must be coprime to the order");
  if (is_rational()) return *this;
  std::vector<Rational> poly(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    poly[static_cast<std::size_t>((static_cast<long>(j) * am) % n)] += c_[j];
  }
  return Cyclotomic(mod_, reduce(*mod_, std::move(poly)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) {
    Cyclotomic out = *this;
    out.c_[0] = 1 / c_[0];
    return out;
  }
  // x^-1 = (product of the other conjugates) / norm(x).
  const long n = order();
  Cyclotomic others(Rational(1));
  for (long a = 2; a < n; ++a) {
    if (std::gcd(a, n) == 1) others *= galois(a);
  }
  const auto norm = (*this * others).as_rational();
  if (!norm) throw std::logic_error("cyclotomic norm is not rational");
  others *= Cyclotomic(1 / *norm);
  return others;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result = Cyclotomic(Rational(1)).embed(order());
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  const double n = static_cast<double>(order());
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    z += c_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const auto& c = c_[j];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    if (j == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << order();
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::string Cyclotomic::key() const {
  std::string out = std::to_string(order());
  for (const auto& c : c_) {
    out += ',';
    out += c.get_str(36);
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

std::vector<Rational> Cyclotomic::align(const Cyclotomic& o) {
  if (o.order() == order()) return o.c_;
  if (o.c_.size() == 1) {
    // o is rational (orders 1 and 2 have degree-one moduli).
    std::vector<Rational> c(c_.size());
    c[0] = o.c_[0];
    return c;
  }
  if (c_.size() == 1 && o.order() % order() == 0) {
    std::vector<Rational> c(o.c_.size());
    c[0] = c_[0];
    mod_ = o.mod_;
    c_ = std::move(c);
    return o.c_;
  }
  const long m = lcm_order(order(), o.order());
  if (m != order()) *this = embed(m);
  return o.order() == m ? o.c_ : o.embed(m).c_;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const auto oc = align(o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += oc[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  const auto oc = align(o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= oc[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const auto oc = align(o);
  const bool self_rational = is_rational();
  const bool other_rational = [&] {
    for (std::size_t j = 1; j < oc.size(); ++j) {
      if (sgn(oc[j]) != 0) return false;
    }
    return true;
  }();
  if (other_rational) {
    for (auto& x : c_) {
      if (sgn(x) != 0) x *= oc[0];
    }
    return *this;
  }
  if (self_rational) {
    const Rational s = c_[0];
    c_ = oc;
    for (auto& x : c_) {
      if (sgn(x) != 0) x *= s;
    }
    return *this;
  }
  std::vector<Rational> poly(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < oc.size(); ++j) {
      if (sgn(oc[j]) != 0) poly[i + j] += c_[i] * oc[j];
    }
  }
  c_ = reduce(*mod_, std::move(poly));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  const long m = lcm_order(a.order(), b.order());
  return a.embed(m).c_ == b.embed(m).c_;
}

}  // namespace vvmf
