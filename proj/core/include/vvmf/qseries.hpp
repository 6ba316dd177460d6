#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/rational.hpp"

namespace vvmf {

inline constexpr long kLeadDenominator = 24;
inline constexpr std::size_t kDefaultSeriesOrder = 128;

// sum_{m < K} c_m q^{e + m}, known up to (not including) q^{e + K}.
class QExp {
 public:
  // Throws std::invalid_argument if coeffs is empty or the denominator of
  // lead does not divide kLeadDenominator.
  QExp(Rational lead, std::vector<Rational> coeffs);

  static QExp constant(const Rational& c, std::size_t K);
  static QExp zero(std::size_t K) { return constant(Rational(0), K); }

  const Rational& lead() const { return lead_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  std::size_t order() const { return c_.size(); }
  const Rational& operator[](std::size_t m) const { return c_[m]; }
  bool is_zero() const;
  // Absolute precision e + K.
  Rational precision() const { return lead_ + static_cast<long>(c_.size()); }

  // Strips leading zero coefficients, moving the lead up by whole units.
  QExp normalize() const;
  QExp truncate(std::size_t K) const;

  QExp operator-() const;
  friend QExp operator+(const QExp& a, const QExp& b);
  friend QExp operator-(const QExp& a, const QExp& b);
  friend QExp operator*(const QExp& a, const QExp& b);
  friend QExp operator*(const Rational& s, const QExp& a);

  QExp pow(long n) const;
  QExp invert() const;

  std::string to_string(std::size_t terms = 6) const;

 private:
  Rational lead_;
  std::vector<Rational> c_;
};

// q^{alpha e} (1 + h)^alpha for f = c0 q^e (1 + h); the scalar c0^alpha is
// not computed and is returned symbolically as (base, exponent).
struct FracPow {
  QExp series;
  Rational tag_base;
  Rational tag_exponent;
};

FracPow frac_pow(const QExp& f, const Rational& alpha);

QExp eta(std::size_t K);
QExp delta(std::size_t K);
// E_2, E_4, E_6 normalized with constant term 1.
QExp eisenstein(int w, std::size_t K);

// D_k f = q df/dq - (k/12) E_2 f.
QExp modular_derivative(const QExp& f, long k);
// D_{k+2(r-1)} o ... o D_k.
QExp modular_derivative_iter(const QExp& f, long k, int r);

// det [D_k^r f_i], rows i, columns r = 0..d-1. All inputs must share one
// truncation order.
QExp wronskian(const std::vector<QExp>& fs, long k);

// 1728/j = 1728 Delta / E_4^3.
QExp j_inverse(std::size_t K);

// 2F1(a, b; c; z) with z of positive integral lead.
QExp hyp2f1(const Rational& a, const Rational& b, const Rational& c, const QExp& z, std::size_t K);

struct Gamma2Basis {
  QExp f1;
  QExp f2;
};

// The two weight-2 forms built from eta^4, powers of 1728/j and 2F1, with the
// irrational scalars 1728^alpha dropped.
Gamma2Basis gamma2_basis(std::size_t K);

struct SeriesCheck {
  std::string name;
  bool passed = false;
  std::optional<std::size_t> first_failure;  // coefficient index
  std::string detail;
};

// Identity suite behind `vvmf qcheck`.
std::vector<SeriesCheck> run_identity_suite(std::size_t K, unsigned seed = 12345);

}  // namespace vvmf
