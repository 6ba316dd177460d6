#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/rational.hpp"

namespace vvmf {

// Coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<long> phi_poly(long n);

// Euler's totient.
long euler_phi(long n);

namespace detail {

// Reduction data for Q[X]/Phi_N. Shared by every element of one order.
struct CyclotomicModulus {
  long order;
  std::vector<long> phi;  // monic, degree = euler_phi(order)

  std::size_t degree() const { return phi.size() - 1; }
};

std::shared_ptr<const CyclotomicModulus> cyclotomic_modulus(long order);

}  // namespace detail

// Exact element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored as its residue
// modulo Phi_N in the power basis 1, zeta, ..., zeta^(phi(N)-1). Binary
// operations promote both operands to the lcm of their orders.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational value);  // NOLINT(google-explicit-constructor)

  // sum_j powers[j] zeta_N^j, reduced modulo Phi_N. Any length is accepted.
  static Cyclotomic from_powers(long order, const std::vector<Rational>& powers);
  // zeta_N^k for any integer k.
  static Cyclotomic root_of_unity(long order, long k = 1);

  long order() const { return mod_->order; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  // Same value viewed in Q(zeta_M); requires order() | M.
  Cyclotomic embed(long m) const;
  // Inverse of embed when the value lies in Q(zeta_M), M | order().
  std::optional<Cyclotomic> descend(long m) const;
  // zeta_N -> zeta_N^a for gcd(a, N) = 1.
  Cyclotomic galois(long a) const;
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  // Display only; never used for decisions.
  std::complex<double> to_complex() const;
  std::string to_string() const;
  // Stable text key for hashing; equal values of equal order give equal keys.
  std::string key() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::shared_ptr<const detail::CyclotomicModulus> mod, std::vector<Rational> c);

  // Brings *this and o to a common order; returns o's coefficients in that order.
  std::vector<Rational> align(const Cyclotomic& o);
  static std::vector<Rational> reduce(const detail::CyclotomicModulus& mod,
                                      std::vector<Rational> poly);

  std::shared_ptr<const detail::CyclotomicModulus> mod_;
  std::vector<Rational> c_;
};

long lcm_order(long a, long b);

}  // namespace vvmf
