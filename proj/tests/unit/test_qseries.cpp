#include <doctest.h>

#include "vvmf/qseries.hpp"

using namespace vvmf;

namespace {

// prod_{n>=1} (1 - q^n)^p by repeated multiplication with integers.
std::vector<Integer> product_power(std::size_t K, int p) {
  std::vector<Integer> c(K);
  c[0] = 1;
  for (std::size_t n = 1; n < K; ++n) {
    for (int e = 0; e < p; ++e) {
      for (std::size_t m = K - 1; m >= n; --m) c[m] -= c[m - n];
    }
  }
  return c;
}

Integer sigma(long n, int p) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) {
      Integer t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(p));
      s += t;
    }
  }
  return s;
}

// Pentagonal number theorem.
std::vector<long> euler_function(std::size_t K) {
  std::vector<long> c(K);
  for (long k = -40; k <= 40; ++k) {
    const long g = k * (3 * k - 1) / 2;
    if (g >= 0 && g < static_cast<long>(K)) c[static_cast<std::size_t>(g)] = k % 2 == 0 ? 1 : -1;
  }
  return c;
}

Rational pochhammer(const Rational& a, long n) {
  Rational p = 1;
  for (long i = 0; i < n; ++i) p *= a + i;
  return p;
}

Rational factorial(long n) { return n <= 1 ? Rational(1) : factorial(n - 1) * n; }

}  // namespace

TEST_CASE("eta and Delta") {
  const std::size_t K = 60;
  const QExp e = eta(K);
  CHECK(e.lead() == ratio(1, 24));
  const auto pent = euler_function(K);
  for (std::size_t m = 0; m < K; ++m) CHECK(e[m] == pent[m]);

  const QExp d = delta(K);
  CHECK(d.lead() == 1);
  const auto oracle = product_power(K, 24);
  for (std::size_t m = 0; m < K; ++m) CHECK(d[m] == Rational(oracle[m]));
  CHECK(d[0] == 1);
  CHECK(d[1] == -24);
  CHECK(d[2] == 252);
  CHECK(d[3] == -1472);
}

TEST_CASE("Eisenstein series from divisor sums") {
  const std::size_t K = 40;
  const QExp e2 = eisenstein(2, K), e4 = eisenstein(4, K), e6 = eisenstein(6, K);
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  for (long n = 1; n < static_cast<long>(K); ++n) {
    const auto m = static_cast<std::size_t>(n);
    CHECK(e2[m] == Rational(-24 * sigma(n, 1)));
    CHECK(e4[m] == Rational(240 * sigma(n, 3)));
    CHECK(e6[m] == Rational(-504 * sigma(n, 5)));
  }
  const QExp lhs = Rational(1728) * delta(K);
  const QExp rhs = (e4.pow(3) - e6.pow(2)).normalize();
  CHECK(rhs.lead() == 1);
  for (std::size_t m = 0; m < rhs.order(); ++m) CHECK(lhs[m] == rhs[m]);
}

TEST_CASE("series arithmetic") {
  const QExp a(ratio(1, 2), {Rational(1), Rational(2), Rational(3)});
  const QExp b(ratio(1, 2), {Rational(0), Rational(1)});
  const QExp s = a + b;
  CHECK(s.lead() == ratio(1, 2));
  CHECK(s.order() == 2);  // b is known to absolute precision 5/2
  CHECK(s[1] == 3);
  CHECK((a * a.invert()).truncate(3).coeffs() == std::vector<Rational>{1, 0, 0});
  CHECK(a.invert().lead() == ratio(-1, 2));
  CHECK(b.normalize().lead() == ratio(3, 2));
  CHECK_THROWS(QExp(ratio(1, 5), {Rational(1)}));
  CHECK_THROWS(b.invert());
  // Leads in different classes mod 1 cannot be added.
  CHECK_THROWS(QExp(ratio(1, 3), {Rational(1)}) + QExp(Rational(0), {Rational(1)}));
}

TEST_CASE("fractional powers follow the binomial series") {
  const std::size_t K = 25;
  std::vector<Rational> c(K);
  c[0] = 4;
  c[1] = 4;  // 4 (1 + q)
  const QExp f(Rational(0), c);
  for (const Rational& alpha : {ratio(1, 2), ratio(-1, 6), ratio(1, 3), Rational(3)}) {
    const FracPow p = frac_pow(f, alpha);
    CHECK(p.tag_base == 4);
    CHECK(p.tag_exponent == alpha);
    for (long n = 0; n < static_cast<long>(K); ++n) {
      // binom(alpha, n)
      Rational b = 1;
      for (long i = 0; i < n; ++i) b *= (alpha - i) / (i + 1);
      CHECK(p.series[static_cast<std::size_t>(n)] == b);
    }
  }
  const QExp u = j_inverse(30);
  const QExp cube = frac_pow(u, ratio(1, 3)).series.pow(3);
  CHECK(cube.lead() == 1);
  for (std::size_t m = 0; m < cube.order(); ++m) CHECK(cube[m] == u[m] / u[0]);
}

TEST_CASE("modular derivative") {
  const std::size_t K = 100;
  CHECK(modular_derivative(QExp::constant(Rational(1), K), 0).is_zero());
  const QExp d = modular_derivative(eisenstein(4, K), 4);
  const QExp e6 = eisenstein(6, K);
  for (std::size_t m = 0; m < K; ++m) CHECK(d[m] == -e6[m] / 3);
  // Leading term of D_2 on q^(1/2)(1 + ...) is (1/2 - 2/12) = 1/3.
  const QExp g(ratio(1, 2), {Rational(1), Rational(5), Rational(-2)});
  CHECK(modular_derivative(g, 2)[0] == ratio(1, 3));
  // D_k(Delta) = 0 for k = 12.
  CHECK(modular_derivative(delta(K), 12).is_zero());
  CHECK(modular_derivative_iter(eisenstein(4, K), 4, 2).coeffs() ==
        modular_derivative(modular_derivative(eisenstein(4, K), 4), 6).coeffs());
}

TEST_CASE("Wronskian") {
  const std::size_t K = 40;
  const QExp f = eisenstein(4, K);
  CHECK(wronskian({f}, 4).coeffs() == f.coeffs());
  CHECK(wronskian({f, Rational(2) * f}, 4).is_zero());
  CHECK_THROWS(wronskian({f, f.truncate(10)}, 4));
}

TEST_CASE("1728/j and the hypergeometric series") {
  const std::size_t K = 40;
  const QExp u = j_inverse(K);
  CHECK(u.lead() == 1);
  CHECK(u[0] == 1728);
  const QExp lhs = u * eisenstein(4, K).pow(3);
  const QExp rhs = Rational(1728) * delta(K);
  for (std::size_t m = 0; m < K; ++m) CHECK(lhs[m] == rhs[m]);

  CHECK(hyp2f1(ratio(1, 3), ratio(2, 3), ratio(3, 2), QExp::zero(K), K).coeffs() ==
        QExp::constant(Rational(1), K).coeffs());
  std::vector<Rational> qc(K);
  qc[0] = 1;
  const QExp q(Rational(1), qc);
  const Rational a = ratio(-1, 6), b = ratio(1, 6), c = ratio(1, 2);
  const QExp h = hyp2f1(a, b, c, q, K);
  for (long n = 0; n < static_cast<long>(K); ++n) {
    CHECK(h[static_cast<std::size_t>(n)] == pochhammer(a, n) * pochhammer(b, n) / (pochhammer(c, n) * factorial(n)));
  }
  CHECK(hyp2f1(b, a, c, u, K).coeffs() == hyp2f1(a, b, c, u, K).coeffs());
  CHECK_THROWS(hyp2f1(a, b, Rational(-2), q, K));
  CHECK_THROWS(hyp2f1(a, b, c, eisenstein(4, K), K));
}

TEST_CASE("Gamma(2) basis and its Wronskian") {
  const std::size_t K = 80;
  const Gamma2Basis basis = gamma2_basis(K);
  CHECK(basis.f1.lead() == 0);
  CHECK(basis.f2.lead() == ratio(1, 2));
  CHECK(basis.f1[0] == 1);
  const QExp w = wronskian({basis.f1, basis.f2}, 2);
  const QExp eta12 = eta(K).pow(12);
  CHECK(w.lead() == eta12.lead());
  // Pinned from the first computation: W = (1/2) eta^12.
  for (std::size_t m = 0; m < std::min(w.order(), eta12.order()); ++m) CHECK(w[m] == eta12[m] / 2);
}

TEST_CASE("identity suite") {
  for (const auto& c : run_identity_suite(60)) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
}
