#include "vvmf/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  std::string cleaned(text);
  if (cleaned.front() == '+') cleaned.erase(0, 1);
  Rational r;
  if (r.set_str(cleaned, 10) != 0) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) {
    throw InconsistentData("expected a machine integer, got " + to_string(r));
  }
  return r.get_num().get_si();
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

}  // namespace vvmf
