#include "vvmf/spectrum.hpp"

#include <algorithm>
#include <tuple>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

bool entry_less(const SpectrumEntry& a, const SpectrumEntry& b) {
  if (a.rotation != b.rotation) return a.rotation < b.rotation;
  if (a.parity != b.parity) return a.parity == Parity::Even;
  return a.block < b.block;
}

bool same_key(const SpectrumEntry& a, const SpectrumEntry& b) {
  return a.rotation == b.rotation && a.parity == b.parity && a.block == b.block;
}

Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

// Trace of a*b without forming the product.
Cyclotomic trace_of_product(const CycMatrix& a, const CycMatrix& b) {
  Cyclotomic t = Cyclotomic(0).embed(lcm_order(a.order(), b.order()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      const auto& y = b(k, i);
      if (!x.is_zero() && !y.is_zero()) t += x * y;
    }
  }
  return t;
}

int to_count(const Cyclotomic& c, const char* what) {
  const auto r = c.as_rational();
  if (!r || !is_integer(*r) || sgn(*r) < 0) {
    throw InconsistentData(std::string(what) + " is not a nonnegative integer: " + c.to_string());
  }
  return static_cast<int>(to_long(*r));
}

}  // namespace

TSpectrum::TSpectrum(std::vector<SpectrumEntry> entries) {
  for (auto& e : entries) {
    if (e.block < 1 || e.mult < 0) throw std::invalid_argument("spectrum entries need block >= 1 and mult >= 0");
    if (sgn(e.rotation) < 0 || e.rotation >= 1) {
      throw std::invalid_argument("rotation must lie in [0,1): " + to_string(e.rotation));
    }
  }
  std::sort(entries.begin(), entries.end(), entry_less);
  for (auto& e : entries) {
    if (e.mult == 0) continue;
    if (!entries_.empty() && same_key(entries_.back(), e)) {
      entries_.back().mult += e.mult;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

int TSpectrum::dim() const {
  int d = 0;
  for (const auto& e : entries_) d += e.block * e.mult;
  return d;
}

int TSpectrum::dim(Parity p) const {
  int d = 0;
  for (const auto& e : entries_) {
    if (e.parity == p) d += e.block * e.mult;
  }
  return d;
}

bool TSpectrum::has_rotation(const Rational& r) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.rotation == r; });
}

TSpectrum TSpectrum::without(const Rational& rotation, Parity p) const {
  auto entries = entries_;
  for (auto& e : entries) {
    if (e.rotation == rotation && e.parity == p && e.block == 1) {
      --e.mult;
      return TSpectrum(std::move(entries));
    }
  }
  throw InconsistentData("cannot remove eigenvalue with rotation " + to_string(rotation) +
                         " from the T-spectrum");
}

TSpectrum spectrum_union(const TSpectrum& a, const TSpectrum& b) {
  auto entries = a.entries();
  entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return TSpectrum(std::move(entries));
}

TSpectrum spectrum_dual(const TSpectrum& s) {
  auto entries = s.entries();
  for (auto& e : entries) e.rotation = frac(-e.rotation);
  return TSpectrum(std::move(entries));
}

TSpectrum spectrum_twist(const TSpectrum& s, long a) {
  auto entries = s.entries();
  const Rational shift = ratio(a, 12);
  for (auto& e : entries) {
    e.rotation = frac(e.rotation + shift);
    if (a % 2 != 0) e.parity = flip(e.parity);
  }
  return TSpectrum(std::move(entries));
}

TSpectrum compute_t_spectrum(const CycMatrix& S, const CycMatrix& T, long cap) {
  if (!T.square() || S.rows() != T.rows()) throw std::invalid_argument("S and T must be square of equal size");
  const std::size_t d = T.rows();
  if (d == 0) return TSpectrum();
  const CycMatrix S2 = S * S;
  const Cyclotomic dim(static_cast<long>(d));

  // traces[j] = Tr T^j, parity_traces[j] = Tr S^2 T^j
  std::vector<Cyclotomic> traces{dim};
  std::vector<Cyclotomic> parity_traces{S2.trace()};
  CycMatrix power = T;
  long n = 0;
  bool semisimple = false;
  for (long m = 1; m <= cap; ++m) {
    if (power.trace() == dim) {
      if (power.is_identity()) {
        n = m;
        semisimple = true;
        break;
      }
      const CycMatrix nil = power - CycMatrix::identity(d, power.order());
      if (nil.pow(static_cast<long>(d)).is_zero()) {
        n = m;
        break;
      }
    }
    traces.push_back(power.trace());
    parity_traces.push_back(trace_of_product(S2, power));
    power = power * T;
  }
  if (n == 0) {
    throw NotQuasiUnipotent("no power T^n with n <= " + std::to_string(cap) + " is unipotent");
  }

  // Algebraic multiplicity of zeta_n^m in each parity part, by a discrete
  // Fourier transform of the projected traces. Valid because every
  // eigenvalue satisfies lambda^n = 1.
  const long field = lcm_order(lcm_order(T.order(), S.order()), n);
  std::vector<SpectrumEntry> out;
  for (long m = 0; m < n; ++m) {
    for (const Parity p : {Parity::Even, Parity::Odd}) {
      Cyclotomic sum = Cyclotomic(0).embed(field);
      for (long j = 0; j < n; ++j) {
        const auto& pt = parity_traces[static_cast<std::size_t>(j)];
        const Cyclotomic projected =
            p == Parity::Even ? traces[static_cast<std::size_t>(j)] + pt : traces[static_cast<std::size_t>(j)] - pt;
        sum += Cyclotomic::root_of_unity(n, -m * j) * projected;
      }
      sum *= Cyclotomic(ratio(1, 2 * n));
      const int mult = to_count(sum, "eigenvalue multiplicity");
      if (mult == 0) continue;
      const Rational rotation = ratio(m, n);
      if (semisimple) {
        out.push_back({rotation, 1, p, mult});
        continue;
      }
      // Jordan structure from ranks of (T - lambda)^k restricted to the
      // parity part: r_{k-1} - r_k counts blocks of size >= k.
      const CycMatrix sign = p == Parity::Even ? S2 : -S2;
      const CycMatrix proj = Cyclotomic(ratio(1, 2)) * (CycMatrix::identity(d, S2.order()) + sign);
      const CycMatrix shifted = T - CycMatrix::scalar(d, Cyclotomic::root_of_unity(n, m));
      std::vector<long> ranks{static_cast<long>(proj.rank())};
      CycMatrix acc = proj;
      while (true) {
        acc = shifted * acc;
        ranks.push_back(static_cast<long>(acc.rank()));
        if (ranks.back() == ranks[ranks.size() - 2]) break;
      }
      // ranks[k] for k = 0..K, stable from K-1 on.
      for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
        const long at_least_k = ranks[k - 1] - ranks[k];
        const long at_least_next = ranks[k] - ranks[k + 1];
        const long exactly = at_least_k - at_least_next;
        if (exactly > 0) out.push_back({rotation, static_cast<int>(k), p, static_cast<int>(exactly)});
      }
    }
  }
  TSpectrum spec(std::move(out));
  if (spec.dim() != static_cast<int>(d)) throw InconsistentData("T-spectrum does not account for every dimension");
  return spec;
}

}  // namespace vvmf
