// One PASS/FAIL line per acceptance criterion. Exit status is 0 when every
// criterion passes or fails only in a recorded known way.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "examples.hpp"
#include "vvmf/bundle.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/wpline.hpp"
#include "vvmf_cli/app.hpp"
#include "vvmf_cli/descriptor.hpp"

using namespace vvmf;
using nlohmann::json;
namespace ex = vvmf::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    else if (detail.size() < 400) detail += "; " + what;
    pass = false;
  }
};

std::string data(const std::string& name) { return std::string(VVMF_DATA_DIR) + "/" + name; }

json load(const std::string& name) {
  std::ifstream f(data(name));
  if (!f) throw std::runtime_error("cannot open " + data(name));
  return json::parse(f);
}

// Monomials E4^a E6^b of weight k.
long monomials(long k) {
  if (k < 0) return 0;
  long n = 0;
  for (long a = 0; 4 * a <= k; ++a) n += (k - 4 * a) % 6 == 0;
  return n;
}

long free_module_dim(const std::vector<long>& weights, long k) {
  long n = 0;
  for (long w : weights) n += monomials(k - w);
  return n;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

std::string join(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return "{" + s + "}";
}

ClassFlags certified_flags(const Repn& r) { return classify(r); }

Outcome two_dim_table() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& row : ex::two_dim_table()) {
    const std::string tag = "(" + std::to_string(row.k1) + "," + std::to_string(row.k2) + ")";
    const cli::Descriptor d =
        cli::parse_descriptor(load("row_" + std::to_string(row.k1) + "_" + std::to_string(row.k2) + ".json"));
    const Repn& r = d.rep;
    o.require(r.trace_R(1) == row.trace_R && r.trace_R(2) == row.trace_R2, tag + " traces of R");
    const ExponentChoice L = standard_exponents(r);
    o.require(L.trace == row.trace_L, tag + " Tr L");
    const GeneratorWeights g = generator_weights(r, certified_flags(r));
    if (!g.determined()) {
      o.require(false, tag + " undetermined");
      continue;
    }
    o.require(g.weights == std::vector<long>{row.k1, row.k2}, tag + " weights " + join(g.weights));
    const Rational six_tr = row.trace_L * 6;
    for (long k = -20; k <= 40; ++k) {
      const SplittingType s = splitting(g, k);
      const std::vector<long> want{to_long(k - six_tr + 1), to_long(k - six_tr - 1)};
      o.require(s.summands == want, tag + " splitting at k=" + std::to_string(k));
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "9 rows, " + std::to_string(t).substr(0, 5) + " s";
  return o;
}

Outcome s7_example() {
  Outcome o;
  const cli::Descriptor d = cli::parse_descriptor(load("s7.json"));
  const Repn& r = d.rep;
  o.require(r.dim() == 6, "dimension");
  o.require(standard_exponents(r).trace == ratio(5, 2), "Tr L");
  const GeneratorWeights g = generator_weights(r, certified_flags(r));
  o.require(g.determined() && g.weights == std::vector<long>{2, 4, 4, 6, 6, 8}, "weights " + join(g.weights));
  if (g.determined()) {
    for (long k = -10; k <= 30; ++k) {
      const std::vector<long> want{k - 2, k - 4, k - 4, k - 6, k - 6, k - 8};
      o.require(splitting(g, k).summands == want, "splitting at k=" + std::to_string(k));
    }
  }
  if (o.pass) o.detail = "Tr L = 5/2, weights " + join(g.weights);
  return o;
}

Outcome gamma2() {
  Outcome o;
  const cli::Descriptor d = cli::parse_descriptor(load("gamma2.json"));
  const ClassFlags f = certified_flags(d.rep);
  const GeneratorWeights g = subgroup_generators(d.rep, f);
  const std::vector<long> want{0, 2, 2, 4, 4, 6};
  o.require(g.determined() && g.weights == want, "weights " + join(g.weights));
  const DimReport rep = dims(d.rep, f, 2, 40);
  for (const auto& e : rep.entries) {
    if (e.k % 2 != 0) continue;
    const long oracle = free_module_dim(want, e.k);
    o.require(e.modular.value && *e.modular.value == e.k / 2 + 1, "dim at k=" + std::to_string(e.k));
    o.require(oracle == e.k / 2 + 1, "monomial count at k=" + std::to_string(e.k));
  }
  if (o.pass) o.detail = "weights " + join(g.weights) + ", dims k/2+1 for even 2..40";
  return o;
}

Outcome gamma_n() {
  Outcome o;
  for (long n : {1L, 2L, 3L, 4L, 6L, 12L}) {
    const Repn r = n == 1 ? Repn::character(0) : cli::parse_descriptor(load("gamma_n" + std::to_string(n) + ".json")).rep;
    std::vector<long> want;
    for (long i = 0; i < n; ++i) want.push_back(12 * i / n);
    const GeneratorWeights g = generator_weights(r, certified_flags(r));
    o.require(g.determined() && g.weights == want, "n=" + std::to_string(n) + " weights " + join(g.weights));
    // eta^{24i/n} times C[E4, E6]
    for (long k = 0; k <= 30 && g.determined(); ++k) {
      const DimReport dr = dims(r, certified_flags(r), k, k);
      o.require(dr.entries[0].modular.value == free_module_dim(want, k),
                "n=" + std::to_string(n) + " dim at k=" + std::to_string(k));
    }
  }
  if (o.pass) o.detail = "n = 1, 2, 3, 4, 6, 12";
  return o;
}

Outcome characters() {
  Outcome o;
  const WeightedLine w;
  for (long a = 0; a < 12; ++a) {
    const Repn c = Repn::character(a);
    const ClassFlags f = certified_flags(c);
    const DimReport d = dims(c, f, -10, 100);
    const DimReport shifted = dims(c, f, -22, 88);
    for (long t : {0L, 1L}) {
      const ExponentChoice L = choose_exponents(c.t_spectrum(), {ratio(a, 12) + t, IntervalKind::ClosedOpen});
      for (long k = -10; k <= 100; ++k) {
        const std::string at = "a=" + std::to_string(a) + " t=" + std::to_string(t) + " k=" + std::to_string(k);
        const long n = k - a - 12 * t;
        const BundleSpec b{c, k, L};
        o.require(det_twist(b) == n, at + " degree");
        o.require(euler_char(b) == euler_line(w, n), at + " euler");
        o.require(h0(w, n) == monomials(n), at + " h0");
        // Sections with exponent a/12 + t are forms of weight k whose
        // q-expansion starts at q^{a/12 + t}: Delta^t M_{k-12t}(chi^a).
        const auto& e = t == 0 ? d.entries[static_cast<std::size_t>(k + 10)]
                               : shifted.entries[static_cast<std::size_t>(k + 10)];
        o.require(e.modular.value && *e.modular.value == monomials(n), at + " dim");
      }
    }
  }
  if (o.pass) o.detail = "a = 0..11, t = 0, 1, k = -10..100";
  return o;
}

// Multiplicity of e(s/m) as an eigenvalue of g, from floating point traces of
// its powers, with removed characters subtracted.
std::vector<long> float_eig_mults(const Repn& r, const CycMatrix& g, long m, long char_exp) {
  using cd = std::complex<double>;
  std::vector<cd> tr;
  CycMatrix p = CycMatrix::identity(g.rows(), g.order());
  for (long j = 0; j < m; ++j) {
    cd t = p.trace().to_complex();
    for (long a : r.removed()) t -= std::polar(1.0, 2 * M_PI * static_cast<double>(char_exp * a * j) / 12);
    tr.push_back(t);
    p = p * g;
  }
  std::vector<long> out;
  for (long s = 0; s < m; ++s) {
    cd sum = 0;
    for (long j = 0; j < m; ++j) {
      sum += tr[static_cast<std::size_t>(j)] *
             std::polar(1.0, -2 * M_PI * static_cast<double>(s * j) / static_cast<double>(m));
    }
    out.push_back(std::lround(sum.real() / static_cast<double>(m)));
  }
  return out;
}

Outcome corpus_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  const WeightedLine w;
  for (long k = -200; k <= 200; ++k) {
    o.require(h0(w, k) == h1(w, -k - 10) && h0(w, k) == monomials(k), "Serre at k=" + std::to_string(k));
  }
  const auto items = ex::corpus(200, 7);
  for (const auto& item : items) {
    const Repn& r = item.rep;
    const std::string& n = item.name;
    GeneratorWeights g;
    try {
      g = generator_weights(r, item.flags);
    } catch (const std::exception& e) {
      o.require(false, n + ": " + e.what());
      continue;
    }
    if (!g.determined()) {
      o.require(false, n + ": undetermined");
      continue;
    }
    long sum = 0;
    for (long k : g.weights) sum += k;
    o.require(Rational(sum) == standard_exponents(r).trace * 12, n + ": sum of weights");

    const auto alpha = float_eig_mults(r, r.S(), 4, 9);
    const auto beta = float_eig_mults(r, r.R(), 6, 10);
    for (long s = 0; s < 4; ++s) {
      const auto c = std::count_if(g.weights.begin(), g.weights.end(), [&](long k) { return mod(k, 4) == mod(-s, 4); });
      o.require(c == alpha[static_cast<std::size_t>(s)], n + ": mod 4 count");
    }
    for (long t = 0; t < 6; ++t) {
      const auto c = std::count_if(g.weights.begin(), g.weights.end(), [&](long k) { return mod(k, 6) == mod(-t, 6); });
      o.require(c == beta[static_cast<std::size_t>(t)], n + ": mod 6 count");
    }

    for (long k = 2; k <= 60; ++k) {
      long expect = 0;
      for (long kj : g.weights) expect += euler_line(w, k - kj);
      try {
        o.require(euler_char(modular_bundle(r, k)) == expect, n + ": euler at k=" + std::to_string(k));
      } catch (const std::exception& e) {
        o.require(false, n + ": " + e.what());
      }
    }

    std::vector<long> cusp_dual;
    for (long kj : g.weights) cusp_dual.push_back(12 - kj);
    const DimReport d = dims(dual(r), item.flags, -2, 24);
    for (const auto& e : d.entries) {
      o.require(e.cusp.value && *e.cusp.value == free_module_dim(cusp_dual, e.k),
                n + ": dual cusp dim at k=" + std::to_string(e.k));
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(items.size()) + " items, " + std::to_string(t).substr(0, 5) + " s";
  return o;
}

// prod (1 - q^n)^p with integer arithmetic.
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

Outcome qseries_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::size_t K = 200;
  for (const auto& c : run_identity_suite(K)) o.require(c.passed, c.name);

  const QExp d = delta(K);
  const auto prod = product_power(K, 24);
  o.require(d.lead() == 1, "Delta lead");
  for (std::size_t m = 0; m + 1 < K; ++m) o.require(d[m] == Rational(prod[m]), "Delta coefficient " + std::to_string(m));

  const QExp e24 = eta(K).pow(24);
  for (std::size_t m = 0; m < std::min(e24.order(), d.order()); ++m) o.require(e24[m] == d[m], "eta^24");

  const Gamma2Basis basis = gamma2_basis(K);
  o.require(basis.f1.lead() == 0 && basis.f2.lead() == ratio(1, 2), "basis lead exponents");
  const QExp wr = wronskian({basis.f1, basis.f2}, 2);
  const QExp eta12 = eta(K).pow(12);
  o.require(wr.lead() == eta12.lead(), "Wronskian lead");
  const Rational c = wr[0] / eta12[0];
  o.require(c != 0, "c = 0");
  const std::size_t n = std::min(wr.order(), eta12.order());
  for (std::size_t m = 0; m < n; ++m) o.require(wr[m] == c * eta12[m], "W residual at " + std::to_string(m));
  o.require(n >= 150, "Wronskian precision " + std::to_string(n));

  const double t = seconds_since(t0);
  o.require(t < 10.0, "runtime " + std::to_string(t) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << "order " << K << ", c = " << c.get_str() << ", " << std::to_string(t).substr(0, 5) << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome weight_one_honesty() {
  Outcome o;
  for (const auto& row : ex::two_dim_table()) {
    if (!row.odd()) continue;
    const std::string tag = "(" + std::to_string(row.k1) + "," + std::to_string(row.k2) + ")";
    const Repn r = ex::two_dim(row);
    const YValue y = resolve_y(r, certified_flags(r));
    std::ostringstream got;
    got << tag << " y = ";
    if (y.exact()) got << y.lo;
    else got << "[" << y.lo << ", " << (y.hi ? std::to_string(*y.hi) : "inf") << "]";
    got << " by " << to_string(y.source);
    o.require(y.exact() && y.lo == 0 && y.source == YSource::Pinning, got.str());
  }

  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"weights", data("weight_one_ambiguous.json")}, in, out, err);
  o.require(code == cli::kExitUndetermined, "ambiguous case exit status " + std::to_string(code));
  o.require(out.str().find("weights:") == std::string::npos, "ambiguous case printed weights");
  if (o.pass) o.detail = "odd rows pinned to 0, ambiguous case exits 3";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

// Criteria whose literal statement is contradicted by the mathematics; the
// line still reads FAIL.
const std::map<int, const char*> kKnownFailures{
    {8, "the (9,11) row has y = dim S_1(dual) = 1 since its dual has a weight-1 cusp generator, and pinning "
        "alone leaves [0, 1] for (5,7)"},
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "two-dimensional table", two_dim_table},
      {2, "S7 example", s7_example},
      {3, "Gamma(2) coset action", gamma2},
      {4, "Gamma_n family", gamma_n},
      {5, "characters", characters},
      {6, "randomized structural suite", corpus_suite},
      {7, "q-series identities", qseries_suite},
      {8, "weight-one honesty", weight_one_honesty},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto known = kKnownFailures.find(c.id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail;
    if (!o.pass && known != kKnownFailures.end()) std::cout << " [known: " << known->second << "]";
    std::cout << std::endl;
    if (o.pass == (known != kKnownFailures.end())) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
