#include "vvmf_cli/app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "vvmf/bundle.hpp"
#include "vvmf/errors.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/wpline.hpp"
#include "vvmf_cli/descriptor.hpp"
#include "vvmf_cli/report.hpp"

namespace vvmf::cli {

using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  bool allow_partial = false;
  long y = 0;
  CLI::Option* y_opt = nullptr;
  std::string path = "-";
  long from = 0, to = 12;
  bool cusp = false;
  long order = 0;
  long weight = 0;
  std::string wp_kind;
  long n1 = 4, n2 = 6, k = 0;
  long q_order = 200;
};

Caps caps_from_env() {
  Caps c;
  if (const char* v = std::getenv("VVMF_CAP")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 1) throw std::invalid_argument("VVMF_CAP must be a positive integer");
    c.order = n;
    c.closure = n;
  }
  return c;
}

json read_document(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return json::parse(in);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open descriptor file " + path);
  return json::parse(f);
}

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string twist_sum(const std::vector<long>& summands) {
  std::ostringstream os;
  std::size_t i = 0;
  while (i < summands.size()) {
    std::size_t j = i;
    while (j < summands.size() && summands[j] == summands[i]) ++j;
    if (i) os << " + ";
    if (j - i > 1) os << (j - i) << " ";
    os << "O(" << summands[i] << ")";
    i = j;
  }
  return os.str();
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Session {
  const Options& o;
  std::istream& in;
  std::ostream& out;
  Caps caps = caps_from_env();

  std::optional<long> user_y() const {
    if (o.y_opt && o.y_opt->count()) return o.y;
    return std::nullopt;
  }

  Descriptor load() const { return parse_descriptor(read_document(o.path, in), caps.order); }

  ClassFlags flags_for(const Descriptor& d) const { return classify(d.rep, caps.closure, d.assertions); }

  int partial(bool undetermined) const {
    return undetermined && !o.allow_partial ? kExitUndetermined : kExitOk;
  }

  int validate() {
    const Descriptor d = load();
    if (o.json) {
      print_json(out, {{"valid", true}, {"dim", d.rep.dim()}, {"descriptor_hash", d.hash}});
    } else {
      out << "valid representation of dimension " << d.rep.dim() << " (hash " << d.hash << ")\n";
    }
    return kExitOk;
  }

  int analyze() {
    const Descriptor d = load();
    const AnalyzeResult res = cli::analyze(d, flags_for(d), caps, user_y());
    if (o.json) {
      print_json(out, res.report);
      return partial(res.undetermined);
    }
    const json& r = res.report;
    const Repn& rep = d.rep;
    out << "dimension            " << rep.dim() << "\n";
    out << "Tr S^j (j=0..3)      ";
    for (long j = 0; j < 4; ++j) out << (j ? ", " : "") << rep.trace_S(j).to_string();
    out << "\nTr R^j (j=0..5)      ";
    for (long j = 0; j < 6; ++j) out << (j ? ", " : "") << rep.trace_R(j).to_string();
    const ParityData p = parity_split(rep);
    out << "\nd+ / d-              " << p.d_plus << " / " << p.d_minus << "\n";
    out << "S multiplicities     " << join(r["multiplicities"]["S"].get<std::vector<long>>()) << "\n";
    out << "R multiplicities     " << join(r["multiplicities"]["R"].get<std::vector<long>>()) << "\n";
    out << "invariants           " << r["fixed_space_dim"].get<long>() << "\n";
    out << "standard exponents   ";
    const auto& entries = r["exponents"]["standard"]["entries"];
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      out << (i ? ", " : "") << e["exponent"].get<std::string>() << e["parity"].get<std::string>();
      if (e["block"].get<int>() > 1) out << "[J" << e["block"].get<int>() << "]";
      if (e["mult"].get<int>() > 1) out << " x" << e["mult"].get<int>();
    }
    out << "\nTr L                 " << r["exponents"]["standard"]["TrL"].get<std::string>() << "\n";
    out << "min weight bound     " << r["min_weight_bound"].get<std::string>() << "\n";
    out << "finite image         "
        << (r["flags"]["finite_image"]["status"] == "certified"
                ? "order " + std::to_string(r["flags"]["finite_image"]["order"].get<long>())
                : std::string("unknown"))
        << "\n";
    out << "good / positive      " << r["flags"]["good"].get<std::string>() << " / "
        << r["flags"]["positive"].get<std::string>() << "\n";
    const auto& g = r["generator_weights"];
    if (g["determined"].get<bool>()) {
      out << "generator weights    " << join(g["weights"].get<std::vector<long>>()) << "\n";
      out << "roots                " << join(g["roots"].get<std::vector<long>>()) << "\n";
    } else {
      out << "generator weights    undetermined (weight-one dimension y in " << g["y"]["range"].dump() << ")\n";
    }
    return partial(res.undetermined);
  }

  int dims() {
    if (o.from > o.to) throw std::invalid_argument("--from must not exceed --to");
    const Descriptor d = load();
    const DimReport rep = vvmf::dims(d.rep, flags_for(d), o.from, o.to, user_y(), caps.order);
    bool undetermined = false;
    json entries = json::array();
    for (const auto& e : rep.entries) {
      const DimValue& v = o.cusp ? e.cusp : e.modular;
      undetermined = undetermined || v.status == DimStatus::Undetermined;
      entries.push_back({{"k", e.k}, {"dim", v.value ? json(*v.value) : json(nullptr)}, {"status", to_string(v.status)}});
    }
    if (o.json) {
      print_json(out, {{"descriptor_hash", d.hash}, {"kind", o.cusp ? "cusp" : "modular"}, {"entries", entries}});
    } else {
      out << std::left << std::setw(6) << "k" << std::setw(10) << (o.cusp ? "dim S_k" : "dim M_k") << "status\n";
      for (const auto& e : entries) {
        out << std::setw(6) << e["k"].get<long>() << std::setw(10)
            << (e["dim"].is_null() ? std::string("?") : std::to_string(e["dim"].get<long>()))
            << e["status"].get<std::string>() << "\n";
      }
    }
    return partial(undetermined);
  }

  int weights() {
    const Descriptor d = load();
    const GeneratorWeights g = generator_weights(d.rep, flags_for(d), user_y(), caps.order);
    if (o.json) {
      json j = weights_json(g);
      j["descriptor_hash"] = d.hash;
      print_json(out, j);
    } else if (g.determined()) {
      out << "weights: " << join(g.weights) << "\n";
      out << "roots: " << join(g.roots()) << "\n";
      if (g.conditional) out << "(conditional on positivity)\n";
    } else {
      out << "weights undetermined: y = dim S_1(dual) lies in [" << g.y.lo << ", "
          << (g.y.hi ? std::to_string(*g.y.hi) : std::string("inf")) << "]\n";
      for (const auto& row : g.rows) {
        out << "  weight " << row.weight << ": " << row.constant;
        if (row.y_coeff) out << (row.y_coeff > 0 ? " + " : " - ") << "y";
        out << "\n";
      }
    }
    return partial(!g.determined());
  }

  int hilbert() {
    const Descriptor d = load();
    const HilbertSeries h = vvmf::hilbert(d.rep, flags_for(d), o.order, user_y(), caps.order);
    if (o.json) {
      print_json(out, {{"descriptor_hash", d.hash}, {"numerator", h.numerator}, {"series", h.series}});
    } else {
      out << "numerator:";
      for (std::size_t k = 0; k < h.numerator.size(); ++k) {
        if (h.numerator[k]) out << " " << h.numerator[k] << "*X^" << k;
      }
      out << "\nseries: " << join(h.series) << "\n";
    }
    return kExitOk;
  }

  int splitting() {
    const Descriptor d = load();
    const GeneratorWeights g = generator_weights(d.rep, flags_for(d), user_y(), caps.order);
    const SplittingType s = vvmf::splitting(g, o.weight);
    if (o.json) {
      print_json(out, {{"descriptor_hash", d.hash}, {"weight", o.weight}, {"summands", s.summands}});
    } else {
      out << twist_sum(s.summands) << "\n";
    }
    return kExitOk;
  }

  int wpline() {
    const WeightedLine w(o.n1, o.n2);
    long value = 0;
    if (o.wp_kind == "h0") value = h0(w, o.k);
    else if (o.wp_kind == "h1") value = h1(w, o.k);
    else value = euler_line(w, o.k);
    if (o.json) {
      print_json(out, {{"n1", o.n1}, {"n2", o.n2}, {"k", o.k}, {o.wp_kind, value}});
    } else {
      out << value << "\n";
    }
    return kExitOk;
  }

  int qcheck() {
    if (o.q_order < 8) throw std::invalid_argument("--order must be at least 8");
    const auto checks = run_identity_suite(static_cast<std::size_t>(o.q_order));
    bool ok = true;
    json arr = json::array();
    for (const auto& c : checks) {
      ok = ok && c.passed;
      arr.push_back({{"name", c.name},
                     {"passed", c.passed},
                     {"first_failure", c.first_failure ? json(*c.first_failure) : json(nullptr)},
                     {"detail", c.detail}});
      if (!o.json) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (c.first_failure) out << " (first failing coefficient " << *c.first_failure << ")";
        if (!c.detail.empty()) out << " [" << c.detail << "]";
        out << "\n";
      }
    }
    if (o.json) print_json(out, {{"order", o.q_order}, {"checks", arr}});
    return ok ? kExitOk : kExitValidation;
  }

  int subgroup() {
    const json doc = read_document(o.path, in);
    if (!doc.is_object() || doc.value("type", "") != "permutation") {
      throw SchemaError("/type", "subgroup expects a permutation descriptor of the coset action");
    }
    const Descriptor d = parse_descriptor(doc, caps.order);
    const GeneratorWeights g = subgroup_generators(d.rep, flags_for(d), caps.order);
    if (o.json) {
      print_json(out, {{"descriptor_hash", d.hash}, {"index", d.rep.dim()}, {"weights", g.weights}});
    } else {
      out << "index " << d.rep.dim() << ", generator weights: " << join(g.weights) << "\n";
    }
    return kExitOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact dimensions, generator weights and splittings for vector valued modular forms", "vvmf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_flag("--allow-partial", o.allow_partial, "Exit 0 even if some weight-one value is undetermined");
  o.y_opt = app.add_option("--y", o.y, "Assert dim S_1 of the dual representation");

  auto descriptor = [&](CLI::App* sub) {
    sub->add_option("descriptor", o.path, "Descriptor file (default: standard input)");
  };
  CLI::App* validate = app.add_subcommand("validate", "Check a representation descriptor");
  descriptor(validate);
  CLI::App* analyze = app.add_subcommand("analyze", "Full report: traces, spectra, exponents, weights");
  descriptor(analyze);
  CLI::App* dims = app.add_subcommand("dims", "Dimensions of modular or cusp forms over a weight range");
  dims->add_option("--from", o.from, "First weight")->required();
  dims->add_option("--to", o.to, "Last weight")->required();
  dims->add_flag("--cusp", o.cusp, "Report cusp forms");
  descriptor(dims);
  CLI::App* weights = app.add_subcommand("weights", "Free-module generator weights and roots");
  descriptor(weights);
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert-Poincare numerator and series");
  hilbert->add_option("--order", o.order, "Last weight of the series")->required()->check(CLI::NonNegativeNumber);
  descriptor(hilbert);
  CLI::App* splitting = app.add_subcommand("splitting", "Splitting type of the weight-k bundle");
  splitting->add_option("--weight", o.weight, "Weight k")->required();
  descriptor(splitting);
  CLI::App* wpline = app.add_subcommand("wpline", "Line bundle cohomology on P(n1,n2)");
  wpline->add_option("kind", o.wp_kind, "h0, h1 or euler")->required()->check(CLI::IsMember({"h0", "h1", "euler"}));
  wpline->add_option("--n1", o.n1, "First weight")->required()->check(CLI::PositiveNumber);
  wpline->add_option("--n2", o.n2, "Second weight")->required()->check(CLI::PositiveNumber);
  wpline->add_option("--k", o.k, "Twist")->required();
  CLI::App* qcheck = app.add_subcommand("qcheck", "Run the q-expansion identity suite");
  qcheck->add_option("--order", o.q_order, "Truncation order");
  CLI::App* subgroup = app.add_subcommand("subgroup", "Generators of M(Gamma) from a coset permutation action");
  descriptor(subgroup);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Session s{o, in, out};
    if (*validate) return s.validate();
    if (*analyze) return s.analyze();
    if (*dims) return s.dims();
    if (*weights) return s.weights();
    if (*hilbert) return s.hilbert();
    if (*splitting) return s.splitting();
    if (*wpline) return s.wpline();
    if (*qcheck) return s.qcheck();
    if (*subgroup) return s.subgroup();
  } catch (const Undetermined& e) {
    err << "undetermined: " << e.what() << "\n";
    return o.allow_partial ? kExitOk : kExitUndetermined;
  } catch (const SchemaError& e) {
    err << "schema error at " << e.what() << "\n";
    return kExitValidation;
  } catch (const RelationViolation& e) {
    err << "invalid representation: " << e.what() << "\n";
    return kExitValidation;
  } catch (const json::exception& e) {
    err << "invalid JSON: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace vvmf::cli
