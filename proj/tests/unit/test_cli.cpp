#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "examples.hpp"
#include "vvmf/wpline.hpp"
#include "vvmf_cli/app.hpp"
#include "vvmf_cli/descriptor.hpp"

using namespace vvmf;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(VVMF_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = invoke(args);
  REQUIRE(r.code == cli::kExitOk);
  return json::parse(r.out);
}

json load(const std::string& name) {
  std::ifstream f(data(name));
  REQUIRE(f.good());
  return json::parse(f);
}

std::vector<long> longs(const json& j) { return j.get<std::vector<long>>(); }

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("weights of the S7 example") {
  const json r = invoke_json({"weights", data("s7.json")});
  CHECK(longs(r["weights"]) == std::vector<long>{2, 4, 4, 6, 6, 8});
  CHECK(longs(r["roots"]) == std::vector<long>{-2, -4, -4, -6, -6, -8});

  const auto text = invoke({"weights", data("s7.json")});
  CHECK(text.code == 0);
  CHECK(text.out.find("weights: 2 4 4 6 6 8") != std::string::npos);
}

TEST_CASE("wpline h0 against enumeration") {
  for (long k : {-3L, 0L, 12L, 25L, 48L}) {
    long count = 0;
    for (long a = 0; 4 * a <= k; ++a) count += (k - 4 * a) % 6 == 0 ? 1 : 0;
    const auto r = invoke({"wpline", "h0", "--n1", "4", "--n2", "6", "--k", std::to_string(k)});
    CHECK(r.code == 0);
    CHECK(std::stol(r.out) == count);
  }
  const json j = invoke_json({"wpline", "euler", "--n1", "4", "--n2", "6", "--k", "-22"});
  CHECK(j["euler"].get<long>() == euler_line(WeightedLine{4, 6}, -22));
}

TEST_CASE("dims of the trivial representation") {
  const json r = invoke_json({"dims", "--from", "0", "--to", "12", data("trivial.json")});
  std::vector<long> got;
  for (const auto& row : r["entries"]) got.push_back(row["dim"].get<long>());
  // monomials E4^a E6^b of weight k
  std::vector<long> want;
  for (long k = 0; k <= 12; ++k) {
    long n = 0;
    for (long a = 0; 4 * a <= k; ++a) n += (k - 4 * a) % 6 == 0 ? 1 : 0;
    want.push_back(n);
  }
  CHECK(got == want);
  CHECK(got == std::vector<long>{1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2});

  const json cusp = invoke_json({"dims", "--cusp", "--from", "12", "--to", "12", data("trivial.json")});
  CHECK(cusp["entries"][0]["dim"].get<long>() == 1);
}

TEST_CASE("descriptor from standard input") {
  std::ifstream f(data("s7.json"));
  std::stringstream buf;
  buf << f.rdbuf();
  const auto r = invoke({"--json", "weights"}, buf.str());
  REQUIRE(r.code == 0);
  CHECK(longs(json::parse(r.out)["weights"]) == std::vector<long>{2, 4, 4, 6, 6, 8});
  const auto dash = invoke({"--json", "weights", "-"}, buf.str());
  CHECK(dash.out == r.out);
}

TEST_CASE("schema errors carry JSON pointers") {
  struct Case {
    std::string doc;
    std::string pointer;
  };
  const std::vector<Case> cases{
      {R"({"type":"character","a":1.5})", "/a"},
      {R"({"type":"character","a":1,"extra":0})", "/extra"},
      {R"({"type":"direct_sum","parts":[{"type":"character"}]})", "/parts/0"},
      {R"({"type":"dual","of":{"type":"character","a":"x"}})", "/of/a"},
      {R"({"type":"matrices","cyclotomic_order":1,"S":[["0.5"]],"T":[["1"]]})", "/S/0/0"},
      {R"({"type":"matrices","cyclotomic_order":1,"S":[[0.5]],"T":[["1"]]})", "/S/0/0"},
      {R"({"type":"character","a":1,"T_spectrum":[{"rotation":"1/12","block":1,"parity":"?","mult":1}]})",
       "/T_spectrum/0/parity"},
      {R"({"type":"dual","of":{"type":"character","a":1,"assert":{"positive":true}}})", "/of/assert"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.doc);
    const auto r = invoke({"validate"}, c.doc);
    CHECK(r.code == cli::kExitValidation);
    CHECK(r.err.find(c.pointer) != std::string::npos);
  }
  CHECK(invoke({"validate"}, "{not json").code == cli::kExitValidation);
  CHECK(invoke({"validate", data("missing.json")}).code == cli::kExitValidation);
}

TEST_CASE("relation violations name the relation") {
  const auto r = invoke({"validate"}, R"({"type":"matrices","cyclotomic_order":1,"S":[["1"]],"T":[["-1"]]})");
  CHECK(r.code == cli::kExitValidation);
  CHECK(r.err.find("S^2 = R^3") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"wpline", "h0", "--n1", "4"}).code == cli::kExitUsage);
  CHECK(invoke({"dims", data("trivial.json")}).code == cli::kExitUsage);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("undetermined weight one is an exit status") {
  const auto r = invoke({"weights", data("weight_one_ambiguous.json")});
  CHECK(r.code == cli::kExitUndetermined);
  CHECK(r.out.find("weights:") == std::string::npos);

  const auto partial = invoke({"--json", "--allow-partial", "weights", data("weight_one_ambiguous.json")});
  CHECK(partial.code == cli::kExitOk);
  const json j = json::parse(partial.out);
  CHECK_FALSE(j["determined"].get<bool>());
  CHECK_FALSE(j.contains("weights"));
  CHECK(j["y"]["range"] == json{{"lo", 0}, {"hi", 1}});

  CHECK(invoke({"analyze", data("weight_one_ambiguous.json")}).code == cli::kExitUndetermined);
  CHECK(invoke({"splitting", "--weight", "10", data("weight_one_ambiguous.json")}).code == cli::kExitUndetermined);

  // a user choice inside the range settles it
  const json y0 = invoke_json({"--y", "0", "weights", data("weight_one_ambiguous.json")});
  CHECK(longs(y0["weights"]) == std::vector<long>{5, 7});
  const json y1 = invoke_json({"--y", "1", "weights", data("weight_one_ambiguous.json")});
  CHECK(longs(y1["weights"]) == std::vector<long>{1, 11});
  CHECK(invoke({"--y", "2", "weights", data("weight_one_ambiguous.json")}).code == cli::kExitValidation);

  // without the positivity assertion the dimension count is conditional
  json doc = load("weight_one_ambiguous.json");
  doc.erase("assert");
  CHECK(invoke({"weights"}, doc.dump()).code == cli::kExitUndetermined);
}

TEST_CASE("analyze output is deterministic") {
  for (const char* name : {"s7.json", "gamma2.json", "row_3_5.json", "gamma_n12.json"}) {
    CAPTURE(name);
    const auto a = invoke({"--json", "analyze", data(name)});
    const auto b = invoke({"--json", "analyze", data(name)});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out).dump(2) + "\n" == a.out);
  }
}

TEST_CASE("descriptor hash ignores key order") {
  const json a = json::parse(R"({"type":"tensor_character","a":3,"of":{"type":"character","a":1}})");
  const json b = json::parse(R"({"of":{"a":1,"type":"character"},"a":3,"type":"tensor_character"})");
  CHECK(cli::descriptor_hash(a) == cli::descriptor_hash(b));
  CHECK(cli::descriptor_hash(a) != cli::descriptor_hash(json::parse(R"({"type":"character","a":4})")));
  const json r = invoke_json({"analyze", data("s7.json")});
  CHECK(r["descriptor_hash"] == cli::descriptor_hash(load("s7.json")));
}

TEST_CASE("order cap from the environment") {
  const json full = invoke_json({"analyze", data("s7.json")});
  CHECK(full["flags"]["finite_image"]["status"] == "certified");
  CHECK(full["flags"]["finite_image"]["order"] == 5040);
  {
    ScopedEnv cap("VVMF_CAP", "100");
    const json capped = invoke_json({"analyze", data("s7.json")});
    CHECK(capped["flags"]["finite_image"]["status"] == "unknown");
  }
  {
    ScopedEnv cap("VVMF_CAP", "lots");
    CHECK(invoke({"analyze", data("s7.json")}).code == cli::kExitValidation);
  }
}

TEST_CASE("subgroup on the Gamma(2) coset action") {
  const json r = invoke_json({"subgroup", data("gamma2.json")});
  CHECK(longs(r["weights"]) == std::vector<long>{0, 2, 2, 4, 4, 6});
  CHECK(invoke({"subgroup", data("trivial.json")}).code == cli::kExitValidation);
  CHECK(invoke({"subgroup", data("s7.json")}).code == cli::kExitValidation);
}

TEST_CASE("splitting and hilbert") {
  const auto r = invoke({"splitting", "--weight", "10", data("s7.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("O(8) + 2 O(6) + 2 O(4) + O(2)") != std::string::npos);
  const json h = invoke_json({"hilbert", "--order", "8", data("s7.json")});
  CHECK(longs(h["numerator"]) == std::vector<long>{0, 0, 1, 0, 2, 0, 2, 0, 1});
}

TEST_CASE("data files agree with the builders") {
  auto parsed = [](const std::string& name) { return cli::parse_descriptor(load(name)).rep; };
  auto same = [](const Repn& a, const Repn& b) {
    return a.dim() == b.dim() && a.S() == b.S() && a.T() == b.T();
  };
  CHECK(same(parsed("s7.json"), testing::s7()));
  CHECK(same(parsed("gamma2.json"), testing::gamma2_cosets()));
  for (long n : {2L, 3L, 4L, 6L, 12L}) CHECK(same(parsed("gamma_n" + std::to_string(n) + ".json"), testing::gamma_n(n)));
  for (const auto& row : testing::two_dim_table()) {
    const std::string name = "row_" + std::to_string(row.k1) + "_" + std::to_string(row.k2) + ".json";
    CAPTURE(name);
    CHECK(same(parsed(name), testing::two_dim(row)));
  }
  CHECK(same(parsed("weight_one_ambiguous.json"), testing::weight_one_ambiguous()));
}

TEST_CASE("matrices descriptor round trip") {
  for (const auto& row : testing::two_dim_table()) {
    const Repn r = testing::two_dim(row);
    const json doc = cli::matrices_descriptor(r);
    const Repn back = cli::parse_descriptor(json::parse(doc.dump())).rep;
    CHECK(back.S() == r.S());
    CHECK(back.T() == r.T());
    CHECK(cli::matrices_descriptor(back) == doc);
  }
}
