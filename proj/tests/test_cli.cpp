#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "ringlab/cli.hpp"
#include "ringlab/core.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = run(args, out, err, in);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);)
    if (l == line) return true;
  return false;
}

std::vector<std::pair<std::string, std::string>> parse_human(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) {
    auto pos = l.find(": ");
    REQUIRE(pos != std::string::npos);
    out.emplace_back(l.substr(0, pos), l.substr(pos + 2));
  }
  return out;
}

struct Invocation {
  std::vector<std::string> args;
  std::string input;
};

const std::string kZ4Z6 = "2 2\n4 0\n0 6\n";

std::vector<Invocation> invocations() {
  std::vector<Invocation> v;
  for (const char* r : {"Zn(12)", "Zn(8)", "Quot(Zn(3),[1,0,1])", "LocalNonChain2", "Prod(Zn(4),Zn(3))", "Z", "EC(2)"}) {
    v.push_back({{"classify", r}});
    v.push_back({{"spectrum", r}});
  }
  v.push_back({{"clean", "Zn(12)", "7"}});
  v.push_back({{"clean", "Z", "3"}});
  v.push_back({{"gcd", "Zn(12)", "8", "6"}});
  v.push_back({{"edr-witness", "Zn(12)", "8", "6"}});
  v.push_back({{"edr-witness", "LocalNonChain2", "x", "y"}});
  v.push_back({{"snf", "Z", "-"}, "2 2\n2 4\n6 8\n"});
  v.push_back({{"snf", "LocalNonChain2", "-"}, "1 2\nx y\n"});
  v.push_back({{"module-decompose", "Zn(12)", "-"}, kZ4Z6});
  v.push_back({{"module-indec", "Zn(12)", "-"}, kZ4Z6});
  v.push_back({{"lemma33", "LocalNonChain2", "x", "y", "2"}});
  v.push_back({{"verify", "T34", "LocalNonChain2", "Zn(4)"}});
  v.push_back({{"verify", "LG", "Zn(6)"}});
  return v;
}

}  // namespace

TEST_CASE("cli examples") {
  Run c = cli({"classify", "Zn(12)"});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "clean: true"));
  CHECK(has_line(c.out, "arithmetic: true"));
  CHECK(has_line(c.out, "jacobson_index: 2"));

  Run nc = cli({"clean", "Z", "3"});
  CHECK(nc.code == 1);
  CHECK(nc.out.find("NotClean") != std::string::npos);

  Run t1 = cli({"verify", "T1", "--corpus"});
  CHECK(t1.code == 0);
  CHECK(has_line(t1.out, "overall: PASS"));
  CHECK(t1.out.find("FAIL") == std::string::npos);
  CHECK(t1.out.find("INCONCLUSIVE") == std::string::npos);
}

TEST_CASE("mode equivalence") {
  for (const auto& inv : invocations()) {
    auto json_args = inv.args;
    json_args.push_back("--json");
    Run h = cli(inv.args, inv.input), j = cli(json_args, inv.input);
    CHECK(h.code == j.code);
    Document doc = Document::parse(j.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["command"] == inv.args[0]);
    CHECK(doc.contains("ring"));
    CHECK_MESSAGE(flatten(doc) == parse_human(h.out), inv.args[0] << " " << inv.args[1]);
  }
}

TEST_CASE("determinism") {
  for (const auto& inv : invocations()) {
    Run a = cli(inv.args, inv.input), b = cli(inv.args, inv.input);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  std::vector<std::string> seeded{"module-indec", "Zn(61)", "-", "--seed", "5"};
  CHECK(cli(seeded, "2 0\n").out == cli(seeded, "2 0\n").out);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"classify"}).code == 2);
  CHECK(cli({"frobnicate", "Zn(2)"}).code == 2);
  CHECK(cli({"classify", "Zn(0"}).code == 2);
  CHECK(cli({"classify", "Zn(1)"}).code == 2);
  CHECK(cli({"verify", "T99"}).code == 2);
  CHECK(cli({"verify", "T1", "Zn(4)", "--corpus"}).code == 2);
  CHECK(cli({"spectrum", "Zn(12)", "--cap", "8"}).code == 3);
  CHECK(cli({"classify", "Zn(12)", "--cap", "8"}).code == 3);
  CHECK(cli({"lemma33", "LocalNonChain2", "x", "y", "5"}).code == 3);
  CHECK(cli({"verify", "T21", "Z"}).code == 3);
  CHECK(cli({"lemma33", "Zn(12)", "2", "3", "2"}).code == 1);
  CHECK(cli({"gcd", "LocalNonChain2", "x", "y"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cap from the environment") {
  setenv("RINGLAB_CAP", "8", 1);
  Run capped = cli({"spectrum", "Zn(12)"});
  Run flag = cli({"spectrum", "Zn(12)", "--cap", "4096"});
  setenv("RINGLAB_CAP", "junk", 1);
  Run junk = cli({"spectrum", "Zn(12)"});
  unsetenv("RINGLAB_CAP");
  CHECK(capped.code == 3);
  CHECK(capped.out.find("EnumerationCapExceeded") != std::string::npos);
  CHECK(flag.code == 0);
  CHECK(junk.code == 2);
}

TEST_CASE("counterwitness replay") {
  Run nc = cli({"clean", "Z", "3", "--json"});
  Document d = Document::parse(nc.out);
  REQUIRE(d["counterwitness"].size() == 1);
  Ring Z = Ring::integers();
  Element a = Z.parse_element(d["counterwitness"][0].get<std::string>());
  for (const auto& e : d["idempotents_tried"]) CHECK_FALSE(is_unit(Z, Z.sub(a, Z.parse_element(e.get<std::string>()))));

  Run np = cli({"edr-witness", "LocalNonChain2", "x", "y", "--json"});
  CHECK(np.code == 1);
  d = Document::parse(np.out);
  REQUIRE(d["counterwitness"].size() == 2);
  Ring L = Ring::local_non_chain2();
  Element x = L.parse_element(d["counterwitness"][0].get<std::string>());
  Element y = L.parse_element(d["counterwitness"][1].get<std::string>());
  Mask pair = ideal_mask(L, {x, y});
  for (std::uint64_t g = 0; g < L.order(); ++g) CHECK(principal_ideal_mask(L, g) != pair);

  Run cl = cli({"classify", "Zn(8)"});
  CHECK(has_line(cl.out, "von_neumann_regular: false"));
  CHECK(has_line(cl.out, "details.von_neumann_regular.counterwitness: 2"));
}
