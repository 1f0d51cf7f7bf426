#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"

using qrecip::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("calculator subcommands") {
  CHECK(invoke({"symbol", "quartic", "0", "1", "3", "2"}).out == "i^3\n");
  CHECK(invoke({"symbol", "quartic", "0", "1", "2", "3"}).out == "i^3\n");
  CHECK(invoke({"symbol", "quadratic", "3", "-5"}).out == "-1\n");
  CHECK(invoke({"lucas", "1", "-1", "5", "1009"}).out == "U=5 V=11\n");
  CHECK(invoke({"represent", "two-squares", "61"}).out == "c=5 d=-6 r=1 d0=-3\n");
  CHECK(invoke({"represent", "form", "13", "17"}).out == "none\n");
}

TEST_CASE("usage and input errors exit with 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"verify", "--check", "nosuch", "--pmax", "10"}).code == 1);
  CHECK(invoke({"verify", "--check", "thm4.1"}).code == 1);
  CHECK(invoke({"symbol", "quartic", "1", "1", "1", "1"}).code == 1);
  CHECK(invoke({"symbol", "quartic", "1", "2", "5", "0"}).code == 1);
  CHECK(invoke({"lucas", "1", "1", "5", "9"}).code == 1);
  const Outcome bad = invoke({"represent", "two-squares", "x"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("verify streams JSON lines") {
  const Outcome o = invoke({"verify", "--check", "cor3.1", "--pmax", "1000", "--json"});
  CHECK(o.code == 0);
  std::istringstream lines(o.out);
  std::string line;
  int records = 0;
  bool saw_summary = false, saw_61 = false;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j.contains("summary")) {
      saw_summary = true;
      CHECK(j["summary"]["counterexamples"] == 0);
      continue;
    }
    ++records;
    for (const char* key : {"check", "p", "q", "c", "d", "x", "y", "hyp_cxd", "hyp_d0xc", "applicable", "exponent",
                            "predicted", "actual", "matched", "explore"}) {
      CHECK(j.contains(key));
    }
    if (j["p"] == 61 && j["x"] == -1) {
      saw_61 = true;
      CHECK(j["actual"]["q^[p/8]"] == 22);
      CHECK(j["matched"] == true);
    }
  }
  CHECK(records > 0);
  CHECK(saw_summary);
  CHECK(saw_61);
}

TEST_CASE("verify output is deterministic across worker counts") {
  const auto a = invoke({"verify", "--check", "thm4.1", "lemma2.13", "--pmax", "4000", "--json"});
  const auto b = invoke({"verify", "--check", "thm4.1", "lemma2.13", "--pmax", "4000", "--json", "--jobs", "4"});
  CHECK(a.out == b.out);
}

TEST_CASE("a counterexample exits with 2") {
  const Outcome o = invoke({"verify", "--check", "thm5.2", "--b", "1", "--alpha", "3", "--pmax", "200"});
  CHECK(o.code == 2);
  CHECK(o.out.find("MISMATCH") != std::string::npos);
}
