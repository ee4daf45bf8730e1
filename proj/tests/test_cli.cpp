#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lucasforge/cli.hpp"
#include "lucasforge/poly2.hpp"

using namespace lucasforge;
using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute commands print bare exact values") {
  CHECK(run({"fib", "10"}).out == "55\n");
  CHECK(run({"super", "--fib", "2", "3"}).out == "24\n");
  CHECK(run({"lucas", "atom", "6"}).out == "s^2 + 3*t\n");
  CHECK(run({"lucas", "poly", "4"}).out == "s^3 + 2*s*t\n");
  CHECK(run({"lucas", "factorial", "3"}).out == "s^3 + s*t\n");
  CHECK(run({"lucas", "factorial", "2", "-k", "2"}).out == "s^4 + 2*s^2*t\n");
  CHECK(run({"lucanomial", "4", "2"}).out == "s^4 + 3*s^2*t + 2*t^2\n");
  CHECK(run({"lucanomial", "2", "1", "-k", "2"}).out == "s^2 + 2*t\n");
  CHECK(run({"catalan", "3"}).out == "5\n");
  CHECK(run({"fibocatalan", "4"}).out == "364\n");
  CHECK(run({"super", "--classical", "1", "2"}).out == "4\n");
  CHECK(run({"super", "--lucas", "1", "1"}).out == "s\n");
  CHECK(run({"super", "--lucas", "1", "1", "-k", "2"}).out == "s^2 + 2*t\n");
  CHECK(run({"super", "--fib", "1", "1", "-k", "2"}).out == "3\n");  // F_4/F_2 at s=t=1
  CHECK(run({"gencat", "--fib", "1", "4"}).out == "91\n");
  CHECK(run({"gencat", "--lucas", "1", "2"}).out == "s^2 + t\n");
  CHECK(run({"ratcat", "--classical", "2", "3"}).out == "2\n");
  CHECK(run({"ratcat", "--lucas", "2", "3"}).out == "s^2 + 2*t\n");
}

TEST_CASE("compute exit codes") {
  CHECK(run({"fib", "10"}).code == 0);
  CHECK(run({"ratcat", "--classical", "2", "4"}).code == 2);  // not coprime
  CHECK(run({"fib"}).code == 2);                              // missing argument
  CHECK(run({"fib", "10", "--bogus"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"super", "1", "1"}).code == 2);                   // mode flag required
  CHECK(run({"super", "--classical", "1", "1", "-k", "2"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"lucas", "poly", "-5"}).code == 2);
}

TEST_CASE("valuation output") {
  auto r = run({"valuation", "--num", "4", "--den", "2,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d=2 a=2 b=3") != std::string::npos);
  CHECK(r.out.find("verdict: false") != std::string::npos);
  auto ok = run({"valuation", "--num", "4,6", "--den", "2,3,5", "-k", "1"});
  CHECK(ok.out.find("verdict: true") != std::string::npos);
}

TEST_CASE("verify emits reports and proper exit codes") {
  auto r = run({"verify", "main-fib", "--n", "1..10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("passed 10 failed 0 total 10") != std::string::npos);

  auto contrast = run({"verify", "corollary-classical-contrast"});
  CHECK(contrast.code == 0);  // expected-negative counts as passing
  CHECK(contrast.out.find("expected-negative") != std::string::npos);

  auto fail = run({"verify", "corollary-classical-contrast", "--n", "6..6"});
  CHECK(fail.code == 1);  // non-integral where no claim says so
  CHECK(fail.out.find("FAIL") != std::string::npos);

  auto wrong_axis = run({"verify", "lemma-fib", "--m", "1..3"});
  CHECK(wrong_axis.code == 2);
}

TEST_CASE("verify json output parses and all verdicts hold") {
  auto r = run({"verify", "main-fib", "--n", "1..50", "--format", "json"});
  CHECK(r.code == 0);
  json arr = json::parse(r.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 50);
  for (const auto& rec : arr) {
    CHECK(rec.at("op") == "main-fib");
    CHECK(rec.at("verdict").get<bool>());
    CHECK(rec.at("expected").get<bool>());
    CHECK(rec.at("params").contains("n"));
  }
}

TEST_CASE("emitted polynomial strings parse back to equal values") {
  auto atom = run({"lucas", "atom", "6", "--format", "json"});
  json j = json::parse(atom.out);
  CHECK(parse_poly(j.at("result").get<std::string>()) == parse_poly("s^2 + 3*t"));

  auto lemma = run({"verify", "lemma-lucas", "--n", "1..5", "--format", "json"});
  for (const auto& rec : json::parse(lemma.out)) {
    Poly2 p = parse_poly(rec.at("result").get<std::string>());
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("csv output has the header and quoted fields") {
  auto r = run({"lucanomial", "4", "2", "--format", "csv"});
  CHECK(r.out.find("op,params,result,verdict,expected\n") == 0);
  CHECK(r.out.find("\"s^4 + 3*s^2*t + 2*t^2\"") != std::string::npos);
  auto v = run({"verify", "lemma-fib", "--n", "1..2", "--format", "csv"});
  CHECK(v.out.find("op,params,result,verdict,expected\n") == 0);
  CHECK(v.out.find("lemma-fib,\"n=1\",\"-1\",true,true\n") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
  std::vector<std::string> args = {"suite", "--only", "lemma-fib",
                                   "--range", "lemma-fib=1..10", "--format", "json"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  std::vector<std::string> parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  auto c = run(parallel);
  CHECK(c.out == a.out);
}

TEST_CASE("suite subsetting and range overrides") {
  auto r = run({"suite", "--only", "von-szily", "--range", "von-szily=0..3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("passed 15 failed 0 total 15") != std::string::npos);  // 16 points minus (0,0)

  auto axis = run({"suite", "--only", "poly-kdiv-super", "--range", "poly-kdiv-super.m=0..2",
                   "--range", "poly-kdiv-super.n=0..2", "--range", "poly-kdiv-super.k=1..2"});
  CHECK(axis.code == 0);
  CHECK(axis.out.find("total 16") != std::string::npos);  // (9-1)*2 points

  CHECK(run({"suite", "--only", "nonsense"}).code == 2);
  CHECK(run({"suite", "--range", "nonsense=1..2"}).code == 2);
}

TEST_CASE("suite timings go to stderr, not stdout") {
  auto r = run({"suite", "--only", "lemma-fib", "--range", "lemma-fib=1..5"});
  CHECK(r.out.find("#") == std::string::npos);
  CHECK(r.err.find("# lemma-fib") != std::string::npos);
}

TEST_CASE("search command reports residuals") {
  auto r = run({"search", "--template", "von_szily_F", "--m", "1..1", "--n", "1..1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("residual=-2") != std::string::npos);
  CHECK(r.out.find("held 0 of 1 points") != std::string::npos);

  auto empty = run({"search", "--template", "mikic-catalan-f", "--n", "5..1"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("held 0 of 0 points") != std::string::npos);

  CHECK(run({"search", "--template", "bogus"}).code == 2);
  CHECK(run({"search", "--template", "von-szily-f", "--weights", "bogus"}).code == 2);
}

TEST_CASE("max-index flag overrides the environment") {
  setenv("LUCASFORGE_MAX_INDEX", "15", 1);
  CHECK(run({"lucas", "poly", "20"}).code == 2);            // env guard trips
  CHECK(run({"lucas", "poly", "20", "--max-index", "25"}).code == 0);  // flag wins
  unsetenv("LUCASFORGE_MAX_INDEX");
  CHECK(run({"lucas", "poly", "20"}).code == 0);
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--help"}).code == 0);
}
