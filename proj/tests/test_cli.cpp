#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2ybe/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "sl2ybe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sl2ybe::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("sixj") {
  auto r = call({"sixj", "1/2", "1/2", "2", "1/2", "1/2", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  r = call({"sixj", "1/2", "1/2", "1", "1/2", "1/2", "1"});
  CHECK(r.out == "1/6\n");
  CHECK(call({"sixj", "1/2", "1/2"}).code == 2);
  CHECK(call({"sixj", "0.5", "1/2", "1", "1/2", "1/2", "1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"verify", "--family", "yang", "--s", "1", "--bogus"}).code == 2);
  CHECK(call({"verify", "--family", "yang", "--s", "1/3"}).code == 2);
  CHECK(call({"verify", "--family", "nope", "--s", "1"}).code == 2);
  CHECK(call({"verify", "--family", "yang", "--s", "1", "--levels", "0..7"}).code == 2);
  CHECK(call({"amat", "--s", "1", "--n", "9"}).code == 2);
  CHECK(call({"oracle", "--family", "yang", "--s", "1", "--lambda", "0.5", "--mu", "1"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--family", "exceptional-s3", "--s", "3", "--levels", "0..9"});
  CHECK(r.code == 0);
  r = call({"--json", "verify", "--family", "yang", "--s", "1/2"});
  CHECK(r.code == 0);
  const auto recs = lines(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["pass"] == true);
  CHECK(recs[0]["levels"][1]["anchor"] == "Eq.29/n=1");
  CHECK(recs[0].contains("version"));
  CHECK(recs[1]["anchor"] == "summary");
  // flags after the subcommand work too
  CHECK(call({"verify", "--family", "krs-prefix", "--s", "2", "--levels", "0..2", "--json"}).code == 0);
  // missing coefficient
  CHECK(call({"verify", "--family", "krs-prefix", "--s", "2"}).code == 2);
  // truncated family fails above m
  CHECK(call({"verify", "--family", "zamolodchikov", "--s", "2", "--m", "2", "--levels", "3"}).code == 1);
}

TEST_CASE("custom family file") {
  const std::string path = "cli_test_family.json";
  {
    std::ofstream f(path);
    f << R"({"tag": "custom", "s": "1/2", "coeffs": [{"num": [1, -1, 1, -1], "den": [1, 1]}, {"num": [1]}]})";
  }
  CHECK(call({"verify", "--family-file", path, "--levels", "1"}).code == 1);
  CHECK(call({"verify", "--family-file", "does-not-exist.json"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("JSON output is deterministic and anchored") {
  const std::vector<std::string> cmd{"--json", "scan-degeneracy", "--max-2s", "4"};
  const auto a = call(cmd), b = call(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  for (const auto& rec : lines(a.out)) {
    CHECK(rec.contains("anchor"));
    CHECK(rec.contains("version"));
  }
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "amat", "--s", "3/2", "--n", "2"},
           {"--json", "eta", "--s", "5/2", "--m", "3", "--n", "4"},
           {"--json", "classify-constant", "--s", "1", "--m", "2"},
           {"--json", "rigidity", "--s", "3", "--m", "3"},
           {"--json", "oracle", "--family", "zamolodchikov", "--s", "1", "--lambda", "1/2", "--mu", "1/3"},
           {"--json", "family", "show", "--tag", "yang", "--s", "1"}}) {
    const auto r = call(args);
    INFO(args[1]);
    CHECK(r.code == 0);
    for (const auto& rec : lines(r.out)) CHECK(rec.contains("anchor"));
  }
}

TEST_CASE("amat and eta values") {
  auto r = call({"--json", "amat", "--s", "1/2", "--n", "1"});
  const auto rec = lines(r.out).front();
  CHECK(rec["entries"][0][1] == "1/2*sqrt(3)");
  CHECK(rec["entries"][1][1] == "-1/2");
  CHECK(rec["entries"][1][0] == "1/2*sqrt(3)");
  CHECK(rec["entries"][0][0] == "1/2");
  r = call({"--json", "eta", "--s", "5/2", "--m", "3", "--n", "4"});
  CHECK(lines(r.out).front()["eta"] == "1/2");
  r = call({"--json", "eta", "--s", "1", "--m", "2", "--n", "2"});
  CHECK(lines(r.out).front()["closed_form_agrees"] == true);
}

TEST_CASE("oracle exit codes") {
  CHECK(call({"oracle", "--family", "yang", "--s", "3/2", "--lambda", "2", "--mu", "1/3"}).code == 0);
  CHECK(call({"oracle", "--family", "zamolodchikov", "--s", "2", "--m", "2", "--lambda", "2", "--mu", "1/3"}).code ==
        1);
  CHECK(call({"oracle", "--family", "yang", "--s", "3", "--lambda", "2", "--mu", "1/3"}).code == 2);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_out.jsonl";
  CHECK(call({"--json", "--out", path, "rigidity", "--s", "1", "--m", "2"}).code == 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(nlohmann::json::parse(first)["rigid"] == true);
  std::remove(path.c_str());
}

TEST_CASE("suite subset") {
  auto r = call({"--json", "suite", "--criterion", "3", "--criterion", "4"});
  CHECK(r.code == 0);
  const auto recs = lines(r.out);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0]["criterion"] == "3");
  CHECK(recs[1]["pass"] == true);
  CHECK(call({"suite", "--criterion", "99"}).code == 2);
}
