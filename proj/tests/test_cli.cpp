#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "longmul/cli.hpp"

#ifndef LONGMUL_TEST_DATA
#error "LONGMUL_TEST_DATA must point at tests/data"
#endif

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "longmul");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = longmul::cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(LONGMUL_TEST_DATA) + "/" + name; }

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("mul") {
  CHECK(run({"mul", "689", "997"}).out == "686933\n");
  CHECK(run({"mul", "0", "123456789"}).out == "0\n");
  CHECK(run({"mul", "99410597", "89687949"}).out == "8915932553795553\n");
  CHECK(run({"mul", "000689", "+997"}).out == "686933\n");

  const auto j = nlohmann::json::parse(run({"mul", "689", "997", "--json"}).out);
  CHECK(j["product"] == "686933");

  const auto bad = run({"mul", "68a9", "997"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("position 2") != std::string::npos);
  CHECK(run({"mul", "-5", "3"}).code == 2);
  CHECK(run({"mul", "5"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("verify") {
  const auto small = run({"verify", "--max", "9"});
  CHECK(small.code == 0);
  CHECK(small.out.find("sweep [0, 9]^2: 100/100 ok") != std::string::npos);
  CHECK(small.out.find("golden: 8/8 ok") != std::string::npos);

  const auto faulty = run({"verify", "--max", "20", "--fault", "9,9,80"});
  CHECK(faulty.code == 1);
  CHECK(faulty.out.find("MISMATCH") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"verify", "--max", "9", "--json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["golden"].size() == 8);
  CHECK(j["sweep"]["cases"] == 100);

  CHECK(run({"verify", "--fault", "9,9"}).code == 2);
  CHECK(run({"verify", "--fault", "9,9,82"}).code == 2);
}

TEST_CASE("experiment") {
  const auto one = run({"experiment", "--shapes", "3x3", "--count", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("3x3: 1/1 ok") != std::string::npos);

  auto strip_timing = [](const std::string& s) {
    auto j = nlohmann::json::parse(s);
    j.erase("timing");
    return j;
  };
  const auto a = run({"experiment", "--count", "1000", "--seed", "7", "--json"});
  const auto b = run({"experiment", "--count", "1000", "--seed", "7", "--json", "--threads", "3"});
  CHECK(a.code == 0);
  CHECK(strip_timing(a.out) == strip_timing(b.out));
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["overall_accuracy"] == 1.0);
  CHECK(j["total_tasks"] == 6000);
  CHECK(j["shapes"].size() == 6);

  CHECK(run({"experiment", "--shapes", "3x3", "--count", "50", "--fault", "1,2,3"}).code == 1);
  CHECK(run({"experiment", "--shapes", "3by3"}).code == 2);
  CHECK(run({"experiment", "--shapes", "3x3", "--count", "0"}).code == 2);
  CHECK(run({"experiment", "--seed", "notanumber"}).code == 2);
}

TEST_CASE("score") {
  const auto t2 = run({"score", data("models_8digit.tsv")});
  CHECK(t2.code == 0);
  CHECK(count_of(t2.out, ": OK") == 1);
  CHECK(count_of(t2.out, ": WRONG") == 3);
  CHECK(t2.out.find("accuracy 0.25") != std::string::npos);

  const auto t1 = run({"score", data("gpt4_worked_examples.tsv")});
  CHECK(count_of(t1.out, ": WRONG") == 6);
  CHECK(t1.out.find("line 2: WRONG 689 x 997: claimed 687213, expected 686933, diff positions 2,3,4") !=
        std::string::npos);

  const auto mixed = run({"score", data("mixed.tsv")});
  CHECK(mixed.code == 0);
  CHECK(count_of(mixed.out, ": MALFORMED") == 3);
  CHECK(count_of(mixed.out, ": OK") == 2);

  const auto empty = run({"score", data("empty.tsv")});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("summary: 0 tasks") != std::string::npos);
  CHECK(empty.out.find("accuracy n/a") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"score", data("models_8digit.tsv"), "--json"}).out);
  CHECK(j["summary"]["correct"] == 1);
  CHECK(j["tasks"][3]["verdict"] == "OK");

  CHECK(run({"score", data("does_not_exist.tsv")}).code == 2);
}

TEST_CASE("bench arity and band") {
  CHECK(run({"bench", "--sizes", "64"}).code == 2);
  CHECK(run({"bench", "--sizes", "64,32"}).code == 2);
  CHECK(run({"bench", "--sizes", "64,128", "--reps", "2"}).code == 2);
  CHECK(run({"bench", "--sizes", "64,x"}).code == 2);
  CHECK(run({"bench", "--sizes", "16,32,64", "--reps", "3", "--band", "0,10"}).code == 0);
  CHECK(run({"bench", "--sizes", "16,32,64", "--reps", "3", "--band", "5,6"}).code == 1);
  const auto j = nlohmann::json::parse(run({"bench", "--sizes", "16,32", "--reps", "3", "--band", "0,10", "--json"}).out);
  CHECK(j["points"].size() == 2);
  CHECK(j["passed"] == true);
}

TEST_CASE("gen and --out") {
  const auto path = std::filesystem::temp_directory_path() / "longmul_gen_test.tsv";
  const auto g = run({"gen", "--shapes", "3x4", "--count", "20", "--seed", "5", "--out", path.string()});
  CHECK(g.code == 0);
  CHECK(g.out.empty());
  std::ifstream in(path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), '\t') == 2);
  }
  CHECK(n == 20);

  // A generated corpus scores perfectly against itself.
  const auto s = run({"score", path.string(), "--json"});
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["summary"]["accuracy"] == 1.0);
  std::filesystem::remove(path);

  CHECK(run({"gen", "--shapes", "3x3", "--count", "3", "--seed", "9"}).out ==
        run({"gen", "--shapes", "3x3", "--count", "3", "--seed", "9"}).out);
}
