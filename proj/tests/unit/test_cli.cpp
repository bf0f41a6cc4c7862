#include <doctest.h>

#include <sstream>
#include <vector>

#include "cli.hpp"
#include "lindlehmer/json_io.hpp"

using namespace lindlehmer;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<const char*> args) {
  args.insert(args.begin(), "lindlehmer");
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

Json first_line(const Result& r) { return Json::parse(r.out.substr(0, r.out.find('\n'))); }

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("measure subcommand") {
  CHECK(first_line(run({"measure", "--group", "4", "--poly", "x^2+x+1"}))["M"] == "3");
  CHECK(first_line(run({"measure", "--group", "2,8", "--poly", "y^2+y+1"}))["M"] == "9");
  CHECK(first_line(run({"measure", "--group", "3,9", "--poly", "y+1"}))["M"] == "8");
  CHECK(first_line(run({"measure", "--group", "3,9", "--poly", "y+1", "--method", "ball"}))["method"] == "ball");
  auto f = first_line(run({"measure", "--group", "2,8", "--poly", "y^2+y+1", "--factors"}));
  CHECK(f["norm_factorization"]["product"] == "9");
  CHECK(f["factors"].size() == 8);
  auto t = first_line(run({"measure", "--group", "8", "--poly", "x^2+x+1", "--two-adic"}));
  CHECK(t["two_adic"]["higher"][0]["R"] == "i");
}

TEST_CASE("measure errors") {
  CHECK(run({"measure", "--group", "4", "--poly", "x^2+"}).code == cli::kUsageError);
  CHECK(run({"measure", "--group", "4", "--poly", "y"}).code == cli::kUsageError);
  CHECK(run({"measure", "--group", "1", "--poly", "x"}).code == cli::kUsageError);
  CHECK(run({"measure", "--group", "4"}).code == cli::kUsageError);
  CHECK(run({"measure", "--group", "2,3", "--poly", "x", "--two-adic"}).code == cli::kUsageError);
  CHECK(run({"measure", "--group", "16,32", "--poly", "x"}).code == cli::kResourceLimit);
  CHECK(run({"--max-group-order", "512", "measure", "--group", "16,32", "--poly", "x+2"}).code == cli::kOk);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("lambda subcommand") {
  CHECK(first_line(run({"lambda", "--group", "2,2", "--bound", "1"}))["lambda"] == "3");
  CHECK(first_line(run({"lambda", "--group", "2,4", "--bound", "1"}))["lambda"] == "7");
  CHECK(first_line(run({"lambda", "--group", "3,3", "--bound", "1"}))["lambda"] == "8");
  auto a = run({"lambda", "--group", "2,4", "--threads", "8", "--json"});
  auto b = run({"--threads", "2", "lambda", "--group", "2,4"});
  CHECK(a.out == b.out);
  CHECK(first_line(run({"lambda", "--group", "2,4", "--no-symmetry", "--no-prune"}))["lambda"] == "7");
  CHECK(run({"lambda", "--group", "2,2,2,2", "--bound", "2"}).code == cli::kResourceLimit);
  CHECK(run({"lambda", "--group", "2,2", "--bound", "0"}).code == cli::kUsageError);
}

TEST_CASE("congruence subcommand") {
  auto r = run({"congruence", "--group", "2,4", "--poly", "y^2+y+1"});
  CHECK(r.code == 0);
  CHECK(first_line(r)["satisfied"] == true);
  auto many = run({"congruence", "--group", "3,9", "--random", "100", "--seed", "7"});
  CHECK(many.code == 0);
  CHECK(line_count(many.out) == 100);
  CHECK(many.out == run({"--seed", "7", "congruence", "--group", "3,9", "--random", "100"}).out);
  CHECK(many.out != run({"congruence", "--group", "3,9", "--random", "100", "--seed", "8"}).out);
  CHECK(run({"congruence", "--group", "2,3", "--poly", "x"}).code == cli::kUsageError);
  CHECK(run({"congruence", "--group", "2,4"}).code == cli::kUsageError);
}

TEST_CASE("resultant-table subcommand") {
  auto r = run({"resultant-table", "--max", "12"});
  CHECK(r.code == 0);
  CHECK(line_count(r.out) == 66);
  CHECK(r.out.find("\"pass\":false") == std::string::npos);
  CHECK(run({"resultant-table", "--max", "1"}).code == cli::kUsageError);
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "--only", "lemma-cong", "--trials", "20"});
  CHECK(r.code == 0);
  CHECK(line_count(r.out) == 20);
  auto t = run({"verify", "--only", "resultant-table", "--max", "10"});
  CHECK(t.code == 0);
  CHECK(line_count(t.out) == 45);
  CHECK(run({"verify", "--only", "no-such-battery"}).code == cli::kUsageError);
  // The unit box over Z2 holds no |M| > 1, so this battery reports a failure.
  CHECK(run({"verify", "--only", "cyclic-2"}).code == cli::kVerificationFailure);
}

TEST_CASE("witness subcommand") {
  auto ok = run({"witness", "--group", "2,16", "--poly", "y^2+y+1", "--expected", "9"});
  CHECK(ok.code == 0);
  CHECK(first_line(ok)["ok"] == true);
  auto bad = run({"witness", "--group", "4", "--poly", "x^2+x+1", "--expected", "5"});
  CHECK(bad.code == cli::kVerificationFailure);
  CHECK(first_line(bad)["determinant"] == "3");
  CHECK(run({"witness", "--group", "4", "--poly", "x", "--expected", "five"}).code == cli::kUsageError);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<const char*> args{"verify", "--only", "three-path", "--trials", "15", "--seed", "3"};
  CHECK(run(args).out == run(args).out);
}
