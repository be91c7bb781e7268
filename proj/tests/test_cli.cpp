#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "trigroup/cli.hpp"

using nlohmann::json;
using trigroup::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("check") {
  auto r = call({"check", "7", "4", "3", "1"});
  CHECK(r.code == 0);
  CHECK(r.doc()["triangle_quadruple"] == true);
  CHECK(call({"check", "1", "1", "1", "1"}).doc()["q_form"] == -4);
}

TEST_CASE("reduce") {
  auto r = call({"reduce", "1", "1", "3", "4"});
  REQUIRE(r.code == 0);
  json d = r.doc();
  CHECK(d["root"] == json::array({1, 1, 0, 1}));
  CHECK(d["length"] == 2);
  CHECK(d["steps"][0]["generator"] == 4);
}

TEST_CASE("large integers are strings") {
  auto r = call({"reduce", "0", "9007199254740993", "9007199254740993", "9007199254740993"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["root"][1] == "9007199254740993");
}

TEST_CASE("invalid input exits 2") {
  CHECK(call({"reduce", "1", "1", "1", "1"}).code == 2);
  CHECK(call({"reduce", "1", "x", "1", "1"}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"census-height", "10", "--mode", "weird"}).code == 2);
  CHECK(call({"simplex", "reflect", "1", "1", "1", "1", "--index", "9"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("help exits 0") { CHECK(call({"--help"}).code == 0); }

TEST_CASE("orbit") {
  auto r = call({"orbit", "0", "1", "1", "1", "--depth", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["sizes"] == json::array({1, 2, 5, 11}));
}

TEST_CASE("growth") {
  auto r = call({"growth", "--depth", "4"});
  REQUIRE(r.code == 0);
  json rows = r.doc()["rows"];
  CHECK(rows[3][1] == 30);
  CHECK(rows[3][2] == 29);
}

TEST_CASE("census") {
  CHECK(call({"census-height", "5"}).doc()["count"] == 3);
  CHECK(call({"census-max", "3"}).doc()["count"] == 4);
  auto listed = lines(call({"census-max", "3", "--list"}).out);
  CHECK(listed.size() == 4);
  CHECK(call({"census-height", "5", "--mode", "ordered"}).doc()["count"] == 4 + 4 + 4);
  auto sweep = lines(call({"census-height", "20", "--sweep"}).out);
  CHECK(sweep.size() >= 20);
  CHECK(call({"census-height", "100000"}).code == 3);
}

TEST_CASE("number theory commands") {
  CHECK(lines(call({"pair", "1", "1"}).out).size() == 6);
  json nf = call({"normform", "7"}).doc();
  CHECK(nf["count"] == 12);
  CHECK(nf["b"] == 2);
  CHECK(call({"divisor-sum", "10"}).doc()["sum"] == 83);
  CHECK(call({"alpha", "7", "4", "3", "1"}).doc()["alpha"] == 4);
}

TEST_CASE("group commands") {
  json st = call({"stabilizer", "--depth", "4"}).doc();
  CHECK(st["layers"] == json::array({1, 3, 6, 9, 12}));
  json ex = call({"extremal", "4"}).doc();
  CHECK(ex["norm"] == 13);
  CHECK(ex["char_poly"] == json::array({1, -7, -15, -7, 1}));
  CHECK(call({"verify", "coxeter"}).code == 0);
  CHECK(call({"verify", "cartan"}).code == 0);
  auto lie = call({"verify", "lie"});
  CHECK(lie.code == 0);
}

TEST_CASE("simplex") {
  json v = call({"simplex", "verify", "1", "3/8", "3/8", "3/8", "3/8"}).doc();
  CHECK(v["residual"] == "0");
  json r = call({"simplex", "reflect", "1", "3/8", "3/8", "3/8", "3/8", "--index", "4"}).doc();
  CHECK(r["tuple"]["entries"][4] == "25/24");
  CHECK(call({"simplex", "gram", "1", "2", "3", "4"}).doc()["agree"] == true);
}

TEST_CASE("resource cap exits 3") {
  setenv("TRIGROUP_MAX_ELEMENTS", "50", 1);
  auto r = call({"growth", "--depth", "8"});
  unsetenv("TRIGROUP_MAX_ELEMENTS");
  CHECK(r.code == 3);
}
