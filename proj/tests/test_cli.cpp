#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

std::string fixture(const std::string& name) { return std::string(RSRL_FIXTURES) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rsrl");
  std::ostringstream out, err;
  int code = rsrl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("member") {
  auto yes = run({"member", "--spec", fixture("contains_letter.rsrl"), "--query", "(a + b + c + d)* b (a + b + c + d)*"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("member") != std::string::npos);
  auto no = run({"member", "--spec", fixture("contains_letter.rsrl"), "--query", "(a + b + c + d)*", "--json"});
  CHECK(no.code == 1);
  auto j = parse(no);
  CHECK(j["command"] == "member");
  CHECK(j["answer"] == false);
  CHECK(j["stats"].contains("union_free_terms"));

  auto ex = parse(run({"member", "--spec", fixture("ab_pairs.rsrl"), "--json"}));
  CHECK(ex["answer"] == true);
  CHECK(ex["witness"] == "D1 D2 D2 D1");
}

TEST_CASE("member algorithms") {
  auto sf = run({"member", "--spec", fixture("contains_letter.rsrl"), "--algorithm", "starfree", "--query", "a"});
  CHECK(sf.code == 1);
  CHECK(run({"member", "--spec", fixture("ab_pairs.rsrl"), "--algorithm", "starfree"}).code == 2);
  auto oracle = run({"member", "--spec", fixture("ab_pairs.rsrl"), "--algorithm", "oracle", "--query", "b",
                     "--max-len", "3", "--json"});
  CHECK(oracle.code == 2);
  CHECK(parse(oracle)["answer"].is_null());
  auto found = run({"member", "--spec", fixture("ab_pairs.rsrl"), "--algorithm", "oracle", "--max-len", "4"});
  CHECK(found.code == 0);
  CHECK(run({"member", "--spec", fixture("ab_pairs.rsrl"), "--algorithm", "magic"}).code == 2);
}

TEST_CASE("goals, include, equiv") {
  auto g = parse(run({"goals", "--spec", fixture("contains_letter.rsrl"), "--json"}));
  CHECK(g["goals"].size() == 4);
  CHECK(g["answer"].is_null());
  CHECK(run({"include", "--left", fixture("contains_letter.rsrl"), "--right", fixture("contains_letter.rsrl")}).code == 0);
  CHECK(run({"equiv", "--left", fixture("contains_letter.rsrl"), "--right", fixture("contains_letter.rsrl"), "--json"}).code == 0);
  CHECK(run({"goals", "--spec", fixture("ab_pairs.rsrl")}).code == 2);
}

TEST_CASE("op writes a readable spec") {
  auto path = std::filesystem::temp_directory_path() / "rsrl_test_cli_op.rsrl";
  auto r = run({"op", "--kind", "pointwise-complement", "--left", fixture("contains_letter.rsrl"), "--out", path.string()});
  REQUIRE(r.code == 0);
  auto g = parse(run({"goals", "--spec", path.string(), "--json"}));
  CHECK(g["goals"].size() == 4);
  auto star = run({"op", "--kind", "star", "--left", fixture("ab_pairs.rsrl")});
  CHECK(star.code == 0);
  CHECK(star.out.find("K:") != std::string::npos);
  CHECK(run({"op", "--kind", "union", "--left", fixture("contains_letter.rsrl")}).code == 2);
  CHECK(run({"op", "--kind", "nope", "--left", fixture("contains_letter.rsrl")}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("rewrite, decompose, limited") {
  auto rw = parse(run({"rewrite", "--spec", fixture("ab_pairs.rsrl"), "--json"}));
  CHECK(rw["stats"]["empty"] == false);
  auto dec = parse(run({"decompose", "--spec", fixture("contains_letter.rsrl"), "--json"}));
  CHECK(dec["terms"].size() == 4);
  auto lim = run({"limited", "--spec", fixture("ab_pairs.rsrl"), "--json"});
  CHECK(lim.code == 1);
  CHECK(parse(lim)["limited"] == false);
  CHECK(run({"limited", "--spec", fixture("ab_pairs.rsrl"), "--regex", "D1 D2 D1"}).code == 0);
  CHECK(run({"limited", "--spec", fixture("contains_letter.rsrl")}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"member"}).code == 2);
  auto bad = run({"goals", "--spec", fixture("missing.rsrl")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
