#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "maro/cli.hpp"

using Catch::Matchers::ContainsSubstring;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = maro::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("maro_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("point-based solve prints the figure values", "[cli]") {
  const Result r = run({"solve-pb", "--fixture", "FIG4"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"efficient\":[\"x1\",\"x2\"],\"fpb\":{\"x1\":[1,6],\"x2\":[8,4]}}\n");
  const Result dump = run({"fixtures", "--name", "FIG4"});
  const std::string path = temp_file("fig4.json", dump.out);
  CHECK(run({"solve-pb", "--instance", path}).out == r.out);
}

TEST_CASE("validation failures exit with code 2 and a path", "[cli]") {
  const std::string path = temp_file("bad.json", R"({"name":"b","n":2,"decisions":["x1"],"scenarios":["u1","u2"],
    "recourse":{"x1":{"u1":[[1,2]],"u2":[]}}})");
  const Result r = run({"validate", "--instance", path});
  CHECK(r.code == 2);
  CHECK_THAT(r.err, ContainsSubstring("(x1,u2)"));
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(run({"validate", "--fixture", "FIG2L"}).code == 0);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"solve-ws", "--fixture", "FIG2L"}).code == 2);
  CHECK(run({"solve-ws", "--fixture", "FIG2L", "--lambda", "0.5,0.5", "--bogus"}).code == 2);
  CHECK(run({"solve-ws", "--fixture", "NOPE", "--lambda", "0.5,0.5"}).code == 2);
  CHECK(run({"solve-ws", "--fixture", "FIG2L", "--lambda", "0.5,0.7"}).code == 2);
  CHECK(run({"solve-pb", "--fixture", "FIG2L", "--format", "csv"}).code == 2);
  CHECK(run({"efficiency", "--fixture", "FIG2L", "--rel", "u-strict"}).code == 2);
  CHECK(run({"efficiency", "--fixture", "FIG4", "--kind", "point-based", "--rel", "leq"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scalar solves", "[cli]") {
  const auto ws = nlohmann::json::parse(run({"solve-ws", "--fixture", "FIG2L", "--lambda", "0.5,0.5"}).out);
  CHECK(ws["efficient"] == nlohmann::json({"x2"}));
  CHECK(ws["guarantees"]["x2"] == 5);
  const auto eps = nlohmann::json::parse(run({"solve-eps", "--fixture", "FIG2L", "--eps", "_,4", "--j", "1"}).out);
  CHECK(eps["all_infeasible"] == true);
  CHECK(eps["values"]["x1"] == "+inf");
  CHECK(run({"solve-eps", "--fixture", "FIG2L", "--eps", "_,4", "--j", "3"}).code == 2);
}

TEST_CASE("efficiency verdicts with witnesses", "[cli]") {
  const auto v = nlohmann::json::parse(
      run({"efficiency", "--fixture", "FIG2R", "--x", "x1", "--kind", "multi-scenario", "--rel", "l"}).out);
  CHECK(v["efficient"] == false);
  CHECK(v["witness"][0]["competitor"] == "x2");
  const auto s = nlohmann::json::parse(run({"efficiency", "--fixture", "FIG2L", "--kind", "smaro"}).out);
  CHECK(s["decisions"] == nlohmann::json({"x2"}));
  const auto m = nlohmann::json::parse(
      run({"efficiency", "--fixture", "FIG2L", "--kind", "point-based", "--rel", "leq", "--x", "x2"}).out);
  CHECK(m["efficient"] == true);
}

TEST_CASE("images in json and csv", "[cli]") {
  const Result pb = run({"image", "pb", "--fixture", "FIG4", "--format", "csv"});
  CHECK(pb.out == "f1,f2\n1,6\n8,4\n");
  const std::string list = temp_file("eps.json", "[[null,5],[\"_\",6],[0,7]]");
  const auto eps = nlohmann::json::parse(run({"image", "eps", "--fixture", "FIG2L", "--j", "1", "--eps-list", list}).out);
  CHECK(eps["points"].size() == 2);
  CHECK(eps["infeasible"].size() == 1);
  CHECK(eps["points"][0]["point"] == nlohmann::json({7, 6}));
  const auto ws = nlohmann::json::parse(run({"image", "ws", "--fixture", "FIG2L", "--grid-k", "2"}).out);
  CHECK(ws["points"].size() >= 3);
  CHECK(run({"image", "xx", "--fixture", "FIG2L"}).code == 2);
}

TEST_CASE("verify exits 0 and is byte deterministic", "[cli]") {
  const Result a = run({"verify", "--seed", "42", "--count", "100"});
  const Result b = run({"verify", "--seed", "42", "--count", "100"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["pass"] == true);
  CHECK(run({"verify", "--count", "3", "--check", "nope"}).code == 2);
}

TEST_CASE("compare renders json and markdown", "[cli]") {
  const Result md = run({"compare", "--fixture", "FIG2L", "--lambda", "0.5,0.5", "--eps", "_,7", "--j", "1", "--format", "md"});
  CHECK(md.code == 0);
  CHECK_THAT(md.out, ContainsSubstring("| constraint | {x2}"));
  const auto j = nlohmann::json::parse(run({"compare", "--fixture", "FIG2L", "--lambda", "0.5,0.5", "--eps", "_,7", "--j", "1"}).out);
  CHECK(j["concepts"][1]["guarantee"] == 7);
}

TEST_CASE("plot writes an svg with labelled axes", "[cli]") {
  const Result r = run({"plot", "--fixture", "FIG5", "--format", "svg"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("viewBox=\"0 0 800 800\""));
  CHECK_THAT(r.out, ContainsSubstring(">f1</text>"));
  CHECK_THAT(r.out, ContainsSubstring(">f2</text>"));
  const auto path = (std::filesystem::temp_directory_path() / "maro_cli_test_front.svg").string();
  CHECK(run({"plot", "--fixture", "FIG4", "--image", "pb", "--step", "--out", path}).code == 0);
  CHECK(std::filesystem::file_size(path) > 0);
  CHECK(run({"plot", "--fixture", "FIG4", "--format", "csv"}).code == 2);
}

TEST_CASE("every fixture is reachable by name", "[cli]") {
  const auto names = nlohmann::json::parse(run({"fixtures"}).out);
  for (const auto& n : names) CHECK(run({"validate", "--fixture", n.get<std::string>()}).code == 0);
}
