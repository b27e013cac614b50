#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(BINF_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("binf_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("graph") {
    const Result r = run("graph --type e6 --row 1 --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["nodes"].size() == 2);
    CHECK(j["arrows"].size() == 1);
    for (const auto& n : j["nodes"]) CHECK(n["flagged"] == (n["label"] == "-5+6"));
    const Result dot = run("graph --type e7 --row 6 --format dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.out.begin(), dot.out.end(), '\n') == 3 + 56 + 84 + 1);
    CHECK(run("graph --type e6 --row 9").code == 2);
    CHECK(run("graph --row 1").code == 2);
    CHECK(run("graph --type e6 --bogus").code == 2);
    CHECK(run("graph --type e6 --format svg").code == 2);
  }

  TEST_CASE("apply") {
    const Result f1 = run("apply --type e6 --word \"f1\" highest");
    REQUIRE(f1.code == 0);
    const auto j = nlohmann::json::parse(f1.out);
    for (const auto& [key, value] : j["coords"].items()) CHECK(value == (key == "5:-1+2" ? 1 : 0));
    const Result e1 = run("apply --type e6 --word \"e1\" highest");
    CHECK(e1.code == 0);
    CHECK(e1.out == "zero\n");
    CHECK(run("apply --type e6 --word \"f1 e1\" highest").out == run("apply --type e6 --word \"\" highest").out);
    CHECK(run("apply --type e6 --word \"f9\" highest").code == 2);
    CHECK(run("apply --type e6 --word \"x1\" highest").code == 2);
    CHECK(run("apply --word \"f1\" highest").code == 2);
    // output is valid input
    const std::string path = temp_file("f1.json", f1.out);
    const Result again = run("apply --word \"e1\" " + path);
    CHECK(again.code == 0);
    CHECK(again.out == run("apply --type e6 --word \"\" highest").out);
    const std::string not_ml = temp_file(
        "bad_tab.json",
        R"({"type":"e6","rows":[[{"elem":"-4+5+6","count":1}],[{"elem":"-3+4+6","count":2}],[{"elem":"-2+3","count":3}],[{"elem":"-1+2","count":4}],[{"elem":"+1","count":4}]]})");
    CHECK(run("apply --word \"f1\" " + not_ml).code == 2);
  }

  TEST_CASE("convert") {
    const std::string zeros = temp_file("zeros.json", R"({"type":"e6","coords":{}})");
    const Result tab = run("convert --to tableau " + zeros);
    REQUIRE(tab.code == 0);
    const Result highest = run("apply --type e6 --word \"\" highest");
    const auto hj = nlohmann::json::parse(highest.out);
    CHECK(nlohmann::json::parse(tab.out)["rows"] == hj["rows"]);
    const std::string f = temp_file("tab.json", run("apply --type e7 --word \"f7 f6 f5 f7 f1\" highest").out);
    const Result coords = run("convert --to coords " + f);
    REQUIRE(coords.code == 0);
    const std::string c = temp_file("coords.json", coords.out);
    const Result back = run("convert --to tableau " + c);
    REQUIRE(back.code == 0);
    const std::string b = temp_file("back.json", back.out);
    CHECK(run("convert --to coords " + b).out == coords.out);
    const std::string bad = temp_file("bad.json", R"({"type":"e6","coords":{"5:-5":1,"5:-1+2":0}})");
    const Result err = run("convert --to tableau " + bad, true);
    CHECK(err.code == 2);
    CHECK(err.out.find("5:-5 <= 5:-1+2") != std::string::npos);
    CHECK(run("convert --to tableau --type e7 " + zeros).code == 2);
    CHECK(run("convert --to tableau /nonexistent/file.json").code == 2);
    CHECK(run("convert --to tableau " + temp_file("garbage.json", "{not json")).code == 2);
  }

  TEST_CASE("enumerate") {
    const Result r = run("enumerate --type e6 --depth 1");
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
    const Result j = run("enumerate --type e7 --depth 2 --format json");
    REQUIRE(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["count"] == 1 + 7 + 34);
    const Result tabs = run("enumerate --type e6 --depth 1 --as tableau");
    CHECK(tabs.out.find("\"rows\"") != std::string::npos);
    CHECK(run("enumerate --type e6 --depth -1").code == 2);
  }

  TEST_CASE("verify") {
    const Result r = run("verify --type e7 --suite paper-lists");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["pass"] == true);
    CHECK(run("verify --suite commutation --depth -1").code == 2);
    CHECK(run("verify --suite nope").code == 2);
    const Result both = run("verify --suite roots");
    CHECK(both.code == 0);
    CHECK(std::count(both.out.begin(), both.out.end(), '\n') == 2);
    const std::string out = (std::filesystem::temp_directory_path() / "binf_cli_report.jsonl").string();
    CHECK(run("verify --type e6 --suite structure --out " + out).code == 0);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(nlohmann::json::parse(line)["suite"] == "structure");
  }
}
