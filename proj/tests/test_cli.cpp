#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const std::string kDir = MONCAT_FIXTURE_DIR;

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "moncat");
  std::ostringstream out, err;
  const int status = moncat::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kDir + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "moncat_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

// Report with fixture paths made relative.
std::string normalized(std::string s) {
  for (std::size_t at; (at = s.find(kDir + "/")) != std::string::npos;) s.erase(at, kDir.size() + 1);
  return s;
}

}  // namespace

TEST_CASE("check T1") {
  Run r = run({"check", fixture("t1.cat")});
  CHECK(r.status == 0);
  CHECK(r.out == "PASS  T1: category-laws\nPASS  T1: monoidal-laws\n2 passed, 0 failed\n");
  CHECK(r.err.empty());
}

TEST_CASE("check every fixture") {
  for (const auto& e : fs::directory_iterator(kDir)) {
    if (e.path().extension() != ".cat") continue;
    INFO(e.path());
    CHECK(run({"check", e.path().string()}).status == (e.path().stem() == "broken_pentagon" ? 1 : 0));
  }
}

TEST_CASE("complete Z2FAT and check the result") {
  const std::string out = scratch("z2fat.rezk.cat.json").string();
  Run r = run({"complete", fixture("z2fat.cat"), "-o", out});
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS  Z2FAT: h-strong\n") != std::string::npos);
  CHECK(slurp(out) == slurp(fixture("golden/z2fat.rezk.cat.json")));
  Run back = run({"check", out});
  CHECK(back.status == 0);
  CHECK(back.out.find("3 passed, 0 failed") != std::string::npos);
}

TEST_CASE("complete every monoidal fixture") {
  for (const char* name : {"t1", "z2d", "z2fat", "bz2", "bidem", "arrow"}) {
    INFO(name);
    const std::string out = scratch(std::string(name) + ".cat.json").string();
    CHECK(run({"complete", fixture(std::string(name) + ".cat"), "-o", out}).status == 0);
    CHECK(run({"check", out}).status == 0);
    const std::string text = scratch(std::string(name) + ".rezk.cat").string();
    CHECK(run({"complete", fixture(std::string(name) + ".cat"), "-o", text}).status == 0);
    CHECK(run({"check", text}).status == 0);
  }
}

TEST_CASE("broken pentagon names the failing tuple") {
  Run r = run({"check", fixture("broken_pentagon.cat")});
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL  BROKEN: monoidal-laws") != std::string::npos);
  CHECK(r.out.find("pentagon fails at (*, *, *, *)") != std::string::npos);
  CHECK(r.err.find("broken_pentagon.cat:14:25: error [L002]") != std::string::npos);
  CHECK(run({"complete", fixture("broken_pentagon.cat"), "-o", scratch("b.cat.json").string()}).status == 1);
}

TEST_CASE("json report is stable") {
  Run a = run({"--json", "check", fixture("broken_pentagon.cat")});
  Run b = run({"check", fixture("broken_pentagon.cat"), "--json"});
  CHECK(a.status == 1);
  CHECK(a.out == b.out);
  CHECK(a.err.empty());
  CHECK(normalized(a.out) == slurp(fixture("golden/broken_pentagon.report.json")));
  json j = json::parse(a.out);
  CHECK(j["exit_status"] == 1);
  CHECK(!j.contains("timing_ms"));
  CHECK(json::parse(run({"--json", "--timing", "check", fixture("t1.cat")}).out).contains("timing_ms"));
}

TEST_CASE("fail fast stops at the first failure") {
  const std::string path = write("two.cat", slurp(fixture("broken_pentagon.cat")) + slurp(fixture("t1.cat")));
  json all = json::parse(run({"--json", "check", path}).out);
  json first = json::parse(run({"--json", "--fail-fast", "check", path}).out);
  CHECK(all["checks"].size() == 4);
  CHECK(first["checks"].size() == 2);
  CHECK(first["exit_status"] == 1);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"check"}).status == 2);
  CHECK(run({"complete", fixture("z2fat.cat")}).status == 2);
  CHECK(run({"check", scratch("absent.cat").string()}).status == 2);
  CHECK(run({"complete", fixture("wi.cat"), "-o", scratch("x.cat.json").string()}).status == 2);
  CHECK(run({"day", fixture("z2d.cat"), "--presheaf", "y:7"}).status == 2);
  CHECK(run({"day", fixture("bz2.cat"), "--presheaf", "sizes:1"}).status == 2);
  CHECK(run({"precomp", fixture("z2fat.cat"), fixture("z2fat.cat")}).status == 2);
  CHECK(run({"precomp", fixture("z2fat.cat"), fixture("parity.cat"), "--candidates", "nope", "--target-block", "Z2D"})
            .status == 2);

  Run syntax = run({"--json", "check", write("bad.cat", "category C {\n  objects a\n  morph f: a -> a;\n}\n")});
  CHECK(syntax.status == 2);
  json j = json::parse(syntax.out);
  REQUIRE(j["diagnostics"].size() >= 1);
  CHECK(j["diagnostics"][0]["code"] == "E002");
  CHECK(j["diagnostics"][0]["line"] == 3);

  const std::string doc = slurp(fixture("golden/z2fat.rezk.cat.json"));
  Run truncated = run({"check", write("cut.cat.json", doc.substr(0, doc.size() / 2))});
  CHECK(truncated.status == 2);
  CHECK(truncated.err.find("(root)") != std::string::npos);
}

TEST_CASE("work bound exits 3") {
  ::setenv("MONCAT_MAX_WORK", "10", 1);
  Run r = run({"compare", fixture("bz2.cat")});
  ::setenv("MONCAT_MAX_WORK", "zero", 1);
  Run bad = run({"compare", fixture("bz2.cat")});
  ::unsetenv("MONCAT_MAX_WORK");
  CHECK(r.status == 3);
  CHECK(r.err.find("bound is 10") != std::string::npos);
  CHECK(bad.status == 2);
  CHECK(run({"compare", fixture("bz2.cat")}).status == 0);
}

TEST_CASE("day, compare and precomp") {
  Run day = run({"day", fixture("z2d.cat"), "--presheaf", "y:0", "--presheaf", "sizes:1,2", "--seed", "5"});
  CHECK(day.status == 0);
  CHECK(day.out.find("8 passed, 0 failed") != std::string::npos);
  json d = json::parse(run({"--json", "day", fixture("z2d.cat"), "--presheaf", "sizes:1,2"}).out);
  // (1,2) * (1,2) on Z/2: 1*1 + 2*2 at 0, 1*2 + 2*1 at 1
  CHECK(d["checks"][0]["details"]["sizes"] == json::array({5, 4}));

  for (const char* name : {"t1", "z2d", "z2fat", "bz2", "bidem", "arrow"}) {
    CHECK(run({"compare", fixture(std::string(name) + ".cat")}).status == 0);
  }
  CHECK(run({"precomp", fixture("z2fat.cat"), fixture("z2d.cat")}).status == 0);
  CHECK(run({"precomp", fixture("z2fat.cat"), fixture("z2d.cat"), "--strong", "--max-candidates", "1"}).status == 0);
  Run named = run({"precomp", fixture("z2fat.cat"), fixture("parity.cat"), "--candidates", "parity", "--target-block",
                   "Z2D"});
  CHECK(named.status == 0);
  CHECK(named.out.find("PASS  factorization parity") != std::string::npos);
}

TEST_CASE("skeletalize") {
  const std::string out = scratch("wi.skel.cat").string();
  CHECK(run({"skeletalize", fixture("wi.cat"), "-o", out}).status == 0);
  CHECK(slurp(out) == "category WI_skeleton {\n  objects a;\n}\n");
  const std::string doc = scratch("bz2.skel.cat.json").string();
  CHECK(run({"skeletalize", fixture("bz2.cat"), "-o", doc}).status == 0);
  CHECK(run({"check", doc}).status == 0);
}
