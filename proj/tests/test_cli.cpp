#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jaccoord/cli.hpp"
#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "jaccoord");
  std::ostringstream out, err;
  const int code = jaccoord::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("jaccoord_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check reports coordinates with exit 0") {
    const Run r = run({"check", "y + x^3"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["outcome"] == "coordinate");
    CHECK(j["complement"].is_string());
    CHECK(j["steps"].size() == 2);
    CHECK(r.err.empty());
  }

  TEST_CASE("check reports obstructions with exit 2") {
    const Run r = run({"check", "x^2 + y^3", "--json"});
    CHECK(r.code == 2);
    const json j = json::parse(r.out);
    CHECK(j["outcome"] == "not_coordinate");
    CHECK(j["obstruction"]["kind"] == "FaceExponentsBothExceedOne");
    CHECK(j["obstruction"]["p"] == 2);
    CHECK(j["obstruction"]["q"] == 3);
  }

  TEST_CASE("witness replays the check witness") {
    const Run r = run({"witness", "(y - 2*x)^3 + x"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.contains("steps"));
    CHECK(j.contains("complement"));
    CHECK(j.contains("jacobian"));
  }

  TEST_CASE("polygon output") {
    const Run r = run({"polygon", "x^3 + y^2"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["interior"] == 1);
    CHECK(j["boundary"] == 6);
    CHECK(j["twice_area"] == 6);
    CHECK(j["dim"] == 2);
  }

  TEST_CASE("fibre and special values") {
    const Run f = run({"fibre", "x*y", "--c", "0"});
    CHECK(f.code == 0);
    CHECK(json::parse(f.out)["abs_factor_count"] == 2);
    const Run g = run({"fibre", "y^2 - x^3", "--c", "1/2"});
    CHECK(json::parse(g.out)["genus"] == 1);
    const Run s = run({"special-values", "y^2 - x^3 - x - 1"});
    CHECK(s.code == 0);
    const json sj = json::parse(s.out);
    CHECK(sj["irrational_witnesses"].size() >= 1);
  }

  TEST_CASE("scan exit codes") {
    const Run r = run({"scan", "x*y", "--samples", "4", "--seed", "2"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["violation"]["kind"] == "ReducibleFibre");
  }

  TEST_CASE("gen-coordinate output checks as a coordinate") {
    const Run g = run({"gen-coordinate", "--seed", "5", "--steps", "2", "--max-deg", "3", "--bound", "4"});
    REQUIRE(g.code == 0);
    const json j = json::parse(g.out);
    CHECK(j["seed"] == 5);
    const Run c = run({"check", j["p"].get<std::string>()});
    CHECK(c.code == 0);
  }

  TEST_CASE("input may name a file") {
    const fs::path d = scratch_dir("file");
    std::ofstream(d / "p.txt") << "y + x^2\n";
    const Run r = run({"check", (d / "p.txt").string()});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["input"] == "x^2 + y");
    fs::remove_all(d);
  }

  TEST_CASE("errors go to stderr as JSON with exit 1") {
    const Run syntax = run({"check", "2x"});
    CHECK(syntax.code == 1);
    CHECK(syntax.out.empty());
    const json e = json::parse(syntax.err);
    CHECK(e["error"]["kind"] == "SyntaxError");

    const Run constant = run({"fibre", "5", "--c", "1"});
    CHECK(constant.code == 1);
    CHECK(json::parse(constant.err)["error"]["kind"] == "ConstantInput");

    const Run bad_c = run({"fibre", "x", "--c", "one"});
    CHECK(bad_c.code == 1);
    CHECK(json::parse(bad_c.err)["error"]["kind"] == "UsageError");

    const Run missing = run({"gen-coordinate", "--steps", "2"});
    CHECK(missing.code == 1);
    CHECK(json::parse(missing.err)["error"]["kind"] == "UsageError");

    const Run none = run({});
    CHECK(none.code == 1);
    const Run unknown = run({"frobnicate"});
    CHECK(unknown.code == 1);
  }

  TEST_CASE("corpus runner") {
    const fs::path d = scratch_dir("corpus");
    Run empty = run({"corpus", d.string()});
    CHECK(empty.code == 0);
    CHECK(json::parse(empty.out)["cases"] == 0);

    std::ofstream(d / "a.case") << "x*y\nPolygonNotTriangle\n";
    std::ofstream(d / "b.case") << "y + x^3\ncoordinate\n";
    Run ok = run({"corpus", d.string(), "--samples", "4"});
    CHECK(ok.code == 0);
    const json j = json::parse(ok.out);
    CHECK(j["cases"] == 2);
    CHECK(j["passed"] == 2);
    CHECK(j["results"][0]["name"] == "a.case");

    std::ofstream(d / "c.case") << "x^2\ncoordinate\n";
    Run bad = run({"corpus", d.string(), "--samples", "4"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["failed"] == 1);

    std::ofstream(d / "d.case") << "x\n";
    Run malformed = run({"corpus", d.string()});
    CHECK(malformed.code == 1);
    CHECK(json::parse(malformed.err)["error"]["kind"] == "CaseFormatError");

    CHECK(run({"corpus", (d / "missing").string()}).code == 1);
    fs::remove_all(d);
  }

  TEST_CASE("every command is deterministic") {
    const std::vector<std::vector<std::string>> commands = {
        {"check", "(y - 2*x)^3 + x"},
        {"witness", "y + x^3 + x^2"},
        {"polygon", "x^3 + y^3 + x*y"},
        {"fibre", "y^2 - x^3 - x", "--c", "0", "--seed", "3"},
        {"scan", "x + x^2*y", "--samples", "5", "--seed", "9"},
        {"gen-coordinate", "--seed", "4", "--steps", "2", "--max-deg", "2", "--bound", "3"},
        {"special-values", "y^2 - (x^3 - 3*x)"},
    };
    for (const auto& c : commands) {
      CAPTURE(c[0]);
      const Run a = run(c), b = run(c);
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }
}
