#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "qpl/serialize.hpp"

using qpl::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qpl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json result_of(const Run& r) { return json::parse(r.out).at("result"); }

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qpl_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build") {
    const Run b3 = run({"build", "--algebra", "B", "--n", "3", "--k", "2"});
    CHECK(b3.code == 0);
    CHECK(result_of(b3).at("generators").size() == 3);
    const Run r43 = run({"build", "--algebra", "R", "--n", "4", "--k", "3"});
    CHECK(result_of(r43).at("generators").size() == 6);
    const Run zero = run({"build", "--algebra", "B", "--n", "2", "--k", "3"});
    CHECK(zero.code == 0);
    CHECK(zero.err.find("warning") != std::string::npos);
    CHECK(result_of(zero).at("generators").empty());
  }

  TEST_CASE("invalid parameters exit with 2") {
    CHECK(run({"build", "--algebra", "R", "--n", "3", "--k", "5"}).code == 2);
    CHECK(run({"build", "--algebra", "Z"}).code == 2);
    CHECK(run({"pipeline", "--algebra", "R", "--n", "3", "--k", "2", "--max-degree", "2"}).code == 2);
    CHECK(run({"homology", "--algebra", "R", "--n", "3"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"build", "--config", "/nonexistent/qpl.toml"}).code == 2);
  }

  TEST_CASE("pipeline reproduces the series of R_5^(2)") {
    const Run r = run({"pipeline", "--algebra", "R", "--n", "5", "--k", "2", "--max-degree", "4"});
    CHECK(r.code == 0);
    CHECK(result_of(r).at("dims") == json::parse("[1,30,850,24045,680183]"));
  }

  TEST_CASE("same config gives byte-identical reports") {
    const std::vector<std::string> args{"verify", "--algebra", "R", "--n", "4", "--k", "2", "--trials", "3", "--seed", "77"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Run c = run({"pipeline", "--algebra", "B", "--n", "3", "--k", "2", "--homology"});
    CHECK(c.out == run({"pipeline", "--algebra", "B", "--n", "3", "--k", "2", "--homology"}).out);
    CHECK(json::parse(c.out).contains("timings_ms") == false);
    CHECK(json::parse(run({"build", "--algebra", "B", "--n", "3", "--k", "2", "--timings"}).out).contains("timings_ms"));
  }

  TEST_CASE("config file with flag override") {
    const fs::path dir = temp_dir("config");
    {
      std::ofstream f(dir / "run.toml");
      f << "algebra = \"R\"\nn = 4\nk = 3\n";
    }
    const Run a = run({"build", "--config", (dir / "run.toml").string()});
    CHECK(a.code == 0);
    CHECK(result_of(a).at("generators").size() == 6);
    const Run b = run({"build", "--config", (dir / "run.toml").string(), "--k", "2"});
    CHECK(result_of(b).at("generators").size() == 12);
    CHECK(json::parse(b.out).at("config").at("k") == 2);
  }

  TEST_CASE("report embeds version and config, output file and text mode") {
    const fs::path dir = temp_dir("output");
    const Run r = run({"hilbert", "--algebra", "R", "--n", "3", "--k", "2", "--max-degree", "4", "--output", (dir / "h.json").string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(dir / "h.json");
    const json j = json::parse(in);
    CHECK(j.at("artifact_version") == qpl::kArtifactVersion);
    CHECK(j.at("schema_version") == qpl::kSchemaVersion);
    CHECK(j.at("config").at("algebra") == "R");
    CHECK(j.at("result").at("dims") == json::parse("[1,3,8,21,55]"));
    const Run t = run({"hilbert", "--algebra", "R", "--n", "3", "--k", "2", "--max-degree", "4", "--format", "text"});
    CHECK(t.out.find("result.dims: 1 3 8 21 55") != std::string::npos);
  }

  TEST_CASE("verdict failures exit with 1") {
    CHECK(run({"gbasis", "--algebra", "B", "--n", "5", "--k", "3", "--max-degree", "4"}).code == 1);
    CHECK(run({"gbasis", "--algebra", "B", "--n", "4", "--k", "2", "--max-degree", "4"}).code == 0);
  }

  TEST_CASE("goldens: pass, tamper, empty") {
    const fs::path src = fs::path(QPL_GOLDEN_DIR);
    CHECK(run({"goldens", "--fixtures", src.string()}).code == 0);

    const fs::path tampered = temp_dir("tampered");
    for (const auto& e : fs::directory_iterator(src)) fs::copy_file(e.path(), tampered / e.path().filename());
    {
      std::ifstream in(tampered / "series_n3.json");
      json g = json::parse(in);
      g["expected"]["dims"][5] = 145;
      std::ofstream out(tampered / "series_n3.json");
      out << g.dump(2);
    }
    const Run bad = run({"goldens", "--fixtures", tampered.string()});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL series_n3") != std::string::npos);
    CHECK(bad.out.find("expected 145, got 144") != std::string::npos);

    const fs::path empty = temp_dir("empty");
    CHECK(run({"goldens", "--fixtures", empty.string()}).code == 2);
    CHECK(run({"goldens", "--fixtures", (empty / "missing").string()}).code == 2);
  }
}
