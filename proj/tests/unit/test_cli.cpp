#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tcx/cli.hpp"
#include "tcx/enumerator.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result tcx_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = tcx::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string pres(std::string const& name) {
    return std::string(TCX_TEST_DATA_DIR) + "/presentations/" + name;
  }

  fs::path scratch(std::string const& name) {
    auto dir = fs::temp_directory_path() / "tcx_cli_test";
    fs::create_directories(dir);
    return dir / name;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
}  // namespace

TEST_CASE("enumerate: success, limit and input errors") {
  auto ok = tcx_run({"enumerate", "--pres", pres("facet2000.cox"), "--sub", "FACET",
                     "--deterministic", "--progress-interval", "0"});
  REQUIRE(ok.code == tcx::cli::EXIT_OK);
  auto j = json::parse(ok.out);
  CHECK(j["index"] == 128);
  CHECK(j["subgroup"] == "FACET");
  CHECK(j["table_hash"].get<std::string>().size() == 16);
  CHECK_FALSE(j.contains("seconds"));

  auto cap = tcx_run({"enumerate", "--pres", pres("gamma.cox"), "--sub", "VERTEX",
                      "--max-cosets", "100", "--progress-interval", "0"});
  CHECK(cap.code == tcx::cli::EXIT_COSET_LIMIT);
  CHECK(cap.err.find("coset limit") != std::string::npos);

  CHECK(tcx_run({"enumerate", "--pres", pres("gamma.cox"), "--sub", "NOPE"}).code
        == tcx::cli::EXIT_INPUT);
  CHECK(tcx_run({"enumerate", "--pres", "/nonexistent.cox"}).code == tcx::cli::EXIT_INPUT);
  CHECK(tcx_run({"enumerate"}).code == tcx::cli::EXIT_INPUT);
  CHECK(tcx_run({"enumerate", "--pres", pres("gamma.cox"), "--strategy", "magic"}).code
        == tcx::cli::EXIT_INPUT);
  CHECK(tcx_run({"frobnicate"}).code == tcx::cli::EXIT_INPUT);
  CHECK(tcx_run({}).code == tcx::cli::EXIT_INPUT);

  auto bad = scratch("bad.cox");
  std::ofstream(bad) << "gens a b;\nrel (a q)^2;\n";
  auto e = tcx_run({"enumerate", "--pres", bad.string()});
  CHECK(e.code == tcx::cli::EXIT_INPUT);
  CHECK(e.err.find("2:") != std::string::npos);
}

TEST_CASE("deterministic output is byte-identical across runs and strategies") {
  std::vector<std::string> base{"enumerate", "--pres", pres("table1_row1.cox"), "--sub",
                                "VERTEX",    "--deterministic", "--progress-interval", "0"};
  auto a = tcx_run(base);
  auto b = tcx_run(base);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto felsch = base, hlt = base;
  felsch.insert(felsch.end(), {"--strategy", "felsch"});
  hlt.insert(hlt.end(), {"--strategy", "hlt-lookahead"});
  auto jf = json::parse(tcx_run(felsch).out);
  auto jh = json::parse(tcx_run(hlt).out);
  CHECK(jf["table_hash"] == jh["table_hash"]);
  CHECK(jf["index"] == jh["index"]);
}

TEST_CASE("table export") {
  auto jpath = scratch("t.json");
  auto bpath = scratch("t.bin");
  auto r = tcx_run({"enumerate", "--pres", pres("facet2000.cox"), "--sub", "VERTEX",
                    "--table-out", jpath.string(), "--progress-interval", "0"});
  REQUIRE(r.code == 0);
  REQUIRE(tcx_run({"enumerate", "--pres", pres("facet2000.cox"), "--sub", "VERTEX",
                   "--table-out", bpath.string(), "--progress-interval", "0"})
              .code
          == 0);
  auto j = json::parse(slurp(jpath));
  CHECK(j["nrows"] == 32);
  CHECK(j["ncols"] == 6);
  CHECK(j["rows"].size() == 32);
  CHECK(j["hash"] == json::parse(r.out)["table_hash"]);
  std::ifstream in(bpath, std::ios::binary);
  auto t = tcx::read_table_binary(in);
  CHECK(t.nrows() == 32);
  for (std::size_t c = 0; c < 32; ++c)
    for (std::uint32_t x = 0; x < 6; ++x) CHECK(t.entry(c, x) == j["rows"][c][x]);
}

TEST_CASE("output formats and --out") {
  std::vector<std::string> base{"enumerate", "--pres", pres("facet2000.cox"), "--sub", "FACET",
                                "--deterministic", "--progress-interval", "0"};
  auto tsv = base;
  tsv.insert(tsv.end(), {"--format", "tsv"});
  auto t = tcx_run(tsv);
  CHECK(t.out.find("index\t") != std::string::npos);
  CHECK(t.out.find("\t128\t") != std::string::npos);
  auto text = base;
  text.insert(text.end(), {"--format", "text"});
  CHECK(tcx_run(text).out.find("index: 128") != std::string::npos);
  auto bad = base;
  bad.insert(bad.end(), {"--format", "xml"});
  CHECK(tcx_run(bad).code == tcx::cli::EXIT_INPUT);
  auto path = scratch("report.json");
  auto to_file = base;
  to_file.insert(to_file.end(), {"--out", path.string()});
  auto f = tcx_run(to_file);
  CHECK(f.out.empty());
  CHECK(json::parse(slurp(path))["index"] == 128);
}

TEST_CASE("gf2-verify and a mutated data file") {
  auto ok = tcx_run({"gf2-verify"});
  REQUIRE(ok.code == tcx::cli::EXIT_OK);
  auto j = json::parse(ok.out);
  CHECK(j["ok"] == true);
  for (auto const& c : j["checks"]) CHECK(c["ok"] == true);

  auto orbit = tcx_run({"gf2-verify", "--orbit-only"});
  CHECK(json::parse(orbit.out)["orbit_size"] == 135);

  auto text = slurp(std::string(TCX_TEST_DATA_DIR) + "/o8plus2_generators.txt");
  auto pos = text.find("0 1 1 1 1 1 0 0");
  REQUIRE(pos != std::string::npos);
  text[pos + 14] = '1';
  auto mutated = scratch("mutated.txt");
  std::ofstream(mutated) << text;
  auto bad = tcx_run({"gf2-verify", "--data", mutated.string()});
  CHECK(bad.code == tcx::cli::EXIT_CHECK_FAILED);
  auto jb = json::parse(bad.out);
  CHECK(jb["ok"] == false);
  CHECK(jb["checks"][0]["check"] == "relators");
  CHECK(jb["checks"][0]["ok"] == false);

  auto corrupt = scratch("corrupt.txt");
  std::ofstream(corrupt) << "matrix A 2\n1 1\n";
  CHECK(tcx_run({"gf2-verify", "--data", corrupt.string()}).code == tcx::cli::EXIT_INPUT);
  CHECK(tcx_run({"gf2-verify", "--data", "/nonexistent"}).code == tcx::cli::EXIT_INPUT);
}

TEST_CASE("mix") {
  auto t = tcx_run({"mix", "--types", "3:single", "2:double"});
  REQUIRE(t.code == 0);
  auto j = json::parse(t.out);
  CHECK(j["result"] == "6:double");
  CHECK(j["result_vector"] == "(6600)");
  CHECK(tcx_run({"mix", "--types", "3:single"}).code == tcx::cli::EXIT_INPUT);
  CHECK(tcx_run({"mix", "--types", "3:single", "(3200)"}).code == tcx::cli::EXIT_INPUT);

  auto self = tcx_run({"mix", pres("facet2000.cox") + "@FACET",
                       pres("facet2000.cox") + "@FACET", "--progress-interval", "0"});
  REQUIRE(self.code == 0);
  auto js = json::parse(self.out);
  CHECK(js["order"] == js["left"]["order"]);
  CHECK(js["order"] == 2359296);

  auto big = tcx_run({"mix", "psi", "omega"});
  REQUIRE(big.code == 0);
  CHECK(json::parse(big.out)["order"] == 25082265600ULL);
  // five generators against six
  auto arity = scratch("five.cox");
  std::ofstream(arity) << "gens a b c d e;\ncoxeter [3,3,3,3];\n";
  CHECK(tcx_run({"mix", "psi", arity.string()}).code == tcx::cli::EXIT_INPUT);
}

TEST_CASE("stats") {
  auto r = tcx_run({"stats", "--pres", pres("table1_row1.cox"), "--deterministic",
                    "--progress-interval", "0"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["v"] == 32);
  CHECK(j["f"] == 32);
  CHECK(j["product_law"] == true);
  CHECK(j["group_order"] == 589824);
  CHECK(j["facet_type"] == "(2000)");
  CHECK(j["vertex_type"] == "(2000)");
}
