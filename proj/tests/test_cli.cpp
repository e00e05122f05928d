#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "referee/cli.hpp"
#include "referee/edge_list.hpp"
#include "referee/generators.hpp"

using namespace referee;
namespace fs = std::filesystem;

namespace {

const std::string kData = REFEREE_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "referee_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("run reconstructs path 1-2-3") {
  const auto r = cli({"run", "--protocol", "degen:k=1", "--graph", kData + "/path3.el"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp(kData + "/run_path3_degen1.txt"));
}

TEST_CASE("run writes graph and transcript files") {
  const auto graph = scratch("path3_out.el");
  const auto transcript = scratch("path3_transcript.txt");
  const auto r = cli({"run", "--protocol", "degen:k=1", "--graph", kData + "/path3.el", "--out", graph.string(),
                      "--transcript", transcript.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "max_bits 8\n");
  CHECK(slurp(graph) == slurp(kData + "/path3.el"));
  CHECK(slurp(transcript) == slurp(kData + "/transcript_path3_degen1.txt"));
}

TEST_CASE("run reports rejection with exit 1") {
  const auto r = cli({"run", "--protocol", "degen:k=2", "--graph", kData + "/k4.el"});
  CHECK(r.code == kExitDomainRejection);
  CHECK(r.out == "rejected degeneracy exceeds k\nmax_bits 24\n");
}

TEST_CASE("recognize prints the verdict and exits 0") {
  const auto r = cli({"recognize", "--protocol", "degen:k=2", "--graph", kData + "/k4.el"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp(kData + "/recognize_k4_degen2.txt"));
  const auto ok = cli({"recognize", "--protocol", "degen:k=3", "--graph", kData + "/k4.el"});
  CHECK(ok.out == "verdict accepted\nmax_bits 42\n");
  const auto gen = cli({"recognize", "--protocol", "degen:k=0,generalized", "--graph", kData + "/k4.el"});
  CHECK(gen.out == "verdict accepted\nmax_bits " + std::to_string(2 * 3 * 2) + "\n");
}

TEST_CASE("count-square-free") {
  CHECK(cli({"count-square-free", "--n", "3"}).out == "8\n");
  CHECK(cli({"count-square-free", "--n", "1"}).out == "1\n");
  const auto refused = cli({"count-square-free", "--n", "8"});
  CHECK(refused.code == kExitDomainRejection);
  CHECK_FALSE(refused.err.empty());
}

TEST_CASE("encode and decode") {
  const auto enc = cli({"encode", "--graph", kData + "/path3.el", "--k", "1"});
  CHECK(enc.code == kExitOk);
  CHECK(enc.out == slurp(kData + "/encode_path3_k1.txt"));
  const auto dec = cli({"decode", "--messages", kData + "/encode_path3_k1.txt"});
  CHECK(dec.code == kExitOk);
  CHECK(dec.out == slurp(kData + "/decode_path3_k1.txt"));

  // With k = 2 every neighbourhood decodes.
  const auto file = scratch("path3_k2.txt");
  CHECK(cli({"encode", "--graph", kData + "/path3.el", "--k", "2", "--out", file.string()}).code == kExitOk);
  CHECK(cli({"decode", "--messages", file.string()}).out ==
        "id 1 degree 1 neighbors 2\nid 2 degree 2 neighbors 1 3\nid 3 degree 1 neighbors 2\n");
}

TEST_CASE("gen is deterministic and requires a seed") {
  const auto a = cli({"gen", "--n", "30", "--k", "2", "--seed", "5"});
  const auto b = cli({"gen", "--n", "30", "--k", "2", "--seed", "5"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out == write_edge_list(gen_k_degenerate(30, 2, 5)));
  CHECK(cli({"gen", "--n", "30", "--k", "2"}).code == kExitUsage);
}

TEST_CASE("reduce reconstructs and reports sizes") {
  const auto r = cli({"reduce", "--kind", "diameter", "--graph", kData + "/k4.el", "--oracle", "exact-incidence"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp(kData + "/k4.el") +
                     "kind diameter\n"
                     "decider oracle:diameter<=3,incidence\n"
                     "decider_n 7\n"
                     "parts 3\n"
                     "framing fixed\n"
                     "decider_max_bits 7\n"
                     "max_bits 21\n");
  const auto sq = cli({"reduce", "--kind", "square", "--graph", kData + "/path3.el"});
  CHECK(sq.code == kExitOk);
  CHECK(sq.out.rfind(slurp(kData + "/path3.el"), 0) == 0);
  CHECK(sq.out.find("framing elias-gamma\n") != std::string::npos);

  const auto bad = cli({"reduce", "--kind", "square", "--graph", kData + "/k4.el"});
  CHECK(bad.code == kExitDomainRejection);
  CHECK(bad.err.find("precondition") != std::string::npos);
}

TEST_CASE("frugality") {
  const auto r = cli({"frugality", "--protocol", "degen:k=2", "--n", "8", "16", "32", "--seed", "1", "--bound-c",
                      "20"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("n 8 max_bits 32") != std::string::npos);
  CHECK(r.out.find("verdict frugal") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"bogus"}).code == kExitUsage);
  CHECK(cli({"run", "--graph", kData + "/path3.el"}).code == kExitUsage);
  CHECK(cli({"run", "--protocol", "degen:k=x", "--graph", kData + "/path3.el"}).code == kExitUsage);
  CHECK(cli({"run", "--protocol", "degen:k=1", "--graph", kData + "/missing.el"}).code == kExitUsage);
  CHECK(cli({"reduce", "--kind", "pentagon", "--graph", kData + "/path3.el"}).code == kExitUsage);

  const auto bad = scratch("bad.el");
  std::ofstream(bad) << "n 3\n1 1\n";
  const auto r = cli({"run", "--protocol", "degen:k=1", "--graph", bad.string()});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("every subcommand documents its flags") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> expected{
      {"gen", {"--n", "--k", "--seed", "--out"}},
      {"encode", {"--graph", "--k", "--out"}},
      {"decode", {"--messages", "--out"}},
      {"run", {"--protocol", "--graph", "--out", "--transcript"}},
      {"recognize", {"--protocol", "--graph"}},
      {"reduce", {"--kind", "--graph", "--oracle", "--out"}},
      {"frugality", {"--protocol", "--n", "--seed", "--k", "--samples", "--bound-c"}},
      {"count-square-free", {"--n"}},
  };
  for (const auto& [sub, flags] : expected) {
    const auto r = cli({sub, "--help"});
    CHECK(r.code == kExitOk);
    for (const auto& flag : flags) {
      INFO(sub << " " << flag);
      CHECK(r.out.find(flag) != std::string::npos);
    }
  }
  const auto top = cli({"--help"});
  CHECK(top.code == kExitOk);
  CHECK(top.out.find("count-square-free") != std::string::npos);
}

TEST_CASE("the installed binary matches the in-process entry point") {
  const auto out = scratch("binary_out.txt");
  const std::string cmd = std::string("\"") + REFEREE_CLI_PATH + "\" run --protocol degen:k=1 --graph \"" + kData +
                          "/path3.el\" > \"" + out.string() + "\"";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out) == slurp(kData + "/run_path3_degen1.txt"));
}
