#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "albertine/models.hpp"
#include "albertine/tits.hpp"

using namespace alb;

TEST_CASE("signature table matches the closed forms") {
  auto table = signature_table();
  CHECK(table.size() == 11);
  for (const SigEntry& e : table) {
    INFO(e.name);
    CHECK(e.computed == e.expected);
  }
}

TEST_CASE("restricted octave tables are composition algebras") {
  Ctx q = RingCtx::rationals();
  for (int r = 0; r <= 2; ++r) {
    CompAlg c = definite_comp(q, r);
    CHECK(c.rank == std::size_t(1) << r);
    CHECK(comp_verify(c).all_pass());
  }
  // {1, e1, e2} misses e1 e2 = e4
  CompAlg oct = comp_construct(CompKind::real_octonions, q);
  CHECK_THROWS_AS(comp_restrict(oct, {0, 1, 2}), AlbError);
}

TEST_CASE("a seeded triple generates the split Albert algebra") {
  CubicJordan j =
      her3(her_layout(comp_construct(CompKind::zorn, RingCtx::gf(2))));
  auto gens = generating_triple(j, 1);
  CHECK(gens.size() == 3);
  CHECK(subalgebra_generated(j, gens).dim() == 27);
}

#ifdef ALBERTINE_CLI_PATH

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(ALBERTINE_CLI_PATH) + " " + args +
                    " > /dev/null 2> /dev/null";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("binary exit codes") {
  CHECK(run("signature split-27") == 0);
  CHECK(run("signature her3-8") == 0);
  CHECK(run("census roots") == 0);
  CHECK(run("generators mat2-f2") == 0);
  CHECK(run("diagonalize --field 7 --seed 3 --trials 2") == 0);
  CHECK(run("signature no-such-model") == 2);
  CHECK(run("no-such-subcommand") == 2);
  CHECK(run("verify") == 2);
}

TEST_CASE("json report emission") {
  std::string path = "/tmp/albertine_cli_report.json";
  std::remove(path.c_str());
  CHECK(run("--json " + path + " verify comp:zorn") == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  CHECK(text.find("\"version\"") != std::string::npos);
  CHECK(text.find("\"command\": \"verify comp:zorn\"") != std::string::npos);
  CHECK(text.find("\"paper_ref\"") != std::string::npos);
  CHECK(text.find("\"elapsed_ms\"") != std::string::npos);
  CHECK(text.find("\"fail\"") == std::string::npos);
}

#endif
