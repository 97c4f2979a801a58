#include <doctest.h>

#include <json.hpp>
#include <string>

#include "cli_runner.hpp"

using nlohmann::json;
using testutil::run_cli;

namespace {

const std::string kCli = SEMIDER_CLI_PATH;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify passes a valid derivation and echoes its configuration") {
  auto r = run_cli(kCli, "verify --semiring bool --family utm --n 3 --derivation strip-diag --mode exhaustive", "verify_ok");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["config"]["semiring"] == "bool");
  CHECK(rep["config"]["derivation"] == "strip-diag");
  CHECK(rep["config"]["n"] == 3);
  CHECK(rep["mode"] == "exhaustive");
  bool saw_leibniz = false;
  for (const auto& c : rep["checks"])
    if (c["name"] == "leibniz") {
      saw_leibniz = true;
      CHECK(c["passed"] == true);
      CHECK(c["cases"].get<std::uint64_t>() > 0);
    }
  CHECK(saw_leibniz);
}

TEST_CASE("verify reports a refuted derivation with exit one and witnesses") {
  auto r = run_cli(kCli, "verify --semiring nat --family utm --n 2 --derivation example5.delta1 --mode exhaustive --max-entry 2", "verify_bad");
  CHECK(r.exit_code == 1);
  const json rep = json::parse(r.out);
  bool saw_witness = false;
  for (const auto& c : rep["checks"])
    if (c["name"] == "leibniz" && !c["witnesses"].empty()) saw_witness = true;
  CHECK(saw_witness);
}

TEST_CASE("usage errors exit with two and an explanation") {
  auto r1 = run_cli(kCli, "verify --semiring bool --family utm --n 3 --derivation strip-diag --mode sampled", "no_seed");
  CHECK(r1.exit_code == 2);
  CHECK(r1.err.find("seed") != std::string::npos);

  CHECK(run_cli(kCli, "verify --semiring klein --family utm --n 3 --derivation strip-diag", "bad_sr").exit_code == 2);
  CHECK(run_cli(kCli, "verify --semiring bool --family circulant --n 3 --derivation example4", "bad_fam").exit_code == 2);
  CHECK(run_cli(kCli, "theorem --id t9 --n 3 --semiring bool", "bad_id").exit_code == 2);
  CHECK(run_cli(kCli, "frobnicate", "bad_cmd").exit_code == 2);
  // The t-suites refuse carriers without additive idempotency up front.
  CHECK(run_cli(kCli, "theorem --id t1 --n 3 --semiring nat", "bad_carrier").exit_code == 2);
}

TEST_CASE("default family is inferred from the derivation") {
  auto r = run_cli(kCli, "verify --semiring bool --n 3 --derivation example1 --mode exhaustive", "default_fam");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["config"]["family"] == "arrow");

  // Inner maps carry no default family.
  CHECK(run_cli(kCli, "verify --semiring bool --n 3 --derivation inner:[[1,0,0],[0,1,0],[0,0,1]] --mode exhaustive", "no_default").exit_code == 2);
}

TEST_CASE("classify emits the kind and index") {
  auto r = run_cli(kCli, "classify --derivation example6 --semiring bool --n 3", "classify");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["kind"] == "nilpotent");
  CHECK(rep["index"] == 2);
  CHECK(rep["config"]["family"] == "corner-equal");
}

TEST_CASE("theorem suites pass with the default allowlist and fail without it") {
  auto ok = run_cli(kCli, "theorem --id t3 --n 3 --semiring bool", "t3_default");
  CHECK(ok.exit_code == 0);
  const json rep = json::parse(ok.out);
  int known = 0;
  for (const auto& item : rep["items"])
    if (item["status"] == "refuted-known") ++known;
  CHECK(known == 2);

  auto strict =
      run_cli(kCli, "theorem --id t3 --n 3 --semiring bool --allow-known-refutations \"\"", "t3_strict");
  CHECK(strict.exit_code == 1);
  const json srep = json::parse(strict.out);
  int refuted = 0;
  for (const auto& item : srep["items"])
    if (item["status"] == "refuted") ++refuted;
  CHECK(refuted == 2);
}

TEST_CASE("commutant counts the matching members") {
  auto r = run_cli(kCli, "commutant --matrix shift-cyclic --n 2 --semiring bool --family all", "comm");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["count"] == 4);
  CHECK(rep["commutant"].size() == 4);
}

TEST_CASE("pattern extracts supports from explicit matrices") {
  testutil::spit("pattern_in.json", "[[null,3],[null,null]]");
  auto r = run_cli(kCli, "pattern --input pattern_in.json --semiring maxplus-int", "pattern");
  std::remove("pattern_in.json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out) == json::parse("[[0,1],[0,0]]"));
}

TEST_CASE("reports are byte identical run for run") {
  const std::string args =
      "verify --semiring maxplus-int --family ut-toeplitz --n 3 --derivation strip-diag "
      "--mode sampled --seed 42 --samples 200";
  auto a = run_cli(kCli, args, "det_a");
  auto b = run_cli(kCli, args, "det_b");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto t1 = run_cli(kCli, "theorem --id t2 --n 4 --semiring bool", "det_t1");
  auto t2 = run_cli(kCli, "theorem --id t2 --n 4 --semiring bool", "det_t2");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out == t2.out);
}

TEST_CASE("reports can be routed to a file") {
  auto r = run_cli(kCli, "classify --derivation example6 --semiring bool --n 3 --output classify_out.json", "to_file");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(testutil::slurp("classify_out.json"));
  std::remove("classify_out.json");
  CHECK(rep["kind"] == "nilpotent");
}

TEST_CASE("help is a successful exit") {
  CHECK(run_cli(kCli, "--help", "help").exit_code == 0);
  CHECK(run_cli(kCli, "verify --help", "help_verify").exit_code == 0);
}

}  // TEST_SUITE
