#include <cstdlib>

#include "doctest.h"
#include "fcg/report.hpp"
#include "fcg/theorems.hpp"
#include "support.hpp"

using namespace fcg;

TEST_SUITE("io") {
  TEST_CASE("fixture corpus") {
    const auto names = io::fixture_names();
    for (const char* n : {"S3", "D8", "A4", "C12", "Dinf", "ZxS3", "Z2C4", "trivial"})
      CHECK(std::find(names.begin(), names.end(), n) != names.end());
  }

  TEST_CASE("every fixture loads and its chains validate") {
    for (const auto& name : io::fixture_names()) {
      CAPTURE(name);
      const io::GroupFile f = io::load_fixture(name);
      CHECK(f.name == name);
      CHECK(f.digest.size() == 64);
      CHECK_FALSE(f.chains.empty());
      for (const auto& c : f.chains) {
        FCChain chain = c.kind == ChainKind::Nilpotent ? check_bounded_fc_nilpotent_chain(c.to_chain())
                                                       : check_bounded_fc_solvable_chain(c.to_chain());
        CHECK(chain.valid());
      }
    }
  }

  TEST_CASE("element specs") {
    const Group g = test::fixture("Dinf").group;
    CHECK(io::parse_element(g, R"({"t": [3], "f": "r"})") == test::affine(g, {3}, "r"));
    CHECK(io::parse_element(g, R"({"t": [-1]})") == test::affine(g, {-1}));
    CHECK(io::parse_element(g, R"({"f": [2, 1]})") == test::affine(g, {0}, "r"));
    CHECK(io::parse_element(g, R"("t*r")") == test::word(g, "t*r"));
    CHECK_THROWS_AS(io::parse_element(g, "[2, 1]"), InputError);
    CHECK_THROWS_AS(io::parse_element(g, R"({"t": [1, 2]})"), InputError);
    CHECK(io::parse_subgroup(g, R"("*")") == Subgroup::whole(g));

    const Group s = test::fixture("S3").group;
    CHECK(io::parse_element(s, "[2, 3, 1]") == test::word(s, "a"));
    CHECK_THROWS_AS(io::parse_element(s, "[2, 3]"), InputError);
  }

  TEST_CASE("schema errors") {
    CHECK_THROWS_AS(io::parse_group("{"), InputError);
    CHECK_THROWS_AS(io::parse_group(R"({"schema": "fc-group/2", "kind": "finite-permutation"})"), InputError);
    CHECK_THROWS_AS(io::parse_group(R"({"schema": "fc-group/1", "kind": "finite-permutation", "degree": 2,
                                       "generators": {"a": [1, 1]}})"),
                    InputError);
    CHECK_THROWS_AS(io::parse_group(R"({"schema": "fc-group/1", "kind": "finite-permutation", "degree": 2,
                                       "generators": {}, "colour": 1})"),
                    InputError);
    // the action of an involution by an order-4 matrix is not a homomorphism
    CHECK_THROWS_AS(io::parse_group(R"({"schema": "fc-group/1", "kind": "affine", "rank": 2,
                                       "finite_part": {"degree": 2, "generators": {"r": [2, 1]}},
                                       "action": {"r": [[0, -1], [1, 0]]}})"),
                    InputError);
  }

  TEST_CASE("chain files") {
    const io::GroupFile f = test::fixture("Dinf");
    const io::NamedChain c =
        io::parse_chain(R"({"schema": "fc-chain/1", "group": "Dinf", "kind": "nilpotent", "levels": [[], ["t"], "*"]})", f);
    CHECK(c.levels.size() == 3);
    CHECK_THROWS_AS(io::parse_chain(R"({"schema": "fc-chain/1", "group": "S3", "kind": "nilpotent", "levels": [[]]})", f),
                    InputError);
    CHECK_THROWS_AS(io::parse_chain(R"({"schema": "fc-chain/1", "kind": "abelian", "levels": [[]]})", f), InputError);
  }

  TEST_CASE("digests") {
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("missing files") {
    CHECK_THROWS_AS(io::resolve_group("no-such-group"), IoError);
    CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), IoError);
  }

  TEST_CASE("reports are deterministic and carry method tags") {
    const io::GroupFile f = test::fixture("Dinf");
    const RunResult a = run_analysis("tower", f, std::nullopt, std::nullopt);
    const RunResult b = run_analysis("tower", f, std::nullopt, std::nullopt);
    CHECK(a.exit == ExitCode::Ok);
    CHECK(a.report == b.report);
    CHECK(a.report.find("\"schema\": \"fc-report/1\"") != std::string::npos);
    CHECK(a.report.find("\"method\": \"exact-index\"") != std::string::npos);
    CHECK(a.report.find(f.digest) != std::string::npos);
  }

  TEST_CASE("report exit codes") {
    CHECK(run_analysis("neumann", test::fixture("Dinf"), std::nullopt, std::nullopt).exit == ExitCode::ValidationFailure);
    CHECK(run_analysis("neumann", test::fixture("ZxS3"), std::nullopt, std::nullopt).exit == ExitCode::Ok);
    const io::GroupFile d = test::fixture("Dinf");
    const io::NamedChain bad =
        io::parse_chain(R"({"schema": "fc-chain/1", "kind": "nilpotent", "levels": [[], "*"]})", d);
    CHECK(run_analysis("check-chain", d, bad, std::nullopt).exit == ExitCode::ValidationFailure);
    CHECK(run_analysis("tower", d, bad, std::nullopt).exit == ExitCode::ValidationFailure);
    CHECK_THROWS_AS(run_analysis("frobnicate", d, std::nullopt, std::nullopt), InputError);
  }
}
