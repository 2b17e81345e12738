#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jobs.hpp"
#include "json_io.hpp"
#include "textio.hpp"
#include "corpus.hpp"

using namespace twochar;
using namespace twochar::testcorpus;

namespace {

struct JobResult {
  int status = 0;
  std::string out;
  std::string err;
};

JobResult run(const JobSpec& job) {
  std::ostringstream out;
  std::ostringstream err;
  JobResult result;
  result.status = run_job(job, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

JobSpec builtin_job(const std::string& command, const std::string& group,
                    const std::string& format = "text") {
  JobSpec job;
  job.command = command;
  job.builtin = group;
  job.format = format;
  return job;
}

template <typename Fn>
void expect_parse_error(Fn&& fn, const std::string& fragment) {
  try {
    fn();
    FAIL_CHECK("expected parse_error mentioning '", fragment, "'");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

/// Scratch file helper; removed on destruction.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path(name) {
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("scalar JSON representation round-trips") {
  const std::vector<Cyclotomic> samples{
      Cyclotomic::zero(),
      Cyclotomic::one(),
      -Cyclotomic::one(),
      Cyclotomic(Rational(5) / Rational(2)),
      Cyclotomic::root_of_unity(3, 1),
      Cyclotomic::root_of_unity(12, 7),
      Cyclotomic::root_of_unity(6, 1) + Cyclotomic(Rational(2))};
  for (const Cyclotomic& x : samples) {
    ordered_json j = scalar_to_json(x);
    Cyclotomic back = scalar_from_json(j, "test");
    CHECK(back == x);
    CHECK(dump_json(scalar_to_json(back)) == dump_json(j));
  }
  CHECK(scalar_from_json(ordered_json(3), "test") == Cyclotomic(Rational(3)));
  CHECK(scalar_from_json(ordered_json("-1/2"), "test") ==
        Cyclotomic(Rational(-1) / Rational(2)));
  expect_parse_error(
      [] { scalar_from_json(ordered_json::array(), "field"); }, "field");
  expect_parse_error(
      [] {
        scalar_from_json(ordered_json{{"order", 3}}, "field");
      },
      "coeffs");
}

TEST_CASE("2-group JSON round-trips byte-identically") {
  std::vector<FiniteTwoGroup> groups;
  for (const std::string& name : builtin_two_group_names()) {
    groups.push_back(builtin_two_group(name));
  }
  for (const FiniteTwoGroup& tg : engine_corpus()) groups.push_back(tg);
  for (const FiniteTwoGroup& tg : groups) {
    ordered_json j1 = two_group_to_json(tg);
    FiniteTwoGroup back = two_group_from_json(j1);
    CHECK(back == tg);
    CHECK(back.name() == tg.name());
    CHECK(dump_json(two_group_to_json(back)) == dump_json(j1));
  }
}

TEST_CASE("representation JSON round-trips byte-identically") {
  for (const std::string& name : builtin_two_group_names()) {
    FiniteTwoGroup tg = builtin_two_group(name);
    for (const MonomialTwoRep& rep : builtin_irreps(tg)) {
      ordered_json j1 = rep_to_json(rep);
      MonomialTwoRep back = rep_from_json(tg, j1);
      CHECK(back.equal_data(rep));
      CHECK(back.name() == rep.name());
      CHECK(dump_json(rep_to_json(back)) == dump_json(j1));
    }
  }
  FiniteTwoGroup fuzz = fuzz_z2_z4();
  MonomialTwoRep triv = trivial_rep(fuzz);
  CHECK(rep_from_json(fuzz, rep_to_json(triv)).equal_data(triv));
}

TEST_CASE("parsing reports field context and distinguishes validation") {
  expect_parse_error([] { parse_json("{ nope"); }, "invalid JSON");
  expect_parse_error(
      [] { two_group_from_json(parse_json("[1,2]")); }, "object");
  expect_parse_error(
      [] {
        two_group_from_json(parse_json(
            R"({"pi1":{"kind":"cyclic","n":2},"pi2":{"factors":[2]},)"
            R"("action":[[0,1],[0,1]]})"));
      },
      "scalar_order");
  expect_parse_error(
      [] {
        two_group_from_json(parse_json(
            R"({"pi1":{"kind":"weird"},"pi2":{"factors":[2]},)"
            R"("action":[[0,1],[0,1]],"scalar_order":2})"));
      },
      "kind");
  expect_parse_error(
      [] {
        two_group_from_json(parse_json(
            R"({"pi1":{"kind":"cyclic","n":2},"pi2":{"factors":[2]},)"
            R"("action":[[0,1],[0,1]],"alpha":{"entries":[[0,1]]},)"
            R"("scalar_order":2})"));
      },
      "alpha.entries[0]");

  // Well-formed JSON whose associator is not normalized: a validation
  // failure rather than a parse failure.
  CHECK_THROWS_AS(
      two_group_from_json(parse_json(
          R"({"pi1":{"kind":"cyclic","n":2},"pi2":{"factors":[2]},)"
          R"("action":[[0,1],[0,1]],"alpha":{"entries":[[0,1,1,1]]},)"
          R"("scalar_order":2})")),
      validation_error);

  FiniteTwoGroup z2 = builtin_two_group("grp(Z2)");
  expect_parse_error(
      [&] { rep_from_json(z2, parse_json(R"({"perm":{}})")); }, "n");
  expect_parse_error(
      [&] {
        rep_from_json(z2, parse_json(R"({"n":1,"perm":{"9":[0]}})"));
      },
      "perm");
  expect_parse_error(
      [&] {
        rep_from_json(z2, parse_json(R"({"n":1,"c":[[0,0,5,1]]})"));
      },
      "c[0]");
}

TEST_CASE("run_job emits documented artifacts with correct exit codes") {
  SUBCASE("fusion text contains the catalogue relation") {
    JobResult r = run(builtin_job("fusion", "G1"));
    CHECK(r.status == 0);
    CHECK(r.out.find("S \xE2\x8A\xA0 S = \xF0\x9D\x9F\x99_c + S") !=
          std::string::npos);
  }
  SUBCASE("inner JSON carries the orthogonality matrix") {
    JobResult r = run(builtin_job("inner", "G1", "json"));
    REQUIRE(r.status == 0);
    ordered_json j = parse_json(r.out);
    CHECK(j["matrix"] ==
          ordered_json::parse("[[2,1,0],[1,2,0],[0,0,1]]"));
  }
  SUBCASE("chartable JSON has graded dims") {
    JobResult r = run(builtin_job("chartable", "G1", "json"));
    REQUIRE(r.status == 0);
    ordered_json j = parse_json(r.out);
    CHECK(j["rows"][2]["cells"][0]["dim"] == 2);
    CHECK(j["rows"][2]["cells"][1]["dim"] == 0);
  }
  SUBCASE("center JSON reports the Lagrangian flags") {
    JobSpec job = builtin_job("center", "G2", "json");
    job.irrep = "T";
    JobResult r = run(job);
    REQUIRE(r.status == 0);
    ordered_json j = parse_json(r.out);
    CHECK(j["report"]["lagrangian"] == true);
    CHECK(j["object"]["grades"][0]["dim"] == 2);
    CHECK(j["object"]["grades"][1]["dim"] == 0);
  }
  SUBCASE("check passes for catalogue groups") {
    JobResult g2 = run(builtin_job("check", "G2"));
    CHECK(g2.status == 0);
    CHECK(g2.out.find("all checks passed") != std::string::npos);
    JobResult s3 = run(builtin_job("check", "grp(S3)"));
    CHECK(s3.status == 0);
    CHECK(s3.out.find("skipped") != std::string::npos);
  }
  SUBCASE("degenerate fusion is a validation failure") {
    JobResult r = run(builtin_job("fusion", "grp(S3)"));
    CHECK(r.status == 1);
    CHECK(r.err.find("degenerate") != std::string::npos);
  }
  SUBCASE("usage and parse problems exit with 2") {
    CHECK(run(builtin_job("describe", "NOPE")).status == 2);
    CHECK(run(builtin_job("bogus", "G1")).status == 2);
    CHECK(run(builtin_job("fusion", "G1", "yaml")).status == 2);
    JobSpec no_input;
    no_input.command = "describe";
    CHECK(run(no_input).status == 2);
    JobSpec no_irrep = builtin_job("center", "G1");
    CHECK(run(no_irrep).status == 2);
  }
  SUBCASE("parallel output is byte-identical to serial") {
    for (const char* cmd : {"fusion", "inner"}) {
      JobSpec serial = builtin_job(cmd, "grp(Z3)");
      JobSpec parallel = serial;
      parallel.parallel = true;
      CHECK(run(serial).out == run(parallel).out);
    }
  }
  SUBCASE("file input and output work") {
    FiniteTwoGroup fuzz = fuzz_z2_z4();
    TempFile def("test_jobs_group.json",
                 dump_json(two_group_to_json(fuzz)));
    JobSpec job;
    job.command = "describe";
    job.input_path = def.path;
    JobResult direct = run(job);
    CHECK(direct.status == 0);
    CHECK(direct.out.find("pi1 order: 2") != std::string::npos);

    JobSpec to_file = job;
    to_file.output_path = "test_jobs_out.txt";
    JobResult wrote = run(to_file);
    CHECK(wrote.status == 0);
    CHECK(wrote.out.empty());
    std::ifstream in(to_file.output_path, std::ios::binary);
    std::ostringstream read_back;
    read_back << in.rdbuf();
    CHECK(read_back.str() == direct.out);
    std::remove(to_file.output_path.c_str());

    // A valid custom 2-group outside the catalogue has no irrep table.
    JobSpec fusion_custom;
    fusion_custom.command = "fusion";
    fusion_custom.input_path = def.path;
    CHECK(run(fusion_custom).status == 2);
  }
}
