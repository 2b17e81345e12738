/**
 * @file test_twrep.cpp
 * @brief Unit tests for monomial 2-representations: the builtin catalogue,
 *        the algebraic constructions, induction, and validator negativity.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "twrep.hpp"

using namespace twochar;
using namespace twochar::testcorpus;

namespace {

bool mentions(const ValidationReport& report, const std::string& text) {
  for (const auto& problem : report.problems) {
    if (problem.find(text) != std::string::npos) return true;
  }
  return false;
}

std::vector<std::string> multiset_of_values(const MonomialTwoRep& rep, int g,
                                            int a) {
  std::vector<std::string> values;
  for (int i = 0; i < rep.dimension(); ++i) {
    values.push_back(rep.tau(g, a, i).to_string());
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

TEST_CASE("builtin irreducible catalogue") {
  const std::map<std::string, std::vector<int>> expected_dims = {
      {"G1", {1, 2, 2}},      {"G2", {1, 2, 2}},   {"BA(Z2)", {1, 1}},
      {"BA(Z3)", {1, 1, 1}},  {"grp(Z2)", {1, 2}}, {"grp(Z3)", {1, 3}},
      {"grp(S3)", {1, 6, 3, 2}}};

  for (const auto& [name, dims] : expected_dims) {
    const auto group = builtin_two_group(name);
    const auto irreps = builtin_irreps(group);
    REQUIRE(irreps.size() == dims.size());
    for (size_t r = 0; r < irreps.size(); ++r) {
      CHECK(irreps[r].dimension() == dims[r]);
      CHECK(check_rep(group, irreps[r].dimension(), irreps[r].sigma_table(),
                      irreps[r].cochain_table(), irreps[r].tau_table())
                .ok());
      CHECK(irreps[r].group() == group);
    }
    // The tensor unit comes first in every catalogue.
    CHECK(irreps[0].equal_data(trivial_rep(group)));
    if (name.rfind("BA", 0) != 0) {
      CHECK(irreps[0].name() == "\xF0\x9D\x9F\x99");
    }
  }

  const auto g1_irreps = builtin_irreps(builtin_two_group("G1"));
  CHECK(g1_irreps[1].name() == "\xF0\x9D\x9F\x99_c");
  CHECK(g1_irreps[2].name() == "S");
  const auto g2_irreps = builtin_irreps(builtin_two_group("G2"));
  CHECK(g2_irreps[2].name() == "T");
  const auto ba2 = builtin_irreps(builtin_two_group("BA(Z2)"));
  CHECK(ba2[0].name() == "Vect^chi[0]");
  CHECK(ba2[1].name() == "Vect^chi[1]");
  const auto s3_irreps = builtin_irreps(builtin_two_group("grp(S3)"));
  CHECK(s3_irreps[1].name() == "Ind({0})");
  CHECK(s3_irreps[2].name() == "Ind({0,1})");
  CHECK(s3_irreps[3].name() == "Ind({0,4,5})");

  CHECK_THROWS_AS(builtin_irreps(fuzz_z2_z4()), parse_error);
}

TEST_CASE("catalogue scalar data") {
  const auto g1 = builtin_two_group("G1");
  const auto s = builtin_irreps(g1)[2];
  const Cyclotomic omega = root_of_unity(3, 1);
  CHECK(s.tau(0, 1, 0) == omega);
  CHECK(s.tau(0, 1, 1) == omega * omega);
  CHECK(s.tau(0, 2, 0) == omega * omega);
  CHECK(s.sigma(1, 0) == 1);
  // The nontrivial object swaps the two line characters.
  CHECK(s.tau(1, 1, 0) == omega * omega);
  CHECK(s.tau(1, 1, 1) == omega);

  const auto g2 = builtin_two_group("G2");
  const auto t = builtin_irreps(g2)[2];
  const Cyclotomic minus_one = -Cyclotomic::one();
  CHECK(t.cochain(1, 1, 0) == Cyclotomic::one());
  CHECK(t.cochain(1, 1, 1) == minus_one);
  for (int g = 0; g < 2; ++g) {
    for (int i = 0; i < 2; ++i) CHECK(t.tau(g, 1, i) == minus_one);
  }

  const auto ba3 = builtin_irreps(builtin_two_group("BA(Z3)"));
  CHECK(ba3[1].tau(0, 1, 0) == omega);
  CHECK(ba3[2].tau(0, 1, 0) == omega * omega);

  // tau is determined by its identity slice through sigma, for every
  // catalogue entry of every builtin 2-group.
  for (const auto& name : builtin_two_group_names()) {
    const auto group = builtin_two_group(name);
    for (const auto& rep : builtin_irreps(group)) {
      for (int g = 0; g < group.pi1().order(); ++g) {
        for (int a = 0; a < group.pi2().order(); ++a) {
          for (int i = 0; i < rep.dimension(); ++i) {
            CHECK(rep.tau(g, a, i) ==
                  rep.tau(group.e(), a, rep.sigma(g, i)));
          }
        }
      }
    }
  }
}

TEST_CASE("trivial representation on every corpus 2-group") {
  for (const auto& group : engine_corpus()) {
    const auto unit = trivial_rep(group);
    CHECK(unit.dimension() == 1);
    CHECK(check_rep(group, 1, unit.sigma_table(), unit.cochain_table(),
                    unit.tau_table())
              .ok());
  }
}

TEST_CASE("direct sums and tensor products") {
  const auto g1 = builtin_two_group("G1");
  const auto irreps = builtin_irreps(g1);
  const auto& unit = irreps[0];
  const auto& unit_c = irreps[1];
  const auto& s = irreps[2];

  const auto sum = direct_sum(unit_c, s);
  CHECK(sum.dimension() == 4);
  CHECK(sum.sigma(1, 0) == 1);
  CHECK(sum.sigma(1, 2) == 3);
  CHECK(sum.tau(0, 1, 2) == s.tau(0, 1, 0));
  CHECK(direct_sum(direct_sum(unit, unit_c), s)
            .equal_data(direct_sum(unit, direct_sum(unit_c, s))));

  const auto square = deligne_tensor(s, s);
  CHECK(square.dimension() == 4);
  const Cyclotomic omega = root_of_unity(3, 1);
  const auto values = multiset_of_values(square, 0, 1);
  const std::vector<std::string> expected = {
      Cyclotomic::one().to_string(), Cyclotomic::one().to_string(),
      omega.to_string(), (omega * omega).to_string()};
  auto sorted_expected = expected;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  CHECK(values == sorted_expected);

  CHECK(deligne_tensor(unit, s).equal_data(s));
  CHECK(deligne_tensor(deligne_tensor(unit_c, s), s)
            .equal_data(deligne_tensor(unit_c, deligne_tensor(s, s))));

  const auto g2 = builtin_two_group("G2");
  const auto t = builtin_irreps(g2)[2];
  const auto t_squared = deligne_tensor(t, t);
  CHECK(t_squared.dimension() == 4);
  CHECK(t_squared.tau(0, 1, 0) == Cyclotomic::one());
  CHECK_THROWS_AS(direct_sum(s, t), validation_error);
  CHECK_THROWS_AS(deligne_tensor(s, t), validation_error);
}

TEST_CASE("opposites") {
  const Cyclotomic omega = root_of_unity(3, 1);
  for (const auto& name : builtin_two_group_names()) {
    const auto group = builtin_two_group(name);
    for (const auto& rep : builtin_irreps(group)) {
      const auto op = opposite(rep);
      CHECK(op.name() == rep.name() + "^op");
      CHECK(opposite(op).equal_data(rep));
    }
  }
  const auto s = builtin_irreps(builtin_two_group("G1"))[2];
  CHECK(opposite(s).tau(0, 1, 0) == omega * omega);
  const auto t = builtin_irreps(builtin_two_group("G2"))[2];
  CHECK(opposite(t).cochain(1, 1, 1) == -Cyclotomic::one());
  CHECK(opposite(t).tau(0, 1, 0) == -Cyclotomic::one());
}

TEST_CASE("induced representations") {
  const auto grp_s3 = builtin_two_group("grp(S3)");
  const auto s3 = grp_s3.pi1();
  auto ones_beta = [](int H) {
    return std::vector<std::vector<Cyclotomic>>(
        H, std::vector<Cyclotomic>(H, Cyclotomic::one()));
  };

  const std::vector<int> z2 = {0, 1};
  const auto ind = induced_rep(grp_s3, z2, ones_beta(2));
  CHECK(ind.dimension() == 3);
  CHECK(ind.name() == "Ind({0,1})");
  for (int g = 0; g < 6; ++g) {
    const auto expected = coset_action(s3, z2, g);
    for (int i = 0; i < 3; ++i) {
      CHECK(ind.sigma(g, i) == expected[i]);
      for (int h = 0; h < 6; ++h) CHECK(ind.cochain(g, h, i).is_one());
    }
  }

  const std::vector<int> whole = {0, 1, 2, 3, 4, 5};
  CHECK(induced_rep(grp_s3, whole, ones_beta(6))
            .equal_data(trivial_rep(grp_s3)));

  // Twisted induction from the whole group: the sign cocycle on Z2.
  const auto grp_z2 = builtin_two_group("grp(Z2)");
  std::vector<std::vector<Cyclotomic>> sign_beta = ones_beta(2);
  sign_beta[1][1] = -Cyclotomic::one();
  const auto twisted = induced_rep(grp_z2, {0, 1}, sign_beta, "Vect^beta");
  CHECK(twisted.dimension() == 1);
  CHECK(twisted.cochain(1, 1, 0) == -Cyclotomic::one());

  // Failure modes.
  CHECK_THROWS_AS(induced_rep(builtin_two_group("G1"), {0, 1}, ones_beta(2)),
                  validation_error);
  CHECK_THROWS_AS(induced_rep(grp_s3, {0, 4}, ones_beta(2)),
                  validation_error);
  auto broken = ones_beta(2);
  broken[0][1] = -Cyclotomic::one();
  CHECK_THROWS_AS(induced_rep(grp_z2, {0, 1}, broken), validation_error);
  auto non_cocycle = ones_beta(3);
  non_cocycle[1][1] = root_of_unity(6, 1);
  CHECK_THROWS_AS(induced_rep(builtin_two_group("grp(Z3)"), {0, 1, 2},
                              non_cocycle),
                  validation_error);
}

TEST_CASE("validator negativity") {
  const auto g2 = builtin_two_group("G2");
  const auto t = builtin_irreps(g2)[2];
  const auto& sigma = t.sigma_table();
  const auto& cochain = t.cochain_table();
  const auto& tau = t.tau_table();

  CHECK(check_rep(g2, 2, sigma, cochain, tau).ok());

  SUBCASE("identity permutation broken") {
    auto bad = sigma;
    bad[0] = {1, 0};
    const auto report = check_rep(g2, 2, bad, cochain, tau);
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "identity object"));
  }

  SUBCASE("non-permutation row") {
    auto bad = sigma;
    bad[1] = {0, 0};
    const auto report = check_rep(g2, 2, bad, cochain, tau);
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "not a permutation"));
  }

  SUBCASE("non-homomorphic permutations") {
    const auto group = fuzz_s3_z3();
    std::vector<std::vector<int>> bad(6, std::vector<int>{0, 1});
    bad[1] = {1, 0};
    const auto report =
        check_rep(group, 2, bad, ScalarTable(6,
                  std::vector<std::vector<Cyclotomic>>(
                      6, std::vector<Cyclotomic>(2, Cyclotomic::one()))),
                  ScalarTable(6, std::vector<std::vector<Cyclotomic>>(
                                     3, std::vector<Cyclotomic>(
                                            2, Cyclotomic::one()))));
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "not a homomorphism"));
  }

  SUBCASE("corrupted composition scalar") {
    auto bad = cochain;
    bad[1][1][1] = Cyclotomic::one();
    const auto report = check_rep(g2, 2, sigma, bad, tau);
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "twisted cocycle fails"));
  }

  SUBCASE("corrupted 2-cell scalar") {
    auto bad = tau;
    bad[1][1][0] = Cyclotomic::one();
    const auto report = check_rep(g2, 2, sigma, cochain, bad);
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "interchange law fails"));
  }

  SUBCASE("non-root scalar") {
    auto bad = cochain;
    bad[1][1][0] = Cyclotomic(Rational(1) / 2);
    const auto report = check_rep(g2, 2, sigma, bad, tau);
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "not a root of unity"));
  }

  SUBCASE("broken normalization") {
    auto bad = tau;
    bad[1][0][0] = -Cyclotomic::one();
    const auto report = check_rep(g2, 2, sigma, cochain, bad);
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "tau(g,0,i) != 1"));
  }

  SUBCASE("both line characters equal on S is inconsistent") {
    const auto g1 = builtin_two_group("G1");
    const auto s = builtin_irreps(g1)[2];
    auto bad = s.tau_table();
    for (int g = 0; g < 2; ++g) {
      for (int a = 0; a < 3; ++a) {
        bad[g][a][0] = root_of_unity(3, a);
        bad[g][a][1] = root_of_unity(3, a);
      }
    }
    const auto report = check_rep(g1, 2, s.sigma_table(), s.cochain_table(),
                                  bad);
    CHECK_FALSE(report.ok());
    CHECK(mentions(report, "interchange law fails"));
    CHECK_THROWS_AS(MonomialTwoRep(g1, 2, s.sigma_table(), s.cochain_table(),
                                   bad, "bad"),
                    validation_error);
  }
}
