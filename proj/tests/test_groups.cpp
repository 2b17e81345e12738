/**
 * @file test_groups.cpp
 * @brief Unit tests for finite groups, abelian duals, actions, and subgroup
 *        utilities.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "groups.hpp"

using namespace twochar;

TEST_CASE("cyclic and product groups") {
  const auto z2 = cyclic_group(2);
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);
  CHECK(z2.inverse(1) == 1);
  CHECK(z2.is_abelian());
  CHECK(conjugacy_classes(z2).size() == 2);

  const auto z3 = cyclic_group(3);
  CHECK(z3.inverse(1) == 2);
  const auto classes = conjugacy_classes(z3);
  REQUIRE(classes.size() == 3);
  for (const auto& cls : classes) CHECK(cls.members.size() == 1);

  // Klein four group: every element is its own inverse.
  const auto klein = product_group(z2, z2);
  CHECK(klein.order() == 4);
  for (int g = 0; g < 4; ++g) CHECK(klein.inverse(g) == g);
  CHECK(klein.is_abelian());
}

TEST_CASE("symmetric group on three letters") {
  const auto s3 = symmetric_group_3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.identity() == 0);

  const auto classes = conjugacy_classes(s3);
  REQUIRE(classes.size() == 3);
  std::multiset<size_t> sizes;
  for (const auto& cls : classes) sizes.insert(cls.members.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
  // Classes are listed by ascending least-index representative.
  CHECK(classes[0].representative == 0);
  CHECK(classes[1].representative == 1);
  CHECK(classes[1].members == std::vector<int>{1, 2, 3});
  CHECK(classes[2].members == std::vector<int>{4, 5});
}

TEST_CASE("bad multiplication tables are rejected with witnesses") {
  // Monoid without inverses.
  auto report = check_group_table({{0, 1}, {1, 1}});
  CHECK_FALSE(report.ok());
  CHECK(report.problems[0].find("no two-sided inverse") != std::string::npos);

  // Non-associative table: witness names the first offending triple.
  report = check_group_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 0}});
  CHECK_FALSE(report.ok());
  CHECK(report.problems[0].find("associativity fails at (1,1,2)") !=
        std::string::npos);

  // No identity.
  report = check_group_table({{1, 1}, {1, 1}});
  CHECK_FALSE(report.ok());
  REQUIRE(!report.problems.empty());
  CHECK(report.problems[0].find("identity") != std::string::npos);

  // A table whose identity is not index 0 is still a group.
  const FiniteGroup flipped({{1, 0}, {0, 1}});
  CHECK(flipped.identity() == 1);

  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), validation_error);
}

TEST_CASE("abelian groups use mixed-radix indexing, last factor fastest") {
  const AbelianGroup a({2, 3});
  CHECK(a.order() == 6);
  CHECK(a.exponent() == 6);
  CHECK(a.tuple_of(5) == std::vector<int>{1, 2});
  CHECK(a.index_of({1, 2}) == 5);
  CHECK(a.index_of({3, -1}) == a.index_of({1, 2}));
  CHECK(a.add(5, 5) == a.index_of({0, 1}));
  CHECK(a.negate(5) == a.index_of({1, 1}));
  CHECK(a.scale(2, 5) == a.index_of({0, 1}));
  CHECK(a.scale(-1, 5) == a.negate(5));

  const AbelianGroup trivial;
  CHECK(trivial.order() == 1);
  CHECK(trivial.exponent() == 1);
  CHECK(trivial.add(0, 0) == 0);

  CHECK_THROWS_AS(AbelianGroup({2, 0}), validation_error);
}

TEST_CASE("dual groups") {
  const AbelianGroup z2({2});
  const auto dual2 = dual_group(z2);
  REQUIRE(dual2.size() == 2);
  CHECK(dual2[0].is_trivial());
  CHECK(dual2[1].value(1) == Cyclotomic(Rational(-1)));

  const AbelianGroup z3({3});
  const auto dual3 = dual_group(z3);
  REQUIRE(dual3.size() == 3);
  CHECK(dual3[1].value(1) == root_of_unity(3, 1));
  CHECK(dual3[2].value(1) == root_of_unity(3, 2));

  const AbelianGroup klein({2, 2});
  const auto dual4 = dual_group(klein);
  REQUIRE(dual4.size() == 4);
  for (const auto& chi : dual4) {
    for (int a = 0; a < 4; ++a) {
      const auto v = chi.value(a);
      CHECK((v == Cyclotomic::one() || v == Cyclotomic(Rational(-1))));
    }
  }

  // Homomorphism law and closure under product.
  const AbelianGroup mixed({2, 3});
  const auto duals = dual_group(mixed);
  for (int i = 0; i < mixed.order(); ++i) {
    for (int a = 0; a < mixed.order(); ++a) {
      for (int b = 0; b < mixed.order(); ++b) {
        CHECK(duals[i].value(mixed.add(a, b)) ==
              duals[i].value(a) * duals[i].value(b));
      }
    }
    for (int j = 0; j < mixed.order(); ++j) {
      CHECK(duals[i].product(duals[j]) == duals[mixed.add(i, j)]);
    }
    CHECK(duals[i].product(duals[i].inverse()).is_trivial());
    CHECK(duals[i].index() == i);
  }

  // Separation of points.
  for (int a = 1; a < mixed.order(); ++a) {
    bool separated = false;
    for (const auto& chi : duals) {
      if (!(chi.value(a) == Cyclotomic::one())) separated = true;
    }
    CHECK(separated);
  }
}

TEST_CASE("group actions validate and act on characters") {
  const auto z2 = cyclic_group(2);
  const AbelianGroup z3({3});

  const auto trivial = trivial_action(z2, z3);
  CHECK(trivial.is_trivial());

  // Inversion action of Z2 on Z3: x |> 1 = 2.
  const auto inversion = validate_action(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  CHECK(inversion.act(1, 1) == 2);
  CHECK_FALSE(inversion.is_trivial());
  // Induced action on the dual: (x.rho)(a) = rho(x^{-1}|>a) = rho(-a).
  CHECK(inversion.act_character_index(1, 1) == 2);
  CHECK(inversion.act_character_index(1, 2) == 1);
  CHECK(inversion.act_character_index(1, 0) == 0);
  CHECK(inversion.act_character_index(0, 1) == 1);

  // Degenerate table: rejected, witness mentions injectivity.
  const auto report = check_action(z2, z3, {{0, 1, 2}, {0, 1, 1}});
  CHECK_FALSE(report.ok());
  CHECK(report.problems[0].find("not injective") != std::string::npos);
  CHECK_THROWS_AS(validate_action(z2, z3, {{0, 1, 2}, {0, 1, 1}}),
                  validation_error);

  // Non-homomorphism: both rows are automorphisms but x*x = e row mismatches.
  const auto z4 = cyclic_group(4);
  const AbelianGroup z5({5});
  // g |> a = 2^g * a would need row for g=2 equal to 4*a; corrupt it.
  std::vector<std::vector<int>> bad = {{0, 1, 2, 3, 4},
                                       {0, 2, 4, 1, 3},
                                       {0, 3, 1, 4, 2},  // should be 4*a
                                       {0, 3, 1, 4, 2}};
  const auto hom_report = check_action(z4, z5, bad);
  CHECK_FALSE(hom_report.ok());
  CHECK(hom_report.problems[0].find("homomorphism") != std::string::npos);

  // Composition invariant on a validated action.
  const auto z6 = cyclic_group(6);
  const AbelianGroup z7({7});
  std::vector<std::vector<int>> pow3(6, std::vector<int>(7));
  for (int g = 0; g < 6; ++g) {
    int mult = 1;
    for (int t = 0; t < g; ++t) mult = (mult * 3) % 7;
    for (int a = 0; a < 7; ++a) pow3[g][a] = (mult * a) % 7;
  }
  const auto action = validate_action(z6, z7, pow3);
  for (int g = 0; g < 6; ++g) {
    for (int h = 0; h < 6; ++h) {
      for (int a = 0; a < 7; ++a) {
        CHECK(action.act(z6.mul(g, h), a) == action.act(g, action.act(h, a)));
      }
    }
  }
}

TEST_CASE("subgroup utilities over S3") {
  const auto s3 = symmetric_group_3();

  CHECK(is_subgroup(s3, {0}));
  CHECK(is_subgroup(s3, {0, 1}));
  CHECK(is_subgroup(s3, {0, 4, 5}));
  CHECK(is_subgroup(s3, {0, 1, 2, 3, 4, 5}));
  CHECK_FALSE(is_subgroup(s3, {0, 1, 4}));
  CHECK_FALSE(is_subgroup(s3, {1}));

  const auto subs = all_subgroups(s3);
  CHECK(subs.size() == 6);  // {e}, three Z2's, Z3, S3.
  const auto reps = subgroup_class_representatives(s3);
  REQUIRE(reps.size() == 4);
  CHECK(reps[0] == std::vector<int>{0});
  CHECK(reps[1] == std::vector<int>{0, 1});
  CHECK(reps[2] == std::vector<int>{0, 4, 5});
  CHECK(reps[3] == std::vector<int>{0, 1, 2, 3, 4, 5});

  // Cosets of Z3 = {e,(012),(021)}: two of them, swapped by a transposition.
  const auto z3cosets = coset_representatives(s3, {0, 4, 5});
  CHECK(z3cosets == std::vector<int>{0, 1});
  CHECK(coset_action(s3, {0, 4, 5}, 1) == std::vector<int>{1, 0});
  CHECK(coset_action(s3, {0, 4, 5}, 4) == std::vector<int>{0, 1});

  // Cosets of a Z2: three, giving the natural permutation action.
  const auto z2cosets = coset_representatives(s3, {0, 1});
  CHECK(z2cosets.size() == 3);
  for (int g = 0; g < 6; ++g) {
    const auto perm = coset_action(s3, {0, 1}, g);
    std::set<int> image(perm.begin(), perm.end());
    CHECK(image.size() == 3);
  }

  CHECK(double_coset_count(s3, {0}, {0}) == 6);
  CHECK(double_coset_count(s3, {0, 1}, {0, 1}) == 2);
  CHECK(double_coset_count(s3, {0, 4, 5}, {0, 4, 5}) == 2);
  CHECK(double_coset_count(s3, {0, 1}, {0, 4, 5}) == 1);
  CHECK(double_coset_count(s3, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}) == 1);
}
