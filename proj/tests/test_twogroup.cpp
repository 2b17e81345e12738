/**
 * @file test_twogroup.cpp
 * @brief Unit tests for skeletal 2-groups: cocycle validation, duality,
 *        and the reassociation calculus.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "twogroup.hpp"

using namespace twochar;
using namespace twochar::testcorpus;

TEST_CASE("builtin catalogue") {
  const auto names = builtin_two_group_names();
  REQUIRE(names.size() == 7);
  for (const auto& name : names) {
    const auto group = builtin_two_group(name);
    CHECK(group.name() == name);
  }

  const auto g1 = builtin_two_group("G1");
  CHECK(g1.pi1().order() == 2);
  CHECK(g1.pi2().order() == 3);
  CHECK(g1.scalar_order() == 3);
  CHECK(g1.alpha_is_zero());
  CHECK(g1.act(1, 1) == 2);  // inversion action
  CHECK(g1.conjugate_morphism(1, 1) == 2);

  const auto g2 = builtin_two_group("G2");
  CHECK(g2.pi2().order() == 2);
  CHECK(g2.scalar_order() == 2);
  CHECK_FALSE(g2.alpha_is_zero());
  CHECK(g2.alpha(1, 1, 1) == 1);
  CHECK(g2.action().is_trivial());

  CHECK(builtin_two_group("BA_Z2") == builtin_two_group("BA(Z2)"));
  CHECK(builtin_two_group("grp_S3") == builtin_two_group("grp(S3)"));
  CHECK(builtin_two_group("BA(Z3)").scalar_order() == 3);
  CHECK(builtin_two_group("grp(Z2)").scalar_order() == 2);
  CHECK(builtin_two_group("grp(Z3)").scalar_order() == 6);
  CHECK(builtin_two_group("grp(S3)").pi1().order() == 6);
  CHECK(builtin_two_group("grp(S3)").pi2().order() == 1);

  CHECK_THROWS_AS(builtin_two_group("G7"), parse_error);
}

TEST_CASE("cocycle validation") {
  const auto z2 = cyclic_group(2);

  // Non-normalized table rejected.
  auto alpha = zero_alpha(2);
  alpha[1][1][0] = 1;
  auto report = check_three_cocycle(z2, AbelianGroup({2}),
                                    trivial_action(z2, AbelianGroup({2})),
                                    alpha);
  CHECK_FALSE(report.ok());
  CHECK(report.problems[0].find("not normalized") != std::string::npos);

  // Normalized non-cocycle: alpha(x,x,x) = 1 over pi2 = Z4 has defect 2.
  alpha = zero_alpha(2);
  alpha[1][1][1] = 1;
  report = check_three_cocycle(z2, AbelianGroup({4}),
                               trivial_action(z2, AbelianGroup({4})), alpha);
  CHECK_FALSE(report.ok());
  CHECK(report.problems[0].find("cocycle identity fails") !=
        std::string::npos);
  CHECK_THROWS_AS(build_two_group(z2, AbelianGroup({4}), identity_rows(2, 4),
                                  alpha, 4),
                  validation_error);

  // alpha(x,x,x) = 2 over Z4 is a cocycle.
  alpha[1][1][1] = 2;
  CHECK(check_three_cocycle(z2, AbelianGroup({4}),
                            trivial_action(z2, AbelianGroup({4})), alpha)
            .ok());

  // The fuzz corpus constructs (each constructor validates).
  CHECK(fuzz_z2_z4().alpha(1, 1, 1) == 2);
  CHECK(fuzz_z3_z3().alpha(1, 2, 2) == 1);
  CHECK(fuzz_z4_z2().alpha(1, 2, 2) == 1);
  CHECK(fuzz_s3_z3().act(1, 1) == 2);
}

TEST_CASE("duality data and zig-zags") {
  const auto g2 = builtin_two_group("G2");
  CHECK(g2.ev(1) == 0);
  CHECK(g2.coev(1) == 1);  // -alpha(x, x^{-1}, x) = -y = y
  CHECK(g2.ev(0) == 0);
  CHECK(g2.coev(0) == 0);

  const auto g1 = builtin_two_group("G1");
  for (int g = 0; g < 2; ++g) {
    CHECK(g1.ev(g) == 0);
    CHECK(g1.coev(g) == 0);
  }

  const auto z4 = fuzz_z2_z4();
  CHECK(z4.ev(1) == 0);
  CHECK(z4.coev(1) == 2);  // -alpha(x,x,x) = -2 = 2 in Z4

  for (const auto& group : engine_corpus()) {
    const auto& pi2 = group.pi2();
    for (int g = 0; g < group.pi1().order(); ++g) {
      const int ginv = group.inv(g);
      const int ev = group.ev(g);
      const int coev = group.coev(g);
      // Left-duality zig-zags.
      CHECK(pi2.add(pi2.add(coev, group.alpha(g, ginv, g)),
                    group.act(g, ev)) == 0);
      CHECK(pi2.add(pi2.add(group.act(ginv, coev),
                            pi2.negate(group.alpha(ginv, g, ginv))),
                    ev) == 0);
      // Right-duality data ev'(g) = -coev(g), coev'(g) = -ev(g).
      const int evp = pi2.negate(coev);
      const int coevp = pi2.negate(ev);
      CHECK(pi2.add(pi2.add(group.act(g, coevp),
                            pi2.negate(group.alpha(g, ginv, g))),
                    evp) == 0);
      CHECK(pi2.add(pi2.add(coevp, group.alpha(ginv, g, ginv)),
                    group.act(ginv, evp)) == 0);
    }
  }
}

TEST_CASE("reassociation engine") {
  const auto g2 = builtin_two_group("G2");

  // The canonical cell from ((g h) k) to (g (h k)) is alpha(g,h,k).
  for (const auto& group : engine_corpus()) {
    for (int g = 0; g < group.pi1().order(); ++g) {
      for (int h = 0; h < group.pi1().order(); ++h) {
        for (int k = 0; k < group.pi1().order(); ++k) {
          const auto from = WordTree::node(
              WordTree::node(WordTree::leaf(g), WordTree::leaf(h)),
              WordTree::leaf(k));
          const auto to = WordTree::node(
              WordTree::leaf(g),
              WordTree::node(WordTree::leaf(h), WordTree::leaf(k)));
          CHECK(group.reassociation(from, to) == group.alpha(g, h, k));
          CHECK(group.reassociation(to, from) ==
                group.pi2().negate(group.alpha(g, h, k)));
          CHECK(group.reassociation(from, from) == 0);
        }
      }
    }
  }

  // Identity leaves are transparent.
  const auto padded =
      WordTree::node(WordTree::leaf(0), WordTree::leaf(1));  // e, x
  CHECK(g2.reassociation(padded, WordTree::leaf(1)) == 0);
  CHECK(g2.tree_value(padded) == 1);

  // Words must match after stripping identities.
  CHECK_THROWS_AS(
      g2.reassociation(WordTree::node(WordTree::leaf(1), WordTree::leaf(1)),
                       WordTree::leaf(1)),
      validation_error);
}

TEST_CASE("coherence scalars on the hand-checked corpus") {
  const auto g2 = builtin_two_group("G2");
  CHECK(g2.dual_factor(1, 1) == 1);   // phi(x,x) = y
  CHECK(g2.conj_defect(1, 1, 0) == 0);
  CHECK(g2.conj_defect(1, 1, 1) == 1);
  CHECK(g2.cancel_right_dual(1, 1) ==
        g2.add2(g2.alpha(1, 1, 1), g2.neg2(g2.act(1, g2.coev(1)))));

  const auto g1 = builtin_two_group("G1");
  for (int g = 0; g < 2; ++g) {
    for (int h = 0; h < 2; ++h) {
      CHECK(g1.dual_factor(g, h) == 0);
      for (int k = 0; k < 2; ++k) CHECK(g1.conj_defect(g, h, k) == 0);
    }
  }
}

TEST_CASE("conjugation defect laws") {
  for (const auto& group : engine_corpus()) {
    const int n = group.pi1().order();
    const int e = group.e();
    for (int k = 0; k < n; ++k) {
      for (int g = 0; g < n; ++g) {
        CHECK(group.conj_defect(e, k, g) == 0);
        CHECK(group.conj_defect(k, e, g) == 0);
      }
      CHECK(group.dual_factor(k, e) == 0);
      CHECK(group.dual_factor(e, k) == 0);
    }
    // Multiplicativity in the conjugated object:
    // can(m,n,g1 g2) = can(m,n,g1) + (m n g1 (mn)^{-1}) |> can(m,n,g2).
    for (int m = 0; m < n; ++m) {
      for (int nn = 0; nn < n; ++nn) {
        const int mn = group.mul(m, nn);
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            const int lhs = group.conj_defect(m, nn, group.mul(a, b));
            const int ctx =
                group.mul(group.mul(mn, a), group.inv(mn));
            const int rhs = group.add2(
                group.conj_defect(m, nn, a),
                group.act(ctx, group.conj_defect(m, nn, b)));
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}
