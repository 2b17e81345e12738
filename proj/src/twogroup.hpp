/**
 * @file twogroup.hpp
 * @brief Skeletal finite 2-groups: classification data with a validated
 *        3-cocycle, a reassociation calculus for 2-cells, conjugation
 *        coherence scalars, and duality data.
 *
 * Math background:
 *  - A skeletal finite 2-group is classified by (pi1, pi2, |>, alpha): a
 *    finite group pi1 of objects, a finite abelian group pi2 of 2-cells of
 *    the unit, an action of pi1 on pi2 by automorphisms, and a normalized
 *    3-cocycle alpha: pi1^3 -> pi2 serving as the associator.
 *  - 2-cells g -> g form a pi2-torsor based at the identity; composition is
 *    addition in pi2. The tensor of 2-cells a (over u) and b (over w) is
 *    a + u|>b over uw. The cocycle identity reads
 *    g|>alpha(h,k,l) - alpha(gh,k,l) + alpha(g,hk,l) - alpha(g,h,kl)
 *    + alpha(g,h,k) = 0, and normalization makes the unitors strict.
 *  - Any two parenthesizations of the same word of objects are connected by
 *    a unique coherence 2-cell built from alpha; comb_cost computes the
 *    value of the canonical cell onto the right-associated comb, and
 *    reassociation composes two such cells.
 *  - The dual of g is g^{-1} with evaluation ev_g: g^{-1} o g -> e and
 *    coevaluation coev_g: e -> g o g^{-1}; the zig-zag identities pin their
 *    values up to a choice resolved by the lexicographically least solution.
 *  - Derived scalars: dual_factor phi(g,h): (gh)* -> h* o g*, the
 *    conjugation coherence defect can(k,l,g) comparing conjugation by kl
 *    with conjugation by k after l, and the canonical cell
 *    (h o g) o g* -> h used when cancelling a right dual.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groups.hpp"

namespace twochar {

/// A fully parenthesized word in pi1 elements (a binary tree with leaves
/// labelled by object indices).
class WordTree {
 public:
  static WordTree leaf(int element) {
    WordTree t;
    t.element_ = element;
    return t;
  }
  static WordTree node(const WordTree& left, const WordTree& right) {
    WordTree t;
    t.left_ = std::make_shared<WordTree>(left);
    t.right_ = std::make_shared<WordTree>(right);
    return t;
  }

  bool is_leaf() const { return left_ == nullptr; }
  int element() const { return element_; }
  const WordTree& left() const { return *left_; }
  const WordTree& right() const { return *right_; }

 private:
  int element_ = 0;
  std::shared_ptr<WordTree> left_, right_;
};

/// Evaluation/coevaluation values per object: ev(g): g^{-1} o g -> e has
/// torsor value ev[g], coev(g): e -> g o g^{-1} has value coev[g].
struct DualityData {
  std::vector<int> ev;
  std::vector<int> coev;
};

/// Checks normalization and the twisted cocycle identity of an associator
/// table alpha[g][h][k] (pi2 element indices); lists witnesses.
ValidationReport check_three_cocycle(
    const FiniteGroup& pi1, const AbelianGroup& pi2, const GroupAction& action,
    const std::vector<std::vector<std::vector<int>>>& alpha);

class FiniteTwoGroup {
 public:
  /// Validates all classification data; throws validation_error with
  /// witnesses on any failure (non-cocycle, non-normalized, bad action).
  FiniteTwoGroup(FiniteGroup pi1, AbelianGroup pi2,
                 std::vector<std::vector<int>> action_table,
                 std::vector<std::vector<std::vector<int>>> alpha,
                 int scalar_order, std::string name = "custom");

  const FiniteGroup& pi1() const { return pi1_; }
  const AbelianGroup& pi2() const { return pi2_; }
  const GroupAction& action() const { return action_; }
  int scalar_order() const { return scalar_order_; }
  const std::string& name() const { return name_; }

  // Convenience arithmetic.
  int mul(int g, int h) const { return pi1_.mul(g, h); }
  int inv(int g) const { return pi1_.inverse(g); }
  int e() const { return pi1_.identity(); }
  int add2(int a, int b) const { return pi2_.add(a, b); }
  int neg2(int a) const { return pi2_.negate(a); }
  int zero2() const { return pi2_.zero(); }

  /// g |> a.
  int act(int g, int a) const { return action_.act(g, a); }
  int alpha(int g, int h, int k) const { return alpha_[g][h][k]; }
  const std::vector<std::vector<std::vector<int>>>& alpha_table() const {
    return alpha_;
  }
  bool alpha_is_zero() const;

  /// Conjugation on objects: k g k^{-1}.
  int conjugate_object(int k, int g) const { return pi1_.conjugate(k, g); }
  /// Conjugation on 2-cells over matching objects: k |> a.
  int conjugate_morphism(int k, int a) const { return act(k, a); }

  const DualityData& duality() const { return duality_; }
  int ev(int g) const { return duality_.ev[g]; }
  int coev(int g) const { return duality_.coev[g]; }

  // --- Word calculus. ---

  /// Product of the leaves, left to right.
  int tree_value(const WordTree& tree) const;
  /// Value of the canonical coherence cell from the word (under a left
  /// tensor multiplier u) onto its right-associated comb.
  int comb_cost(const WordTree& tree, int left_multiplier) const;
  /// Value of the canonical coherence cell from one parenthesized word to
  /// another; the words must agree after deleting identity leaves.
  int reassociation(const WordTree& from, const WordTree& to) const;

  // --- Derived coherence scalars. ---

  /// phi(g,h): (gh)* -> h* o g* built from coevaluations, a reassociation,
  /// and an evaluation.
  int dual_factor(int g, int h) const { return phi_[g][h]; }
  /// can(k,l,g): the 2-cell comparing conjugation by kl with conjugation by
  /// k after conjugation by l, for any g.
  int conj_defect(int k, int l, int g) const { return can_[k][l][g]; }
  /// Canonical cell (h o g) o g* -> h: alpha(h,g,g^{-1}) - h|>coev(g).
  int cancel_right_dual(int g, int h) const;

  bool operator==(const FiniteTwoGroup& other) const {
    return pi1_ == other.pi1_ && pi2_ == other.pi2_ &&
           action_ == other.action_ && alpha_ == other.alpha_ &&
           scalar_order_ == other.scalar_order_;
  }

 private:
  int append_cost(const std::vector<int>& leaves, int tail_value,
                  int left_multiplier) const;
  void leaf_elements(const WordTree& tree, std::vector<int>& out) const;
  int compute_dual_factor(int g, int h) const;
  int compute_conj_defect(int k, int l, int g) const;

  FiniteGroup pi1_;
  AbelianGroup pi2_;
  GroupAction action_;
  std::vector<std::vector<std::vector<int>>> alpha_;
  int scalar_order_ = 1;
  std::string name_;
  DualityData duality_;
  std::vector<std::vector<int>> phi_;
  std::vector<std::vector<std::vector<int>>> can_;
};

/// Validating constructor wrapper matching the module contract.
FiniteTwoGroup build_two_group(
    const FiniteGroup& pi1, const AbelianGroup& pi2,
    const std::vector<std::vector<int>>& action_table,
    const std::vector<std::vector<std::vector<int>>>& alpha, int scalar_order,
    const std::string& name = "custom");

/// Brute-force solver for duality data: for each g the lexicographically
/// least (ev, coev) pair satisfying both zig-zag identities.
DualityData solve_duality(const FiniteGroup& pi1, const AbelianGroup& pi2,
                          const GroupAction& action,
                          const std::vector<std::vector<std::vector<int>>>& alpha);

/// Catalogue 2-groups. Accepted names: "G1", "G2", "BA(Z2)", "BA(Z3)",
/// "grp(Z2)", "grp(Z3)", "grp(S3)" and the underscore spellings "BA_Z2",
/// "grp_S3", etc. Throws parse_error for unknown names.
FiniteTwoGroup builtin_two_group(const std::string& name);

/// Canonical catalogue order of builtin names.
std::vector<std::string> builtin_two_group_names();

}  // namespace twochar
