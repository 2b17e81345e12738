/**
 * @file charfun.hpp
 * @brief 2-characters of monomial 2-representations as class functors,
 *        the Day-convolution algebra, inner products, joint 2-characters
 *        with modular invariance, and fusion-rule extraction.
 *
 * Math background:
 *  - The 2-character of a 2-representation assigns to every object g the
 *    fixed-point space of sigma_g, a vector space graded by characters of
 *    pi2, together with conjugation isomorphisms psi(k,g): F(g) -> F(kgk⁻¹)
 *    whose monomial scalars are ratios of composition scalars and a
 *    coevaluation contribution.
 *  - Class functors multiply by Day convolution: the grade-k summand of
 *    (F ⊛ G)(g) is spanned by line pairs p ∈ F(g·k⁻¹), q ∈ G(k) whose
 *    pi2-characters satisfy rho_p((g·k⁻¹)▷a) = rho_q(a); the surviving
 *    line carries rho_p. The convolution unit is concentrated at the
 *    identity with one line per pi2-character.
 *  - The inner product of two class functors is the dimension of the
 *    invariant subspace of (F ⊛ G)(e) under the canonical pi1-action
 *    theta_m = diag(rho_line(-coev(m))) ∘ psi(m,e).
 *  - The joint 2-character of a commuting pair (g,h) with a 2-cell a is a
 *    trace over lines fixed by both permutations; it is invariant under
 *    the modular S and T moves and under conjugation, all of which are
 *    computed exactly with the word-tree reassociation engine.
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groups.hpp"
#include "linalg.hpp"
#include "scalars.hpp"
#include "twogroup.hpp"
#include "twrep.hpp"

namespace twochar {

/// Structural check of class-functor data (line characters as dual-group
/// indices per object; psi[k][g]: F(g) -> F(kgk⁻¹)).
ValidationReport check_class_functor(
    const FiniteTwoGroup& group, const std::vector<std::vector<int>>& lines,
    const std::vector<std::vector<Matrix>>& psi);

class ClassFunctor {
 public:
  /// Validates naturality, the composition law and psi(e,-) = id; throws
  /// validation_error with witnesses.
  ClassFunctor(FiniteTwoGroup group, std::vector<std::vector<int>> lines,
               std::vector<std::vector<Matrix>> psi, std::string name);

  const FiniteTwoGroup& group() const { return group_; }
  const std::string& name() const { return name_; }

  int dim(int g) const { return static_cast<int>(lines_[g].size()); }
  /// Dual-group index of the pi2-character on line i of F(g).
  int line_char(int g, int i) const { return lines_[g][i]; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  /// Value of that character at a ∈ pi2.
  Cyclotomic line_value(int g, int i, int a) const {
    return duals_[lines_[g][i]].value(a);
  }
  const DualCharacter& dual(int index) const { return duals_[index]; }

  const Matrix& psi(int k, int g) const { return psi_[k][g]; }
  const std::vector<std::vector<Matrix>>& psi_table() const { return psi_; }

  bool equal_data(const ClassFunctor& other) const {
    return group_ == other.group_ && lines_ == other.lines_ &&
           psi_ == other.psi_;
  }

 private:
  FiniteTwoGroup group_;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<Matrix>> psi_;
  std::vector<DualCharacter> duals_;
  std::string name_;
};

/// Convenience wrapper re-running all structural checks on a built functor.
ValidationReport validate_class_functor(const ClassFunctor& f);

/// The 2-character of a monomial 2-representation.
ClassFunctor two_character(const MonomialTwoRep& rep);

/// The Day-convolution unit: all pi2-characters once, at the identity.
ClassFunctor unit_class_functor(const FiniteTwoGroup& group);

/// Basis bookkeeping for Day convolutions: for each g the ordered list of
/// surviving triples (k, p, q) — grade k, line p of F(g·k⁻¹), line q of G(k).
struct DayBasis {
  std::vector<std::vector<std::array<int, 3>>> triples;

  /// Position of (k,p,q) in the grade-g basis; -1 when absent.
  int find(int g, int k, int p, int q) const;
};

DayBasis day_basis(const ClassFunctor& f, const ClassFunctor& g);

ClassFunctor day_convolution(const ClassFunctor& f, const ClassFunctor& g);

/// The braiding isomorphism (F ⊛ G)(g) -> (G ⊛ F)(g).
Matrix braiding(const ClassFunctor& f, const ClassFunctor& g, int object);

struct InnerProductResult {
  std::size_t dimension;
  /// Basis of the invariant subspace of (F ⊛ G)(e), as coordinate vectors.
  std::vector<std::vector<Cyclotomic>> basis;
};

InnerProductResult inner_product(const ClassFunctor& f, const ClassFunctor& g);

/// A morphism g⊗h -> h⊗g in the skeletal model: requires gh = hg, and the
/// 2-cell value a ∈ pi2 relative to the identity basepoint.
struct JointInput {
  int g = 0;
  int h = 0;
  int a = 0;

  bool operator==(const JointInput& other) const {
    return g == other.g && h == other.h && a == other.a;
  }
  bool operator!=(const JointInput& other) const { return !(*this == other); }
};

bool joint_input_valid(const FiniteTwoGroup& group, const JointInput& input);

/// All valid inputs in deterministic order: conjugacy-class representative
/// g ascending, then commuting h ascending, then a ascending.
std::vector<JointInput> canonical_joint_inputs(const FiniteTwoGroup& group);

Cyclotomic joint_character(const MonomialTwoRep& rep, const JointInput& input);

JointInput modular_S(const FiniteTwoGroup& group, const JointInput& input);
JointInput modular_T(const FiniteTwoGroup& group, const JointInput& input);
JointInput conjugate_joint(const FiniteTwoGroup& group, int k,
                           const JointInput& input);
/// The input (g⁻¹, h⁻¹, a-mate); applying modular_S twice lands here.
JointInput left_dual_joint(const FiniteTwoGroup& group,
                           const JointInput& input);

/// Multiplicity of every pi2-character in F(g), for each conjugacy-class
/// representative g (flattened; deterministic order).
std::vector<Cyclotomic> fingerprint(const ClassFunctor& f);

/// fingerprint of the 2-character, extended with all canonical
/// joint-character values of the representation.
std::vector<Cyclotomic> extended_fingerprint(const MonomialTwoRep& rep);

/// Exact multiplicities of F in the span of the basis fingerprints; throws
/// validation_error for a degenerate basis or a non-(nonnegative-integer)
/// solution.
std::vector<int> decompose(const ClassFunctor& f,
                           const std::vector<ClassFunctor>& basis);

/// Representation-level decomposition; falls back to extended fingerprints
/// when the basic ones are dependent.
std::vector<int> decompose(const MonomialTwoRep& rep,
                           const std::vector<MonomialTwoRep>& basis);

/// fusion_table(G)[i][j] = multiplicities of irrep k in the Deligne tensor
/// of catalogue irreps i and j.
std::vector<std::vector<std::vector<int>>> fusion_table(
    const FiniteTwoGroup& group);

}  // namespace twochar
