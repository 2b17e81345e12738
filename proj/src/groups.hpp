/**
 * @file groups.hpp
 * @brief Finite groups, finite abelian groups and their duals, conjugacy
 *        classes, and actions.
 *
 * Math background:
 *  - A finite group is stored as a dense multiplication table over element
 *    indices 0..n-1; the identity and inverse tables are derived and the
 *    group axioms are verified with explicit witnesses on failure.
 *  - A finite abelian group is a product of cyclic factors (n_1,...,n_k);
 *    elements are exponent tuples encoded as mixed-radix integers with the
 *    last factor varying fastest. The trivial group has no factors.
 *  - The dual of a finite abelian group A consists of the |A| homomorphisms
 *    A -> roots of unity; a character is identified by an exponent tuple
 *    (e_1,...,e_k) acting as a |-> prod_i zeta_{n_i}^{e_i * a_i}. Values are
 *    exact cyclotomic numbers of order dividing exp(A).
 *  - A group action of G on A assigns to each g an automorphism of A such
 *    that g |-> (a |-> g|>a) is a homomorphism and the identity acts
 *    trivially. The induced action on the dual is (g.rho)(a) = rho(g^{-1}|>a).
 */
#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"

namespace twochar {

/// A finite group on indices 0..n-1 with a verified multiplication table.
class FiniteGroup {
 public:
  /// Trivial group with a single element.
  FiniteGroup();

  /// Builds from a full multiplication table; throws validation_error with a
  /// witness (offending triple / missing identity / missing inverse) when the
  /// table is not a group.
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return table_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  /// g h g^{-1}.
  int conjugate(int g, int h) const { return mul(mul(g, h), inverse_[g]); }
  bool is_abelian() const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool operator==(const FiniteGroup& other) const {
    return table_ == other.table_;
  }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Structural check of a multiplication table; lists every axiom failure.
ValidationReport check_group_table(const std::vector<std::vector<int>>& table);

/// Cyclic group Z_n with mul(a,b) = (a+b) mod n.
FiniteGroup cyclic_group(int n);

/// Direct product; element index = a * |B| + b (second factor fastest).
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);

/// The symmetric group on 3 letters; element 0 is the identity, elements are
/// ordered e, (12), (13), (23), (123), (132) via their one-line images.
FiniteGroup symmetric_group_3();

/// One conjugacy class: least-index representative plus ascending members.
struct ConjugacyClass {
  int representative = 0;
  std::vector<int> members;
};

/// All conjugacy classes ordered by ascending representative.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group);

/// A finite abelian group presented as a product of cyclic factors.
class AbelianGroup {
 public:
  /// Trivial group (no factors, single element 0).
  AbelianGroup() = default;

  /// Factors must all be >= 1; throws validation_error otherwise.
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  /// lcm of the factor orders (1 for the trivial group).
  int exponent() const { return exponent_; }

  /// Mixed-radix decoding, last factor fastest.
  std::vector<int> tuple_of(int index) const;
  int index_of(const std::vector<int>& tuple) const;

  int zero() const { return 0; }
  int add(int a, int b) const;
  int negate(int a) const;
  /// Integer multiple k * a (k may be negative).
  int scale(long long k, int a) const;

  bool operator==(const AbelianGroup& other) const {
    return factors_ == other.factors_;
  }

 private:
  std::vector<int> factors_;
  int order_ = 1;
  int exponent_ = 1;
};

/// A character of a finite abelian group, identified by exponent tuple.
class DualCharacter {
 public:
  DualCharacter() = default;
  DualCharacter(const AbelianGroup& domain, std::vector<int> exponents);

  const std::vector<int>& exponents() const { return exponents_; }

  /// Exact value rho(a) as a cyclotomic number.
  Cyclotomic value(int a) const;

  bool is_trivial() const;
  /// Pointwise product of characters (exponents add factorwise).
  DualCharacter product(const DualCharacter& other) const;
  DualCharacter inverse() const;

  /// Index of this character inside dual_group(domain) ordering.
  int index() const;

  bool operator==(const DualCharacter& other) const {
    return factors_ == other.factors_ && exponents_ == other.exponents_;
  }
  bool operator!=(const DualCharacter& other) const {
    return !(*this == other);
  }

  /// Deterministic display, e.g. "chi[1,0]".
  std::string to_string() const;

 private:
  std::vector<int> factors_;
  std::vector<int> exponents_;
};

/// All |A| characters; character j has exponent tuple A.tuple_of(j).
std::vector<DualCharacter> dual_group(const AbelianGroup& domain);

/// An action of a finite group on a finite abelian group by automorphisms.
class GroupAction {
 public:
  GroupAction() = default;

  /// Validates and stores; throws validation_error with witnesses.
  GroupAction(FiniteGroup group, AbelianGroup module,
              std::vector<std::vector<int>> table);

  const FiniteGroup& group() const { return group_; }
  const AbelianGroup& module() const { return module_; }

  /// g |> a.
  int act(int g, int a) const { return table_[g][a]; }

  const std::vector<std::vector<int>>& table() const { return table_; }

  /// The induced permutation of dual-character indices:
  /// (g.rho)(a) = rho(g^{-1} |> a).
  int act_character_index(int g, int char_index) const;

  bool is_trivial() const;

  bool operator==(const GroupAction& other) const {
    return group_ == other.group_ && module_ == other.module_ &&
           table_ == other.table_;
  }

 private:
  FiniteGroup group_;
  AbelianGroup module_;
  std::vector<std::vector<int>> table_;
};

/// Structural check of an action table; lists every law failure with
/// witnesses (non-automorphism rows, homomorphism defects, identity row).
ValidationReport check_action(const FiniteGroup& group,
                              const AbelianGroup& module,
                              const std::vector<std::vector<int>>& table);

/// Validated constructor per the module contract; throws on failure.
GroupAction validate_action(const FiniteGroup& group,
                            const AbelianGroup& module,
                            const std::vector<std::vector<int>>& table);

/// The action with every g acting as the identity automorphism.
GroupAction trivial_action(const FiniteGroup& group,
                           const AbelianGroup& module);

// --- Subgroup utilities (used by induced representations and oracles). ---

/// True when the ascending element list forms a subgroup.
bool is_subgroup(const FiniteGroup& group, const std::vector<int>& elements);

/// Least-index representatives of the left cosets gH, ascending.
std::vector<int> coset_representatives(const FiniteGroup& group,
                                       const std::vector<int>& subgroup);

/// Permutation of coset indices induced by left multiplication with g.
std::vector<int> coset_action(const FiniteGroup& group,
                              const std::vector<int>& subgroup, int g);

/// Number of distinct double cosets HgK.
int double_coset_count(const FiniteGroup& group, const std::vector<int>& left,
                       const std::vector<int>& right);

/// Every subgroup, as ascending element lists, ordered by (size, elements).
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& group);

/// One representative per conjugacy class of subgroups, ordered by
/// (size, elements); the representative is the least list in its class.
std::vector<std::vector<int>> subgroup_class_representatives(
    const FiniteGroup& group);

}  // namespace twochar
