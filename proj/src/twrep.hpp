/**
 * @file twrep.hpp
 * @brief Monomial 2-representations of a skeletal finite 2-group.
 *
 * Math background:
 *  - A monomial 2-representation on n simple objects is given by, for every
 *    object g of the 2-group, a permutation sigma_g of the simples together
 *    with composition scalars c(g,h,i) and 2-cell scalars tau(g,a,i), all
 *    roots of unity in the cyclotomic field declared by the 2-group.
 *  - The data must satisfy: sigma is a homomorphism with sigma_e = id;
 *    c is normalized (c(e,h,i) = c(g,e,i) = 1) and satisfies the twisted
 *    cocycle identity
 *      c(g,h,sigma_k(i)) * c(gh,k,i) * tau(ghk, alpha(g,h,k), i)
 *        = c(g,hk,i) * c(h,k,i);
 *    tau(g,-,i) is multiplicative with tau(g,0,i) = 1 and satisfies the
 *    interchange law tau(gh, a + g|>b, i) = tau(g,a,sigma_h(i)) * tau(h,b,i).
 *  - Constructions: the trivial representation, direct sums, Deligne tensor
 *    products (componentwise data on pair indices), opposites (inverted
 *    scalars, same permutations), and representations induced from a
 *    subgroup H of pi1 with a normalized 2-cocycle beta on H (available when
 *    pi2 is trivial; the monomial cochain is the inverse of beta evaluated
 *    on coset H-parts).
 */
#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"
#include "twogroup.hpp"

namespace twochar {

using ScalarTable = std::vector<std::vector<std::vector<Cyclotomic>>>;

class MonomialTwoRep {
 public:
  /// Validates all five invariant families; throws validation_error listing
  /// every violated law with witnesses.
  MonomialTwoRep(FiniteTwoGroup group, int n,
                 std::vector<std::vector<int>> sigma, ScalarTable cochain,
                 ScalarTable tau, std::string name);

  const FiniteTwoGroup& group() const { return group_; }
  int dimension() const { return n_; }
  const std::string& name() const { return name_; }

  int sigma(int g, int i) const { return sigma_[g][i]; }
  const std::vector<std::vector<int>>& sigma_table() const { return sigma_; }
  /// c(g,h,i).
  const Cyclotomic& cochain(int g, int h, int i) const {
    return cochain_[g][h][i];
  }
  const ScalarTable& cochain_table() const { return cochain_; }
  /// tau(g,a,i).
  const Cyclotomic& tau(int g, int a, int i) const { return tau_[g][a][i]; }
  const ScalarTable& tau_table() const { return tau_; }

  /// Data equality (group, permutations, scalars), ignoring the name.
  bool equal_data(const MonomialTwoRep& other) const;

 private:
  FiniteTwoGroup group_;
  int n_;
  std::vector<std::vector<int>> sigma_;
  ScalarTable cochain_;
  ScalarTable tau_;
  std::string name_;
};

/// Report-style validation of the five invariant families.
ValidationReport check_rep(const FiniteTwoGroup& group, int n,
                           const std::vector<std::vector<int>>& sigma,
                           const ScalarTable& cochain, const ScalarTable& tau);

/// One simple object with trivial permutations and scalars.
MonomialTwoRep trivial_rep(const FiniteTwoGroup& group);

MonomialTwoRep direct_sum(const MonomialTwoRep& a, const MonomialTwoRep& b);

MonomialTwoRep deligne_tensor(const MonomialTwoRep& a,
                              const MonomialTwoRep& b);

/// Inverts the composition and 2-cell scalars, keeping the permutations.
MonomialTwoRep opposite(const MonomialTwoRep& rep);

/// Induction from a subgroup of pi1 with a normalized 2-cocycle beta on it
/// (brace values beta[a][b] indexed by positions in the ascending subgroup
/// list). Requires trivial pi2. Coset representatives are least-index.
MonomialTwoRep induced_rep(const FiniteTwoGroup& group,
                           const std::vector<int>& subgroup,
                           const std::vector<std::vector<Cyclotomic>>& beta,
                           const std::string& name = "");

/// The catalogue of irreducible monomial 2-representations of a builtin
/// 2-group (keyed by its name); throws parse_error for non-catalogue groups.
std::vector<MonomialTwoRep> builtin_irreps(const FiniteTwoGroup& group);

}  // namespace twochar
