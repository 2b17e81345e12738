/**
 * @file twogroup.cpp
 * @brief Implementation of skeletal finite 2-groups and their coherence
 *        calculus.
 */
#include "twogroup.hpp"

#include <algorithm>
#include <sstream>

namespace twochar {

ValidationReport check_three_cocycle(
    const FiniteGroup& pi1, const AbelianGroup& pi2, const GroupAction& action,
    const std::vector<std::vector<std::vector<int>>>& alpha) {
  ValidationReport report;
  const int n = pi1.order();
  const int m = pi2.order();
  if (static_cast<int>(alpha.size()) != n) {
    report.fail("associator table must be indexed by pi1^3");
    return report;
  }
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(alpha[g].size()) != n) {
      report.fail("associator table must be indexed by pi1^3");
      return report;
    }
    for (int h = 0; h < n; ++h) {
      if (static_cast<int>(alpha[g][h].size()) != n) {
        report.fail("associator table must be indexed by pi1^3");
        return report;
      }
      for (int k = 0; k < n; ++k) {
        if (alpha[g][h][k] < 0 || alpha[g][h][k] >= m) {
          report.fail("associator value at (" + std::to_string(g) + "," +
                      std::to_string(h) + "," + std::to_string(k) +
                      ") is not a pi2 element");
          return report;
        }
      }
    }
  }
  const int e = pi1.identity();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      for (int k = 0; k < n; ++k) {
        if ((g == e || h == e || k == e) && alpha[g][h][k] != pi2.zero()) {
          report.fail("associator is not normalized at (" + std::to_string(g) +
                      "," + std::to_string(h) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  if (!report.ok()) return report;
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          // g|>a(h,k,l) - a(gh,k,l) + a(g,hk,l) - a(g,h,kl) + a(g,h,k) = 0.
          int total = action.act(g, alpha[h][k][l]);
          total = pi2.add(total, pi2.negate(alpha[pi1.mul(g, h)][k][l]));
          total = pi2.add(total, alpha[g][pi1.mul(h, k)][l]);
          total = pi2.add(total, pi2.negate(alpha[g][h][pi1.mul(k, l)]));
          total = pi2.add(total, alpha[g][h][k]);
          if (total != pi2.zero()) {
            std::ostringstream out;
            out << "cocycle identity fails at (" << g << "," << h << "," << k
                << "," << l << ") with defect " << total;
            report.fail(out.str());
            return report;
          }
        }
      }
    }
  }
  return report;
}

DualityData solve_duality(
    const FiniteGroup& pi1, const AbelianGroup& pi2, const GroupAction& action,
    const std::vector<std::vector<std::vector<int>>>& alpha) {
  DualityData data;
  const int n = pi1.order();
  const int m = pi2.order();
  data.ev.assign(n, -1);
  data.coev.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    const int ginv = pi1.inverse(g);
    bool found = false;
    for (int ev = 0; ev < m && !found; ++ev) {
      for (int coev = 0; coev < m && !found; ++coev) {
        // Zig-zag on g:      coev + alpha(g,g^{-1},g) + g|>ev = 0.
        // Zig-zag on g^{-1}: g^{-1}|>coev - alpha(g^{-1},g,g^{-1}) + ev = 0.
        const int z1 = pi2.add(pi2.add(coev, alpha[g][ginv][g]),
                               action.act(g, ev));
        const int z2 = pi2.add(
            pi2.add(action.act(ginv, coev), pi2.negate(alpha[ginv][g][ginv])),
            ev);
        if (z1 == pi2.zero() && z2 == pi2.zero()) {
          data.ev[g] = ev;
          data.coev[g] = coev;
          found = true;
        }
      }
    }
    if (!found) {
      throw validation_error("no duality data solves the zig-zags for object " +
                             std::to_string(g));
    }
  }
  return data;
}

FiniteTwoGroup::FiniteTwoGroup(
    FiniteGroup pi1, AbelianGroup pi2,
    std::vector<std::vector<int>> action_table,
    std::vector<std::vector<std::vector<int>>> alpha, int scalar_order,
    std::string name)
    : pi1_(std::move(pi1)),
      pi2_(std::move(pi2)),
      action_(validate_action(pi1_, pi2_, action_table)),
      alpha_(std::move(alpha)),
      scalar_order_(scalar_order),
      name_(std::move(name)) {
  if (scalar_order_ < 1) {
    throw validation_error("scalar order must be positive");
  }
  check_three_cocycle(pi1_, pi2_, action_, alpha_).require("3-cocycle");
  duality_ = solve_duality(pi1_, pi2_, action_, alpha_);
  const int n = pi1_.order();
  phi_.assign(n, std::vector<int>(n, 0));
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) phi_[g][h] = compute_dual_factor(g, h);
  }
  can_.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      for (int g = 0; g < n; ++g) can_[k][l][g] = compute_conj_defect(k, l, g);
    }
  }
}

bool FiniteTwoGroup::alpha_is_zero() const {
  for (const auto& plane : alpha_) {
    for (const auto& row : plane) {
      for (int v : row) {
        if (v != pi2_.zero()) return false;
      }
    }
  }
  return true;
}

int FiniteTwoGroup::tree_value(const WordTree& tree) const {
  if (tree.is_leaf()) return tree.element();
  return mul(tree_value(tree.left()), tree_value(tree.right()));
}

void FiniteTwoGroup::leaf_elements(const WordTree& tree,
                                   std::vector<int>& out) const {
  if (tree.is_leaf()) {
    out.push_back(tree.element());
    return;
  }
  leaf_elements(tree.left(), out);
  leaf_elements(tree.right(), out);
}

int FiniteTwoGroup::append_cost(const std::vector<int>& leaves, int tail_value,
                                int left_multiplier) const {
  int total = zero2();
  int acc = left_multiplier;
  for (size_t i = 0; i + 1 < leaves.size(); ++i) {
    int rest = e();
    for (size_t j = i + 1; j < leaves.size(); ++j) rest = mul(rest, leaves[j]);
    total = add2(total, act(acc, alpha(leaves[i], rest, tail_value)));
    acc = mul(acc, leaves[i]);
  }
  return total;
}

int FiniteTwoGroup::comb_cost(const WordTree& tree, int left_multiplier) const {
  if (tree.is_leaf()) return zero2();
  const WordTree& a = tree.left();
  const WordTree& b = tree.right();
  int total = comb_cost(a, left_multiplier);
  total = add2(total, comb_cost(b, mul(left_multiplier, tree_value(a))));
  std::vector<int> leaves;
  leaf_elements(a, leaves);
  total = add2(total,
               append_cost(leaves, tree_value(b), left_multiplier));
  return total;
}

int FiniteTwoGroup::reassociation(const WordTree& from,
                                  const WordTree& to) const {
  std::vector<int> from_leaves, to_leaves;
  leaf_elements(from, from_leaves);
  leaf_elements(to, to_leaves);
  auto strip = [&](std::vector<int>& v) {
    v.erase(std::remove(v.begin(), v.end(), e()), v.end());
  };
  strip(from_leaves);
  strip(to_leaves);
  if (from_leaves != to_leaves) {
    throw validation_error(
        "reassociation requires the same word up to identity leaves");
  }
  return add2(comb_cost(from, e()), neg2(comb_cost(to, e())));
}

int FiniteTwoGroup::compute_dual_factor(int g, int h) const {
  // (gh)* -> h* o g*: insert coev_g, insert coev_h, reassociate, evaluate gh.
  const int gh = mul(g, h);
  const int d = inv(gh);
  int total = act(d, coev(g));
  total = add2(total, act(inv(h), coev(h)));
  const WordTree t2 = WordTree::node(
      WordTree::leaf(d),
      WordTree::node(WordTree::leaf(g),
                     WordTree::node(WordTree::node(WordTree::leaf(h),
                                                   WordTree::leaf(inv(h))),
                                    WordTree::leaf(inv(g)))));
  const WordTree t3 = WordTree::node(
      WordTree::node(WordTree::leaf(d),
                     WordTree::node(WordTree::leaf(g), WordTree::leaf(h))),
      WordTree::node(WordTree::leaf(inv(h)), WordTree::leaf(inv(g))));
  total = add2(total, reassociation(t2, t3));
  total = add2(total, ev(gh));
  return total;
}

int FiniteTwoGroup::compute_conj_defect(int k, int l, int g) const {
  // ((kl) g)(kl)* --1 o phi(k,l)--> ((kl) g)(l* k*) --reassoc-->
  // (k ((l g) l*)) k*.
  const int klg = mul(mul(k, l), g);
  int total = act(klg, dual_factor(k, l));
  const WordTree from = WordTree::node(
      WordTree::node(WordTree::node(WordTree::leaf(k), WordTree::leaf(l)),
                     WordTree::leaf(g)),
      WordTree::node(WordTree::leaf(inv(l)), WordTree::leaf(inv(k))));
  const WordTree to = WordTree::node(
      WordTree::node(
          WordTree::leaf(k),
          WordTree::node(WordTree::node(WordTree::leaf(l), WordTree::leaf(g)),
                         WordTree::leaf(inv(l)))),
      WordTree::leaf(inv(k)));
  total = add2(total, reassociation(from, to));
  return total;
}

int FiniteTwoGroup::cancel_right_dual(int g, int h) const {
  return add2(alpha(h, g, inv(g)), neg2(act(h, coev(g))));
}

FiniteTwoGroup build_two_group(
    const FiniteGroup& pi1, const AbelianGroup& pi2,
    const std::vector<std::vector<int>>& action_table,
    const std::vector<std::vector<std::vector<int>>>& alpha, int scalar_order,
    const std::string& name) {
  return FiniteTwoGroup(pi1, pi2, action_table, alpha, scalar_order, name);
}

namespace {

std::vector<std::vector<std::vector<int>>> zero_alpha(int n) {
  return std::vector<std::vector<std::vector<int>>>(
      n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
}

std::vector<std::vector<int>> trivial_action_table(int n, int m) {
  std::vector<std::vector<int>> table(n, std::vector<int>(m));
  for (auto& row : table) {
    for (int a = 0; a < m; ++a) row[a] = a;
  }
  return table;
}

std::string normalize_builtin_name(std::string name) {
  std::string out;
  for (char c : name) {
    if (c == '(' || c == ')') continue;
    if (c == '_') continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

FiniteTwoGroup builtin_two_group(const std::string& name) {
  const std::string key = normalize_builtin_name(name);
  if (key == "G1") {
    // pi1 = Z2 acting on pi2 = Z3 by inversion; trivial associator.
    return FiniteTwoGroup(cyclic_group(2), AbelianGroup({3}),
                          {{0, 1, 2}, {0, 2, 1}}, zero_alpha(2), 3, "G1");
  }
  if (key == "G2") {
    // pi1 = Z2, pi2 = Z2, trivial action, alpha(x,x,x) = y.
    auto alpha = zero_alpha(2);
    alpha[1][1][1] = 1;
    return FiniteTwoGroup(cyclic_group(2), AbelianGroup({2}),
                          trivial_action_table(2, 2), alpha, 2, "G2");
  }
  if (key == "BAZ2") {
    return FiniteTwoGroup(FiniteGroup(), AbelianGroup({2}),
                          trivial_action_table(1, 2), zero_alpha(1), 2,
                          "BA(Z2)");
  }
  if (key == "BAZ3") {
    return FiniteTwoGroup(FiniteGroup(), AbelianGroup({3}),
                          trivial_action_table(1, 3), zero_alpha(1), 3,
                          "BA(Z3)");
  }
  if (key == "grpZ2") {
    return FiniteTwoGroup(cyclic_group(2), AbelianGroup(),
                          trivial_action_table(2, 1), zero_alpha(2), 2,
                          "grp(Z2)");
  }
  if (key == "grpZ3") {
    return FiniteTwoGroup(cyclic_group(3), AbelianGroup(),
                          trivial_action_table(3, 1), zero_alpha(3), 6,
                          "grp(Z3)");
  }
  if (key == "grpS3") {
    return FiniteTwoGroup(symmetric_group_3(), AbelianGroup(),
                          trivial_action_table(6, 1), zero_alpha(6), 6,
                          "grp(S3)");
  }
  throw parse_error("unknown builtin 2-group: " + name);
}

std::vector<std::string> builtin_two_group_names() {
  return {"G1", "G2", "BA(Z2)", "BA(Z3)", "grp(Z2)", "grp(Z3)", "grp(S3)"};
}

}  // namespace twochar
