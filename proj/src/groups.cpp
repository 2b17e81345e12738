/**
 * @file groups.cpp
 * @brief Implementation of finite groups, abelian groups, duals, and actions.
 */
#include "groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace twochar {

namespace {

std::string triple_witness(int g, int h, int k, int left, int right) {
  std::ostringstream out;
  out << "associativity fails at (" << g << "," << h << "," << k << "): "
      << "(g*h)*k = " << left << " but g*(h*k) = " << right;
  return out.str();
}

}  // namespace

ValidationReport check_group_table(
    const std::vector<std::vector<int>>& table) {
  ValidationReport report;
  const int n = static_cast<int>(table.size());
  if (n == 0) {
    report.fail("multiplication table is empty");
    return report;
  }
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(table[g].size()) != n) {
      report.fail("row " + std::to_string(g) + " has wrong length");
      return report;
    }
    for (int h = 0; h < n; ++h) {
      if (table[g][h] < 0 || table[g][h] >= n) {
        report.fail("entry (" + std::to_string(g) + "," + std::to_string(h) +
                    ") = " + std::to_string(table[g][h]) + " out of range");
        return report;
      }
    }
  }
  // Identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) {
      ok = table[e][g] == g && table[g][e] == g;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    report.fail("no two-sided identity element");
  }
  // Associativity with the first offending triple.
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      for (int k = 0; k < n; ++k) {
        const int left = table[table[g][h]][k];
        const int right = table[g][table[h][k]];
        if (left != right) {
          report.fail(triple_witness(g, h, k, left, right));
          return report;
        }
      }
    }
  }
  // Two-sided inverses.
  if (identity >= 0) {
    for (int g = 0; g < n; ++g) {
      bool found = false;
      for (int h = 0; h < n; ++h) {
        if (table[g][h] == identity && table[h][g] == identity) {
          found = true;
          break;
        }
      }
      if (!found) {
        report.fail("element " + std::to_string(g) +
                    " has no two-sided inverse");
      }
    }
  }
  return report;
}

FiniteGroup::FiniteGroup() : table_{{0}}, inverse_{0}, identity_(0) {}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
  check_group_table(table_).require("finite group table");
  const int n = order();
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) {
      ok = table_[e][g] == g && table_[g][e] == g;
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(n, 0);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inverse_[g] = h;
        break;
      }
    }
  }
}

bool FiniteGroup::is_abelian() const {
  const int n = order();
  for (int g = 0; g < n; ++g) {
    for (int h = g + 1; h < n; ++h) {
      if (table_[g][h] != table_[h][g]) return false;
    }
  }
  return true;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw validation_error("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order();
  const int nb = b.order();
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int g = 0; g < na * nb; ++g) {
    for (int h = 0; h < na * nb; ++h) {
      const int ga = g / nb, gb = g % nb;
      const int ha = h / nb, hb = h % nb;
      table[g][h] = a.mul(ga, ha) * nb + b.mul(gb, hb);
    }
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup symmetric_group_3() {
  // Permutations of {0,1,2} listed as e, (01), (02), (12), (012), (021),
  // where (012) maps 0->1->2->0. Composition: (p*q)(i) = p(q(i)).
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto find = [&](const std::vector<int>& p) {
    for (int i = 0; i < 6; ++i) {
      if (perms[i] == p) return i;
    }
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int g = 0; g < 6; ++g) {
    for (int h = 0; h < 6; ++h) {
      std::vector<int> comp(3);
      for (int i = 0; i < 3; ++i) comp[i] = perms[g][perms[h][i]];
      table[g][h] = find(comp);
    }
  }
  return FiniteGroup(std::move(table));
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> classes;
  for (int g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::set<int> members;
    for (int h = 0; h < n; ++h) members.insert(group.conjugate(h, g));
    ConjugacyClass cls;
    cls.representative = *members.begin();
    cls.members.assign(members.begin(), members.end());
    for (int m : cls.members) seen[m] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

AbelianGroup::AbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
  for (int f : factors_) {
    if (f < 1) throw validation_error("abelian factor orders must be >= 1");
  }
  order_ = 1;
  exponent_ = 1;
  for (int f : factors_) {
    order_ *= f;
    exponent_ = std::lcm(exponent_, f);
  }
}

std::vector<int> AbelianGroup::tuple_of(int index) const {
  std::vector<int> tuple(factors_.size(), 0);
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    tuple[i] = index % factors_[i];
    index /= factors_[i];
  }
  return tuple;
}

int AbelianGroup::index_of(const std::vector<int>& tuple) const {
  if (tuple.size() != factors_.size()) {
    throw validation_error("tuple arity mismatch for abelian group");
  }
  int index = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int v = ((tuple[i] % factors_[i]) + factors_[i]) % factors_[i];
    index = index * factors_[i] + v;
  }
  return index;
}

int AbelianGroup::add(int a, int b) const {
  const auto ta = tuple_of(a);
  const auto tb = tuple_of(b);
  std::vector<int> sum(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    sum[i] = (ta[i] + tb[i]) % factors_[i];
  }
  return index_of(sum);
}

int AbelianGroup::negate(int a) const {
  const auto ta = tuple_of(a);
  std::vector<int> neg(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    neg[i] = (factors_[i] - ta[i]) % factors_[i];
  }
  return index_of(neg);
}

int AbelianGroup::scale(long long k, int a) const {
  const auto ta = tuple_of(a);
  std::vector<int> out(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    const long long m = factors_[i];
    out[i] = static_cast<int>((((k * ta[i]) % m) + m) % m);
  }
  return index_of(out);
}

DualCharacter::DualCharacter(const AbelianGroup& domain,
                             std::vector<int> exponents)
    : factors_(domain.factors()), exponents_(std::move(exponents)) {
  if (exponents_.size() != factors_.size()) {
    throw validation_error("character exponent arity mismatch");
  }
  for (size_t i = 0; i < factors_.size(); ++i) {
    exponents_[i] = ((exponents_[i] % factors_[i]) + factors_[i]) % factors_[i];
  }
}

Cyclotomic DualCharacter::value(int a) const {
  AbelianGroup domain(factors_);
  const auto tuple = domain.tuple_of(a);
  Cyclotomic result = Cyclotomic::one();
  for (size_t i = 0; i < factors_.size(); ++i) {
    result *= root_of_unity(factors_[i], exponents_[i] * tuple[i]);
  }
  return result;
}

bool DualCharacter::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](int e) { return e == 0; });
}

DualCharacter DualCharacter::product(const DualCharacter& other) const {
  if (factors_ != other.factors_) {
    throw validation_error("character product across different groups");
  }
  std::vector<int> sum(exponents_.size());
  for (size_t i = 0; i < exponents_.size(); ++i) {
    sum[i] = (exponents_[i] + other.exponents_[i]) % factors_[i];
  }
  AbelianGroup domain(factors_);
  return DualCharacter(domain, std::move(sum));
}

DualCharacter DualCharacter::inverse() const {
  std::vector<int> neg(exponents_.size());
  for (size_t i = 0; i < exponents_.size(); ++i) {
    neg[i] = (factors_[i] - exponents_[i]) % factors_[i];
  }
  AbelianGroup domain(factors_);
  return DualCharacter(domain, std::move(neg));
}

int DualCharacter::index() const {
  AbelianGroup domain(factors_);
  return domain.index_of(exponents_);
}

std::string DualCharacter::to_string() const {
  std::ostringstream out;
  out << "chi[";
  for (size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out << ",";
    out << exponents_[i];
  }
  out << "]";
  return out.str();
}

std::vector<DualCharacter> dual_group(const AbelianGroup& domain) {
  std::vector<DualCharacter> characters;
  characters.reserve(domain.order());
  for (int j = 0; j < domain.order(); ++j) {
    characters.emplace_back(domain, domain.tuple_of(j));
  }
  return characters;
}

ValidationReport check_action(const FiniteGroup& group,
                              const AbelianGroup& module,
                              const std::vector<std::vector<int>>& table) {
  ValidationReport report;
  const int n = group.order();
  const int m = module.order();
  if (static_cast<int>(table.size()) != n) {
    report.fail("action table must have one row per group element");
    return report;
  }
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(table[g].size()) != m) {
      report.fail("action row " + std::to_string(g) + " has wrong length");
      return report;
    }
    for (int a = 0; a < m; ++a) {
      if (table[g][a] < 0 || table[g][a] >= m) {
        report.fail("action entry (" + std::to_string(g) + "," +
                    std::to_string(a) + ") out of range");
        return report;
      }
    }
  }
  for (int g = 0; g < n; ++g) {
    // Injectivity (with additivity below this makes the row an automorphism).
    bool injective = true;
    std::vector<bool> hit(m, false);
    for (int a = 0; a < m; ++a) {
      if (hit[table[g][a]]) {
        report.fail("row " + std::to_string(g) + " is not injective: value " +
                    std::to_string(table[g][a]) + " repeats");
        injective = false;
        break;
      }
      hit[table[g][a]] = true;
    }
    if (!injective) continue;
    // Additivity: g|>(a+b) = g|>a + g|>b (implies g|>0 = 0).
    bool additive = true;
    for (int a = 0; a < m && additive; ++a) {
      for (int b = a; b < m; ++b) {
        const int lhs = table[g][module.add(a, b)];
        const int rhs = module.add(table[g][a], table[g][b]);
        if (lhs != rhs) {
          report.fail("row " + std::to_string(g) + " is not additive: g|>(" +
                      std::to_string(a) + "+" + std::to_string(b) + ") = " +
                      std::to_string(lhs) + " but g|>a + g|>b = " +
                      std::to_string(rhs));
          additive = false;
          break;
        }
      }
    }
  }
  if (!report.ok()) return report;
  const int e = group.identity();
  for (int a = 0; a < m; ++a) {
    if (table[e][a] != a) {
      report.fail("identity must act trivially but e|>" + std::to_string(a) +
                  " = " + std::to_string(table[e][a]));
      break;
    }
  }
  for (int g = 0; g < n && report.ok(); ++g) {
    for (int h = 0; h < n && report.ok(); ++h) {
      for (int a = 0; a < m; ++a) {
        const int lhs = table[group.mul(g, h)][a];
        const int rhs = table[g][table[h][a]];
        if (lhs != rhs) {
          report.fail("homomorphism law fails at (g,h,a) = (" +
                      std::to_string(g) + "," + std::to_string(h) + "," +
                      std::to_string(a) + "): (gh)|>a = " +
                      std::to_string(lhs) + " but g|>(h|>a) = " +
                      std::to_string(rhs));
          break;
        }
      }
    }
  }
  return report;
}

GroupAction validate_action(const FiniteGroup& group,
                            const AbelianGroup& module,
                            const std::vector<std::vector<int>>& table) {
  return GroupAction(group, module, table);
}

GroupAction::GroupAction(FiniteGroup group, AbelianGroup module,
                         std::vector<std::vector<int>> table)
    : group_(std::move(group)),
      module_(std::move(module)),
      table_(std::move(table)) {
  check_action(group_, module_, table_).require("group action");
}

int GroupAction::act_character_index(int g, int char_index) const {
  // (g.rho)(a) = rho(g^{-1}|>a). Determine the exponent tuple of the result
  // by evaluating on the cyclic generators, in units of 1/exp(A).
  const auto& factors = module_.factors();
  const int ginv = group_.inverse(g);
  const int big = module_.exponent();
  const auto rho = module_.tuple_of(char_index);
  std::vector<int> out(factors.size(), 0);
  for (size_t i = 0; i < factors.size(); ++i) {
    std::vector<int> gen(factors.size(), 0);
    if (factors[i] == 1) continue;
    gen[i] = 1;
    const auto image = module_.tuple_of(table_[ginv][module_.index_of(gen)]);
    long long units = 0;  // value as exponent of zeta_exp(A)
    for (size_t j = 0; j < factors.size(); ++j) {
      units += static_cast<long long>(rho[j]) * image[j] * (big / factors[j]);
    }
    units %= big;
    // The result has order dividing factors[i], so units*factors[i]/big is
    // integral; automorphism input guarantees this.
    const long long scaled = units * factors[i];
    if (scaled % big != 0) {
      throw validation_error("character action produced a non-character");
    }
    out[i] = static_cast<int>(((scaled / big) % factors[i] + factors[i]) %
                              factors[i]);
  }
  return module_.index_of(out);
}

bool GroupAction::is_trivial() const {
  for (const auto& row : table_) {
    for (size_t a = 0; a < row.size(); ++a) {
      if (row[a] != static_cast<int>(a)) return false;
    }
  }
  return true;
}

GroupAction trivial_action(const FiniteGroup& group,
                           const AbelianGroup& module) {
  std::vector<std::vector<int>> table(group.order(),
                                      std::vector<int>(module.order()));
  for (auto& row : table) {
    std::iota(row.begin(), row.end(), 0);
  }
  return GroupAction(group, module, std::move(table));
}

bool is_subgroup(const FiniteGroup& group, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  std::set<int> set(elements.begin(), elements.end());
  if (set.size() != elements.size()) return false;
  for (int e : elements) {
    if (e < 0 || e >= group.order()) return false;
  }
  if (!set.count(group.identity())) return false;
  for (int a : elements) {
    if (!set.count(group.inverse(a))) return false;
    for (int b : elements) {
      if (!set.count(group.mul(a, b))) return false;
    }
  }
  return true;
}

std::vector<int> coset_representatives(const FiniteGroup& group,
                                       const std::vector<int>& subgroup) {
  if (!is_subgroup(group, subgroup)) {
    throw validation_error("coset computation requires a subgroup");
  }
  std::vector<bool> covered(group.order(), false);
  std::vector<int> reps;
  for (int g = 0; g < group.order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (int h : subgroup) covered[group.mul(g, h)] = true;
  }
  return reps;
}

std::vector<int> coset_action(const FiniteGroup& group,
                              const std::vector<int>& subgroup, int g) {
  const auto reps = coset_representatives(group, subgroup);
  std::vector<int> rep_of(group.order(), -1);
  for (size_t i = 0; i < reps.size(); ++i) {
    for (int h : subgroup) rep_of[group.mul(reps[i], h)] = static_cast<int>(i);
  }
  std::vector<int> perm(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) {
    perm[i] = rep_of[group.mul(g, reps[i])];
  }
  return perm;
}

int double_coset_count(const FiniteGroup& group, const std::vector<int>& left,
                       const std::vector<int>& right) {
  if (!is_subgroup(group, left) || !is_subgroup(group, right)) {
    throw validation_error("double cosets require subgroups");
  }
  std::set<std::set<int>> cosets;
  for (int g = 0; g < group.order(); ++g) {
    std::set<int> coset;
    for (int h : left) {
      for (int k : right) coset.insert(group.mul(group.mul(h, g), k));
    }
    cosets.insert(std::move(coset));
  }
  return static_cast<int>(cosets.size());
}

namespace {

std::vector<int> closure(const FiniteGroup& group, std::set<int> seed) {
  seed.insert(group.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = seed;
    for (int a : seed) {
      next.insert(group.inverse(a));
      for (int b : seed) next.insert(group.mul(a, b));
    }
    if (next.size() != seed.size()) {
      seed.swap(next);
      grew = true;
    }
  }
  return {seed.begin(), seed.end()};
}

}  // namespace

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& group) {
  std::set<std::vector<int>> found;
  found.insert(closure(group, {}));
  // Breadth-first closure extension: every subgroup arises by repeatedly
  // adjoining one generator, so this enumerates all of them.
  std::vector<std::vector<int>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& sub : frontier) {
      for (int g = 0; g < group.order(); ++g) {
        std::set<int> seed(sub.begin(), sub.end());
        seed.insert(g);
        auto bigger = closure(group, std::move(seed));
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier.swap(next);
  }
  std::vector<std::vector<int>> result(found.begin(), found.end());
  std::sort(result.begin(), result.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return result;
}

std::vector<std::vector<int>> subgroup_class_representatives(
    const FiniteGroup& group) {
  const auto subgroups = all_subgroups(group);
  std::vector<std::vector<int>> reps;
  std::set<std::vector<int>> seen;
  for (const auto& sub : subgroups) {
    if (seen.count(sub)) continue;
    // Mark the whole conjugacy class of this subgroup.
    for (int g = 0; g < group.order(); ++g) {
      std::set<int> conj;
      for (int h : sub) conj.insert(group.conjugate(g, h));
      seen.insert(std::vector<int>(conj.begin(), conj.end()));
    }
    reps.push_back(sub);
  }
  return reps;
}

}  // namespace twochar
