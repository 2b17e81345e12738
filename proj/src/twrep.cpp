/**
 * @file twrep.cpp
 * @brief Monomial 2-representations: validation and constructions.
 */
#include "twrep.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace twochar {

namespace {

/// v^power for small positive powers.
Cyclotomic cyclotomic_power(const Cyclotomic& v, int power) {
  Cyclotomic out = Cyclotomic::one();
  for (int t = 0; t < power; ++t) out *= v;
  return out;
}

bool is_root_of_unity(const Cyclotomic& v, int order) {
  if (v.is_zero()) return false;
  return cyclotomic_power(v, order).is_one();
}

ScalarTable ones_table(int n1, int n2, int n3) {
  return ScalarTable(
      n1, std::vector<std::vector<Cyclotomic>>(
              n2, std::vector<Cyclotomic>(n3, Cyclotomic::one())));
}

std::string tuple2(int a, int b) {
  std::ostringstream out;
  out << "(" << a << "," << b << ")";
  return out.str();
}

std::string tuple3(int a, int b, int c) {
  std::ostringstream out;
  out << "(" << a << "," << b << "," << c << ")";
  return out.str();
}

std::string tuple4(int a, int b, int c, int d) {
  std::ostringstream out;
  out << "(" << a << "," << b << "," << c << "," << d << ")";
  return out.str();
}

std::string tuple5(int a, int b, int c, int d, int e) {
  std::ostringstream out;
  out << "(" << a << "," << b << "," << c << "," << d << "," << e << ")";
  return out.str();
}

}  // namespace

ValidationReport check_rep(const FiniteTwoGroup& group, int n,
                           const std::vector<std::vector<int>>& sigma,
                           const ScalarTable& cochain, const ScalarTable& tau) {
  ValidationReport report;
  const int N = group.pi1().order();
  const int M = group.pi2().order();

  if (n <= 0) {
    report.problems.push_back("the number of simple lines must be positive");
    return report;
  }

  bool shape_ok = true;
  auto shape_problem = [&](const std::string& message) {
    report.problems.push_back(message);
    shape_ok = false;
  };
  if (static_cast<int>(sigma.size()) != N) {
    shape_problem("sigma table must have one row per object of pi1");
  } else {
    for (int g = 0; g < N && shape_ok; ++g) {
      if (static_cast<int>(sigma[g].size()) != n) {
        shape_problem("sigma row has the wrong length at g=" +
                      std::to_string(g));
      }
    }
  }
  if (static_cast<int>(cochain.size()) != N) {
    shape_problem("composition scalar table must be indexed by pi1 x pi1");
  } else {
    for (int g = 0; g < N && shape_ok; ++g) {
      if (static_cast<int>(cochain[g].size()) != N) {
        shape_problem("composition scalar table must be indexed by pi1 x pi1");
        break;
      }
      for (int h = 0; h < N && shape_ok; ++h) {
        if (static_cast<int>(cochain[g][h].size()) != n) {
          shape_problem("composition scalar row has the wrong length at " +
                        tuple2(g, h));
        }
      }
    }
  }
  if (static_cast<int>(tau.size()) != N) {
    shape_problem("2-cell scalar table must be indexed by pi1 x pi2");
  } else {
    for (int g = 0; g < N && shape_ok; ++g) {
      if (static_cast<int>(tau[g].size()) != M) {
        shape_problem("2-cell scalar table must be indexed by pi1 x pi2");
        break;
      }
      for (int a = 0; a < M && shape_ok; ++a) {
        if (static_cast<int>(tau[g][a].size()) != n) {
          shape_problem("2-cell scalar row has the wrong length at " +
                        tuple2(g, a));
        }
      }
    }
  }
  if (!shape_ok) return report;

  // Permutation rows.
  bool rows_ok = true;
  for (int g = 0; g < N; ++g) {
    std::vector<bool> seen(n, false);
    bool row_ok = true;
    for (int i = 0; i < n; ++i) {
      const int image = sigma[g][i];
      if (image < 0 || image >= n || seen[image]) {
        row_ok = false;
        break;
      }
      seen[image] = true;
    }
    if (!row_ok) {
      report.problems.push_back("sigma row at g=" + std::to_string(g) +
                                " is not a permutation of the lines");
      rows_ok = false;
    }
  }
  if (!rows_ok) return report;

  const int e = group.e();
  for (int i = 0; i < n; ++i) {
    if (sigma[e][i] != i) {
      report.problems.push_back(
          "sigma at the identity object moves line " + std::to_string(i) +
          " to " + std::to_string(sigma[e][i]));
    }
  }
  for (int g = 0; g < N; ++g) {
    for (int h = 0; h < N; ++h) {
      for (int i = 0; i < n; ++i) {
        if (sigma[group.mul(g, h)][i] != sigma[g][sigma[h][i]]) {
          report.problems.push_back(
              "sigma is not a homomorphism at (g,h,i)=" + tuple3(g, h, i) +
              ": sigma(gh) maps it to " +
              std::to_string(sigma[group.mul(g, h)][i]) +
              " but sigma(g)sigma(h) maps it to " +
              std::to_string(sigma[g][sigma[h][i]]));
        }
      }
    }
  }

  const int order = group.scalar_order();
  for (int g = 0; g < N; ++g) {
    for (int h = 0; h < N; ++h) {
      for (int i = 0; i < n; ++i) {
        if (!is_root_of_unity(cochain[g][h][i], order)) {
          report.problems.push_back(
              "composition scalar at (g,h,i)=" + tuple3(g, h, i) + " is " +
              cochain[g][h][i].to_string() +
              ", not a root of unity of order dividing " +
              std::to_string(order));
        }
      }
    }
    for (int a = 0; a < M; ++a) {
      for (int i = 0; i < n; ++i) {
        if (!is_root_of_unity(tau[g][a][i], order)) {
          report.problems.push_back(
              "2-cell scalar at (g,a,i)=" + tuple3(g, a, i) + " is " +
              tau[g][a][i].to_string() +
              ", not a root of unity of order dividing " +
              std::to_string(order));
        }
      }
    }
  }
  if (!report.ok()) return report;  // laws below assume invertible scalars

  // Normalization.
  for (int g = 0; g < N; ++g) {
    for (int i = 0; i < n; ++i) {
      if (!cochain[e][g][i].is_one()) {
        report.problems.push_back("normalization fails: c(e,g,i) != 1 at " +
                                  tuple2(g, i));
      }
      if (!cochain[g][e][i].is_one()) {
        report.problems.push_back("normalization fails: c(g,e,i) != 1 at " +
                                  tuple2(g, i));
      }
      if (!tau[g][group.zero2()][i].is_one()) {
        report.problems.push_back("normalization fails: tau(g,0,i) != 1 at " +
                                  tuple2(g, i));
      }
    }
  }

  // tau(g,-,i) is a character of pi2.
  for (int g = 0; g < N; ++g) {
    for (int a = 0; a < M; ++a) {
      for (int b = 0; b < M; ++b) {
        for (int i = 0; i < n; ++i) {
          if (tau[g][group.add2(a, b)][i] != tau[g][a][i] * tau[g][b][i]) {
            report.problems.push_back(
                "2-cell scalars are not multiplicative at (g,a,b,i)=" +
                tuple4(g, a, b, i));
          }
        }
      }
    }
  }

  // Twisted cocycle identity.
  for (int g = 0; g < N; ++g) {
    for (int h = 0; h < N; ++h) {
      for (int k = 0; k < N; ++k) {
        const int gh = group.mul(g, h);
        const int ghk = group.mul(gh, k);
        const int hk = group.mul(h, k);
        const int a = group.alpha(g, h, k);
        for (int i = 0; i < n; ++i) {
          const Cyclotomic lhs =
              cochain[g][h][sigma[k][i]] * cochain[gh][k][i] * tau[ghk][a][i];
          const Cyclotomic rhs = cochain[g][hk][i] * cochain[h][k][i];
          if (lhs != rhs) {
            report.problems.push_back(
                "twisted cocycle fails at (g,h,k,i)=" + tuple4(g, h, k, i) +
                ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
          }
        }
      }
    }
  }

  // Interchange law.
  for (int g = 0; g < N; ++g) {
    for (int h = 0; h < N; ++h) {
      const int gh = group.mul(g, h);
      for (int a = 0; a < M; ++a) {
        for (int b = 0; b < M; ++b) {
          const int pasted = group.add2(a, group.act(g, b));
          for (int i = 0; i < n; ++i) {
            const Cyclotomic lhs = tau[gh][pasted][i];
            const Cyclotomic rhs = tau[g][a][sigma[h][i]] * tau[h][b][i];
            if (lhs != rhs) {
              report.problems.push_back(
                  "interchange law fails at (g,h,a,b,i)=" +
                  tuple5(g, h, a, b, i) + ": lhs = " + lhs.to_string() +
                  ", rhs = " + rhs.to_string());
            }
          }
        }
      }
    }
  }

  return report;
}

MonomialTwoRep::MonomialTwoRep(FiniteTwoGroup group, int n,
                               std::vector<std::vector<int>> sigma,
                               ScalarTable cochain, ScalarTable tau,
                               std::string name)
    : group_(std::move(group)),
      n_(n),
      sigma_(std::move(sigma)),
      cochain_(std::move(cochain)),
      tau_(std::move(tau)),
      name_(std::move(name)) {
  check_rep(group_, n_, sigma_, cochain_, tau_)
      .require("monomial 2-representation '" + name_ + "'");
}

bool MonomialTwoRep::equal_data(const MonomialTwoRep& other) const {
  return group_ == other.group_ && n_ == other.n_ && sigma_ == other.sigma_ &&
         cochain_ == other.cochain_ && tau_ == other.tau_;
}

MonomialTwoRep trivial_rep(const FiniteTwoGroup& group) {
  const int N = group.pi1().order();
  const int M = group.pi2().order();
  return MonomialTwoRep(group, 1, std::vector<std::vector<int>>(N, {0}),
                        ones_table(N, N, 1), ones_table(N, M, 1),
                        "\xF0\x9D\x9F\x99");  // the unit symbol
}

MonomialTwoRep direct_sum(const MonomialTwoRep& a, const MonomialTwoRep& b) {
  if (!(a.group() == b.group())) {
    throw validation_error(
        "direct sum requires 2-representations of the same 2-group");
  }
  const FiniteTwoGroup& group = a.group();
  const int N = group.pi1().order();
  const int M = group.pi2().order();
  const int na = a.dimension();
  const int n = na + b.dimension();

  std::vector<std::vector<int>> sigma(N, std::vector<int>(n));
  ScalarTable cochain = ones_table(N, N, n);
  ScalarTable tau = ones_table(N, M, n);
  for (int g = 0; g < N; ++g) {
    for (int i = 0; i < n; ++i) {
      sigma[g][i] = i < na ? a.sigma(g, i) : na + b.sigma(g, i - na);
    }
    for (int h = 0; h < N; ++h) {
      for (int i = 0; i < n; ++i) {
        cochain[g][h][i] =
            i < na ? a.cochain(g, h, i) : b.cochain(g, h, i - na);
      }
    }
    for (int x = 0; x < M; ++x) {
      for (int i = 0; i < n; ++i) {
        tau[g][x][i] = i < na ? a.tau(g, x, i) : b.tau(g, x, i - na);
      }
    }
  }
  return MonomialTwoRep(group, n, std::move(sigma), std::move(cochain),
                        std::move(tau),
                        "(" + a.name() + " \xE2\x8A\x95 " + b.name() + ")");
}

MonomialTwoRep deligne_tensor(const MonomialTwoRep& a,
                              const MonomialTwoRep& b) {
  if (!(a.group() == b.group())) {
    throw validation_error(
        "tensor product requires 2-representations of the same 2-group");
  }
  const FiniteTwoGroup& group = a.group();
  const int N = group.pi1().order();
  const int M = group.pi2().order();
  const int na = a.dimension();
  const int nb = b.dimension();
  const int n = na * nb;

  std::vector<std::vector<int>> sigma(N, std::vector<int>(n));
  ScalarTable cochain = ones_table(N, N, n);
  ScalarTable tau = ones_table(N, M, n);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      const int line = i * nb + j;
      for (int g = 0; g < N; ++g) {
        sigma[g][line] = a.sigma(g, i) * nb + b.sigma(g, j);
        for (int h = 0; h < N; ++h) {
          cochain[g][h][line] = a.cochain(g, h, i) * b.cochain(g, h, j);
        }
        for (int x = 0; x < M; ++x) {
          tau[g][x][line] = a.tau(g, x, i) * b.tau(g, x, j);
        }
      }
    }
  }
  return MonomialTwoRep(group, n, std::move(sigma), std::move(cochain),
                        std::move(tau),
                        "(" + a.name() + " \xE2\x8A\xA0 " + b.name() + ")");
}

MonomialTwoRep opposite(const MonomialTwoRep& rep) {
  const FiniteTwoGroup& group = rep.group();
  const int N = group.pi1().order();
  const int M = group.pi2().order();
  const int n = rep.dimension();
  ScalarTable cochain = ones_table(N, N, n);
  ScalarTable tau = ones_table(N, M, n);
  for (int g = 0; g < N; ++g) {
    for (int h = 0; h < N; ++h) {
      for (int i = 0; i < n; ++i) {
        cochain[g][h][i] = rep.cochain(g, h, i).inverse();
      }
    }
    for (int a = 0; a < M; ++a) {
      for (int i = 0; i < n; ++i) tau[g][a][i] = rep.tau(g, a, i).inverse();
    }
  }
  return MonomialTwoRep(group, n, rep.sigma_table(), std::move(cochain),
                        std::move(tau), rep.name() + "^op");
}

MonomialTwoRep induced_rep(const FiniteTwoGroup& group,
                           const std::vector<int>& subgroup,
                           const std::vector<std::vector<Cyclotomic>>& beta,
                           const std::string& name) {
  if (group.pi2().order() != 1) {
    throw validation_error("induction requires a 2-group with trivial pi2");
  }
  if (!is_subgroup(group.pi1(), subgroup)) {
    throw validation_error("induction requires a subgroup of pi1");
  }
  const int H = static_cast<int>(subgroup.size());

  // Validate beta as a normalized 2-cocycle on the subgroup.
  ValidationReport beta_report;
  if (static_cast<int>(beta.size()) != H) {
    beta_report.problems.push_back("beta must be an |H| x |H| table");
  } else {
    for (const auto& row : beta) {
      if (static_cast<int>(row.size()) != H) {
        beta_report.problems.push_back("beta must be an |H| x |H| table");
        break;
      }
    }
  }
  std::map<int, int> position;
  for (int t = 0; t < H; ++t) position[subgroup[t]] = t;
  const int pos_e = position.at(group.e());
  if (beta_report.ok()) {
    for (int s = 0; s < H; ++s) {
      for (int t = 0; t < H; ++t) {
        if (!is_root_of_unity(beta[s][t], group.scalar_order())) {
          beta_report.problems.push_back(
              "beta value at " + tuple2(s, t) +
              " is not a root of unity of order dividing " +
              std::to_string(group.scalar_order()));
        }
      }
    }
  }
  if (beta_report.ok()) {
    for (int t = 0; t < H; ++t) {
      if (!beta[pos_e][t].is_one() || !beta[t][pos_e].is_one()) {
        beta_report.problems.push_back("beta is not normalized at position " +
                                       std::to_string(t));
      }
    }
    for (int s = 0; s < H; ++s) {
      for (int t = 0; t < H; ++t) {
        const int st = position.at(group.mul(subgroup[s], subgroup[t]));
        for (int u = 0; u < H; ++u) {
          const int tu = position.at(group.mul(subgroup[t], subgroup[u]));
          if (beta[s][t] * beta[st][u] != beta[s][tu] * beta[t][u]) {
            beta_report.problems.push_back(
                "beta fails the 2-cocycle identity at " + tuple3(s, t, u));
          }
        }
      }
    }
  }
  beta_report.require("induction cocycle");

  const auto reps = coset_representatives(group.pi1(), subgroup);
  const int n = static_cast<int>(reps.size());
  const int N = group.pi1().order();

  std::vector<std::vector<int>> sigma(N);
  for (int g = 0; g < N; ++g) {
    sigma[g] = coset_action(group.pi1(), subgroup, g);
  }
  // H-part of g * r_i: the subgroup element with g r_i = r_{sigma_g(i)} h.
  auto h_part = [&](int g, int i) {
    const int moved = group.mul(g, reps[i]);
    return position.at(group.mul(group.inv(reps[sigma[g][i]]), moved));
  };

  ScalarTable cochain = ones_table(N, N, n);
  for (int g1 = 0; g1 < N; ++g1) {
    for (int g2 = 0; g2 < N; ++g2) {
      for (int i = 0; i < n; ++i) {
        cochain[g1][g2][i] =
            beta[h_part(g1, sigma[g2][i])][h_part(g2, i)].inverse();
      }
    }
  }

  std::string rep_name = name;
  if (rep_name.empty()) {
    std::ostringstream out;
    out << "Ind({";
    for (int t = 0; t < H; ++t) out << (t ? "," : "") << subgroup[t];
    out << "})";
    rep_name = out.str();
  }
  return MonomialTwoRep(group, n, std::move(sigma), std::move(cochain),
                        ones_table(N, 1, n), rep_name);
}

namespace {

/// Expands tau over all objects from its identity slice via
/// tau(g,a,i) = tau(e,a,sigma_g(i)).
ScalarTable expand_tau(const FiniteTwoGroup& group,
                       const std::vector<std::vector<int>>& sigma,
                       const std::vector<std::vector<Cyclotomic>>& tau_e) {
  const int N = group.pi1().order();
  const int M = group.pi2().order();
  const int n = static_cast<int>(sigma[0].size());
  ScalarTable tau = ones_table(N, M, n);
  for (int g = 0; g < N; ++g) {
    for (int a = 0; a < M; ++a) {
      for (int i = 0; i < n; ++i) tau[g][a][i] = tau_e[a][sigma[g][i]];
    }
  }
  return tau;
}

std::vector<MonomialTwoRep> irreps_g1(const FiniteTwoGroup& group) {
  const int N = 2, M = 3, n = 2;
  const std::vector<std::vector<int>> swap_sigma = {{0, 1}, {1, 0}};
  std::vector<MonomialTwoRep> out;
  out.push_back(trivial_rep(group));
  out.push_back(MonomialTwoRep(group, n, swap_sigma, ones_table(N, N, n),
                               ones_table(N, M, n),
                               "\xF0\x9D\x9F\x99_c"));
  // Line characters omega, omega^2 swapped by the nontrivial object.
  std::vector<std::vector<Cyclotomic>> tau_e(
      M, std::vector<Cyclotomic>(n, Cyclotomic::one()));
  for (int a = 0; a < M; ++a) {
    tau_e[a][0] = root_of_unity(3, a);
    tau_e[a][1] = root_of_unity(3, 2 * a);
  }
  out.push_back(MonomialTwoRep(group, n, swap_sigma, ones_table(N, N, n),
                               expand_tau(group, swap_sigma, tau_e), "S"));
  return out;
}

std::vector<MonomialTwoRep> irreps_g2(const FiniteTwoGroup& group) {
  const int N = 2, M = 2, n = 2;
  const std::vector<std::vector<int>> swap_sigma = {{0, 1}, {1, 0}};
  std::vector<MonomialTwoRep> out;
  out.push_back(trivial_rep(group));
  out.push_back(MonomialTwoRep(group, n, swap_sigma, ones_table(N, N, n),
                               ones_table(N, M, n),
                               "\xF0\x9D\x9F\x99_c"));
  // Both lines carry the sign character of pi2; the composition scalars on
  // the nontrivial object are found by exhaustive search (first valid
  // assignment of roots of unity in lexicographic exponent order).
  std::vector<std::vector<Cyclotomic>> tau_e(
      M, std::vector<Cyclotomic>(n, Cyclotomic::one()));
  tau_e[1][0] = -Cyclotomic::one();
  tau_e[1][1] = -Cyclotomic::one();
  const ScalarTable tau = expand_tau(group, swap_sigma, tau_e);
  const int order = group.scalar_order();
  for (int e0 = 0; e0 < order; ++e0) {
    for (int e1 = 0; e1 < order; ++e1) {
      ScalarTable cochain = ones_table(N, N, n);
      cochain[1][1][0] = root_of_unity(order, e0);
      cochain[1][1][1] = root_of_unity(order, e1);
      if (check_rep(group, n, swap_sigma, cochain, tau).ok()) {
        out.push_back(MonomialTwoRep(group, n, swap_sigma, std::move(cochain),
                                     tau, "T"));
        return out;
      }
    }
  }
  throw validation_error("no monomial structure found for the T catalogue "
                         "2-representation");
}

std::vector<MonomialTwoRep> irreps_ba(const FiniteTwoGroup& group) {
  const int M = group.pi2().order();
  std::vector<MonomialTwoRep> out;
  const auto duals = dual_group(group.pi2());
  for (int j = 0; j < M; ++j) {
    ScalarTable tau(1, std::vector<std::vector<Cyclotomic>>(
                           M, std::vector<Cyclotomic>(1)));
    for (int a = 0; a < M; ++a) tau[0][a][0] = duals[j].value(a);
    out.push_back(MonomialTwoRep(group, 1, {{0}}, ones_table(1, 1, 1),
                                 std::move(tau),
                                 "Vect^" + duals[j].to_string()));
  }
  return out;
}

std::vector<MonomialTwoRep> irreps_grp(const FiniteTwoGroup& group) {
  std::vector<MonomialTwoRep> out;
  const auto classes = subgroup_class_representatives(group.pi1());
  const int N = group.pi1().order();
  auto ones_beta = [](int H) {
    return std::vector<std::vector<Cyclotomic>>(
        H, std::vector<Cyclotomic>(H, Cyclotomic::one()));
  };
  // The full subgroup induces the unit; list it first.
  for (const auto& subgroup : classes) {
    if (static_cast<int>(subgroup.size()) == N) {
      out.push_back(induced_rep(group, subgroup, ones_beta(N),
                                "\xF0\x9D\x9F\x99"));
    }
  }
  for (const auto& subgroup : classes) {
    if (static_cast<int>(subgroup.size()) == N) continue;
    out.push_back(
        induced_rep(group, subgroup, ones_beta(subgroup.size()), ""));
  }
  return out;
}

}  // namespace

std::vector<MonomialTwoRep> builtin_irreps(const FiniteTwoGroup& group) {
  const std::string& name = group.name();
  if (name == "G1") return irreps_g1(group);
  if (name == "G2") return irreps_g2(group);
  if (name == "BA(Z2)" || name == "BA(Z3)") return irreps_ba(group);
  if (name == "grp(Z2)" || name == "grp(Z3)" || name == "grp(S3)") {
    return irreps_grp(group);
  }
  throw parse_error("no builtin irreducible catalogue for 2-group: " + name);
}

}  // namespace twochar
