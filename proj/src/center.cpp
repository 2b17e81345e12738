/**
 * @file center.cpp
 * @brief Implementation of center objects, the Fourier 2-transform,
 *        character algebras, the full-center oracle, and the Lagrangian
 *        property checks.
 */
#include "center.hpp"

#include <algorithm>
#include <sstream>

namespace twochar {

namespace {

std::string pair_str(int a, int b) {
  std::ostringstream out;
  out << "(" << a << "," << b << ")";
  return out.str();
}

std::string triple_str(int a, int b, int c) {
  std::ostringstream out;
  out << "(" << a << "," << b << "," << c << ")";
  return out.str();
}

Matrix char_diagonal(const std::vector<DualCharacter>& duals,
                     const std::vector<int>& lines, int a) {
  Matrix m(lines.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    m.at(i, i) = duals[lines[i]].value(a);
  }
  return m;
}

/// sigma_g-fixed line indices, ascending, for every object.
std::vector<std::vector<int>> fixed_lines(const MonomialTwoRep& rep) {
  const int n = rep.group().pi1().order();
  std::vector<std::vector<int>> fixed(n);
  for (int g = 0; g < n; ++g) {
    for (int i = 0; i < rep.dimension(); ++i) {
      if (rep.sigma(g, i) == i) fixed[g].push_back(i);
    }
  }
  return fixed;
}

int position_of(const std::vector<int>& list, int value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end()) return -1;
  return static_cast<int>(it - list.begin());
}

/// Dual-group index of the character a |-> tau(g, a, i).
int match_line_character(const MonomialTwoRep& rep,
                         const std::vector<DualCharacter>& duals, int g,
                         int i) {
  const int m2 = rep.group().pi2().order();
  for (int j = 0; j < m2; ++j) {
    bool all = true;
    for (int a = 0; a < m2 && all; ++a) {
      all = duals[j].value(a) == rep.tau(g, a, i);
    }
    if (all) return j;
  }
  throw validation_error("the 2-cell scalars on line " + std::to_string(i) +
                         " at object " + std::to_string(g) +
                         " of '" + rep.name() +
                         "' are not a character of the 2-cell group");
}

}  // namespace

ValidationReport check_center_object(
    const FiniteTwoGroup& group, const std::vector<std::vector<int>>& lines,
    const std::vector<std::vector<Matrix>>& u) {
  ValidationReport report;
  const int n = group.pi1().order();
  const int m2 = group.pi2().order();
  const std::vector<DualCharacter> duals = dual_group(group.pi2());

  if (static_cast<int>(lines.size()) != n) {
    report.fail("line table has " + std::to_string(lines.size()) +
                " objects, expected " + std::to_string(n));
    return report;
  }
  for (int g = 0; g < n; ++g) {
    for (int idx : lines[g]) {
      if (idx < 0 || idx >= m2) {
        report.fail("line character index " + std::to_string(idx) +
                    " at object " + std::to_string(g) + " is out of range");
        return report;
      }
    }
  }
  if (static_cast<int>(u.size()) != n) {
    report.fail("half-braiding table has " + std::to_string(u.size()) +
                " rows, expected " + std::to_string(n));
    return report;
  }
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(u[k].size()) != n) {
      report.fail("half-braiding row " + std::to_string(k) + " has " +
                  std::to_string(u[k].size()) + " entries, expected " +
                  std::to_string(n));
      return report;
    }
    for (int g = 0; g < n; ++g) {
      int target = group.conjugate_object(k, g);
      if (u[k][g].rows() != lines[target].size() ||
          u[k][g].cols() != lines[g].size()) {
        report.fail("u" + pair_str(k, g) + " has shape " +
                    std::to_string(u[k][g].rows()) + "x" +
                    std::to_string(u[k][g].cols()) + ", expected " +
                    std::to_string(lines[target].size()) + "x" +
                    std::to_string(lines[g].size()));
        return report;
      }
    }
  }

  for (int g = 0; g < n; ++g) {
    if (!u[group.e()][g].is_identity()) {
      report.fail("u(e," + std::to_string(g) + ") is not the identity");
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int g = 0; g < n; ++g) {
      if (u[k][g].cols() > 0 && rank(u[k][g]) != u[k][g].cols()) {
        report.fail("u" + pair_str(k, g) + " is not invertible");
      }
    }
  }
  if (!report.ok()) return report;

  // Naturality in the 2-cells.
  for (int k = 0; k < n; ++k) {
    for (int g = 0; g < n; ++g) {
      if (lines[g].empty()) continue;
      int target = group.conjugate_object(k, g);
      for (int a = 0; a < m2; ++a) {
        Matrix lhs = u[k][g] * char_diagonal(duals, lines[g], a);
        Matrix rhs =
            char_diagonal(duals, lines[target], group.act(k, a)) * u[k][g];
        if (lhs != rhs) {
          report.fail("naturality fails at (k,g,a)=" + triple_str(k, g, a));
        }
      }
    }
  }

  // Composition law: the coherence corrector is the inverse of the
  // conjugation defect, seen through the object's own line characters.
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      int kl = group.mul(k, l);
      for (int g = 0; g < n; ++g) {
        if (lines[g].empty()) continue;
        int mid = group.conjugate_object(l, g);
        int target = group.conjugate_object(kl, g);
        Matrix lhs = u[k][mid] * u[l][g];
        Matrix rhs =
            char_diagonal(duals, lines[target],
                          group.neg2(group.conj_defect(k, l, g))) *
            u[kl][g];
        if (lhs != rhs) {
          report.fail("composition law fails at (k,l,g)=" +
                      triple_str(k, l, g));
        }
      }
    }
  }
  return report;
}

CenterObject::CenterObject(FiniteTwoGroup group,
                           std::vector<std::vector<int>> lines,
                           std::vector<std::vector<Matrix>> u,
                           std::string name)
    : group_(std::move(group)),
      lines_(std::move(lines)),
      u_(std::move(u)),
      duals_(dual_group(group_.pi2())),
      name_(std::move(name)) {
  check_center_object(group_, lines_, u_)
      .require("center object '" + name_ + "'");
}

CenterObject psi_transform(const ClassFunctor& f) {
  const std::vector<DualCharacter> duals = dual_group(f.group().pi2());
  std::vector<std::vector<int>> lines = f.lines();
  for (auto& row : lines) {
    for (int& idx : row) idx = duals[idx].inverse().index();
  }
  return CenterObject(f.group(), lines, f.psi_table(), f.name());
}

ClassFunctor phi_transform(const CenterObject& x) {
  const std::vector<DualCharacter> duals = dual_group(x.group().pi2());
  std::vector<std::vector<int>> lines = x.lines();
  for (auto& row : lines) {
    for (int& idx : row) idx = duals[idx].inverse().index();
  }
  return ClassFunctor(x.group(), lines, x.u_table(), x.name());
}

AlgebraStructure character_algebra(const MonomialTwoRep& rep) {
  const FiniteTwoGroup& tg = rep.group();
  const int n = tg.pi1().order();
  std::vector<std::vector<int>> fixed = fixed_lines(rep);

  std::vector<std::vector<Matrix>> mu(n);
  for (int h = 0; h < n; ++h) {
    mu[h].resize(n);
    for (int k = 0; k < n; ++k) {
      int hk = tg.mul(h, k);
      Matrix m(fixed[hk].size(), fixed[h].size() * fixed[k].size());
      for (std::size_t a = 0; a < fixed[h].size(); ++a) {
        int i = fixed[h][a];
        int b = position_of(fixed[k], i);
        if (b < 0) continue;
        int o = position_of(fixed[hk], i);
        m.at(o, a * fixed[k].size() + b) = rep.cochain(h, k, i);
      }
      mu[h][k] = std::move(m);
    }
  }
  std::vector<Cyclotomic> unit(fixed[tg.e()].size(), Cyclotomic::one());
  return AlgebraStructure{psi_transform(two_character(rep)), unit, mu};
}

AlgebraStructure full_center_oracle(const MonomialTwoRep& rep) {
  const FiniteTwoGroup& tg = rep.group();
  const int n = tg.pi1().order();
  const std::vector<DualCharacter> duals = dual_group(tg.pi2());
  std::vector<std::vector<int>> fixed = fixed_lines(rep);

  std::vector<std::vector<int>> lines(n);
  for (int g = 0; g < n; ++g) {
    for (int i : fixed[g]) {
      lines[g].push_back(match_line_character(rep, duals, g, i));
    }
  }

  // Half-braiding from the mate diagram: the transport passes through the
  // contravariant hom slot, so every compositor scalar appears inverted.
  std::vector<std::vector<Matrix>> u(n);
  for (int m = 0; m < n; ++m) {
    u[m].resize(n);
    for (int g = 0; g < n; ++g) {
      int target = tg.conjugate_object(m, g);
      Matrix mat(fixed[target].size(), fixed[g].size());
      for (std::size_t s = 0; s < fixed[g].size(); ++s) {
        int i = fixed[g][s];
        int j = rep.sigma(m, i);
        int t = position_of(fixed[target], j);
        if (t < 0) {
          throw validation_error("full center of '" + rep.name() +
                                 "': conjugation does not preserve fixed "
                                 "lines at " + pair_str(m, g));
        }
        Cyclotomic value = rep.cochain(m, g, i).inverse();
        value = value * rep.cochain(tg.mul(m, g), tg.inv(m), j).inverse();
        value = value * rep.cochain(m, tg.inv(m), j);
        value = value * rep.tau(tg.e(), tg.coev(m), j).inverse();
        mat.at(t, s) = value;
      }
      u[m][g] = std::move(mat);
    }
  }
  CenterObject object(tg, lines, u, "Z(" + rep.name() + ")");

  // Multiplication by internal-hom composition: inverse composition scalars.
  std::vector<std::vector<Matrix>> mu(n);
  for (int h = 0; h < n; ++h) {
    mu[h].resize(n);
    for (int k = 0; k < n; ++k) {
      int hk = tg.mul(h, k);
      Matrix m(fixed[hk].size(), fixed[h].size() * fixed[k].size());
      for (std::size_t a = 0; a < fixed[h].size(); ++a) {
        int i = fixed[h][a];
        int b = position_of(fixed[k], i);
        if (b < 0) continue;
        int o = position_of(fixed[hk], i);
        m.at(o, a * fixed[k].size() + b) = rep.cochain(h, k, i).inverse();
      }
      mu[h][k] = std::move(m);
    }
  }
  std::vector<Cyclotomic> unit(fixed[tg.e()].size(), Cyclotomic::one());
  return AlgebraStructure{std::move(object), unit, mu};
}

AlgebraStructure normalize_algebra(const AlgebraStructure& a) {
  const FiniteTwoGroup& tg = a.object.group();
  const int n = tg.pi1().order();
  const int e = tg.e();

  // First nonzero structure constant against the unit, per grade.
  std::vector<Cyclotomic> gamma(n, Cyclotomic::one());
  for (int g = 0; g < n; ++g) {
    const Matrix& m = a.mu[g][e];
    bool found = false;
    for (int i = 0; i < a.object.dim(g) && !found; ++i) {
      for (std::size_t o = 0; o < m.rows() && !found; ++o) {
        Cyclotomic value = Cyclotomic::zero();
        for (std::size_t q = 0; q < a.unit.size(); ++q) {
          value = value + a.unit[q] * m.at(o, i * a.unit.size() + q);
        }
        if (!value.is_zero()) {
          gamma[g] = value;
          found = true;
        }
      }
    }
  }

  AlgebraStructure out = a;
  for (int h = 0; h < n; ++h) {
    for (int k = 0; k < n; ++k) {
      int hk = tg.mul(h, k);
      Cyclotomic scale = gamma[h] * gamma[k] * gamma[hk].inverse();
      out.mu[h][k] = scale * a.mu[h][k];
    }
  }
  for (auto& c : out.unit) c = gamma[e].inverse() * c;
  return out;
}

DayBasis center_pair_basis(const CenterObject& x, const CenterObject& y) {
  if (!(x.group() == y.group())) {
    throw validation_error(
        "the graded tensor product requires center objects over the same "
        "2-group");
  }
  const FiniteTwoGroup& tg = x.group();
  const int n = tg.pi1().order();
  DayBasis basis;
  basis.triples.resize(n);
  for (int obj = 0; obj < n; ++obj) {
    for (int k = 0; k < n; ++k) {
      int left = tg.mul(obj, tg.inv(k));
      for (int p = 0; p < x.dim(left); ++p) {
        int wanted =
            tg.action().act_character_index(tg.inv(left), x.line_char(left, p));
        for (int q = 0; q < y.dim(k); ++q) {
          if (y.line_char(k, q) == wanted) {
            basis.triples[obj].push_back({k, p, q});
          }
        }
      }
    }
  }
  return basis;
}

CenterObject center_tensor(const CenterObject& x, const CenterObject& y) {
  const FiniteTwoGroup& tg = x.group();
  const int n = tg.pi1().order();
  DayBasis basis = center_pair_basis(x, y);

  std::vector<std::vector<int>> lines(n);
  for (int obj = 0; obj < n; ++obj) {
    for (const auto& t : basis.triples[obj]) {
      lines[obj].push_back(x.line_char(tg.mul(obj, tg.inv(t[0])), t[1]));
    }
  }

  std::vector<std::vector<Matrix>> u(n);
  for (int m = 0; m < n; ++m) {
    u[m].resize(n);
    for (int obj = 0; obj < n; ++obj) {
      int target = tg.conjugate_object(m, obj);
      Matrix mat(basis.triples[target].size(), basis.triples[obj].size());
      for (std::size_t s = 0; s < basis.triples[obj].size(); ++s) {
        const auto& t = basis.triples[obj][s];
        int k = t[0];
        int left = tg.mul(obj, tg.inv(k));
        const Matrix& a = x.u(m, left);
        const Matrix& b = y.u(m, k);
        int kk = tg.conjugate_object(m, k);
        for (std::size_t pp = 0; pp < a.rows(); ++pp) {
          for (std::size_t qq = 0; qq < b.rows(); ++qq) {
            Cyclotomic coeff = a.at(pp, t[1]) * b.at(qq, t[2]);
            if (coeff.is_zero()) continue;
            int row = basis.find(target, kk, static_cast<int>(pp),
                                 static_cast<int>(qq));
            if (row < 0) {
              throw validation_error(
                  "graded tensor transport left the matched basis at " +
                  pair_str(m, obj));
            }
            mat.at(row, s) = mat.at(row, s) + coeff;
          }
        }
      }
      u[m][obj] = std::move(mat);
    }
  }
  return CenterObject(tg, lines, u,
                      "(" + x.name() + " \xE2\x8A\x97 " + y.name() + ")");
}

Matrix center_braiding(const CenterObject& x, const CenterObject& y,
                       int object) {
  DayBasis xy = center_pair_basis(x, y);
  DayBasis yx = center_pair_basis(y, x);
  const FiniteTwoGroup& tg = x.group();
  Matrix out(yx.triples[object].size(), xy.triples[object].size());
  for (std::size_t s = 0; s < xy.triples[object].size(); ++s) {
    const auto& t = xy.triples[object][s];
    int k = t[0];
    int grade = tg.mul(object, tg.inv(k));
    const Matrix& b = y.u(object, k);
    for (std::size_t qq = 0; qq < b.rows(); ++qq) {
      Cyclotomic coeff = b.at(qq, t[2]);
      if (coeff.is_zero()) continue;
      int row = yx.find(object, grade, static_cast<int>(qq), t[1]);
      if (row < 0) {
        throw validation_error("braiding left the matched basis at object " +
                               std::to_string(object));
      }
      out.at(row, s) = coeff;
    }
  }
  return out;
}

std::size_t unit_hom_dim(const CenterObject& x) {
  const FiniteTwoGroup& tg = x.group();
  const int n = tg.pi1().order();
  const int e = tg.e();
  const std::size_t d = x.lines()[e].size();
  std::vector<Matrix> ops;
  for (int m = 0; m < n; ++m) {
    Matrix diag(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      diag.at(i, i) = x.line_value(e, static_cast<int>(i),
                                   tg.act(tg.inv(m), tg.coev(m)));
    }
    ops.push_back(x.u(m, e) * diag);
  }
  return joint_fixed_dimension(ops);
}

namespace {

/// mu restricted to the matched pair basis at one object: a map from the
/// graded-tensor basis into X_g.
Matrix coend_multiplication(const AlgebraStructure& a, const DayBasis& basis,
                            int object) {
  const FiniteTwoGroup& tg = a.object.group();
  Matrix out(a.object.dim(object), basis.triples[object].size());
  for (std::size_t s = 0; s < basis.triples[object].size(); ++s) {
    const auto& t = basis.triples[object][s];
    int k = t[0];
    int h = tg.mul(object, tg.inv(k));
    const Matrix& m = a.mu[h][k];
    for (std::size_t o = 0; o < m.rows(); ++o) {
      out.at(o, s) = m.at(o, t[1] * a.object.dim(k) + t[2]);
    }
  }
  return out;
}

bool check_unit_laws(const AlgebraStructure& a) {
  const FiniteTwoGroup& tg = a.object.group();
  const int n = tg.pi1().order();
  const int e = tg.e();
  const std::size_t de = a.unit.size();
  if (de != static_cast<std::size_t>(a.object.dim(e))) return false;
  for (int k = 0; k < n; ++k) {
    const std::size_t dk = a.object.dim(k);
    // unit * v = v.
    for (std::size_t q = 0; q < dk; ++q) {
      std::vector<Cyclotomic> got(dk, Cyclotomic::zero());
      for (std::size_t o = 0; o < dk; ++o) {
        for (std::size_t p = 0; p < de; ++p) {
          got[o] = got[o] + a.unit[p] * a.mu[e][k].at(o, p * dk + q);
        }
      }
      for (std::size_t o = 0; o < dk; ++o) {
        if (got[o] != ((o == q) ? Cyclotomic::one() : Cyclotomic::zero())) {
          return false;
        }
      }
    }
    // v * unit = v.
    for (std::size_t p = 0; p < dk; ++p) {
      std::vector<Cyclotomic> got(dk, Cyclotomic::zero());
      for (std::size_t o = 0; o < dk; ++o) {
        for (std::size_t q = 0; q < de; ++q) {
          got[o] = got[o] + a.unit[q] * a.mu[k][e].at(o, p * de + q);
        }
      }
      for (std::size_t o = 0; o < dk; ++o) {
        if (got[o] != ((o == p) ? Cyclotomic::one() : Cyclotomic::zero())) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_associativity(const AlgebraStructure& a) {
  const FiniteTwoGroup& tg = a.object.group();
  const int n = tg.pi1().order();
  for (int h = 0; h < n; ++h) {
    const std::size_t dh = a.object.dim(h);
    for (int k = 0; k < n; ++k) {
      const std::size_t dk = a.object.dim(k);
      const int hk = tg.mul(h, k);
      for (int l = 0; l < n; ++l) {
        const std::size_t dl = a.object.dim(l);
        if (dh * dk * dl == 0) continue;
        const int kl = tg.mul(k, l);
        const int hkl = tg.mul(hk, l);
        const std::size_t cols = dh * dk * dl;
        Matrix lhs(a.object.dim(hkl), cols);
        Matrix rhs(a.object.dim(hkl), cols);
        for (std::size_t p = 0; p < dh; ++p) {
          for (std::size_t q = 0; q < dk; ++q) {
            for (std::size_t r = 0; r < dl; ++r) {
              const std::size_t col = (p * dk + q) * dl + r;
              // mu(mu(p,q), r).
              for (std::size_t o1 = 0; o1 < a.mu[h][k].rows(); ++o1) {
                Cyclotomic c1 = a.mu[h][k].at(o1, p * dk + q);
                if (c1.is_zero()) continue;
                for (std::size_t o = 0; o < lhs.rows(); ++o) {
                  lhs.at(o, col) =
                      lhs.at(o, col) +
                      c1 * a.mu[hk][l].at(o, o1 * dl + r);
                }
              }
              // rho_p(alpha) * mu(p, mu(q,r)).
              Cyclotomic factor =
                  a.object.line_value(h, static_cast<int>(p),
                                      tg.alpha(h, k, l));
              for (std::size_t o2 = 0; o2 < a.mu[k][l].rows(); ++o2) {
                Cyclotomic c2 = a.mu[k][l].at(o2, q * dl + r);
                if (c2.is_zero()) continue;
                const std::size_t dkl = a.object.dim(kl);
                for (std::size_t o = 0; o < rhs.rows(); ++o) {
                  rhs.at(o, col) =
                      rhs.at(o, col) +
                      factor * c2 * a.mu[h][kl].at(o, p * dkl + o2);
                }
              }
            }
          }
        }
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool check_commutativity(const AlgebraStructure& a) {
  const FiniteTwoGroup& tg = a.object.group();
  DayBasis basis = center_pair_basis(a.object, a.object);
  for (int g = 0; g < tg.pi1().order(); ++g) {
    if (basis.triples[g].empty()) continue;
    Matrix mu = coend_multiplication(a, basis, g);
    Matrix braided = mu * center_braiding(a.object, a.object, g);
    if (braided != mu) return false;
  }
  return true;
}

bool check_separability(const AlgebraStructure& a) {
  const FiniteTwoGroup& tg = a.object.group();
  const int n = tg.pi1().order();
  auto dim = [&](int g) { return static_cast<std::size_t>(a.object.dim(g)); };

  // Unknowns: for each grade g one block delta_g of shape
  // (sum_{uv=g} dim u * dim v) x dim g, flattened grade-major.
  std::vector<std::vector<std::size_t>> pair_offset(n,
                                                    std::vector<std::size_t>(n));
  std::vector<std::size_t> pair_total(n, 0);
  for (int g = 0; g < n; ++g) {
    for (int u = 0; u < n; ++u) {
      int v = tg.mul(tg.inv(u), g);
      pair_offset[g][u] = pair_total[g];
      pair_total[g] += dim(u) * dim(v);
    }
  }
  std::vector<std::size_t> block_offset(n, 0);
  std::size_t unknowns = 0;
  for (int g = 0; g < n; ++g) {
    block_offset[g] = unknowns;
    unknowns += pair_total[g] * dim(g);
  }
  if (unknowns == 0) return true;
  auto var = [&](int g, std::size_t pair_index, std::size_t col) {
    return block_offset[g] + pair_index * dim(g) + col;
  };

  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<Cyclotomic> rhs;
  auto new_row = [&]() -> std::vector<Cyclotomic>& {
    rows.emplace_back(unknowns, Cyclotomic::zero());
    rhs.push_back(Cyclotomic::zero());
    return rows.back();
  };

  // (1) mu . delta = id on every grade.
  for (int g = 0; g < n; ++g) {
    for (std::size_t j = 0; j < dim(g); ++j) {
      for (std::size_t o = 0; o < dim(g); ++o) {
        auto& row = new_row();
        for (int u = 0; u < n; ++u) {
          int v = tg.mul(tg.inv(u), g);
          const Matrix& m = a.mu[u][v];
          for (std::size_t p = 0; p < dim(u); ++p) {
            for (std::size_t q = 0; q < dim(v); ++q) {
              Cyclotomic c = m.at(o, p * dim(v) + q);
              if (c.is_zero()) continue;
              std::size_t idx = pair_offset[g][u] + p * dim(v) + q;
              row[var(g, idx, j)] = row[var(g, idx, j)] + c;
            }
          }
        }
        rhs.back() = (o == j) ? Cyclotomic::one() : Cyclotomic::zero();
      }
    }
  }

  // (2) delta . mu = (mu ox id) . a^{-1} . (id ox delta)  (left module law).
  // (3) delta . mu = (id ox mu) . a . (delta ox id)       (right module law).
  for (int h = 0; h < n; ++h) {
    for (int k = 0; k < n; ++k) {
      if (dim(h) * dim(k) == 0) continue;
      const int hk = tg.mul(h, k);
      for (std::size_t p0 = 0; p0 < dim(h); ++p0) {
        for (std::size_t q0 = 0; q0 < dim(k); ++q0) {
          for (int bigu = 0; bigu < n; ++bigu) {
            int bigv = tg.mul(tg.inv(bigu), hk);
            if (dim(bigu) * dim(bigv) == 0) continue;
            for (std::size_t ru = 0; ru < dim(bigu); ++ru) {
              for (std::size_t rv = 0; rv < dim(bigv); ++rv) {
                const std::size_t slot =
                    pair_offset[hk][bigu] + ru * dim(bigv) + rv;
                // Left law row.
                {
                  auto& row = new_row();
                  for (std::size_t o = 0; o < dim(hk); ++o) {
                    Cyclotomic c = a.mu[h][k].at(o, p0 * dim(k) + q0);
                    if (c.is_zero()) continue;
                    row[var(hk, slot, o)] = row[var(hk, slot, o)] + c;
                  }
                  int u = tg.mul(tg.inv(h), bigu);
                  int v = bigv;
                  Cyclotomic factor =
                      a.object
                          .line_value(h, static_cast<int>(p0),
                                      tg.alpha(h, u, v))
                          .inverse();
                  for (std::size_t s = 0; s < dim(u); ++s) {
                    Cyclotomic c =
                        a.mu[h][u].at(ru, p0 * dim(u) + s);
                    if (c.is_zero()) continue;
                    std::size_t idx = pair_offset[k][u] + s * dim(v) + rv;
                    row[var(k, idx, q0)] =
                        row[var(k, idx, q0)] - factor * c;
                  }
                }
                // Right law row.
                {
                  auto& row = new_row();
                  for (std::size_t o = 0; o < dim(hk); ++o) {
                    Cyclotomic c = a.mu[h][k].at(o, p0 * dim(k) + q0);
                    if (c.is_zero()) continue;
                    row[var(hk, slot, o)] = row[var(hk, slot, o)] + c;
                  }
                  int u = bigu;
                  int v = tg.mul(tg.inv(u), h);
                  Cyclotomic factor = a.object.line_value(
                      u, static_cast<int>(ru), tg.alpha(u, v, k));
                  for (std::size_t t = 0; t < dim(v); ++t) {
                    Cyclotomic c =
                        a.mu[v][k].at(rv, t * dim(k) + q0);
                    if (c.is_zero()) continue;
                    std::size_t idx = pair_offset[h][u] + ru * dim(v) + t;
                    row[var(h, idx, p0)] =
                        row[var(h, idx, p0)] - factor * c;
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  Matrix system(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) system.at(r, c) = rows[r][c];
  }
  return solve(system, rhs).has_value();
}

}  // namespace

LagrangianReport check_lagrangian(const AlgebraStructure& a) {
  LagrangianReport report;
  report.unit_ok = check_unit_laws(a);
  report.associative_ok = check_associativity(a);
  report.commutative_ok = check_commutativity(a);
  report.unit_dimension = unit_hom_dim(a.object);
  report.connected_ok = (report.unit_dimension == 1);
  report.separable_ok = check_separability(a);
  return report;
}

}  // namespace twochar
