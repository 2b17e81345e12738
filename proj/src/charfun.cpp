/**
 * @file charfun.cpp
 * @brief Implementation of 2-characters, Day convolution, inner products,
 *        joint 2-characters and fusion-rule extraction.
 */
#include "charfun.hpp"

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

/// diag(rho_i(a)) over the lines of one object.
Matrix char_diagonal(const std::vector<DualCharacter>& duals,
                     const std::vector<int>& lines, int a) {
  Matrix m(lines.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    m.at(i, i) = duals[lines[i]].value(a);
  }
  return m;
}

/// The monomial scalar of psi(k, g) on a line i fixed by sigma_g: the ratio
/// of composition scalars around the conjugation window, with the
/// coevaluation 2-cell acting through the 2-cell characters.
Cyclotomic conjugation_scalar(const MonomialTwoRep& rep, int k, int g, int i) {
  const FiniteTwoGroup& tg = rep.group();
  int si = rep.sigma(k, i);
  Cyclotomic value = rep.cochain(k, g, i);
  value = value * rep.cochain(tg.mul(k, g), tg.inv(k), si);
  value = value * rep.tau(tg.e(), tg.coev(k), si);
  value = value * rep.cochain(k, tg.inv(k), si).inverse();
  return value;
}

}  // namespace

ValidationReport check_class_functor(
    const FiniteTwoGroup& group, const std::vector<std::vector<int>>& lines,
    const std::vector<std::vector<Matrix>>& psi) {
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
  if (static_cast<int>(psi.size()) != n) {
    report.fail("psi table has " + std::to_string(psi.size()) +
                " rows, expected " + std::to_string(n));
    return report;
  }
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(psi[k].size()) != n) {
      report.fail("psi row " + std::to_string(k) + " has " +
                  std::to_string(psi[k].size()) + " entries, expected " +
                  std::to_string(n));
      return report;
    }
    for (int g = 0; g < n; ++g) {
      int target = group.conjugate_object(k, g);
      if (psi[k][g].rows() != lines[target].size() ||
          psi[k][g].cols() != lines[g].size()) {
        report.fail("psi" + pair_str(k, g) + " has shape " +
                    std::to_string(psi[k][g].rows()) + "x" +
                    std::to_string(psi[k][g].cols()) + ", expected " +
                    std::to_string(lines[target].size()) + "x" +
                    std::to_string(lines[g].size()));
        return report;
      }
    }
  }

  for (int g = 0; g < n; ++g) {
    if (!psi[group.e()][g].is_identity()) {
      report.fail("psi(e," + std::to_string(g) + ") is not the identity");
    }
  }

  for (int k = 0; k < n; ++k) {
    for (int g = 0; g < n; ++g) {
      if (psi[k][g].cols() > 0 && rank(psi[k][g]) != psi[k][g].cols()) {
        report.fail("psi" + pair_str(k, g) + " is not invertible");
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
        Matrix lhs = psi[k][g] * char_diagonal(duals, lines[g], a);
        Matrix rhs =
            char_diagonal(duals, lines[target], group.act(k, a)) * psi[k][g];
        if (lhs != rhs) {
          report.fail("naturality fails at (k,g,a)=" + triple_str(k, g, a));
        }
      }
    }
  }

  // Composition law with the conjugation coherence defect.
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      int kl = group.mul(k, l);
      for (int g = 0; g < n; ++g) {
        if (lines[g].empty()) continue;
        int mid = group.conjugate_object(l, g);
        int target = group.conjugate_object(kl, g);
        Matrix lhs = psi[k][mid] * psi[l][g];
        Matrix rhs = char_diagonal(duals, lines[target],
                                   group.conj_defect(k, l, g)) *
                     psi[kl][g];
        if (lhs != rhs) {
          report.fail("composition law fails at (k,l,g)=" +
                      triple_str(k, l, g));
        }
      }
    }
  }
  return report;
}

ClassFunctor::ClassFunctor(FiniteTwoGroup group,
                           std::vector<std::vector<int>> lines,
                           std::vector<std::vector<Matrix>> psi,
                           std::string name)
    : group_(std::move(group)),
      lines_(std::move(lines)),
      psi_(std::move(psi)),
      duals_(dual_group(group_.pi2())),
      name_(std::move(name)) {
  check_class_functor(group_, lines_, psi_)
      .require("class functor '" + name_ + "'");
}

ValidationReport validate_class_functor(const ClassFunctor& f) {
  return check_class_functor(f.group(), f.lines(), f.psi_table());
}

ClassFunctor two_character(const MonomialTwoRep& rep) {
  const FiniteTwoGroup& tg = rep.group();
  const int n = tg.pi1().order();
  const int dim = rep.dimension();
  const std::vector<DualCharacter> duals = dual_group(tg.pi2());
  const int m2 = tg.pi2().order();

  // Fixed lines per object, with their 2-cell characters.
  std::vector<std::vector<int>> fixed(n);
  std::vector<std::vector<int>> chars(n);
  for (int g = 0; g < n; ++g) {
    for (int i = 0; i < dim; ++i) {
      if (rep.sigma(g, i) != i) continue;
      fixed[g].push_back(i);
      int match = -1;
      for (int j = 0; j < m2; ++j) {
        bool all = true;
        for (int a = 0; a < m2 && all; ++a) {
          all = duals[j].value(a) == rep.tau(g, a, i);
        }
        if (all) {
          match = j;
          break;
        }
      }
      if (match < 0) {
        throw validation_error(
            "2-character of '" + rep.name() + "': the 2-cell scalars on line " +
            std::to_string(i) + " at object " + std::to_string(g) +
            " are not a character of the 2-cell group");
      }
      chars[g].push_back(match);
    }
  }

  std::vector<std::vector<Matrix>> psi(n);
  for (int k = 0; k < n; ++k) {
    psi[k].resize(n);
    for (int g = 0; g < n; ++g) {
      int target = tg.conjugate_object(k, g);
      Matrix m(fixed[target].size(), fixed[g].size());
      for (std::size_t s = 0; s < fixed[g].size(); ++s) {
        int i = fixed[g][s];
        int j = rep.sigma(k, i);
        auto it = std::find(fixed[target].begin(), fixed[target].end(), j);
        if (it == fixed[target].end()) {
          throw validation_error(
              "2-character of '" + rep.name() +
              "': conjugation does not preserve fixed lines at " +
              pair_str(k, g));
        }
        std::size_t t = static_cast<std::size_t>(it - fixed[target].begin());
        m.at(t, s) = conjugation_scalar(rep, k, g, i);
      }
      psi[k][g] = std::move(m);
    }
  }
  return ClassFunctor(tg, chars, psi, rep.name());
}

ClassFunctor unit_class_functor(const FiniteTwoGroup& group) {
  const int n = group.pi1().order();
  const int m2 = group.pi2().order();
  std::vector<std::vector<int>> lines(n);
  for (int r = 0; r < m2; ++r) lines[group.e()].push_back(r);
  std::vector<std::vector<Matrix>> psi(n);
  for (int k = 0; k < n; ++k) {
    psi[k].resize(n);
    for (int g = 0; g < n; ++g) {
      if (g != group.e()) continue;
      Matrix m(m2, m2);
      for (int r = 0; r < m2; ++r) {
        m.at(group.action().act_character_index(k, r), r) = Cyclotomic::one();
      }
      psi[k][g] = std::move(m);
    }
  }
  return ClassFunctor(group, lines, psi, "U");
}

int DayBasis::find(int g, int k, int p, int q) const {
  const auto& list = triples[g];
  for (std::size_t s = 0; s < list.size(); ++s) {
    if (list[s][0] == k && list[s][1] == p && list[s][2] == q) {
      return static_cast<int>(s);
    }
  }
  return -1;
}

DayBasis day_basis(const ClassFunctor& f, const ClassFunctor& g) {
  if (!(f.group() == g.group())) {
    throw validation_error(
        "Day convolution requires class functors over the same 2-group");
  }
  const FiniteTwoGroup& tg = f.group();
  const int n = tg.pi1().order();
  DayBasis basis;
  basis.triples.resize(n);
  for (int obj = 0; obj < n; ++obj) {
    for (int k = 0; k < n; ++k) {
      int left = tg.mul(obj, tg.inv(k));
      for (int p = 0; p < f.dim(left); ++p) {
        // q must carry the character a |-> rho_p(left |> a).
        int wanted =
            tg.action().act_character_index(tg.inv(left), f.line_char(left, p));
        for (int q = 0; q < g.dim(k); ++q) {
          if (g.line_char(k, q) == wanted) {
            basis.triples[obj].push_back({k, p, q});
          }
        }
      }
    }
  }
  return basis;
}

ClassFunctor day_convolution(const ClassFunctor& f, const ClassFunctor& g) {
  const FiniteTwoGroup& tg = f.group();
  const int n = tg.pi1().order();
  DayBasis basis = day_basis(f, g);

  std::vector<std::vector<int>> lines(n);
  for (int obj = 0; obj < n; ++obj) {
    for (const auto& t : basis.triples[obj]) {
      lines[obj].push_back(f.line_char(tg.mul(obj, tg.inv(t[0])), t[1]));
    }
  }

  std::vector<std::vector<Matrix>> psi(n);
  for (int m = 0; m < n; ++m) {
    psi[m].resize(n);
    for (int obj = 0; obj < n; ++obj) {
      int target = tg.conjugate_object(m, obj);
      Matrix mat(basis.triples[target].size(), basis.triples[obj].size());
      for (std::size_t s = 0; s < basis.triples[obj].size(); ++s) {
        const auto& t = basis.triples[obj][s];
        int k = t[0];
        int left = tg.mul(obj, tg.inv(k));
        const Matrix& a = f.psi(m, left);
        const Matrix& b = g.psi(m, k);
        int kk = tg.conjugate_object(m, k);
        for (std::size_t pp = 0; pp < a.rows(); ++pp) {
          for (std::size_t qq = 0; qq < b.rows(); ++qq) {
            Cyclotomic coeff = a.at(pp, t[1]) * b.at(qq, t[2]);
            if (coeff.is_zero()) continue;
            int row = basis.find(target, kk, static_cast<int>(pp),
                                 static_cast<int>(qq));
            if (row < 0) {
              throw validation_error(
                  "Day convolution transport left the matched basis at " +
                  pair_str(m, obj));
            }
            mat.at(row, s) = mat.at(row, s) + coeff;
          }
        }
      }
      psi[m][obj] = std::move(mat);
    }
  }
  return ClassFunctor(tg, lines, psi,
                      "(" + f.name() + " \xE2\x8A\x9B " + g.name() + ")");
}

Matrix braiding(const ClassFunctor& f, const ClassFunctor& g, int object) {
  DayBasis fg = day_basis(f, g);
  DayBasis gf = day_basis(g, f);
  const FiniteTwoGroup& tg = f.group();
  Matrix out(gf.triples[object].size(), fg.triples[object].size());
  for (std::size_t s = 0; s < fg.triples[object].size(); ++s) {
    const auto& t = fg.triples[object][s];
    int x = t[0];
    int grade = tg.mul(object, tg.inv(x));
    const Matrix& b = g.psi(object, x);
    for (std::size_t qq = 0; qq < b.rows(); ++qq) {
      Cyclotomic coeff = b.at(qq, t[2]);
      if (coeff.is_zero()) continue;
      int row = gf.find(object, grade, static_cast<int>(qq), t[1]);
      if (row < 0) {
        throw validation_error("braiding left the matched basis at object " +
                               std::to_string(object));
      }
      out.at(row, s) = coeff;
    }
  }
  return out;
}

InnerProductResult inner_product(const ClassFunctor& f,
                                 const ClassFunctor& g) {
  const FiniteTwoGroup& tg = f.group();
  ClassFunctor day = day_convolution(f, g);
  const int n = tg.pi1().order();
  const int e = tg.e();
  const std::size_t d = day.lines()[e].size();

  std::vector<Matrix> blocks;
  Matrix id = Matrix::identity(d);
  for (int m = 0; m < n; ++m) {
    Matrix diag(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      diag.at(i, i) = day.line_value(e, static_cast<int>(i),
                                     tg.neg2(tg.coev(m)));
    }
    blocks.push_back(diag * day.psi(m, e) - id);
  }
  std::vector<std::vector<Cyclotomic>> basis =
      kernel_basis(Matrix::vstack(blocks));
  return {basis.size(), basis};
}

bool joint_input_valid(const FiniteTwoGroup& group, const JointInput& input) {
  const int n = group.pi1().order();
  const int m2 = group.pi2().order();
  if (input.g < 0 || input.g >= n || input.h < 0 || input.h >= n) return false;
  if (input.a < 0 || input.a >= m2) return false;
  return group.mul(input.g, input.h) == group.mul(input.h, input.g);
}

std::vector<JointInput> canonical_joint_inputs(const FiniteTwoGroup& group) {
  std::vector<JointInput> out;
  const int n = group.pi1().order();
  const int m2 = group.pi2().order();
  for (const auto& cls : conjugacy_classes(group.pi1())) {
    int g = cls.representative;
    for (int h = 0; h < n; ++h) {
      if (group.mul(g, h) != group.mul(h, g)) continue;
      for (int a = 0; a < m2; ++a) out.push_back({g, h, a});
    }
  }
  return out;
}

Cyclotomic joint_character(const MonomialTwoRep& rep, const JointInput& input) {
  const FiniteTwoGroup& tg = rep.group();
  if (!joint_input_valid(tg, input)) {
    throw validation_error("joint 2-character input " +
                           triple_str(input.g, input.h, input.a) +
                           " is invalid: the objects must commute");
  }
  const int g = input.g;
  const int h = input.h;
  const int shifted = tg.add2(input.a, tg.cancel_right_dual(g, h));
  Cyclotomic total = Cyclotomic::zero();
  for (int i = 0; i < rep.dimension(); ++i) {
    if (rep.sigma(g, i) != i || rep.sigma(h, i) != i) continue;
    total = total + conjugation_scalar(rep, g, h, i) * rep.tau(h, shifted, i);
  }
  return total;
}

JointInput modular_S(const FiniteTwoGroup& group, const JointInput& input) {
  const int g = input.g;
  const int h = input.h;
  const int hi = group.inv(h);
  using W = WordTree;
  W t1 = W::node(W::node(W::leaf(hi), W::leaf(g)),
                 W::node(W::leaf(h), W::leaf(hi)));
  W t2 = W::node(W::leaf(hi),
                 W::node(W::node(W::leaf(g), W::leaf(h)), W::leaf(hi)));
  W t2p = W::node(W::leaf(hi),
                  W::node(W::node(W::leaf(h), W::leaf(g)), W::leaf(hi)));
  W t3 = W::node(W::node(W::leaf(hi), W::leaf(h)),
                 W::node(W::leaf(g), W::leaf(hi)));
  int value = group.act(group.mul(hi, g), group.coev(h));
  value = group.add2(value, group.reassociation(t1, t2));
  value = group.add2(value, group.act(hi, input.a));
  value = group.add2(value, group.reassociation(t2p, t3));
  value = group.add2(value, group.ev(h));
  return {hi, g, value};
}

JointInput modular_T(const FiniteTwoGroup& group, const JointInput& input) {
  const int g = input.g;
  const int h = input.h;
  int value = group.add2(group.act(g, input.a),
                         group.neg2(group.alpha(g, h, g)));
  return {g, group.mul(g, h), value};
}

namespace {

/// The coherence value of the canonical (k g k^{-1})(k h k^{-1}) -> k(gh)k^{-1}
/// comparison: collapse the inner k^{-1} k pair with an evaluation, then
/// reassociate.
int conjugation_mix(const FiniteTwoGroup& group, int k, int g, int h) {
  const int ki = group.inv(k);
  using W = WordTree;
  W s = W::node(W::node(W::node(W::leaf(k), W::leaf(g)), W::leaf(ki)),
                W::node(W::node(W::leaf(k), W::leaf(h)), W::leaf(ki)));
  W t = W::node(W::node(W::node(W::leaf(k), W::leaf(g)),
                        W::node(W::leaf(ki), W::leaf(k))),
                W::node(W::leaf(h), W::leaf(ki)));
  W u = W::node(W::node(W::node(W::leaf(k), W::leaf(g)), W::leaf(group.e())),
                W::node(W::leaf(h), W::leaf(ki)));
  W fin = W::node(W::node(W::leaf(k), W::node(W::leaf(g), W::leaf(h))),
                  W::leaf(ki));
  int value = group.reassociation(s, t);
  value = group.add2(value, group.act(group.mul(k, g), group.ev(k)));
  value = group.add2(value, group.reassociation(u, fin));
  return value;
}

}  // namespace

JointInput conjugate_joint(const FiniteTwoGroup& group, int k,
                           const JointInput& input) {
  int value = conjugation_mix(group, k, input.g, input.h);
  value = group.add2(value, group.act(k, input.a));
  value = group.add2(value,
                     group.neg2(conjugation_mix(group, k, input.h, input.g)));
  return {group.conjugate_object(k, input.g),
          group.conjugate_object(k, input.h), value};
}

JointInput left_dual_joint(const FiniteTwoGroup& group,
                           const JointInput& input) {
  int value = group.neg2(group.dual_factor(input.h, input.g));
  value = group.add2(
      value, group.act(group.inv(group.mul(input.g, input.h)), input.a));
  value = group.add2(value, group.dual_factor(input.g, input.h));
  return {group.inv(input.g), group.inv(input.h), value};
}

std::vector<Cyclotomic> fingerprint(const ClassFunctor& f) {
  const FiniteTwoGroup& tg = f.group();
  const int m2 = tg.pi2().order();
  std::vector<Cyclotomic> out;
  for (const auto& cls : conjugacy_classes(tg.pi1())) {
    std::vector<long> counts(m2, 0);
    for (int i = 0; i < f.dim(cls.representative); ++i) {
      counts[f.line_char(cls.representative, i)] += 1;
    }
    for (int r = 0; r < m2; ++r) {
      out.push_back(Cyclotomic(Rational(counts[r])));
    }
  }
  return out;
}

std::vector<Cyclotomic> extended_fingerprint(const MonomialTwoRep& rep) {
  std::vector<Cyclotomic> out = fingerprint(two_character(rep));
  for (const JointInput& input : canonical_joint_inputs(rep.group())) {
    out.push_back(joint_character(rep, input));
  }
  return out;
}

namespace {

std::vector<int> solve_multiplicities(
    const std::vector<std::vector<Cyclotomic>>& columns,
    const std::vector<Cyclotomic>& target, const std::string& what,
    const std::string& degenerate_message) {
  const std::size_t rows = target.size();
  const std::size_t cols = columns.size();
  Matrix a(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    if (columns[j].size() != rows) {
      throw validation_error("decomposition basis entry " + std::to_string(j) +
                             " lives over a different 2-group");
    }
    for (std::size_t i = 0; i < rows; ++i) a.at(i, j) = columns[j][i];
  }
  if (rank(a) != cols) {
    throw validation_error("decomposition basis is degenerate: the " + what +
                           " of the basis are linearly dependent, so "
                           "multiplicities are not determined; " +
                           degenerate_message);
  }
  std::optional<std::vector<Cyclotomic>> solution = solve(a, target);
  if (!solution) {
    throw validation_error(
        "decomposition failed: the class functor is not in the span of the "
        "basis " + what);
  }
  std::vector<int> out;
  for (std::size_t j = 0; j < cols; ++j) {
    const Cyclotomic& value = (*solution)[j];
    if (!value.is_rational()) {
      throw validation_error(
          "decomposition failed: multiplicity " + std::to_string(j) +
          " is not rational (" + value.to_string() + ")");
    }
    Rational r = value.rational_value();
    if (boost::multiprecision::denominator(r) != 1 || r < 0) {
      throw validation_error("decomposition failed: multiplicity " +
                             std::to_string(j) + " = " + rational_to_string(r) +
                             " is not a nonnegative integer");
    }
    out.push_back(
        static_cast<int>(boost::multiprecision::numerator(r).convert_to<long long>()));
  }
  return out;
}

}  // namespace

std::vector<int> decompose(const ClassFunctor& f,
                           const std::vector<ClassFunctor>& basis) {
  std::vector<std::vector<Cyclotomic>> columns;
  for (const ClassFunctor& b : basis) {
    if (!(b.group() == f.group())) {
      throw validation_error(
          "decomposition basis lives over a different 2-group");
    }
    columns.push_back(fingerprint(b));
  }
  return solve_multiplicities(
      columns, fingerprint(f), "fingerprints",
      "extended fingerprints with joint 2-character values can separate "
      "class functors that plain fingerprints cannot");
}

std::vector<int> decompose(const MonomialTwoRep& rep,
                           const std::vector<MonomialTwoRep>& basis) {
  std::vector<std::vector<Cyclotomic>> columns;
  for (const MonomialTwoRep& b : basis) {
    if (!(b.group() == rep.group())) {
      throw validation_error(
          "decomposition basis lives over a different 2-group");
    }
    columns.push_back(fingerprint(two_character(b)));
  }
  {
    Matrix a(columns.empty() ? 0 : columns[0].size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (std::size_t i = 0; i < columns[j].size(); ++i) {
        a.at(i, j) = columns[j][i];
      }
    }
    if (rank(a) == columns.size()) {
      return solve_multiplicities(columns, fingerprint(two_character(rep)),
                                  "fingerprints", "");
    }
  }
  // Ambiguous basic fingerprints: separate with joint 2-character values.
  std::vector<std::vector<Cyclotomic>> extended;
  for (const MonomialTwoRep& b : basis) {
    extended.push_back(extended_fingerprint(b));
  }
  return solve_multiplicities(
      extended, extended_fingerprint(rep), "extended fingerprints",
      "even joint 2-character values do not separate these representations, "
      "so this basis does not admit unique multiplicities");
}

std::vector<std::vector<std::vector<int>>> fusion_table(
    const FiniteTwoGroup& group) {
  std::vector<MonomialTwoRep> irreps = builtin_irreps(group);
  std::vector<std::vector<std::vector<int>>> table(
      irreps.size(), std::vector<std::vector<int>>(irreps.size()));
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    for (std::size_t j = 0; j < irreps.size(); ++j) {
      table[i][j] = decompose(deligne_tensor(irreps[i], irreps[j]), irreps);
    }
  }
  return table;
}

}  // namespace twochar
