/**
 * @file textio.cpp
 * @brief Implementation of the ASCII table renderers.
 */
#include "textio.hpp"

#include <sstream>

namespace twochar {

namespace {

std::size_t utf8_length(const std::string& s) {
  std::size_t length = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++length;
  }
  return length;
}

void append_padded(std::string& out, const std::string& cell,
                   std::size_t width, bool last) {
  out += cell;
  if (!last) {
    for (std::size_t i = utf8_length(cell); i < width + 2; ++i) out += ' ';
  }
}

}  // namespace

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::size_t columns = header.size();
  for (const auto& row : rows) columns = std::max(columns, row.size());
  std::vector<std::size_t> widths(columns, 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], utf8_length(row[i]));
    }
  };
  measure(header);
  for (const auto& row : rows) measure(row);

  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      append_padded(out, row[i], widths[i], i + 1 == row.size());
    }
    out += '\n';
  };
  if (!header.empty()) emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

std::string eigencharacter_string(const FiniteTwoGroup& tg,
                                  const DualCharacter& chi) {
  const AbelianGroup& pi2 = tg.pi2();
  if (pi2.order() == 1) return "1";
  std::vector<std::string> parts;
  for (std::size_t f = 0; f < pi2.factors().size(); ++f) {
    std::vector<int> tuple(pi2.factors().size(), 0);
    if (pi2.factors()[f] > 1) tuple[f] = 1;
    parts.push_back(chi.value(pi2.index_of(tuple)).to_string());
  }
  if (parts.size() == 1) return parts[0];
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += parts[i];
  }
  return out + ")";
}

std::string describe_text(const FiniteTwoGroup& tg) {
  std::ostringstream out;
  out << "2-group: " << tg.name() << "\n";
  out << "pi1 order: " << tg.pi1().order() << "\n";
  out << "pi2 factors:";
  if (tg.pi2().factors().empty()) out << " (trivial)";
  for (int f : tg.pi2().factors()) out << " " << f;
  out << "\n";
  out << "pi2 order: " << tg.pi2().order() << "\n";
  out << "scalar order: " << tg.scalar_order() << "\n";
  out << "associator representative trivial: "
      << (tg.alpha_is_zero() ? "yes" : "no") << "\n";
  out << "duality data (per object g: ev, coev):\n";
  for (int g = 0; g < tg.pi1().order(); ++g) {
    out << "  g=" << g << ": ev=" << tg.ev(g) << ", coev=" << tg.coev(g)
        << "\n";
  }
  return out.str();
}

std::string irreps_text(const FiniteTwoGroup& tg,
                        const std::vector<MonomialTwoRep>& irreps) {
  std::vector<std::vector<std::string>> rows;
  for (const MonomialTwoRep& rep : irreps) {
    std::string dims;
    ClassFunctor f = two_character(rep);
    for (int g = 0; g < tg.pi1().order(); ++g) {
      if (g > 0) dims += ",";
      dims += std::to_string(f.dim(g));
    }
    rows.push_back({rep.name(), std::to_string(rep.dimension()),
                    "(" + dims + ")"});
  }
  return render_table({"irrep", "lines", "character dims"}, rows);
}

std::string chartable_text(const FiniteTwoGroup& tg,
                           const std::vector<MonomialTwoRep>& irreps) {
  std::vector<ConjugacyClass> classes = conjugacy_classes(tg.pi1());
  std::vector<std::string> header{"irrep"};
  for (const ConjugacyClass& c : classes) {
    header.push_back("g=" + std::to_string(c.representative));
  }
  std::vector<std::vector<std::string>> rows;
  for (const MonomialTwoRep& rep : irreps) {
    ClassFunctor f = two_character(rep);
    std::vector<std::string> row{rep.name()};
    for (const ConjugacyClass& c : classes) {
      const int g = c.representative;
      std::string cell = std::to_string(f.dim(g)) + ":{";
      for (int i = 0; i < f.dim(g); ++i) {
        if (i > 0) cell += ",";
        cell += eigencharacter_string(tg, f.dual(f.line_char(g, i)));
      }
      row.push_back(cell + "}");
    }
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string jointtable_text(const FiniteTwoGroup& tg,
                            const std::vector<MonomialTwoRep>& irreps) {
  std::vector<JointInput> inputs = canonical_joint_inputs(tg);
  std::vector<std::string> header{"(g,h,a)"};
  for (const MonomialTwoRep& rep : irreps) header.push_back(rep.name());
  std::vector<std::vector<std::string>> rows;
  for (const JointInput& in : inputs) {
    std::vector<std::string> row{"(" + std::to_string(in.g) + "," +
                                 std::to_string(in.h) + "," +
                                 std::to_string(in.a) + ")"};
    for (const MonomialTwoRep& rep : irreps) {
      row.push_back(joint_character(rep, in).to_string());
    }
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string fusion_text(
    const std::vector<std::string>& names,
    const std::vector<std::vector<std::vector<int>>>& table) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      std::string sum;
      for (std::size_t k = 0; k < names.size(); ++k) {
        const int m = table[i][j][k];
        if (m == 0) continue;
        if (!sum.empty()) sum += " + ";
        if (m == 1) {
          sum += names[k];
        } else {
          sum += std::to_string(m) + "\xC2\xB7" + names[k];
        }
      }
      if (sum.empty()) sum = "0";
      out += names[i] + " \xE2\x8A\xA0 " + names[j] + " = " + sum + "\n";
    }
  }
  return out;
}

std::string inner_text(const std::vector<std::string>& names,
                       const std::vector<std::vector<std::size_t>>& matrix) {
  std::vector<std::string> header{""};
  for (const std::string& n : names) header.push_back(n);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::vector<std::string> row{names[i]};
    for (std::size_t j = 0; j < names.size(); ++j) {
      row.push_back(std::to_string(matrix[i][j]));
    }
    rows.push_back(std::move(row));
  }
  return render_table(header, rows);
}

std::string center_text(const AlgebraStructure& algebra,
                        const LagrangianReport& report) {
  const FiniteTwoGroup& tg = algebra.object.group();
  std::ostringstream out;
  out << "center object: " << algebra.object.name() << "\n";
  for (int g = 0; g < tg.pi1().order(); ++g) {
    out << "  grade " << g << ": dim " << algebra.object.dim(g);
    if (algebra.object.dim(g) > 0) {
      out << ", characters {";
      for (int i = 0; i < algebra.object.dim(g); ++i) {
        if (i > 0) out << ",";
        out << eigencharacter_string(
            tg, algebra.object.dual(algebra.object.line_char(g, i)));
      }
      out << "}";
    }
    out << "\n";
  }
  out << "unit vector length (grade-e dimension): " << algebra.unit.size()
      << "\n";
  auto flag = [&](const char* label, bool ok) {
    out << label << ": " << (ok ? "ok" : "FAIL") << "\n";
  };
  flag("unit laws", report.unit_ok);
  flag("associativity", report.associative_ok);
  flag("commutativity", report.commutative_ok);
  out << "connectedness: "
      << (report.connected_ok ? "ok" : "FAIL")
      << " (unit-isotypic dimension " << report.unit_dimension << ")\n";
  flag("separability", report.separable_ok);
  out << "lagrangian: " << (report.all() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace twochar
