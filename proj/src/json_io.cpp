/**
 * @file json_io.cpp
 * @brief Implementation of the JSON serialization layer.
 */
#include "json_io.hpp"

#include <utility>

namespace twochar {

namespace {

[[noreturn]] void fail_field(const std::string& field,
                             const std::string& what) {
  throw parse_error("field '" + field + "': " + what);
}

const ordered_json& require_key(const ordered_json& j, const std::string& key,
                                const std::string& context) {
  if (!j.is_object()) fail_field(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail_field(context, "missing key '" + key + "'");
  return *it;
}

int int_from_json(const ordered_json& j, const std::string& field) {
  if (!j.is_number_integer()) fail_field(field, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list_from_json(const ordered_json& j,
                                    const std::string& field) {
  if (!j.is_array()) fail_field(field, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(int_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<int>> int_table_from_json(const ordered_json& j,
                                                  const std::string& field) {
  if (!j.is_array()) fail_field(field, "expected an array of rows");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(
        int_list_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Rational rational_from_json(const ordered_json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return rational_from_string(j.get<std::string>());
    } catch (const std::exception& e) {
      fail_field(field, e.what());
    }
  }
  fail_field(field, "expected a rational as integer or \"p/q\" string");
}

}  // namespace

ordered_json rational_to_json(const Rational& value) {
  return ordered_json(rational_to_string(value));
}

ordered_json scalar_to_json(const Cyclotomic& value) {
  const Cyclotomic reduced = value.reduced_order();
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : reduced.coefficients()) {
    coeffs.push_back(rational_to_json(c));
  }
  return ordered_json{{"order", reduced.order()}, {"coeffs", coeffs}};
}

Cyclotomic scalar_from_json(const ordered_json& j, const std::string& field) {
  if (j.is_number_integer() || j.is_string()) {
    return Cyclotomic(rational_from_json(j, field));
  }
  if (!j.is_object()) {
    fail_field(field, "expected a scalar (integer, \"p/q\", or order/coeffs)");
  }
  const long order =
      int_from_json(require_key(j, "order", field), field + ".order");
  const ordered_json& coeffs = require_key(j, "coeffs", field);
  if (!coeffs.is_array()) fail_field(field + ".coeffs", "expected an array");
  std::vector<Rational> values;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    values.push_back(rational_from_json(
        coeffs[i], field + ".coeffs[" + std::to_string(i) + "]"));
  }
  try {
    return Cyclotomic(order, std::move(values));
  } catch (const std::exception& e) {
    fail_field(field, e.what());
  }
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(scalar_to_json(m.at(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return ordered_json{{"rows", m.rows()}, {"cols", m.cols()},
                      {"entries", rows}};
}

Matrix matrix_from_json(const ordered_json& j, const std::string& field) {
  const int rows = int_from_json(require_key(j, "rows", field), field + ".rows");
  const int cols = int_from_json(require_key(j, "cols", field), field + ".cols");
  if (rows < 0 || cols < 0) fail_field(field, "negative matrix shape");
  const ordered_json& entries = require_key(j, "entries", field);
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows)) {
    fail_field(field + ".entries", "expected " + std::to_string(rows) +
                                       " rows");
  }
  Matrix out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const ordered_json& row = entries[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
      fail_field(field + ".entries[" + std::to_string(r) + "]",
                 "expected " + std::to_string(cols) + " columns");
    }
    for (int c = 0; c < cols; ++c) {
      out.at(r, c) = scalar_from_json(
          row[c], field + ".entries[" + std::to_string(r) + "][" +
                      std::to_string(c) + "]");
    }
  }
  return out;
}

ordered_json group_to_json(const FiniteGroup& group) {
  ordered_json mul = ordered_json::array();
  for (const auto& row : group.table()) mul.push_back(row);
  return ordered_json{{"kind", "table"}, {"mul", mul}};
}

FiniteGroup group_from_json(const ordered_json& j, const std::string& field) {
  const ordered_json& kind_json = require_key(j, "kind", field);
  if (!kind_json.is_string()) fail_field(field + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "cyclic") {
    const int n = int_from_json(require_key(j, "n", field), field + ".n");
    if (n <= 0) fail_field(field + ".n", "expected a positive order");
    return cyclic_group(n);
  }
  if (kind == "product") {
    const ordered_json& factors = require_key(j, "factors", field);
    if (!factors.is_array() || factors.empty()) {
      fail_field(field + ".factors", "expected a nonempty array");
    }
    FiniteGroup out = group_from_json(factors[0], field + ".factors[0]");
    for (std::size_t i = 1; i < factors.size(); ++i) {
      out = product_group(
          out, group_from_json(factors[i],
                               field + ".factors[" + std::to_string(i) + "]"));
    }
    return out;
  }
  if (kind == "table") {
    return FiniteGroup(
        int_table_from_json(require_key(j, "mul", field), field + ".mul"));
  }
  fail_field(field + ".kind", "unknown group kind '" + kind + "'");
}

ordered_json two_group_to_json(const FiniteTwoGroup& tg) {
  ordered_json j;
  j["pi1"] = group_to_json(tg.pi1());
  j["pi2"] = ordered_json{{"factors", tg.pi2().factors()}};
  ordered_json action = ordered_json::array();
  for (const auto& row : tg.action().table()) action.push_back(row);
  j["action"] = action;
  if (!tg.alpha_is_zero()) {
    ordered_json entries = ordered_json::array();
    const int n = tg.pi1().order();
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) {
        for (int k = 0; k < n; ++k) {
          if (tg.alpha(g, h, k) != tg.zero2()) {
            entries.push_back(
                ordered_json::array({g, h, k, tg.alpha(g, h, k)}));
          }
        }
      }
    }
    j["alpha"] = ordered_json{{"entries", entries}};
  }
  j["scalar_order"] = tg.scalar_order();
  j["name"] = tg.name();
  return j;
}

FiniteTwoGroup two_group_from_json(const ordered_json& j) {
  if (!j.is_object()) throw parse_error("2-group document must be an object");
  FiniteGroup pi1 = group_from_json(require_key(j, "pi1", "pi1"), "pi1");
  const ordered_json& pi2_json = require_key(j, "pi2", "pi2");
  AbelianGroup pi2(
      int_list_from_json(require_key(pi2_json, "factors", "pi2"),
                         "pi2.factors"));
  std::vector<std::vector<int>> action =
      int_table_from_json(require_key(j, "action", "action"), "action");

  std::vector<std::vector<std::vector<int>>> alpha(
      pi1.order(),
      std::vector<std::vector<int>>(pi1.order(),
                                    std::vector<int>(pi1.order(), 0)));
  if (j.contains("alpha")) {
    const ordered_json& entries =
        require_key(j["alpha"], "entries", "alpha");
    if (!entries.is_array()) fail_field("alpha.entries", "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string field = "alpha.entries[" + std::to_string(i) + "]";
      std::vector<int> entry = int_list_from_json(entries[i], field);
      if (entry.size() != 4) fail_field(field, "expected [g,h,k,a]");
      if (entry[0] < 0 || entry[0] >= pi1.order() || entry[1] < 0 ||
          entry[1] >= pi1.order() || entry[2] < 0 ||
          entry[2] >= pi1.order() || entry[3] < 0 ||
          entry[3] >= pi2.order()) {
        fail_field(field, "index out of range");
      }
      alpha[entry[0]][entry[1]][entry[2]] = entry[3];
    }
  }
  const int scalar_order = int_from_json(
      require_key(j, "scalar_order", "scalar_order"), "scalar_order");
  std::string name = "custom";
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail_field("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  return build_two_group(pi1, pi2, action, alpha, scalar_order, name);
}

FiniteTwoGroup two_group_from_string(const std::string& text) {
  return two_group_from_json(parse_json(text));
}

ordered_json rep_to_json(const MonomialTwoRep& rep) {
  const FiniteTwoGroup& tg = rep.group();
  const int n = tg.pi1().order();
  const int m2 = tg.pi2().order();
  ordered_json j;
  j["n"] = rep.dimension();
  ordered_json perm;
  for (int g = 0; g < n; ++g) {
    perm[std::to_string(g)] = rep.sigma_table()[g];
  }
  j["perm"] = std::move(perm);
  ordered_json c = ordered_json::array();
  ordered_json tau = ordered_json::array();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      for (int i = 0; i < rep.dimension(); ++i) {
        if (!rep.cochain(g, h, i).is_one()) {
          c.push_back(ordered_json::array(
              {g, h, i, scalar_to_json(rep.cochain(g, h, i))}));
        }
      }
    }
    for (int a = 0; a < m2; ++a) {
      for (int i = 0; i < rep.dimension(); ++i) {
        if (!rep.tau(g, a, i).is_one()) {
          tau.push_back(ordered_json::array(
              {g, a, i, scalar_to_json(rep.tau(g, a, i))}));
        }
      }
    }
  }
  j["c"] = std::move(c);
  j["tau"] = std::move(tau);
  j["name"] = rep.name();
  return j;
}

MonomialTwoRep rep_from_json(const FiniteTwoGroup& tg, const ordered_json& j) {
  if (!j.is_object()) {
    throw parse_error("representation document must be an object");
  }
  const int n = int_from_json(require_key(j, "n", "n"), "n");
  if (n < 0) fail_field("n", "expected a nonnegative dimension");
  const int order1 = tg.pi1().order();
  const int m2 = tg.pi2().order();

  std::vector<std::vector<int>> sigma(order1, std::vector<int>(n));
  for (int g = 0; g < order1; ++g) {
    for (int i = 0; i < n; ++i) sigma[g][i] = i;
  }
  if (j.contains("perm")) {
    const ordered_json& perm = j["perm"];
    if (!perm.is_object()) fail_field("perm", "expected an object");
    for (auto it = perm.begin(); it != perm.end(); ++it) {
      int g = -1;
      try {
        g = std::stoi(it.key());
      } catch (const std::exception&) {
        fail_field("perm", "key '" + it.key() + "' is not an object index");
      }
      if (g < 0 || g >= order1) {
        fail_field("perm", "object index " + it.key() + " out of range");
      }
      std::vector<int> row =
          int_list_from_json(it.value(), "perm." + it.key());
      if (static_cast<int>(row.size()) != n) {
        fail_field("perm." + it.key(),
                   "expected " + std::to_string(n) + " entries");
      }
      sigma[g] = std::move(row);
    }
  }

  ScalarTable cochain(order1,
                      std::vector<std::vector<Cyclotomic>>(
                          order1, std::vector<Cyclotomic>(n, Cyclotomic::one())));
  ScalarTable tau(order1,
                  std::vector<std::vector<Cyclotomic>>(
                      m2, std::vector<Cyclotomic>(n, Cyclotomic::one())));
  auto fill = [&](const char* key, ScalarTable& table, int second_limit) {
    if (!j.contains(key)) return;
    const ordered_json& list = j[key];
    if (!list.is_array()) fail_field(key, "expected an array of entries");
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
      const std::string field =
          std::string(key) + "[" + std::to_string(idx) + "]";
      const ordered_json& entry = list[idx];
      if (!entry.is_array() || entry.size() != 4) {
        fail_field(field, "expected [g,x,i,scalar]");
      }
      const int g = int_from_json(entry[0], field + "[0]");
      const int x = int_from_json(entry[1], field + "[1]");
      const int i = int_from_json(entry[2], field + "[2]");
      if (g < 0 || g >= order1 || x < 0 || x >= second_limit || i < 0 ||
          i >= n) {
        fail_field(field, "index out of range");
      }
      table[g][x][i] = scalar_from_json(entry[3], field + "[3]");
    }
  };
  fill("c", cochain, order1);
  fill("tau", tau, m2);

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail_field("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  return MonomialTwoRep(tg, n, std::move(sigma), std::move(cochain),
                        std::move(tau), name);
}

namespace {

ordered_json graded_lines_to_json(const FiniteTwoGroup& tg,
                                  const std::vector<std::vector<int>>& lines) {
  const std::vector<DualCharacter> duals = dual_group(tg.pi2());
  ordered_json grades = ordered_json::array();
  for (int g = 0; g < tg.pi1().order(); ++g) {
    ordered_json characters = ordered_json::array();
    for (int idx : lines[g]) {
      ordered_json values = ordered_json::array();
      for (int a = 0; a < tg.pi2().order(); ++a) {
        values.push_back(scalar_to_json(duals[idx].value(a)));
      }
      characters.push_back(std::move(values));
    }
    grades.push_back(ordered_json{{"object", g},
                                  {"dim", lines[g].size()},
                                  {"characters", characters}});
  }
  return grades;
}

ordered_json matrix_table_to_json(const std::vector<std::vector<Matrix>>& t) {
  ordered_json out = ordered_json::array();
  for (const auto& row : t) {
    ordered_json jrow = ordered_json::array();
    for (const Matrix& m : row) jrow.push_back(matrix_to_json(m));
    out.push_back(std::move(jrow));
  }
  return out;
}

}  // namespace

ordered_json class_functor_to_json(const ClassFunctor& f) {
  return ordered_json{{"name", f.name()},
                      {"grades", graded_lines_to_json(f.group(), f.lines())},
                      {"psi", matrix_table_to_json(f.psi_table())}};
}

ordered_json center_object_to_json(const CenterObject& x) {
  return ordered_json{{"name", x.name()},
                      {"grades", graded_lines_to_json(x.group(), x.lines())},
                      {"u", matrix_table_to_json(x.u_table())}};
}

ordered_json algebra_to_json(const AlgebraStructure& a) {
  ordered_json unit = ordered_json::array();
  for (const Cyclotomic& c : a.unit) unit.push_back(scalar_to_json(c));
  return ordered_json{{"object", center_object_to_json(a.object)},
                      {"unit", unit},
                      {"mu", matrix_table_to_json(a.mu)}};
}

ordered_json lagrangian_to_json(const LagrangianReport& report) {
  ordered_json witnesses = ordered_json::array();
  if (!report.unit_ok) witnesses.push_back("unit laws fail");
  if (!report.associative_ok) witnesses.push_back("associativity fails");
  if (!report.commutative_ok) witnesses.push_back("commutativity fails");
  if (!report.connected_ok) {
    witnesses.push_back("not connected: unit-isotypic dimension is " +
                        std::to_string(report.unit_dimension));
  }
  if (!report.separable_ok) {
    witnesses.push_back("not separable: no bimodule splitting exists");
  }
  return ordered_json{{"unit", report.unit_ok},
                      {"associative", report.associative_ok},
                      {"commutative", report.commutative_ok},
                      {"connected", report.connected_ok},
                      {"separable", report.separable_ok},
                      {"unit_dimension", report.unit_dimension},
                      {"lagrangian", report.all()},
                      {"witnesses", witnesses}};
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace twochar
