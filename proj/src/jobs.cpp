/**
 * @file jobs.cpp
 * @brief Implementation of the batch command runner.
 */
#include "jobs.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json_io.hpp"
#include "textio.hpp"

namespace twochar {

namespace {

/// Internal signal for exit status 2 (bad invocation rather than bad math).
struct UsageError {
  std::string message;
};

FiniteTwoGroup load_group(const JobSpec& job) {
  if (!job.builtin.empty() && !job.input_path.empty()) {
    throw UsageError{"--builtin and --input are mutually exclusive"};
  }
  if (!job.builtin.empty()) return builtin_two_group(job.builtin);
  if (job.input_path.empty()) {
    throw UsageError{"one of --builtin <name> or --input <path> is required"};
  }
  std::ifstream in(job.input_path);
  if (!in) {
    throw parse_error("cannot open input file '" + job.input_path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return two_group_from_string(text.str());
}

/// Runs fn(0..count-1), optionally on a hardware-sized thread pool; the
/// first exception wins and is rethrown on the calling thread.
template <typename Fn>
void run_cells(std::size_t count, bool parallel, Fn&& fn) {
  if (!parallel || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 2;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < count;
           i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<std::vector<std::size_t>> inner_matrix(
    const std::vector<ClassFunctor>& chars, bool parallel) {
  const std::size_t n = chars.size();
  std::vector<std::vector<std::size_t>> matrix(
      n, std::vector<std::size_t>(n, 0));
  run_cells(n * n, parallel, [&](std::size_t cell) {
    const std::size_t i = cell / n;
    const std::size_t j = cell % n;
    matrix[i][j] = inner_product(chars[i], chars[j]).dimension;
  });
  return matrix;
}

std::vector<std::vector<std::vector<int>>> fusion_cells(
    const std::vector<MonomialTwoRep>& irreps, bool parallel) {
  const std::size_t n = irreps.size();
  std::vector<std::vector<std::vector<int>>> table(
      n, std::vector<std::vector<int>>(n));
  run_cells(n * n, parallel, [&](std::size_t cell) {
    const std::size_t i = cell / n;
    const std::size_t j = cell % n;
    table[i][j] = decompose(deligne_tensor(irreps[i], irreps[j]), irreps);
  });
  return table;
}

std::vector<std::string> irrep_names(
    const std::vector<MonomialTwoRep>& irreps) {
  std::vector<std::string> names;
  for (const MonomialTwoRep& rep : irreps) names.push_back(rep.name());
  return names;
}

ordered_json describe_json(const FiniteTwoGroup& tg) {
  ordered_json duality = ordered_json::array();
  for (int g = 0; g < tg.pi1().order(); ++g) {
    duality.push_back(
        ordered_json{{"object", g}, {"ev", tg.ev(g)}, {"coev", tg.coev(g)}});
  }
  return ordered_json{{"name", tg.name()},
                      {"pi1_order", tg.pi1().order()},
                      {"pi2_factors", tg.pi2().factors()},
                      {"pi2_order", tg.pi2().order()},
                      {"scalar_order", tg.scalar_order()},
                      {"alpha_trivial", tg.alpha_is_zero()},
                      {"duality", duality},
                      {"definition", two_group_to_json(tg)}};
}

ordered_json irreps_json(const FiniteTwoGroup& tg,
                         const std::vector<MonomialTwoRep>& irreps) {
  ordered_json list = ordered_json::array();
  for (const MonomialTwoRep& rep : irreps) {
    ClassFunctor f = two_character(rep);
    std::vector<int> dims;
    for (int g = 0; g < tg.pi1().order(); ++g) dims.push_back(f.dim(g));
    list.push_back(ordered_json{
        {"name", rep.name()}, {"lines", rep.dimension()}, {"dims", dims}});
  }
  return ordered_json{{"group", tg.name()}, {"irreps", list}};
}

ordered_json chartable_json(const FiniteTwoGroup& tg,
                            const std::vector<MonomialTwoRep>& irreps) {
  std::vector<ConjugacyClass> classes = conjugacy_classes(tg.pi1());
  ordered_json class_list = ordered_json::array();
  for (const ConjugacyClass& c : classes) class_list.push_back(c.representative);
  ordered_json rows = ordered_json::array();
  for (const MonomialTwoRep& rep : irreps) {
    ClassFunctor f = two_character(rep);
    ordered_json cells = ordered_json::array();
    for (const ConjugacyClass& c : classes) {
      const int g = c.representative;
      ordered_json characters = ordered_json::array();
      for (int i = 0; i < f.dim(g); ++i) {
        ordered_json values = ordered_json::array();
        for (int a = 0; a < tg.pi2().order(); ++a) {
          values.push_back(scalar_to_json(f.line_value(g, i, a)));
        }
        characters.push_back(std::move(values));
      }
      cells.push_back(
          ordered_json{{"dim", f.dim(g)}, {"characters", characters}});
    }
    rows.push_back(ordered_json{{"irrep", rep.name()}, {"cells", cells}});
  }
  return ordered_json{
      {"group", tg.name()}, {"classes", class_list}, {"rows", rows}};
}

ordered_json jointtable_json(const FiniteTwoGroup& tg,
                             const std::vector<MonomialTwoRep>& irreps) {
  std::vector<JointInput> inputs = canonical_joint_inputs(tg);
  ordered_json input_list = ordered_json::array();
  for (const JointInput& in : inputs) {
    input_list.push_back(ordered_json::array({in.g, in.h, in.a}));
  }
  ordered_json values = ordered_json::array();
  for (const JointInput& in : inputs) {
    ordered_json row = ordered_json::array();
    for (const MonomialTwoRep& rep : irreps) {
      row.push_back(scalar_to_json(joint_character(rep, in)));
    }
    values.push_back(std::move(row));
  }
  return ordered_json{{"group", tg.name()},
                      {"columns", irrep_names(irreps)},
                      {"inputs", input_list},
                      {"values", values}};
}

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<CheckResult> run_check(const FiniteTwoGroup& tg,
                                   const std::vector<MonomialTwoRep>& irreps,
                                   bool parallel) {
  std::vector<CheckResult> results;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    results.push_back({name, ok, detail});
  };

  {
    bool cocycle_ok =
        check_three_cocycle(tg.pi1(), tg.pi2(), tg.action(), tg.alpha_table())
            .ok();
    DualityData duality =
        solve_duality(tg.pi1(), tg.pi2(), tg.action(), tg.alpha_table());
    bool duality_ok = duality.ev == tg.duality().ev &&
                      duality.coev == tg.duality().coev;
    add("2-group data", cocycle_ok && duality_ok,
        cocycle_ok ? (duality_ok ? "cocycle and duality verified"
                                 : "duality data mismatch")
                   : "associator fails the cocycle law");
  }

  std::vector<ClassFunctor> chars;
  for (const MonomialTwoRep& rep : irreps) chars.push_back(two_character(rep));

  for (std::size_t r = 0; r < irreps.size(); ++r) {
    const MonomialTwoRep& rep = irreps[r];
    add("representation laws (" + rep.name() + ")",
        check_rep(tg, rep.dimension(), rep.sigma_table(), rep.cochain_table(),
                  rep.tau_table())
            .ok(),
        "permutation, cocycle and character laws");
    add("2-character validates (" + rep.name() + ")",
        validate_class_functor(chars[r]).ok(),
        "naturality and composition of conjugation data");
    add("Fourier round-trip (" + rep.name() + ")",
        phi_transform(psi_transform(chars[r])).equal_data(chars[r]),
        "phi(psi(chi)) = chi");

    bool joint_ok = true;
    std::string joint_detail = "modular and conjugation invariance";
    for (const JointInput& in : canonical_joint_inputs(tg)) {
      const Cyclotomic value = joint_character(rep, in);
      if (joint_character(rep, modular_T(tg, in)) != value ||
          joint_character(rep, modular_S(tg, in)) != value) {
        joint_ok = false;
        joint_detail = "modular invariance fails";
        break;
      }
      for (int k = 0; k < tg.pi1().order(); ++k) {
        if (joint_character(rep, conjugate_joint(tg, k, in)) != value) {
          joint_ok = false;
          joint_detail = "conjugation invariance fails";
          break;
        }
      }
      if (!joint_ok) break;
    }
    add("joint 2-character invariance (" + rep.name() + ")", joint_ok,
        joint_detail);

    bool duality_ok = false;
    {
      AlgebraStructure lhs =
          normalize_algebra(character_algebra(opposite(rep)));
      AlgebraStructure rhs = normalize_algebra(full_center_oracle(rep));
      duality_ok = lhs.object.lines() == rhs.object.lines() &&
                   lhs.unit == rhs.unit && lhs.mu == rhs.mu;
    }
    add("open-closed duality (" + rep.name() + ")", duality_ok,
        "character algebra of the opposite matches the full center");

    LagrangianReport lagr = check_lagrangian(character_algebra(rep));
    add("Lagrangian algebra (" + rep.name() + ")", lagr.all(),
        lagr.all() ? "all flags pass"
                   : "a flag fails; see `center " + rep.name() + "`");
  }

  {
    std::vector<std::vector<std::size_t>> gram =
        inner_matrix(chars, parallel);
    bool symmetric = true;
    for (std::size_t i = 0; i < gram.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        symmetric = symmetric && gram[i][j] == gram[j][i];
      }
    }
    add("orthogonality matrix", symmetric, "inner products are symmetric");
  }

  try {
    fusion_cells(irreps, parallel);
    add("fusion table", true, "all Deligne tensors decompose integrally");
  } catch (const validation_error& e) {
    const std::string what = e.what();
    if (what.find("degenerate") != std::string::npos) {
      add("fusion table", true,
          "skipped: fingerprints of this catalogue are degenerate");
    } else {
      add("fusion table", false, what);
    }
  }

  return results;
}

std::string check_text(const std::vector<CheckResult>& results) {
  std::string out;
  for (const CheckResult& r : results) {
    out += (r.ok ? "[ ok ] " : "[FAIL] ") + r.name + ": " + r.detail + "\n";
  }
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    if (!r.ok) ++failed;
  }
  out += failed == 0 ? "all checks passed\n"
                     : std::to_string(failed) + " check(s) failed\n";
  return out;
}

ordered_json check_json(const FiniteTwoGroup& tg,
                        const std::vector<CheckResult>& results) {
  ordered_json list = ordered_json::array();
  bool all_ok = true;
  for (const CheckResult& r : results) {
    all_ok = all_ok && r.ok;
    list.push_back(ordered_json{
        {"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
  }
  return ordered_json{{"group", tg.name()}, {"checks", list}, {"ok", all_ok}};
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> commands{
      "describe", "irreps",  "chartable", "jointtable",
      "fusion",   "inner",   "center",    "check"};
  return commands;
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    const auto& commands = known_commands();
    if (std::find(commands.begin(), commands.end(), job.command) ==
        commands.end()) {
      throw UsageError{"unknown command '" + job.command + "'"};
    }
    if (job.format != "text" && job.format != "json") {
      throw UsageError{"unknown format '" + job.format +
                       "' (expected text or json)"};
    }

    FiniteTwoGroup tg = load_group(job);
    std::string artifact;
    int status = 0;

    if (job.command == "describe") {
      artifact = job.format == "text" ? describe_text(tg)
                                      : dump_json(describe_json(tg));
    } else {
      std::vector<MonomialTwoRep> irreps = builtin_irreps(tg);
      if (job.command == "irreps") {
        artifact = job.format == "text" ? irreps_text(tg, irreps)
                                        : dump_json(irreps_json(tg, irreps));
      } else if (job.command == "chartable") {
        artifact = job.format == "text"
                       ? chartable_text(tg, irreps)
                       : dump_json(chartable_json(tg, irreps));
      } else if (job.command == "jointtable") {
        artifact = job.format == "text"
                       ? jointtable_text(tg, irreps)
                       : dump_json(jointtable_json(tg, irreps));
      } else if (job.command == "fusion") {
        auto table = fusion_cells(irreps, job.parallel);
        artifact =
            job.format == "text"
                ? fusion_text(irrep_names(irreps), table)
                : dump_json(ordered_json{{"group", tg.name()},
                                         {"irreps", irrep_names(irreps)},
                                         {"table", table}});
      } else if (job.command == "inner") {
        std::vector<ClassFunctor> chars;
        for (const MonomialTwoRep& rep : irreps) {
          chars.push_back(two_character(rep));
        }
        auto matrix = inner_matrix(chars, job.parallel);
        artifact =
            job.format == "text"
                ? inner_text(irrep_names(irreps), matrix)
                : dump_json(ordered_json{{"group", tg.name()},
                                         {"irreps", irrep_names(irreps)},
                                         {"matrix", matrix}});
      } else if (job.command == "center") {
        if (job.irrep.empty()) {
          throw UsageError{"`center` needs an irrep name argument"};
        }
        const MonomialTwoRep* found = nullptr;
        for (const MonomialTwoRep& rep : irreps) {
          if (rep.name() == job.irrep) found = &rep;
        }
        if (found == nullptr) {
          std::string names;
          for (const std::string& n : irrep_names(irreps)) {
            if (!names.empty()) names += ", ";
            names += n;
          }
          throw UsageError{"unknown irrep '" + job.irrep + "' (catalogue: " +
                           names + ")"};
        }
        AlgebraStructure algebra = character_algebra(*found);
        LagrangianReport report = check_lagrangian(algebra);
        if (job.format == "text") {
          artifact = center_text(algebra, report);
        } else {
          ordered_json j = algebra_to_json(algebra);
          j["report"] = lagrangian_to_json(report);
          artifact = dump_json(j);
        }
        if (!report.all()) status = 1;
      } else {  // check
        std::vector<CheckResult> results = run_check(tg, irreps, job.parallel);
        bool all_ok = true;
        for (const CheckResult& r : results) all_ok = all_ok && r.ok;
        artifact = job.format == "text" ? check_text(results)
                                        : dump_json(check_json(tg, results));
        if (!all_ok) status = 1;
      }
    }

    if (!job.output_path.empty()) {
      std::ofstream file(job.output_path, std::ios::binary);
      if (!file) {
        err << "cannot open output file '" << job.output_path << "'\n";
        return 2;
      }
      file << artifact;
    } else {
      out << artifact;
    }
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace twochar
