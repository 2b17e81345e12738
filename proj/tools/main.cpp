/**
 * @file main.cpp
 * @brief Command-line front end: parse flags into a JobSpec and run it.
 *
 * Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
 */
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact 2-character computations for finite 2-groups"};
  app.require_subcommand(1);

  const std::map<std::string, std::string> descriptions{
      {"describe", "summarize a 2-group: orders, associator, duality data"},
      {"irreps", "list the catalogue of irreducible 2-representations"},
      {"chartable", "2-character table (dims and eigencharacters per class)"},
      {"jointtable", "joint 2-character values over canonical inputs"},
      {"fusion", "fusion table of the catalogue irreducibles"},
      {"inner", "matrix of inner-product dimensions"},
      {"center", "Lagrangian data and report for one irreducible"},
      {"check", "run the full invariant suite (nonzero exit on failure)"}};

  twochar::JobSpec job;
  for (const std::string& name : twochar::known_commands()) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--builtin", job.builtin,
                    "catalogue 2-group name (e.g. G1, BA(Z2), grp(S3))");
    sub->add_option("--input", job.input_path,
                    "path to a 2-group JSON definition");
    sub->add_option("--format", job.format, "output format: text or json")
        ->capture_default_str();
    sub->add_option("--output", job.output_path,
                    "write the artifact to this file instead of stdout");
    sub->add_flag("--parallel", job.parallel,
                  "compute fusion/inner cells on hardware threads");
    if (name == "center") {
      sub->add_option("irrep", job.irrep, "catalogue irrep name");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  job.command = app.get_subcommands().front()->get_name();
  return twochar::run_job(job, std::cout, std::cerr);
}
