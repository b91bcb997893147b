#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qehrhart/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact q-weighted lattice point counts for rational polytopes"};
  app.require_subcommand(1);

  qehrhart::ComputeOptions compute_opts;
  CLI::App* compute = app.add_subcommand(
      "compute", "compute the weighted counting polynomial of a polytope document");
  compute->add_option("file", compute_opts.file, "polytope document (JSON)")->required();
  compute->add_option("--format", compute_opts.format, "output format")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  compute->add_flag("--constituents", compute_opts.show_constituents,
                    "label and print every residue class even for lattice polytopes");
  compute->add_flag("--limit", compute_opts.show_limit,
                    "also print the evaluation at x = 1/(1 - q)");
  compute->add_flag("--poles", compute_opts.show_poles,
                    "also print the cyclotomic pole orders of each coefficient");

  qehrhart::VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the full invariant battery against brute-force enumeration");
  verify->add_option("file", verify_opts.file, "polytope document (JSON)")->required();
  verify->add_option("--tmax", verify_opts.t_max, "largest dilation factor to enumerate")
      ->check(CLI::NonNegativeNumber);
  verify
      ->add_option("--corrupt-coefficient", verify_opts.corrupt_coefficient,
                   "fault injection: add 1 to this coefficient before verifying")
      ->group("");

  qehrhart::ExamplesOptions examples_opts;
  CLI::App* examples = app.add_subcommand(
      "examples", "run the builtin corpus of closed-form identities");
  examples->add_option("--only", examples_opts.only,
                       "prefix filter (cube, simplex, staircase, carlitz, lecturehall)");
  examples->add_option("--n", examples_opts.n, "restrict to one dimension or parts count");

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) return qehrhart::cmd_compute(compute_opts, std::cout, std::cerr);
  if (verify->parsed()) return qehrhart::cmd_verify(verify_opts, std::cout, std::cerr);
  return qehrhart::cmd_examples(examples_opts, std::cout, std::cerr);
}
