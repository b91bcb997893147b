#pragma once

#include <ostream>
#include <string>

namespace qehrhart {

// Exit codes shared by all commands: 0 success, 1 bad input or failed
// verification, 2 form not generic/positive for the polytope.

struct ComputeOptions {
  std::string file;
  std::string format = "text";  // text | latex | json
  bool show_constituents = false;
  bool show_limit = false;
  bool show_poles = false;
};

struct VerifyOptions {
  std::string file;
  long t_max = 5;
  // When >= 0, adds 1 to this coefficient of the first constituent before
  // verifying; a deliberate fault injection used as a negative control.
  long corrupt_coefficient = -1;
};

struct ExamplesOptions {
  std::string only;  // prefix filter: cube, simplex, staircase, carlitz, lecturehall
  long n = 0;        // restrict to one dimension / parts count; 0 = all
};

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_examples(const ExamplesOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qehrhart
