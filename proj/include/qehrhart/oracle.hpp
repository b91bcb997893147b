#pragma once

#include <string>
#include <vector>

#include "qehrhart/chapoton.hpp"
#include "qehrhart/laurent.hpp"
#include "qehrhart/polytope.hpp"

namespace qehrhart {

struct WeightedCount {
  long t = 0;
  LaurentPoly sum;        // sum of q^lambda(m) over counted points
  Integer point_count = 0;
};

// Ground truth by exhaustive enumeration: every integer point of the bounding
// box of tP is tested for membership (closed hull or relative interior) with
// an exact LP. Deliberately independent of the cone machinery.
WeightedCount oracle_count(const Polytope& P, const IntegralForm& lam, long t,
                           bool interior = false);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when failed
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::string first_failure() const;
};

// Runs the full structural battery against the supplied constituents: degree,
// argmax vertex, leading coefficient, constant term, pole orders, limit value,
// closed and interior enumeration, double reciprocity, q = 1 counts.
VerifyReport verify_battery(const Polytope& P, const IntegralForm& lam,
                            const std::vector<ChapotonPolynomial>& consts, long t_max);

// Convenience: builds the constituents and runs the battery.
VerifyReport verify_polytope(const Polytope& P, const IntegralForm& lam, long t_max);

}  // namespace qehrhart
