#include "qehrhart/commands.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <vector>

#include "qehrhart/document.hpp"
#include "qehrhart/knownforms.hpp"
#include "qehrhart/oracle.hpp"

namespace qehrhart {

namespace {

long cyclotomic_order_bound(const Polytope& P, const IntegralForm& lam) {
  long bound = 2;
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    VertexCone K = vertex_cone(P, v, lam);
    for (const Integer& a : K.edge_labels) bound = std::max(bound, to_long(abs(a)));
  }
  return bound;
}

std::string poles_line(const QRatFn& coeff, long bound) {
  PoleReport rep = pole_orders(coeff, bound);
  if (rep.orders.empty()) return "none";
  std::string line;
  for (std::size_t i = 0; i < rep.orders.size(); ++i) {
    if (i > 0) line += ", ";
    line += "order " + std::to_string(rep.orders[i].order) + " (multiplicity " +
            std::to_string(rep.orders[i].multiplicity) + ")";
  }
  return line;
}

OrderedJson poles_json(const ChapotonPolynomial& C, long bound) {
  OrderedJson per_coeff = OrderedJson::array();
  for (const QRatFn& c : C.poly.coefficients()) {
    PoleReport rep = pole_orders(c, bound);
    OrderedJson list = OrderedJson::array();
    for (const PoleOrder& po : rep.orders) {
      OrderedJson entry = OrderedJson::object();
      entry["order"] = po.order;
      entry["multiplicity"] = po.multiplicity;
      list.push_back(entry);
    }
    per_coeff.push_back(list);
  }
  return per_coeff;
}

void print_polynomial_text(std::ostream& out, const ChapotonPolynomial& C,
                           const ComputeOptions& opts, bool labelled, long bound,
                           bool latex) {
  std::string body = latex ? C.poly.latex() : C.poly.str();
  if (labelled) {
    out << "r=" << to_string(C.residue) << ": " << body << "\n";
  } else {
    out << body << "\n";
  }
  if (opts.show_limit) {
    QRatFn lim = evaluate_limit(C);
    out << "  value at x = 1/(1 - q): " << (latex ? lim.latex() : lim.str()) << "\n";
  }
  if (opts.show_poles) {
    for (long k = 0; k <= C.degree(); ++k) {
      out << "  poles of x^" << k
          << " coefficient: " << poles_line(C.poly.coeff(static_cast<std::size_t>(k)), bound)
          << "\n";
    }
  }
}

}  // namespace

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    PolytopeDocument doc = parse_document_file(opts.file);
    Polytope P = realize(doc);
    std::vector<ChapotonPolynomial> consts = constituents(P, doc.lambda);
    bool labelled = consts.size() > 1 || opts.show_constituents;
    long bound = opts.show_poles ? cyclotomic_order_bound(P, doc.lambda) : 2;

    if (opts.format == "json") {
      OrderedJson root = OrderedJson::object();
      if (!doc.name.empty()) root["name"] = doc.name;
      if (labelled) {
        OrderedJson list = OrderedJson::array();
        for (const auto& C : consts) list.push_back(polynomial_json(C));
        root["constituents"] = list;
        if (opts.show_limit) {
          OrderedJson lims = OrderedJson::array();
          for (const auto& C : consts) lims.push_back(qratfn_json(evaluate_limit(C)));
          root["limits"] = lims;
        }
        if (opts.show_poles) {
          OrderedJson poles = OrderedJson::array();
          for (const auto& C : consts) poles.push_back(poles_json(C, bound));
          root["poles"] = poles;
        }
      } else {
        root["polynomial"] = polynomial_json(consts[0]);
        if (opts.show_limit) root["limit"] = qratfn_json(evaluate_limit(consts[0]));
        if (opts.show_poles) root["poles"] = poles_json(consts[0], bound);
      }
      out << root.dump(2) << "\n";
      return 0;
    }

    bool latex = opts.format == "latex";
    for (const auto& C : consts) {
      print_polynomial_text(out, C, opts, labelled, bound, latex);
    }
    return 0;
  } catch (const GenericityError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    PolytopeDocument doc = parse_document_file(opts.file);
    Polytope P = realize(doc);
    std::vector<ChapotonPolynomial> consts = constituents(P, doc.lambda);
    if (opts.corrupt_coefficient >= 0) {
      std::vector<QRatFn> coeffs = consts[0].poly.coefficients();
      std::size_t k = static_cast<std::size_t>(opts.corrupt_coefficient);
      if (coeffs.size() <= k) coeffs.resize(k + 1);
      coeffs[k] += QRatFn(1);
      consts[0].poly = XPoly(std::move(coeffs));
    }
    VerifyReport rep = verify_battery(P, doc.lambda, consts, opts.t_max);
    for (const CheckResult& c : rep.checks) {
      if (c.passed) {
        out << "[pass] " << c.name << "\n";
      } else {
        out << "[FAIL] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      }
    }
    if (rep.all_passed()) {
      out << "all checks passed for dilations t <= " << opts.t_max << "\n";
      return 0;
    }
    out << "verification failed: " << rep.first_failure() << "\n";
    return 1;
  } catch (const GenericityError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

namespace {

struct ExampleRow {
  std::string label;
  long size;
  std::function<bool()> run;
};

IntegralForm ones_form(std::size_t d) { return IntegralForm{IntVector(d, Integer(1))}; }

IntegralForm ramp_form(std::size_t d) {
  IntegralForm lam;
  for (std::size_t j = 1; j <= d; ++j) lam.coeffs.push_back(Integer(j));
  return lam;
}

XPoly all_ones_cube_product(std::size_t d) {
  XPoly factor = XPoly::x() * QRatFn::q() + XPoly(1);
  return factor.pow(d);
}

std::size_t basis_index(const RatVector& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 1) return j + 1;
  }
  return 0;
}

std::vector<ExampleRow> corpus_rows() {
  std::vector<ExampleRow> rows;
  for (long d = 1; d <= 4; ++d) {
    rows.push_back({"cube d=" + std::to_string(d) + " all-ones", d, [d] {
                      Polytope P = unit_cube(static_cast<std::size_t>(d));
                      ChapotonPolynomial C = chapoton_polynomial(P, ones_form(P.ambient_dim()));
                      return C.poly == cube_closed_form(ones_form(P.ambient_dim())) &&
                             C.poly == all_ones_cube_product(static_cast<std::size_t>(d));
                    }});
    rows.push_back({"cube d=" + std::to_string(d) + " mixed form", d, [d] {
                      Polytope P = unit_cube(static_cast<std::size_t>(d));
                      IntegralForm lam = ramp_form(P.ambient_dim());
                      ChapotonPolynomial C = chapoton_polynomial(P, lam);
                      return C.poly == cube_closed_form(lam);
                    }});
  }
  for (long d = 1; d <= 4; ++d) {
    rows.push_back({"simplex d=" + std::to_string(d) + " rho product", d, [d] {
                      Polytope P = standard_simplex(static_cast<std::size_t>(d));
                      IntegralForm lam = ramp_form(P.ambient_dim());
                      for (std::size_t v = 0; v < P.vertices.size(); ++v) {
                        std::size_t j = basis_index(P.vertices[v]);
                        if (rho(P, v, lam, 0) != standard_simplex_rho(lam, j)) return false;
                      }
                      return true;
                    }});
  }
  for (long d = 1; d <= 4; ++d) {
    rows.push_back({"staircase d=" + std::to_string(d) + " closed form", d, [d] {
                      Polytope P = staircase_simplex(static_cast<std::size_t>(d));
                      IntegralForm lam = ones_form(P.ambient_dim());
                      ChapotonPolynomial C = chapoton_polynomial(P, lam);
                      if (C.poly != staircase_closed_form(static_cast<std::size_t>(d))) {
                        return false;
                      }
                      for (std::size_t v = 0; v < P.vertices.size(); ++v) {
                        if (rho(P, v, lam, 0) !=
                            staircase_rho(static_cast<std::size_t>(d), v)) {
                          return false;
                        }
                      }
                      return true;
                    }});
    rows.push_back({"staircase d=" + std::to_string(d) + " counts", d, [d] {
                      Polytope P = staircase_simplex(static_cast<std::size_t>(d));
                      ChapotonPolynomial C = chapoton_polynomial(P, ones_form(P.ambient_dim()));
                      for (long t = 0; t <= 6; ++t) {
                        LaurentPoly expected = staircase_count(static_cast<std::size_t>(d), t);
                        if (evaluate(C, t) != QRatFn(expected)) return false;
                      }
                      return true;
                    }});
  }
  for (long n = 0; n <= 5; ++n) {
    rows.push_back({"carlitz n=" + std::to_string(n), n, [n] {
                      return carlitz_check(static_cast<unsigned long>(n), 8);
                    }});
  }
  for (long n = 1; n <= 3; ++n) {
    rows.push_back({"lecturehall n=" + std::to_string(n) + " recursion", n, [n] {
                      LectureHallTable table =
                          lecture_hall_recursion_table(static_cast<unsigned long>(n), 9);
                      return table.counts.size() == 10;
                    }});
    rows.push_back({"lecturehall n=" + std::to_string(n) + " constituents", n, [n] {
                      Polytope P = lecture_hall_simplex(static_cast<unsigned long>(n));
                      IntegralForm lam = ones_form(P.ambient_dim());
                      auto consts = constituents(P, lam);
                      LectureHallFamily fam =
                          lecture_hall_family(static_cast<unsigned long>(n));
                      if (consts.size() != static_cast<std::size_t>(n)) return false;
                      for (std::size_t i = 0; i < consts.size(); ++i) {
                        if (consts[i].poly != fam.members[i]) return false;
                      }
                      XPoly shifted = XPoly::x() * QRatFn::q() + XPoly(1);
                      return fam.members.back() == fam.members[0].compose(shifted);
                    }});
    rows.push_back({"lecturehall n=" + std::to_string(n) + " dilation difference", n, [n] {
                      LectureHallFamily fam =
                          lecture_hall_family(static_cast<unsigned long>(n));
                      LectureHallFamily prev =
                          lecture_hall_family(static_cast<unsigned long>(n) - 1);
                      return q_difference_check(fam, prev);
                    }});
    rows.push_back({"lecturehall n=" + std::to_string(n) + " limit", n, [n] {
                      Polytope P = lecture_hall_simplex(static_cast<unsigned long>(n));
                      IntegralForm lam = ones_form(P.ambient_dim());
                      LectureHallFamily fam =
                          lecture_hall_family(static_cast<unsigned long>(n));
                      return lecture_hall_limit(fam) == rho(P, 0, lam, 0);
                    }});
  }
  return rows;
}

}  // namespace

int cmd_examples(const ExamplesOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<ExampleRow> rows = corpus_rows();
  std::size_t ran = 0;
  std::size_t failed = 0;
  for (const ExampleRow& row : rows) {
    if (!opts.only.empty() && row.label.rfind(opts.only, 0) != 0) continue;
    if (opts.n > 0 && row.size != opts.n) continue;
    ++ran;
    bool ok = false;
    std::string reason;
    try {
      ok = row.run();
    } catch (const std::exception& e) {
      reason = e.what();
    }
    if (ok) {
      out << "[pass] " << row.label << "\n";
    } else {
      ++failed;
      out << "[FAIL] " << row.label << (reason.empty() ? "" : " (" + reason + ")") << "\n";
    }
  }
  if (ran == 0) {
    err << "no corpus entries match the requested filter\n";
    return 1;
  }
  out << (ran - failed) << "/" << ran << " corpus checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace qehrhart
