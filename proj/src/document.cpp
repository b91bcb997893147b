#include "qehrhart/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qehrhart {

namespace {

Rational rational_field(const OrderedJson& j, const std::string& where) {
  if (!j.is_string()) {
    throw std::runtime_error("document " + where +
                             " must be a rational string, not a JSON number");
  }
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw std::runtime_error("document " + where + ": " + e.what());
  }
}

}  // namespace

PolytopeDocument parse_document_text(const std::string& text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("document parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("document must be a JSON object");

  PolytopeDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw std::runtime_error("document name must be a string");
    doc.name = j["name"].get<std::string>();
  }

  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty()) {
    throw std::runtime_error("document field 'vertices' must be a non-empty array");
  }
  std::size_t dim = 0;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || row.empty()) {
      throw std::runtime_error("document vertices must be non-empty coordinate arrays");
    }
    RatVector v;
    for (const auto& entry : row) v.push_back(rational_field(entry, "vertex coordinate"));
    if (dim == 0) dim = v.size();
    if (v.size() != dim) {
      throw std::runtime_error("document vertices must all have the same length");
    }
    doc.vertices.push_back(std::move(v));
  }

  if (!j.contains("lambda") || !j["lambda"].is_array()) {
    throw std::runtime_error("document field 'lambda' must be an array");
  }
  for (const auto& entry : j["lambda"]) {
    Rational c = rational_field(entry, "lambda entry");
    if (c.get_den() != 1) {
      throw std::runtime_error("document field 'lambda' entries must be integers");
    }
    doc.lambda.coeffs.push_back(c.get_num());
  }
  if (doc.lambda.coeffs.size() != dim) {
    throw std::runtime_error("document field 'lambda' must have one entry per coordinate");
  }

  if (j.contains("edges")) {
    if (!j["edges"].is_array()) {
      throw std::runtime_error("document field 'edges' must be an array of index pairs");
    }
    doc.has_edges = true;
    for (const auto& pair : j["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned()) {
        throw std::runtime_error("document field 'edges' must be an array of index pairs");
      }
      std::size_t a = pair[0].get<std::size_t>();
      std::size_t b = pair[1].get<std::size_t>();
      if (a >= doc.vertices.size() || b >= doc.vertices.size() || a == b) {
        throw std::runtime_error("edge validation failed: index pair [" +
                                 std::to_string(a) + ", " + std::to_string(b) +
                                 "] is out of range or degenerate");
      }
      doc.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  return doc;
}

PolytopeDocument parse_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("document file not readable: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document_text(buffer.str());
}

Polytope realize(const PolytopeDocument& doc) {
  Polytope P = build_polytope(doc.vertices);
  if (!doc.has_edges) return P;

  std::vector<std::size_t> position(doc.vertices.size());
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    auto it = std::find(P.vertices.begin(), P.vertices.end(), doc.vertices[i]);
    if (it == P.vertices.end()) {
      throw std::runtime_error("edge validation failed: point " +
                               point_str(doc.vertices[i]) + " is not a vertex");
    }
    position[i] = static_cast<std::size_t>(it - P.vertices.begin());
  }
  std::vector<std::pair<int, int>> declared;
  for (const auto& [a, b] : doc.edges) {
    int pa = static_cast<int>(position[a]);
    int pb = static_cast<int>(position[b]);
    declared.emplace_back(std::min(pa, pb), std::max(pa, pb));
  }
  std::sort(declared.begin(), declared.end());
  declared.erase(std::unique(declared.begin(), declared.end()), declared.end());
  if (declared != P.edges) {
    throw std::runtime_error(
        "edge validation failed: declared edges do not match the computed skeleton");
  }
  return P;
}

namespace {

OrderedJson laurent_json(const LaurentPoly& p) {
  OrderedJson obj = OrderedJson::object();
  if (p.is_zero()) return obj;
  for (long e = p.max_exp(); e >= p.min_exp(); --e) {
    Rational c = p.coeff(e);
    if (c != 0) obj[std::to_string(e)] = to_string(c);
  }
  return obj;
}

LaurentPoly laurent_from_json(const OrderedJson& j) {
  if (!j.is_object()) throw std::runtime_error("polynomial JSON: expected an exponent map");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    long e = std::stol(key);
    if (!value.is_string()) {
      throw std::runtime_error("polynomial JSON: coefficients must be rational strings");
    }
    p.add_term(e, parse_rational(value.get<std::string>()));
  }
  return p;
}

}  // namespace

OrderedJson qratfn_json(const QRatFn& f) {
  OrderedJson obj = OrderedJson::object();
  obj["num"] = laurent_json(f.num());
  obj["den"] = laurent_json(f.den());
  return obj;
}

QRatFn qratfn_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::runtime_error("polynomial JSON: expected {num, den}");
  }
  return QRatFn(laurent_from_json(j["num"]), laurent_from_json(j["den"]));
}

OrderedJson polynomial_json(const ChapotonPolynomial& C) {
  OrderedJson obj = OrderedJson::object();
  obj["dim"] = C.dim;
  obj["period"] = to_long(C.period);
  obj["residue"] = to_long(C.residue);
  OrderedJson lam = OrderedJson::array();
  for (const Integer& c : C.lambda.coeffs) lam.push_back(to_string(c));
  obj["lambda"] = lam;
  OrderedJson coeffs = OrderedJson::array();
  for (const QRatFn& c : C.poly.coefficients()) coeffs.push_back(qratfn_json(c));
  obj["coefficients"] = coeffs;
  return obj;
}

ChapotonPolynomial polynomial_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("period") ||
      !j.contains("residue") || !j.contains("lambda") || !j.contains("coefficients")) {
    throw std::runtime_error("polynomial JSON: missing fields");
  }
  ChapotonPolynomial C;
  C.dim = j["dim"].get<int>();
  C.period = Integer(j["period"].get<long>());
  C.residue = Integer(j["residue"].get<long>());
  for (const auto& entry : j["lambda"]) {
    if (!entry.is_string()) {
      throw std::runtime_error("polynomial JSON: lambda entries must be strings");
    }
    Rational c = parse_rational(entry.get<std::string>());
    if (c.get_den() != 1) {
      throw std::runtime_error("polynomial JSON: lambda entries must be integers");
    }
    C.lambda.coeffs.push_back(c.get_num());
  }
  std::vector<QRatFn> coeffs;
  for (const auto& entry : j["coefficients"]) coeffs.push_back(qratfn_from_json(entry));
  C.poly = XPoly(std::move(coeffs));
  return C;
}

}  // namespace qehrhart
