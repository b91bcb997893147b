#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qehrhart/chapoton.hpp"
#include "qehrhart/polytope.hpp"

namespace qehrhart {

using OrderedJson = nlohmann::ordered_json;

// On-disk description of a polytope with a weighting form. Coordinates and
// form entries are strings ("p" or "p/q"); JSON numbers are rejected so no
// value ever passes through floating point.
struct PolytopeDocument {
  std::string name;
  std::vector<RatVector> vertices;
  IntegralForm lambda;
  bool has_edges = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Both throw std::runtime_error with a "document ..." message on malformed
// input.
PolytopeDocument parse_document_text(const std::string& text);
PolytopeDocument parse_document_file(const std::string& path);

// Builds the polytope and, when the document declares an edge list, checks it
// against the computed skeleton; any discrepancy throws std::runtime_error
// with an "edge validation failed" message.
Polytope realize(const PolytopeDocument& doc);

// {"num": {"exp": "coeff", ...}, "den": {...}}, exponents descending,
// coefficients as rational strings.
OrderedJson qratfn_json(const QRatFn& f);
QRatFn qratfn_from_json(const OrderedJson& j);

// Meta fields plus the coefficient list (index = power of x).
OrderedJson polynomial_json(const ChapotonPolynomial& C);
ChapotonPolynomial polynomial_from_json(const OrderedJson& j);

}  // namespace qehrhart
