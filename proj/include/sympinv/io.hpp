#pragma once

// JSON serialization of fields, scalars, polynomials, matrices, symplectic
// elements, witnesses and reports.

#include <string>

#include <json.hpp>

#include "sympinv/classify.hpp"
#include "sympinv/symplectic.hpp"

namespace sympinv {

using Json = nlohmann::ordered_json;

Json to_json(const Field& f);
Field field_from_json(const Json& j);

/// Integer over GF(p), "n/d" string over Q.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j);

/// Array of scalar strings, lowest degree first.
Json to_json(const Poly& p);
Poly poly_from_json(const Field& f, const Json& j);

/// {"field": ..., "rows": [[...], ...]}.
Json to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

/// {"space": {"dim": 2n, "gram": matrix or "standard"}, "matrix": matrix}.
Json to_json(const SymplecticElement& e);
/// Throws ParseError on malformed input and NotSymplectic when the matrix
/// does not preserve the form.
SymplecticElement element_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Field& f, const Json& j);
Json to_json(const Decision& d);
Json to_json(const ClassificationReport& r);

Json wall_report(const SymplecticElement& phi);

/// Parses text, mapping JSON syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace sympinv
