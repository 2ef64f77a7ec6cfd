#pragma once

#include <string>

#include <json.hpp>

#include "ay/hardy.hpp"
#include "ay/hereditary.hpp"
#include "ay/ttoeplitz.hpp"

namespace ay {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const ComplexVector& v);

Json symbol_to_json(const LaurentSymbol& s);
LaurentSymbol symbol_from_json(const Json& j);

Json tuple_to_json(const OperatorTuple& t);
OperatorTuple tuple_from_json(const Json& j);

Json hereditary_to_json(const HereditaryPolynomial& h);
HereditaryPolynomial hereditary_from_json(const Json& j);

/// {"zeros": [[re, im], ...], "unimodular": [re, im]}; a bare array of zeros is
/// accepted as well.
Json blaschke_to_json(const BlaschkeProduct& u);
BlaschkeProduct blaschke_from_json(const Json& j);

/// Throws IoError when the file cannot be read and ParseError on bad JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ay
